//! Edge-transitive embeddings of `K_n` in surfaces with boundary.
//!
//! An edge of `K_n` in such a map is either interior (four flags, `r2`
//! swapping the sides) or lies on the boundary (two flags fixed by `r2`).
//! Side labels at one end are arbitrary, so `r0` can pair sides straight
//! across; all the freedom then sits in `r1`, which is any involution on
//! the flags at each vertex making that vertex a single `<r1, r2>`-orbit.

use std::collections::BTreeMap;

use super::CensusError;
use crate::classify::{et_class, involutions, is_edge_transitive, EtClass};
use crate::flagmap::{orbits, Certificate, FlagMap};

/// Boundary embeddings of `K_2` and `K_3`, one per isomorphism class,
/// sorted by certificate.
pub fn boundary_census(n: usize) -> Result<Vec<(FlagMap, EtClass)>, CensusError> {
    if !(2..=3).contains(&n) {
        return Err(CensusError::Unsupported(format!(
            "the boundary census covers n = 2 and 3 only, got {n}"
        )));
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut found: BTreeMap<Certificate, FlagMap> = BTreeMap::new();
    for interior in 0u32..1 << edges.len() {
        let mut r0 = Vec::new();
        let mut r2 = Vec::new();
        let mut at: Vec<Vec<u32>> = vec![Vec::new(); n];
        for (b, &(u, v)) in edges.iter().enumerate() {
            let base = r0.len() as u32;
            if interior >> b & 1 == 1 {
                // (u,v,+), (u,v,-), (v,u,+), (v,u,-)
                r0.extend([base + 2, base + 3, base, base + 1]);
                r2.extend([base + 1, base, base + 3, base + 2]);
                at[u].extend([base, base + 1]);
                at[v].extend([base + 2, base + 3]);
            } else {
                r0.extend([base + 1, base]);
                r2.extend([base, base + 1]);
                at[u].push(base);
                at[v].push(base + 1);
            }
        }
        let local: Vec<Vec<Vec<u32>>> = at
            .iter()
            .map(|flags| {
                involutions(flags.len())
                    .into_iter()
                    .filter(|inv| vertex_is_connected(flags, inv, &r2))
                    .collect()
            })
            .collect();
        let mut choice = vec![0usize; n];
        'outer: loop {
            let mut r1 = vec![0u32; r0.len()];
            for (u, flags) in at.iter().enumerate() {
                let inv = &local[u][choice[u]];
                for (i, &x) in flags.iter().enumerate() {
                    r1[x as usize] = flags[inv[i] as usize];
                }
            }
            if let Ok(m) = FlagMap::new(r0.clone(), r1, r2.clone()) {
                if m.has_boundary() && is_edge_transitive(&m) {
                    found.entry(m.canonical_form()).or_insert(m);
                }
            }
            for u in 0..n {
                choice[u] += 1;
                if choice[u] < local[u].len() {
                    continue 'outer;
                }
                choice[u] = 0;
            }
            break;
        }
    }
    Ok(found
        .into_values()
        .map(|m| {
            let c = et_class(&m);
            (m, c)
        })
        .collect())
}

/// Whether `inv` (on local indices) and `r2` make `flags` one orbit.
fn vertex_is_connected(flags: &[u32], inv: &[u32], r2: &[u32]) -> bool {
    let k = flags.len();
    let index = |x: u32| flags.iter().position(|&y| y == x).unwrap() as u32;
    let r2_local: Vec<u32> = flags.iter().map(|&x| index(r2[x as usize])).collect();
    orbits(k, &[inv, &r2_local]).count == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn classes(n: usize) -> Vec<EtClass> {
        let mut c: Vec<EtClass> = boundary_census(n)
            .unwrap()
            .into_iter()
            .map(|(_, c)| c)
            .collect();
        c.sort();
        c
    }

    #[test]
    fn three_maps_each() {
        assert_eq!(classes(2), vec![EtClass::One, EtClass::One, EtClass::Two]);
        assert_eq!(
            classes(3),
            vec![EtClass::One, EtClass::TwoStar, EtClass::TwoP]
        );
        for n in [2, 3] {
            for (m, _) in boundary_census(n).unwrap() {
                assert!(m.is_complete(n));
                assert!(m.has_boundary());
            }
        }
        assert!(matches!(
            boundary_census(4),
            Err(CensusError::Unsupported(_))
        ));
    }
}
