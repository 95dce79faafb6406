//! The one-edge premaps: every connected flag system with a single
//! `<r0, r2>`-orbit, found by exhaustive search and labeled by class.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use super::EtClass;
use crate::flagmap::{orbits, Certificate, FlagMap};

/// All involutions (including the identity) on `0..k`.
pub(crate) fn involutions(k: usize) -> Vec<Vec<u32>> {
    fn rec(p: &mut Vec<u32>, i: usize, out: &mut Vec<Vec<u32>>) {
        let k = p.len();
        if i == k {
            out.push(p.clone());
            return;
        }
        if p[i] != u32::MAX {
            return rec(p, i + 1, out);
        }
        p[i] = i as u32;
        rec(p, i + 1, out);
        for j in i + 1..k {
            if p[j] == u32::MAX {
                p[i] = j as u32;
                p[j] = i as u32;
                rec(p, i + 1, out);
                p[j] = u32::MAX;
            }
        }
        p[i] = u32::MAX;
    }
    let mut out = Vec::new();
    rec(&mut vec![u32::MAX; k], 0, &mut out);
    out
}

/// Every one-edge premap on at most four flags, one per isomorphism class,
/// ordered by certificate.
pub fn one_edge_maps() -> Vec<FlagMap> {
    let mut found: BTreeMap<Certificate, FlagMap> = BTreeMap::new();
    for k in 1..=4 {
        let invs = involutions(k);
        for r0 in &invs {
            for r2 in &invs {
                if orbits(k, &[r0, r2]).count != 1 {
                    continue;
                }
                for r1 in &invs {
                    if let Ok(m) = FlagMap::new(r0.clone(), r1.clone(), r2.clone()) {
                        found.entry(m.canonical_form()).or_insert(m);
                    }
                }
            }
        }
    }
    found.into_values().collect()
}

fn fixed_points(g: &[u32]) -> usize {
    g.iter()
        .enumerate()
        .filter(|&(x, &y)| x == y as usize)
        .count()
}

/// Labels a one-edge premap from its invariants: the flag count, the
/// number of flags each `r_i` fixes, and the vertex and face counts.
pub fn classify_premap(q: &FlagMap) -> Option<EtClass> {
    use EtClass::*;
    let c = q.counts();
    if c.edges != 1 {
        return None;
    }
    let fix = [
        fixed_points(q.r(0)),
        fixed_points(q.r(1)),
        fixed_points(q.r(2)),
    ];
    let class = match (q.n_flags(), fix, c.vertices, c.faces) {
        (1, _, _, _) => One,
        // r1 trivial.
        (2, [0, 2, 2], 2, 1) => Two,
        (2, [2, 2, 0], 1, 2) => TwoStar,
        (2, [0, 2, 0], 1, 1) => TwoP,
        // r1 swaps the two flags.
        (2, [0, 0, 2], 1, 1) => TwoEx,
        (2, [2, 0, 0], 1, 1) => TwoStarEx,
        (2, [0, 0, 0], 1, 1) => TwoPEx,
        (4, [0, 4, 0], 2, 2) => Three,
        // r1 a transposition.
        (4, [0, 2, 0], 2, 1) => Four,
        (4, [0, 2, 0], 1, 2) => FourStar,
        (4, [0, 2, 0], 1, 1) => FourP,
        // r1 fixed-point-free, equal to r2, r0 or r0 r2.
        (4, [0, 0, 0], 2, 1) => Five,
        (4, [0, 0, 0], 1, 2) => FiveStar,
        (4, [0, 0, 0], 1, 1) => FiveP,
        _ => return None,
    };
    Some(class)
}

/// The fourteen basic premaps, in class order.
pub fn basic_premap_catalog() -> Vec<(EtClass, FlagMap)> {
    let mut entries: Vec<(EtClass, FlagMap)> = one_edge_maps()
        .into_iter()
        .map(|m| {
            let c = classify_premap(&m).expect("decision table covers every one-edge premap");
            (c, m)
        })
        .collect();
    entries.sort_by_key(|(c, _)| *c);
    entries
}

fn catalog_index() -> &'static HashMap<Certificate, EtClass> {
    static INDEX: OnceLock<HashMap<Certificate, EtClass>> = OnceLock::new();
    INDEX.get_or_init(|| {
        basic_premap_catalog()
            .into_iter()
            .map(|(c, m)| (m.canonical_form(), c))
            .collect()
    })
}

/// Catalog label of a premap isomorphic to `q`.
pub(crate) fn lookup(q: &FlagMap) -> Option<EtClass> {
    catalog_index().get(&q.canonical_form()).copied()
}
