//! Builders for the map families: Cayley maps over finite fields, Biggs
//! and James maps with their censuses, quotients by free automorphism
//! groups, and the regular pair on `K6`.

pub mod formulas;
mod solids;

pub use solids::{
    antipodal_automorphism, cube, hexagon, icosahedron, k6_regular_pair, rotation_from_faces,
};

use std::collections::{BTreeMap, HashMap, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::classify::{quotient_by_group, AutGroup};
use crate::field::{gcd, Field, FieldElement, FieldError};
use crate::flagmap::{Certificate, FlagMap, MapError, OrientedMap};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("{c} is not a primitive element of GF({n})")]
    NotPrimitive { n: u32, c: u32 },
    #[error("bad generating set: {0}")]
    BadGeneratingSet(String),
    #[error("James maps need a prime power n > 3 with n = 3 mod 4, got {0}")]
    BadCongruence(u64),
    #[error("j = {j} is not an odd residue mod {modulus} other than 1")]
    BadJ { j: i64, modulus: u64 },
    #[error("element {0} of the subgroup fixes a flag")]
    NotFree(usize),
    #[error("element {0} of the subgroup is not an automorphism")]
    NotAutomorphism(usize),
    #[error("the given automorphisms are not closed under composition")]
    NotSubgroup,
    #[error("no closed formula for {0}")]
    NoFormula(String),
    #[error("census disagrees with the isomorphism criterion: {0}")]
    TheoremMismatch(String),
    #[error(transparent)]
    Field(FieldError),
    #[error(transparent)]
    Map(#[from] MapError),
}

impl From<FieldError> for ConstructError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::NotPrimePower(n) => ConstructError::NotPrimePower(n),
            e => ConstructError::Field(e),
        }
    }
}

fn field_of_order(n: u64) -> Result<Field, ConstructError> {
    if n < 2 {
        return Err(ConstructError::NotPrimePower(n));
    }
    Ok(Field::of_order(n)?)
}

/// Cayley map of the additive group of `fs`: vertex `g` sees its
/// neighbours in the order `g + x_0, g + x_1, ...`.
pub fn cayley_map(fs: &Field, ordering: &[FieldElement]) -> Result<OrientedMap, ConstructError> {
    let n = fs.order() as usize;
    if ordering.len() != n - 1 {
        return Err(ConstructError::BadGeneratingSet(format!(
            "expected {} elements, got {}",
            n - 1,
            ordering.len()
        )));
    }
    let mut seen = vec![false; n];
    for &x in ordering {
        let i = x.index() as usize;
        if x.is_zero() || i >= n || seen[i] {
            return Err(ConstructError::BadGeneratingSet(format!(
                "{x} is zero, out of range or repeated"
            )));
        }
        seen[i] = true;
    }
    let rotation = fs
        .elements()
        .map(|g| ordering.iter().map(|&x| fs.add(g, x).index()).collect())
        .collect();
    Ok(OrientedMap::orientable(rotation)?)
}

fn primitive(fs: &Field, c: u32) -> Result<FieldElement, ConstructError> {
    let el = fs.element(c as u64)?;
    if fs.is_primitive(el).unwrap_or(false) {
        Ok(el)
    } else {
        Err(ConstructError::NotPrimitive { n: fs.order(), c })
    }
}

/// `M_n(c)`: generators in the order `1, c, c^2, ..., c^(n-2)`.
pub fn biggs_map(n: u64, c: u32) -> Result<OrientedMap, ConstructError> {
    let fs = field_of_order(n)?;
    let c = primitive(&fs, c)?;
    let ordering: Vec<FieldElement> = (0..n - 1).map(|k| fs.pow(c, k)).collect();
    cayley_map(&fs, &ordering)
}

/// Checks the James-map parameters and returns `j` reduced mod `n - 1`.
pub fn james_parameters(n: u64, j: i64) -> Result<u64, ConstructError> {
    let Some((_, _)) = crate::field::prime_power(n) else {
        return Err(ConstructError::NotPrimePower(n));
    };
    if n <= 3 || n % 4 != 3 {
        return Err(ConstructError::BadCongruence(n));
    }
    let m = n - 1;
    let jr = j.rem_euclid(m as i64) as u64;
    if jr.is_multiple_of(2) || jr == 1 {
        return Err(ConstructError::BadJ { j, modulus: m });
    }
    Ok(jr)
}

/// `M_n(c, j)`: generators in the order
/// `1, c^j, c^2, c^(j+2), ..., c^(n-3), c^(j+n-3)`.
pub fn james_map(n: u64, c: u32, j: i64) -> Result<OrientedMap, ConstructError> {
    let j = james_parameters(n, j)?;
    let fs = field_of_order(n)?;
    let c = primitive(&fs, c)?;
    let ordering: Vec<FieldElement> = (0..n - 1)
        .step_by(2)
        .flat_map(|k| [fs.pow(c, k), fs.pow(c, (k + j) % (n - 1))])
        .collect();
    cayley_map(&fs, &ordering)
}

/// A census member with the parameters that built it.
#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub c: u32,
    /// `None` for Biggs maps.
    pub j: Option<u64>,
    pub map: OrientedMap,
}

/// Groups `keys` by certificate and checks the grouping agrees with the
/// equivalence given by `classes`.
fn check_partition<K: Ord + std::hash::Hash + std::fmt::Debug>(
    certs: &[Certificate],
    classes: &[K],
) -> Result<(), ConstructError> {
    let mut by_cert: HashMap<&Certificate, HashSet<&K>> = HashMap::new();
    let mut by_class: BTreeMap<&K, HashSet<&Certificate>> = BTreeMap::new();
    for (cert, class) in certs.iter().zip(classes) {
        by_cert.entry(cert).or_default().insert(class);
        by_class.entry(class).or_default().insert(cert);
    }
    if let Some(ks) = by_cert.values().find(|ks| ks.len() > 1) {
        return Err(ConstructError::TheoremMismatch(format!(
            "inequivalent parameters {ks:?} give isomorphic oriented maps"
        )));
    }
    if let Some((k, _)) = by_class.iter().find(|(_, cs)| cs.len() > 1) {
        return Err(ConstructError::TheoremMismatch(format!(
            "equivalent parameters {k:?} give non-isomorphic oriented maps"
        )));
    }
    Ok(())
}

fn sort_entries(mut entries: Vec<CensusEntry>) -> Vec<CensusEntry> {
    let mut keyed: Vec<((Certificate, Certificate), CensusEntry)> = entries
        .par_drain(..)
        .map(|e| {
            let oriented = e
                .map
                .oriented_certificate()
                .expect("census maps are orientable");
            ((e.map.to_flag_map().canonical_form(), oriented), e)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, e)| e).collect()
}

/// Index of the Galois orbit containing each primitive element.
fn galois_class(
    fs: &Field,
    prims: &[FieldElement],
) -> HashMap<FieldElement, (usize, FieldElement)> {
    let mut class = HashMap::new();
    for (i, orbit) in fs.galois_orbits(prims).into_iter().enumerate() {
        let least = *orbit.iter().min().unwrap();
        for a in orbit {
            class.insert(a, (i, least));
        }
    }
    class
}

/// One Biggs map per Galois orbit of primitive elements, represented by
/// the orbit's least element. Every primitive element is built and the
/// oriented-isomorphism classes are checked against the Galois orbits.
pub fn biggs_census(n: u64) -> Result<Vec<CensusEntry>, ConstructError> {
    let fs = field_of_order(n)?;
    let prims = fs.primitive_elements();
    let class = galois_class(&fs, &prims);
    let maps: Vec<OrientedMap> = prims
        .par_iter()
        .map(|c| biggs_map(n, c.index()))
        .collect::<Result<_, _>>()?;
    let certs: Vec<Certificate> = maps
        .par_iter()
        .map(|m| m.oriented_certificate())
        .collect::<Result<_, _>>()?;
    let keys: Vec<usize> = prims.iter().map(|c| class[c].0).collect();
    check_partition(&certs, &keys)?;
    let entries = prims
        .iter()
        .zip(maps)
        .filter(|(c, _)| class[c].1 == **c)
        .map(|(c, map)| CensusEntry {
            c: c.index(),
            j: None,
            map,
        })
        .collect();
    Ok(sort_entries(entries))
}

/// One James map per oriented-isomorphism class: `c` up to Galois
/// conjugacy, `j` up to `j <-> 2 - j`. All pairs are built and the
/// classes are checked against that criterion.
pub fn james_census(n: u64) -> Result<Vec<CensusEntry>, ConstructError> {
    james_parameters(n, 3).map_err(|e| match e {
        ConstructError::BadJ { .. } => ConstructError::BadCongruence(n),
        e => e,
    })?;
    let fs = field_of_order(n)?;
    let m = n - 1;
    let prims = fs.primitive_elements();
    let class = galois_class(&fs, &prims);
    let js: Vec<u64> = (3..m).step_by(2).collect();
    let pairs: Vec<(FieldElement, u64)> = prims
        .iter()
        .flat_map(|&c| js.iter().map(move |&j| (c, j)))
        .collect();
    let maps: Vec<OrientedMap> = pairs
        .par_iter()
        .map(|&(c, j)| james_map(n, c.index(), j as i64))
        .collect::<Result<_, _>>()?;
    let certs: Vec<Certificate> = maps
        .par_iter()
        .map(|m| m.oriented_certificate())
        .collect::<Result<_, _>>()?;
    let least_j = |j: u64| j.min((2 + m - j) % m);
    let keys: Vec<(usize, u64)> = pairs
        .iter()
        .map(|&(c, j)| (class[&c].0, least_j(j)))
        .collect();
    check_partition(&certs, &keys)?;
    let entries = pairs
        .iter()
        .zip(maps)
        .filter(|((c, j), _)| class[c].1 == *c && least_j(*j) == *j)
        .map(|(&(c, j), map)| CensusEntry {
            c: c.index(),
            j: Some(j),
            map,
        })
        .collect();
    Ok(sort_entries(entries))
}

/// Expected census sizes: `phi(n-1)/e` Biggs maps and
/// `(n-3) phi(n-1)/4e` James maps.
pub fn expected_biggs_count(n: u64) -> Option<u64> {
    let (_, e) = crate::field::prime_power(n)?;
    Some(crate::field::totient(n - 1) / e as u64)
}

pub fn expected_james_count(n: u64) -> Option<u64> {
    let (_, e) = crate::field::prime_power(n)?;
    if n <= 3 || n % 4 != 3 {
        return None;
    }
    Some((n - 3) * crate::field::totient(n - 1) / (4 * e as u64))
}

/// Quotient of `m` by a group of automorphisms acting freely on flags.
pub fn quotient_by_free_automorphisms(
    m: &FlagMap,
    subgroup: &[Vec<u32>],
) -> Result<FlagMap, ConstructError> {
    let n = m.n_flags();
    // Automorphisms of a connected map act freely, so a fixed flag already
    // rules an element out; it is reported first as the more specific fault.
    for (k, g) in subgroup.iter().enumerate() {
        let identity = g.iter().enumerate().all(|(x, &y)| x == y as usize);
        if !identity && g.iter().enumerate().any(|(x, &y)| x == y as usize) {
            return Err(ConstructError::NotFree(k));
        }
    }
    for (k, g) in subgroup.iter().enumerate() {
        let is_perm = g.len() == n && {
            let mut seen = vec![false; n];
            g.iter()
                .all(|&y| (y as usize) < n && !std::mem::replace(&mut seen[y as usize], true))
        };
        let commutes = is_perm
            && (0..3).all(|i| {
                let r = m.r(i);
                (0..n).all(|x| g[r[x] as usize] == r[g[x] as usize])
            });
        if !commutes {
            return Err(ConstructError::NotAutomorphism(k));
        }
    }
    let set: HashSet<&[u32]> = subgroup.iter().map(|g| g.as_slice()).collect();
    let closed = !subgroup.is_empty()
        && subgroup.iter().all(|g| {
            subgroup.iter().all(|h| {
                let gh: Vec<u32> = g.iter().map(|&x| h[x as usize]).collect();
                set.contains(gh.as_slice())
            })
        });
    if !closed {
        return Err(ConstructError::NotSubgroup);
    }
    Ok(quotient_by_group(
        m,
        &AutGroup::from_elements(subgroup.to_vec()),
    ))
}

/// `gcd` on residues, with `gcd(m, 0) = m`.
pub(crate) fn gcd_mod(m: u64, x: i64) -> u64 {
    gcd(m, x.rem_euclid(m as i64) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{automorphisms, et_class, transitivity, EtClass};

    fn el(fs: &Field, i: u64) -> FieldElement {
        fs.element(i).unwrap()
    }

    #[test]
    fn cayley_map_examples() {
        let f4 = Field::of_order(4).unwrap();
        let c = fs_prim(&f4);
        let tet = cayley_map(&f4, &[FieldElement::ONE, c, f4.mul(c, c)]).unwrap();
        let t = tet.to_flag_map();
        assert_eq!(t.euler_characteristic(), 2);
        assert_eq!(automorphisms(&t).order(), 24);

        let f5 = Field::of_order(5).unwrap();
        let order = |xs: [u64; 4]| xs.map(|i| el(&f5, i));
        let m52 = cayley_map(&f5, &order([1, 2, 4, 3])).unwrap();
        assert!(m52.oriented_isomorphic(&biggs_map(5, 2).unwrap()).unwrap());
        let plain = cayley_map(&f5, &order([1, 2, 3, 4])).unwrap().to_flag_map();
        assert!(!transitivity(&plain).arcs);

        assert!(matches!(
            cayley_map(&f5, &order([1, 2, 2, 3])),
            Err(ConstructError::BadGeneratingSet(_))
        ));
        assert!(matches!(
            cayley_map(&f5, &[el(&f5, 1)]),
            Err(ConstructError::BadGeneratingSet(_))
        ));
    }

    fn fs_prim(fs: &Field) -> FieldElement {
        fs.primitive_elements()[0]
    }

    #[test]
    fn biggs_examples() {
        let m73 = biggs_map(7, 3).unwrap().to_flag_map();
        assert_eq!(m73.genus_or_crosscaps(), Ok(1));
        assert_eq!(m73.multisets().unwrap().face_sizes, vec![3; 14]);
        let m52 = biggs_map(5, 2).unwrap().to_flag_map();
        let ms = m52.multisets().unwrap();
        assert_eq!(m52.genus_or_crosscaps(), Ok(1));
        assert_eq!(ms.face_sizes, vec![4; 5]);
        assert_eq!(ms.petrie_lengths, vec![10; 2]);
        assert_eq!(
            biggs_map(6, 2).unwrap_err(),
            ConstructError::NotPrimePower(6)
        );
        assert_eq!(
            biggs_map(7, 2).unwrap_err(),
            ConstructError::NotPrimitive { n: 7, c: 2 }
        );
    }

    #[test]
    fn james_examples() {
        let m = james_map(7, 5, 5).unwrap().to_flag_map();
        let c = m.counts();
        assert_eq!((c.vertices, c.edges, c.faces), (7, 21, 10));
        assert_eq!(m.genus_or_crosscaps(), Ok(3));
        assert_eq!(automorphisms(&m).order(), 21);
        assert_eq!(et_class(&m), EtClass::FiveStar);

        let m = james_map(11, 2, 3).unwrap().to_flag_map();
        assert_eq!(m.genus_or_crosscaps(), Ok(12));
        let m = james_map(11, 2, 5).unwrap().to_flag_map();
        assert_eq!(m.genus_or_crosscaps(), Ok(15));

        assert_eq!(
            james_map(9, 2, 3).unwrap_err(),
            ConstructError::BadCongruence(9)
        );
        assert_eq!(
            james_map(3, 2, 3).unwrap_err(),
            ConstructError::BadCongruence(3)
        );
        assert_eq!(
            james_map(7, 3, 4).unwrap_err(),
            ConstructError::BadJ { j: 4, modulus: 6 }
        );
        assert_eq!(
            james_map(7, 3, 7).unwrap_err(),
            ConstructError::BadJ { j: 7, modulus: 6 }
        );
    }

    #[test]
    fn census_sizes() {
        for (n, k) in [(2, 1), (3, 1), (4, 1), (5, 2), (9, 2), (8, 2)] {
            assert_eq!(biggs_census(n).unwrap().len(), k, "n = {n}");
            assert_eq!(expected_biggs_count(n), Some(k as u64));
        }
        let j7 = james_census(7).unwrap();
        assert_eq!(j7.len(), 2);
        let reps: Vec<(u32, Option<u64>)> = j7.iter().map(|e| (e.c, e.j)).collect();
        assert!(reps.contains(&(3, Some(3))) && reps.contains(&(5, Some(3))));
        let m755 = james_map(7, 5, 5).unwrap();
        assert!(j7.iter().any(|e| e.map.oriented_isomorphic(&m755).unwrap()));
        assert_eq!(james_census(11).unwrap().len(), 8);
        assert_eq!(
            james_census(9).unwrap_err(),
            ConstructError::BadCongruence(9)
        );
        assert_eq!(
            biggs_census(10).unwrap_err(),
            ConstructError::NotPrimePower(10)
        );
    }

    #[test]
    fn mirrors() {
        let f7 = Field::of_order(7).unwrap();
        for c in f7.primitive_elements() {
            let inv = f7.inv(c).unwrap().index();
            let m = biggs_map(7, c.index()).unwrap();
            assert!(m
                .mirror()
                .unwrap()
                .oriented_isomorphic(&biggs_map(7, inv).unwrap())
                .unwrap());
            for j in [3i64, 5] {
                let jm = james_map(7, c.index(), j).unwrap();
                let other = james_map(7, inv, 2 - j).unwrap();
                assert!(jm.mirror().unwrap().oriented_isomorphic(&other).unwrap());
            }
        }
        let m755 = james_map(7, 5, 5).unwrap();
        assert!(m755
            .mirror()
            .unwrap()
            .oriented_isomorphic(&james_map(7, 3, 3).unwrap())
            .unwrap());
    }

    #[test]
    fn free_quotient_errors() {
        let m = biggs_map(5, 2).unwrap().to_flag_map();
        let n = m.n_flags();
        let id: Vec<u32> = (0..n as u32).collect();
        let r1 = m.r(1).to_vec();
        assert_eq!(
            quotient_by_free_automorphisms(&m, &[id.clone(), r1]),
            Err(ConstructError::NotAutomorphism(1))
        );
        let aut = automorphisms(&m);
        let g = aut.elements()[1].clone();
        assert_eq!(
            quotient_by_free_automorphisms(&m, &[id.clone(), g]),
            Err(ConstructError::NotSubgroup)
        );
        assert_eq!(
            quotient_by_free_automorphisms(&m, &[]),
            Err(ConstructError::NotSubgroup)
        );
        let mut swap = id.clone();
        swap.swap(0, 1);
        assert_eq!(
            quotient_by_free_automorphisms(&m, &[id.clone(), swap]),
            Err(ConstructError::NotFree(1))
        );
        let q = quotient_by_free_automorphisms(&m, &[id]).unwrap();
        assert_eq!(q, m);
    }
}
