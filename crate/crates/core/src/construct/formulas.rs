//! Closed-form invariants of the constructed families, for cross-checking
//! against values computed from flag orbits.

use serde::Serialize;

use super::{gcd_mod, james_parameters, ConstructError};
use crate::classify::EtClass;
use crate::field::prime_power;

/// `a / b`, asserting exactness.
fn exact(a: i64, b: i64) -> i64 {
    assert!(b != 0 && a % b == 0, "{a} / {b} is not an integer");
    a / b
}

fn characteristic_of(n: u64) -> Result<u64, ConstructError> {
    prime_power(n)
        .map(|(p, _)| p)
        .ok_or(ConstructError::NotPrimePower(n))
}

/// Type `{m, n-1}_{2p}` of the Biggs maps `M_n(c)`: face size, vertex
/// degree and Petrie length. The small cases are `{2,1}_2`, `{3,2}_6` and
/// `{3,3}_4`.
pub fn biggs_type(n: u64) -> Result<(u64, u64, u64), ConstructError> {
    let p = characteristic_of(n)?;
    Ok(match n {
        2 => (2, 1, 2),
        3 => (3, 2, 6),
        4 => (3, 3, 4),
        _ if n % 4 == 3 => ((n - 1) / 2, n - 1, 2 * p),
        _ => (n - 1, n - 1, 2 * p),
    })
}

pub fn biggs_genus(n: u64) -> Result<i64, ConstructError> {
    characteristic_of(n)?;
    let n = n as i64;
    Ok(if n <= 4 {
        0
    } else if n % 4 == 3 {
        exact(n * n - 7 * n + 4, 4)
    } else {
        exact((n - 1) * (n - 4), 4)
    })
}

/// `chi = n(1 - (n-1)/2 + (n-1)/2p)` for the Petrie dual of a Biggs map,
/// using the Petrie length of the type (so `2p` is 6 and 4 for `n` = 3, 4).
pub fn biggs_petrie_chi(n: u64) -> Result<i64, ConstructError> {
    let (_, _, r) = biggs_type(n)?;
    let (n, r) = (n as i64, r as i64);
    Ok(n - exact(n * (n - 1), 2) + exact(n * (n - 1), r))
}

/// Whether `j` or `2 - j` is `(n-1)/2` mod `n - 1`.
pub fn james_special_branch(n: u64, j: i64) -> bool {
    let m = (n - 1) as i64;
    let half = m / 2;
    j.rem_euclid(m) == half || (2 - j).rem_euclid(m) == half
}

/// Numbers of faces in the two face orbits of `M_n(c, j)`.
pub fn james_face_orbits(n: u64, j: i64) -> Result<(u64, u64), ConstructError> {
    james_parameters(n, j)?;
    let p = characteristic_of(n)?;
    let m = n - 1;
    Ok(if james_special_branch(n, j) {
        (n, n * m / (2 * p))
    } else {
        (n * gcd_mod(m, j), n * gcd_mod(m, 2 - j))
    })
}

pub fn james_genus(n: u64, j: i64) -> Result<i64, ConstructError> {
    james_parameters(n, j)?;
    let p = characteristic_of(n)? as i64;
    let m = n - 1;
    let ni = n as i64;
    Ok(if james_special_branch(n, j) {
        exact((ni - 1) * (ni * (p - 1) - 4 * p), 4 * p)
    } else {
        let a = gcd_mod(m, j) as i64;
        let b = gcd_mod(m, 2 - j) as i64;
        exact(ni * ((ni - 3) - 2 * a - 2 * b), 4) + 1
    })
}

/// `l = 2(n-1)/gcd(n-1, 2(j-1))`.
pub fn james_petrie_length(n: u64, j: i64) -> Result<u64, ConstructError> {
    james_parameters(n, j)?;
    Ok(2 * (n - 1) / gcd_mod(n - 1, 2 * (j - 1)))
}

pub fn james_petrie_count(n: u64, j: i64) -> Result<u64, ConstructError> {
    Ok(n * (n - 1) / james_petrie_length(n, j)?)
}

/// `chi = n(1 - (n-1)/2 + (n-1)/l)` for the Petrie dual of a James map.
pub fn james_petrie_chi(n: u64, j: i64) -> Result<i64, ConstructError> {
    let l = james_petrie_length(n, j)? as i64;
    let n = n as i64;
    Ok(n - exact(n * (n - 1), 2) + exact(n * (n - 1), l))
}

/// Invariants predicted by the formulas for one constructed map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub chi: i64,
    pub orientable: bool,
    pub genus_or_crosscaps: i64,
    pub face_sizes: Vec<u32>,
    pub vertex_degrees: Vec<u32>,
    pub petrie_lengths: Vec<u32>,
    pub petrie_count: usize,
    /// Numbers of faces in each face orbit of the automorphism group,
    /// sorted; `None` where no formula is known.
    pub face_orbit_sizes: Option<Vec<u32>>,
    pub aut_order: usize,
    pub et_class: EtClass,
}

/// `count` copies of each size, sorted.
fn multiset(parts: &[(u64, u64)]) -> Vec<u32> {
    let mut v: Vec<u32> = parts
        .iter()
        .flat_map(|&(size, count)| std::iter::repeat_n(size as u32, count as usize))
        .collect();
    v.sort_unstable();
    v
}

fn sorted(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable();
    v
}

impl Expected {
    /// A Biggs map, or its Petrie dual (`n >= 3`).
    pub fn biggs(n: u64, petrie: bool) -> Result<Expected, ConstructError> {
        let (m, q, r) = biggs_type(n)?;
        let arcs = n * (n - 1);
        let aut_order = (if n <= 4 { 2 * arcs } else { arcs }) as usize;
        if !petrie {
            let genus = biggs_genus(n)?;
            return Ok(Expected {
                chi: 2 - 2 * genus,
                orientable: true,
                genus_or_crosscaps: genus,
                face_sizes: multiset(&[(m, arcs / m)]),
                vertex_degrees: multiset(&[(q, n)]),
                petrie_lengths: multiset(&[(r, arcs / r)]),
                petrie_count: (arcs / r) as usize,
                face_orbit_sizes: Some(vec![(arcs / m) as u32]),
                aut_order,
                et_class: if n <= 4 {
                    EtClass::One
                } else {
                    EtClass::TwoPEx
                },
            });
        }
        if n < 3 {
            return Err(ConstructError::NoFormula(format!(
                "the Petrie dual of M_{n}"
            )));
        }
        let chi = biggs_petrie_chi(n)?;
        Ok(Expected {
            chi,
            orientable: false,
            genus_or_crosscaps: 2 - chi,
            face_sizes: multiset(&[(r, arcs / r)]),
            vertex_degrees: multiset(&[(q, n)]),
            petrie_lengths: multiset(&[(m, arcs / m)]),
            petrie_count: (arcs / m) as usize,
            face_orbit_sizes: Some(vec![(arcs / r) as u32]),
            aut_order,
            et_class: if n <= 4 {
                EtClass::One
            } else {
                EtClass::TwoStarEx
            },
        })
    }

    /// A James map `M_n(c, j)`, or its Petrie dual.
    pub fn james(n: u64, j: i64, petrie: bool) -> Result<Expected, ConstructError> {
        let (a, b) = james_face_orbits(n, j)?;
        let l = james_petrie_length(n, j)?;
        let edges = n * (n - 1) / 2;
        let arcs = 2 * edges;
        let aut_order = edges as usize;
        let two_orbits = multiset(&[(edges / a, a), (edges / b, b)]);
        if !petrie {
            let genus = james_genus(n, j)?;
            return Ok(Expected {
                chi: 2 - 2 * genus,
                orientable: true,
                genus_or_crosscaps: genus,
                face_sizes: two_orbits,
                vertex_degrees: multiset(&[(n - 1, n)]),
                petrie_lengths: multiset(&[(l, arcs / l)]),
                petrie_count: (arcs / l) as usize,
                face_orbit_sizes: Some(sorted(vec![a as u32, b as u32])),
                aut_order,
                et_class: EtClass::FiveStar,
            });
        }
        let chi = james_petrie_chi(n, j)?;
        Ok(Expected {
            chi,
            orientable: false,
            genus_or_crosscaps: 2 - chi,
            face_sizes: multiset(&[(l, arcs / l)]),
            vertex_degrees: multiset(&[(n - 1, n)]),
            petrie_lengths: two_orbits,
            petrie_count: (a + b) as usize,
            face_orbit_sizes: Some(vec![(arcs / l) as u32]),
            aut_order,
            et_class: EtClass::FiveP,
        })
    }

    /// `{3,5}_5` (`first`) or `{5,5}_3`.
    pub fn k6(first: bool) -> Expected {
        let (face, petrie, chi) = if first { (3, 5, 1) } else { (5, 3, -3) };
        Expected {
            chi,
            orientable: false,
            genus_or_crosscaps: 2 - chi,
            face_sizes: multiset(&[(face, 30 / face)]),
            vertex_degrees: vec![5; 6],
            petrie_lengths: multiset(&[(petrie, 30 / petrie)]),
            petrie_count: (30 / petrie) as usize,
            face_orbit_sizes: Some(vec![(30 / face) as u32]),
            aut_order: 60,
            et_class: EtClass::One,
        }
    }

    /// Predictions for the dual map: faces and vertices trade places.
    pub fn dual(&self) -> Expected {
        Expected {
            face_sizes: self.vertex_degrees.clone(),
            vertex_degrees: self.face_sizes.clone(),
            face_orbit_sizes: None,
            et_class: self.et_class.dual(),
            ..self.clone()
        }
    }
}
