//! Maps as flag systems: a finite set of flags acted on by three involutions
//! `r0`, `r1`, `r2` with `(r0 r2)^2 = 1`.
//!
//! Vertices, edges and faces are the orbits of `<r1, r2>`, `<r0, r2>` and
//! `<r0, r1>`; Petrie polygons are the orbits of `<r0 r2, r1>`. A flag fixed
//! by some `r_i` lies on the boundary. Products are applied left to right:
//! `r0 r2` means "apply `r0`, then `r2`".

pub(crate) mod iso;
mod oriented;
mod text;

pub use iso::{canonical_code, Certificate};
pub use oriented::{OrientedMap, Sign};
pub use text::{parse_flagmap, write_flagmap};

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// The first axiom a set of arrays fails to satisfy.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("no flags")]
    Empty,
    #[error("r{0} has {1} entries, expected {2}")]
    LengthMismatch(usize, usize, usize),
    #[error("r{0} maps flag {1} outside the flag set")]
    OutOfRange(usize, usize),
    #[error("r{0} not involution")]
    NotInvolution(usize),
    #[error("r0 r2 not involution")]
    R0R2NotInvolution,
    #[error("not connected")]
    NotConnected,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("invalid flag map: {0}")]
    Invalid(#[from] Violation),
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("genus is undefined for a map with boundary (chi = {0})")]
    GenusUndefined(i64),
    #[error("operation requires a map without boundary")]
    HasBoundary,
    #[error("oriented comparison requires all edge signatures to be +1")]
    NotOrientableRepresentation,
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A connected flag system. Immutable once validated.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagMap {
    r: [Vec<u32>; 3],
}

impl fmt::Debug for FlagMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagMap")
            .field("flags", &self.n_flags())
            .field("r0", &self.r[0])
            .field("r1", &self.r[1])
            .field("r2", &self.r[2])
            .finish()
    }
}

/// Checks the flag-system axioms on raw image arrays.
pub fn validate(r0: &[u32], r1: &[u32], r2: &[u32]) -> Result<(), Violation> {
    let n = r0.len();
    if n == 0 {
        return Err(Violation::Empty);
    }
    let gens = [r0, r1, r2];
    for (i, g) in gens.iter().enumerate() {
        if g.len() != n {
            return Err(Violation::LengthMismatch(i, g.len(), n));
        }
        if let Some(x) = g.iter().position(|&y| y as usize >= n) {
            return Err(Violation::OutOfRange(i, x));
        }
    }
    for (i, g) in gens.iter().enumerate() {
        if (0..n).any(|x| g[g[x] as usize] as usize != x) {
            return Err(Violation::NotInvolution(i));
        }
    }
    if (0..n).any(|x| {
        let y = r2[r0[x] as usize] as usize;
        r2[r0[y] as usize] as usize != x
    }) {
        return Err(Violation::R0R2NotInvolution);
    }
    if orbits(n, &gens).count != 1 {
        return Err(Violation::NotConnected);
    }
    Ok(())
}

/// Orbit partition of a set of permutations on `0..n`.
#[derive(Debug, Clone)]
pub struct Orbits {
    /// Orbit index of each point; orbits are numbered by smallest member.
    pub id: Vec<u32>,
    pub sizes: Vec<u32>,
    pub count: usize,
}

pub fn orbits(n: usize, gens: &[&[u32]]) -> Orbits {
    const UNSET: u32 = u32::MAX;
    let mut id = vec![UNSET; n];
    let mut sizes = Vec::new();
    let mut stack = Vec::new();
    for start in 0..n {
        if id[start] != UNSET {
            continue;
        }
        let k = sizes.len() as u32;
        id[start] = k;
        stack.push(start as u32);
        let mut size = 0;
        while let Some(x) = stack.pop() {
            size += 1;
            for g in gens {
                let y = g[x as usize];
                if id[y as usize] == UNSET {
                    id[y as usize] = k;
                    stack.push(y);
                }
            }
        }
        sizes.push(size);
    }
    Orbits {
        count: sizes.len(),
        id,
        sizes,
    }
}

/// Orbit counts `(V, E, F, Petrie polygons)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub petrie: usize,
}

/// Sorted size multisets of faces, vertices and Petrie polygons.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multisets {
    pub face_sizes: Vec<u32>,
    pub vertex_degrees: Vec<u32>,
    pub petrie_lengths: Vec<u32>,
}

/// An element of the group of map operations, acting on the triple
/// `(r0, r2, r0 r2)`: the new `r0` is entry `perm[0]` of the triple and the
/// new `r2` is entry `perm[1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OmegaOp(pub [u8; 3]);

impl OmegaOp {
    pub const IDENTITY: OmegaOp = OmegaOp([0, 1, 2]);
    /// Classical dual: swaps `r0` and `r2`.
    pub const DUAL: OmegaOp = OmegaOp([1, 0, 2]);
    /// Petrie dual: swaps `r0` and `r0 r2`.
    pub const PETRIE: OmegaOp = OmegaOp([2, 1, 0]);

    pub fn all() -> [OmegaOp; 6] {
        [
            OmegaOp([0, 1, 2]),
            OmegaOp([0, 2, 1]),
            OmegaOp([1, 0, 2]),
            OmegaOp([1, 2, 0]),
            OmegaOp([2, 0, 1]),
            OmegaOp([2, 1, 0]),
        ]
    }

    /// The operation "apply `self`, then `next`".
    pub fn then(self, next: OmegaOp) -> OmegaOp {
        let a = self.0;
        let b = next.0;
        OmegaOp([a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]])
    }
}

/// The graph underlying a map. Loops and multiple edges are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    pub vertices: usize,
    /// Endpoints of each edge with the smaller vertex first.
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| u != v && seen.insert((u, v)))
    }

    pub fn is_complete(&self, n: usize) -> bool {
        self.vertices == n && self.edges.len() == n * (n - 1) / 2 && self.is_simple()
    }

    /// Graphviz rendering.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph G {\n");
        for v in 0..self.vertices {
            s.push_str(&format!("  {v};\n"));
        }
        for (u, v) in &self.edges {
            s.push_str(&format!("  {u} -- {v};\n"));
        }
        s.push_str("}\n");
        s
    }
}

impl FlagMap {
    pub fn new(r0: Vec<u32>, r1: Vec<u32>, r2: Vec<u32>) -> Result<FlagMap, Violation> {
        validate(&r0, &r1, &r2)?;
        Ok(FlagMap { r: [r0, r1, r2] })
    }

    /// Caller guarantees the axioms.
    pub(crate) fn new_unchecked(r0: Vec<u32>, r1: Vec<u32>, r2: Vec<u32>) -> FlagMap {
        debug_assert_eq!(validate(&r0, &r1, &r2), Ok(()));
        FlagMap { r: [r0, r1, r2] }
    }

    pub fn n_flags(&self) -> usize {
        self.r[0].len()
    }

    /// Image array of `r_i`.
    pub fn r(&self, i: usize) -> &[u32] {
        &self.r[i]
    }

    pub fn generators(&self) -> [&[u32]; 3] {
        [&self.r[0], &self.r[1], &self.r[2]]
    }

    /// The product `r0 r2` as an image array.
    pub fn r0r2(&self) -> Vec<u32> {
        self.r[0].iter().map(|&x| self.r[2][x as usize]).collect()
    }

    pub fn vertex_orbits(&self) -> Orbits {
        orbits(self.n_flags(), &[&self.r[1], &self.r[2]])
    }

    pub fn edge_orbits(&self) -> Orbits {
        orbits(self.n_flags(), &[&self.r[0], &self.r[2]])
    }

    pub fn face_orbits(&self) -> Orbits {
        orbits(self.n_flags(), &[&self.r[0], &self.r[1]])
    }

    pub fn petrie_orbits(&self) -> Orbits {
        orbits(self.n_flags(), &[&self.r0r2(), &self.r[1]])
    }

    pub fn counts(&self) -> Counts {
        Counts {
            vertices: self.vertex_orbits().count,
            edges: self.edge_orbits().count,
            faces: self.face_orbits().count,
            petrie: self.petrie_orbits().count,
        }
    }

    /// `V - E + F`, also for maps with boundary.
    pub fn euler_characteristic(&self) -> i64 {
        let c = self.counts();
        c.vertices as i64 - c.edges as i64 + c.faces as i64
    }

    pub fn has_boundary(&self) -> bool {
        self.r
            .iter()
            .any(|g| g.iter().enumerate().any(|(x, &y)| x == y as usize))
    }

    /// Orientable and boundary-free: the flags two-colour so that every
    /// `r_i` swaps colours, i.e. even words have two orbits.
    pub fn is_orientable(&self) -> bool {
        if self.has_boundary() {
            return false;
        }
        let n = self.n_flags();
        let mut colour = vec![u8::MAX; n];
        colour[0] = 0;
        let mut stack = vec![0u32];
        while let Some(x) = stack.pop() {
            let c = colour[x as usize];
            for g in &self.r {
                let y = g[x as usize] as usize;
                if colour[y] == u8::MAX {
                    colour[y] = 1 - c;
                    stack.push(y as u32);
                } else if colour[y] == c {
                    return false;
                }
            }
        }
        true
    }

    /// Genus if orientable, crosscap number otherwise. Closed maps only.
    pub fn genus_or_crosscaps(&self) -> Result<i64, MapError> {
        let chi = self.euler_characteristic();
        if self.has_boundary() {
            return Err(MapError::GenusUndefined(chi));
        }
        Ok(if self.is_orientable() {
            (2 - chi) / 2
        } else {
            2 - chi
        })
    }

    /// Face, vertex and Petrie-polygon sizes, each sorted. Closed maps only.
    pub fn multisets(&self) -> Result<Multisets, MapError> {
        if self.has_boundary() {
            return Err(MapError::HasBoundary);
        }
        let halves = |o: Orbits| {
            let mut v: Vec<u32> = o.sizes.iter().map(|s| s / 2).collect();
            v.sort_unstable();
            v
        };
        Ok(Multisets {
            face_sizes: halves(self.face_orbits()),
            vertex_degrees: halves(self.vertex_orbits()),
            petrie_lengths: halves(self.petrie_orbits()),
        })
    }

    pub fn omega_apply(&self, op: OmegaOp) -> FlagMap {
        let r0r2 = self.r0r2();
        let triple = [&self.r[0], &self.r[2], &r0r2];
        FlagMap {
            r: [
                triple[op.0[0] as usize].clone(),
                self.r[1].clone(),
                triple[op.0[1] as usize].clone(),
            ],
        }
    }

    pub fn dual(&self) -> FlagMap {
        self.omega_apply(OmegaOp::DUAL)
    }

    pub fn petrie_dual(&self) -> FlagMap {
        self.omega_apply(OmegaOp::PETRIE)
    }

    /// Vertices are vertex orbits, edges are edge orbits joined to the
    /// vertex orbits they meet.
    pub fn underlying_graph(&self) -> Graph {
        let vo = self.vertex_orbits();
        let eo = self.edge_orbits();
        let mut ends: Vec<Vec<usize>> = vec![Vec::new(); eo.count];
        for x in 0..self.n_flags() {
            let e = eo.id[x] as usize;
            let v = vo.id[x] as usize;
            if !ends[e].contains(&v) {
                ends[e].push(v);
            }
        }
        let edges = ends
            .into_iter()
            .map(|mut vs| {
                vs.sort_unstable();
                // A single endpoint is a loop, semi-edge or free edge.
                (vs[0], *vs.last().unwrap())
            })
            .collect();
        Graph {
            vertices: vo.count,
            edges,
        }
    }

    pub fn is_complete(&self, n: usize) -> bool {
        self.underlying_graph().is_complete(n)
    }

    /// Conjugates by a flag relabeling: flag `x` becomes `perm[x]`.
    pub fn relabel(&self, perm: &[u32]) -> FlagMap {
        let n = self.n_flags();
        let mut r = [vec![0; n], vec![0; n], vec![0; n]];
        for (i, g) in self.r.iter().enumerate() {
            for x in 0..n {
                r[i][perm[x] as usize] = perm[g[x] as usize];
            }
        }
        FlagMap { r }
    }

    /// A flag bijection `phi` with `phi(r_i x) = r_i phi(x)`, if one exists.
    pub fn isomorphic(&self, other: &FlagMap) -> Option<Vec<u32>> {
        iso::isomorphism(self, other)
    }

    pub fn canonical_form(&self) -> Certificate {
        iso::canonical_form(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The Cayley map of GF(4) with generator order (1, c, c + 1).
    pub(crate) fn tetrahedron() -> FlagMap {
        let rot = vec![vec![1, 2, 3], vec![0, 3, 2], vec![3, 0, 1], vec![2, 1, 0]];
        OrientedMap::orientable(rot).unwrap().to_flag_map()
    }

    fn triangle(signs_plus: bool) -> FlagMap {
        let rot = vec![vec![1, 2], vec![2, 0], vec![0, 1]];
        let sign = if signs_plus { Sign::Plus } else { Sign::Minus };
        let signs = vec![
            vec![Sign::Plus, Sign::Plus],
            vec![sign, Sign::Plus],
            vec![Sign::Plus, sign],
        ];
        OrientedMap::new(rot, signs).unwrap().to_flag_map()
    }

    #[test]
    fn validate_examples() {
        let t = tetrahedron();
        assert_eq!(t.n_flags(), 24);
        assert_eq!(validate(t.r(0), t.r(1), t.r(2)), Ok(()));

        let mut r0 = t.r(0).to_vec();
        r0.swap(0, 1);
        assert_eq!(
            validate(&r0, t.r(1), t.r(2)).unwrap_err().to_string(),
            "r0 not involution"
        );

        // Two triangles side by side.
        let k = triangle(true);
        let n = k.n_flags() as u32;
        let double = |g: &[u32]| {
            g.iter()
                .copied()
                .chain(g.iter().map(|&x| x + n))
                .collect::<Vec<_>>()
        };
        let v = validate(&double(k.r(0)), &double(k.r(1)), &double(k.r(2)));
        assert_eq!(v.unwrap_err().to_string(), "not connected");
        assert_eq!(validate(&[], &[], &[]), Err(Violation::Empty));
        assert_eq!(
            validate(&[1, 0], &[0, 1], &[0, 1, 2]),
            Err(Violation::LengthMismatch(2, 3, 2))
        );
    }

    #[test]
    fn commuting_axiom_is_checked() {
        // r0 and r2 both involutions on 3 points that do not commute.
        let r0 = vec![1, 0, 2];
        let r2 = vec![0, 2, 1];
        let r1 = vec![0, 1, 2];
        assert_eq!(validate(&r0, &r1, &r2), Err(Violation::R0R2NotInvolution));
    }

    #[test]
    fn tetrahedron_counts() {
        let t = tetrahedron();
        let c = t.counts();
        assert_eq!((c.vertices, c.edges, c.faces, c.petrie), (4, 6, 4, 3));
        assert_eq!(t.euler_characteristic(), 2);
        assert!(t.is_orientable());
        assert_eq!(t.genus_or_crosscaps(), Ok(0));
        let m = t.multisets().unwrap();
        assert_eq!(m.face_sizes, vec![3; 4]);
        assert_eq!(m.vertex_degrees, vec![3; 4]);
        assert_eq!(m.petrie_lengths, vec![4; 3]);
    }

    #[test]
    fn ascending_rotations_on_k4_give_a_torus() {
        // Hand face tracing: one quadrilateral and one octagon.
        let rot = (0..4u32)
            .map(|u| (0..4).filter(|&v| v != u).collect())
            .collect();
        let m = OrientedMap::orientable(rot).unwrap().to_flag_map();
        assert_eq!(m.euler_characteristic(), 0);
        assert_eq!(m.multisets().unwrap().face_sizes, vec![4, 8]);
    }

    #[test]
    fn triangle_maps() {
        let plus = triangle(true);
        assert_eq!(plus.euler_characteristic(), 2);
        assert_eq!(plus.multisets().unwrap().face_sizes, vec![3, 3]);

        let twisted = triangle(false);
        assert_eq!(twisted.euler_characteristic(), 1);
        assert!(!twisted.is_orientable());
        assert_eq!(twisted.multisets().unwrap().face_sizes, vec![6]);
        assert_eq!(twisted.genus_or_crosscaps(), Ok(1));
    }

    #[test]
    fn free_edge_premap() {
        // Two flags, one edge with a free end at each vertex.
        let m = FlagMap::new(vec![1, 0], vec![0, 1], vec![0, 1]).unwrap();
        let c = m.counts();
        assert_eq!((c.vertices, c.edges, c.faces, c.petrie), (2, 1, 1, 1));
        assert!(m.has_boundary());
        assert!(!m.is_orientable());
        assert_eq!(m.genus_or_crosscaps(), Err(MapError::GenusUndefined(2)));
        assert_eq!(m.multisets(), Err(MapError::HasBoundary));
    }

    #[test]
    fn omega_operations() {
        let t = tetrahedron();
        assert_eq!(t.dual().dual(), t);
        assert_eq!(t.petrie_dual().petrie_dual(), t);
        let p = t.petrie_dual();
        assert_eq!(p.euler_characteristic(), 1);
        assert!(!p.is_orientable());
        assert_eq!(p.multisets().unwrap().face_sizes, vec![4; 3]);
        assert_eq!(p.underlying_graph(), t.underlying_graph());

        let dp = OmegaOp::DUAL.then(OmegaOp::PETRIE);
        let mut m = t.clone();
        for _ in 0..3 {
            m = m.omega_apply(dp);
        }
        assert!(m.isomorphic(&t).is_some());
        assert_eq!(dp.then(dp).then(dp), OmegaOp::IDENTITY);
        for a in OmegaOp::all() {
            for b in OmegaOp::all() {
                let lhs = t.omega_apply(a).omega_apply(b);
                assert_eq!(lhs, t.omega_apply(a.then(b)));
            }
        }
    }

    #[test]
    fn underlying_graph_of_tetrahedron_is_k4() {
        let t = tetrahedron();
        assert!(t.is_complete(4));
        assert!(!t.is_complete(5));
        assert!(t.underlying_graph().to_dot().contains("0 -- 1"));
    }

    #[test]
    fn relabeled_map_is_isomorphic_with_equal_certificate() {
        let t = tetrahedron();
        let n = t.n_flags() as u32;
        let perm: Vec<u32> = (0..n).map(|x| (x * 7 + 3) % n).collect();
        let u = t.relabel(&perm);
        assert_ne!(u, t);
        let phi = t.isomorphic(&u).unwrap();
        for i in 0..3 {
            for x in 0..t.n_flags() {
                assert_eq!(phi[t.r(i)[x] as usize], u.r(i)[phi[x] as usize]);
            }
        }
        assert_eq!(t.canonical_form(), u.canonical_form());
        assert!(t.isomorphic(&t.petrie_dual()).is_none());
        assert_ne!(t.canonical_form(), t.petrie_dual().canonical_form());
    }
}
