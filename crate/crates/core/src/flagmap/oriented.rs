//! Rotation systems with edge signatures on simple graphs.

use super::iso::{canonical_code, extend, Certificate};
use super::{FlagMap, MapError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A simple connected graph with a cyclic neighbour order at every vertex
/// and a sign on every edge.
///
/// Darts `(u, v)` are numbered vertex by vertex in rotation order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedMap {
    rotation: Vec<Vec<u32>>,
    signs: Vec<Vec<Sign>>,
    offset: Vec<usize>,
    /// Dart `(v, u)` for each dart `(u, v)`.
    reverse: Vec<u32>,
}

impl OrientedMap {
    pub fn new(rotation: Vec<Vec<u32>>, signs: Vec<Vec<Sign>>) -> Result<OrientedMap, MapError> {
        let bad = |msg: String| Err(MapError::InvalidRotation(msg));
        let n = rotation.len();
        if n == 0 {
            return bad("no vertices".into());
        }
        if signs.len() != n {
            return bad("signature has the wrong number of vertices".into());
        }
        let mut offset = Vec::with_capacity(n + 1);
        offset.push(0);
        for (u, nbrs) in rotation.iter().enumerate() {
            if nbrs.is_empty() {
                return bad(format!("vertex {u} has no neighbours"));
            }
            if signs[u].len() != nbrs.len() {
                return bad(format!(
                    "vertex {u} has {} signs for {} neighbours",
                    signs[u].len(),
                    nbrs.len()
                ));
            }
            let mut sorted = nbrs.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != nbrs.len() {
                return bad(format!("vertex {u} lists a neighbour twice"));
            }
            if let Some(&v) = nbrs.iter().find(|&&v| v as usize >= n || v as usize == u) {
                return bad(format!("vertex {u} has invalid neighbour {v}"));
            }
            offset.push(offset[u] + nbrs.len());
        }
        let mut reverse = vec![0u32; offset[n]];
        for u in 0..n {
            for (k, &v) in rotation[u].iter().enumerate() {
                let Some(j) = rotation[v as usize].iter().position(|&w| w as usize == u) else {
                    return bad(format!("edge {u}-{v} is not listed at {v}"));
                };
                if signs[u][k] != signs[v as usize][j] {
                    return bad(format!("edge {u}-{v} has inconsistent signs"));
                }
                reverse[offset[u] + k] = (offset[v as usize] + j) as u32;
            }
        }
        let map = OrientedMap {
            rotation,
            signs,
            offset,
            reverse,
        };
        if !map.graph_connected() {
            return bad("graph is not connected".into());
        }
        Ok(map)
    }

    /// All signatures `+1`.
    pub fn orientable(rotation: Vec<Vec<u32>>) -> Result<OrientedMap, MapError> {
        let signs = rotation.iter().map(|r| vec![Sign::Plus; r.len()]).collect();
        OrientedMap::new(rotation, signs)
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.dart_count() / 2
    }

    pub fn dart_count(&self) -> usize {
        self.reverse.len()
    }

    pub fn rotation(&self, u: usize) -> &[u32] {
        &self.rotation[u]
    }

    pub fn signs(&self, u: usize) -> &[Sign] {
        &self.signs[u]
    }

    pub fn rotations(&self) -> &[Vec<u32>] {
        &self.rotation
    }

    pub fn edge_sign(&self, u: usize, v: u32) -> Option<Sign> {
        let k = self.rotation[u].iter().position(|&w| w == v)?;
        Some(self.signs[u][k])
    }

    /// Index of dart `(u, v)`.
    pub fn dart(&self, u: usize, v: u32) -> Option<usize> {
        let k = self.rotation.get(u)?.iter().position(|&w| w == v)?;
        Some(self.offset[u] + k)
    }

    /// Index of flag `(u, v, side)` in [`OrientedMap::to_flag_map`].
    pub fn flag(&self, u: usize, v: u32, side: Sign) -> Option<u32> {
        let d = self.dart(u, v)?;
        Some((2 * d + usize::from(side == Sign::Minus)) as u32)
    }

    /// Graph distances from `src`.
    pub fn distances(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.vertex_count()];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &self.rotation[u] {
                if dist[v as usize] == u32::MAX {
                    dist[v as usize] = dist[u] + 1;
                    queue.push_back(v as usize);
                }
            }
        }
        dist
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().flatten().all(|&s| s == Sign::Plus)
    }

    fn graph_connected(&self) -> bool {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0usize];
        while let Some(u) = stack.pop() {
            for &v in &self.rotation[u] {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    stack.push(v as usize);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// The flag system with flags `(u, v, s)` for each dart `(u, v)` and side
    /// `s`, where
    /// `r0(u,v,s) = (v,u,-λ(uv)s)`, `r1(u,v,s) = (u,ρ_u^s(v),-s)` and
    /// `r2(u,v,s) = (u,v,-s)`. Flag `2d` is side `+1` of dart `d`, `2d + 1`
    /// side `-1`.
    pub fn to_flag_map(&self) -> FlagMap {
        let nd = self.dart_count();
        let mut r0 = vec![0u32; 2 * nd];
        let mut r1 = vec![0u32; 2 * nd];
        let mut r2 = vec![0u32; 2 * nd];
        for u in 0..self.vertex_count() {
            let deg = self.rotation[u].len();
            for k in 0..deg {
                let d = self.offset[u] + k;
                let rev = self.reverse[d] as usize;
                let twisted = self.signs[u][k] == Sign::Minus;
                for side in 0..2 {
                    let f = 2 * d + side;
                    // -λs: flips the side unless the edge is twisted.
                    r0[f] = (2 * rev + (side ^ usize::from(!twisted))) as u32;
                    let next = if side == 0 {
                        self.offset[u] + (k + 1) % deg
                    } else {
                        self.offset[u] + (k + deg - 1) % deg
                    };
                    r1[f] = (2 * next + (1 - side)) as u32;
                    r2[f] = (2 * d + (1 - side)) as u32;
                }
            }
        }
        FlagMap::new_unchecked(r0, r1, r2)
    }

    /// Negates the signs at `v` and reverses its rotation. The flag system
    /// is unchanged up to isomorphism.
    pub fn switch_vertex(&self, v: usize) -> OrientedMap {
        let mut rotation = self.rotation.clone();
        let mut signs = self.signs.clone();
        rotation[v].reverse();
        signs[v].reverse();
        for s in signs[v].iter_mut() {
            *s = s.negate();
        }
        for &w in &self.rotation[v] {
            let k = rotation[w as usize]
                .iter()
                .position(|&x| x as usize == v)
                .unwrap();
            signs[w as usize][k] = signs[w as usize][k].negate();
        }
        OrientedMap::new(rotation, signs).expect("switching preserves validity")
    }

    fn require_positive(&self) -> Result<(), MapError> {
        if self.is_all_positive() {
            Ok(())
        } else {
            Err(MapError::NotOrientableRepresentation)
        }
    }

    /// Reverses every rotation.
    pub fn mirror(&self) -> Result<OrientedMap, MapError> {
        self.require_positive()?;
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        OrientedMap::orientable(rotation)
    }

    /// Dart permutations `(ρ, θ)`: next dart around the tail, and reversal.
    fn dart_generators(&self) -> (Vec<u32>, Vec<u32>) {
        let mut rho = vec![0u32; self.dart_count()];
        for (u, nbrs) in self.rotation.iter().enumerate() {
            let deg = nbrs.len();
            for k in 0..deg {
                rho[self.offset[u] + k] = (self.offset[u] + (k + 1) % deg) as u32;
            }
        }
        (rho, self.reverse.clone())
    }

    /// Whether a graph isomorphism carries each rotation onto the
    /// corresponding rotation (no reflection allowed).
    pub fn oriented_isomorphic(&self, other: &OrientedMap) -> Result<bool, MapError> {
        self.require_positive()?;
        other.require_positive()?;
        if self.vertex_count() != other.vertex_count() || self.dart_count() != other.dart_count() {
            return Ok(false);
        }
        let (ra, ta) = self.dart_generators();
        let (rb, tb) = other.dart_generators();
        let (ga, gb) = ([&ra[..], &ta[..]], [&rb[..], &tb[..]]);
        let mut image = Vec::new();
        let mut stack = Vec::new();
        Ok(
            (0..other.dart_count() as u32)
                .any(|to| extend(&ga, &gb, 0, to, &mut image, &mut stack)),
        )
    }

    /// Certificate equal for two maps iff they are oriented-isomorphic.
    pub fn oriented_certificate(&self) -> Result<Certificate, MapError> {
        self.require_positive()?;
        let (rho, theta) = self.dart_generators();
        Ok(Certificate::from_code(&canonical_code(&[&rho, &theta])))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_tetra() -> OrientedMap {
        OrientedMap::orientable(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![3, 0, 1],
            vec![2, 1, 0],
        ])
        .unwrap()
    }

    #[test]
    fn rejects_bad_rotations() {
        let e = |r: Vec<Vec<u32>>| OrientedMap::orientable(r).unwrap_err();
        assert!(matches!(
            e(vec![vec![1], vec![]]),
            MapError::InvalidRotation(_)
        ));
        assert!(matches!(
            e(vec![vec![1, 1], vec![0]]),
            MapError::InvalidRotation(_)
        ));
        assert!(matches!(e(vec![vec![0]]), MapError::InvalidRotation(_)));
        assert!(matches!(
            e(vec![vec![1], vec![2], vec![1]]),
            MapError::InvalidRotation(_)
        ));
        assert!(matches!(
            e(vec![vec![1], vec![0], vec![3], vec![2]]),
            MapError::InvalidRotation(_)
        ));
        let signs = vec![vec![Sign::Minus], vec![Sign::Plus]];
        assert!(OrientedMap::new(vec![vec![1], vec![0]], signs).is_err());
    }

    #[test]
    fn flag_count_is_four_per_edge() {
        let m = k4_tetra();
        assert_eq!(m.edge_count(), 6);
        let f = m.to_flag_map();
        assert_eq!(f.n_flags(), 24);
        for size in f.edge_orbits().sizes {
            assert_eq!(size, 4);
        }
    }

    #[test]
    fn mirror_needs_positive_signature() {
        let m = k4_tetra();
        let tw = m.switch_vertex(2);
        assert!(!tw.is_all_positive());
        assert_eq!(tw.mirror(), Err(MapError::NotOrientableRepresentation));
        assert_eq!(
            tw.oriented_isomorphic(&m),
            Err(MapError::NotOrientableRepresentation)
        );
        assert!(tw.to_flag_map().isomorphic(&m.to_flag_map()).is_some());
        assert!(m.mirror().unwrap().mirror().unwrap() == m);
    }

    #[test]
    fn tetrahedron_is_amphichiral() {
        let m = k4_tetra();
        assert!(m.oriented_isomorphic(&m.mirror().unwrap()).unwrap());
        assert_eq!(
            m.oriented_certificate().unwrap(),
            m.mirror().unwrap().oriented_certificate().unwrap()
        );
    }
}
