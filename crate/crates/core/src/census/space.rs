//! The candidate space of embeddings of `K_n`: a cyclic order at each
//! vertex and a sign on each edge, indexed so that work can be cut into
//! units by the rotations of the first few vertices.

use crate::flagmap::{OrientedMap, Sign};

/// Largest `n` handled; arrays below are sized for it.
pub const MAX_N: usize = 6;
const MAX_D: usize = MAX_N - 1;
const MAX_FLAGS: usize = 2 * MAX_N * MAX_D;

/// Which candidates to enumerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mode {
    pub orientable_only: bool,
    /// Free rotation at vertex 0 and free signs on its edges.
    pub unnormalized: bool,
}

/// Lexicographic permutations of `0..k`.
fn permutations(k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut p: Vec<u8> = (0..k as u8).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..k).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..k).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

#[derive(Debug, Clone)]
pub struct Space {
    pub n: usize,
    pub mode: Mode,
    /// Cyclic orders of `n - 1` neighbours with the first one fixed.
    perms: Vec<Vec<u8>>,
    /// Vertices whose rotation varies, most significant first.
    free_vertices: Vec<usize>,
    /// Edges `(u, v)`, `u < v`, whose sign varies.
    free_edges: Vec<(usize, usize)>,
    /// Number of leading free vertices that index a work unit.
    prefix: usize,
}

/// One rotation system with its per-vertex lookup tables.
#[derive(Clone)]
pub struct Rotations {
    rot: [[u8; MAX_D]; MAX_N],
    pos: [[u8; MAX_N]; MAX_N],
}

impl Space {
    pub fn new(n: usize, mode: Mode) -> Space {
        assert!((3..=MAX_N).contains(&n));
        let free_vertices: Vec<usize> = if mode.unnormalized {
            (0..n).collect()
        } else {
            (1..n).collect()
        };
        let free_edges = if mode.orientable_only {
            Vec::new()
        } else {
            let lo = usize::from(!mode.unnormalized);
            (lo..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect()
        };
        let prefix = free_vertices.len().min(2);
        Space {
            n,
            mode,
            perms: permutations(n - 2),
            free_vertices,
            free_edges,
            prefix,
        }
    }

    pub fn rotations_per_vertex(&self) -> u64 {
        self.perms.len() as u64
    }

    pub fn signature_count(&self) -> u64 {
        1 << self.free_edges.len()
    }

    pub fn rotation_count(&self) -> u64 {
        self.rotations_per_vertex()
            .pow(self.free_vertices.len() as u32)
    }

    pub fn candidate_count(&self) -> u64 {
        self.rotation_count() * self.signature_count()
    }

    pub fn unit_count(&self) -> u64 {
        self.rotations_per_vertex().pow(self.prefix as u32)
    }

    /// Rotation-system indices covered by `unit`.
    pub fn unit_range(&self, unit: u64) -> std::ops::Range<u64> {
        let per = self.rotation_count() / self.unit_count();
        unit * per..(unit + 1) * per
    }

    /// Decodes a rotation-system index (mixed radix over free vertices).
    pub fn rotations(&self, mut index: u64) -> Rotations {
        let n = self.n;
        let base = self.rotations_per_vertex();
        let mut choice = [0usize; MAX_N];
        for &v in self.free_vertices.iter().rev() {
            choice[v] = (index % base) as usize;
            index /= base;
        }
        let mut rot = [[0u8; MAX_D]; MAX_N];
        let mut pos = [[0u8; MAX_N]; MAX_N];
        for u in 0..n {
            let nbrs: Vec<u8> = (0..n as u8).filter(|&v| v as usize != u).collect();
            let perm = &self.perms[choice[u]];
            rot[u][0] = nbrs[0];
            for (k, &p) in perm.iter().enumerate() {
                rot[u][k + 1] = nbrs[1 + p as usize];
            }
            for k in 0..n - 1 {
                pos[u][rot[u][k] as usize] = k as u8;
            }
        }
        Rotations { rot, pos }
    }

    /// Twist table for a signature mask over the free edges.
    pub fn twists(&self, mask: u64) -> [[bool; MAX_N]; MAX_N] {
        let mut tw = [[false; MAX_N]; MAX_N];
        for (b, &(u, v)) in self.free_edges.iter().enumerate() {
            let t = mask >> b & 1 == 1;
            tw[u][v] = t;
            tw[v][u] = t;
        }
        tw
    }

    pub fn oriented_map(&self, rots: &Rotations, tw: &[[bool; MAX_N]; MAX_N]) -> OrientedMap {
        let n = self.n;
        let rotation: Vec<Vec<u32>> = (0..n)
            .map(|u| rots.rot[u][..n - 1].iter().map(|&v| v as u32).collect())
            .collect();
        let signs = (0..n)
            .map(|u| {
                rots.rot[u][..n - 1]
                    .iter()
                    .map(|&v| {
                        if tw[u][v as usize] {
                            Sign::Minus
                        } else {
                            Sign::Plus
                        }
                    })
                    .collect()
            })
            .collect();
        OrientedMap::new(rotation, signs).expect("candidates are valid embeddings of K_n")
    }

    /// Every candidate, in index order.
    pub fn candidates(&self) -> impl Iterator<Item = OrientedMap> + '_ {
        (0..self.rotation_count()).flat_map(move |ri| {
            let rots = self.rotations(ri);
            (0..self.signature_count())
                .map(move |mask| self.oriented_map(&rots, &self.twists(mask)))
        })
    }

    /// Necessary condition for edge-transitivity: every vertex sees the same
    /// multiset of face sizes around it. Traces faces directly on the flag
    /// encoding of [`OrientedMap::to_flag_map`] without allocating.
    pub fn uniform_face_profile(&self, rots: &Rotations, tw: &[[bool; MAX_N]; MAX_N]) -> bool {
        let n = self.n;
        let d = n - 1;
        let nf = 2 * n * d;
        let r0 = |f: usize| {
            let (dart, s) = (f >> 1, f & 1);
            let (u, k) = (dart / d, dart % d);
            let v = rots.rot[u][k] as usize;
            let rev = v * d + rots.pos[v][u] as usize;
            2 * rev + (s ^ usize::from(!tw[u][v]))
        };
        let r1 = |f: usize| {
            let (dart, s) = (f >> 1, f & 1);
            let (u, k) = (dart / d, dart % d);
            if s == 0 {
                2 * (u * d + (k + 1) % d) + 1
            } else {
                2 * (u * d + (k + d - 1) % d)
            }
        };
        let mut size_of = [0u8; MAX_FLAGS];
        let mut seen = [false; MAX_FLAGS];
        let mut orbit = [0u8; MAX_FLAGS];
        for f in 0..nf {
            if seen[f] {
                continue;
            }
            let mut len = 0;
            let mut x = f;
            loop {
                let y = r0(x);
                seen[x] = true;
                seen[y] = true;
                orbit[2 * len] = x as u8;
                orbit[2 * len + 1] = y as u8;
                len += 1;
                x = r1(y);
                if x == f {
                    break;
                }
            }
            for &z in &orbit[..2 * len] {
                size_of[z as usize] = len as u8;
            }
        }
        let profile = |u: usize| {
            let mut p = [0u8; MAX_D];
            for k in 0..d {
                p[k] = size_of[2 * (u * d + k)];
            }
            p[..d].sort_unstable();
            p
        };
        let first = profile(0);
        (1..n).all(|u| profile(u) == first)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(1).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(3)[1], vec![0, 2, 1]);
    }

    #[test]
    fn candidate_counts() {
        let full = Mode {
            orientable_only: false,
            unnormalized: false,
        };
        let or = Mode {
            orientable_only: true,
            unnormalized: false,
        };
        let raw = Mode {
            orientable_only: false,
            unnormalized: true,
        };
        assert_eq!(Space::new(3, full).candidate_count(), 2);
        assert_eq!(Space::new(4, full).candidate_count(), 64);
        assert_eq!(Space::new(5, or).candidate_count(), 1296);
        assert_eq!(Space::new(5, full).candidate_count(), 82944);
        assert_eq!(Space::new(6, or).candidate_count(), 7_962_624);
        assert_eq!(Space::new(4, raw).candidate_count(), 1024);
        let s = Space::new(6, full);
        assert_eq!(s.unit_count(), 576);
        assert_eq!(s.unit_range(1), 13824..27648);
    }

    #[test]
    fn vertex_zero_is_canonical() {
        let s = Space::new(
            5,
            Mode {
                orientable_only: false,
                unnormalized: false,
            },
        );
        for om in s.candidates().step_by(997) {
            assert_eq!(om.rotation(0), &[1, 2, 3, 4]);
            assert!(om.signs(0).iter().all(|&x| x == Sign::Plus));
        }
    }

    #[test]
    fn profile_matches_flag_faces() {
        // The fast profile test agrees with face orbits of the flag map.
        let s = Space::new(
            4,
            Mode {
                orientable_only: false,
                unnormalized: true,
            },
        );
        for ri in 0..s.rotation_count() {
            let rots = s.rotations(ri);
            for mask in 0..s.signature_count() {
                let tw = s.twists(mask);
                let m = s.oriented_map(&rots, &tw).to_flag_map();
                let fo = m.face_orbits();
                let vo = m.vertex_orbits();
                let mut profiles: Vec<Vec<u32>> = vec![Vec::new(); 4];
                for x in (0..m.n_flags()).step_by(2) {
                    profiles[vo.id[x] as usize].push(fo.sizes[fo.id[x] as usize] / 2);
                }
                for p in profiles.iter_mut() {
                    p.sort_unstable();
                }
                let uniform = profiles.iter().all(|p| *p == profiles[0]);
                assert_eq!(s.uniform_face_profile(&rots, &tw), uniform, "{ri} {mask}");
            }
        }
    }
}
