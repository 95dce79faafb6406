//! Spherical maps with an antipodal symmetry, and their projective-plane
//! quotients. The regular pair on `K6` comes from the icosahedron.

use super::{quotient_by_free_automorphisms, ConstructError};
use crate::flagmap::{FlagMap, MapError, OrientedMap, Sign};

/// Rotation system of a map given by its faces, each face a vertex cycle
/// and all faces oriented coherently (every edge traversed once in each
/// direction).
pub fn rotation_from_faces(n: usize, faces: &[&[u32]]) -> Result<OrientedMap, MapError> {
    // At the corner a -> b -> c, the rotation at b takes c to a.
    let mut next: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n];
    for face in faces {
        let k = face.len();
        for i in 0..k {
            let (a, b, c) = (face[i], face[(i + 1) % k], face[(i + 2) % k]);
            next[b as usize].push((c, a));
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for (v, pairs) in next.iter().enumerate() {
        let Some(&(start, _)) = pairs.iter().min() else {
            return Err(MapError::InvalidRotation(format!(
                "vertex {v} is on no face"
            )));
        };
        let mut cycle = vec![start];
        let mut x = start;
        loop {
            let succ = pairs
                .iter()
                .filter(|&&(from, _)| from == x)
                .map(|&(_, to)| to);
            let mut succ = succ.collect::<Vec<_>>();
            if succ.len() != 1 {
                return Err(MapError::InvalidRotation(format!(
                    "faces are not coherently oriented at vertex {v}"
                )));
            }
            x = succ.pop().unwrap();
            if x == start {
                break;
            }
            cycle.push(x);
        }
        if cycle.len() != pairs.len() {
            return Err(MapError::InvalidRotation(format!(
                "vertex {v} is not a disc"
            )));
        }
        rotation.push(cycle);
    }
    OrientedMap::orientable(rotation)
}

/// Icosahedron: apex 0, upper ring 1..=5, lower ring 6..=10, apex 11.
/// Lower vertex `5 + i` sits below the upper edge `i, i + 1`.
pub fn icosahedron() -> OrientedMap {
    let up = |i: u32| 1 + (i % 5);
    let lo = |i: u32| 6 + (i % 5);
    let mut faces: Vec<Vec<u32>> = Vec::new();
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), lo(i), up(i + 1)]);
        faces.push(vec![lo(i), lo(i + 1), up(i + 1)]);
        faces.push(vec![11, lo(i + 1), lo(i)]);
    }
    let faces: Vec<&[u32]> = faces.iter().map(|f| f.as_slice()).collect();
    rotation_from_faces(12, &faces).expect("icosahedron faces are coherent")
}

/// Cube on the vertices `0..8` read as bit triples `(x, y, z)`.
pub fn cube() -> OrientedMap {
    let faces: [&[u32]; 6] = [
        &[0, 2, 3, 1],
        &[4, 5, 7, 6],
        &[0, 1, 5, 4],
        &[2, 6, 7, 3],
        &[0, 4, 6, 2],
        &[1, 3, 7, 5],
    ];
    rotation_from_faces(8, &faces).expect("cube faces are coherent")
}

/// A hexagon on the sphere: two hexagonal faces.
pub fn hexagon() -> OrientedMap {
    let faces: [&[u32]; 2] = [&[0, 1, 2, 3, 4, 5], &[5, 4, 3, 2, 1, 0]];
    rotation_from_faces(6, &faces).expect("hexagon faces are coherent")
}

/// The flag permutation of the antipodal map of a centrally symmetric
/// spherical map: each vertex goes to the unique vertex at maximal
/// distance, and sides are exchanged because the map reverses orientation.
pub fn antipodal_automorphism(om: &OrientedMap) -> Result<Vec<u32>, ConstructError> {
    let n = om.vertex_count();
    let mut sigma = vec![0u32; n];
    for (v, s) in sigma.iter_mut().enumerate() {
        let dist = om.distances(v);
        let far = *dist.iter().max().unwrap();
        let mut it = (0..n).filter(|&w| dist[w] == far);
        match (it.next(), it.next()) {
            (Some(w), None) => *s = w as u32,
            _ => return Err(ConstructError::NotAutomorphism(1)),
        }
    }
    let fm_len = 2 * om.dart_count();
    let mut g = vec![0u32; fm_len];
    for u in 0..n {
        for &v in om.rotation(u) {
            for side in [Sign::Plus, Sign::Minus] {
                let from = om.flag(u, v, side).unwrap();
                let to = om
                    .flag(sigma[u] as usize, sigma[v as usize], side.negate())
                    .ok_or(ConstructError::NotAutomorphism(1))?;
                g[from as usize] = to;
            }
        }
    }
    Ok(g)
}

/// Quotient of a centrally symmetric spherical map by its antipodal map.
pub fn antipodal_quotient(om: &OrientedMap) -> Result<FlagMap, ConstructError> {
    let m = om.to_flag_map();
    let identity: Vec<u32> = (0..m.n_flags() as u32).collect();
    let g = antipodal_automorphism(om)?;
    quotient_by_free_automorphisms(&m, &[identity, g])
}

/// `{3,5}_5` (the antipodal icosahedron quotient) and its Petrie dual
/// `{5,5}_3`.
pub fn k6_regular_pair() -> (FlagMap, FlagMap) {
    let first = antipodal_quotient(&icosahedron()).expect("the icosahedron is centrally symmetric");
    let second = first.petrie_dual();
    (first, second)
}
