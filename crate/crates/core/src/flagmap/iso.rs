use std::fmt;

use super::FlagMap;

const UNSET: u32 = u32::MAX;

/// Canonical encoding of a connected permutation system: the number of
/// points followed by the relabeled generator images, all as big-endian
/// `u32`, so byte order agrees with numeric order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn from_code(code: &[u32]) -> Certificate {
        Certificate(code.iter().flat_map(|x| x.to_be_bytes()).collect())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<Certificate> {
        if !s.len().is_multiple_of(8) {
            return None;
        }
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(s.get(i..i + 2)?, 16).ok())
            .collect::<Option<Vec<u8>>>()
            .map(Certificate)
    }

    /// The decoded `u32` words.
    pub fn words(&self) -> Vec<u32> {
        self.0
            .chunks_exact(4)
            .map(|c| u32::from_be_bytes([c[0], c[1], c[2], c[3]]))
            .collect()
    }

    /// Rebuilds the flag map a three-generator certificate describes.
    pub fn to_flag_map(&self) -> Option<FlagMap> {
        let words = self.words();
        let n = *words.first()? as usize;
        if words.len() != 1 + 3 * n {
            return None;
        }
        let mut r = [vec![0; n], vec![0; n], vec![0; n]];
        for x in 0..n {
            for (i, g) in r.iter_mut().enumerate() {
                g[x] = words[1 + 3 * x + i];
            }
        }
        let [r0, r1, r2] = r;
        FlagMap::new(r0, r1, r2).ok()
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({})", self.to_hex())
    }
}

/// Extends `from -> to` to a map commuting with every generator pair
/// `(a_gens[i], b_gens[i])`. Both systems must be connected and of equal
/// size, so a consistent extension is a bijection.
pub(crate) fn extend(
    a_gens: &[&[u32]],
    b_gens: &[&[u32]],
    from: u32,
    to: u32,
    image: &mut Vec<u32>,
    stack: &mut Vec<u32>,
) -> bool {
    let n = a_gens[0].len();
    image.clear();
    image.resize(n, UNSET);
    stack.clear();
    image[from as usize] = to;
    stack.push(from);
    while let Some(x) = stack.pop() {
        let fx = image[x as usize];
        for (ga, gb) in a_gens.iter().zip(b_gens) {
            let y = ga[x as usize] as usize;
            let fy = gb[fx as usize];
            if image[y] == UNSET {
                image[y] = fy;
                stack.push(y as u32);
            } else if image[y] != fy {
                return false;
            }
        }
    }
    true
}

pub(crate) fn isomorphism(a: &FlagMap, b: &FlagMap) -> Option<Vec<u32>> {
    if a.n_flags() != b.n_flags() {
        return None;
    }
    // Cheap invariants first.
    let (ca, cb) = (a.counts(), b.counts());
    if ca != cb {
        return None;
    }
    let (ga, gb) = (a.generators(), b.generators());
    let mut image = Vec::new();
    let mut stack = Vec::new();
    (0..b.n_flags() as u32)
        .find(|&to| extend(&ga, &gb, 0, to, &mut image, &mut stack))
        .map(|_| image)
}

/// Lexicographically least BFS encoding over all start points.
///
/// From a start point, points are labeled in order of discovery, scanning
/// generators in their given order; the code lists, for each labeled point
/// in turn, the labels of its generator images.
pub fn canonical_code(gens: &[&[u32]]) -> Vec<u32> {
    let n = gens[0].len();
    let k = gens.len();
    let mut best: Vec<u32> = Vec::new();
    let mut code = Vec::with_capacity(1 + k * n);
    let mut label = vec![UNSET; n];
    let mut order: Vec<u32> = Vec::with_capacity(n);
    for start in 0..n as u32 {
        label.fill(UNSET);
        order.clear();
        code.clear();
        code.push(n as u32);
        label[start as usize] = 0;
        order.push(start);
        // `tie` stays true while the prefix equals `best`.
        let mut tie = !best.is_empty();
        let mut worse = false;
        let mut head = 0;
        'bfs: while head < order.len() {
            let x = order[head] as usize;
            head += 1;
            for g in gens {
                let y = g[x] as usize;
                if label[y] == UNSET {
                    label[y] = order.len() as u32;
                    order.push(y as u32);
                }
                let w = label[y];
                if tie {
                    let bw = best[code.len()];
                    if w > bw {
                        worse = true;
                        break 'bfs;
                    }
                    if w < bw {
                        tie = false;
                    }
                }
                code.push(w);
            }
        }
        if !worse && (best.is_empty() || code < best) {
            std::mem::swap(&mut best, &mut code);
        }
    }
    best
}

pub(crate) fn canonical_form(m: &FlagMap) -> Certificate {
    Certificate::from_code(&canonical_code(&m.generators()))
}
