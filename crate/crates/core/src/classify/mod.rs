//! Automorphism groups, transitivity, quotient premaps and the fourteen
//! edge-transitive classes.

mod catalog;

pub(crate) use catalog::involutions;
pub use catalog::{basic_premap_catalog, classify_premap, one_edge_maps};

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::flagmap::iso::extend;
use crate::flagmap::{orbits, FlagMap};

/// An edge-transitive class, or the marker for maps that are not
/// edge-transitive.
///
/// Classes come in rows closed under duality `D` and Petrie duality `P`:
/// for a row `X, X*, XP`, `D` swaps `X` and `X*` and `P` swaps `X*` and
/// `XP`. Classes `1` and `3` are fixed by both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EtClass {
    One,
    Two,
    TwoStar,
    TwoP,
    TwoEx,
    TwoStarEx,
    TwoPEx,
    Three,
    Four,
    FourStar,
    FourP,
    Five,
    FiveStar,
    FiveP,
    NotEdgeTransitive,
}

impl EtClass {
    /// The fourteen proper classes.
    pub const PROPER: [EtClass; 14] = [
        EtClass::One,
        EtClass::Two,
        EtClass::TwoStar,
        EtClass::TwoP,
        EtClass::TwoEx,
        EtClass::TwoStarEx,
        EtClass::TwoPEx,
        EtClass::Three,
        EtClass::Four,
        EtClass::FourStar,
        EtClass::FourP,
        EtClass::Five,
        EtClass::FiveStar,
        EtClass::FiveP,
    ];

    pub fn label(self) -> &'static str {
        match self {
            EtClass::One => "1",
            EtClass::Two => "2",
            EtClass::TwoStar => "2*",
            EtClass::TwoP => "2P",
            EtClass::TwoEx => "2ex",
            EtClass::TwoStarEx => "2*ex",
            EtClass::TwoPEx => "2Pex",
            EtClass::Three => "3",
            EtClass::Four => "4",
            EtClass::FourStar => "4*",
            EtClass::FourP => "4P",
            EtClass::Five => "5",
            EtClass::FiveStar => "5*",
            EtClass::FiveP => "5P",
            EtClass::NotEdgeTransitive => "NOT_EDGE_TRANSITIVE",
        }
    }

    /// Class of the dual map.
    pub fn dual(self) -> EtClass {
        use EtClass::*;
        match self {
            Two => TwoStar,
            TwoStar => Two,
            TwoEx => TwoStarEx,
            TwoStarEx => TwoEx,
            Four => FourStar,
            FourStar => Four,
            Five => FiveStar,
            FiveStar => Five,
            c => c,
        }
    }

    /// Class of the Petrie dual.
    pub fn petrie(self) -> EtClass {
        use EtClass::*;
        match self {
            TwoStar => TwoP,
            TwoP => TwoStar,
            TwoStarEx => TwoPEx,
            TwoPEx => TwoStarEx,
            FourStar => FourP,
            FourP => FourStar,
            FiveStar => FiveP,
            FiveP => FiveStar,
            c => c,
        }
    }

    pub fn is_edge_transitive(self) -> bool {
        self != EtClass::NotEdgeTransitive
    }
}

impl fmt::Display for EtClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for EtClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        EtClass::PROPER
            .into_iter()
            .chain([EtClass::NotEdgeTransitive])
            .find(|c| c.label() == s)
            .ok_or_else(|| format!("unknown class label {s:?}"))
    }
}

impl Serialize for EtClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// The automorphism group of a map as an explicit list of flag
/// permutations, identity first.
#[derive(Debug, Clone)]
pub struct AutGroup {
    elements: Vec<Vec<u32>>,
}

impl AutGroup {
    /// Wraps a list of flag permutations. The caller asserts they form a
    /// group; [`AutGroup::is_group`] checks closure.
    pub fn from_elements(elements: Vec<Vec<u32>>) -> AutGroup {
        AutGroup { elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    /// Closure under composition and inverses (quadratic in the order).
    pub fn is_group(&self) -> bool {
        let set: std::collections::HashSet<&[u32]> =
            self.elements.iter().map(|g| g.as_slice()).collect();
        self.elements.iter().all(|g| {
            let inv = invert(g);
            set.contains(inv.as_slice())
                && self.elements.iter().all(|h| {
                    let gh: Vec<u32> = g.iter().map(|&x| h[x as usize]).collect();
                    set.contains(gh.as_slice())
                })
        })
    }

    /// Orbit index of each flag, numbered by smallest member.
    pub fn flag_orbits(&self, n_flags: usize) -> (Vec<u32>, usize) {
        let mut id = vec![u32::MAX; n_flags];
        let mut count = 0;
        for x in 0..n_flags {
            if id[x] != u32::MAX {
                continue;
            }
            for g in &self.elements {
                id[g[x] as usize] = count as u32;
            }
            count += 1;
        }
        (id, count)
    }
}

pub(crate) fn invert(g: &[u32]) -> Vec<u32> {
    let mut inv = vec![0; g.len()];
    for (x, &y) in g.iter().enumerate() {
        inv[y as usize] = x as u32;
    }
    inv
}

/// All flag bijections commuting with `r0`, `r1`, `r2`: each is determined
/// by the image of flag 0.
pub fn automorphisms(m: &FlagMap) -> AutGroup {
    let gens = m.generators();
    let mut image = Vec::new();
    let mut stack = Vec::new();
    let mut elements = Vec::new();
    for to in 0..m.n_flags() as u32 {
        if extend(&gens, &gens, 0, to, &mut image, &mut stack) {
            elements.push(image.clone());
        }
    }
    AutGroup { elements }
}

pub fn aut_order(m: &FlagMap) -> usize {
    automorphisms(m).order()
}

/// Whether automorphisms carry flag 0 into every edge. Stops at the first
/// unreachable edge.
pub fn is_edge_transitive(m: &FlagMap) -> bool {
    let gens = m.generators();
    let edges = m.edge_orbits();
    let mut members: Vec<Vec<u32>> = vec![Vec::new(); edges.count];
    for (x, &e) in edges.id.iter().enumerate() {
        members[e as usize].push(x as u32);
    }
    let mut image = Vec::new();
    let mut stack = Vec::new();
    members.iter().all(|flags| {
        flags
            .iter()
            .any(|&to| extend(&gens, &gens, 0, to, &mut image, &mut stack))
    })
}

/// The quotient of `m` by a group of its automorphisms: flags are group
/// orbits and each `r_i` acts on orbits. Orbits fixed by an `r_i` become
/// boundary flags.
pub fn quotient_by_group(m: &FlagMap, group: &AutGroup) -> FlagMap {
    let (id, count) = group.flag_orbits(m.n_flags());
    let mut rep = vec![u32::MAX; count];
    for (x, &k) in id.iter().enumerate() {
        if rep[k as usize] == u32::MAX {
            rep[k as usize] = x as u32;
        }
    }
    let act = |i: usize| -> Vec<u32> {
        rep.iter()
            .map(|&x| id[m.r(i)[x as usize] as usize])
            .collect()
    };
    FlagMap::new(act(0), act(1), act(2)).expect("quotient of a map by automorphisms is a premap")
}

/// `M / Aut M`.
pub fn quotient_premap(m: &FlagMap) -> FlagMap {
    quotient_by_group(m, &automorphisms(m))
}

/// Transitivity of the automorphism group on each kind of element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Transitivity {
    pub flags: bool,
    pub edges: bool,
    pub vertices: bool,
    /// Arcs are incident vertex-edge pairs, i.e. `<r2>`-orbits of flags.
    pub arcs: bool,
    pub faces: bool,
}

/// Orbits of the automorphism group on vertices, edges, faces and arcs are
/// the corresponding orbits of the quotient premap.
pub fn transitivity_from_quotient(q: &FlagMap) -> Transitivity {
    let c = q.counts();
    Transitivity {
        flags: q.n_flags() == 1,
        edges: c.edges == 1,
        vertices: c.vertices == 1,
        arcs: orbits(q.n_flags(), &[q.r(2)]).count == 1,
        faces: c.faces == 1,
    }
}

pub fn transitivity(m: &FlagMap) -> Transitivity {
    transitivity_from_quotient(&quotient_premap(m))
}

/// The class of a quotient premap: [`EtClass::NotEdgeTransitive`] when it
/// has more than one edge, otherwise the catalog entry it is isomorphic to.
pub fn class_of_quotient(q: &FlagMap) -> EtClass {
    if q.counts().edges != 1 {
        return EtClass::NotEdgeTransitive;
    }
    catalog::lookup(q).expect("every one-edge premap is in the catalog")
}

pub fn et_class(m: &FlagMap) -> EtClass {
    class_of_quotient(&quotient_premap(m))
}

/// Vertex permutation induced by an automorphism.
pub fn vertex_action(m: &FlagMap, g: &[u32]) -> Vec<u32> {
    let vo = m.vertex_orbits();
    let mut perm = vec![0; vo.count];
    for (x, &v) in vo.id.iter().enumerate() {
        perm[v as usize] = vo.id[g[x] as usize];
    }
    perm
}

/// Whether the automorphism group is transitive on ordered pairs of
/// distinct vertices.
pub fn is_vertex_two_transitive(m: &FlagMap, aut: &AutGroup) -> bool {
    let vo = m.vertex_orbits();
    let n = vo.count;
    if n < 2 {
        return true;
    }
    let pairs: std::collections::HashSet<(u32, u32)> = aut
        .elements()
        .iter()
        .map(|g| {
            let p = vertex_action(m, g);
            (p[0], p[1])
        })
        .collect();
    pairs.len() == n * (n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flagmap::OrientedMap;

    fn tetrahedron() -> FlagMap {
        OrientedMap::orientable(vec![
            vec![1, 2, 3],
            vec![0, 3, 2],
            vec![3, 0, 1],
            vec![2, 1, 0],
        ])
        .unwrap()
        .to_flag_map()
    }

    #[test]
    fn tetrahedron_is_regular() {
        let t = tetrahedron();
        let aut = automorphisms(&t);
        assert_eq!(aut.order(), 24);
        assert!(aut.is_group());
        assert_eq!(quotient_premap(&t).n_flags(), 1);
        assert_eq!(et_class(&t), EtClass::One);
        let tr = transitivity(&t);
        assert!(tr.flags && tr.edges && tr.vertices && tr.arcs && tr.faces);
        assert!(is_vertex_two_transitive(&t, &aut));
    }

    #[test]
    fn labels_round_trip() {
        for c in EtClass::PROPER {
            assert_eq!(c.label().parse::<EtClass>(), Ok(c));
            assert_eq!(c.dual().dual(), c);
            assert_eq!(c.petrie().petrie(), c);
        }
        assert!("6".parse::<EtClass>().is_err());
        assert_eq!(
            serde_json::to_string(&EtClass::TwoStarEx).unwrap(),
            "\"2*ex\""
        );
    }

    #[test]
    fn dual_and_petrie_generate_s3_on_each_row() {
        for c in EtClass::PROPER {
            let dp = |x: EtClass| x.dual().petrie();
            assert_eq!(dp(dp(dp(c))), c);
        }
        assert_eq!(EtClass::Two.dual().petrie(), EtClass::TwoP);
        assert_eq!(EtClass::Three.dual(), EtClass::Three);
        assert_eq!(EtClass::One.petrie(), EtClass::One);
    }
}
