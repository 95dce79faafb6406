//! Worked examples that cut across modules: named maps, their invariants,
//! automorphism groups and classes.

use etmaps::classify::{
    aut_order, automorphisms, basic_premap_catalog, et_class, is_vertex_two_transitive,
    quotient_premap, transitivity, EtClass,
};
use etmaps::construct::{biggs_map, cube, james_map, k6_regular_pair, rotation_from_faces};
use etmaps::field::Field;
use etmaps::flagmap::{FlagMap, OrientedMap};
use etmaps::report::MapReport;

fn tetrahedron() -> FlagMap {
    biggs_map(4, 2).unwrap().to_flag_map()
}

fn m52() -> FlagMap {
    biggs_map(5, 2).unwrap().to_flag_map()
}

fn m755() -> FlagMap {
    james_map(7, 5, 5).unwrap().to_flag_map()
}

fn catalog_entry(c: EtClass) -> FlagMap {
    basic_premap_catalog()
        .into_iter()
        .find(|(k, _)| *k == c)
        .unwrap()
        .1
}

#[test]
fn automorphism_group_orders() {
    assert_eq!(aut_order(&tetrahedron()), 24);
    assert_eq!(aut_order(&m52()), 20);
    assert_eq!(aut_order(&k6_regular_pair().0), 60);
    assert_eq!(aut_order(&m755()), 21);
}

#[test]
fn transitivity_examples() {
    let t = transitivity(&tetrahedron());
    assert!(t.flags && t.edges && t.vertices && t.arcs && t.faces);
    let t = transitivity(&m52());
    assert!(!t.flags && t.arcs && t.edges);
    let t = transitivity(&m755());
    assert!(t.edges && !t.arcs && !t.faces);
}

#[test]
fn quotient_premaps() {
    let q = quotient_premap(&tetrahedron());
    assert_eq!(q.n_flags(), 1);
    assert!(q.isomorphic(&catalog_entry(EtClass::One)).is_some());
    let q = quotient_premap(&m52());
    assert_eq!(q.n_flags(), 2);
    assert!(q.isomorphic(&catalog_entry(EtClass::TwoPEx)).is_some());
    // 84 flags over a group of order 21.
    let q = quotient_premap(&m755());
    assert_eq!(q.n_flags(), 4);
    assert!(q.isomorphic(&catalog_entry(EtClass::FiveStar)).is_some());
}

#[test]
fn petrie_duals_move_along_rows() {
    assert_eq!(et_class(&m52().petrie_dual()), EtClass::TwoStarEx);
    assert_eq!(et_class(&m755().petrie_dual()), EtClass::FiveP);
}

#[test]
fn ascending_rotations_on_k5_are_not_edge_transitive() {
    let rotation: Vec<Vec<u32>> = (0..5u32)
        .map(|u| (0..5).filter(|&v| v != u).collect())
        .collect();
    let m = OrientedMap::orientable(rotation).unwrap().to_flag_map();
    assert_eq!(et_class(&m), EtClass::NotEdgeTransitive);
}

#[test]
fn affine_groups_are_two_transitive_on_vertices() {
    let m = m52();
    assert!(is_vertex_two_transitive(&m, &automorphisms(&m)));
    let m = m755();
    assert!(!is_vertex_two_transitive(&m, &automorphisms(&m)));
}

#[test]
fn named_map_invariants() {
    let r = MapReport::analyze(&m52());
    assert_eq!(
        (r.chi, r.orientable, r.genus_or_crosscaps),
        (0, true, Some(1))
    );
    let r = MapReport::analyze(&m52().petrie_dual());
    assert_eq!(
        (r.chi, r.orientable, r.genus_or_crosscaps),
        (-3, false, Some(5))
    );
    let r = MapReport::analyze(&k6_regular_pair().1);
    assert_eq!(r.chi, -3);

    let r = MapReport::analyze(&biggs_map(7, 3).unwrap().to_flag_map());
    assert_eq!(r.face_sizes, Some(vec![3; 14]));
    assert_eq!(r.vertex_degrees, Some(vec![6; 7]));
    assert_eq!(r.petrie_lengths, Some(vec![14; 3]));

    let r = MapReport::analyze(&m755());
    let mut faces = vec![3; 7];
    faces.extend([7; 3]);
    assert_eq!(r.face_sizes, Some(faces));
    assert_eq!(r.vertex_degrees, Some(vec![6; 7]));
    assert_eq!(r.petrie_lengths, Some(vec![6; 7]));

    let r = MapReport::analyze(&tetrahedron().petrie_dual());
    assert_eq!((r.chi, r.orientable), (1, false));
    assert_eq!(r.face_sizes, Some(vec![4; 3]));
}

#[test]
fn flag_isomorphism_ignores_chirality() {
    assert!(m52()
        .isomorphic(&biggs_map(5, 3).unwrap().to_flag_map())
        .is_some());
    assert!(m52().isomorphic(&m52().petrie_dual()).is_none());
    let m73 = biggs_map(7, 3).unwrap().to_flag_map();
    let m75 = biggs_map(7, 5).unwrap().to_flag_map();
    assert_eq!(m73.canonical_form(), m75.canonical_form());
    assert_ne!(m73.canonical_form(), m755().canonical_form());
}

#[test]
fn biggs_maps_on_k9() {
    let f = Field::of_order(9).unwrap();
    for c in f.primitive_elements() {
        let m = biggs_map(9, c.index()).unwrap().to_flag_map();
        assert!(m.is_complete(9));
        assert!(m.petrie_dual().is_complete(9));
    }
}

#[test]
fn premaps_with_loops_are_not_complete_graphs() {
    let bouquet = catalog_entry(EtClass::TwoEx);
    assert!(!bouquet.underlying_graph().is_simple());
    assert!(!bouquet.is_complete(1));
    assert!(!bouquet.is_complete(2));
}

#[test]
fn faces_determine_rotations() {
    // The cube rebuilt from its six squares.
    let squares: [&[u32]; 6] = [
        &[0, 1, 3, 2],
        &[4, 6, 7, 5],
        &[0, 4, 5, 1],
        &[2, 3, 7, 6],
        &[0, 2, 6, 4],
        &[1, 5, 7, 3],
    ];
    let om = rotation_from_faces(8, &squares).unwrap();
    let m = om.to_flag_map();
    assert_eq!(m.euler_characteristic(), 2);
    assert!(m.isomorphic(&cube().to_flag_map()).is_some());
}
