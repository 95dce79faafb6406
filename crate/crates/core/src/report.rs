//! Computed invariants of a map, and their comparison with formula values.

use serde::Serialize;
use serde_json::Value;

use crate::classify::{
    automorphisms, class_of_quotient, quotient_by_group, transitivity_from_quotient, EtClass,
};
use crate::construct::formulas::Expected;
use crate::flagmap::FlagMap;

/// Invariants of a map. Closed-surface quantities are `None` for maps with
/// boundary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapReport {
    #[serde(rename = "V")]
    pub v: usize,
    #[serde(rename = "E")]
    pub e: usize,
    #[serde(rename = "F")]
    pub f: usize,
    pub petrie_count: usize,
    pub chi: i64,
    pub orientable: bool,
    pub has_boundary: bool,
    pub genus_or_crosscaps: Option<i64>,
    pub face_sizes: Option<Vec<u32>>,
    pub vertex_degrees: Option<Vec<u32>>,
    pub petrie_lengths: Option<Vec<u32>>,
    pub aut_order: usize,
    pub flags_transitive: bool,
    pub edge_transitive: bool,
    pub vertex_transitive: bool,
    pub arc_transitive: bool,
    pub face_transitive: bool,
    /// Number of faces in each orbit of the automorphism group, sorted.
    pub face_orbit_sizes: Vec<u32>,
    pub et_class: EtClass,
}

impl MapReport {
    pub fn analyze(m: &FlagMap) -> MapReport {
        let counts = m.counts();
        let aut = automorphisms(m);
        let q = quotient_by_group(m, &aut);
        let tr = transitivity_from_quotient(&q);
        let multisets = m.multisets().ok();
        MapReport {
            v: counts.vertices,
            e: counts.edges,
            f: counts.faces,
            petrie_count: counts.petrie,
            chi: m.euler_characteristic(),
            orientable: m.is_orientable(),
            has_boundary: m.has_boundary(),
            genus_or_crosscaps: m.genus_or_crosscaps().ok(),
            face_sizes: multisets.as_ref().map(|s| s.face_sizes.clone()),
            vertex_degrees: multisets.as_ref().map(|s| s.vertex_degrees.clone()),
            petrie_lengths: multisets.map(|s| s.petrie_lengths),
            aut_order: aut.order(),
            flags_transitive: tr.flags,
            edge_transitive: tr.edges,
            vertex_transitive: tr.vertices,
            arc_transitive: tr.arcs,
            face_transitive: tr.faces,
            face_orbit_sizes: face_orbit_sizes(m, &aut),
            et_class: class_of_quotient(&q),
        }
    }

    /// Names of the fields where `expected` disagrees with this report.
    pub fn mismatches(&self, expected: &Expected) -> Vec<&'static str> {
        let mut bad = Vec::new();
        let mut check = |ok: bool, name: &'static str| {
            if !ok {
                bad.push(name);
            }
        };
        check(self.chi == expected.chi, "chi");
        check(self.orientable == expected.orientable, "orientable");
        check(
            self.genus_or_crosscaps == Some(expected.genus_or_crosscaps),
            "genus_or_crosscaps",
        );
        check(
            self.face_sizes.as_ref() == Some(&expected.face_sizes),
            "face_sizes",
        );
        check(
            self.vertex_degrees.as_ref() == Some(&expected.vertex_degrees),
            "vertex_degrees",
        );
        check(
            self.petrie_lengths.as_ref() == Some(&expected.petrie_lengths),
            "petrie_lengths",
        );
        check(self.petrie_count == expected.petrie_count, "petrie_count");
        if let Some(sizes) = &expected.face_orbit_sizes {
            check(&self.face_orbit_sizes == sizes, "face_orbit_sizes");
        }
        check(self.aut_order == expected.aut_order, "aut_order");
        check(self.et_class == expected.et_class, "et_class");
        bad
    }

    /// JSON object with keys in sorted order.
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

/// The report plus, for constructed maps, the formula predictions and
/// whether they agree.
pub fn report_json(report: &MapReport, expected: Option<&Expected>) -> Value {
    let mut v = report.to_value();
    if let (Some(e), Value::Object(obj)) = (expected, &mut v) {
        obj.insert(
            "formula".into(),
            serde_json::to_value(e).expect("formulas serialize"),
        );
        obj.insert(
            "consistent".into(),
            Value::Bool(report.mismatches(e).is_empty()),
        );
    }
    v
}

fn face_orbit_sizes(m: &FlagMap, aut: &crate::classify::AutGroup) -> Vec<u32> {
    let faces = m.face_orbits();
    let (flag_orbit, _) = aut.flag_orbits(m.n_flags());
    // Two faces lie in one Aut-orbit iff they meet a common flag orbit, so
    // the least flag orbit a face meets identifies its face orbit.
    let mut rep = vec![u32::MAX; faces.count];
    for (x, &f) in faces.id.iter().enumerate() {
        let o = flag_orbit[x];
        let r = &mut rep[f as usize];
        *r = (*r).min(o);
    }
    let mut count: std::collections::BTreeMap<u32, u32> = Default::default();
    for r in rep {
        *count.entry(r).or_default() += 1;
    }
    let mut sizes: Vec<u32> = count.into_values().collect();
    sizes.sort_unstable();
    sizes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{biggs_map, james_map};

    #[test]
    fn james_report() {
        let m = james_map(7, 5, 5).unwrap().to_flag_map();
        let r = MapReport::analyze(&m);
        assert_eq!((r.v, r.e, r.f, r.petrie_count), (7, 21, 10, 7));
        assert_eq!(r.face_orbit_sizes, vec![3, 7]);
        assert!(r.edge_transitive && r.vertex_transitive);
        assert!(!r.arc_transitive && !r.face_transitive);
        let e = Expected::james(7, 5, false).unwrap();
        assert_eq!(r.mismatches(&e), Vec::<&str>::new());
        let v = report_json(&r, Some(&e));
        assert_eq!(v["consistent"], Value::Bool(true));
        assert_eq!(v["et_class"], Value::String("5*".into()));
    }

    #[test]
    fn biggs_report_keys() {
        let r = MapReport::analyze(&biggs_map(7, 3).unwrap().to_flag_map());
        let v = r.to_value();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!((r.v, r.e, r.f, r.chi), (7, 21, 14, 0));
        assert_eq!(r.genus_or_crosscaps, Some(1));
        assert!(r.arc_transitive && !r.flags_transitive);
    }

    #[test]
    fn boundary_report_has_nulls() {
        let m = FlagMap::new(vec![1, 0], vec![0, 1], vec![0, 1]).unwrap();
        let v = MapReport::analyze(&m).to_value();
        assert_eq!(v["genus_or_crosscaps"], Value::Null);
        assert_eq!(v["face_sizes"], Value::Null);
        assert_eq!(v["has_boundary"], Value::Bool(true));
    }
}
