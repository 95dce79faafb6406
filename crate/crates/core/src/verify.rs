//! The acceptance checks, as library functions shared by `etmaps verify`
//! and the test suite. Each returns a [`CriterionResult`] listing every
//! failed assertion instead of stopping at the first.

use std::time::{Duration, Instant};

use serde::Serialize;

use crate::census::{boundary_census, run_census, verify_classification, CensusConfig};
use crate::classify::{basic_premap_catalog, et_class, one_edge_maps, quotient_premap, EtClass};
use crate::construct::formulas::Expected;
use crate::construct::{
    biggs_census, biggs_map, expected_biggs_count, expected_james_count, james_census, james_map,
    k6_regular_pair,
};
use crate::field::Field;
use crate::flagmap::{FlagMap, OmegaOp};
use crate::report::MapReport;

pub const BIGGS_NS: [u64; 11] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17];
pub const JAMES_NS: [u64; 5] = [7, 11, 19, 23, 27];
/// Time limit for the single-threaded full census at n = 5.
pub const CENSUS_5_LIMIT: Duration = Duration::from_secs(120);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    /// Nothing in range of `max_n`.
    Skip,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub status: Status,
    pub notes: Vec<String>,
    pub failures: Vec<String>,
}

impl CriterionResult {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn line(&self) -> String {
        let tag = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        };
        format!("criterion {} [{tag}] {}", self.id, self.title)
    }
}

struct Checker {
    id: u8,
    title: &'static str,
    notes: Vec<String>,
    failures: Vec<String>,
    checked: usize,
}

impl Checker {
    fn new(id: u8, title: &'static str) -> Checker {
        Checker {
            id,
            title,
            notes: Vec::new(),
            failures: Vec::new(),
            checked: 0,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn note(&mut self, s: String) {
        self.notes.push(s);
    }

    fn finish(self) -> CriterionResult {
        let status = if !self.failures.is_empty() {
            Status::Fail
        } else if self.checked == 0 {
            Status::Skip
        } else {
            Status::Pass
        };
        CriterionResult {
            id: self.id,
            title: self.title,
            status,
            notes: self.notes,
            failures: self.failures,
        }
    }
}

fn check_expected(ck: &mut Checker, name: &str, m: &FlagMap, e: &Expected) -> MapReport {
    let r = MapReport::analyze(m);
    let bad = r.mismatches(e);
    ck.check(bad.is_empty(), || {
        format!("{name}: formula mismatch in {bad:?}")
    });
    r
}

/// Biggs maps: census size, completeness, orientability and the closed
/// formulas for genus, type, automorphisms and class.
pub fn criterion_1(max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(1, "Biggs maps M_n(c)");
    for n in BIGGS_NS.into_iter().filter(|&n| n <= max_n) {
        let census = match biggs_census(n) {
            Ok(c) => c,
            Err(e) => {
                ck.check(false, || format!("n={n}: {e}"));
                continue;
            }
        };
        let want = expected_biggs_count(n).unwrap_or(0) as usize;
        ck.check(census.len() == want, || {
            format!("n={n}: {} maps, expected {want}", census.len())
        });
        let e = Expected::biggs(n, false).expect("prime power");
        for entry in &census {
            let name = format!("M_{n}({})", entry.c);
            let m = entry.map.to_flag_map();
            ck.check(m.is_complete(n as usize), || format!("{name}: not K_{n}"));
            ck.check(m.is_orientable(), || format!("{name}: not orientable"));
            check_expected(&mut ck, &name, &m, &e);
        }
        ck.note(format!("n={n}: {} maps", census.len()));
    }
    ck.finish()
}

/// Petrie duals of Biggs maps.
pub fn criterion_2(max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(2, "Petrie duals of Biggs maps");
    for n in BIGGS_NS.into_iter().filter(|&n| (3..=max_n).contains(&n)) {
        let Ok(census) = biggs_census(n) else {
            ck.check(false, || format!("n={n}: census failed"));
            continue;
        };
        let e = Expected::biggs(n, true).expect("n >= 3");
        for entry in &census {
            let name = format!("P(M_{n}({}))", entry.c);
            let m = entry.map.to_flag_map();
            let p = m.petrie_dual();
            ck.check(!p.is_orientable(), || format!("{name}: orientable"));
            ck.check(p.underlying_graph() == m.underlying_graph(), || {
                format!("{name}: underlying graph changed")
            });
            let r = check_expected(&mut ck, &name, &p, &e);
            let original = crate::classify::aut_order(&m);
            ck.check(r.aut_order == original, || {
                format!("{name}: aut order {} vs {original}", r.aut_order)
            });
        }
    }
    ck.finish()
}

/// James maps and their Petrie duals.
pub fn criterion_3(max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(3, "James maps M_n(c,j) and Petrie duals");
    for n in JAMES_NS.into_iter().filter(|&n| n <= max_n) {
        let census = match james_census(n) {
            Ok(c) => c,
            Err(e) => {
                ck.check(false, || format!("n={n}: {e}"));
                continue;
            }
        };
        let want = expected_james_count(n).unwrap_or(0) as usize;
        ck.check(census.len() == want, || {
            format!("n={n}: {} maps, expected {want}", census.len())
        });
        for entry in &census {
            let j = entry.j.expect("James entries carry j") as i64;
            let name = format!("M_{n}({},{j})", entry.c);
            let m = entry.map.to_flag_map();
            let r = check_expected(&mut ck, &name, &m, &Expected::james(n, j, false).unwrap());
            ck.check(r.vertex_transitive, || {
                format!("{name}: not vertex-transitive")
            });
            ck.check(!r.arc_transitive, || format!("{name}: arc-transitive"));
            ck.check(!r.face_transitive, || format!("{name}: face-transitive"));
            ck.check(r.face_orbit_sizes.len() == 2, || {
                format!("{name}: face orbits {:?}", r.face_orbit_sizes)
            });
            let pname = format!("P({name})");
            check_expected(
                &mut ck,
                &pname,
                &m.petrie_dual(),
                &Expected::james(n, j, true).unwrap(),
            );
        }
        ck.note(format!("n={n}: {} maps", census.len()));
    }
    ck.finish()
}

/// The regular pair on `K6`.
pub fn criterion_4(max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(4, "the K6 pair {3,5}_5 and {5,5}_3");
    if max_n < 6 {
        return ck.finish();
    }
    let (a, b) = k6_regular_pair();
    for (m, first, name) in [(&a, true, "{3,5}_5"), (&b, false, "{5,5}_3")] {
        let r = check_expected(&mut ck, name, m, &Expected::k6(first));
        ck.check(m.is_complete(6), || format!("{name}: not K6"));
        ck.check(r.flags_transitive, || format!("{name}: not regular"));
    }
    ck.check(a.petrie_dual().isomorphic(&b).is_some(), || {
        "P({3,5}_5) is not {5,5}_3".into()
    });
    ck.check(b.petrie_dual().isomorphic(&a).is_some(), || {
        "P({5,5}_3) is not {3,5}_5".into()
    });
    ck.finish()
}

/// Census against construction at n = 3, 4, 5 and orientable n = 6, and
/// the single-threaded n = 5 runtime.
pub fn criterion_5(max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(5, "census oracle agrees with construction");
    for n in [3usize, 4, 5, 6].into_iter().filter(|&n| n as u64 <= max_n) {
        match verify_classification(n, false) {
            Ok(r) => {
                let want = if n == 6 { 0 } else { 2 };
                ck.check(r.census_classes == want, || {
                    format!(
                        "n={n}: {} census classes, expected {want}",
                        r.census_classes
                    )
                });
                ck.check(r.matches, || {
                    format!(
                        "n={n}: missing {:?}, unexpected {:?}",
                        r.missing, r.unexpected
                    )
                });
                ck.note(format!(
                    "n={n}{}: candidates={} classes={}",
                    if r.orientable_only { " orientable" } else { "" },
                    r.candidates,
                    r.census_classes
                ));
            }
            Err(e) => ck.check(false, || format!("n={n}: {e}")),
        }
    }
    if max_n >= 5 {
        let mut cfg = CensusConfig::new(5, false);
        cfg.jobs = Some(1);
        let start = Instant::now();
        let out = run_census(&cfg);
        let took = start.elapsed();
        ck.check(out.is_ok() && took < CENSUS_5_LIMIT, || {
            format!("n=5 single-threaded census took {took:.1?}")
        });
        ck.note(format!("n=5 single-threaded census: {took:.2?}"));
    }
    ck.finish()
}

/// Boundary embeddings of `K_2` and `K_3`.
pub fn criterion_6(max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(6, "boundary embeddings of K_2 and K_3");
    let want = [
        (2, vec![EtClass::One, EtClass::One, EtClass::Two]),
        (3, vec![EtClass::One, EtClass::TwoStar, EtClass::TwoP]),
    ];
    for (n, classes) in want.into_iter().filter(|(n, _)| *n as u64 <= max_n) {
        match boundary_census(n) {
            Ok(maps) => {
                let mut got: Vec<EtClass> = maps.iter().map(|(_, c)| *c).collect();
                got.sort();
                ck.check(got == classes, || format!("n={n}: classes {got:?}"));
            }
            Err(e) => ck.check(false, || format!("n={n}: {e}")),
        }
    }
    ck.finish()
}

/// Every constructed map with `n <= 9`: Biggs and James censuses, their
/// Petrie duals, and the `K6` pair.
pub fn constructed_pool() -> Vec<(String, FlagMap)> {
    let mut pool = Vec::new();
    for n in [2u64, 3, 4, 5, 7, 8, 9] {
        for e in biggs_census(n).expect("prime powers") {
            let m = e.map.to_flag_map();
            if n >= 3 {
                pool.push((format!("P(M_{n}({}))", e.c), m.petrie_dual()));
            }
            pool.push((format!("M_{n}({})", e.c), m));
        }
    }
    for e in james_census(7).expect("7 = 3 mod 4") {
        let j = e.j.unwrap_or_default();
        let m = e.map.to_flag_map();
        pool.push((format!("P(M_7({},{j}))", e.c), m.petrie_dual()));
        pool.push((format!("M_7({},{j})", e.c), m));
    }
    let (a, b) = k6_regular_pair();
    pool.push(("{3,5}_5".into(), a));
    pool.push(("{5,5}_3".into(), b));
    pool
}

/// Laws of the map operations and their action on classes.
pub fn criterion_7(_max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(7, "duality operations on a pool of constructed maps");
    let pool = constructed_pool();
    ck.check(pool.len() >= 20, || {
        format!("pool has only {} maps", pool.len())
    });
    let dp = OmegaOp::DUAL.then(OmegaOp::PETRIE);
    for (name, m) in &pool {
        ck.check(m.dual().dual() == *m, || format!("{name}: DD != id"));
        ck.check(
            m.petrie_dual().petrie_dual().isomorphic(m).is_some(),
            || format!("{name}: PP not isomorphic to id"),
        );
        let thrice = m.omega_apply(dp).omega_apply(dp).omega_apply(dp);
        ck.check(thrice.isomorphic(m).is_some(), || {
            format!("{name}: (DP)^3 not isomorphic to id")
        });
        let c = et_class(m);
        ck.check(et_class(&m.dual()) == c.dual(), || {
            format!("{name}: class of dual")
        });
        ck.check(et_class(&m.petrie_dual()) == c.petrie(), || {
            format!("{name}: class of Petrie dual")
        });
    }
    ck.note(format!("pool of {} maps", pool.len()));
    ck.finish()
}

/// Oriented isomorphism: Galois conjugates agree, other primitive
/// elements do not, and chiral pairs are mirror images.
pub fn criterion_8(max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(8, "oriented isomorphism classes");
    if max_n >= 9 {
        let f9 = Field::of_order(9).expect("9 = 3^2");
        let c = f9.primitive_elements()[0];
        let m = biggs_map(9, c.index()).unwrap();
        let orbit = &f9.galois_orbits(&[c])[0];
        let c3 = f9.pow(c, 3);
        ck.check(orbit.contains(&c3), || {
            "c^3 is not a Galois conjugate of c".into()
        });
        ck.check(
            m.oriented_isomorphic(&biggs_map(9, c3.index()).unwrap())
                .unwrap(),
            || format!("M_9({c}) and M_9({c3}) are not oriented-isomorphic"),
        );
        for other in f9
            .primitive_elements()
            .into_iter()
            .filter(|x| !orbit.contains(x))
        {
            let o = biggs_map(9, other.index()).unwrap();
            ck.check(!m.oriented_isomorphic(&o).unwrap(), || {
                format!("M_9({c}) and M_9({other}) are oriented-isomorphic")
            });
        }
    }
    if max_n >= 7 {
        let m755 = james_map(7, 5, 5).unwrap();
        let m733 = james_map(7, 3, 3).unwrap();
        ck.check(
            m755.mirror().unwrap().oriented_isomorphic(&m733).unwrap(),
            || "mirror(M_7(5,5)) is not M_7(3,3)".into(),
        );
    }
    if max_n >= 5 {
        let a = biggs_map(5, 2).unwrap();
        let b = biggs_map(5, 3).unwrap();
        ck.check(!a.oriented_isomorphic(&b).unwrap(), || {
            "M_5(2) and M_5(3) oriented-isomorphic".into()
        });
        ck.check(
            a.to_flag_map().isomorphic(&b.to_flag_map()).is_some(),
            || "M_5(2) and M_5(3) differ as flag systems".into(),
        );
    }
    ck.finish()
}

/// The fourteen one-edge maps, and quotients of constructed maps.
pub fn criterion_9(_max_n: u64) -> CriterionResult {
    let mut ck = Checker::new(9, "one-edge maps and quotient premaps");
    let count = one_edge_maps().len();
    ck.check(count == 14, || format!("{count} one-edge maps"));
    let catalog = basic_premap_catalog();
    for (name, m) in constructed_pool() {
        let c = et_class(&m);
        let q = quotient_premap(&m);
        let entry = catalog.iter().find(|(k, _)| *k == c);
        ck.check(
            entry.is_some_and(|(_, e)| e.isomorphic(&q).is_some()),
            || format!("{name}: quotient is not the catalog entry for {c}"),
        );
    }
    ck.finish()
}

pub type Criterion = fn(u64) -> CriterionResult;

pub const CRITERIA: [Criterion; 9] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
];

pub fn run_all(max_n: u64) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|c| c(max_n)).collect()
}
