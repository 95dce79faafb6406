//! Brute-force census of embeddings of `K_n`: enumerate candidates, keep
//! the edge-transitive ones, deduplicate, and compare with the constructed
//! families.

mod boundary;
mod space;

pub use boundary::boundary_census;
pub use space::{Mode, Space, MAX_N};

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::{et_class, is_edge_transitive, EtClass};
use crate::construct::{biggs_census, james_census, k6_regular_pair};
use crate::flagmap::{Certificate, FlagMap};

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("n = {0} is beyond the census range (at most {MAX_N})")]
    TooLarge(usize),
    #[error("n = {0} is below the census range (at least 3)")]
    TooSmall(usize),
    #[error("{0}")]
    Unsupported(String),
    #[error("the full n = 6 census takes hours; enable the long run explicitly")]
    LongRunNotEnabled,
    #[error("shard {index}/{count} is invalid")]
    BadShard { index: usize, count: usize },
    #[error("checkpoint {path}: {msg}")]
    Checkpoint { path: PathBuf, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Default)]
pub struct CensusConfig {
    pub n: usize,
    pub orientable_only: bool,
    /// Cross-check mode without the symmetry reductions (n <= 4).
    pub unnormalized: bool,
    /// Permits the full non-orientable n = 6 run.
    pub allow_long: bool,
    /// Worker threads; `None` uses rayon's default.
    pub jobs: Option<usize>,
    /// `(index, count)`: run only units with `unit % count == index`.
    pub shard: Option<(usize, usize)>,
    /// Directory of per-unit checkpoint files; finished units are skipped.
    pub resume: Option<PathBuf>,
}

impl CensusConfig {
    pub fn new(n: usize, orientable_only: bool) -> CensusConfig {
        CensusConfig {
            n,
            orientable_only,
            ..CensusConfig::default()
        }
    }

    fn mode(&self) -> Mode {
        Mode {
            orientable_only: self.orientable_only,
            unnormalized: self.unnormalized,
        }
    }

    fn check(&self) -> Result<(), CensusError> {
        if self.n > MAX_N {
            return Err(CensusError::TooLarge(self.n));
        }
        if self.n < 3 {
            return Err(CensusError::TooSmall(self.n));
        }
        if self.unnormalized && self.n > 4 {
            return Err(CensusError::Unsupported(
                "the unnormalized cross-check is limited to n <= 4".into(),
            ));
        }
        if self.n == 6 && !self.orientable_only && !self.allow_long {
            return Err(CensusError::LongRunNotEnabled);
        }
        if let Some((index, count)) = self.shard {
            if count == 0 || index >= count {
                return Err(CensusError::BadShard { index, count });
            }
        }
        Ok(())
    }
}

/// One edge-transitive class found by the census.
#[derive(Debug, Clone)]
pub struct CensusMap {
    pub certificate: Certificate,
    pub map: FlagMap,
    pub class: EtClass,
}

#[derive(Debug, Clone)]
pub struct CensusOutcome {
    pub n: usize,
    pub orientable_only: bool,
    /// Candidates examined, including those restored from checkpoints.
    pub candidates: u64,
    pub units_total: u64,
    /// Units covered by this run, computed or restored.
    pub units_done: u64,
    /// Units computed by this run rather than restored from checkpoints.
    pub units_computed: u64,
    /// Sorted by certificate.
    pub maps: Vec<CensusMap>,
}

impl CensusOutcome {
    pub fn summary(&self) -> String {
        format!(
            "n={} candidates={} edge_transitive_classes={}",
            self.n,
            self.candidates,
            self.maps.len()
        )
    }
}

/// What one work unit produced; also the checkpoint file contents.
#[derive(Debug, Clone, Serialize, Deserialize)]
struct UnitResult {
    n: usize,
    orientable_only: bool,
    unnormalized: bool,
    unit: u64,
    candidates: u64,
    certificates: Vec<String>,
}

fn run_unit(space: &Space, unit: u64) -> UnitResult {
    let mut certs: BTreeSet<Certificate> = BTreeSet::new();
    let mut candidates = 0;
    for ri in space.unit_range(unit) {
        let rots = space.rotations(ri);
        for mask in 0..space.signature_count() {
            candidates += 1;
            let tw = space.twists(mask);
            if !space.uniform_face_profile(&rots, &tw) {
                continue;
            }
            let m = space.oriented_map(&rots, &tw).to_flag_map();
            if is_edge_transitive(&m) {
                certs.insert(m.canonical_form());
            }
        }
    }
    UnitResult {
        n: space.n,
        orientable_only: space.mode.orientable_only,
        unnormalized: space.mode.unnormalized,
        unit,
        candidates,
        certificates: certs.iter().map(Certificate::to_hex).collect(),
    }
}

fn checkpoint_path(dir: &Path, unit: u64) -> PathBuf {
    dir.join(format!("unit-{unit:06}.json"))
}

fn load_checkpoint(path: &Path, space: &Space) -> Result<Option<UnitResult>, CensusError> {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let bad = |msg: String| CensusError::Checkpoint {
        path: path.to_path_buf(),
        msg,
    };
    let r: UnitResult = serde_json::from_str(&text).map_err(|e| bad(e.to_string()))?;
    if r.n != space.n
        || r.orientable_only != space.mode.orientable_only
        || r.unnormalized != space.mode.unnormalized
    {
        return Err(bad("written by a census with different parameters".into()));
    }
    Ok(Some(r))
}

fn save_checkpoint(path: &Path, r: &UnitResult) -> Result<(), CensusError> {
    let tmp = path.with_extension("tmp");
    fs::write(
        &tmp,
        serde_json::to_string(r).expect("unit results serialize"),
    )?;
    fs::rename(&tmp, path)?;
    Ok(())
}

/// Runs (a shard of) the census.
pub fn run_census(cfg: &CensusConfig) -> Result<CensusOutcome, CensusError> {
    cfg.check()?;
    let space = Space::new(cfg.n, cfg.mode());
    if let Some(dir) = &cfg.resume {
        fs::create_dir_all(dir)?;
    }
    let units: Vec<u64> = (0..space.unit_count())
        .filter(|u| cfg.shard.is_none_or(|(i, m)| u % m as u64 == i as u64))
        .collect();
    let done = AtomicU64::new(0);
    let work = || -> Result<Vec<UnitResult>, CensusError> {
        units
            .par_iter()
            .map(|&unit| {
                let path = cfg.resume.as_deref().map(|d| checkpoint_path(d, unit));
                if let Some(p) = &path {
                    if let Some(r) = load_checkpoint(p, &space)? {
                        return Ok(r);
                    }
                }
                let r = run_unit(&space, unit);
                if let Some(p) = &path {
                    save_checkpoint(p, &r)?;
                }
                done.fetch_add(1, Ordering::Relaxed);
                Ok(r)
            })
            .collect()
    };
    let results = match cfg.jobs {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k)
            .build()?
            .install(work)?,
        None => work()?,
    };
    let mut certs: BTreeSet<Certificate> = BTreeSet::new();
    let mut candidates = 0;
    for r in &results {
        candidates += r.candidates;
        for h in &r.certificates {
            let c = Certificate::from_hex(h).ok_or_else(|| CensusError::Checkpoint {
                path: cfg.resume.clone().unwrap_or_default(),
                msg: format!("bad certificate in unit {}", r.unit),
            })?;
            certs.insert(c);
        }
    }
    let maps = certs
        .into_iter()
        .map(|certificate| {
            let map = certificate
                .to_flag_map()
                .expect("census certificates decode");
            let class = et_class(&map);
            CensusMap {
                certificate,
                map,
                class,
            }
        })
        .collect();
    Ok(CensusOutcome {
        n: cfg.n,
        orientable_only: cfg.orientable_only,
        candidates,
        units_total: space.unit_count(),
        units_done: results.len() as u64,
        units_computed: done.into_inner(),
        maps,
    })
}

/// Every candidate embedding (rotation at vertex 0 fixed, signs on its
/// edges positive), as flag maps.
pub fn enumerate_embeddings(
    n: usize,
    orientable_only: bool,
) -> Result<impl Iterator<Item = FlagMap>, CensusError> {
    if n > MAX_N {
        return Err(CensusError::TooLarge(n));
    }
    if n < 3 {
        return Err(CensusError::TooSmall(n));
    }
    let space = Space::new(
        n,
        Mode {
            orientable_only,
            unnormalized: false,
        },
    );
    let all: Vec<u64> = (0..space.rotation_count()).collect();
    Ok(all.into_iter().flat_map(move |ri| {
        let rots = space.rotations(ri);
        let space = space.clone();
        (0..space.signature_count())
            .map(move |mask| space.oriented_map(&rots, &space.twists(mask)).to_flag_map())
    }))
}

/// Edge-transitive embeddings of `K_n`, one per isomorphism class, sorted
/// by certificate.
pub fn edge_transitive_census(
    n: usize,
    orientable_only: bool,
) -> Result<Vec<(FlagMap, EtClass)>, CensusError> {
    let out = run_census(&CensusConfig::new(n, orientable_only))?;
    Ok(out.maps.into_iter().map(|m| (m.map, m.class)).collect())
}

/// The constructed edge-transitive embeddings of `K_n`: Biggs and James
/// maps with their Petrie duals, and the pair on `K6`; one per isomorphism
/// class, keyed by certificate.
pub fn constructed_set(
    n: usize,
    orientable_only: bool,
) -> BTreeMap<Certificate, (String, FlagMap)> {
    let mut set = BTreeMap::new();
    let mut add = |name: String, m: FlagMap| {
        if !orientable_only || m.is_orientable() {
            set.entry(m.canonical_form()).or_insert((name, m));
        }
    };
    let nu = n as u64;
    if let Ok(maps) = biggs_census(nu) {
        for e in maps {
            let m = e.map.to_flag_map();
            if n >= 3 {
                add(format!("P(M_{n}({}))", e.c), m.petrie_dual());
            }
            add(format!("M_{n}({})", e.c), m);
        }
    }
    if let Ok(maps) = james_census(nu) {
        for e in maps {
            let j = e.j.unwrap_or_default();
            let m = e.map.to_flag_map();
            add(format!("P(M_{n}({},{j}))", e.c), m.petrie_dual());
            add(format!("M_{n}({},{j})", e.c), m);
        }
    }
    if n == 6 {
        let (a, b) = k6_regular_pair();
        add("{3,5}_5".into(), a);
        add("{5,5}_3".into(), b);
    }
    set
}

/// Census against construction for one `n`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub orientable_only: bool,
    pub candidates: u64,
    pub census_classes: usize,
    pub constructed_classes: usize,
    /// Constructed maps the census did not find.
    pub missing: Vec<String>,
    /// Census classes matching no constructed map, by certificate.
    pub unexpected: Vec<String>,
    pub matches: bool,
}

/// Runs the census for `n` (orientable-only at n = 6 unless `allow_long`)
/// and compares it with the constructed set. Discrepancies are reported,
/// not raised.
pub fn verify_classification(
    n: usize,
    allow_long: bool,
) -> Result<ClassificationReport, CensusError> {
    let orientable_only = n == 6 && !allow_long;
    let mut cfg = CensusConfig::new(n, orientable_only);
    cfg.allow_long = allow_long;
    let out = run_census(&cfg)?;
    let constructed = constructed_set(n, orientable_only);
    let found: BTreeSet<&Certificate> = out.maps.iter().map(|m| &m.certificate).collect();
    let missing: Vec<String> = constructed
        .iter()
        .filter(|(c, _)| !found.contains(c))
        .map(|(_, (name, _))| name.clone())
        .collect();
    let unexpected: Vec<String> = out
        .maps
        .iter()
        .filter(|m| !constructed.contains_key(&m.certificate))
        .map(|m| m.certificate.to_hex())
        .collect();
    Ok(ClassificationReport {
        n,
        orientable_only,
        candidates: out.candidates,
        census_classes: out.maps.len(),
        constructed_classes: constructed.len(),
        matches: missing.is_empty() && unexpected.is_empty(),
        missing,
        unexpected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_censuses() {
        let c3 = edge_transitive_census(3, false).unwrap();
        assert_eq!(c3.len(), 2);
        let mut chis: Vec<i64> = c3.iter().map(|(m, _)| m.euler_characteristic()).collect();
        chis.sort();
        assert_eq!(chis, vec![1, 2]);
        let c4 = edge_transitive_census(4, false).unwrap();
        assert_eq!(c4.len(), 2);
        assert!(c4.iter().all(|(_, c)| *c == EtClass::One));
    }

    #[test]
    fn enumeration_counts_and_validity() {
        assert_eq!(enumerate_embeddings(3, false).unwrap().count(), 2);
        assert_eq!(enumerate_embeddings(4, false).unwrap().count(), 64);
        assert_eq!(enumerate_embeddings(5, true).unwrap().count(), 1296);
        assert!(enumerate_embeddings(4, false)
            .unwrap()
            .all(|m| m.n_flags() == 24 && m.is_complete(4)));
        assert!(matches!(
            enumerate_embeddings(7, false),
            Err(CensusError::TooLarge(7))
        ));
    }

    #[test]
    fn unnormalized_agrees_at_n4() {
        let mut cfg = CensusConfig::new(4, false);
        let normal = run_census(&cfg).unwrap();
        cfg.unnormalized = true;
        let raw = run_census(&cfg).unwrap();
        assert_eq!(raw.candidates, 1024);
        let a: Vec<_> = normal.maps.iter().map(|m| &m.certificate).collect();
        let b: Vec<_> = raw.maps.iter().map(|m| &m.certificate).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn config_errors() {
        assert!(matches!(
            run_census(&CensusConfig::new(6, false)),
            Err(CensusError::LongRunNotEnabled)
        ));
        assert!(matches!(
            run_census(&CensusConfig::new(2, false)),
            Err(CensusError::TooSmall(2))
        ));
        let mut cfg = CensusConfig::new(5, false);
        cfg.unnormalized = true;
        assert!(matches!(run_census(&cfg), Err(CensusError::Unsupported(_))));
        cfg.unnormalized = false;
        cfg.shard = Some((3, 3));
        assert!(matches!(
            run_census(&cfg),
            Err(CensusError::BadShard { .. })
        ));
    }

    #[test]
    fn shards_and_checkpoints_merge() {
        let dir = tempfile::tempdir().unwrap();
        let whole = run_census(&CensusConfig::new(4, false)).unwrap();
        let mut cfg = CensusConfig::new(4, false);
        cfg.resume = Some(dir.path().to_path_buf());
        cfg.jobs = Some(2);
        for i in 0..3 {
            cfg.shard = Some((i, 3));
            run_census(&cfg).unwrap();
        }
        cfg.shard = None;
        let merged = run_census(&cfg).unwrap();
        assert_eq!(merged.units_computed, 0);
        assert_eq!(merged.units_done, merged.units_total);
        assert_eq!(merged.candidates, whole.candidates);
        let a: Vec<_> = whole.maps.iter().map(|m| &m.certificate).collect();
        let b: Vec<_> = merged.maps.iter().map(|m| &m.certificate).collect();
        assert_eq!(a, b);

        let mut other = CensusConfig::new(4, true);
        other.resume = Some(dir.path().to_path_buf());
        assert!(matches!(
            run_census(&other),
            Err(CensusError::Checkpoint { .. })
        ));
    }

    #[test]
    fn classification_matches_at_small_n() {
        for n in [3, 4] {
            let r = verify_classification(n, false).unwrap();
            assert!(r.matches, "{r:?}");
            assert_eq!(r.census_classes, 2);
        }
    }
}
