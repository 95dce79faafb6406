//! C ABI over `etmaps`.
//!
//! Maps are opaque [`EtmapsMap`] handles released with
//! [`etmaps_map_free`]. Fallible calls return an [`EtmapsStatus`] and write
//! their result through an out-pointer; on failure
//! [`etmaps_last_error`] describes what went wrong. Strings returned as
//! `char *` are owned by the caller and released with
//! [`etmaps_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use etmaps::classify::{aut_order, et_class};
use etmaps::construct::formulas::Expected;
use etmaps::construct::{biggs_map, james_map, k6_regular_pair, ConstructError};
use etmaps::flagmap::{parse_flagmap, write_flagmap, FlagMap, MapError};
use etmaps::report::{report_json, MapReport};

/// Opaque map handle.
pub struct EtmapsMap {
    map: FlagMap,
    expected: Option<Expected>,
}

#[repr(C)]
#[allow(non_camel_case_types)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EtmapsStatus {
    ETMAPS_OK = 0,
    ETMAPS_NULL_POINTER = 1,
    ETMAPS_INVALID_ARGUMENT = 2,
    ETMAPS_NOT_PRIME_POWER = 3,
    ETMAPS_PARSE_ERROR = 4,
    /// The operation needs a map without boundary.
    ETMAPS_HAS_BOUNDARY = 5,
    ETMAPS_PANIC = 6,
}

use EtmapsStatus::*;

/// Orbit counts of a map.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EtmapsCounts {
    pub flags: u64,
    pub vertices: u64,
    pub edges: u64,
    pub faces: u64,
    pub petrie: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let s = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(s));
}

fn fail(status: EtmapsStatus, msg: impl Into<String>) -> EtmapsStatus {
    set_error(msg);
    status
}

fn construct_status(e: ConstructError) -> EtmapsStatus {
    let status = match e {
        ConstructError::NotPrimePower(_) => ETMAPS_NOT_PRIME_POWER,
        _ => ETMAPS_INVALID_ARGUMENT,
    };
    fail(status, e.to_string())
}

fn map_status(e: MapError) -> EtmapsStatus {
    let status = match e {
        MapError::Parse { .. } | MapError::Invalid(_) => ETMAPS_PARSE_ERROR,
        MapError::HasBoundary | MapError::GenusUndefined(_) => ETMAPS_HAS_BOUNDARY,
        _ => ETMAPS_INVALID_ARGUMENT,
    };
    fail(status, e.to_string())
}

/// Runs `f`, turning panics into `ETMAPS_PANIC`.
fn guard(f: impl FnOnce() -> EtmapsStatus) -> EtmapsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => {
            if s == ETMAPS_OK {
                LAST_ERROR.with(|e| *e.borrow_mut() = None);
            }
            s
        }
        Err(_) => fail(ETMAPS_PANIC, "internal error"),
    }
}

unsafe fn emit_map(
    out: *mut *mut EtmapsMap,
    map: FlagMap,
    expected: Option<Expected>,
) -> EtmapsStatus {
    if out.is_null() {
        return fail(ETMAPS_NULL_POINTER, "null output pointer");
    }
    *out = Box::into_raw(Box::new(EtmapsMap { map, expected }));
    ETMAPS_OK
}

unsafe fn handle<'a>(m: *const EtmapsMap) -> Option<&'a EtmapsMap> {
    m.as_ref()
}

fn to_c_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// The message of the last failed call on this thread, or null. Valid
/// until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn etmaps_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// The Biggs map `M_n(c)`; `c` is a field element index.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_biggs(n: u64, c: u32, out: *mut *mut EtmapsMap) -> EtmapsStatus {
    guard(|| match biggs_map(n, c) {
        Ok(om) => emit_map(out, om.to_flag_map(), Expected::biggs(n, false).ok()),
        Err(e) => construct_status(e),
    })
}

/// The James map `M_n(c, j)`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_james(
    n: u64,
    c: u32,
    j: i64,
    out: *mut *mut EtmapsMap,
) -> EtmapsStatus {
    guard(|| match james_map(n, c, j) {
        Ok(om) => emit_map(out, om.to_flag_map(), Expected::james(n, j, false).ok()),
        Err(e) => construct_status(e),
    })
}

/// The regular maps on `K6`: `which = 0` for `{3,5}_5`, `1` for `{5,5}_3`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_k6(which: u32, out: *mut *mut EtmapsMap) -> EtmapsStatus {
    guard(|| {
        let (a, b) = k6_regular_pair();
        match which {
            0 => emit_map(out, a, Some(Expected::k6(true))),
            1 => emit_map(out, b, Some(Expected::k6(false))),
            _ => fail(
                ETMAPS_INVALID_ARGUMENT,
                format!("which must be 0 or 1, got {which}"),
            ),
        }
    })
}

/// Parses a map in `flagmap v1` text format.
///
/// # Safety
/// `text` must be null or a nul-terminated string; `out` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_parse(
    text: *const c_char,
    out: *mut *mut EtmapsMap,
) -> EtmapsStatus {
    guard(|| {
        if text.is_null() {
            return fail(ETMAPS_NULL_POINTER, "null text");
        }
        let Ok(s) = CStr::from_ptr(text).to_str() else {
            return fail(ETMAPS_PARSE_ERROR, "text is not UTF-8");
        };
        match parse_flagmap(s) {
            Ok(m) => emit_map(out, m, None),
            Err(e) => map_status(e),
        }
    })
}

/// Releases a map. Null is ignored.
///
/// # Safety
/// `m` must be null or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn etmaps_map_free(m: *mut EtmapsMap) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn etmaps_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// The map in `flagmap v1` text format, or null for a null handle.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn etmaps_to_text(m: *const EtmapsMap) -> *mut c_char {
    match handle(m) {
        Some(h) => to_c_string(write_flagmap(&h.map)),
        None => {
            set_error("null map");
            ptr::null_mut()
        }
    }
}

/// The dual map, a new handle.
///
/// # Safety
/// `m` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_dual(
    m: *const EtmapsMap,
    out: *mut *mut EtmapsMap,
) -> EtmapsStatus {
    guard(|| match handle(m) {
        Some(h) => emit_map(out, h.map.dual(), h.expected.as_ref().map(Expected::dual)),
        None => fail(ETMAPS_NULL_POINTER, "null map"),
    })
}

/// The Petrie dual, a new handle.
///
/// # Safety
/// `m` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_petrie_dual(
    m: *const EtmapsMap,
    out: *mut *mut EtmapsMap,
) -> EtmapsStatus {
    guard(|| match handle(m) {
        // Formula values are only tracked through the constructors.
        Some(h) => emit_map(out, h.map.petrie_dual(), None),
        None => fail(ETMAPS_NULL_POINTER, "null map"),
    })
}

/// # Safety
/// `m` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_counts(
    m: *const EtmapsMap,
    out: *mut EtmapsCounts,
) -> EtmapsStatus {
    guard(|| {
        let (Some(h), false) = (handle(m), out.is_null()) else {
            return fail(ETMAPS_NULL_POINTER, "null argument");
        };
        let c = h.map.counts();
        *out = EtmapsCounts {
            flags: h.map.n_flags() as u64,
            vertices: c.vertices as u64,
            edges: c.edges as u64,
            faces: c.faces as u64,
            petrie: c.petrie as u64,
        };
        ETMAPS_OK
    })
}

/// Euler characteristic `V - E + F`.
///
/// # Safety
/// `m` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_chi(m: *const EtmapsMap, out: *mut i64) -> EtmapsStatus {
    guard(|| {
        let (Some(h), false) = (handle(m), out.is_null()) else {
            return fail(ETMAPS_NULL_POINTER, "null argument");
        };
        *out = h.map.euler_characteristic();
        ETMAPS_OK
    })
}

/// Genus of an orientable map, crosscap number of a non-orientable one;
/// `ETMAPS_HAS_BOUNDARY` for maps with boundary.
///
/// # Safety
/// `m` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_genus_or_crosscaps(
    m: *const EtmapsMap,
    out: *mut i64,
) -> EtmapsStatus {
    guard(|| {
        let (Some(h), false) = (handle(m), out.is_null()) else {
            return fail(ETMAPS_NULL_POINTER, "null argument");
        };
        match h.map.genus_or_crosscaps() {
            Ok(g) => {
                *out = g;
                ETMAPS_OK
            }
            Err(e) => map_status(e),
        }
    })
}

/// # Safety
/// `m` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_is_orientable(m: *const EtmapsMap, out: *mut bool) -> EtmapsStatus {
    guard(|| {
        let (Some(h), false) = (handle(m), out.is_null()) else {
            return fail(ETMAPS_NULL_POINTER, "null argument");
        };
        *out = h.map.is_orientable();
        ETMAPS_OK
    })
}

/// Order of the automorphism group.
///
/// # Safety
/// `m` must be null or a live handle; `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn etmaps_aut_order(m: *const EtmapsMap, out: *mut u64) -> EtmapsStatus {
    guard(|| {
        let (Some(h), false) = (handle(m), out.is_null()) else {
            return fail(ETMAPS_NULL_POINTER, "null argument");
        };
        *out = aut_order(&h.map) as u64;
        ETMAPS_OK
    })
}

/// Edge-transitivity class label such as `"2Pex"`, or null for a null
/// handle. The string is static and must not be freed.
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn etmaps_et_class(m: *const EtmapsMap) -> *const c_char {
    let Some(h) = handle(m) else {
        set_error("null map");
        return ptr::null();
    };
    let label = et_class(&h.map).label();
    // Labels are a fixed set; intern them once.
    static LABELS: std::sync::OnceLock<Vec<(&'static str, CString)>> = std::sync::OnceLock::new();
    let labels = LABELS.get_or_init(|| {
        etmaps::classify::EtClass::PROPER
            .iter()
            .chain([&etmaps::classify::EtClass::NotEdgeTransitive])
            .map(|c| (c.label(), CString::new(c.label()).unwrap()))
            .collect()
    });
    labels
        .iter()
        .find(|(l, _)| *l == label)
        .map_or(ptr::null(), |(_, s)| s.as_ptr())
}

/// The JSON report, including formula values for maps made by the
/// constructors. Caller frees with [`etmaps_string_free`].
///
/// # Safety
/// `m` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn etmaps_report_json(m: *const EtmapsMap) -> *mut c_char {
    let Some(h) = handle(m) else {
        set_error("null map");
        return ptr::null_mut();
    };
    match catch_unwind(AssertUnwindSafe(|| {
        let r = MapReport::analyze(&h.map);
        serde_json::to_string(&report_json(&r, h.expected.as_ref())).expect("json")
    })) {
        Ok(s) => to_c_string(s),
        Err(_) => {
            set_error("internal error");
            ptr::null_mut()
        }
    }
}
