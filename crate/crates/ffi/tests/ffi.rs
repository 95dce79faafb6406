use std::ffi::{CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use etmaps_ffi::*;
use serde_json::Value;

unsafe fn last_error() -> String {
    let p = etmaps_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn take_string(p: *mut std::ffi::c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_string_lossy().into_owned();
    etmaps_string_free(p);
    s
}

#[test]
fn biggs_round_trip() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(etmaps_biggs(7, 3, &mut m), EtmapsStatus::ETMAPS_OK);
        let mut c = EtmapsCounts::default();
        assert_eq!(etmaps_counts(m, &mut c), EtmapsStatus::ETMAPS_OK);
        assert_eq!((c.flags, c.vertices, c.edges, c.faces), (84, 7, 21, 14));
        let mut chi = 99;
        assert_eq!(etmaps_chi(m, &mut chi), EtmapsStatus::ETMAPS_OK);
        assert_eq!(chi, 0);
        let mut g = 0;
        assert_eq!(
            etmaps_genus_or_crosscaps(m, &mut g),
            EtmapsStatus::ETMAPS_OK
        );
        assert_eq!(g, 1);
        let mut aut = 0;
        assert_eq!(etmaps_aut_order(m, &mut aut), EtmapsStatus::ETMAPS_OK);
        assert_eq!(aut, 42);
        assert_eq!(CStr::from_ptr(etmaps_et_class(m)).to_str().unwrap(), "2Pex");

        let text = CString::new(take_string(etmaps_to_text(m))).unwrap();
        let mut parsed = ptr::null_mut();
        assert_eq!(
            etmaps_parse(text.as_ptr(), &mut parsed),
            EtmapsStatus::ETMAPS_OK
        );
        let a: Value = serde_json::from_str(&take_string(etmaps_report_json(m))).unwrap();
        let b: Value = serde_json::from_str(&take_string(etmaps_report_json(parsed))).unwrap();
        assert_eq!(a["consistent"], true);
        assert_eq!(b.get("consistent"), None);
        assert_eq!(a["et_class"], b["et_class"]);
        assert_eq!(a["aut_order"], b["aut_order"]);
        etmaps_map_free(parsed);
        etmaps_map_free(m);
    }
}

#[test]
fn operations_and_k6() {
    unsafe {
        let mut a = ptr::null_mut();
        assert_eq!(etmaps_k6(0, &mut a), EtmapsStatus::ETMAPS_OK);
        let mut p = ptr::null_mut();
        assert_eq!(etmaps_petrie_dual(a, &mut p), EtmapsStatus::ETMAPS_OK);
        let mut chi = 0;
        etmaps_chi(p, &mut chi);
        assert_eq!(chi, -3);
        let mut orientable = true;
        assert_eq!(
            etmaps_is_orientable(p, &mut orientable),
            EtmapsStatus::ETMAPS_OK
        );
        assert!(!orientable);
        let mut d = ptr::null_mut();
        assert_eq!(etmaps_dual(a, &mut d), EtmapsStatus::ETMAPS_OK);
        let r: Value = serde_json::from_str(&take_string(etmaps_report_json(d))).unwrap();
        assert_eq!(r["consistent"], true);
        for m in [a, p, d] {
            etmaps_map_free(m);
        }
    }
}

#[test]
fn james_map_class() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(etmaps_james(7, 5, 5, &mut m), EtmapsStatus::ETMAPS_OK);
        assert_eq!(CStr::from_ptr(etmaps_et_class(m)).to_str().unwrap(), "5*");
        etmaps_map_free(m);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(
            etmaps_biggs(6, 2, &mut m),
            EtmapsStatus::ETMAPS_NOT_PRIME_POWER
        );
        assert!(m.is_null());
        assert!(last_error().contains("6 is not a prime power"));
        assert_eq!(
            etmaps_biggs(7, 2, &mut m),
            EtmapsStatus::ETMAPS_INVALID_ARGUMENT
        );
        assert_eq!(
            etmaps_james(7, 3, 1, &mut m),
            EtmapsStatus::ETMAPS_INVALID_ARGUMENT
        );
        assert_eq!(etmaps_k6(2, &mut m), EtmapsStatus::ETMAPS_INVALID_ARGUMENT);
        assert_eq!(
            etmaps_biggs(5, 2, ptr::null_mut()),
            EtmapsStatus::ETMAPS_NULL_POINTER
        );
        assert_eq!(
            etmaps_parse(ptr::null(), &mut m),
            EtmapsStatus::ETMAPS_NULL_POINTER
        );
        let bad = CString::new("flags 2\nr0 1 0\nr1 0 1\n").unwrap();
        assert_eq!(
            etmaps_parse(bad.as_ptr(), &mut m),
            EtmapsStatus::ETMAPS_PARSE_ERROR
        );
        let mut chi = 0;
        assert_eq!(
            etmaps_chi(ptr::null(), &mut chi),
            EtmapsStatus::ETMAPS_NULL_POINTER
        );
        assert!(etmaps_to_text(ptr::null()).is_null());
        assert!(etmaps_et_class(ptr::null()).is_null());

        // A free edge has boundary, so genus is undefined.
        let free = CString::new("flags 2\nr0 1 0\nr1 0 1\nr2 0 1\n").unwrap();
        assert_eq!(etmaps_parse(free.as_ptr(), &mut m), EtmapsStatus::ETMAPS_OK);
        assert!(etmaps_last_error().is_null());
        let mut g = 0;
        assert_eq!(
            etmaps_genus_or_crosscaps(m, &mut g),
            EtmapsStatus::ETMAPS_HAS_BOUNDARY
        );
        etmaps_map_free(m);
        etmaps_map_free(ptr::null_mut());
        etmaps_string_free(ptr::null_mut());
    }
}

const C_PROGRAM: &str = r#"
#include <stdio.h>
#include "etmaps.h"

int main(void) {
    EtmapsMap *m = NULL;
    if (etmaps_biggs(5, 2, &m) != ETMAPS_OK) return 1;
    int64_t chi = 1;
    uint64_t aut = 0;
    if (etmaps_chi(m, &chi) != ETMAPS_OK || chi != 0) return 2;
    if (etmaps_aut_order(m, &aut) != ETMAPS_OK || aut != 20) return 3;
    char *text = etmaps_to_text(m);
    if (!text) return 4;
    etmaps_string_free(text);
    printf("%s\n", etmaps_et_class(m));
    etmaps_map_free(m);
    if (etmaps_biggs(6, 2, &m) != ETMAPS_NOT_PRIME_POWER) return 5;
    printf("%s\n", etmaps_last_error());
    return 0;
}
"#;

/// Compiles a C program against the generated header and the static
/// library. Skipped when no C compiler is installed.
#[test]
fn c_program_links_against_staticlib() {
    if Command::new("cc").arg("--version").output().is_err() {
        eprintln!("no C compiler; skipping");
        return;
    }
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/<test binary>
    let profile_dir = std::env::current_exe()
        .unwrap()
        .parent()
        .unwrap()
        .parent()
        .unwrap()
        .to_path_buf();
    let lib = profile_dir.join("libetmaps_ffi.a");
    assert!(lib.exists(), "{} missing", lib.display());
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let src = dir.join("ffi_smoke.c");
    let exe = dir.join("ffi_smoke");
    std::fs::write(&src, C_PROGRAM).unwrap();
    let status = Command::new("cc")
        .arg("-std=c99")
        .arg("-Wall")
        .arg("-Werror")
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&src)
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .unwrap();
    assert!(status.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "2Pex\n6 is not a prime power\n");
}
