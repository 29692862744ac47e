use std::ffi::{CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use hypercert_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(hc_last_error()) }
        .to_string_lossy()
        .into_owned()
}

fn build(family: HcFamily, k: usize, n: usize) -> *mut HcHypergraph {
    let mut h = ptr::null_mut();
    assert_eq!(
        unsafe { hc_build(family, k, n, &mut h) },
        HcStatus::Ok,
        "{}",
        last_error()
    );
    h
}

#[test]
fn build_count_and_alpha() {
    let h = build(HcFamily::H2, 2, 3);
    let (mut nv, mut ne, mut u) = (0, 0, 0);
    let mut alpha = 0u64;
    unsafe {
        assert_eq!(hc_counts(h, &mut nv, &mut ne, &mut u), HcStatus::Ok);
        assert_eq!((nv, ne, u), (9, 9, 3));
        assert_eq!(hc_alpha(h, 64, &mut alpha), HcStatus::Ok);
        assert_eq!(alpha, 5);
        assert_eq!(hc_alpha(h, 4, &mut alpha), HcStatus::CeilingExceeded);
        hc_free(h);
    }
    assert!(last_error().contains("ceiling"));
}

#[test]
fn json_round_trip() {
    let h = build(HcFamily::Jk, 2, 3);
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(hc_to_json(h, &mut json), HcStatus::Ok);
        let mut back = ptr::null_mut();
        assert_eq!(hc_from_json(json, &mut back), HcStatus::Ok);
        let mut again = ptr::null_mut();
        assert_eq!(hc_to_json(back, &mut again), HcStatus::Ok);
        assert_eq!(CStr::from_ptr(json), CStr::from_ptr(again));
        hc_string_free(json);
        hc_string_free(again);
        hc_free(back);
        hc_free(h);
    }
}

#[test]
fn pattern_search() {
    let h = build(HcFamily::H2, 2, 3);
    let mut kind = HcSearch::Found;
    let mut witness = ptr::null_mut();
    unsafe {
        let p = CString::new("k4minus").unwrap();
        assert_eq!(
            hc_contains_pattern(h, p.as_ptr(), 0, &mut kind, &mut witness),
            HcStatus::Ok
        );
        assert_eq!(kind, HcSearch::NoCopy);
        assert!(witness.is_null());
        // consecutive edges of H2(3) share two vertices
        let p = CString::new("path:3").unwrap();
        assert_eq!(
            hc_contains_pattern(h, p.as_ptr(), 0, &mut kind, &mut witness),
            HcStatus::Ok
        );
        assert_eq!(kind, HcSearch::Found);
        assert!(CStr::from_ptr(witness)
            .to_str()
            .unwrap()
            .contains("vertex_map"));
        hc_string_free(witness);
        let p = CString::new("nonsense").unwrap();
        assert_eq!(
            hc_contains_pattern(h, p.as_ptr(), 0, &mut kind, ptr::null_mut()),
            HcStatus::InvalidArgument
        );
        hc_free(h);
    }
}

#[test]
fn errors_are_codes_not_crashes() {
    unsafe {
        let mut h = ptr::null_mut();
        assert_eq!(
            hc_build(HcFamily::H2, 2, 1, &mut h),
            HcStatus::InvalidArgument
        );
        assert!(h.is_null() && !last_error().is_empty());
        assert_eq!(
            hc_build(HcFamily::H2, 2, 3, ptr::null_mut()),
            HcStatus::NullPointer
        );
        assert_eq!(
            hc_counts(
                ptr::null(),
                ptr::null_mut(),
                ptr::null_mut(),
                ptr::null_mut()
            ),
            HcStatus::NullPointer
        );
        let bad = CString::new("{\"uniformity\": 3").unwrap();
        assert_eq!(hc_from_json(bad.as_ptr(), &mut h), HcStatus::Json);
        let bad = CString::new(r#"{"uniformity":2,"num_vertices":2,"edges":[[0,5]]}"#).unwrap();
        assert_eq!(
            hc_from_json(bad.as_ptr(), &mut h),
            HcStatus::InvalidHypergraph
        );
        assert_eq!(hc_from_json(ptr::null(), &mut h), HcStatus::NullPointer);
        hc_free(ptr::null_mut());
        hc_string_free(ptr::null_mut());
    }
}

#[test]
fn report_without_timing_is_reproducible() {
    let run = || unsafe {
        let mut out = ptr::null_mut();
        assert_eq!(
            hc_report_json(HcFamily::H2, 2, 3, 0, false, &mut out),
            HcStatus::Ok,
            "{}",
            last_error()
        );
        let s = CStr::from_ptr(out).to_string_lossy().into_owned();
        hc_string_free(out);
        s
    };
    let a = run();
    assert_eq!(a, run());
    assert!(!a.contains("elapsed_ms") && a.contains("h2.c.k4_minus_free"));
}

#[test]
fn header_declares_the_abi_and_compiles() {
    let header = Path::new(env!("CARGO_MANIFEST_DIR")).join("include/hypercert.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "hc_build",
        "hc_from_json",
        "hc_to_json",
        "hc_free",
        "hc_string_free",
        "hc_counts",
        "hc_alpha",
        "hc_contains_pattern",
        "hc_report_json",
        "hc_last_error",
        "HC_STATUS_CEILING_EXCEEDED",
        "typedef struct HcHypergraph HcHypergraph",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    // a C compiler is optional in build environments
    let Ok(out) = Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", "-std=c11", "-Wall", "-Werror"])
        .arg(&header)
        .output()
    else {
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
