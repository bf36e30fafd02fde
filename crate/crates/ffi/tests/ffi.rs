use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::process::Command;
use std::ptr;

use noncomm_ffi::*;

fn parse(spec: &str, cap: usize) -> (NcStatus, *mut NcGroup) {
    let s = CString::new(spec).unwrap();
    let mut g = ptr::null_mut();
    let st = unsafe { nc_group_parse(s.as_ptr(), cap, &mut g) };
    (st, g)
}

fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string();
    unsafe { nc_string_free(p) };
    s
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(nc_last_error_message()) }.to_str().unwrap().to_string()
}

#[test]
fn dihedral_round_trip() {
    let (st, g) = parse("dihedral:4", 10_000);
    assert_eq!(st, NcStatus::Ok);
    let (mut order, mut centre) = (0, 0);
    unsafe {
        assert_eq!(nc_group_order(g, &mut order), NcStatus::Ok);
        assert_eq!(nc_group_center_size(g, &mut centre), NcStatus::Ok);
    }
    assert_eq!((order, centre), (8, 2));

    let mut gr = ptr::null_mut();
    unsafe { assert_eq!(nc_graph_noncommuting(g, &mut gr), NcStatus::Ok) };
    let (mut n, mut m) = (0, 0);
    unsafe {
        nc_graph_vertex_count(gr, &mut n);
        nc_graph_edge_count(gr, &mut m);
    }
    assert_eq!((n, m), (6, 12));

    let mut e = 0.0;
    let mut exact = ptr::null_mut();
    unsafe { assert_eq!(nc_graph_energy(gr, &mut e, &mut exact), NcStatus::Ok) };
    assert_eq!(take_string(exact), "8");
    assert!((e - 8.0).abs() < 1e-12);
    unsafe { assert_eq!(nc_graph_laplacian_energy(gr, &mut e, &mut exact), NcStatus::Ok) };
    assert_eq!(take_string(exact), "8");
    // exact output is optional
    unsafe { assert_eq!(nc_graph_energy(gr, &mut e, ptr::null_mut()), NcStatus::Ok) };

    let mut json = ptr::null_mut();
    unsafe { assert_eq!(nc_graph_charpoly(gr, &mut json), NcStatus::Ok) };
    let v: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
    assert_eq!(v["degree"], 6);
    // x^6 − 12x^4 − 16x^3
    assert_eq!(v["coefficients"], serde_json::json!(["0", "0", "0", "-16", "-12", "0", "1"]));
    unsafe {
        nc_graph_free(gr);
        nc_group_free(g);
    }
}

#[test]
fn error_codes() {
    let (st, g) = parse("dihedral:", 10_000);
    assert_eq!(st, NcStatus::Parse);
    assert!(g.is_null());
    assert!(!last_error().is_empty());
    assert_eq!(parse("dihedral:100", 50).0, NcStatus::CapExceeded);
    assert!(last_error().contains("50"), "{}", last_error());
    unsafe {
        assert_eq!(nc_group_parse(ptr::null(), 10, &mut ptr::null_mut()), NcStatus::NullPointer);
        let mut n = 0;
        assert_eq!(nc_group_order(ptr::null(), &mut n), NcStatus::NullPointer);
        nc_group_free(ptr::null_mut());
        nc_graph_free(ptr::null_mut());
        nc_string_free(ptr::null_mut());
    }
    let (st, g) = parse("cyclic:5", 10_000);
    assert_eq!(st, NcStatus::Ok);
    unsafe {
        assert_eq!(nc_group_order(g, ptr::null_mut()), NcStatus::NullPointer);
        nc_group_free(g);
    }
}

#[test]
fn abelian_group_gives_empty_graph() {
    let (_, g) = parse("cyclic:6", 10_000);
    let mut gr = ptr::null_mut();
    let mut n = 1;
    let mut e = 1.0;
    let mut exact = ptr::null_mut();
    unsafe {
        assert_eq!(nc_graph_noncommuting(g, &mut gr), NcStatus::Ok);
        nc_graph_vertex_count(gr, &mut n);
        assert_eq!(nc_graph_energy(gr, &mut e, &mut exact), NcStatus::Ok);
        nc_graph_free(gr);
        nc_group_free(g);
    }
    assert_eq!((n, e), (0, 0.0));
    assert_eq!(take_string(exact), "0");
}

#[test]
fn header_declares_every_export() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let h = std::fs::read_to_string(dir.join("include/noncomm.h")).unwrap();
    for f in [
        "nc_group_parse",
        "nc_group_free",
        "nc_group_order",
        "nc_group_center_size",
        "nc_graph_noncommuting",
        "nc_graph_free",
        "nc_graph_vertex_count",
        "nc_graph_edge_count",
        "nc_graph_energy",
        "nc_graph_laplacian_energy",
        "nc_graph_charpoly",
        "nc_string_free",
        "nc_last_error_message",
    ] {
        assert!(h.contains(&format!("{f}(")), "{f} missing from header");
    }
    assert!(h.contains("typedef struct NcGroup NcGroup;"));
}

/// Compiles the C smoke test against the header and the static library.
#[test]
fn c_program_links_and_runs() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    // target/<profile>/deps/ffi-… → target/<profile>
    let profile = std::env::current_exe().unwrap().parent().unwrap().parent().unwrap().to_path_buf();
    let lib = profile.join("libnoncomm_ffi.a");
    assert!(lib.exists(), "{} not built", lib.display());
    let exe = profile.join("nc_smoke");
    let cc = std::env::var("CC").unwrap_or_else(|_| "cc".into());
    let st = Command::new(cc)
        .arg(dir.join("tests/c/smoke.c"))
        .arg("-I")
        .arg(dir.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .status()
        .expect("C compiler available");
    assert!(st.success());
    let out = Command::new(&exe).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "9 30 4+4*sqrt(6) 13.797959\n");
}
