use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use padyn_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take(s: *mut c_char) -> String {
    let out = CStr::from_ptr(s).to_str().unwrap().to_string();
    padyn_string_free(s);
    out
}

unsafe fn new_map(p: u64, a: &str, b: &str) -> *mut PadynMap {
    let mut m = ptr::null_mut();
    assert_eq!(padyn_map_new(p, c(a).as_ptr(), c(b).as_ptr(), &mut m), PadynStatus::Ok);
    m
}

#[test]
fn two_cycle_through_the_abi() {
    unsafe {
        let m = new_map(2, "-9/10", "1/10");
        let mut out = ptr::null_mut();
        assert_eq!(padyn_map_eval(m, c("1/10").as_ptr(), &mut out), PadynStatus::Ok);
        assert_eq!(take(out), "1/5");
        assert_eq!(padyn_map_eval(m, c("1/5").as_ptr(), &mut out), PadynStatus::Ok);
        assert_eq!(take(out), "1/10");
        let (mut an, mut ad, mut bn, mut bd) = (9, 9, 9, 9);
        assert_eq!(padyn_map_root_norms(m, &mut an, &mut ad, &mut bn, &mut bd), PadynStatus::Ok);
        assert_eq!((an, ad, bn, bd), (0, 1, 1, 1));
        padyn_map_free(m);
    }
}

#[test]
fn error_codes() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(padyn_map_new(4, c("1").as_ptr(), c("1").as_ptr(), &mut m), PadynStatus::NotPrime);
        assert_eq!(padyn_map_new(2, c("1").as_ptr(), c("0").as_ptr(), &mut m), PadynStatus::DegenerateMap);
        assert_eq!(padyn_map_new(2, c("1/0").as_ptr(), c("1").as_ptr(), &mut m), PadynStatus::Parse);
        assert_eq!(padyn_map_new(2, ptr::null(), c("1").as_ptr(), &mut m), PadynStatus::NullArgument);
        assert!(m.is_null());

        let m = new_map(2, "-9/10", "1/10");
        let mut out = ptr::null_mut();
        // the pole x_hat = -b/a = 1/9
        assert_eq!(padyn_map_eval(m, c("1/9").as_ptr(), &mut out), PadynStatus::SingularPoint);
        assert_eq!(padyn_map_ergodicity_json(m, c("1").as_ptr(), &mut out), PadynStatus::NotInvariantRadius);
        assert_eq!(padyn_map_eval(ptr::null(), c("1").as_ptr(), &mut out), PadynStatus::NullArgument);
        padyn_map_free(m);
        padyn_map_free(ptr::null_mut());
        padyn_string_free(ptr::null_mut());

        let msg = CStr::from_ptr(padyn_status_message(PadynStatus::SingularPoint));
        assert_eq!(msg.to_str().unwrap(), "point is the pole of the map");
    }
}

#[test]
fn json_reports() {
    unsafe {
        let m = new_map(2, "5/2", "1");
        let mut out = ptr::null_mut();
        assert_eq!(padyn_map_classify_json(m, &mut out), PadynStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["map"]["case"], "phi");
        assert_eq!(padyn_map_ergodicity_json(m, c("0").as_ptr(), &mut out), PadynStatus::Ok);
        let v: serde_json::Value = serde_json::from_str(&take(out)).unwrap();
        assert_eq!(v["result"]["verdict"], "ergodic");
        assert_eq!(v["result"]["memic"]["interchanged"], true);
        padyn_map_free(m);
    }
}

#[test]
fn header_is_valid_c() {
    let header = concat!(env!("CARGO_MANIFEST_DIR"), "/include/padyn.h");
    let text = std::fs::read_to_string(header).unwrap();
    for sym in ["padyn_map_new", "padyn_map_free", "padyn_map_eval", "padyn_string_free", "PADYN_STATUS_OK"] {
        assert!(text.contains(sym), "{sym} missing from header");
    }
    let status = std::process::Command::new("cc")
        .args(["-fsyntax-only", "-x", "c", header])
        .status()
        .expect("a C compiler is needed to check the header");
    assert!(status.success());
}
