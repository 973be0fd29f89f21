use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use ppg_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(ppg_last_error()) }.to_str().unwrap().to_string()
}

fn session(group: &str, prime: u64, max_order: usize) -> (PpgStatus, *mut PpgSession) {
    let g = c(group);
    let mut s = ptr::null_mut();
    let st = unsafe { ppg_session_new(g.as_ptr(), prime, 0, max_order, &mut s) };
    (st, s)
}

fn run_cmd(s: *const PpgSession, cmd: &str, block: &str, fmt: &str) -> (PpgStatus, Option<String>) {
    let (cmd, block, fmt) = (c(cmd), c(block), c(fmt));
    let mut out: *mut c_char = ptr::null_mut();
    let st = unsafe { ppg_run(s, cmd.as_ptr(), block.as_ptr(), fmt.as_ptr(), false, &mut out) };
    let text = (!out.is_null()).then(|| {
        let t = unsafe { CStr::from_ptr(out) }.to_str().unwrap().to_string();
        unsafe { ppg_string_free(out) };
        t
    });
    (st, text)
}

#[test]
fn s4_session_and_commands() {
    let (st, s) = session("builtin:s4", 2, 0);
    assert_eq!(st, PpgStatus::Ok, "{}", last_error());
    assert!(!s.is_null());
    unsafe {
        assert_eq!(ppg_session_group_order(s), 24);
        assert_eq!(ppg_session_field_degree(s), 2);
        assert_eq!(ppg_session_block_count(s), 1);
    }

    let (st, text) = run_cmd(s, "multiposet", "principal", "json");
    assert_eq!(st, PpgStatus::Ok);
    let v: serde_json::Value = serde_json::from_str(&text.unwrap()).unwrap();
    assert_eq!(v["schema"], "ppg/1");
    assert_eq!(v["prime"], 2);
    assert!(v["nodes"].as_array().unwrap().len() >= 8);
    assert!(v["checks"].as_object().unwrap().values().all(|b| b == true));

    let (st, text) = run_cmd(s, "verify", "all", "table");
    assert_eq!(st, PpgStatus::Ok);
    let text = text.unwrap();
    assert!(text.contains("PASS") && !text.contains("FAIL"));
    assert_eq!(last_error(), "");

    unsafe { ppg_session_free(s) };
}

#[test]
fn from_json_matches_builtin() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/groups/s3.json");
    let json = c(&std::fs::read_to_string(path).unwrap());
    let mut s = ptr::null_mut();
    let st = unsafe { ppg_session_from_json(json.as_ptr(), 3, 0, 0, &mut s) };
    assert_eq!(st, PpgStatus::Ok, "{}", last_error());
    assert_eq!(unsafe { ppg_session_group_order(s) }, 6);
    let (st, text) = run_cmd(s, "pieces", "principal", "dot");
    assert_eq!(st, PpgStatus::Ok);
    assert!(text.unwrap().starts_with("digraph"));
    unsafe { ppg_session_free(s) };
}

#[test]
fn error_paths() {
    let (st, s) = session("builtin:s4", 4, 0);
    assert_eq!(st, PpgStatus::Malformed);
    assert!(s.is_null());
    assert!(!last_error().is_empty());

    let (st, s) = session("builtin:s5", 2, 100);
    assert_eq!(st, PpgStatus::BoundExceeded);
    assert!(s.is_null());

    let g = c("builtin:s4");
    let st = unsafe { ppg_session_new(g.as_ptr(), 2, 0, 0, ptr::null_mut()) };
    assert_eq!(st, PpgStatus::NullArgument);

    let mut s = ptr::null_mut();
    let st = unsafe { ppg_session_new(ptr::null(), 2, 0, 0, &mut s) };
    assert_eq!(st, PpgStatus::Malformed);

    let (_, s) = session("builtin:s4", 2, 0);
    let (st, text) = run_cmd(s, "points", "principal", "dot");
    assert_eq!(st, PpgStatus::Malformed);
    assert!(text.is_none());
    let (st, _) = run_cmd(s, "frobnicate", "principal", "json");
    assert_eq!(st, PpgStatus::Malformed);
    let (st, _) = run_cmd(s, "pieces", "7", "json");
    assert_eq!(st, PpgStatus::Malformed);
    let (st, _) = run_cmd(ptr::null(), "pieces", "principal", "json");
    assert_eq!(st, PpgStatus::NullArgument);
    unsafe {
        ppg_session_free(s);
        ppg_session_free(ptr::null_mut());
        ppg_string_free(ptr::null_mut());
        assert_eq!(ppg_session_group_order(ptr::null()), 0);
    }
}

#[test]
fn version_string() {
    let v = unsafe { CStr::from_ptr(ppg_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}

fn header() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("include/ppg.h")
}

#[test]
fn header_declares_the_interface() {
    let h = std::fs::read_to_string(header()).unwrap();
    for sym in [
        "PPG_H",
        "typedef struct PpgSession PpgSession",
        "PPG_STATUS_OK = 0",
        "PPG_STATUS_VERIFY_FAILED",
        "ppg_session_new",
        "ppg_session_from_json",
        "ppg_session_free",
        "ppg_run",
        "ppg_string_free",
        "ppg_last_error",
        "ppg_version",
    ] {
        assert!(h.contains(sym), "header lacks {sym}");
    }
}

#[test]
fn header_compiles_as_c() {
    let Ok(status) = Command::new("cc")
        .args(["-fsyntax-only", "-std=c99", "-Wall", "-Werror", "-x", "c"])
        .arg(header())
        .status()
    else {
        eprintln!("no C compiler; skipped");
        return;
    };
    assert!(status.success());
}
