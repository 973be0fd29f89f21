//! C interface to ppg-core. A session owns one analysed (group, prime,
//! seed); commands render to heap strings released with `ppg_string_free`.
//! Every call returns a `PpgStatus`; on failure `ppg_last_error` describes it.
//!
//! Pointer contract for all functions: strings are NUL-terminated UTF-8,
//! sessions are live handles from a constructor (or null where a getter
//! allows it), and output pointers are writable.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ppg_core::analysis::Analysis;
use ppg_core::groups::{resolve_group, GroupSpec, DEFAULT_MAX_ORDER};
use ppg_core::report::{parse_block, run, Command, Format};
use ppg_core::Error;

/// Status codes; the nonzero ones match the command-line exit codes where
/// they overlap.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PpgStatus {
    Ok = 0,
    Other = 1,
    Malformed = 2,
    BoundExceeded = 3,
    TheoremViolation = 4,
    NullArgument = 5,
    /// `verify` ran but at least one check failed; the report is still returned.
    VerifyFailed = 6,
    Panic = 7,
}

/// Opaque analysis handle.
pub struct PpgSession {
    analysis: Analysis,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> PpgStatus {
    match e.exit_code() {
        2 => PpgStatus::Malformed,
        3 => PpgStatus::BoundExceeded,
        4 => PpgStatus::TheoremViolation,
        _ => PpgStatus::Other,
    }
}

fn guard(f: impl FnOnce() -> Result<PpgStatus, Error>) -> PpgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(s)) => {
            if s == PpgStatus::Ok {
                set_error("");
            }
            s
        }
        Ok(Err(e)) => {
            set_error(&e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_error("internal panic");
            PpgStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Error> {
    if p.is_null() {
        return Err(Error::Malformed(format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Error::Malformed(format!("{what} is not UTF-8")))
}

fn max_order(m: usize) -> usize {
    if m == 0 {
        DEFAULT_MAX_ORDER
    } else {
        m
    }
}

/// Open a session for a group file path or `builtin:<name>`; `max_order`
/// 0 means the default bound.
#[no_mangle]
pub unsafe extern "C" fn ppg_session_new(
    group: *const c_char,
    prime: u64,
    seed: u64,
    max_order: usize,
    out: *mut *mut PpgSession,
) -> PpgStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return PpgStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guard(|| {
        let g = resolve_group(str_arg(group, "group")?, self::max_order(max_order))?;
        let analysis = Analysis::new(&g, prime, seed)?;
        *out = Box::into_raw(Box::new(PpgSession { analysis }));
        Ok(PpgStatus::Ok)
    })
}

/// Open a session from the JSON text of a group file.
#[no_mangle]
pub unsafe extern "C" fn ppg_session_from_json(
    json: *const c_char,
    prime: u64,
    seed: u64,
    max_order: usize,
    out: *mut *mut PpgSession,
) -> PpgStatus {
    if out.is_null() {
        set_error("output pointer is null");
        return PpgStatus::NullArgument;
    }
    *out = ptr::null_mut();
    guard(|| {
        let g = GroupSpec::parse(str_arg(json, "json")?)?.build(self::max_order(max_order))?;
        let analysis = Analysis::new(&g, prime, seed)?;
        *out = Box::into_raw(Box::new(PpgSession { analysis }));
        Ok(PpgStatus::Ok)
    })
}

/// Release a session; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ppg_session_free(s: *mut PpgSession) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Group order, or 0 for a null session.
#[no_mangle]
pub unsafe extern "C" fn ppg_session_group_order(s: *const PpgSession) -> u64 {
    s.as_ref().map_or(0, |s| s.analysis.group.order() as u64)
}

/// Degree of the splitting field over the prime field, or 0.
#[no_mangle]
pub unsafe extern "C" fn ppg_session_field_degree(s: *const PpgSession) -> u32 {
    s.as_ref().map_or(0, |s| s.analysis.field.degree())
}

/// Number of blocks, or 0.
#[no_mangle]
pub unsafe extern "C" fn ppg_session_block_count(s: *const PpgSession) -> usize {
    s.as_ref().map_or(0, |s| s.analysis.blocks.len())
}

/// Run `command` (pieces, generalized, points, multiposet, verify) with a
/// block selector (principal, all, or an index) and a format (json, dot,
/// table). On `Ok` and `VerifyFailed`, `*out` receives a string for
/// `ppg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn ppg_run(
    s: *const PpgSession,
    command: *const c_char,
    block: *const c_char,
    format: *const c_char,
    slow: bool,
    out: *mut *mut c_char,
) -> PpgStatus {
    if s.is_null() || out.is_null() {
        set_error("session or output pointer is null");
        return PpgStatus::NullArgument;
    }
    *out = ptr::null_mut();
    let s = &*s;
    guard(|| {
        let cmd: Command = str_arg(command, "command")?.parse()?;
        let filter = parse_block(str_arg(block, "block")?)?;
        let fmt: Format = str_arg(format, "format")?.parse()?;
        let result = run(&s.analysis, cmd, filter, fmt, slow)?;
        let text = CString::new(result.text).map_err(|_| Error::Internal("output contains NUL".into()))?;
        *out = text.into_raw();
        if result.passed {
            Ok(PpgStatus::Ok)
        } else {
            set_error("verification failed");
            Ok(PpgStatus::VerifyFailed)
        }
    })
}

/// Release a string returned by `ppg_run`; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn ppg_string_free(p: *mut c_char) {
    if !p.is_null() {
        drop(CString::from_raw(p));
    }
}

/// Message for the last failing call on this thread; empty after a success.
/// Valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn ppg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

#[no_mangle]
pub extern "C" fn ppg_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}
