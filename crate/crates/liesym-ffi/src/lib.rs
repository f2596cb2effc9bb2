//! C ABI over the `liesym` core: parse a system once into an opaque
//! handle, run any CLI command line against it, and read the report back
//! as a JSON string. Status codes mirror the CLI exit codes (0 success,
//! 1 well-formed negative result, 2 parse error, 3 usage error).
//!
//! Ownership rules: every `char*` returned by this library must be
//! released with `liesym_string_free`; every system handle with
//! `liesym_system_free`. `liesym_last_error` stays valid until the next
//! call on the same thread and must not be freed.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use liesym::cli::{parse_command_line, run};
use liesym::parse::{parse_system, SystemFile};

/// Status of an FFI call; non-OK calls leave a message in
/// `liesym_last_error`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiesymStatus {
    /// Success; for check commands, the check passed.
    Ok = 0,
    /// Well-formed negative result (failed check, no certificate in bound).
    NegativeResult = 1,
    /// System text failed to parse; see `liesym_last_error`.
    ParseError = 2,
    /// Malformed command line or precondition violation.
    UsageError = 3,
    /// A required pointer argument was null.
    NullPointer = 4,
    /// Input was not valid UTF-8.
    InvalidUtf8 = 5,
}

/// Opaque handle to a parsed system file.
#[repr(C)]
pub struct LiesymSystem {
    _opaque: [u8; 0],
}

struct SystemHandle {
    system: SystemFile,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| {
        *e.borrow_mut() = CString::new(msg).unwrap();
    });
}

/// Message for the most recent failing call on this thread. Borrowed;
/// valid until the next FFI call on the same thread. Never null.
#[no_mangle]
pub extern "C" fn liesym_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static string; do not free.
#[no_mangle]
pub extern "C" fn liesym_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn cstr_input<'a>(ptr: *const c_char) -> Result<&'a str, LiesymStatus> {
    if ptr.is_null() {
        set_error("null pointer argument");
        return Err(LiesymStatus::NullPointer);
    }
    CStr::from_ptr(ptr).to_str().map_err(|_| {
        set_error("input is not valid UTF-8");
        LiesymStatus::InvalidUtf8
    })
}

/// Parses system text (same grammar as the CLI `--system` file) into a
/// handle written to `out`. On failure `out` is untouched and the
/// positioned message is in `liesym_last_error`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be a valid
/// pointer to writable memory.
#[no_mangle]
pub unsafe extern "C" fn liesym_system_parse(
    text: *const c_char,
    out: *mut *mut LiesymSystem,
) -> LiesymStatus {
    if out.is_null() {
        set_error("null output pointer");
        return LiesymStatus::NullPointer;
    }
    let text = match cstr_input(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_system(text) {
        Ok(system) => {
            let handle = Box::new(SystemHandle { system });
            *out = Box::into_raw(handle).cast::<LiesymSystem>();
            LiesymStatus::Ok
        }
        Err(e) => {
            set_error(e.to_string());
            LiesymStatus::ParseError
        }
    }
}

/// Releases a system handle. Null is a no-op.
///
/// # Safety
/// `sys` must be null or a pointer returned by `liesym_system_parse` that
/// has not been freed yet.
#[no_mangle]
pub unsafe extern "C" fn liesym_system_free(sys: *mut LiesymSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys.cast::<SystemHandle>()));
    }
}

/// Renders the system back in canonical text form. Caller frees with
/// `liesym_string_free`.
///
/// # Safety
/// `sys` must be a live handle from `liesym_system_parse`.
#[no_mangle]
pub unsafe extern "C" fn liesym_system_render(sys: *const LiesymSystem) -> *mut c_char {
    if sys.is_null() {
        set_error("null system handle");
        return ptr::null_mut();
    }
    let handle = &*sys.cast::<SystemHandle>();
    let text = handle.system.render().replace('\0', " ");
    CString::new(text).unwrap().into_raw()
}

/// Runs one command line (e.g. `"intfactor f h"` or
/// `"toral-gens 2,-2,3,-3 --max-deg 5"`) against an optional system
/// handle; commands taking only inline weights accept a null `sys`.
/// On Ok/NegativeResult the JSON report is written to `out_json` (caller
/// frees with `liesym_string_free`).
///
/// # Safety
/// `command_line` must be a valid NUL-terminated string; `sys` must be
/// null or a live handle; `out_json` must be valid writable memory.
#[no_mangle]
pub unsafe extern "C" fn liesym_run_json(
    sys: *const LiesymSystem,
    command_line: *const c_char,
    out_json: *mut *mut c_char,
) -> LiesymStatus {
    if out_json.is_null() {
        set_error("null output pointer");
        return LiesymStatus::NullPointer;
    }
    let line = match cstr_input(command_line) {
        Ok(t) => t,
        Err(s) => return s,
    };
    let tokens: Vec<&str> = line.split_whitespace().collect();
    let command = match parse_command_line(&tokens) {
        Ok(c) => c,
        Err(e) => {
            set_error(e.to_string());
            return LiesymStatus::UsageError;
        }
    };
    let system = if sys.is_null() {
        None
    } else {
        Some(&(*sys.cast::<SystemHandle>()).system)
    };
    match run(&command, system) {
        Ok(report) => {
            let json = serde_json::to_string(&report.to_json()).unwrap();
            *out_json = CString::new(json.replace('\0', " ")).unwrap().into_raw();
            if report.valid {
                LiesymStatus::Ok
            } else {
                LiesymStatus::NegativeResult
            }
        }
        Err(e) => {
            set_error(e.to_string());
            LiesymStatus::UsageError
        }
    }
}

/// Frees a string returned by this library. Null is a no-op.
///
/// # Safety
/// `s` must be null or a string returned by this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn liesym_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
