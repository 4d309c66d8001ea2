//! C ABI for the multisegment calculus.
//!
//! Conventions:
//! - every fallible entry point returns an [`MsegStatus`]; `MSEG_STATUS_OK`
//!   (0) means the out-parameter was written;
//! - multisegments cross the boundary as opaque `MsegHandle` pointers,
//!   released with [`mseg_handle_free`];
//! - structured results cross as JSON strings in the same schemas the CLI
//!   prints, released with [`mseg_string_free`];
//! - a null `line` argument selects the default label "rho";
//! - panics never unwind across the boundary: they surface as
//!   `MSEG_STATUS_PANIC`.
//!
//! The build script regenerates `include/multiseg.h` from this file.

use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use multiseg::{
    compose_langlands, compose_zelevinsky, mw_dual, mw_dual_left, oracle_composition, speh,
    Error, HalfExp, Line, Multisegment, OracleCache, OracleOptions, Sign,
};

/// Status code of every fallible call.
#[repr(i32)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MsegStatus {
    Ok = 0,
    LineMismatch = 1,
    NonIntegralOrNegativeLength = 2,
    UnionNotASegment = 3,
    BasisMismatch = 4,
    NotALadder = 5,
    ClosureTooLarge = 6,
    OutOfRange = 7,
    InvalidIndex = 8,
    NotSpeh = 9,
    InternalInconsistency = 10,
    AgreementFailure = 11,
    Parse = 12,
    Io = 13,
    /// A required pointer argument was null.
    NullPointer = 100,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 101,
    /// The call panicked; state is unchanged.
    Panic = 102,
}

/// Opaque multisegment. Create with `mseg_parse_json`/`mseg_speh`/
/// `mseg_dual`; release with `mseg_handle_free`.
pub struct MsegHandle(Multisegment);

fn status_of(err: &Error) -> MsegStatus {
    match err {
        Error::LineMismatch { .. } => MsegStatus::LineMismatch,
        Error::NonIntegralOrNegativeLength { .. } => MsegStatus::NonIntegralOrNegativeLength,
        Error::UnionNotASegment => MsegStatus::UnionNotASegment,
        Error::BasisMismatch => MsegStatus::BasisMismatch,
        Error::NotALadder(_) => MsegStatus::NotALadder,
        Error::ClosureTooLarge { .. } => MsegStatus::ClosureTooLarge,
        Error::OutOfRange(_) => MsegStatus::OutOfRange,
        Error::InvalidIndex { .. } => MsegStatus::InvalidIndex,
        Error::NotSpeh(_) => MsegStatus::NotSpeh,
        Error::InternalInconsistency(_) => MsegStatus::InternalInconsistency,
        Error::AgreementFailure(_) => MsegStatus::AgreementFailure,
        Error::Parse(_) => MsegStatus::Parse,
        Error::Io(_) => MsegStatus::Io,
    }
}

/// # Safety
/// `p` must be null or point to a nul-terminated string.
unsafe fn utf8_arg<'a>(p: *const c_char) -> Result<Option<&'a str>, MsegStatus> {
    if p.is_null() {
        return Ok(None);
    }
    unsafe { CStr::from_ptr(p) }
        .to_str()
        .map(Some)
        .map_err(|_| MsegStatus::InvalidUtf8)
}

unsafe fn line_arg(p: *const c_char) -> Result<Line, MsegStatus> {
    Ok(unsafe { utf8_arg(p) }?.map_or_else(Line::default, Line::new))
}

/// Writes `value` through `out` and reports `Ok`; `out` must be non-null.
unsafe fn emit_handle(
    out: *mut *mut MsegHandle,
    value: Multisegment,
) -> MsegStatus {
    if out.is_null() {
        return MsegStatus::NullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(MsegHandle(value))) };
    MsegStatus::Ok
}

unsafe fn emit_string(out: *mut *mut c_char, value: String) -> MsegStatus {
    if out.is_null() {
        return MsegStatus::NullPointer;
    }
    match CString::new(value) {
        Ok(s) => {
            unsafe { *out = s.into_raw() };
            MsegStatus::Ok
        }
        Err(_) => MsegStatus::InternalInconsistency,
    }
}

fn guarded(f: impl FnOnce() -> MsegStatus) -> MsegStatus {
    catch_unwind(AssertUnwindSafe(f)).unwrap_or(MsegStatus::Panic)
}

/// Parse a multisegment from its JSON form
/// `{"line":"rho","segments":[{"b":"-1","e":"0"},…]}`.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn mseg_parse_json(
    json: *const c_char,
    out: *mut *mut MsegHandle,
) -> MsegStatus {
    guarded(|| {
        let text = match unsafe { utf8_arg(json) } {
            Ok(Some(t)) => t,
            Ok(None) => return MsegStatus::NullPointer,
            Err(s) => return s,
        };
        match serde_json::from_str::<Multisegment>(text) {
            Ok(ms) => unsafe { emit_handle(out, ms) },
            Err(_) => MsegStatus::Parse,
        }
    })
}

/// Serialize a multisegment to its JSON form. The string is released with
/// `mseg_string_free`.
///
/// # Safety
/// `h` must be a live handle from this library; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mseg_to_json(
    h: *const MsegHandle,
    out: *mut *mut c_char,
) -> MsegStatus {
    guarded(|| {
        if h.is_null() {
            return MsegStatus::NullPointer;
        }
        let ms = unsafe { &(*h).0 };
        match serde_json::to_string(ms) {
            Ok(text) => unsafe { emit_string(out, text) },
            Err(_) => MsegStatus::InternalInconsistency,
        }
    })
}

/// Build the Speh multisegment with `n` rows of width `d`, centered at the
/// exponent `shift` ("0", "-2", "3/2"; null means "0").
///
/// # Safety
/// String arguments must be null or nul-terminated; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mseg_speh(
    n: u32,
    d: u32,
    shift: *const c_char,
    line: *const c_char,
    out: *mut *mut MsegHandle,
) -> MsegStatus {
    guarded(|| {
        if n == 0 || d == 0 {
            return MsegStatus::OutOfRange;
        }
        let line = match unsafe { line_arg(line) } {
            Ok(l) => l,
            Err(s) => return s,
        };
        let center = match unsafe { utf8_arg(shift) } {
            Ok(None) => HalfExp::ZERO,
            Ok(Some(t)) => match HalfExp::from_str(t) {
                Ok(x) => x,
                Err(e) => return status_of(&e),
            },
            Err(s) => return s,
        };
        unsafe { emit_handle(out, speh(n, d, center, &line)) }
    })
}

/// Apply the involution; `left_side` selects the left variant.
///
/// # Safety
/// `h` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mseg_dual(
    h: *const MsegHandle,
    left_side: bool,
    out: *mut *mut MsegHandle,
) -> MsegStatus {
    guarded(|| {
        if h.is_null() {
            return MsegStatus::NullPointer;
        }
        let a = unsafe { &(*h).0 };
        let dual = if left_side { mw_dual_left(a) } else { mw_dual(a) };
        unsafe { emit_handle(out, dual) }
    })
}

/// Composition-series report for the (n, d, k) frame product, as the CLI's
/// JSON. `minus` flips the twist sign; `langlands` selects the L-basis
/// report (which self-checks through the involution).
///
/// # Safety
/// `line` must be null or nul-terminated; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mseg_compose_json(
    n: u32,
    d: u32,
    k: u32,
    minus: bool,
    langlands: bool,
    line: *const c_char,
    out: *mut *mut c_char,
) -> MsegStatus {
    guarded(|| {
        if n == 0 || d == 0 {
            return MsegStatus::OutOfRange;
        }
        let line = match unsafe { line_arg(line) } {
            Ok(l) => l,
            Err(s) => return s,
        };
        let sign = if minus { Sign::Minus } else { Sign::Plus };
        let report = if langlands {
            match compose_langlands(n, d, k, sign, &line) {
                Ok(r) => r,
                Err(e) => return status_of(&e),
            }
        } else {
            compose_zelevinsky(n, d, k, sign, &line)
        };
        match serde_json::to_string(&report) {
            Ok(text) => unsafe { emit_string(out, text) },
            Err(_) => MsegStatus::InternalInconsistency,
        }
    })
}

/// Independent re-derivation of the factor set, as the CLI's JSON.
/// `max_nodes` caps each closure walk; 0 selects the default cap.
///
/// # Safety
/// `line` must be null or nul-terminated; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn mseg_oracle_json(
    n: u32,
    d: u32,
    k: u32,
    max_nodes: usize,
    line: *const c_char,
    out: *mut *mut c_char,
) -> MsegStatus {
    guarded(|| {
        if n == 0 || d == 0 {
            return MsegStatus::OutOfRange;
        }
        let line = match unsafe { line_arg(line) } {
            Ok(l) => l,
            Err(s) => return s,
        };
        let mut opts = OracleOptions::default();
        if max_nodes > 0 {
            opts.max_closure_nodes = max_nodes;
        }
        match oracle_composition(n, d, k, &line, &opts, &OracleCache::new()) {
            Ok(result) => match serde_json::to_string(&result) {
                Ok(text) => unsafe { emit_string(out, text) },
                Err(_) => MsegStatus::InternalInconsistency,
            },
            Err(e) => status_of(&e),
        }
    })
}

/// Release a handle. Passing null is a no-op.
///
/// # Safety
/// `h` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mseg_handle_free(h: *mut MsegHandle) {
    if !h.is_null() {
        drop(unsafe { Box::from_raw(h) });
    }
}

/// Release a string returned by this library. Passing null is a no-op.
///
/// # Safety
/// `s` must be null or a string from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mseg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Static name of a status code ("Ok", "Parse", …); never freed, never null.
#[no_mangle]
pub extern "C" fn mseg_status_name(code: i32) -> *const c_char {
    let name: &'static [u8] = match code {
        0 => b"Ok\0",
        1 => b"LineMismatch\0",
        2 => b"NonIntegralOrNegativeLength\0",
        3 => b"UnionNotASegment\0",
        4 => b"BasisMismatch\0",
        5 => b"NotALadder\0",
        6 => b"ClosureTooLarge\0",
        7 => b"OutOfRange\0",
        8 => b"InvalidIndex\0",
        9 => b"NotSpeh\0",
        10 => b"InternalInconsistency\0",
        11 => b"AgreementFailure\0",
        12 => b"Parse\0",
        13 => b"Io\0",
        100 => b"NullPointer\0",
        101 => b"InvalidUtf8\0",
        102 => b"Panic\0",
        _ => b"Unknown\0",
    };
    name.as_ptr().cast()
}
