//! C ABI for the fuzzy-aura library. Handles are opaque pointers owned by
//! the caller and released with the matching `_free` function. Every
//! fallible call returns a status code; on failure the thread-local
//! message from `fa_last_error_message` describes the problem.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use fuzzy_aura::aura::{AuraSpace, Iterations};
use fuzzy_aura::io::{FuzzySetDoc, SpaceDoc};
use fuzzy_aura::lattice::FuzzySet;
use fuzzy_aura::{io, mcdm, openness, rough, separation};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FaStatus {
    /// Success.
    Ok = 0,
    /// A pointer argument was null or a string was not valid UTF-8.
    InvalidArgument = 1,
    /// Input failed to parse.
    ParseError = 2,
    /// The operation violated a domain invariant.
    DomainError = 3,
}

/// Opaque space handle.
pub struct FaSpace(AuraSpace);

/// Opaque fuzzy set handle.
pub struct FaSet(FuzzySet);

/// Boolean openness flags for one fuzzy set.
#[repr(C)]
pub struct FaOpennessProfile {
    pub open: bool,
    pub a_open: bool,
    pub semi: bool,
    pub pre: bool,
    pub alpha: bool,
    pub beta: bool,
    pub b: bool,
}

/// Boolean separation flags for one space.
#[repr(C)]
pub struct FaSeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub regular: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(message: &str) {
    let sanitized = message.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn fail(status: FaStatus, message: &str) -> FaStatus {
    set_error(message);
    status
}

fn domain_error(e: &fuzzy_aura::Error) -> FaStatus {
    fail(FaStatus::DomainError, &e.to_string())
}

/// Message describing the most recent failure on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn fa_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

unsafe fn utf8<'a>(ptr: *const c_char) -> Result<&'a str, FaStatus> {
    if ptr.is_null() {
        return Err(fail(FaStatus::InvalidArgument, "null string argument"));
    }
    CStr::from_ptr(ptr)
        .to_str()
        .map_err(|_| fail(FaStatus::InvalidArgument, "string is not valid UTF-8"))
}

unsafe fn out_slot<'a, T>(ptr: *mut T) -> Result<&'a mut T, FaStatus> {
    ptr.as_mut()
        .ok_or_else(|| fail(FaStatus::InvalidArgument, "null output argument"))
}

macro_rules! try_ffi {
    ($expr:expr) => {
        match $expr {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

/// Parses a space from a JSON document (same schema as the CLI accepts).
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_space_from_json(
    json: *const c_char,
    strict: bool,
    out: *mut *mut FaSpace,
) -> FaStatus {
    let out = try_ffi!(out_slot(out));
    let text = try_ffi!(utf8(json));
    let doc: SpaceDoc = match serde_json::from_str(text) {
        Ok(doc) => doc,
        Err(e) => return fail(FaStatus::ParseError, &e.to_string()),
    };
    match doc.to_space(strict) {
        Ok(space) => {
            *out = Box::into_raw(Box::new(FaSpace(space)));
            FaStatus::Ok
        }
        Err(e) => domain_error(&e),
    }
}

/// Releases a space handle. Null is ignored.
///
/// # Safety
/// `space` must come from `fa_space_from_json` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fa_space_free(space: *mut FaSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Parses a fuzzy set from a JSON document with `universe` and `grades`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_set_from_json(
    json: *const c_char,
    out: *mut *mut FaSet,
) -> FaStatus {
    let out = try_ffi!(out_slot(out));
    let text = try_ffi!(utf8(json));
    let doc: FuzzySetDoc = match serde_json::from_str(text) {
        Ok(doc) => doc,
        Err(e) => return fail(FaStatus::ParseError, &e.to_string()),
    };
    match doc.to_set() {
        Ok(set) => {
            *out = Box::into_raw(Box::new(FaSet(set)));
            FaStatus::Ok
        }
        Err(e) => domain_error(&e),
    }
}

/// Releases a set handle. Null is ignored.
///
/// # Safety
/// `set` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fa_set_free(set: *mut FaSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Number of points in the set's universe.
///
/// # Safety
/// `set` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn fa_set_size(set: *const FaSet) -> usize {
    set.as_ref().map_or(0, |s| s.0.grades().len())
}

/// Copies the membership grades into `buffer` (capacity `len`).
///
/// # Safety
/// `buffer` must point to at least `len` writable doubles.
#[no_mangle]
pub unsafe extern "C" fn fa_set_grades(
    set: *const FaSet,
    buffer: *mut f64,
    len: usize,
) -> FaStatus {
    let Some(set) = set.as_ref() else {
        return fail(FaStatus::InvalidArgument, "null set handle");
    };
    if buffer.is_null() || len < set.0.grades().len() {
        return fail(FaStatus::InvalidArgument, "grade buffer too small");
    }
    ptr::copy_nonoverlapping(set.0.grades().as_ptr(), buffer, set.0.grades().len());
    FaStatus::Ok
}

unsafe fn unary_op(
    space: *const FaSpace,
    set: *const FaSet,
    out: *mut *mut FaSet,
    op: impl FnOnce(&AuraSpace, &FuzzySet) -> fuzzy_aura::Result<FuzzySet>,
) -> FaStatus {
    let out = match out_slot(out) {
        Ok(out) => out,
        Err(status) => return status,
    };
    let (Some(space), Some(set)) = (space.as_ref(), set.as_ref()) else {
        return fail(FaStatus::InvalidArgument, "null handle");
    };
    match op(&space.0, &set.0) {
        Ok(result) => {
            *out = Box::into_raw(Box::new(FaSet(result)));
            FaStatus::Ok
        }
        Err(e) => domain_error(&e),
    }
}

/// Aura closure of `set` in `space`.
///
/// # Safety
/// All handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_closure(
    space: *const FaSpace,
    set: *const FaSet,
    out: *mut *mut FaSet,
) -> FaStatus {
    unary_op(space, set, out, |s, m| s.aura_closure(m))
}

/// Aura interior of `set` in `space`.
///
/// # Safety
/// All handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_interior(
    space: *const FaSpace,
    set: *const FaSet,
    out: *mut *mut FaSet,
) -> FaStatus {
    unary_op(space, set, out, |s, m| s.aura_interior(m))
}

/// Iterated closure; `steps < 0` runs to the fixpoint.
///
/// # Safety
/// All handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_iterated_closure(
    space: *const FaSpace,
    set: *const FaSet,
    steps: i32,
    out: *mut *mut FaSet,
) -> FaStatus {
    let iterations = if steps < 0 {
        Iterations::Fixpoint
    } else {
        Iterations::Finite(steps as usize)
    };
    unary_op(space, set, out, move |s, m| s.iterated_closure(m, iterations))
}

/// Openness flags of `set` in `space`.
///
/// # Safety
/// All handles must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_openness_profile(
    space: *const FaSpace,
    set: *const FaSet,
    out: *mut FaOpennessProfile,
) -> FaStatus {
    let out = try_ffi!(out_slot(out));
    let (Some(space), Some(set)) = (space.as_ref(), set.as_ref()) else {
        return fail(FaStatus::InvalidArgument, "null handle");
    };
    match openness::openness_profile(&space.0, &set.0) {
        Ok(p) => {
            *out = FaOpennessProfile {
                open: p.open,
                a_open: p.a_open,
                semi: p.semi,
                pre: p.pre,
                alpha: p.alpha,
                beta: p.beta,
                b: p.b,
            };
            FaStatus::Ok
        }
        Err(e) => domain_error(&e),
    }
}

/// Separation flags of `space`.
///
/// # Safety
/// `space` must be live; `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_separation_profile(
    space: *const FaSpace,
    out: *mut FaSeparationProfile,
) -> FaStatus {
    let out = try_ffi!(out_slot(out));
    let Some(space) = space.as_ref() else {
        return fail(FaStatus::InvalidArgument, "null space handle");
    };
    match separation::separation_profile(&space.0) {
        Ok(p) => {
            *out = FaSeparationProfile { t0: p.t0, t1: p.t1, t2: p.t2, regular: p.regular };
            FaStatus::Ok
        }
        Err(e) => domain_error(&e),
    }
}

/// Accuracy rho and roughness sigma of `set` under the rough model.
///
/// # Safety
/// All handles must be live; `rho` and `sigma` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn fa_accuracy(
    space: *const FaSpace,
    set: *const FaSet,
    rho: *mut f64,
    sigma: *mut f64,
) -> FaStatus {
    let rho = try_ffi!(out_slot(rho));
    let sigma = try_ffi!(out_slot(sigma));
    let (Some(space), Some(set)) = (space.as_ref(), set.as_ref()) else {
        return fail(FaStatus::InvalidArgument, "null handle");
    };
    match rough::accuracy(&space.0, &set.0) {
        Ok((r, s)) => {
            *rho = r;
            *sigma = s;
            FaStatus::Ok
        }
        Err(e) => domain_error(&e),
    }
}

/// Runs the decision pipeline on a JSON problem document and returns the
/// full result as a JSON string. Free it with `fa_string_free`.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn fa_mcdm_run_json(
    json: *const c_char,
    alpha: f64,
    out: *mut *mut c_char,
) -> FaStatus {
    let out = try_ffi!(out_slot(out));
    let text = try_ffi!(utf8(json));
    let doc: fuzzy_aura::io::ProblemDoc = match serde_json::from_str(text) {
        Ok(doc) => doc,
        Err(e) => return fail(FaStatus::ParseError, &e.to_string()),
    };
    let problem = match doc.to_problem() {
        Ok(p) => p,
        Err(e) => return domain_error(&e),
    };
    let result = match mcdm::run(&problem, alpha) {
        Ok(r) => r,
        Err(e) => return domain_error(&e),
    };
    let payload = serde_json::json!({
        "scores": result.scores,
        "classifications": result.classifications,
        "global_accuracy": result.global_accuracy,
    });
    let rendered = io::to_json(&payload).replace('\0', " ");
    *out = CString::new(rendered).unwrap_or_default().into_raw();
    FaStatus::Ok
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn fa_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
