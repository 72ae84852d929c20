//! C interface to `wild-mckay`.
//!
//! Objects are opaque handles released with the matching `*_free` function.
//! Every fallible call returns a [`WmStatus`]; on failure `wm_last_error`
//! describes the problem. Strings handed out by the library are NUL-terminated
//! UTF-8 and must be released with `wm_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use serde_json::json;
use wild_mckay::covers::{count_extensions, count_rep_covers, parse_series, reduce, GaloisField};
use wild_mckay::invariant_rings::verify_v3_relation;
use wild_mckay::motivic::{euler_char, eval_point_count, rational_string, MotivicValue};
use wild_mckay::stringy::{m_st, RepDatum};
use wild_mckay::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WmStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Malformed input: not a prime, bad block size, unparsable text.
    InvalidArgument = 2,
    /// Well-formed input outside the domain of the computation (not klt, pole, ...).
    Precondition = 3,
    /// An internal cross-check failed.
    Internal = 4,
    /// The library panicked; the call had no effect.
    Panic = 5,
}

/// A representation of `Z/p` as a direct sum of Jordan blocks.
pub struct WmRep(RepDatum);

/// An exact motivic value.
pub struct WmValue(MotivicValue);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> WmStatus {
    match e {
        Error::Parse(_)
        | Error::InvalidRepresentation(_)
        | Error::InvalidFieldSize(_)
        | Error::BaseMismatch { .. } => WmStatus::InvalidArgument,
        Error::InternalMismatch(_) => WmStatus::Internal,
        e if e.is_precondition() => WmStatus::Precondition,
        _ => WmStatus::InvalidArgument,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

/// Runs `f`, translating errors and panics into a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> WmStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            WmStatus::Ok
        }
        Ok(Err(Fail::Null(name))) => {
            set_error(format!("{name} must not be null"));
            WmStatus::NullArgument
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| panic.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            WmStatus::Panic
        }
    }
}

fn non_null<'a, T>(p: *const T, name: &'static str) -> Result<&'a T, Fail> {
    // SAFETY: the caller passes either null or a valid pointer produced by this library.
    unsafe { p.as_ref() }.ok_or(Fail::Null(name))
}

fn out_ptr<'a, T>(out: *mut T, name: &'static str) -> Result<&'a mut T, Fail> {
    // SAFETY: the caller passes either null or a writable pointer.
    unsafe { out.as_mut() }.ok_or(Fail::Null(name))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// Message for the most recent failed call on this thread, or null. The
/// pointer stays valid until the next library call on the same thread.
#[no_mangle]
pub extern "C" fn wm_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Builds `V_{dims[0]} + ... + V_{dims[len-1]}` over `F_p`.
///
/// # Safety
/// `dims` must point to `len` readable integers; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_rep_new(p: u64, dims: *const u64, len: usize, out: *mut *mut WmRep) -> WmStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        if dims.is_null() {
            return Err(Fail::Null("dims"));
        }
        let dims = std::slice::from_raw_parts(dims, len).to_vec();
        *out = Box::into_raw(Box::new(WmRep(RepDatum::new(p, dims)?)));
        Ok(())
    })
}

/// # Safety
/// `rep` must be null or a handle from `wm_rep_new` that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wm_rep_free(rep: *mut WmRep) {
    if !rep.is_null() {
        drop(Box::from_raw(rep));
    }
}

/// The stringy motivic invariant `M_st(V/G)`.
///
/// # Safety
/// `rep` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_m_st(rep: *const WmRep, out: *mut *mut WmValue) -> WmStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let rep = non_null(rep, "rep")?;
        *out = Box::into_raw(Box::new(WmValue(m_st(&rep.0)?)));
        Ok(())
    })
}

/// # Safety
/// `value` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wm_value_free(value: *mut WmValue) {
    if !value.is_null() {
        drop(Box::from_raw(value));
    }
}

unsafe fn value_string(
    value: *const WmValue,
    out: *mut *mut c_char,
    f: impl FnOnce(&MotivicValue) -> Result<String, Error>,
) -> WmStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let v = non_null(value, "value")?;
        *out = c_string(f(&v.0)?);
        Ok(())
    })
}

/// The exact JSON record `{"scale", "num", "den"}`.
///
/// # Safety
/// `value` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_value_to_json(value: *const WmValue, out: *mut *mut c_char) -> WmStatus {
    value_string(value, out, |v| Ok(serde_json::to_string(v).expect("values serialize")))
}

/// Human-readable form such as `L^3 + 2*L^2`.
///
/// # Safety
/// `value` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_value_to_string(value: *const WmValue, out: *mut *mut c_char) -> WmStatus {
    value_string(value, out, |v| Ok(v.to_string()))
}

/// The value at `L = q`, as the rational string `a/b`.
///
/// # Safety
/// `value` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_value_point_count(value: *const WmValue, q: u64, out: *mut *mut c_char) -> WmStatus {
    value_string(value, out, |v| Ok(rational_string(&eval_point_count(v, q)?)))
}

/// The value at `L = 1`, as the rational string `a/b`.
///
/// # Safety
/// `value` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_value_euler_char(value: *const WmValue, out: *mut *mut c_char) -> WmStatus {
    value_string(value, out, |v| Ok(rational_string(&euler_char(v)?)))
}

/// # Safety
/// `s` must be null or a string returned by this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn wm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Number of representative polynomials with jump `jump` over `F_q`, or of
/// extensions when `extensions` is set, as a decimal string.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_covers_count(q: u64, jump: u64, extensions: bool, out: *mut *mut c_char) -> WmStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        let n = if extensions { count_extensions(q, jump)? } else { count_rep_covers(q, jump)? };
        *out = c_string(n.to_string());
        Ok(())
    })
}

/// Reduces the Laurent polynomial `series` (`exp:coeff,...`) over `F_q` to its
/// normal form; writes JSON `{"rep", "terms", "const_class", "jump"}`.
///
/// # Safety
/// `series` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_covers_reduce(p: u64, q: u64, series: *const c_char, out: *mut *mut c_char) -> WmStatus {
    guard(|| {
        let out = out_ptr(out, "out")?;
        *out = ptr::null_mut();
        if series.is_null() {
            return Err(Fail::Null("series"));
        }
        let text = CStr::from_ptr(series)
            .to_str()
            .map_err(|_| Error::Parse("series is not UTF-8".into()))?;
        let field = GaloisField::new(p, q)?;
        let cl = reduce(&field, &parse_series(&field, text)?)?;
        let terms: Vec<_> = cl.rep.terms().map(|(i, c)| json!([i, field.format_element(c)])).collect();
        let doc = json!({
            "rep": cl.rep.format(&field),
            "terms": terms,
            "const_class": cl.const_class,
            "jump": cl.jump(),
        });
        *out = c_string(doc.to_string());
        Ok(())
    })
}

/// Checks the `V_3` invariant relation in characteristic `p`.
///
/// # Safety
/// `out_ok` must be writable.
#[no_mangle]
pub unsafe extern "C" fn wm_verify_v3(p: u64, out_ok: *mut bool) -> WmStatus {
    guard(|| {
        let out = out_ptr(out_ok, "out_ok")?;
        *out = false;
        let r = verify_v3_relation(p)?;
        *out = r.ok && r.generators_invariant;
        Ok(())
    })
}
