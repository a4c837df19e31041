//! C interface to the skein library.
//!
//! Every object crossing the boundary is an opaque handle owned by this
//! library: values come back through out-pointers, functions return a
//! [`SkeinStatus`], and each handle or string must be released with its
//! matching `skein_*_free` function. Out-parameters are written only on
//! `Ok` (and left untouched otherwise); passing a null where a value is
//! required yields `NullPointer` rather than a crash.

use skein::cable::{cable_expansion, torus_knot_jones, CableError, CableExpansion};
use skein::laurent::{LaurentError, LaurentPoly};
use skein::oracle::{verify_cable_expansion, DiagramError, VerifyError};
use std::ffi::{c_char, CStr, CString};

/// Result of every call into this library.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkeinStatus {
    /// The call succeeded and out-parameters are filled in.
    Ok = 0,
    /// An oracle comparison ran to completion and the sides differ.
    VerifyFailed = 1,
    /// Arguments were rejected (bad slope, negative color, parse error).
    InvalidInput = 2,
    /// An exact division had a remainder.
    NotDivisible = 3,
    /// The requested diagram exceeds the state-sum crossing budget.
    BudgetExceeded = 4,
    /// A required pointer argument was null.
    NullPointer = 5,
}

/// An exact Laurent polynomial in the variable A.
pub struct SkeinLaurent(LaurentPoly);

/// A torus cable expansion in the annular basis, with its framing.
pub struct SkeinExpansion(CableExpansion);

impl From<LaurentError> for SkeinStatus {
    fn from(err: LaurentError) -> Self {
        match err {
            LaurentError::DivisionByZero | LaurentError::NotDivisible => {
                SkeinStatus::NotDivisible
            }
            LaurentError::Parse(_) => SkeinStatus::InvalidInput,
        }
    }
}

impl From<CableError> for SkeinStatus {
    fn from(err: CableError) -> Self {
        match err {
            CableError::Laurent(inner) => inner.into(),
            _ => SkeinStatus::InvalidInput,
        }
    }
}

impl From<VerifyError> for SkeinStatus {
    fn from(err: VerifyError) -> Self {
        match err {
            VerifyError::Diagram(DiagramError::TooManyCrossings(_)) => {
                SkeinStatus::BudgetExceeded
            }
            VerifyError::Diagram(_) => SkeinStatus::InvalidInput,
            VerifyError::Cable(inner) => inner.into(),
        }
    }
}

fn hand_out<T>(out: *mut *mut T, value: T) -> SkeinStatus {
    unsafe { *out = Box::into_raw(Box::new(value)) };
    SkeinStatus::Ok
}

fn hand_out_string(out: *mut *mut c_char, text: String) -> SkeinStatus {
    // Display output never contains interior NUL bytes.
    let string = CString::new(text).expect("formatted text has no NUL");
    unsafe { *out = string.into_raw() };
    SkeinStatus::Ok
}

/// Version of the underlying library, as a static string.
#[no_mangle]
pub extern "C" fn skein_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Parses a Laurent polynomial from its text form, e.g. `{-2:1, 2:1}`.
///
/// # Safety
/// `text` must point to a NUL-terminated string and `out` must be a valid
/// pointer to receive the handle.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_parse(
    text: *const c_char,
    out: *mut *mut SkeinLaurent,
) -> SkeinStatus {
    if text.is_null() || out.is_null() {
        return SkeinStatus::NullPointer;
    }
    let Ok(text) = unsafe { CStr::from_ptr(text) }.to_str() else {
        return SkeinStatus::InvalidInput;
    };
    match text.parse::<LaurentPoly>() {
        Ok(poly) => hand_out(out, SkeinLaurent(poly)),
        Err(err) => err.into(),
    }
}

/// Formats a Laurent polynomial into a newly allocated string; release it
/// with `skein_string_free`.
///
/// # Safety
/// `poly` must be a live handle from this library and `out` a valid
/// pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_format(
    poly: *const SkeinLaurent,
    out: *mut *mut c_char,
) -> SkeinStatus {
    if poly.is_null() || out.is_null() {
        return SkeinStatus::NullPointer;
    }
    hand_out_string(out, unsafe { &(*poly).0 }.to_string())
}

/// The quantum integer [m].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_quantum_integer(
    m: i64,
    out: *mut *mut SkeinLaurent,
) -> SkeinStatus {
    if out.is_null() {
        return SkeinStatus::NullPointer;
    }
    hand_out(out, SkeinLaurent(LaurentPoly::quantum_integer(m)))
}

/// Sum of two polynomials.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_add(
    a: *const SkeinLaurent,
    b: *const SkeinLaurent,
    out: *mut *mut SkeinLaurent,
) -> SkeinStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return SkeinStatus::NullPointer;
    }
    let sum = unsafe { &(*a).0 } + unsafe { &(*b).0 };
    hand_out(out, SkeinLaurent(sum))
}

/// Product of two polynomials.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_mul(
    a: *const SkeinLaurent,
    b: *const SkeinLaurent,
    out: *mut *mut SkeinLaurent,
) -> SkeinStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return SkeinStatus::NullPointer;
    }
    let product = unsafe { &(*a).0 } * unsafe { &(*b).0 };
    hand_out(out, SkeinLaurent(product))
}

/// Exact division; `NotDivisible` when a remainder is left.
///
/// # Safety
/// `a` and `b` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_divide_exact(
    a: *const SkeinLaurent,
    b: *const SkeinLaurent,
    out: *mut *mut SkeinLaurent,
) -> SkeinStatus {
    if a.is_null() || b.is_null() || out.is_null() {
        return SkeinStatus::NullPointer;
    }
    match unsafe { &(*a).0 }.divide_exact(unsafe { &(*b).0 }) {
        Ok(quotient) => hand_out(out, SkeinLaurent(quotient)),
        Err(err) => err.into(),
    }
}

/// Evaluates at the root `A = exp(i*pi/(2(r+1)))`, writing the real and
/// imaginary parts.
///
/// # Safety
/// `poly` must be a live handle; `out_re` and `out_im` must be valid
/// pointers.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_eval_root(
    poly: *const SkeinLaurent,
    r: u32,
    out_re: *mut f64,
    out_im: *mut f64,
) -> SkeinStatus {
    if poly.is_null() || out_re.is_null() || out_im.is_null() {
        return SkeinStatus::NullPointer;
    }
    let value = unsafe { &(*poly).0 }.evaluate_at_root(r);
    unsafe {
        *out_re = value.re;
        *out_im = value.im;
    }
    SkeinStatus::Ok
}

/// Releases a polynomial handle; a null is ignored.
///
/// # Safety
/// `poly` must be a handle from this library not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn skein_laurent_free(poly: *mut SkeinLaurent) {
    if !poly.is_null() {
        drop(unsafe { Box::from_raw(poly) });
    }
}

/// Expands the `(p, q)` cable of the color-`color` basis element around a
/// core colored `core`, at the canonical framing `p*q`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_expand(
    p: i64,
    q: i64,
    color: i64,
    core: i64,
    out: *mut *mut SkeinExpansion,
) -> SkeinStatus {
    if out.is_null() {
        return SkeinStatus::NullPointer;
    }
    match cable_expansion(p, q, color, core) {
        Ok(expansion) => hand_out(out, SkeinExpansion(expansion)),
        Err(err) => err.into(),
    }
}

/// Formats an expansion in the same two-line text form the command line
/// tool prints; release with `skein_string_free`.
///
/// # Safety
/// `expansion` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_expansion_format(
    expansion: *const SkeinExpansion,
    out: *mut *mut c_char,
) -> SkeinStatus {
    if expansion.is_null() || out.is_null() {
        return SkeinStatus::NullPointer;
    }
    hand_out_string(out, unsafe { &(*expansion).0 }.to_string())
}

/// Releases an expansion handle; a null is ignored.
///
/// # Safety
/// `expansion` must be a handle from this library not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn skein_expansion_free(expansion: *mut SkeinExpansion) {
    if !expansion.is_null() {
        drop(unsafe { Box::from_raw(expansion) });
    }
}

/// The colored invariant of the `(p, q)` torus knot at the given framing.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn skein_torus_knot_jones(
    p: i64,
    q: i64,
    color: i64,
    framing: i64,
    out: *mut *mut SkeinLaurent,
) -> SkeinStatus {
    if out.is_null() {
        return SkeinStatus::NullPointer;
    }
    match torus_knot_jones(p, q, color, framing) {
        Ok(value) => hand_out(out, SkeinLaurent(value)),
        Err(err) => err.into(),
    }
}

/// Recomputes the `(p, q)` expansion of `e_color` from a brute-force
/// diagram state sum and compares: `Ok` when the sides agree,
/// `VerifyFailed` when they differ, `BudgetExceeded` when the cabled
/// diagram is too large to enumerate.
#[no_mangle]
pub extern "C" fn skein_oracle_verify(p: i64, q: i64, color: i64) -> SkeinStatus {
    match verify_cable_expansion(p, q, color) {
        Ok(report) if report.matched => SkeinStatus::Ok,
        Ok(_) => SkeinStatus::VerifyFailed,
        Err(err) => err.into(),
    }
}

/// Releases a string allocated by this library; a null is ignored.
///
/// # Safety
/// `text` must be a string from this library not yet freed, or null.
#[no_mangle]
pub unsafe extern "C" fn skein_string_free(text: *mut c_char) {
    if !text.is_null() {
        drop(unsafe { CString::from_raw(text) });
    }
}
