//! C interface to `hassett-kit`.
//!
//! Objects are opaque handles created by `hk_*_new`/`hk_*_parse` and released
//! with the matching `hk_*_free`. Every fallible function returns an
//! [`HkStatus`]; on failure a message is kept per thread and can be fetched
//! with [`hk_last_error_message`]. Strings returned through `out` parameters
//! are owned by the caller and released with [`hk_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hassett_kit::deform::{self, DeformError};
use hassett_kit::groebner::{self, GroebnerError, Limits, MonomialOrder, QuotientDimension};
use hassett_kit::poly::{parse_poly, parse_poly_list, PolyError, Polynomial, VariableSet};
use hassett_kit::rational::{format_rational, parse_rational, Rational};
use hassett_kit::symmetry::{self, GroupOrder, SymmetryError};
use hassett_kit::weights::{self, Mode, WeightData, WeightError};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HkStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    /// The input is well formed but refused, e.g. inadmissible weights.
    Rejected = 4,
    ResourceLimit = 5,
    Internal = 6,
    Panic = 7,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HkMode {
    Strict = 0,
    SumTwo = 1,
}

impl From<HkMode> for Mode {
    fn from(m: HkMode) -> Self {
        match m {
            HkMode::Strict => Mode::Strict,
            HkMode::SumTwo => Mode::SumTwo,
        }
    }
}

/// Validated weight data.
pub struct HkWeightData {
    inner: WeightData,
}

/// A polynomial with rational coefficients over named variables.
pub struct HkPolynomial {
    inner: Polynomial,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(HkStatus, String);

type FfiResult<T> = Result<T, Failure>;

impl From<WeightError> for Failure {
    fn from(e: WeightError) -> Self {
        let status = match e {
            WeightError::Parse(_) => HkStatus::ParseError,
            _ => HkStatus::Rejected,
        };
        Failure(status, e.to_string())
    }
}

impl From<SymmetryError> for Failure {
    fn from(e: SymmetryError) -> Self {
        let status = match e {
            SymmetryError::ResourceLimit(_) => HkStatus::ResourceLimit,
            _ => HkStatus::Rejected,
        };
        Failure(status, e.to_string())
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        Failure(HkStatus::ParseError, e.to_string())
    }
}

impl From<GroebnerError> for Failure {
    fn from(e: GroebnerError) -> Self {
        let status = match e {
            GroebnerError::NotIsolated(_) => HkStatus::Rejected,
            GroebnerError::CoefficientOverflow { .. } => HkStatus::ResourceLimit,
            GroebnerError::Poly(_) => HkStatus::ParseError,
            GroebnerError::VariableMismatch => HkStatus::ParseError,
        };
        Failure(status, e.to_string())
    }
}

impl From<DeformError> for Failure {
    fn from(e: DeformError) -> Self {
        match e {
            DeformError::Groebner(g) => g.into(),
            DeformError::Symmetry(s) => s.into(),
            DeformError::NotIsolatedSingularities(_) | DeformError::NotHomogeneous | DeformError::ZeroPoint => {
                Failure(HkStatus::Rejected, e.to_string())
            }
            DeformError::Internal(_) => Failure(HkStatus::Internal, e.to_string()),
        }
    }
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> FfiResult<()>) -> HkStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
            HkStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("panic inside hassett-kit");
            HkStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char) -> FfiResult<&'a str> {
    if p.is_null() {
        return Err(Failure(HkStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(HkStatus::InvalidUtf8, "string argument is not UTF-8".into()))
}

unsafe fn out_ref<'a, T>(p: *mut T) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or_else(|| Failure(HkStatus::NullPointer, "null output pointer".into()))
}

unsafe fn handle<'a, T>(p: *const T) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| Failure(HkStatus::NullPointer, "null handle".into()))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " ")).expect("no interior nul").into_raw()
}

unsafe fn rationals(coords: *const *const c_char, len: usize) -> FfiResult<Vec<Rational>> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if coords.is_null() {
        return Err(Failure(HkStatus::NullPointer, "null coordinate array".into()));
    }
    std::slice::from_raw_parts(coords, len)
        .iter()
        .map(|&c| {
            let t = text(c)?;
            parse_rational(t).map_err(|e| Failure(HkStatus::ParseError, e.0))
        })
        .collect()
}

/// Message for the most recent failure on this thread, or NULL. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn hk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses weight data from JSON: either an array of fraction strings (using
/// `genus` and `mode`) or an object with "genus", "mode" and "weights".
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_weight_data_parse(
    json: *const c_char,
    genus: u32,
    mode: HkMode,
    out: *mut *mut HkWeightData,
) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        let inner = weights::weight_data_from_json(text(json)?, genus, mode.into())?;
        *out = Box::into_raw(Box::new(HkWeightData { inner }));
        Ok(())
    })
}

/// The Kapranov weights `A_{r,s}[n]`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_kapranov_weights(n: usize, r: usize, s: usize, out: *mut *mut HkWeightData) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        let inner = weights::kapranov_weights(n, r, s)?;
        *out = Box::into_raw(Box::new(HkWeightData { inner }));
        Ok(())
    })
}

/// # Safety
/// `w` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hk_weight_data_free(w: *mut HkWeightData) {
    if !w.is_null() {
        drop(Box::from_raw(w));
    }
}

/// Number of markings, or 0 for a NULL handle.
///
/// # Safety
/// `w` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hk_weight_data_len(w: *const HkWeightData) -> usize {
    w.as_ref().map_or(0, |w| w.inner.n())
}

/// JSON object with "genus", "mode" and "weights".
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_weight_data_to_json(w: *const HkWeightData, out: *mut *mut c_char) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = owned_string(handle(w)?.inner.to_json().to_string());
        Ok(())
    })
}

/// `3g - 3 + n`.
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_moduli_dimension(w: *const HkWeightData, out: *mut i64) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = weights::moduli_dimension(&handle(w)?.inner);
        Ok(())
    })
}

/// Whether the transposition of the 1-based labels `i` and `j` is admissible.
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_is_admissible_transposition(
    w: *const HkWeightData,
    i: usize,
    j: usize,
    out: *mut bool,
) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = symmetry::is_admissible_transposition(&handle(w)?.inner, i, j)?;
        Ok(())
    })
}

/// Order of the group generated by admissible transpositions.
///
/// # Safety
/// `w` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_admissible_group_order(w: *const HkWeightData, out: *mut u64) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = symmetry::admissible_group(&handle(w)?.inner)?.order();
        Ok(())
    })
}

/// Automorphism group order of the coarse moduli space. Sets `*finite` to
/// false (and `*order` to 0) when the group is infinite or not known in
/// closed form.
///
/// # Safety
/// `w` must be a live handle; `order` and `finite` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hk_aut_order(w: *const HkWeightData, order: *mut u64, finite: *mut bool) -> HkStatus {
    guard(|| {
        let order = out_ref(order)?;
        let finite = out_ref(finite)?;
        let d = symmetry::aut_descriptor(&handle(w)?.inner)?;
        match &d.order {
            GroupOrder::Finite(n) => {
                *order = u64::try_from(n)
                    .map_err(|_| Failure(HkStatus::ResourceLimit, format!("order {n} exceeds 64 bits")))?;
                *finite = true;
            }
            GroupOrder::Infinite | GroupOrder::Unknown => {
                *order = 0;
                *finite = false;
            }
        }
        Ok(())
    })
}

/// Parses `expr` over the comma-separated variable list `vars`.
///
/// # Safety
/// `vars` and `expr` must be NUL-terminated strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_poly_parse(
    vars: *const c_char,
    expr: *const c_char,
    out: *mut *mut HkPolynomial,
) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        let v = VariableSet::parse(text(vars)?)?;
        let inner = parse_poly(text(expr)?, &v)?;
        *out = Box::into_raw(Box::new(HkPolynomial { inner }));
        Ok(())
    })
}

/// # Safety
/// `p` must be NULL or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn hk_poly_free(p: *mut HkPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Canonical text form.
///
/// # Safety
/// `p` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_poly_to_string(p: *const HkPolynomial, out: *mut *mut c_char) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = owned_string(handle(p)?.inner.to_string());
        Ok(())
    })
}

/// Partial derivative with respect to the variable named `var`.
///
/// # Safety
/// `p` must be a live handle, `var` a NUL-terminated string and `out` a
/// valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_poly_derivative(
    p: *const HkPolynomial,
    var: *const c_char,
    out: *mut *mut HkPolynomial,
) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        let inner = handle(p)?.inner.partial_derivative(text(var)?)?;
        *out = Box::into_raw(Box::new(HkPolynomial { inner }));
        Ok(())
    })
}

/// Evaluates at a point given as `len` fraction strings; the value is
/// returned as a fraction string.
///
/// # Safety
/// `p` must be a live handle, `coords` an array of `len` NUL-terminated
/// strings and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_poly_evaluate(
    p: *const HkPolynomial,
    coords: *const *const c_char,
    len: usize,
    out: *mut *mut c_char,
) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        let point = rationals(coords, len)?;
        let value = handle(p)?.inner.evaluate(&point)?;
        *out = owned_string(format_rational(&value));
        Ok(())
    })
}

/// Local Tyurina number of `p` at the point given by `len` fraction strings.
///
/// # Safety
/// As for [`hk_poly_evaluate`].
#[no_mangle]
pub unsafe extern "C" fn hk_tyurina_number(
    p: *const HkPolynomial,
    coords: *const *const c_char,
    len: usize,
    out: *mut u64,
) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        let point = rationals(coords, len)?;
        let ideal = groebner::tyurina_ideal(&handle(p)?.inner);
        *out = groebner::local_multiplicity_with(&ideal, &point, &Limits::from_env())?;
        Ok(())
    })
}

/// Dimension of the quotient by the ideal with generators `gens` (separated
/// by ';'). `*finite` is false when the quotient is infinite dimensional.
///
/// # Safety
/// `vars` and `gens` must be NUL-terminated strings; `dim` and `finite`
/// valid pointers.
#[no_mangle]
pub unsafe extern "C" fn hk_quotient_dimension(
    vars: *const c_char,
    gens: *const c_char,
    dim: *mut u64,
    finite: *mut bool,
) -> HkStatus {
    guard(|| {
        let dim = out_ref(dim)?;
        let finite = out_ref(finite)?;
        let v = VariableSet::parse(text(vars)?)?;
        let g = parse_poly_list(text(gens)?, &v)?;
        let gb = groebner::buchberger_over(&v, &g, MonomialOrder::GrevLex, &Limits::from_env())?;
        match groebner::quotient_dimension(&gb) {
            QuotientDimension::Finite { value, .. } => {
                *dim = value;
                *finite = true;
            }
            QuotientDimension::Infinite => {
                *dim = 0;
                *finite = false;
            }
        }
        Ok(())
    })
}

/// Total Tyurina number of the Segre cubic, summed over charts.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_segre_audit(out: *mut u64) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        *out = deform::singular_audit(&deform::segre_cubic())?;
        Ok(())
    })
}

/// The deformation ledger of the Segre cubic as a JSON object.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hk_segre_ledger_json(out: *mut *mut c_char) -> HkStatus {
    guard(|| {
        let out = out_ref(out)?;
        let ledger = deform::build_ledger()?;
        let json = serde_json::to_string(&ledger).map_err(|e| Failure(HkStatus::Internal, e.to_string()))?;
        *out = owned_string(json);
        Ok(())
    })
}
