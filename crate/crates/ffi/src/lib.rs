//! C ABI for `gfquad`.
//!
//! Fields are opaque handles created by [`gfq_field_new`] and released by
//! [`gfq_field_free`]. Every fallible function returns a [`GfqStatus`]; on
//! failure a message is available from [`gfq_last_error`] on the same
//! thread. Strings returned through out-parameters are owned by the caller
//! and must be released with [`gfq_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use gfquad::enumeration::{enumerate_primitive_quadratics, rows, tables};
use gfquad::oracle::cross_validate;
use gfquad::text::field_from_text;
use gfquad::{build_extension, euler_phi, factor_x_q1_minus_c, is_primitive_quadratic};
use gfquad::{GaloisField, MonicQuadratic, Poly};
use serde_json::json;

/// Largest `q_max` accepted by [`gfq_verify`].
pub const GFQ_VERIFY_MAX_Q: u64 = 256;

/// Result code of every fallible call.
#[repr(C)]
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GfqStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// The input could not be parsed or violates a precondition.
    InvalidArgument = 3,
    /// A field could not be constructed from the given parameters.
    InvalidField = 4,
    /// An internal error; the library state is unaffected.
    Internal = 5,
}

/// Opaque handle to a finite field.
pub struct GfqField {
    inner: GaloisField,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Failure(GfqStatus, String);

type Ffi<T> = Result<T, Failure>;

fn fail<T>(status: GfqStatus, msg: impl Into<String>) -> Ffi<T> {
    Err(Failure(status, msg.into()))
}

/// Runs `body`, converting errors and panics to status codes.
fn guard(body: impl FnOnce() -> Ffi<()>) -> GfqStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => GfqStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal error");
            GfqStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Ffi<&'a str> {
    if p.is_null() {
        return fail(GfqStatus::NullPointer, format!("{what} is null"));
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|_| fail(GfqStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn optional_text<'a>(p: *const c_char, what: &str) -> Ffi<Option<&'a str>> {
    if p.is_null() {
        Ok(None)
    } else {
        text(p, what).map(Some)
    }
}

unsafe fn field<'a>(f: *const GfqField) -> Ffi<&'a GaloisField> {
    f.as_ref()
        .map(|h| &h.inner)
        .ok_or(Failure(GfqStatus::NullPointer, "field is null".into()))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Ffi<()> {
    if out.is_null() {
        return fail(GfqStatus::NullPointer, format!("{what} is null"));
    }
    out.write(value);
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Ffi<()> {
    let c = CString::new(s).or_else(|_| fail(GfqStatus::Internal, "string contains NUL"))?;
    write_out(out, c.into_raw(), "string out-parameter")
}

unsafe fn write_json(out: *mut *mut c_char, value: &serde_json::Value) -> Ffi<()> {
    write_string(out, value.to_string())
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn gfq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a pointer obtained from this library that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn gfq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds GF(p^m). `modulus` (e.g. `"x^3+x+1"`) and `alpha` (canonical
/// integer, `"[c0,c1,...]"` or a polynomial in x) may be null for the
/// defaults. On success `*out` receives a handle for [`gfq_field_free`].
///
/// # Safety
/// String arguments must be null or NUL-terminated; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn gfq_field_new(
    p: u64,
    m: u32,
    modulus: *const c_char,
    alpha: *const c_char,
    out: *mut *mut GfqField,
) -> GfqStatus {
    guard(|| {
        if out.is_null() {
            return fail(GfqStatus::NullPointer, "out is null");
        }
        let modulus = optional_text(modulus, "modulus")?;
        let alpha = optional_text(alpha, "alpha")?;
        let inner = field_from_text(p, m, modulus, alpha)
            .or_else(|e| fail(GfqStatus::InvalidField, e.to_string()))?;
        write_out(out, Box::into_raw(Box::new(GfqField { inner })), "out")
    })
}

/// Releases a field handle. Null is ignored.
///
/// # Safety
/// `f` must be null or a live handle from [`gfq_field_new`].
#[no_mangle]
pub unsafe extern "C" fn gfq_field_free(f: *mut GfqField) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Order q of the field, or 0 for a null handle.
///
/// # Safety
/// `f` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn gfq_field_order(f: *const GfqField) -> u32 {
    f.as_ref().map_or(0, |h| h.inner.order())
}

/// Decides primitivity of the monic quadratic `poly`. `*primitive` receives
/// the decision; if `verdict_json` is non-null it receives the verdict
/// record `{primitive, reason, h_terms?, q_class}`.
///
/// # Safety
/// `f` must be a live handle, `poly` NUL-terminated, `primitive` writable,
/// `verdict_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gfq_test(
    f: *const GfqField,
    poly: *const c_char,
    primitive: *mut bool,
    verdict_json: *mut *mut c_char,
) -> GfqStatus {
    guard(|| {
        let field = field(f)?;
        let text = text(poly, "poly")?;
        let parsed = field
            .parse_poly(text)
            .or_else(|e| fail(GfqStatus::InvalidArgument, e.to_string()))?;
        if parsed.degree() != Some(2) {
            return fail(
                GfqStatus::InvalidArgument,
                format!("{text:?} is not of degree two"),
            );
        }
        let q = MonicQuadratic::from_poly(&parsed).ok_or(Failure(
            GfqStatus::InvalidArgument,
            format!("{text:?} is not monic"),
        ))?;
        let verdict = is_primitive_quadratic(field, q);
        write_out(primitive, verdict.primitive, "primitive")?;
        if !verdict_json.is_null() {
            let record = serde_json::to_string(&verdict.record(field))
                .or_else(|e| fail(GfqStatus::Internal, e.to_string()))?;
            write_string(verdict_json, record)?;
        }
        Ok(())
    })
}

/// Number of primitive quadratics produced by the enumeration.
///
/// # Safety
/// `f` must be a live handle and `count` writable.
#[no_mangle]
pub unsafe extern "C" fn gfq_enumerate_count(f: *const GfqField, count: *mut u64) -> GfqStatus {
    guard(|| {
        let n = enumerate_primitive_quadratics(field(f)?).len() as u64;
        write_out(count, n, "count")
    })
}

/// The enumeration as JSON: index sets, count check and rows
/// `{q, b, c, b_log, c_log}`.
///
/// # Safety
/// `f` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gfq_enumerate_json(
    f: *const GfqField,
    out: *mut *mut c_char,
) -> GfqStatus {
    guard(|| {
        let field = field(f)?;
        let t = tables(field);
        let polys = gfquad::enumeration::expand(field, &t);
        let q = field.order() as u64;
        let expected = euler_phi(q * q - 1) / 2;
        write_json(
            out,
            &json!({
                "q": q,
                "delta": t.delta,
                "R": t.r,
                "B": t.b,
                "J": t.j,
                "I": t.i,
                "count": polys.len(),
                "expected_count": expected,
                "count_check": polys.len() as u64 == expected,
                "polynomials": rows(field, &polys),
            }),
        )
    })
}

/// Factorization of `x^(q+1) - c` as JSON.
///
/// # Safety
/// `f` must be a live handle, `c` NUL-terminated and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn gfq_factor_json(
    f: *const GfqField,
    c: *const c_char,
    out: *mut *mut c_char,
) -> GfqStatus {
    guard(|| {
        let field = field(f)?;
        let c = field
            .parse_elem(text(c, "c")?)
            .or_else(|e| fail(GfqStatus::InvalidArgument, e.to_string()))?;
        let ext =
            build_extension(field).or_else(|e| fail(GfqStatus::InvalidField, e.to_string()))?;
        let report = factor_x_q1_minus_c(&ext, c)
            .or_else(|e| fail(GfqStatus::InvalidArgument, e.to_string()))?;
        let show = |p: &Poly| field.format_poly(p);
        let linear: Vec<String> = report
            .linear_factors
            .iter()
            .map(|&r| show(&Poly::new(field, vec![field.neg(r), field.one()]).expect("valid")))
            .collect();
        let quadratic: Vec<String> = report
            .quadratic_factors
            .iter()
            .map(|g| show(&g.to_poly(field)))
            .collect();
        write_json(
            out,
            &json!({
                "q": field.order(),
                "c": field.format_elem(c),
                "class_index": report.class_index,
                "class_size": report.class_elements.len(),
                "linear_factors": linear,
                "quadratic_factors": quadratic,
                "product_matches": report.product_matches(field),
            }),
        )
    })
}

/// Cross-validates the characterization and the enumeration against the
/// order computation for every prime power `q <= q_max`. `*passed` receives
/// the overall outcome; `report_json`, if non-null, the per-field records.
///
/// # Safety
/// `passed` must be writable; `report_json` null or writable.
#[no_mangle]
pub unsafe extern "C" fn gfq_verify(
    q_max: u64,
    passed: *mut bool,
    report_json: *mut *mut c_char,
) -> GfqStatus {
    guard(|| {
        if !(2..=GFQ_VERIFY_MAX_Q).contains(&q_max) {
            return fail(
                GfqStatus::InvalidArgument,
                format!("q_max must lie in [2, {GFQ_VERIFY_MAX_Q}]"),
            );
        }
        let report = cross_validate(q_max);
        write_out(passed, report.all_passed(), "passed")?;
        if !report_json.is_null() {
            let v = serde_json::to_string(&report.fields)
                .or_else(|e| fail(GfqStatus::Internal, e.to_string()))?;
            write_string(report_json, v)?;
        }
        Ok(())
    })
}
