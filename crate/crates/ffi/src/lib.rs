//! C ABI for `rmatrix`.
//!
//! Every function returns an [`RmxStatus`]. On anything but `Ok`, a message is
//! available from [`rmx_last_error_message`] on the same thread. Objects
//! returned through out-pointers are owned by the caller and released with
//! the matching `*_free` function. Strings are NUL-terminated UTF-8.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rmatrix::bialgebra::DirectSumElement;
use rmatrix::braid::{verify_braid_relations, verify_involution, RepSpace};
use rmatrix::json::block_family_to_json;
use rmatrix::monoid::{check_wcs_coassoc, check_wcs_unit};
use rmatrix::rmatrix::{
    verify_counit_r, verify_hexagon_left, verify_hexagon_right, verify_intertwiner,
    verify_p_equals_q, verify_triangularity, verify_ybe,
};
use rmatrix::suite::{dump, DumpTarget};
use rmatrix::{delta, verify_coassociativity, verify_counit_law, Error, Limits, RMatrixBlock, VerificationReport};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmxStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// An argument was outside the domain of the operation.
    Domain = 2,
    /// The request exceeded a resource cap.
    Resource = 3,
    /// An internal panic was caught at the boundary.
    Panic = 4,
}

/// Which verification [`rmx_verify`] runs, and how it reads `a`, `b`, `c`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RmxCheck {
    /// `(n, m) = (a, b)`
    Intertwiner = 0,
    /// `(n, m, l) = (a, b, c)`
    HexagonLeft = 1,
    /// `(n, m, l) = (a, b, c)`
    HexagonRight = 2,
    /// `(n, m, l) = (a, b, c)`
    PEqualsQ = 3,
    /// `(n, m) = (a, b)`
    Triangularity = 4,
    /// `(n, m, l) = (a, b, c)`
    YangBaxter = 5,
    /// `k_max = a`
    CounitR = 6,
    /// `(a, b, c)`
    WcsCoassoc = 7,
    /// `a`
    WcsUnit = 8,
    /// `n_max = a`
    CounitLaw = 9,
    /// `n_max = a`
    Coassociativity = 10,
    /// space `{1..a}`, tensor power `b`
    BraidRelations = 11,
    /// space `{1..a}`
    Involution = 12,
}

/// Opaque handle to a verification report.
pub struct RmxReport(VerificationReport);

/// Opaque handle to an R-matrix block `R^{(n,m)}`.
pub struct RmxRMatrix(RMatrixBlock);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(CString::new(msg).expect("NUL removed")));
}

fn fail(err: Error) -> RmxStatus {
    let status = match err {
        Error::Domain(_) => RmxStatus::Domain,
        Error::ResourceCap { .. } => RmxStatus::Resource,
    };
    set_error(err.to_string());
    status
}

fn null(name: &str) -> RmxStatus {
    set_error(format!("{name} is null"));
    RmxStatus::NullArgument
}

fn guard(body: impl FnOnce() -> RmxStatus) -> RmxStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            RmxStatus::Panic
        }
    }
}

fn limits() -> rmatrix::Result<Limits> {
    Limits::from_env()
}

fn into_c_string(s: String, out: *mut *mut c_char) -> RmxStatus {
    match CString::new(s) {
        Ok(c) => {
            // SAFETY: callers check `out` for null before getting here.
            unsafe { *out = c.into_raw() };
            RmxStatus::Ok
        }
        Err(_) => {
            set_error("string contains NUL");
            RmxStatus::Domain
        }
    }
}

/// Message describing the last failure on this thread, or null. The pointer
/// stays valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn rmx_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// `χ_{n,m}(i, j)`.
///
/// # Safety
/// `out_i` and `out_j` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_chi(n: u32, m: u32, i: u32, j: u32, out_i: *mut u32, out_j: *mut u32) -> RmxStatus {
    guard(|| {
        if out_i.is_null() || out_j.is_null() {
            return null("out_i/out_j");
        }
        match rmatrix::chi(n as usize, m as usize, i as usize, j as usize) {
            Ok((a, b)) => {
                *out_i = a as u32;
                *out_j = b as u32;
                RmxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Builds `R^{(n,m)}`.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_rmatrix_new(n: u32, m: u32, out: *mut *mut RmxRMatrix) -> RmxStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let built = limits()
            .and_then(|l| l.check_dim("R^(n,m)", (n as usize).saturating_mul(m as usize)))
            .and_then(|_| {
                if n == 0 || m == 0 {
                    return Err(Error::Domain("n and m must be positive".into()));
                }
                rmatrix::r_matrix(n as usize, m as usize)
            });
        match built {
            Ok(block) => {
                *out = Box::into_raw(Box::new(RmxRMatrix(block)));
                RmxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// `R^{(n,m)}(e_i ⊗ e_j) = e_{out_i} ⊗ e_{out_j}`.
///
/// # Safety
/// `r` must be null or a live handle from [`rmx_rmatrix_new`]; the out
/// pointers must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_rmatrix_apply(
    r: *const RmxRMatrix,
    i: u32,
    j: u32,
    out_i: *mut u32,
    out_j: *mut u32,
) -> RmxStatus {
    guard(|| {
        if r.is_null() || out_i.is_null() || out_j.is_null() {
            return null("r/out_i/out_j");
        }
        match (*r).0.apply(i as usize, j as usize) {
            Ok((a, b)) => {
                *out_i = a as u32;
                *out_j = b as u32;
                RmxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Releases an R-matrix handle. Null is ignored.
///
/// # Safety
/// `r` must be null or a handle from [`rmx_rmatrix_new`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn rmx_rmatrix_free(r: *mut RmxRMatrix) {
    if !r.is_null() {
        drop(Box::from_raw(r));
    }
}

fn run_check(check: RmxCheck, a: usize, b: usize, c: usize) -> rmatrix::Result<VerificationReport> {
    let l = limits()?;
    match check {
        RmxCheck::Intertwiner => verify_intertwiner(a, b, &l),
        RmxCheck::HexagonLeft => verify_hexagon_left(a, b, c, &l),
        RmxCheck::HexagonRight => verify_hexagon_right(a, b, c, &l),
        RmxCheck::PEqualsQ => {
            l.check_dim("M_n⊗M_m⊗M_l", a.saturating_mul(b).saturating_mul(c))?;
            verify_p_equals_q(a, b, c)
        }
        RmxCheck::Triangularity => verify_triangularity(a, b, &l),
        RmxCheck::YangBaxter => verify_ybe(a, b, c, &l),
        RmxCheck::CounitR => verify_counit_r(a, &l),
        RmxCheck::WcsCoassoc => check_wcs_coassoc(a as u64, b as u64, c as u64, &l),
        RmxCheck::WcsUnit => check_wcs_unit(a as u64, &l),
        RmxCheck::CounitLaw => verify_counit_law(a, &l),
        RmxCheck::Coassociativity => verify_coassociativity(a, &l),
        RmxCheck::BraidRelations => verify_braid_relations(&RepSpace::upto(a)?, b, &l),
        RmxCheck::Involution => verify_involution(&RepSpace::upto(a)?, &l),
    }
}

/// Runs one verification. Unused parameters are ignored.
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_verify(check: RmxCheck, a: u32, b: u32, c: u32, out: *mut *mut RmxReport) -> RmxStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        match run_check(check, a as usize, b as usize, c as usize) {
            Ok(report) => {
                *out = Box::into_raw(Box::new(RmxReport(report)));
                RmxStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Whether the checked identity held.
///
/// # Safety
/// `report` must be null or a live report handle; `out` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_report_passed(report: *const RmxReport, out: *mut bool) -> RmxStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return null("report/out");
        }
        *out = (*report).0.pass;
        RmxStatus::Ok
    })
}

/// The report as a one-line JSON object; free with [`rmx_string_free`].
///
/// # Safety
/// `report` must be null or a live report handle; `out` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_report_to_json(report: *const RmxReport, out: *mut *mut c_char) -> RmxStatus {
    guard(|| {
        if report.is_null() || out.is_null() {
            return null("report/out");
        }
        into_c_string((*report).0.to_json_line(false), out)
    })
}

/// Releases a report handle. Null is ignored.
///
/// # Safety
/// `report` must be null or a handle from [`rmx_verify`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn rmx_report_free(report: *mut RmxReport) {
    if !report.is_null() {
        drop(Box::from_raw(report));
    }
}

/// `Δ(E^{(n)}_{i,j})` as a block-family JSON document; free with
/// [`rmx_string_free`].
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_delta_json(n: u32, i: u32, j: u32, out: *mut *mut c_char) -> RmxStatus {
    guard(|| {
        if out.is_null() {
            return null("out");
        }
        let doc = limits()
            .and_then(|l| l.check_dim("Δ(E)", n as usize))
            .and_then(|_| DirectSumElement::unit(n as usize, i as usize, j as usize))
            .and_then(|x| delta(&x))
            .map(|d| block_family_to_json(&d));
        match doc {
            Ok(s) => into_c_string(s, out),
            Err(e) => fail(e),
        }
    })
}

/// Serializes a structural object named like the CLI's `--dump` argument,
/// e.g. `"chi:2,3"` or `"P:2,3,2"`; free with [`rmx_string_free`].
///
/// # Safety
/// `target` must be null or a NUL-terminated string; `out` must be null or
/// valid for writes.
#[no_mangle]
pub unsafe extern "C" fn rmx_dump_json(target: *const c_char, out: *mut *mut c_char) -> RmxStatus {
    guard(|| {
        if target.is_null() || out.is_null() {
            return null("target/out");
        }
        let Ok(text) = CStr::from_ptr(target).to_str() else {
            set_error("target is not UTF-8");
            return RmxStatus::Domain;
        };
        match limits().and_then(|l| dump(text.parse::<DumpTarget>()?, &l)) {
            Ok(s) => into_c_string(s, out),
            Err(e) => fail(e),
        }
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must be null or a string from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn rmx_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
