//! C ABI for the largest-root tests.
//!
//! Conventions:
//! * every fallible function returns a [`UnirmtStatus`]; results travel
//!   through out-pointers, and `unirmt_last_error_message` returns a
//!   thread-local description of the most recent failure;
//! * matrices are dense row-major `double` arrays;
//! * the Tracy-Widom table is an opaque handle; passing NULL where a table
//!   is expected selects the embedded table;
//! * panics never unwind across the boundary (they map to
//!   `UNIRMT_STATUS_INTERNAL`).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;

use unirmt::calibrate::DimensionQuad;
use unirmt::cca::CcaInput;
use unirmt::error::Error;
use unirmt::linalg::{unified_omega_lambda1, DataMatrix, Orientation};
use unirmt::linmodel::LinModelInput;
use unirmt::manova::GroupedSample;
use unirmt::mat::Mat;
use unirmt::report::{Method, TestReport};
use unirmt::tw::Tw1Table;

/// Opaque handle to a Tracy-Widom distribution table.
pub struct UnirmtTw {
    inner: Tw1Table,
}

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnirmtStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    InvalidDimension = 3,
    RankDeficient = 4,
    NotPositiveDefinite = 5,
    OrthogonalityViolation = 6,
    CalibrationDomain = 7,
    NoRoot = 8,
    Saturated = 9,
    NonConvergence = 10,
    InvalidConfig = 11,
    Io = 12,
    Parse = 13,
    Internal = 14,
}

/// Which test produced a report.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnirmtMethod {
    Cca = 0,
    Manova = 1,
    LinModelLinear = 2,
    LinModelIntraSubject = 3,
    UnifiedOmega = 4,
}

/// Flat test outcome. `lambda1` and `rescaled` are IEEE infinities in the
/// saturated (λ₁ = ∞) and zero-statistic (λ₁ = 0) regimes.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct UnirmtReport {
    pub method: UnirmtMethod,
    pub lambda1: f64,
    pub saturated: bool,
    pub rescaled: f64,
    pub p_value: f64,
    pub alpha: f64,
    pub reject: bool,
    pub m1: usize,
    pub n1: usize,
    pub n2: usize,
    pub n: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::new("").unwrap());
}

fn set_error(msg: &str) {
    let sanitized = msg.replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(sanitized).unwrap_or_default();
    });
}

fn status_of(e: &Error) -> UnirmtStatus {
    match e {
        Error::Dimension(_) => UnirmtStatus::InvalidDimension,
        Error::Argument(_) => UnirmtStatus::InvalidArgument,
        Error::RankDeficient { .. } => UnirmtStatus::RankDeficient,
        Error::NotPositiveDefinite(_) => UnirmtStatus::NotPositiveDefinite,
        Error::Orthogonality(_) => UnirmtStatus::OrthogonalityViolation,
        Error::Calibration(_) => UnirmtStatus::CalibrationDomain,
        Error::NoRoot { .. } => UnirmtStatus::NoRoot,
        Error::Saturated => UnirmtStatus::Saturated,
        Error::NonConvergence(_) => UnirmtStatus::NonConvergence,
        Error::Config(_) => UnirmtStatus::InvalidConfig,
        Error::Io(_) => UnirmtStatus::Io,
        Error::Parse { .. } => UnirmtStatus::Parse,
    }
}

fn fail(e: Error) -> UnirmtStatus {
    set_error(&e.to_string());
    status_of(&e)
}

fn guarded(f: impl FnOnce() -> UnirmtStatus) -> UnirmtStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(status) => status,
        Err(_) => {
            set_error("internal panic");
            UnirmtStatus::Internal
        }
    }
}

/// Message describing the most recent error on this thread. The pointer
/// stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn unirmt_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn unirmt_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// New handle to the embedded Tracy-Widom table. Free with
/// `unirmt_tw_free`.
#[no_mangle]
pub extern "C" fn unirmt_tw_new_default() -> *mut UnirmtTw {
    Box::into_raw(Box::new(UnirmtTw {
        inner: Tw1Table::builtin().clone(),
    }))
}

/// Loads a replacement table from a two-column CSV (abscissa, cdf).
///
/// # Safety
/// `path` must be a valid NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn unirmt_tw_new_from_csv(
    path: *const c_char,
    out: *mut *mut UnirmtTw,
) -> UnirmtStatus {
    guarded(|| {
        if path.is_null() || out.is_null() {
            set_error("null pointer argument");
            return UnirmtStatus::NullPointer;
        }
        let path = match unsafe { CStr::from_ptr(path) }.to_str() {
            Ok(s) => s,
            Err(_) => {
                set_error("path is not valid UTF-8");
                return UnirmtStatus::InvalidArgument;
            }
        };
        match Tw1Table::from_csv(Path::new(path)) {
            Ok(table) => {
                unsafe { *out = Box::into_raw(Box::new(UnirmtTw { inner: table })) };
                UnirmtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Frees a table handle; NULL is ignored.
///
/// # Safety
/// `tw` must be NULL or a pointer obtained from this library.
#[no_mangle]
pub unsafe extern "C" fn unirmt_tw_free(tw: *mut UnirmtTw) {
    if !tw.is_null() {
        drop(unsafe { Box::from_raw(tw) });
    }
}

fn table_of<'a>(tw: *const UnirmtTw) -> &'a Tw1Table {
    if tw.is_null() {
        Tw1Table::builtin()
    } else {
        unsafe { &(*tw).inner }
    }
}

fn tw_query(
    tw: *const UnirmtTw,
    x: f64,
    out: *mut f64,
    query: impl Fn(&Tw1Table, f64) -> unirmt::error::Result<f64>,
) -> UnirmtStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return UnirmtStatus::NullPointer;
        }
        match query(table_of(tw), x) {
            Ok(v) => {
                unsafe { *out = v };
                UnirmtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// CDF of the type-1 Tracy-Widom law.
///
/// # Safety
/// `tw` must be NULL (embedded table) or a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn unirmt_tw_cdf(
    tw: *const UnirmtTw,
    s: f64,
    out: *mut f64,
) -> UnirmtStatus {
    tw_query(tw, s, out, |t, v| t.cdf(v))
}

/// Quantile of the type-1 Tracy-Widom law (probability in (0, 1)).
///
/// # Safety
/// `tw` must be NULL (embedded table) or a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn unirmt_tw_quantile(
    tw: *const UnirmtTw,
    p: f64,
    out: *mut f64,
) -> UnirmtStatus {
    tw_query(tw, p, out, |t, v| t.quantile(v))
}

/// Upper-tail probability 1 − cdf(s) of the type-1 Tracy-Widom law.
///
/// # Safety
/// `tw` must be NULL (embedded table) or a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn unirmt_tw_pvalue(
    tw: *const UnirmtTw,
    s: f64,
    out: *mut f64,
) -> UnirmtStatus {
    tw_query(tw, s, out, |t, v| t.pvalue(v))
}

unsafe fn slice_to_mat(
    data: *const f64,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<Mat, UnirmtStatus> {
    if data.is_null() {
        set_error(&format!("null pointer for {what}"));
        return Err(UnirmtStatus::NullPointer);
    }
    let len = rows.checked_mul(cols).ok_or_else(|| {
        set_error(&format!("{what}: dimension overflow"));
        UnirmtStatus::InvalidDimension
    })?;
    let values = unsafe { std::slice::from_raw_parts(data, len) }.to_vec();
    Mat::from_vec(rows, cols, values).map_err(fail)
}

fn write_report(report: &TestReport, out: *mut UnirmtReport) -> UnirmtStatus {
    let method = match report.method {
        Method::Cca => UnirmtMethod::Cca,
        Method::Manova => UnirmtMethod::Manova,
        Method::LinModelLinear => UnirmtMethod::LinModelLinear,
        Method::LinModelIntraSubject => UnirmtMethod::LinModelIntraSubject,
        Method::UnifiedOmega => UnirmtMethod::UnifiedOmega,
    };
    let flat = UnirmtReport {
        method,
        lambda1: report.lambda1,
        saturated: report.saturated,
        rescaled: report.rescaled,
        p_value: report.p_value,
        alpha: report.alpha,
        reject: report.reject,
        m1: report.dims.m1,
        n1: report.dims.n1,
        n2: report.dims.n2,
        n: report.dims.n,
    };
    unsafe { *out = flat };
    UnirmtStatus::Ok
}

/// Largest eigenvalue of (Z U₂U₂ᵀ Zᵀ)⁻¹ Z U₁U₁ᵀ Zᵀ.
///
/// `z` is m1 x n, `u1` is n x n1, `u2` is n x n_minus_n2, all row-major;
/// the isometry conditions are verified.
///
/// # Safety
/// All data pointers must reference arrays of the stated sizes; `out` must
/// be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn unirmt_omega_lambda1(
    z: *const f64,
    m1: usize,
    n: usize,
    u1: *const f64,
    n1: usize,
    u2: *const f64,
    n_minus_n2: usize,
    out: *mut f64,
) -> UnirmtStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return UnirmtStatus::NullPointer;
        }
        let zm = match unsafe { slice_to_mat(z, m1, n, "z") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let u1m = match unsafe { slice_to_mat(u1, n, n1, "u1") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let u2m = match unsafe { slice_to_mat(u2, n, n_minus_n2, "u2") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        match unified_omega_lambda1(&zm, &u1m, &u2m) {
            Ok(v) => {
                unsafe { *out = v };
                UnirmtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Independence test; `z` is n x m1 and `y` is n x m2, observations in
/// rows. A saturated statistic is reported through the report, not as an
/// error.
///
/// # Safety
/// Data pointers must reference arrays of the stated sizes; `out` must be
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn unirmt_cca_test(
    tw: *const UnirmtTw,
    z: *const f64,
    n: usize,
    m1: usize,
    y: *const f64,
    m2: usize,
    alpha: f64,
    out: *mut UnirmtReport,
) -> UnirmtStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return UnirmtStatus::NullPointer;
        }
        let zm = match unsafe { slice_to_mat(z, n, m1, "z") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let ym = match unsafe { slice_to_mat(y, n, m2, "y") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let result = (|| {
            let input = CcaInput::new(
                DataMatrix::new(zm, Orientation::ObservationsInRows)?,
                DataMatrix::new(ym, Orientation::ObservationsInRows)?,
                alpha,
            )?;
            unirmt::cca::cca_independence_test(&input, table_of(tw))
        })();
        match result {
            Ok(report) => write_report(&report, out),
            Err(e) => fail(e),
        }
    })
}

/// Equality-of-means test. `data` stacks all observations (n_total x p,
/// row-major) group by group; `group_sizes` lists the per-group counts.
///
/// # Safety
/// Pointers must reference arrays of the stated sizes; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn unirmt_manova_test(
    tw: *const UnirmtTw,
    data: *const f64,
    p: usize,
    group_sizes: *const usize,
    n_groups: usize,
    alpha: f64,
    out: *mut UnirmtReport,
) -> UnirmtStatus {
    guarded(|| {
        if out.is_null() || group_sizes.is_null() {
            set_error("null pointer argument");
            return UnirmtStatus::NullPointer;
        }
        let sizes = unsafe { std::slice::from_raw_parts(group_sizes, n_groups) };
        let n_total: usize = sizes.iter().sum();
        let all = match unsafe { slice_to_mat(data, n_total, p, "data") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let result = (|| {
            let mut groups = Vec::with_capacity(n_groups);
            let mut row = 0usize;
            for &ni in sizes {
                let g = Mat::from_fn(ni, p, |i, j| all[(row + i, j)]);
                groups.push(DataMatrix::new(g, Orientation::ObservationsInRows)?);
                row += ni;
            }
            let sample = GroupedSample::new(groups, alpha)?;
            unirmt::manova::manova_test(&sample, table_of(tw))
        })();
        match result {
            Ok(report) => write_report(&report, out),
            Err(e) => fail(e),
        }
    })
}

/// Linear (`d` NULL) or intra-subject (`d` = p2 x g2) hypothesis test in
/// the multivariate linear model. `gamma` may be NULL for a zero
/// hypothesized value.
///
/// # Safety
/// Pointers must reference arrays of the stated sizes; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn unirmt_lm_test(
    tw: *const UnirmtTw,
    y: *const f64,
    n: usize,
    p2: usize,
    x: *const f64,
    p1: usize,
    c: *const f64,
    g1: usize,
    gamma: *const f64,
    d: *const f64,
    g2: usize,
    alpha: f64,
    out: *mut UnirmtReport,
) -> UnirmtStatus {
    guarded(|| {
        if out.is_null() {
            set_error("null out pointer");
            return UnirmtStatus::NullPointer;
        }
        let ym = match unsafe { slice_to_mat(y, n, p2, "y") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let xm = match unsafe { slice_to_mat(x, n, p1, "x") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let cm = match unsafe { slice_to_mat(c, g1, p1, "c") } {
            Ok(m) => m,
            Err(s) => return s,
        };
        let dm = if d.is_null() {
            None
        } else {
            match unsafe { slice_to_mat(d, p2, g2, "d") } {
                Ok(m) => Some(m),
                Err(s) => return s,
            }
        };
        let response_cols = dm.as_ref().map(|m| m.cols()).unwrap_or(p2);
        let gm = if gamma.is_null() {
            Mat::zeros(g1, response_cols)
        } else {
            match unsafe { slice_to_mat(gamma, g1, response_cols, "gamma") } {
                Ok(m) => m,
                Err(s) => return s,
            }
        };
        let result = (|| {
            let with_d = dm.is_some();
            let input = LinModelInput::new(
                DataMatrix::new(ym, Orientation::ObservationsInRows)?,
                DataMatrix::new(xm, Orientation::ObservationsInRows)?,
                cm,
                dm,
                gm,
                alpha,
            )?;
            if with_d {
                unirmt::linmodel::intra_subject_test(&input, table_of(tw))
            } else {
                unirmt::linmodel::linear_hypothesis_test(&input, table_of(tw))
            }
        })();
        match result {
            Ok(report) => write_report(&report, out),
            Err(e) => fail(e),
        }
    })
}

/// Log-transform calibration parameters for a dimension tuple.
///
/// # Safety
/// `mu_out` and `sigma_out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn unirmt_log_rescale_params(
    m1: usize,
    n1: usize,
    n2: usize,
    n: usize,
    mu_out: *mut f64,
    sigma_out: *mut f64,
) -> UnirmtStatus {
    guarded(|| {
        if mu_out.is_null() || sigma_out.is_null() {
            set_error("null out pointer");
            return UnirmtStatus::NullPointer;
        }
        let result = (|| {
            let quad = DimensionQuad::new(m1, n1, n2, n)?;
            unirmt::calibrate::log_rescale_params(quad)
        })();
        match result {
            Ok(p) => {
                unsafe {
                    *mu_out = p.mu_tilde;
                    *sigma_out = p.sigma_tilde;
                }
                UnirmtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}
