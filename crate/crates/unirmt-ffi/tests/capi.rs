//! Exercises the C entry points from Rust, including the status-code and
//! last-error contracts.

use std::ffi::CStr;
use unirmt_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(unirmt_last_error_message()) }
        .to_str()
        .unwrap()
        .to_string()
}

fn random_data(rows: usize, cols: usize, seed: u64) -> Vec<f64> {
    let mut rng = unirmt::rng::RngStream::from_seed(seed);
    (0..rows * cols).map(|_| rng.standard_normal()).collect()
}

#[test]
fn tw_queries_through_default_and_owned_handles() {
    let mut out = 0.0f64;
    // NULL handle selects the embedded table
    let st = unsafe { unirmt_tw_cdf(std::ptr::null(), 0.98, &mut out) };
    assert_eq!(st, UnirmtStatus::Ok);
    assert!((out - 0.95).abs() < 0.005);

    let tw = unirmt_tw_new_default();
    assert!(!tw.is_null());
    let st = unsafe { unirmt_tw_quantile(tw, 0.95, &mut out) };
    assert_eq!(st, UnirmtStatus::Ok);
    assert!((out - 0.98).abs() < 0.01);
    let st = unsafe { unirmt_tw_pvalue(tw, 2.02, &mut out) };
    assert_eq!(st, UnirmtStatus::Ok);
    assert!((out - 0.01).abs() < 0.005);
    unsafe { unirmt_tw_free(tw) };
}

#[test]
fn error_paths_set_status_and_message() {
    let mut out = 0.0f64;
    let st = unsafe { unirmt_tw_quantile(std::ptr::null(), 1.5, &mut out) };
    assert_eq!(st, UnirmtStatus::InvalidArgument);
    assert!(last_error().contains("(0, 1)"), "{}", last_error());

    let st = unsafe { unirmt_tw_cdf(std::ptr::null(), f64::NAN, &mut out) };
    assert_eq!(st, UnirmtStatus::InvalidArgument);

    let st = unsafe { unirmt_tw_cdf(std::ptr::null(), 0.0, std::ptr::null_mut()) };
    assert_eq!(st, UnirmtStatus::NullPointer);

    let mut handle = std::ptr::null_mut();
    let path = std::ffi::CString::new("/nonexistent/table.csv").unwrap();
    let st = unsafe { unirmt_tw_new_from_csv(path.as_ptr(), &mut handle) };
    assert_eq!(st, UnirmtStatus::Io);
}

#[test]
fn cca_report_round_trip() {
    let (n, m1, m2) = (40usize, 3usize, 4usize);
    let z = random_data(n, m1, 1);
    let y = random_data(n, m2, 2);
    let mut report = std::mem::MaybeUninit::<UnirmtReport>::uninit();
    let st = unsafe {
        unirmt_cca_test(
            std::ptr::null(),
            z.as_ptr(),
            n,
            m1,
            y.as_ptr(),
            m2,
            0.05,
            report.as_mut_ptr(),
        )
    };
    assert_eq!(st, UnirmtStatus::Ok);
    let report = unsafe { report.assume_init() };
    assert_eq!(report.method, UnirmtMethod::Cca);
    assert!(!report.saturated);
    assert!(report.lambda1 > 0.0 && report.lambda1.is_finite());
    assert!(report.p_value > 0.0 && report.p_value < 1.0);
    assert_eq!((report.m1, report.n1, report.n2, report.n), (m1, m2, m2, n));

    // saturated regime: too few observations
    let (n, m) = (10usize, 6usize);
    let z = random_data(n, m, 3);
    let y = random_data(n, m, 4);
    let mut rep2 = std::mem::MaybeUninit::<UnirmtReport>::uninit();
    let st = unsafe {
        unirmt_cca_test(
            std::ptr::null(),
            z.as_ptr(),
            n,
            m,
            y.as_ptr(),
            m,
            0.05,
            rep2.as_mut_ptr(),
        )
    };
    assert_eq!(st, UnirmtStatus::Ok);
    let rep2 = unsafe { rep2.assume_init() };
    assert!(rep2.saturated && rep2.reject);
    assert_eq!(rep2.p_value, 0.0);
    assert!(rep2.lambda1.is_infinite());
}

#[test]
fn manova_stacked_groups() {
    let p = 3usize;
    let sizes = [8usize, 7, 9];
    let n_total: usize = sizes.iter().sum();
    let data = random_data(n_total, p, 5);
    let mut report = std::mem::MaybeUninit::<UnirmtReport>::uninit();
    let st = unsafe {
        unirmt_manova_test(
            std::ptr::null(),
            data.as_ptr(),
            p,
            sizes.as_ptr(),
            sizes.len(),
            0.05,
            report.as_mut_ptr(),
        )
    };
    assert_eq!(st, UnirmtStatus::Ok);
    let report = unsafe { report.assume_init() };
    assert_eq!(report.method, UnirmtMethod::Manova);
    assert_eq!((report.m1, report.n1, report.n2, report.n), (p, 2, 3, n_total));

    // degenerate: constant data is not positive definite
    let constant = vec![1.0; n_total * p];
    let mut rep2 = std::mem::MaybeUninit::<UnirmtReport>::uninit();
    let st = unsafe {
        unirmt_manova_test(
            std::ptr::null(),
            constant.as_ptr(),
            p,
            sizes.as_ptr(),
            sizes.len(),
            0.05,
            rep2.as_mut_ptr(),
        )
    };
    assert_eq!(st, UnirmtStatus::NotPositiveDefinite);
}

#[test]
fn lm_linear_and_intra_subject() {
    let (n, p1, p2, g1) = (30usize, 4usize, 3usize, 2usize);
    let y = random_data(n, p2, 6);
    let x = random_data(n, p1, 7);
    let mut c = vec![0.0; g1 * p1];
    c[0] = 1.0;
    c[p1 + 1] = 1.0;
    let mut report = std::mem::MaybeUninit::<UnirmtReport>::uninit();
    let st = unsafe {
        unirmt_lm_test(
            std::ptr::null(),
            y.as_ptr(),
            n,
            p2,
            x.as_ptr(),
            p1,
            c.as_ptr(),
            g1,
            std::ptr::null(), // gamma = 0
            std::ptr::null(), // no d
            0,
            0.05,
            report.as_mut_ptr(),
        )
    };
    assert_eq!(st, UnirmtStatus::Ok);
    let report = unsafe { report.assume_init() };
    assert_eq!(report.method, UnirmtMethod::LinModelLinear);
    assert_eq!((report.m1, report.n1, report.n2, report.n), (p2, g1, p1, n));

    // intra-subject with a 3x2 contrast
    let d = [1.0, 0.0, 0.0, 1.0, 0.0, 0.0];
    let g2 = 2usize;
    let mut rep2 = std::mem::MaybeUninit::<UnirmtReport>::uninit();
    let st = unsafe {
        unirmt_lm_test(
            std::ptr::null(),
            y.as_ptr(),
            n,
            p2,
            x.as_ptr(),
            p1,
            c.as_ptr(),
            g1,
            std::ptr::null(),
            d.as_ptr(),
            g2,
            0.05,
            rep2.as_mut_ptr(),
        )
    };
    assert_eq!(st, UnirmtStatus::Ok);
    let rep2 = unsafe { rep2.assume_init() };
    assert_eq!(rep2.method, UnirmtMethod::LinModelIntraSubject);
    assert_eq!(rep2.m1, g2);

    // rank-deficient c
    let c_bad = vec![0.0; g1 * p1];
    let mut rep3 = std::mem::MaybeUninit::<UnirmtReport>::uninit();
    let st = unsafe {
        unirmt_lm_test(
            std::ptr::null(),
            y.as_ptr(),
            n,
            p2,
            x.as_ptr(),
            p1,
            c_bad.as_ptr(),
            g1,
            std::ptr::null(),
            std::ptr::null(),
            0,
            0.05,
            rep3.as_mut_ptr(),
        )
    };
    assert_eq!(st, UnirmtStatus::RankDeficient);
}

#[test]
fn omega_statistic_and_calibration() {
    // orthonormal pair built host-side
    let mut rng = unirmt::rng::RngStream::from_seed(8);
    let (m1, n1, n2, n) = (3usize, 2usize, 3usize, 12usize);
    let (u1m, u2m) = unirmt::sim::random_isometry_pair(n, n1, n2, &mut rng).unwrap();
    let z = random_data(m1, n, 9);
    let u1: Vec<f64> = u1m.data().to_vec();
    let u2: Vec<f64> = u2m.data().to_vec();
    let mut lambda = 0.0f64;
    let st = unsafe {
        unirmt_omega_lambda1(
            z.as_ptr(),
            m1,
            n,
            u1.as_ptr(),
            n1,
            u2.as_ptr(),
            n - n2,
            &mut lambda,
        )
    };
    assert_eq!(st, UnirmtStatus::Ok);
    assert!(lambda > 0.0);

    // non-orthogonal u1 must be rejected
    let bad = random_data(n, n1, 10);
    let st = unsafe {
        unirmt_omega_lambda1(
            z.as_ptr(),
            m1,
            n,
            bad.as_ptr(),
            n1,
            u2.as_ptr(),
            n - n2,
            &mut lambda,
        )
    };
    assert_eq!(st, UnirmtStatus::OrthogonalityViolation);

    let (mut mu, mut sigma) = (0.0f64, 0.0f64);
    let st = unsafe { unirmt_log_rescale_params(5, 8, 10, 30, &mut mu, &mut sigma) };
    assert_eq!(st, UnirmtStatus::Ok);
    assert!((mu - 0.780_088_522_140_118_3).abs() < 1e-12);
    assert!((sigma - 0.33658271080153436).abs() < 1e-12);

    // invalid tuple
    let st = unsafe { unirmt_log_rescale_params(5, 8, 10, 15, &mut mu, &mut sigma) };
    assert_eq!(st, UnirmtStatus::InvalidDimension);
}

#[test]
fn generated_header_covers_the_surface() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("unirmt.h");
    let text = std::fs::read_to_string(&header).expect("header generated at build time");
    for symbol in [
        "unirmt_version",
        "unirmt_last_error_message",
        "unirmt_tw_new_default",
        "unirmt_tw_new_from_csv",
        "unirmt_tw_free",
        "unirmt_tw_cdf",
        "unirmt_tw_quantile",
        "unirmt_tw_pvalue",
        "unirmt_omega_lambda1",
        "unirmt_cca_test",
        "unirmt_manova_test",
        "unirmt_lm_test",
        "unirmt_log_rescale_params",
        "typedef struct UnirmtTw UnirmtTw",
        "UNIRMT_STATUS_OK",
        "UNIRMT_METHOD_MANOVA",
    ] {
        assert!(text.contains(symbol), "header is missing {symbol}");
    }
}
