//! Shared dense-matrix primitives: centering and projection matrices, and the
//! largest eigenvalue of W⁻¹B for symmetric positive-definite W.
//!
//! The relative eigenvalue is computed by whitening: W = LLᵀ, then the
//! spectrum of W⁻¹B equals that of the symmetric matrix L⁻¹BL⁻ᵀ, so a plain
//! symmetric eigensolver applies and the result is guaranteed real.

use crate::error::{Error, Result};
use crate::mat::{symmetric_eigen, Mat};

/// Layout of user-supplied data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Orientation {
    ObservationsInRows,
    VariablesInRows,
}

/// A dense data matrix with a declared layout.
#[derive(Debug, Clone)]
pub struct DataMatrix {
    mat: Mat,
    orientation: Orientation,
}

impl DataMatrix {
    pub fn new(mat: Mat, orientation: Orientation) -> Result<Self> {
        if mat.rows() == 0 || mat.cols() == 0 {
            return Err(Error::Dimension(
                "data matrix needs at least one row and one column".into(),
            ));
        }
        if !mat.all_finite() {
            return Err(Error::Argument(
                "data matrix contains NaN or infinite entries".into(),
            ));
        }
        Ok(DataMatrix { mat, orientation })
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn n_observations(&self) -> usize {
        match self.orientation {
            Orientation::ObservationsInRows => self.mat.rows(),
            Orientation::VariablesInRows => self.mat.cols(),
        }
    }

    pub fn n_variables(&self) -> usize {
        match self.orientation {
            Orientation::ObservationsInRows => self.mat.cols(),
            Orientation::VariablesInRows => self.mat.rows(),
        }
    }

    /// The data as a variables x observations matrix.
    pub fn variables_in_rows(&self) -> Mat {
        match self.orientation {
            Orientation::VariablesInRows => self.mat.clone(),
            Orientation::ObservationsInRows => self.mat.transpose(),
        }
    }

    /// The data as an observations x variables matrix.
    pub fn observations_in_rows(&self) -> Mat {
        match self.orientation {
            Orientation::ObservationsInRows => self.mat.clone(),
            Orientation::VariablesInRows => self.mat.transpose(),
        }
    }
}

/// A (W, B) pair with W symmetric positive definite and B symmetric
/// positive semidefinite. Inputs are symmetrized on ingestion; asymmetry
/// beyond 1e-10 relative or a failed factorization of W is rejected.
#[derive(Debug, Clone)]
pub struct SymmetricPair {
    w: Mat,
    b: Mat,
}

impl SymmetricPair {
    pub fn new(w: Mat, b: Mat) -> Result<Self> {
        if !w.is_square() || !b.is_square() || w.rows() != b.rows() {
            return Err(Error::Dimension(
                "pair must be square matrices of equal size".into(),
            ));
        }
        for (m, name) in [(&w, "w"), (&b, "b")] {
            let asym = m.asymmetry();
            if asym > 1e-10 {
                return Err(Error::Argument(format!(
                    "{name} is asymmetric (relative deviation {asym:.3e})"
                )));
            }
        }
        let w = w.symmetrized();
        let b = b.symmetrized();
        w.cholesky().map_err(|_| {
            Error::NotPositiveDefinite("w failed its triangular factorization".into())
        })?;
        Ok(SymmetricPair { w, b })
    }

    pub fn w(&self) -> &Mat {
        &self.w
    }

    pub fn b(&self) -> &Mat {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.w.rows()
    }
}

/// Pₙ = I − (1/n)𝟙𝟙ᵀ.
pub fn centering_matrix(n: usize) -> Result<Mat> {
    if n == 0 {
        return Err(Error::Dimension("centering matrix needs n >= 1".into()));
    }
    let c = 1.0 / n as f64;
    Ok(Mat::from_fn(n, n, |i, j| {
        if i == j {
            1.0 - c
        } else {
            -c
        }
    }))
}

/// Orthogonal projection P = A(AᵀA)⁻¹Aᵀ onto the column space of `a`.
///
/// `a` must have full numerical column rank, decided by pivoted QR with
/// threshold max(n,k)·ε·‖A‖.
pub fn column_space_projection(a: &Mat) -> Result<Mat> {
    let k = a.cols();
    let qr = a.qr();
    let rank = qr.rank();
    if rank < k {
        return Err(Error::RankDeficient {
            detected: rank,
            expected: k,
        });
    }
    let q = qr.q_columns(k);
    Ok(q.mul_t(&q))
}

/// An n×(n−1) isometry P with PPᵀ = I − 𝟙𝟙ᵀ/n and PᵀP = I, built by
/// completing 𝟙/√n to an orthogonal basis with one Householder reflector.
pub fn centering_isometry(n: usize) -> Result<Mat> {
    if n < 2 {
        return Err(Error::Dimension("centering isometry needs n >= 2".into()));
    }
    let u0 = 1.0 / (n as f64).sqrt();
    // H = I - 2vv^T/|v|^2 with v = u - e1 maps e1 to u = 1/sqrt(n) * ones;
    // its columns 2..n complete u to an orthonormal basis.
    let mut v = vec![u0; n];
    v[0] -= 1.0;
    let vnorm2: f64 = v.iter().map(|x| x * x).sum();
    Ok(Mat::from_fn(n, n - 1, |i, j| {
        let jj = j + 1;
        let e = if i == jj { 1.0 } else { 0.0 };
        e - 2.0 * v[i] * v[jj] / vnorm2
    }))
}

/// Eigenvalues of W⁻¹B in nonincreasing order (all real, ≥ 0 for PSD B).
pub fn relative_eigenvalues(pair: &SymmetricPair) -> Result<Vec<f64>> {
    let chol = pair
        .w()
        .cholesky()
        .map_err(|_| Error::NotPositiveDefinite("w failed its triangular factorization".into()))?;
    // L⁻¹ B L⁻ᵀ
    let y = chol.forward_solve(pair.b());
    let s = chol.forward_solve(&y.transpose());
    let (vals, _) = symmetric_eigen(&s.symmetrized())?;
    Ok(vals)
}

/// Largest eigenvalue of W⁻¹B, clamped below at 0.
pub fn largest_relative_eigenvalue(pair: &SymmetricPair) -> Result<f64> {
    Ok(relative_eigenvalues(pair)?[0].max(0.0))
}

/// The `k` largest eigenvalues of W⁻¹B in nonincreasing order.
pub fn top_relative_eigenvalues(pair: &SymmetricPair, k: usize) -> Result<Vec<f64>> {
    let mut vals = relative_eigenvalues(pair)?;
    vals.truncate(k);
    Ok(vals)
}

fn check_isometry(u: &Mat, name: &str, tol: f64) -> Result<()> {
    if u.cols() == 0 {
        return Ok(());
    }
    let g = u.gram();
    let dev = g.max_abs_diff(&Mat::identity(u.cols()));
    if dev > tol {
        return Err(Error::Orthogonality(format!(
            "{name}ᵀ{name} deviates from the identity by {dev:.3e}"
        )));
    }
    Ok(())
}

/// Largest eigenvalue of (Z U₂U₂ᵀ Zᵀ)⁻¹ Z U₁U₁ᵀ Zᵀ.
///
/// `u1` and `u2` must be isometries with orthogonal ranges (verified to
/// 1e-8); the denominator must be positive definite.
pub fn unified_omega_lambda1(z: &Mat, u1: &Mat, u2: &Mat) -> Result<f64> {
    let n = z.cols();
    if u1.rows() != n || u2.rows() != n {
        return Err(Error::Dimension(format!(
            "isometries must have {n} rows to match z"
        )));
    }
    const TOL: f64 = 1e-8;
    check_isometry(u1, "u1", TOL)?;
    check_isometry(u2, "u2", TOL)?;
    if u1.cols() > 0 && u2.cols() > 0 {
        let cross = u1.t_mul(u2).max_abs();
        if cross > TOL {
            return Err(Error::Orthogonality(format!(
                "u1ᵀu2 deviates from zero by {cross:.3e}"
            )));
        }
    }
    let zu1 = z.mul(u1);
    let zu2 = z.mul(u2);
    let pair = SymmetricPair::new(zu2.outer_gram(), zu1.outer_gram())?;
    largest_relative_eigenvalue(&pair)
}

/// Symmetric positive-semidefinite square root via eigendecomposition.
pub fn symmetric_sqrt(a: &Mat) -> Result<Mat> {
    let (vals, vecs) = symmetric_eigen(a)?;
    let n = a.rows();
    let scale = vals.first().map(|v| v.abs()).unwrap_or(0.0);
    let mut sq = Mat::zeros(n, n);
    for k in 0..n {
        if vals[k] < -1e-10 * scale.max(1.0) {
            return Err(Error::NotPositiveDefinite(format!(
                "eigenvalue {k} is {:.3e}",
                vals[k]
            )));
        }
        let root = vals[k].max(0.0).sqrt();
        for i in 0..n {
            for j in 0..n {
                sq[(i, j)] += root * vecs[(i, k)] * vecs[(j, k)];
            }
        }
    }
    Ok(sq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    fn random_mat(rows: usize, cols: usize, seed: u64) -> Mat {
        let mut rng = RngStream::from_seed(seed);
        Mat::from_fn(rows, cols, |_, _| rng.standard_normal())
    }

    fn random_spd(n: usize, seed: u64) -> Mat {
        let g = random_mat(n, n + 2, seed);
        g.outer_gram()
    }

    #[test]
    fn centering_matrix_basics() {
        // P 1 = 0
        let p = centering_matrix(3).unwrap();
        let ones = Mat::from_vec(3, 1, vec![1.0; 3]).unwrap();
        assert!(p.mul(&ones).max_abs() < 1e-15);
        // idempotent
        assert!(p.mul(&p).max_abs_diff(&p) < 1e-12);
        // trace of the 4-point version is 3
        let p4 = centering_matrix(4).unwrap();
        let tr: f64 = (0..4).map(|i| p4[(i, i)]).sum();
        assert!((tr - 3.0).abs() < 1e-14);
        assert!(matches!(centering_matrix(0), Err(Error::Dimension(_))));
    }

    #[test]
    fn centering_matrix_exact_up_to_500() {
        for n in [1usize, 2, 17, 100, 500] {
            let p = centering_matrix(n).unwrap();
            assert!(p.max_abs_diff(&p.transpose()) == 0.0);
            assert!(p.mul(&p).max_abs_diff(&p) < 1e-12, "n={n}");
            let ones = Mat::from_vec(n, 1, vec![1.0; n]).unwrap();
            assert!(p.mul(&ones).max_abs() < 1e-12);
        }
    }

    #[test]
    fn projection_examples() {
        // first column of I3
        let e1 = Mat::from_vec(3, 1, vec![1.0, 0.0, 0.0]).unwrap();
        let p = column_space_projection(&e1).unwrap();
        let expect = Mat::from_fn(3, 3, |i, j| if i == 0 && j == 0 { 1.0 } else { 0.0 });
        assert!(p.max_abs_diff(&expect) < 1e-14);

        // ones vector: P = (1/3) 1 1ᵀ, complement equals the centering matrix
        let ones = Mat::from_vec(3, 1, vec![1.0; 3]).unwrap();
        let p = column_space_projection(&ones).unwrap();
        let third = Mat::from_fn(3, 3, |_, _| 1.0 / 3.0);
        assert!(p.max_abs_diff(&third) < 1e-14);
        let complement = Mat::identity(3).sub(&p);
        assert!(complement.max_abs_diff(&centering_matrix(3).unwrap()) < 1e-14);

        // projection fixes its range
        let a = random_mat(5, 2, 30);
        let p = column_space_projection(&a).unwrap();
        assert!(p.mul(&a).max_abs_diff(&a) < 1e-10);
        // symmetric, idempotent, trace = k
        assert!(p.max_abs_diff(&p.transpose()) < 1e-12);
        assert!(p.mul(&p).max_abs_diff(&p) < 1e-12);
        let tr: f64 = (0..5).map(|i| p[(i, i)]).sum();
        assert!((tr - 2.0).abs() < 1e-8);
    }

    #[test]
    fn projection_rejects_rank_deficiency() {
        let mut a = random_mat(6, 3, 31);
        for i in 0..6 {
            a[(i, 2)] = a[(i, 0)] + a[(i, 1)];
        }
        match column_space_projection(&a) {
            Err(Error::RankDeficient { detected, expected }) => {
                assert_eq!((detected, expected), (2, 3));
            }
            other => panic!("expected rank error, got {other:?}"),
        }
    }

    #[test]
    fn projection_invariant_under_column_mixing() {
        let a = random_mat(7, 3, 32);
        let r = Mat::from_rows(&[
            vec![2.0, 0.5, -1.0],
            vec![0.0, 1.5, 0.3],
            vec![0.2, -0.1, 1.1],
        ])
        .unwrap();
        let p1 = column_space_projection(&a).unwrap();
        let p2 = column_space_projection(&a.mul(&r)).unwrap();
        assert!(p1.max_abs_diff(&p2) < 1e-8);
    }

    #[test]
    fn relative_eigenvalue_diagonal_cases() {
        let w = Mat::identity(2);
        let b = Mat::from_rows(&[vec![3.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let pair = SymmetricPair::new(w, b).unwrap();
        assert!((largest_relative_eigenvalue(&pair).unwrap() - 3.0).abs() < 1e-12);

        let w = Mat::from_rows(&[vec![2.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let b = Mat::from_rows(&[vec![3.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let pair = SymmetricPair::new(w, b).unwrap();
        assert!((largest_relative_eigenvalue(&pair).unwrap() - 1.5).abs() < 1e-12);
    }

    #[test]
    fn relative_eigenvalue_congruence_invariance() {
        let w = random_spd(4, 40);
        let b = random_mat(4, 3, 41).outer_gram();
        let pair = SymmetricPair::new(w.clone(), b.clone()).unwrap();
        let lam = largest_relative_eigenvalue(&pair).unwrap();
        let c = Mat::identity(4).add(&random_mat(4, 4, 42).scale(0.3));
        let wc = c.t_mul(&w).mul(&c);
        let bc = c.t_mul(&b).mul(&c);
        let pair2 = SymmetricPair::new(wc, bc).unwrap();
        let lam2 = largest_relative_eigenvalue(&pair2).unwrap();
        assert!((lam - lam2).abs() / lam < 1e-7);
    }

    #[test]
    fn top_eigenvalues_sorted_and_truncated() {
        let w = Mat::identity(3);
        let b = Mat::from_rows(&[
            vec![5.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, 1.0],
        ])
        .unwrap();
        let pair = SymmetricPair::new(w, b).unwrap();
        let top2 = top_relative_eigenvalues(&pair, 2).unwrap();
        assert_eq!(top2.len(), 2);
        assert!((top2[0] - 5.0).abs() < 1e-12 && (top2[1] - 2.0).abs() < 1e-12);
        let all = top_relative_eigenvalues(&pair, 10).unwrap();
        assert_eq!(all.len(), 3);
    }

    #[test]
    fn pair_rejects_asymmetry_and_indefiniteness() {
        let mut w = random_spd(3, 43);
        w[(0, 1)] += 1.0;
        assert!(matches!(
            SymmetricPair::new(w, Mat::identity(3)),
            Err(Error::Argument(_))
        ));
        let indefinite = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(
            SymmetricPair::new(indefinite, Mat::identity(2)),
            Err(Error::NotPositiveDefinite(_))
        ));
    }

    #[test]
    fn omega_invariant_under_spd_transform() {
        let mut rng = RngStream::from_seed(44);
        let (m1, n1, n2, n) = (5, 4, 6, 20);
        let z = Mat::from_fn(m1, n, |_, _| rng.standard_normal());
        let l = Mat::from_fn(n, n2, |_, _| rng.standard_normal());
        let d = Mat::from_fn(n2, n1, |_, _| rng.standard_normal());
        let u1 = l.mul(&d).qr().q_columns(n1);
        let u2 = l.qr().q_column_range(n2, n);
        let lam = unified_omega_lambda1(&z, &u1, &u2).unwrap();

        let t = random_spd(m1, 45);
        let t_half = symmetric_sqrt(&t).unwrap();
        let lam_t = unified_omega_lambda1(&t_half.mul(&z), &u1, &u2).unwrap();
        assert!((lam - lam_t).abs() / lam < 1e-7, "{lam} vs {lam_t}");
    }

    #[test]
    fn omega_zero_numerator() {
        let z = random_mat(3, 10, 46);
        let u1 = Mat::zeros(10, 0);
        let u2 = random_mat(10, 5, 47).qr().q_columns(5);
        let lam = unified_omega_lambda1(&z, &u1, &u2).unwrap();
        assert_eq!(lam, 0.0);
    }

    #[test]
    fn omega_rejects_non_isometry() {
        let z = random_mat(3, 10, 48);
        let u1 = random_mat(10, 2, 49); // not orthonormal
        let u2 = random_mat(10, 5, 50).qr().q_columns(5);
        assert!(matches!(
            unified_omega_lambda1(&z, &u1, &u2),
            Err(Error::Orthogonality(_))
        ));
    }

    #[test]
    fn omega_gamma_relation() {
        // lambda1 = gamma1/(1-gamma1) with gamma1 from the projector-sum form
        let mut rng = RngStream::from_seed(51);
        let (m1, n1, n2, n) = (3, 2, 2, 10);
        let z = Mat::from_fn(m1, n, |_, _| rng.standard_normal());
        let l = Mat::from_fn(n, n2, |_, _| rng.standard_normal());
        let d = Mat::from_fn(n2, n1, |_, _| rng.standard_normal());
        let u1 = l.mul(&d).qr().q_columns(n1);
        let u2 = l.qr().q_column_range(n2, n);
        let lam = unified_omega_lambda1(&z, &u1, &u2).unwrap();

        let zu1 = z.mul(&u1);
        let zu2 = z.mul(&u2);
        let total = zu1.outer_gram().add(&zu2.outer_gram());
        let pair = SymmetricPair::new(total, zu1.outer_gram()).unwrap();
        let gamma1 = largest_relative_eigenvalue(&pair).unwrap();
        let lam_from_gamma = gamma1 / (1.0 - gamma1);
        assert!((lam - lam_from_gamma).abs() / lam < 1e-7);
    }

    #[test]
    fn centering_isometry_properties() {
        for n in [2usize, 3, 7, 12] {
            let p = centering_isometry(n).unwrap();
            assert!(p.gram().max_abs_diff(&Mat::identity(n - 1)) < 1e-12);
            let proj = p.mul_t(&p);
            let pn = centering_matrix(n).unwrap();
            assert!(proj.max_abs_diff(&pn) < 1e-12, "n={n}");
        }
    }

    #[test]
    fn symmetric_sqrt_squares_back() {
        let t = random_spd(5, 52);
        let h = symmetric_sqrt(&t).unwrap();
        assert!(h.mul(&h).max_abs_diff(&t) < 1e-9 * t.max_abs().max(1.0));
    }
}
