//! Dense row-major matrices and the factorizations used by the tests:
//! Cholesky, pivoted Householder QR, and a cyclic Jacobi eigensolver for
//! symmetric matrices. Everything is plain `f64` with no external backend,
//! which keeps results bit-stable across platforms and thread counts.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![0.0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1.0;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Dimension("matrix needs at least one row".into()));
        }
        let cols = rows[0].len();
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Ok(Mat {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} values cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn all_finite(&self) -> bool {
        self.data.iter().all(|v| v.is_finite())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// C = self * other.
    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        let mut c = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0.0 {
                    continue;
                }
                let crow = &mut c.data[i * other.cols..(i + 1) * other.cols];
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (cv, bv) in crow.iter_mut().zip(brow) {
                    *cv += a * bv;
                }
            }
        }
        c
    }

    /// C = selfᵀ * other.
    pub fn t_mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows, "t_mul shape mismatch");
        let mut c = Mat::zeros(self.cols, other.cols);
        for k in 0..self.rows {
            for i in 0..self.cols {
                let a = self[(k, i)];
                if a == 0.0 {
                    continue;
                }
                let crow = &mut c.data[i * other.cols..(i + 1) * other.cols];
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (cv, bv) in crow.iter_mut().zip(brow) {
                    *cv += a * bv;
                }
            }
        }
        c
    }

    /// C = self * otherᵀ.
    pub fn mul_t(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols, "mul_t shape mismatch");
        let mut c = Mat::zeros(self.rows, other.rows);
        for i in 0..self.rows {
            for j in 0..other.rows {
                let mut s = 0.0;
                let arow = self.row(i);
                let brow = other.row(j);
                for k in 0..self.cols {
                    s += arow[k] * brow[k];
                }
                c[(i, j)] = s;
            }
        }
        c
    }

    /// Gram matrix selfᵀ self.
    pub fn gram(&self) -> Mat {
        self.t_mul(self)
    }

    /// Outer Gram matrix self selfᵀ.
    pub fn outer_gram(&self) -> Mat {
        self.mul_t(self)
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut c = self.clone();
        for (a, b) in c.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        c
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut c = self.clone();
        for (a, b) in c.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        c
    }

    pub fn scale(&self, s: f64) -> Mat {
        let mut c = self.clone();
        for a in c.data.iter_mut() {
            *a *= s;
        }
        c
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    /// Largest absolute entry of self - other.
    pub fn max_abs_diff(&self, other: &Mat) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// (M + Mᵀ)/2. Panics if not square.
    pub fn symmetrized(&self) -> Mat {
        assert!(self.is_square());
        let mut c = self.clone();
        for i in 0..self.rows {
            for j in 0..i {
                let v = 0.5 * (self[(i, j)] + self[(j, i)]);
                c[(i, j)] = v;
                c[(j, i)] = v;
            }
        }
        c
    }

    /// Relative asymmetry max|M - Mᵀ| / max(1, max|M|).
    pub fn asymmetry(&self) -> f64 {
        assert!(self.is_square());
        let mut worst = 0.0f64;
        for i in 0..self.rows {
            for j in 0..i {
                worst = worst.max((self[(i, j)] - self[(j, i)]).abs());
            }
        }
        worst / self.max_abs().max(1.0)
    }

    /// Column slice [j0, j1) as a new matrix.
    pub fn columns(&self, j0: usize, j1: usize) -> Mat {
        assert!(j0 <= j1 && j1 <= self.cols);
        Mat::from_fn(self.rows, j1 - j0, |i, j| self[(i, j0 + j)])
    }

    /// Subtracts from every row its mean; the matrix is treated as
    /// variables-in-rows, so this centers each variable over observations.
    pub fn center_rows(&self) -> Mat {
        let mut c = self.clone();
        for i in 0..self.rows {
            let row = &mut c.data[i * self.cols..(i + 1) * self.cols];
            let mean = row.iter().sum::<f64>() / self.cols as f64;
            for v in row.iter_mut() {
                *v -= mean;
            }
        }
        c
    }

    /// Subtracts from every column its mean (observations-in-rows centering).
    pub fn center_cols(&self) -> Mat {
        let mut c = self.clone();
        for j in 0..self.cols {
            let mut mean = 0.0;
            for i in 0..self.rows {
                mean += self[(i, j)];
            }
            mean /= self.rows as f64;
            for i in 0..self.rows {
                c[(i, j)] -= mean;
            }
        }
        c
    }

    pub fn cholesky(&self) -> Result<Cholesky> {
        Cholesky::new(self)
    }

    pub fn qr(&self) -> PivotedQr {
        PivotedQr::new(self)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = f64;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Lower-triangular factor of A = LLᵀ.
#[derive(Debug, Clone)]
pub struct Cholesky {
    l: Mat,
}

impl Cholesky {
    fn new(a: &Mat) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::Dimension("cholesky needs a square matrix".into()));
        }
        let n = a.rows();
        let mut l = Mat::zeros(n, n);
        for j in 0..n {
            let mut d = a[(j, j)];
            for k in 0..j {
                d -= l[(j, k)] * l[(j, k)];
            }
            if d.is_nan() || d <= 0.0 || !d.is_finite() {
                return Err(Error::NotPositiveDefinite(format!(
                    "pivot {j} is {d:.3e} during triangular factorization"
                )));
            }
            let dj = d.sqrt();
            l[(j, j)] = dj;
            for i in (j + 1)..n {
                let mut s = a[(i, j)];
                for k in 0..j {
                    s -= l[(i, k)] * l[(j, k)];
                }
                l[(i, j)] = s / dj;
            }
        }
        Ok(Cholesky { l })
    }

    pub fn l(&self) -> &Mat {
        &self.l
    }

    /// Solves L X = B by forward substitution (columnwise).
    pub fn forward_solve(&self, b: &Mat) -> Mat {
        let n = self.l.rows();
        assert_eq!(b.rows(), n);
        let mut x = b.clone();
        for j in 0..b.cols() {
            for i in 0..n {
                let mut s = x[(i, j)];
                for k in 0..i {
                    s -= self.l[(i, k)] * x[(k, j)];
                }
                x[(i, j)] = s / self.l[(i, i)];
            }
        }
        x
    }

    /// Solves Lᵀ X = B by back substitution (columnwise).
    pub fn back_solve(&self, b: &Mat) -> Mat {
        let n = self.l.rows();
        assert_eq!(b.rows(), n);
        let mut x = b.clone();
        for j in 0..b.cols() {
            for i in (0..n).rev() {
                let mut s = x[(i, j)];
                for k in (i + 1)..n {
                    s -= self.l[(k, i)] * x[(k, j)];
                }
                x[(i, j)] = s / self.l[(i, i)];
            }
        }
        x
    }

    /// Solves A X = B for A = LLᵀ.
    pub fn solve(&self, b: &Mat) -> Mat {
        self.back_solve(&self.forward_solve(b))
    }
}

/// Householder QR with column pivoting: A P = Q R.
///
/// Reflectors are stored LAPACK-style below the diagonal of the packed
/// factor; `r` diagonal magnitudes are nonincreasing, which makes the
/// numerical rank a simple threshold count.
#[derive(Debug, Clone)]
pub struct PivotedQr {
    packed: Mat,
    betas: Vec<f64>,
    pivots: Vec<usize>,
    rows: usize,
    cols: usize,
}

impl PivotedQr {
    fn new(a: &Mat) -> Self {
        let (m, n) = (a.rows(), a.cols());
        let mut f = a.clone();
        let kmax = m.min(n);
        let mut betas = vec![0.0; kmax];
        let mut pivots: Vec<usize> = (0..n).collect();
        let mut colnorm2: Vec<f64> = (0..n)
            .map(|j| (0..m).map(|i| f[(i, j)] * f[(i, j)]).sum())
            .collect();

        for k in 0..kmax {
            // pivot: bring the column with the largest remaining norm to k
            let (jmax, _) = colnorm2
                .iter()
                .enumerate()
                .skip(k)
                .fold((k, -1.0), |acc, (j, &v)| if v > acc.1 { (j, v) } else { acc });
            if jmax != k {
                for i in 0..m {
                    let tmp = f[(i, k)];
                    f[(i, k)] = f[(i, jmax)];
                    f[(i, jmax)] = tmp;
                }
                colnorm2.swap(k, jmax);
                pivots.swap(k, jmax);
            }

            // Householder vector for column k
            let mut norm2 = 0.0;
            for i in k..m {
                norm2 += f[(i, k)] * f[(i, k)];
            }
            let norm = norm2.sqrt();
            if norm == 0.0 {
                betas[k] = 0.0;
                continue;
            }
            let alpha = if f[(k, k)] >= 0.0 { -norm } else { norm };
            let v0 = f[(k, k)] - alpha;
            let mut vnorm2 = v0 * v0;
            for i in (k + 1)..m {
                vnorm2 += f[(i, k)] * f[(i, k)];
            }
            let beta = 2.0 / vnorm2;

            // apply to trailing columns
            for j in (k + 1)..n {
                let mut dot = v0 * f[(k, j)];
                for i in (k + 1)..m {
                    dot += f[(i, k)] * f[(i, j)];
                }
                let t = beta * dot;
                f[(k, j)] -= t * v0;
                for i in (k + 1)..m {
                    f[(i, j)] -= t * f[(i, k)];
                }
            }
            f[(k, k)] = alpha;
            // normalize so the stored sub-diagonal is v_i / v0 (v0 implicit 1);
            // v0 = f_kk - alpha is nonzero whenever the column norm is
            for i in (k + 1)..m {
                f[(i, k)] /= v0;
            }
            betas[k] = beta * v0 * v0;

            // downdate remaining column norms
            for (j, cn) in colnorm2.iter_mut().enumerate().skip(k + 1) {
                *cn -= f[(k, j)] * f[(k, j)];
                if *cn < 0.0 {
                    *cn = 0.0;
                }
            }
        }

        PivotedQr {
            packed: f,
            betas,
            pivots,
            rows: m,
            cols: n,
        }
    }

    pub fn r_diag(&self) -> Vec<f64> {
        (0..self.rows.min(self.cols))
            .map(|k| self.packed[(k, k)])
            .collect()
    }

    /// Numerical rank with threshold max(m,n) * eps * |R(0,0)|.
    pub fn rank(&self) -> usize {
        let diag = self.r_diag();
        if diag.is_empty() {
            return 0;
        }
        let tol = self.rows.max(self.cols) as f64 * f64::EPSILON * diag[0].abs();
        diag.iter().take_while(|d| d.abs() > tol).count()
    }

    /// Applies Q to B in place: B <- Q B (Q is the full m x m orthogonal factor).
    fn apply_q(&self, b: &mut Mat) {
        assert_eq!(b.rows(), self.rows);
        let kmax = self.rows.min(self.cols);
        for k in (0..kmax).rev() {
            self.apply_reflector(k, b);
        }
    }

    /// Applies Qᵀ to B in place.
    fn apply_qt(&self, b: &mut Mat) {
        assert_eq!(b.rows(), self.rows);
        let kmax = self.rows.min(self.cols);
        for k in 0..kmax {
            self.apply_reflector(k, b);
        }
    }

    fn apply_reflector(&self, k: usize, b: &mut Mat) {
        let beta = self.betas[k];
        if beta == 0.0 {
            return;
        }
        let m = self.rows;
        for j in 0..b.cols() {
            let mut dot = b[(k, j)];
            for i in (k + 1)..m {
                dot += self.packed[(i, k)] * b[(i, j)];
            }
            let t = beta * dot;
            b[(k, j)] -= t;
            for i in (k + 1)..m {
                b[(i, j)] -= t * self.packed[(i, k)];
            }
        }
    }

    /// First k columns of Q (an m x k matrix with orthonormal columns).
    pub fn q_columns(&self, k: usize) -> Mat {
        assert!(k <= self.rows);
        let mut b = Mat::from_fn(self.rows, k, |i, j| if i == j { 1.0 } else { 0.0 });
        self.apply_q(&mut b);
        b
    }

    /// Columns [k0, k1) of Q.
    pub fn q_column_range(&self, k0: usize, k1: usize) -> Mat {
        assert!(k0 <= k1 && k1 <= self.rows);
        let mut b = Mat::from_fn(self.rows, k1 - k0, |i, j| {
            if i == k0 + j {
                1.0
            } else {
                0.0
            }
        });
        self.apply_q(&mut b);
        b
    }

    /// Least-squares solve: X = argmin |A X - B|_F, requiring full column rank.
    pub fn solve(&self, b: &Mat) -> Result<Mat> {
        let n = self.cols;
        let rank = self.rank();
        if rank < n {
            return Err(Error::RankDeficient {
                detected: rank,
                expected: n,
            });
        }
        let mut qtb = b.clone();
        self.apply_qt(&mut qtb);
        // back substitution on the n x n upper triangle
        let mut xp = Mat::zeros(n, b.cols());
        for j in 0..b.cols() {
            for i in (0..n).rev() {
                let mut s = qtb[(i, j)];
                for k in (i + 1)..n {
                    s -= self.packed[(i, k)] * xp[(k, j)];
                }
                xp[(i, j)] = s / self.packed[(i, i)];
            }
        }
        // undo the column pivoting
        let mut x = Mat::zeros(n, b.cols());
        for i in 0..n {
            for j in 0..b.cols() {
                x[(self.pivots[i], j)] = xp[(i, j)];
            }
        }
        Ok(x)
    }

    /// Solves (AᵀA) X = B through the factorization (A P = QR ⇒ AᵀA = P RᵀR Pᵀ).
    pub fn solve_normal(&self, b: &Mat) -> Result<Mat> {
        let n = self.cols;
        if b.rows() != n {
            return Err(Error::Dimension("solve_normal rhs shape".into()));
        }
        let rank = self.rank();
        if rank < n {
            return Err(Error::RankDeficient {
                detected: rank,
                expected: n,
            });
        }
        // permute rhs: Pᵀ b
        let mut bp = Mat::zeros(n, b.cols());
        for i in 0..n {
            for j in 0..b.cols() {
                bp[(i, j)] = b[(self.pivots[i], j)];
            }
        }
        // Rᵀ y = bp (forward), R x = y (backward)
        let mut y = Mat::zeros(n, b.cols());
        for j in 0..b.cols() {
            for i in 0..n {
                let mut s = bp[(i, j)];
                for k in 0..i {
                    s -= self.packed[(k, i)] * y[(k, j)];
                }
                y[(i, j)] = s / self.packed[(i, i)];
            }
            for i in (0..n).rev() {
                let mut s = y[(i, j)];
                for k in (i + 1)..n {
                    s -= self.packed[(i, k)] * y[(k, j)];
                }
                y[(i, j)] = s / self.packed[(i, i)];
            }
        }
        // undo pivoting: x = P y
        let mut x = Mat::zeros(n, b.cols());
        for i in 0..n {
            for j in 0..b.cols() {
                x[(self.pivots[i], j)] = y[(i, j)];
            }
        }
        Ok(x)
    }
}

/// Eigenvalues (descending) and eigenvectors (matching columns) of a
/// symmetric matrix, by cyclic Jacobi rotations.
pub fn symmetric_eigen(a: &Mat) -> Result<(Vec<f64>, Mat)> {
    if !a.is_square() {
        return Err(Error::Dimension("eigensolver needs a square matrix".into()));
    }
    let n = a.rows();
    if n == 0 {
        return Ok((Vec::new(), Mat::zeros(0, 0)));
    }
    let mut m = a.symmetrized();
    let mut v = Mat::identity(n);
    let scale = m.max_abs().max(f64::MIN_POSITIVE);

    for _sweep in 0..60 {
        let mut off = 0.0f64;
        for i in 0..n {
            for j in (i + 1)..n {
                off = off.max(m[(i, j)].abs());
            }
        }
        if off <= 1e-15 * scale {
            let mut eigs: Vec<(f64, usize)> =
                (0..n).map(|i| (m[(i, i)], i)).collect();
            eigs.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap());
            let vals: Vec<f64> = eigs.iter().map(|e| e.0).collect();
            let vecs = Mat::from_fn(n, n, |i, j| v[(i, eigs[j].1)]);
            return Ok((vals, vecs));
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = m[(p, q)];
                if apq.abs() <= 1e-18 * scale {
                    continue;
                }
                let app = m[(p, p)];
                let aqq = m[(q, q)];
                let theta = 0.5 * (aqq - app) / apq;
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let mkp = m[(k, p)];
                    let mkq = m[(k, q)];
                    m[(k, p)] = c * mkp - s * mkq;
                    m[(k, q)] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[(p, k)];
                    let mqk = m[(q, k)];
                    m[(p, k)] = c * mpk - s * mqk;
                    m[(q, k)] = s * mpk + c * mqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = c * vkp - s * vkq;
                    v[(k, q)] = s * vkp + c * vkq;
                }
            }
        }
    }
    Err(Error::NonConvergence(
        "Jacobi eigensolver exceeded 60 sweeps".into(),
    ))
}

/// Largest eigenvalue of a symmetric matrix.
pub fn symmetric_eigen_max(a: &Mat) -> Result<f64> {
    if a.rows() == 0 {
        return Ok(0.0);
    }
    Ok(symmetric_eigen(a)?.0[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::RngStream;

    fn random_mat(rows: usize, cols: usize, seed: u64) -> Mat {
        let mut rng = RngStream::from_seed(seed);
        Mat::from_fn(rows, cols, |_, _| rng.standard_normal())
    }

    #[test]
    fn matmul_identities() {
        let a = random_mat(4, 6, 1);
        let i4 = Mat::identity(4);
        assert!(i4.mul(&a).max_abs_diff(&a) < 1e-15);
        let at_b = a.t_mul(&a);
        let explicit = a.transpose().mul(&a);
        assert!(at_b.max_abs_diff(&explicit) < 1e-13);
        let a_bt = a.mul_t(&a);
        let explicit2 = a.mul(&a.transpose());
        assert!(a_bt.max_abs_diff(&explicit2) < 1e-13);
    }

    #[test]
    fn cholesky_reconstructs() {
        let g = random_mat(5, 8, 2);
        let a = g.outer_gram();
        let ch = a.cholesky().unwrap();
        let back = ch.l().mul_t(ch.l());
        assert!(back.max_abs_diff(&a) < 1e-10 * a.max_abs());
        // solve check
        let b = random_mat(5, 3, 3);
        let x = ch.solve(&b);
        assert!(a.mul(&x).max_abs_diff(&b) < 1e-9);
    }

    #[test]
    fn cholesky_rejects_indefinite() {
        let a = Mat::from_rows(&[vec![1.0, 2.0], vec![2.0, 1.0]]).unwrap();
        assert!(matches!(
            a.cholesky(),
            Err(Error::NotPositiveDefinite(_))
        ));
    }

    #[test]
    fn qr_orthonormal_and_solve() {
        let a = random_mat(9, 4, 4);
        let qr = a.qr();
        assert_eq!(qr.rank(), 4);
        let q = qr.q_columns(4);
        let qtq = q.gram();
        assert!(qtq.max_abs_diff(&Mat::identity(4)) < 1e-12);
        // full Q orthogonality
        let qf = qr.q_columns(9);
        assert!(qf.gram().max_abs_diff(&Mat::identity(9)) < 1e-12);
        // least squares residual orthogonality
        let b = random_mat(9, 2, 5);
        let x = qr.solve(&b).unwrap();
        let resid = b.sub(&a.mul(&x));
        assert!(a.t_mul(&resid).max_abs() < 1e-10);
        // normal solve agrees: (AᵀA) x = Aᵀ b
        let x2 = qr.solve_normal(&a.t_mul(&b)).unwrap();
        assert!(x.max_abs_diff(&x2) < 1e-9);
    }

    #[test]
    fn qr_detects_rank_deficiency() {
        let mut a = random_mat(6, 3, 6);
        for i in 0..6 {
            a[(i, 2)] = 2.0 * a[(i, 0)] - a[(i, 1)];
        }
        let qr = a.qr();
        assert_eq!(qr.rank(), 2);
        assert!(matches!(
            qr.solve(&random_mat(6, 1, 7)),
            Err(Error::RankDeficient {
                detected: 2,
                expected: 3
            })
        ));
    }

    #[test]
    fn jacobi_matches_known_spectrum() {
        let a = Mat::from_rows(&[
            vec![2.0, 1.0, 0.0],
            vec![1.0, 2.0, 1.0],
            vec![0.0, 1.0, 2.0],
        ])
        .unwrap();
        let (vals, vecs) = symmetric_eigen(&a).unwrap();
        let s2 = 2.0f64.sqrt();
        assert!((vals[0] - (2.0 + s2)).abs() < 1e-12);
        assert!((vals[1] - 2.0).abs() < 1e-12);
        assert!((vals[2] - (2.0 - s2)).abs() < 1e-12);
        // A v = lambda v
        for (j, val) in vals.iter().enumerate() {
            let v = vecs.columns(j, j + 1);
            let lhs = a.mul(&v);
            let rhs = v.scale(*val);
            assert!(lhs.max_abs_diff(&rhs) < 1e-11);
        }
    }

    #[test]
    fn jacobi_eigen_reconstruction_random() {
        let g = random_mat(7, 7, 8);
        let a = g.add(&g.transpose());
        let (vals, vecs) = symmetric_eigen(&a).unwrap();
        let lam = Mat::from_fn(7, 7, |i, j| if i == j { vals[i] } else { 0.0 });
        let back = vecs.mul(&lam).mul_t(&vecs);
        assert!(back.max_abs_diff(&a.symmetrized()) < 1e-10);
        for w in vals.windows(2) {
            assert!(w[0] >= w[1]);
        }
    }
}
