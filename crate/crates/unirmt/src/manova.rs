//! Equality-of-means test for g groups via the largest root of W⁻¹B.
//!
//! `manova_sscp` builds the between/within SSCP pair directly from group
//! means; `manova_block_oracle` rebuilds the same pair through per-group
//! orthogonal rotations and block isometries and exists to cross-check the
//! direct construction. Calibration uses the tuple (p, g−1, g, n).

use crate::calibrate::DimensionQuad;
use crate::error::{Error, Result};
use crate::linalg::{largest_relative_eigenvalue, DataMatrix, SymmetricPair};
use crate::mat::Mat;
use crate::report::{check_alpha, Method, TestReport};
use crate::tw::Tw1Table;

#[derive(Debug, Clone)]
pub struct GroupedSample {
    groups: Vec<Mat>, // each observations x p
    alpha: f64,
}

impl GroupedSample {
    /// `groups[i]` holds nᵢ observations of a p-vector.
    pub fn new(groups: Vec<DataMatrix>, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if groups.len() < 2 {
            return Err(Error::Dimension("need at least 2 groups".into()));
        }
        let mats: Vec<Mat> = groups.iter().map(|g| g.observations_in_rows()).collect();
        let p = mats[0].cols();
        if mats.iter().any(|m| m.cols() != p) {
            return Err(Error::Dimension(
                "groups must share the variable dimension".into(),
            ));
        }
        if mats.iter().any(|m| m.rows() < 2) {
            return Err(Error::Dimension("each group needs at least 2 observations".into()));
        }
        let n: usize = mats.iter().map(|m| m.rows()).sum();
        if n <= p + groups.len() {
            return Err(Error::Dimension(format!(
                "need total n > p + g, got n = {n} vs p + g = {}",
                p + groups.len()
            )));
        }
        Ok(GroupedSample {
            groups: mats,
            alpha,
        })
    }

    pub fn n_groups(&self) -> usize {
        self.groups.len()
    }

    pub fn n_variables(&self) -> usize {
        self.groups[0].cols()
    }

    pub fn n_total(&self) -> usize {
        self.groups.iter().map(|m| m.rows()).sum()
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn group_sizes(&self) -> Vec<usize> {
        self.groups.iter().map(|m| m.rows()).collect()
    }
}

fn group_mean(x: &Mat) -> Vec<f64> {
    let (n, p) = (x.rows(), x.cols());
    let mut mean = vec![0.0; p];
    for i in 0..n {
        for j in 0..p {
            mean[j] += x[(i, j)];
        }
    }
    for v in mean.iter_mut() {
        *v /= n as f64;
    }
    mean
}

/// Between SSCP B = Σ nᵢ(x̄ᵢ−x̄)(x̄ᵢ−x̄)ᵀ and within SSCP
/// W = Σᵢ Σⱼ (xᵢⱼ−x̄ᵢ)(xᵢⱼ−x̄ᵢ)ᵀ, returned as the pair (w = W, b = B).
pub fn manova_sscp(sample: &GroupedSample) -> Result<SymmetricPair> {
    let p = sample.n_variables();
    let n = sample.n_total() as f64;
    let means: Vec<Vec<f64>> = sample.groups.iter().map(group_mean).collect();
    let mut grand = vec![0.0; p];
    for (x, mean) in sample.groups.iter().zip(&means) {
        let w = x.rows() as f64 / n;
        for j in 0..p {
            grand[j] += w * mean[j];
        }
    }
    let mut b = Mat::zeros(p, p);
    for (x, mean) in sample.groups.iter().zip(&means) {
        let ni = x.rows() as f64;
        for r in 0..p {
            for c in 0..p {
                b[(r, c)] += ni * (mean[r] - grand[r]) * (mean[c] - grand[c]);
            }
        }
    }
    let mut w = Mat::zeros(p, p);
    for (x, mean) in sample.groups.iter().zip(&means) {
        for i in 0..x.rows() {
            for r in 0..p {
                let dr = x[(i, r)] - mean[r];
                for c in 0..p {
                    w[(r, c)] += dr * (x[(i, c)] - mean[c]);
                }
            }
        }
    }
    SymmetricPair::new(w, b)
}

/// Rebuilds (W, B) through the block-isometry route: per-group orthogonal
/// Hᵢ with first column 𝟙/√nᵢ, Z = stacked HᵢᵀXᵢ, block diagonal U₁/U₂ and
/// Ũ₁ = U₁(I − aaᵀ). Returns (Z U₂U₂ᵀ Zᵀ, Z Ũ₁Ũ₁ᵀ Zᵀ); used to verify
/// `manova_sscp`.
pub fn manova_block_oracle(sample: &GroupedSample) -> Result<SymmetricPair> {
    let p = sample.n_variables();
    let g = sample.n_groups();
    let n = sample.n_total();
    let sizes = sample.group_sizes();

    // Z is p x n: per-group blocks Zi^T = (Hi^T Xi)^T = Xi^T Hi
    let mut z = Mat::zeros(p, n);
    let mut col0 = 0usize;
    for x in &sample.groups {
        let ni = x.rows();
        let h = householder_ones_basis(ni);
        let zi = x.t_mul(&h); // p x ni
        for r in 0..p {
            for c in 0..ni {
                z[(r, col0 + c)] = zi[(r, c)];
            }
        }
        col0 += ni;
    }

    // U1: n x g block diagonal of first unit columns; U2: n x (n-g) of the rest
    let mut u1 = Mat::zeros(n, g);
    let mut u2 = Mat::zeros(n, n - g);
    let mut row0 = 0usize;
    let mut u2c = 0usize;
    for (gi, &ni) in sizes.iter().enumerate() {
        u1[(row0, gi)] = 1.0;
        for k in 1..ni {
            u2[(row0 + k, u2c)] = 1.0;
            u2c += 1;
        }
        row0 += ni;
    }

    // P_g = I - a a^T with a = (sqrt(n1/n), ..., sqrt(ng/n))
    let a: Vec<f64> = sizes.iter().map(|&ni| (ni as f64 / n as f64).sqrt()).collect();
    let pg = Mat::from_fn(g, g, |i, j| {
        let e = if i == j { 1.0 } else { 0.0 };
        e - a[i] * a[j]
    });
    let u1_tilde = u1.mul(&pg);

    let zu2 = z.mul(&u2);
    let zu1 = z.mul(&u1_tilde);
    SymmetricPair::new(zu2.outer_gram(), zu1.outer_gram())
}

/// Orthogonal nᵢ×nᵢ matrix with first column 𝟙/√nᵢ (Householder completion).
fn householder_ones_basis(n: usize) -> Mat {
    let u0 = 1.0 / (n as f64).sqrt();
    let mut v = vec![u0; n];
    v[0] -= 1.0;
    let vnorm2: f64 = v.iter().map(|x| x * x).sum();
    Mat::from_fn(n, n, |i, j| {
        let e = if i == j { 1.0 } else { 0.0 };
        e - 2.0 * v[i] * v[j] / vnorm2
    })
}

/// Largest-root MANOVA test of equal group means.
pub fn manova_test(sample: &GroupedSample, tw: &Tw1Table) -> Result<TestReport> {
    let pair = manova_sscp(sample)?;
    let lambda1 = largest_relative_eigenvalue(&pair)?;
    let dims = DimensionQuad::new(
        sample.n_variables(),
        sample.n_groups() - 1,
        sample.n_groups(),
        sample.n_total(),
    )?;
    TestReport::from_lambda1(Method::Manova, lambda1, dims, sample.alpha(), tw)
}
