//! Largest-root tests in the multivariate linear model Y = XB + Z:
//! linear hypotheses C₁B = Γ₁ and intra-subject hypotheses CBD = Γ.
//!
//! One pivoted QR of X is computed per test and reused for the estimate,
//! the hypothesis SSCP and the error SSCP.

use crate::calibrate::DimensionQuad;
use crate::error::{Error, Result};
use crate::linalg::{largest_relative_eigenvalue, DataMatrix, SymmetricPair};
use crate::mat::{Mat, PivotedQr};
use crate::report::{check_alpha, Method, TestReport};
use crate::tw::Tw1Table;

#[derive(Debug, Clone)]
pub struct LinModelInput {
    pub y: DataMatrix,
    pub x: DataMatrix,
    pub c: Mat,
    pub d: Option<Mat>,
    pub gamma: Mat,
    pub alpha: f64,
}

impl LinModelInput {
    pub fn new(
        y: DataMatrix,
        x: DataMatrix,
        c: Mat,
        d: Option<Mat>,
        gamma: Mat,
        alpha: f64,
    ) -> Result<Self> {
        check_alpha(alpha)?;
        let n = x.n_observations();
        if y.n_observations() != n {
            return Err(Error::Dimension(format!(
                "y and x observation counts differ: {} vs {n}",
                y.n_observations()
            )));
        }
        let p1 = x.n_variables();
        let p2 = y.n_variables();
        if c.cols() != p1 {
            return Err(Error::Dimension(format!(
                "c must have p1 = {p1} columns, got {}",
                c.cols()
            )));
        }
        let g1 = c.rows();
        if g1 == 0 || g1 > p1 {
            return Err(Error::Dimension(format!(
                "c must have between 1 and {p1} rows, got {g1}"
            )));
        }
        let c_rank = c.transpose().qr().rank();
        if c_rank < g1 {
            return Err(Error::RankDeficient {
                detected: c_rank,
                expected: g1,
            });
        }
        let response_dim = match &d {
            Some(d) => {
                if d.rows() != p2 {
                    return Err(Error::Dimension(format!(
                        "d must have p2 = {p2} rows, got {}",
                        d.rows()
                    )));
                }
                let g2 = d.cols();
                if g2 == 0 {
                    return Err(Error::Dimension("d needs at least one column".into()));
                }
                let d_rank = d.qr().rank();
                if d_rank < g2 {
                    return Err(Error::RankDeficient {
                        detected: d_rank,
                        expected: g2,
                    });
                }
                g2
            }
            None => p2,
        };
        if n <= p1 + response_dim {
            return Err(Error::Dimension(format!(
                "need N > p1 + {response_dim}, got N = {n}"
            )));
        }
        if gamma.rows() != g1 || gamma.cols() != response_dim {
            return Err(Error::Dimension(format!(
                "gamma must be {g1} x {response_dim}, got {} x {}",
                gamma.rows(),
                gamma.cols()
            )));
        }
        Ok(LinModelInput {
            y,
            x,
            c,
            d,
            gamma,
            alpha,
        })
    }
}

/// Least-squares estimate B̂ = (XᵀX)⁻¹XᵀY.
pub fn least_squares(y: &DataMatrix, x: &DataMatrix) -> Result<Mat> {
    let xm = x.observations_in_rows();
    let ym = y.observations_in_rows();
    if xm.rows() != ym.rows() {
        return Err(Error::Dimension("y and x observation counts differ".into()));
    }
    xm.qr().solve(&ym)
}

struct Fit {
    bhat: Mat,
    e1: Mat,
    qr: PivotedQr,
}

fn fit(y: &Mat, x: &Mat) -> Result<Fit> {
    let qr = x.qr();
    let bhat = qr.solve(y)?;
    let resid = y.sub(&x.mul(&bhat));
    let e1 = resid.gram();
    Ok(Fit { bhat, e1, qr })
}

fn hypothesis_sscp_from_fit(fit: &Fit, c: &Mat, gamma: &Mat) -> Result<SymmetricPair> {
    // G = C (XᵀX)⁻¹ Cᵀ through the stored factorization
    let s = fit.qr.solve_normal(&c.transpose())?;
    let g = c.mul(&s);
    let delta = c.mul(&fit.bhat).sub(gamma);
    let chol = g.symmetrized().cholesky().map_err(|_| {
        Error::NotPositiveDefinite("C (XᵀX)⁻¹ Cᵀ is singular".into())
    })?;
    let half = chol.forward_solve(&delta);
    let h1 = half.gram();
    SymmetricPair::new(fit.e1.clone(), h1)
}

/// Error and hypothesis SSCPs for the linear hypothesis C₁B = Γ₁:
/// E₁ = Yᵀ(I−P_X)Y, H₁ = (C₁B̂−Γ₁)ᵀ[C₁(XᵀX)⁻¹C₁ᵀ]⁻¹(C₁B̂−Γ₁).
pub fn linear_hypothesis_sscp(input: &LinModelInput) -> Result<SymmetricPair> {
    if input.d.is_some() {
        return Err(Error::Argument(
            "linear route does not take a d matrix; use intra_subject_test".into(),
        ));
    }
    let fit = fit(
        &input.y.observations_in_rows(),
        &input.x.observations_in_rows(),
    )?;
    hypothesis_sscp_from_fit(&fit, &input.c, &input.gamma)
}

/// Largest-root test of C₁B = Γ₁; calibration tuple (p₂, g₁, p₁, N).
pub fn linear_hypothesis_test(input: &LinModelInput, tw: &Tw1Table) -> Result<TestReport> {
    let pair = linear_hypothesis_sscp(input)?;
    let lambda1 = largest_relative_eigenvalue(&pair)?;
    let dims = DimensionQuad::new(
        input.y.n_variables(),
        input.c.rows(),
        input.x.n_variables(),
        input.x.n_observations(),
    )?;
    TestReport::from_lambda1(Method::LinModelLinear, lambda1, dims, input.alpha, tw)
}

/// Largest-root test of CBD = Γ: the responses are replaced by YD and the
/// linear route runs on the transformed model; calibration tuple
/// (g₂, g₁, p₁, N).
pub fn intra_subject_test(input: &LinModelInput, tw: &Tw1Table) -> Result<TestReport> {
    let d = input
        .d
        .as_ref()
        .ok_or_else(|| Error::Argument("intra-subject route needs a d matrix".into()))?;
    let yd = input.y.observations_in_rows().mul(d);
    let fit = fit(&yd, &input.x.observations_in_rows())?;
    let pair = hypothesis_sscp_from_fit(&fit, &input.c, &input.gamma)?;
    let lambda1 = largest_relative_eigenvalue(&pair)?;
    let dims = DimensionQuad::new(
        d.cols(),
        input.c.rows(),
        input.x.n_variables(),
        input.x.n_observations(),
    )?;
    TestReport::from_lambda1(Method::LinModelIntraSubject, lambda1, dims, input.alpha, tw)
}
