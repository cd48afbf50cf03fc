//! Calibration of the largest-root statistic: dimension bookkeeping, the
//! closed-form log-transform rescaling, and the exact Marchenko-Pastur
//! centering route.

use crate::error::{Error, Result};
use crate::linalg::{largest_relative_eigenvalue, SymmetricPair};
use crate::mat::Mat;
use crate::quad::integrate_split;
use serde::{Deserialize, Serialize};

/// The dimension tuple (M₁, N₁, N₂, N) that governs every rescaling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionQuad {
    pub m1: usize,
    pub n1: usize,
    pub n2: usize,
    pub n: usize,
}

impl DimensionQuad {
    pub fn new(m1: usize, n1: usize, n2: usize, n: usize) -> Result<Self> {
        if m1 < 1 || n1 < 1 {
            return Err(Error::Dimension(
                "dimension tuple needs m1 >= 1 and n1 >= 1".into(),
            ));
        }
        if !(n1 <= n2 && n2 <= n) {
            return Err(Error::Dimension(format!(
                "need n1 <= n2 <= n, got ({n1}, {n2}, {n})"
            )));
        }
        if n <= m1 + n2 {
            return Err(Error::Dimension(format!(
                "need n > m1 + n2, got n = {n} vs m1 + n2 = {}",
                m1 + n2
            )));
        }
        Ok(DimensionQuad { m1, n1, n2, n })
    }

    /// Used by saturated/degenerate reports where the tuple may violate the
    /// calibration preconditions but must still be echoed.
    pub(crate) fn new_unchecked(m1: usize, n1: usize, n2: usize, n: usize) -> Self {
        DimensionQuad { m1, n1, n2, n }
    }

    pub fn magnified(&self, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Argument("magnification must be >= 1".into()));
        }
        DimensionQuad::new(self.m1 * k, self.n1 * k, self.n2 * k, self.n * k)
    }
}

impl std::fmt::Display for DimensionQuad {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{},{})", self.m1, self.n1, self.n2, self.n)
    }
}

/// Angle parameters and the derived location/scale for ln λ₁.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LogRescaleParams {
    pub phi: f64,
    pub varphi: f64,
    pub mu_tilde: f64,
    pub sigma_tilde: f64,
}

/// Closed-form location and scale for the log-transformed statistic:
///
/// sin²(ϕ/2) = (min(M₁,N₁)−½)/(N−N₂+N₁−1),
/// sin²(φ/2) = (max(M₁,N₁)−½)/(N−N₂+N₁−1),
/// μ̃ = 2 ln tan((φ+ϕ)/2), σ̃³ = 16/(N−N₂+N₁−1)² · 1/(sin²(φ+ϕ) sinφ sinϕ).
pub fn log_rescale_params(d: DimensionQuad) -> Result<LogRescaleParams> {
    let denom = (d.n + d.n1) as f64 - d.n2 as f64 - 1.0;
    if denom <= 0.0 {
        return Err(Error::Calibration(format!(
            "N - N2 + N1 - 1 must be positive, got {denom}"
        )));
    }
    let lo = d.m1.min(d.n1) as f64 - 0.5;
    let hi = d.m1.max(d.n1) as f64 - 0.5;
    let sin2_varphi_half = lo / denom;
    let sin2_phi_half = hi / denom;
    if sin2_phi_half >= 1.0 || sin2_varphi_half <= 0.0 {
        return Err(Error::Calibration(format!(
            "angle arguments must lie in (0, 1): got {sin2_varphi_half} and {sin2_phi_half}"
        )));
    }
    let varphi = 2.0 * sin2_varphi_half.sqrt().asin();
    let phi = 2.0 * sin2_phi_half.sqrt().asin();
    let half_sum = 0.5 * (phi + varphi);
    let tan_half = half_sum.tan();
    let sin_sum = (phi + varphi).sin();
    if tan_half.is_nan() || tan_half <= 0.0 || sin_sum.is_nan() || sin_sum <= 0.0 {
        return Err(Error::Calibration(
            "angle sum leaves the calibration domain (phi + varphi >= pi)".into(),
        ));
    }
    let mu_tilde = 2.0 * tan_half.ln();
    let sigma3 = 16.0 / (denom * denom) / (sin_sum * sin_sum * phi.sin() * varphi.sin());
    Ok(LogRescaleParams {
        phi,
        varphi,
        mu_tilde,
        sigma_tilde: sigma3.cbrt(),
    })
}

/// (ln λ₁ − μ̃)/σ̃.
pub fn rescale_statistic(lambda1: f64, p: &LogRescaleParams) -> Result<f64> {
    if lambda1.is_nan() || lambda1 <= 0.0 || !lambda1.is_finite() {
        return Err(Error::Argument(format!(
            "rescale_statistic needs a finite lambda1 > 0, got {lambda1}"
        )));
    }
    Ok((lambda1.ln() - p.mu_tilde) / p.sigma_tilde)
}

/// Root and moments of the exact centering route.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ExactCenterParams {
    pub c_n: f64,
    pub mu_n: f64,
    pub sigma_n: f64,
}

/// Marchenko-Pastur density integrals ∫ (c/(s−c))^k ρ_y(s) ds on the unit-
/// scale support [a₋, a₊], a± = (1±√y)², computed after the substitution
/// s = m + h cosθ which absorbs the inverse-square-root edges.
fn mp_integral(c: f64, k: i32, y: f64) -> Result<f64> {
    let a_minus = (1.0 - y.sqrt()).powi(2);
    let a_plus = (1.0 + y.sqrt()).powi(2);
    let h = 0.5 * (a_plus - a_minus);
    let norm = h * h / (2.0 * std::f64::consts::PI * y);
    let pi = std::f64::consts::PI;
    let gap = a_minus - c; // distance from c to the lower edge, > 0

    // The integrand peaks at theta = pi on the scale u ~ sqrt(2 gap / h);
    // seed the subdivision with a geometric ladder down to that scale.
    let mut points = vec![0.0, 0.5 * pi];
    let peak = (2.0 * gap.max(0.0) / h).sqrt();
    let mut u = 0.45 * pi;
    while u > 0.05 * peak.max(1e-9) {
        points.push(pi - u);
        u *= 0.25;
    }
    points.push(pi);

    // s - a_minus = 2 h cos^2(theta/2) keeps s - c = gap + (s - a_minus)
    // free of cancellation however close c sits to the edge.
    let val = integrate_split(
        |theta| {
            let cos_half = (0.5 * theta).cos();
            let sin_half = (0.5 * theta).sin();
            let edge_dist = 2.0 * h * cos_half * cos_half;
            let s = a_minus + edge_dist;
            let sin_t = 2.0 * sin_half * cos_half;
            (c / (gap + edge_dist)).powi(k) * sin_t * sin_t / s
        },
        &points,
        1e-10,
    )?;
    Ok(norm * val)
}

/// Solves the centering equation ∫ (c/(λ−c))² dF(λ) = N₁/M₁ and evaluates
/// the matching location and scale.
///
/// F is the limiting spectrum of the inverted denominator Gram matrix; with
/// the substitution λ → 1/λ the three integrals run against the unit-scale
/// Marchenko-Pastur density with ratio y = M₁/(N−N₂), whose lower edge
/// (1−√y)² is exactly the right end of the root bracket, so the strictly
/// increasing left side always crosses the target inside the bracket. The
/// unit-scale root is reported as c_n; location and scale carry the factor
/// r = N₁/(N−N₂) that returns them to the statistic's own normalization
/// (μ_n = r·μ_unit, σ_n = σ_unit/r), which is what the log-transform route
/// calibrates against.
pub fn exact_center_params(d: DimensionQuad) -> Result<ExactCenterParams> {
    let y = d.m1 as f64 / (d.n - d.n2) as f64;
    if !(y > 0.0 && y < 1.0) {
        return Err(Error::Calibration(format!(
            "need M1/(N-N2) in (0,1), got {y}"
        )));
    }
    let r = d.n1 as f64 / (d.n - d.n2) as f64;
    let ratio = d.m1 as f64 / d.n1 as f64; // M1/N1
    let target = 1.0 / ratio; // N1/M1
    let a_minus = (1.0 - y.sqrt()).powi(2);

    // bisection bracket [0, a_minus - delta], delta = 1e-9
    let hi0 = a_minus - 1e-9;
    if hi0 <= 0.0 {
        return Err(Error::Calibration(
            "bracket collapsed: (1-sqrt(y))^2 <= 1e-9".into(),
        ));
    }
    let g_hi = mp_integral(hi0, 2, y)?;
    if g_hi < target {
        return Err(Error::NoRoot {
            lo: 0.0,
            hi: g_hi,
            target,
        });
    }
    let (mut lo, mut hi) = (0.0f64, hi0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mp_integral(mid, 2, y)? < target {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * a_minus {
            break;
        }
    }
    let c_n = 0.5 * (lo + hi);
    let mu_n = r * (1.0 + ratio * mp_integral(c_n, 1, y)?) / c_n;
    let inv_sigma3 = (1.0 + ratio * mp_integral(c_n, 3, y)?) / (c_n * c_n * c_n);
    let sigma_n = inv_sigma3.powf(-1.0 / 3.0) / r;
    Ok(ExactCenterParams { c_n, mu_n, sigma_n })
}

/// Largest eigenvalue of [W(I−𝟙𝟙ᵀ/n₂)Wᵀ]⁻¹ Y(I−𝟙𝟙ᵀ/n₁)Yᵀ for two data
/// blocks sharing the row dimension: the centered two-sample statistic.
pub fn centered_f_lambda1(y: &Mat, w: &Mat) -> Result<f64> {
    if y.rows() != w.rows() {
        return Err(Error::Dimension(format!(
            "blocks must share the row dimension, got {} and {}",
            y.rows(),
            w.rows()
        )));
    }
    if w.cols() <= y.rows() {
        return Err(Error::Dimension(format!(
            "need n2 > M1 for an invertible denominator, got n2 = {} vs M1 = {}",
            w.cols(),
            y.rows()
        )));
    }
    let yc = y.center_rows();
    let wc = w.center_rows();
    let pair = SymmetricPair::new(wc.outer_gram(), yc.outer_gram())?;
    largest_relative_eigenvalue(&pair)
}
