//! Independence test for two observed random vectors via the largest
//! squared sample canonical correlation.
//!
//! γ₁ is the largest eigenvalue of
//! (ZPZᵀ)⁻¹(ZPYᵀ)(YPYᵀ)⁻¹(ZPYᵀ)ᵀ with P the observation-centering
//! projection; the test statistic is λ₁ = γ₁/(1−γ₁), rescaled with the
//! dimension tuple (M₁, M₂, M₂, N).

use crate::calibrate::DimensionQuad;
use crate::error::{Error, Result};
use crate::linalg::DataMatrix;
use crate::report::{check_alpha, Method, TestReport};
use crate::tw::Tw1Table;

/// Numerical saturation guard for γ₁ → 1.
const SATURATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone)]
pub struct CcaInput {
    pub z: DataMatrix,
    pub y: DataMatrix,
    pub alpha: f64,
}

impl CcaInput {
    pub fn new(z: DataMatrix, y: DataMatrix, alpha: f64) -> Result<Self> {
        check_alpha(alpha)?;
        if z.n_observations() != y.n_observations() {
            return Err(Error::Dimension(format!(
                "observation counts differ: {} vs {}",
                z.n_observations(),
                y.n_observations()
            )));
        }
        Ok(CcaInput { z, y, alpha })
    }
}

/// Largest squared sample canonical correlation, clamped into [0, 1].
///
/// Signals `Error::Saturated` when N ≤ M₁ + M₂, where γ₁ ≡ 1.
pub fn cca_gamma1(z: &DataMatrix, y: &DataMatrix) -> Result<f64> {
    let n = z.n_observations();
    if y.n_observations() != n {
        return Err(Error::Dimension("observation counts differ".into()));
    }
    let m1 = z.n_variables();
    let m2 = y.n_variables();
    if n <= m1 + m2 {
        return Err(Error::Saturated);
    }
    let zc = z.variables_in_rows().center_rows();
    let yc = y.variables_in_rows().center_rows();
    let a_zz = zc.outer_gram();
    let a_yy = yc.outer_gram();
    let a_zy = zc.mul_t(&yc);

    let lz = a_zz.cholesky().map_err(|_| {
        Error::NotPositiveDefinite("centered z cross-product is singular".into())
    })?;
    let ly = a_yy.cholesky().map_err(|_| {
        Error::NotPositiveDefinite("centered y cross-product is singular".into())
    })?;
    // gamma1 = sigma_max(Lz^{-1} A_zy Ly^{-T})^2
    let m = lz.forward_solve(&ly.forward_solve(&a_zy.transpose()).transpose());
    let gram = m.outer_gram();
    let top = crate::mat::symmetric_eigen_max(&gram)?;
    Ok(top.clamp(0.0, 1.0))
}

/// Largest-root independence test (null: the two vectors are independent).
pub fn cca_independence_test(input: &CcaInput, tw: &Tw1Table) -> Result<TestReport> {
    let n = input.z.n_observations();
    let m1 = input.z.n_variables();
    let m2 = input.y.n_variables();
    let gamma1 = match cca_gamma1(&input.z, &input.y) {
        Ok(g) => g,
        Err(Error::Saturated) => {
            let dims = DimensionQuad::new_unchecked(m1, m2, m2, n);
            return Ok(TestReport::saturated(Method::Cca, dims, input.alpha));
        }
        Err(e) => return Err(e),
    };
    let dims = DimensionQuad::new(m1, m2, m2, n)?;
    if gamma1 >= 1.0 - SATURATION_TOL {
        return Ok(TestReport::saturated(Method::Cca, dims, input.alpha));
    }
    let lambda1 = gamma1 / (1.0 - gamma1);
    TestReport::from_lambda1(Method::Cca, lambda1, dims, input.alpha, tw)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Orientation;
    use crate::mat::Mat;
    use crate::rng::RngStream;

    fn dm(m: Mat) -> DataMatrix {
        DataMatrix::new(m, Orientation::VariablesInRows).unwrap()
    }

    fn random_mat(rows: usize, cols: usize, seed: u64) -> Mat {
        let mut rng = RngStream::from_seed(seed);
        Mat::from_fn(rows, cols, |_, _| rng.standard_normal())
    }

    #[test]
    fn univariate_gamma_is_squared_pearson() {
        let zs = [1.2, -0.7, 2.3, 0.4, -1.8, 0.9, 3.1, -0.2];
        let ys = [0.8, -1.1, 1.9, 0.1, -2.2, 1.3, 2.4, 0.5];
        let z = dm(Mat::from_vec(1, 8, zs.to_vec()).unwrap());
        let y = dm(Mat::from_vec(1, 8, ys.to_vec()).unwrap());
        let g = cca_gamma1(&z, &y).unwrap();

        let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
        let (mz, my) = (mean(&zs), mean(&ys));
        let mut num = 0.0;
        let mut dz = 0.0;
        let mut dy = 0.0;
        for i in 0..8 {
            num += (zs[i] - mz) * (ys[i] - my);
            dz += (zs[i] - mz).powi(2);
            dy += (ys[i] - my).powi(2);
        }
        let r2 = num * num / (dz * dy);
        assert!((g - r2).abs() < 1e-10, "{g} vs {r2}");
    }

    #[test]
    fn identical_data_saturates_gamma() {
        let z = dm(random_mat(3, 20, 70));
        let g = cca_gamma1(&z, &z.clone()).unwrap();
        assert!(g > 1.0 - 1e-8, "{g}");
    }

    #[test]
    fn gamma_symmetric_in_arguments() {
        let z = dm(random_mat(3, 25, 71));
        let y = dm(random_mat(4, 25, 72));
        let g1 = cca_gamma1(&z, &y).unwrap();
        let g2 = cca_gamma1(&y, &z).unwrap();
        assert!((g1 - g2).abs() < 1e-10);
    }

    #[test]
    fn gamma_invariant_under_mean_shift_and_linear_maps() {
        let z = dm(random_mat(3, 25, 73));
        let y = dm(random_mat(4, 25, 74));
        let g = cca_gamma1(&z, &y).unwrap();

        // row-wise constant shifts
        let zs = Mat::from_fn(3, 25, |i, j| z.mat()[(i, j)] + 10.0 * (i as f64 + 1.0));
        let g_shift = cca_gamma1(&dm(zs), &y).unwrap();
        assert!((g - g_shift).abs() < 1e-10, "{g} vs {g_shift}");

        // invertible maps applied separately
        let az = Mat::identity(3).add(&random_mat(3, 3, 75).scale(0.2));
        let ay = Mat::identity(4).add(&random_mat(4, 4, 76).scale(0.2));
        let g_map = cca_gamma1(&dm(az.mul(z.mat())), &dm(ay.mul(y.mat()))).unwrap();
        assert!((g - g_map).abs() < 1e-7, "{g} vs {g_map}");
    }

    #[test]
    fn saturation_by_dimension_count() {
        let z = dm(random_mat(6, 10, 77));
        let y = dm(random_mat(6, 10, 78));
        assert!(matches!(cca_gamma1(&z, &y), Err(Error::Saturated)));
        let input = CcaInput::new(z, y, 0.05).unwrap();
        let r = cca_independence_test(&input, Tw1Table::builtin()).unwrap();
        assert!(r.saturated && r.reject && r.p_value == 0.0);
    }

    #[test]
    fn gamma_half_maps_to_lambda_one() {
        // lambda = gamma/(1-gamma) at gamma = 0.5
        assert!((0.5f64 / (1.0 - 0.5) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn report_invariants_on_independent_data() {
        let z = dm(random_mat(4, 40, 79));
        let y = dm(random_mat(5, 40, 80));
        let input = CcaInput::new(z, y, 0.05).unwrap();
        let tw = Tw1Table::builtin();
        let r = cca_independence_test(&input, tw).unwrap();
        assert_eq!(r.dims, DimensionQuad::new(4, 5, 5, 40).unwrap());
        assert!((r.p_value - tw.pvalue(r.rescaled).unwrap()).abs() < 1e-15);
        let crit = tw.quantile(0.95).unwrap();
        assert_eq!(r.reject, r.rescaled > crit);
    }

    #[test]
    fn observations_in_rows_accepted() {
        let zm = random_mat(30, 3, 81);
        let ym = random_mat(30, 4, 82);
        let z = DataMatrix::new(zm.clone(), Orientation::ObservationsInRows).unwrap();
        let y = DataMatrix::new(ym.clone(), Orientation::ObservationsInRows).unwrap();
        let g1 = cca_gamma1(&z, &y).unwrap();
        let g2 = cca_gamma1(&dm(zm.transpose()), &dm(ym.transpose())).unwrap();
        assert!((g1 - g2).abs() < 1e-14);
    }
}
