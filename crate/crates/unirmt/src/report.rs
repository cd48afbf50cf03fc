//! Test outcome type shared by every hypothesis test.

use crate::calibrate::{log_rescale_params, rescale_statistic, DimensionQuad};
use crate::error::{Error, Result};
use crate::tw::Tw1Table;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Method {
    #[serde(rename = "CCA")]
    Cca,
    #[serde(rename = "MANOVA")]
    Manova,
    LinModelLinear,
    LinModelIntraSubject,
    UnifiedOmega,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Cca => "CCA",
            Method::Manova => "MANOVA",
            Method::LinModelLinear => "LinModelLinear",
            Method::LinModelIntraSubject => "LinModelIntraSubject",
            Method::UnifiedOmega => "UnifiedOmega",
        };
        f.write_str(s)
    }
}

/// Statistic, rescaled statistic, p-value and decision at level alpha.
///
/// `lambda1` is `+inf` and `saturated` is set when the squared canonical
/// correlation degenerates to 1; `rescaled` is `-inf` when the hypothesis
/// SSCP vanishes (λ₁ = 0, maximal evidence for the null). Non-finite values
/// serialize to JSON `null`, with `saturated` disambiguating the direction.
#[derive(Debug, Clone)]
pub struct TestReport {
    pub method: Method,
    pub lambda1: f64,
    pub saturated: bool,
    pub rescaled: f64,
    pub p_value: f64,
    pub alpha: f64,
    pub reject: bool,
    pub dims: DimensionQuad,
}

impl TestReport {
    /// Builds the report for a finite statistic, applying the log-transform
    /// rescaling for `dims` and the decision rule
    /// `reject ⇔ rescaled > quantile(1 − alpha)`.
    pub fn from_lambda1(
        method: Method,
        lambda1: f64,
        dims: DimensionQuad,
        alpha: f64,
        tw: &Tw1Table,
    ) -> Result<TestReport> {
        check_alpha(alpha)?;
        if lambda1 < 0.0 || lambda1.is_nan() {
            return Err(Error::Argument(format!(
                "statistic must be nonnegative, got {lambda1}"
            )));
        }
        if lambda1.is_infinite() {
            return Ok(TestReport::saturated(method, dims, alpha));
        }
        if lambda1 == 0.0 {
            // zero hypothesis SSCP: maximal evidence for the null
            return Ok(TestReport {
                method,
                lambda1: 0.0,
                saturated: false,
                rescaled: f64::NEG_INFINITY,
                p_value: 1.0,
                alpha,
                reject: false,
                dims,
            });
        }
        let params = log_rescale_params(dims)?;
        let rescaled = rescale_statistic(lambda1, &params)?;
        let p_value = tw.pvalue(rescaled)?;
        let critical = tw.quantile(1.0 - alpha)?;
        Ok(TestReport {
            method,
            lambda1,
            saturated: false,
            rescaled,
            p_value,
            alpha,
            reject: rescaled > critical,
            dims,
        })
    }

    /// Report for the degenerate regime where λ₁ = ∞.
    pub fn saturated(method: Method, dims: DimensionQuad, alpha: f64) -> TestReport {
        TestReport {
            method,
            lambda1: f64::INFINITY,
            saturated: true,
            rescaled: f64::INFINITY,
            p_value: 0.0,
            alpha,
            reject: true,
            dims,
        }
    }

    /// One-row CSV rendering with a header line.
    pub fn to_csv(&self) -> String {
        let fmt = |v: f64| {
            if v.is_finite() {
                format!("{v}")
            } else if v > 0.0 {
                "inf".into()
            } else {
                "-inf".into()
            }
        };
        format!(
            "method,lambda1,saturated,rescaled,p_value,alpha,reject,m1,n1,n2,n\n{},{},{},{},{},{},{},{},{},{},{}\n",
            self.method,
            fmt(self.lambda1),
            self.saturated,
            fmt(self.rescaled),
            self.p_value,
            self.alpha,
            self.reject,
            self.dims.m1,
            self.dims.n1,
            self.dims.n2,
            self.dims.n
        )
    }
}

pub(crate) fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Argument(format!(
            "alpha must lie in the open interval (0, 1), got {alpha}"
        )));
    }
    Ok(())
}

fn nullable_f64<S: Serializer>(v: &f64, ser: S) -> std::result::Result<S::Ok, S::Error> {
    if v.is_finite() {
        ser.serialize_f64(*v)
    } else {
        ser.serialize_none()
    }
}

impl Serialize for TestReport {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("TestReport", 8)?;
        st.serialize_field("method", &self.method)?;
        struct Nullable(f64);
        impl Serialize for Nullable {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                nullable_f64(&self.0, s)
            }
        }
        st.serialize_field("lambda1", &Nullable(self.lambda1))?;
        st.serialize_field("saturated", &self.saturated)?;
        st.serialize_field("rescaled", &Nullable(self.rescaled))?;
        st.serialize_field("p_value", &self.p_value)?;
        st.serialize_field("alpha", &self.alpha)?;
        st.serialize_field("reject", &self.reject)?;
        st.serialize_field("dims", &self.dims)?;
        st.end()
    }
}
