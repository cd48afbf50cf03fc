//! Type-1 Tracy-Widom distribution: CDF, quantile and p-value queries.
//!
//! Backed by an embedded table on s = −10.00(0.01)6.00 (see `painleve` for
//! how it is generated) with shape-preserving monotone-cubic interpolation,
//! so the CDF is strictly increasing inside the grid and exactly invertible.
//! A replacement table can be loaded from a two-column CSV (abscissa, cdf).

pub mod painleve;
mod table_data;

use crate::error::{Error, Result};
use std::path::Path;
use std::sync::OnceLock;

const TAIL_CLAMP: f64 = 1e-12;

/// Tabulated type-1 Tracy-Widom CDF with monotone-cubic interpolation.
#[derive(Debug, Clone)]
pub struct Tw1Table {
    s: Vec<f64>,
    cdf: Vec<f64>,
    slopes: Vec<f64>,
}

impl Tw1Table {
    /// The embedded high-resolution table.
    pub fn builtin() -> &'static Tw1Table {
        static TABLE: OnceLock<Tw1Table> = OnceLock::new();
        TABLE.get_or_init(|| {
            let n = table_data::TW1_CDF.len();
            let s: Vec<f64> = (0..n)
                .map(|k| table_data::TW1_S_MIN + k as f64 * table_data::TW1_S_STEP)
                .collect();
            Tw1Table::from_columns(s, table_data::TW1_CDF.to_vec())
                .expect("embedded table is valid")
        })
    }

    /// Builds a table from paired columns; both must be strictly increasing
    /// and the CDF values must lie in (0, 1).
    pub fn from_columns(s: Vec<f64>, cdf: Vec<f64>) -> Result<Self> {
        if s.len() != cdf.len() {
            return Err(Error::Dimension(
                "abscissa and cdf columns differ in length".into(),
            ));
        }
        if s.len() < 4 {
            return Err(Error::Dimension("table needs at least 4 rows".into()));
        }
        if s.iter().any(|v| !v.is_finite()) || cdf.iter().any(|v| !v.is_finite()) {
            return Err(Error::Argument("table contains non-finite values".into()));
        }
        if s.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument("abscissae must increase strictly".into()));
        }
        if cdf.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Argument("cdf values must increase strictly".into()));
        }
        if cdf[0] <= 0.0 || cdf[cdf.len() - 1] >= 1.0 {
            return Err(Error::Argument("cdf values must lie inside (0, 1)".into()));
        }
        let slopes = pchip_slopes(&s, &cdf);
        Ok(Tw1Table { s, cdf, slopes })
    }

    /// Reads a two-column CSV (abscissa, cdf), optional header row.
    pub fn from_csv(path: &Path) -> Result<Self> {
        let m = crate::io::read_matrix_csv(path)?;
        if m.cols() != 2 {
            return Err(Error::Parse {
                line: 1,
                msg: format!("expected 2 columns (abscissa, cdf), found {}", m.cols()),
            });
        }
        let s = (0..m.rows()).map(|i| m[(i, 0)]).collect();
        let cdf = (0..m.rows()).map(|i| m[(i, 1)]).collect();
        Tw1Table::from_columns(s, cdf)
    }

    /// CDF at `s`, clamped into [1e-12, 1 − 1e-12]; tail queries beyond the
    /// grid return the clamp values.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::Argument("cdf argument must be finite".into()));
        }
        let n = self.s.len();
        let raw = if x <= self.s[0] {
            self.cdf[0]
        } else if x >= self.s[n - 1] {
            self.cdf[n - 1]
        } else {
            let cell = match self
                .s
                .binary_search_by(|v| v.partial_cmp(&x).unwrap())
            {
                Ok(k) => return Ok(self.cdf[k].clamp(TAIL_CLAMP, 1.0 - TAIL_CLAMP)),
                Err(k) => k - 1,
            };
            self.eval_cell(cell, x)
        };
        Ok(raw.clamp(TAIL_CLAMP, 1.0 - TAIL_CLAMP))
    }

    /// Upper-tail probability 1 − cdf(s).
    pub fn pvalue(&self, x: f64) -> Result<f64> {
        Ok(1.0 - self.cdf(x)?)
    }

    /// Quantile: the s with cdf(s) = p, clamped to the grid span.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Argument(format!(
                "quantile probability must lie in (0, 1), got {p}"
            )));
        }
        let n = self.s.len();
        if p <= self.cdf[0] {
            return Ok(self.s[0]);
        }
        if p >= self.cdf[n - 1] {
            return Ok(self.s[n - 1]);
        }
        let cell = match self
            .cdf
            .binary_search_by(|v| v.partial_cmp(&p).unwrap())
        {
            Ok(k) => return Ok(self.s[k]),
            Err(k) => k - 1,
        };
        // bisection on the monotone cubic inside the cell
        let (mut lo, mut hi) = (self.s[cell], self.s[cell + 1]);
        for _ in 0..80 {
            let mid = 0.5 * (lo + hi);
            if self.eval_cell(cell, mid) < p {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    fn eval_cell(&self, k: usize, x: f64) -> f64 {
        let h = self.s[k + 1] - self.s[k];
        let t = (x - self.s[k]) / h;
        let (y0, y1) = (self.cdf[k], self.cdf[k + 1]);
        let (m0, m1) = (self.slopes[k] * h, self.slopes[k + 1] * h);
        let t2 = t * t;
        let t3 = t2 * t;
        y0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + m0 * (t3 - 2.0 * t2 + t)
            + y1 * (-2.0 * t3 + 3.0 * t2)
            + m1 * (t3 - t2)
    }

    pub fn grid_len(&self) -> usize {
        self.s.len()
    }

    pub fn grid_span(&self) -> (f64, f64) {
        (self.s[0], self.s[self.s.len() - 1])
    }
}

/// Fritsch-Carlson monotone slopes for strictly increasing data.
fn pchip_slopes(x: &[f64], y: &[f64]) -> Vec<f64> {
    let n = x.len();
    let h: Vec<f64> = (0..n - 1).map(|i| x[i + 1] - x[i]).collect();
    let d: Vec<f64> = (0..n - 1).map(|i| (y[i + 1] - y[i]) / h[i]).collect();
    let mut m = vec![0.0; n];

    m[0] = endpoint_slope(h[0], h[1], d[0], d[1]);
    m[n - 1] = endpoint_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    for i in 1..n - 1 {
        if d[i - 1] * d[i] <= 0.0 {
            m[i] = 0.0;
        } else {
            let w1 = 2.0 * h[i] + h[i - 1];
            let w2 = h[i] + 2.0 * h[i - 1];
            m[i] = (w1 + w2) / (w1 / d[i - 1] + w2 / d[i]);
        }
    }
    m
}

fn endpoint_slope(h0: f64, h1: f64, d0: f64, d1: f64) -> f64 {
    let m = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if m * d0 <= 0.0 {
        0.0
    } else if d0 * d1 < 0.0 && m.abs() > 3.0 * d0.abs() {
        3.0 * d0
    } else {
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Nine percentile/probability anchor pairs for the type-1 law.
    pub const ANCHORS: [(f64, f64); 9] = [
        (-3.90, 0.01),
        (-3.18, 0.05),
        (-2.78, 0.10),
        (-1.91, 0.30),
        (-1.27, 0.50),
        (-0.59, 0.70),
        (0.45, 0.90),
        (0.98, 0.95),
        (2.02, 0.99),
    ];

    #[test]
    fn anchors_within_half_percent() {
        let tw = Tw1Table::builtin();
        for (s, p) in ANCHORS {
            let c = tw.cdf(s).unwrap();
            assert!((c - p).abs() <= 0.005, "cdf({s}) = {c}, expected ~{p}");
        }
    }

    #[test]
    fn deep_tails() {
        let tw = Tw1Table::builtin();
        assert!(tw.cdf(-10.0).unwrap() < 1e-4);
        assert!(tw.pvalue(10.0).unwrap() < 1e-4);
        assert!(tw.cdf(-25.0).unwrap() >= TAIL_CLAMP);
        assert!(tw.cdf(25.0).unwrap() <= 1.0 - TAIL_CLAMP);
    }

    #[test]
    fn quantile_examples() {
        let tw = Tw1Table::builtin();
        let q95 = tw.quantile(0.95).unwrap();
        assert!((q95 - 0.98).abs() <= 0.01, "{q95}");
        let q50 = tw.quantile(0.50).unwrap();
        assert!((q50 + 1.27).abs() <= 0.01, "{q50}");
    }

    #[test]
    fn round_trips() {
        let tw = Tw1Table::builtin();
        let mut p = 0.01;
        while p < 0.995 {
            let back = tw.cdf(tw.quantile(p).unwrap()).unwrap();
            assert!((back - p).abs() <= 1e-3, "p={p} back={back}");
            p += 0.01;
        }
        let back = tw.cdf(tw.quantile(0.37).unwrap()).unwrap();
        assert!((back - 0.37).abs() <= 1e-3);
    }

    #[test]
    fn monotone_on_scan() {
        let tw = Tw1Table::builtin();
        let mut prev = -1.0;
        let mut s = -8.0;
        while s <= 5.0 {
            let c = tw.cdf(s).unwrap();
            assert!(c > prev, "cdf not strictly increasing at {s}");
            prev = c;
            s += 0.05;
        }
    }

    #[test]
    fn pvalue_anchor() {
        let tw = Tw1Table::builtin();
        assert!((tw.pvalue(0.98).unwrap() - 0.05).abs() <= 0.005);
        assert!((tw.pvalue(2.02).unwrap() - 0.01).abs() <= 0.005);
    }

    #[test]
    fn rejects_bad_inputs() {
        let tw = Tw1Table::builtin();
        assert!(tw.cdf(f64::NAN).is_err());
        assert!(tw.quantile(0.0).is_err());
        assert!(tw.quantile(1.0).is_err());
        assert!(tw.quantile(-0.2).is_err());
    }

    #[test]
    fn rejects_malformed_tables() {
        assert!(Tw1Table::from_columns(vec![0.0, 1.0], vec![0.1, 0.2]).is_err());
        assert!(Tw1Table::from_columns(
            vec![0.0, 1.0, 1.0, 2.0],
            vec![0.1, 0.2, 0.3, 0.4]
        )
        .is_err());
        assert!(Tw1Table::from_columns(
            vec![0.0, 1.0, 2.0, 3.0],
            vec![0.1, 0.3, 0.2, 0.4]
        )
        .is_err());
        assert!(Tw1Table::from_columns(
            vec![0.0, 1.0, 2.0, 3.0],
            vec![0.0, 0.2, 0.3, 0.4]
        )
        .is_err());
    }

    #[test]
    fn embedded_table_matches_generator() {
        // regenerate a sparse slice and compare against the embedded values
        let regen = painleve::tw1_cdf_grid(-5.0, 0.5, 20); // [-5, 4.5]
        for (i, v) in regen.iter().enumerate() {
            let s = -5.0 + 0.5 * i as f64;
            let k = ((s - table_data::TW1_S_MIN) / table_data::TW1_S_STEP).round() as usize;
            let emb = table_data::TW1_CDF[k];
            assert!((v - emb).abs() < 1e-9, "s={s}: {v} vs {emb}");
        }
    }
}
