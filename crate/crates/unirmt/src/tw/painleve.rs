//! Offline generator for the embedded type-1 Tracy-Widom CDF table.
//!
//! F₁(s) = exp(−½ ∫ₛ^∞ [q(x) + (x−s)q(x)²] dx) where q is the
//! Hastings-McLeod solution of Painlevé II (q'' = sq + 2q³, q ~ Ai at +∞).
//! The ODE system (q, q', ∫q, ∫q², ∫(x−s)q²) is integrated downward from
//! s = 8 with fixed-step RK4; initial data come from the Airy asymptotic
//! expansion and the closed forms ∫ₛ^∞ Ai² = Ai'² − sAi² and
//! ∫ₛ^∞ (x−s)Ai² = (2s²Ai² − 2sAi'² − AiAi')/3.
//!
//! The embedded table in `table_data.rs` is this routine's frozen output on
//! the grid s = −10.00(0.01)6.00; regenerate it with the `regen_tw_table`
//! example. Cross-checks live in the test suite: the generator must agree
//! with widely published percentiles (e.g. the 95th at 0.9793).

const START: f64 = 8.0;
const STEP: f64 = 5.0e-4;

/// Airy Ai and Ai' for large positive s, by the asymptotic series.
fn airy_asymptotic(s: f64) -> (f64, f64) {
    let zeta = 2.0 / 3.0 * s.powf(1.5);
    let pref = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt());
    let mut u = 1.0; // u_k recurrence
    let mut sum_ai = 1.0;
    let mut sum_aip = 1.0;
    let mut sign = 1.0;
    for k in 1..=12 {
        let kf = k as f64;
        u *= (6.0 * kf - 5.0) * (6.0 * kf - 3.0) * (6.0 * kf - 1.0)
            / ((2.0 * kf - 1.0) * 216.0 * kf);
        let v = -(6.0 * kf + 1.0) / (6.0 * kf - 1.0) * u;
        sign = -sign;
        sum_ai += sign * u / zeta.powi(k);
        sum_aip += sign * v / zeta.powi(k);
    }
    let ai = pref / s.powf(0.25) * sum_ai;
    let aip = -pref * s.powf(0.25) * sum_aip;
    (ai, aip)
}

#[derive(Clone, Copy)]
struct State {
    q: f64,
    qp: f64,
    iq: f64,  // ∫_s^∞ q dx
    iq2: f64, // ∫_s^∞ q² dx
    j: f64,   // ∫_s^∞ (x−s) q² dx
}

/// Derivative with respect to s (integration runs downward, ds < 0).
fn deriv(s: f64, st: &State) -> State {
    State {
        q: st.qp,
        qp: s * st.q + 2.0 * st.q * st.q * st.q,
        iq: -st.q,
        iq2: -st.q * st.q,
        j: -st.iq2,
    }
}

fn rk4_step(s: f64, st: &State, h: f64) -> State {
    let add = |a: &State, b: &State, w: f64| State {
        q: a.q + w * b.q,
        qp: a.qp + w * b.qp,
        iq: a.iq + w * b.iq,
        iq2: a.iq2 + w * b.iq2,
        j: a.j + w * b.j,
    };
    let k1 = deriv(s, st);
    let k2 = deriv(s + 0.5 * h, &add(st, &k1, 0.5 * h));
    let k3 = deriv(s + 0.5 * h, &add(st, &k2, 0.5 * h));
    let k4 = deriv(s + h, &add(st, &k3, h));
    State {
        q: st.q + h / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q),
        qp: st.qp + h / 6.0 * (k1.qp + 2.0 * k2.qp + 2.0 * k3.qp + k4.qp),
        iq: st.iq + h / 6.0 * (k1.iq + 2.0 * k2.iq + 2.0 * k3.iq + k4.iq),
        iq2: st.iq2 + h / 6.0 * (k1.iq2 + 2.0 * k2.iq2 + 2.0 * k3.iq2 + k4.iq2),
        j: st.j + h / 6.0 * (k1.j + 2.0 * k2.j + 2.0 * k3.j + k4.j),
    }
}

fn initial_state() -> State {
    let s = START;
    let (ai, aip) = airy_asymptotic(s);
    // tail of ∫ Ai by quadrature of the asymptotic form on [START, 30]
    let iq = crate::quad::integrate(|x| airy_asymptotic(x).0, s, 30.0, 1e-16)
        .expect("airy tail integral");
    State {
        q: ai,
        qp: aip,
        iq,
        iq2: aip * aip - s * ai * ai,
        j: (2.0 * s * s * ai * ai - 2.0 * s * aip * aip - ai * aip) / 3.0,
    }
}

/// F₁ on the uniform grid `s_min + k*s_step`, k = 0..n_points.
/// `s_step` must be a positive multiple of the internal RK4 step.
pub fn tw1_cdf_grid(s_min: f64, s_step: f64, n_points: usize) -> Vec<f64> {
    assert!(n_points >= 1);
    let per_cell = (s_step / STEP).round() as usize;
    assert!(per_cell >= 1 && (s_step - per_cell as f64 * STEP).abs() < 1e-12);
    let s_max = s_min + s_step * (n_points - 1) as f64;
    assert!(s_max < START);
    let lead_ratio = (START - s_max) / STEP;
    assert!(
        (lead_ratio - lead_ratio.round()).abs() < 1e-6,
        "grid must align with the RK4 step"
    );

    let mut out = vec![0.0; n_points];
    let mut st = initial_state();
    // integer step counter keeps the abscissae drift-free
    let lead_steps = ((START - s_max) / STEP).round() as usize;
    let mut k = 0usize;
    let s_at = |k: usize| START - k as f64 * STEP;
    while k < lead_steps {
        st = rk4_step(s_at(k), &st, -STEP);
        k += 1;
    }
    let mut idx = n_points - 1;
    out[idx] = (-0.5 * (st.j + st.iq)).exp();
    while idx > 0 {
        for _ in 0..per_cell {
            st = rk4_step(s_at(k), &st, -STEP);
            k += 1;
        }
        idx -= 1;
        out[idx] = (-0.5 * (st.j + st.iq)).exp();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn airy_matches_reference() {
        // Ai(8) and Ai'(8) from mpmath (dps=30)
        let (ai, aip) = airy_asymptotic(8.0);
        assert!((ai - 4.6922076160992316e-8).abs() < 1e-18, "{ai:e}");
        assert!((aip + 1.3414392979067866e-7).abs() < 2e-18, "{aip:e}");
    }

    #[test]
    fn percentiles_match_published_values() {
        // F1 percentiles cited across the random-matrix literature,
        // evaluated off-grid by linear interpolation
        let grid = tw1_cdf_grid(-4.0, 0.01, 800); // covers [-4, 3.99]
        let at = |s: f64| {
            let t = (s + 4.0) / 0.01;
            let k = t.floor() as usize;
            let frac = t - k as f64;
            grid[k] * (1.0 - frac) + grid[k + 1] * frac
        };
        assert!((at(0.9793) - 0.95).abs() < 2e-4, "{}", at(0.9793));
        assert!((at(2.0234) - 0.99).abs() < 2e-4, "{}", at(2.0234));
        assert!((at(-1.2686) - 0.50).abs() < 2e-4, "{}", at(-1.2686));
        assert!((at(-3.1824) - 0.05).abs() < 2e-4, "{}", at(-3.1824));
    }

    #[test]
    fn tail_integral_identities_hold_numerically() {
        // the closed forms used for the initial state, checked by quadrature
        let s = 8.0;
        let iq2 = crate::quad::integrate(|x| airy_asymptotic(x).0.powi(2), s, 30.0, 1e-18)
            .unwrap();
        let (ai, aip) = airy_asymptotic(s);
        assert!((iq2 - (aip * aip - s * ai * ai)).abs() < 1e-18);
        let j = crate::quad::integrate(
            |x| (x - s) * airy_asymptotic(x).0.powi(2),
            s,
            30.0,
            1e-18,
        )
        .unwrap();
        let closed = (2.0 * s * s * ai * ai - 2.0 * s * aip * aip - ai * aip) / 3.0;
        assert!((j - closed).abs() < 1e-18);
    }
}
