//! Deterministic random number streams for the Monte-Carlo harness.
//!
//! Every replication draws from its own stream derived from
//! `(master seed, stream index)`:
//!
//! ```text
//! state0 = master_seed XOR (index + 1) * 0x9E3779B97F4A7C15
//! xoshiro256++ state  = four successive SplitMix64 outputs of state0
//! ```
//!
//! SplitMix64 is a bijection of its seed, and multiplication by the odd
//! golden-ratio constant is a bijection of the index, so streams within one
//! run never collide. Results are therefore independent of worker count and
//! scheduling: a replication's draws depend only on `(seed, index)`.

/// SplitMix64 step (Steele, Lea, Flood 2014).
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}

/// xoshiro256++ (Blackman, Vigna 2019).
#[derive(Debug, Clone)]
pub struct RngStream {
    s: [u64; 4],
}

impl RngStream {
    /// Stream seeded directly from a single 64-bit value.
    pub fn from_seed(seed: u64) -> Self {
        let mut sm = SplitMix64::new(seed);
        let mut s = [sm.next_u64(), sm.next_u64(), sm.next_u64(), sm.next_u64()];
        if s == [0, 0, 0, 0] {
            s = [1, 0, 0, 0];
        }
        RngStream { s }
    }

    /// Stream `index` of the family identified by `master_seed`.
    pub fn for_index(master_seed: u64, index: u64) -> Self {
        let mixed =
            master_seed ^ index.wrapping_add(1).wrapping_mul(0x9E3779B97F4A7C15);
        Self::from_seed(mixed)
    }

    pub fn next_u64(&mut self) -> u64 {
        let result = self.s[0]
            .wrapping_add(self.s[3])
            .rotate_left(23)
            .wrapping_add(self.s[0]);
        let t = self.s[1] << 17;
        self.s[2] ^= self.s[0];
        self.s[3] ^= self.s[1];
        self.s[1] ^= self.s[2];
        self.s[0] ^= self.s[3];
        self.s[2] ^= t;
        self.s[3] = self.s[3].rotate_left(45);
        result
    }

    /// Uniform on the open interval (0, 1).
    pub fn uniform_open01(&mut self) -> f64 {
        ((self.next_u64() >> 11) as f64 + 0.5) * (1.0 / 9007199254740992.0)
    }

    /// Uniform on (lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform_open01()
    }

    /// Standard normal by the polar (Marsaglia) method.
    pub fn standard_normal(&mut self) -> f64 {
        loop {
            let v1 = 2.0 * self.uniform_open01() - 1.0;
            let v2 = 2.0 * self.uniform_open01() - 1.0;
            let s = v1 * v1 + v2 * v2;
            if s > 0.0 && s < 1.0 {
                return v1 * (-2.0 * s.ln() / s).sqrt();
            }
        }
    }

    /// Gamma(shape 4, scale 1/2) minus its mean 2: an Erlang sum of four
    /// exponentials, so mean 0 and variance 4 * (1/2)^2 = 1 exactly.
    pub fn standardized_gamma(&mut self) -> f64 {
        let prod = self.uniform_open01()
            * self.uniform_open01()
            * self.uniform_open01()
            * self.uniform_open01();
        -0.5 * prod.ln() - 2.0
    }

    /// Three-point law: ±√3 with probability 1/6 each, 0 with probability 2/3.
    pub fn discrete_three_point(&mut self) -> f64 {
        const SQRT3: f64 = 1.7320508075688772;
        let u = self.uniform_open01();
        if u < 1.0 / 6.0 {
            -SQRT3
        } else if u < 5.0 / 6.0 {
            0.0
        } else {
            SQRT3
        }
    }
}
