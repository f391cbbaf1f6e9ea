//! Seeded, reproducible sampling of evaluation points and parameters.
//!
//! The generator is SplitMix64: a 64-bit state advanced by the constant
//! `0x9E3779B97F4A7C15` and scrambled by two xor-shift-multiply rounds.
//! Uniform doubles take the top 53 bits: `(x >> 11) · 2⁻⁵³`. Reports
//! record every sampled point, so other implementations can compare
//! results without reproducing the generator.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::YTuple;
use crate::numeric::TauParam;

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }
}

/// Axis-aligned rectangle `[re_lo, re_hi) × [im_lo, im_hi)` in ℂ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rect {
    pub re: (f64, f64),
    pub im: (f64, f64),
}

impl Rect {
    pub const fn new(re: (f64, f64), im: (f64, f64)) -> Self {
        Self { re, im }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub count: usize,
    pub seed: u64,
    pub z_box: Rect,
    pub tau_box: Rect,
    pub y_scale: f64,
}

impl Default for SamplePlan {
    fn default() -> Self {
        Self {
            count: 10,
            seed: 1,
            z_box: Rect::new((0.0, std::f64::consts::PI), (-0.3, 0.3)),
            tau_box: Rect::new((-0.5, 0.5), (0.8, 2.0)),
            y_scale: 0.5,
        }
    }
}

impl SamplePlan {
    pub fn with_count(self, count: usize) -> Self {
        Self { count, ..self }
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Self { seed, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if self.count == 0 {
            return Err(Error::InvalidPlan("sample count must be positive".into()));
        }
        if !(self.tau_box.im.0 >= 0.5 && self.tau_box.im.1 >= self.tau_box.im.0) {
            return Err(Error::InvalidPlan(format!(
                "tau box must satisfy 0.5 <= Im lo <= Im hi, got {:?}",
                self.tau_box.im
            )));
        }
        if !(self.y_scale.is_finite() && self.y_scale >= 0.0) {
            return Err(Error::InvalidPlan("y_scale must be finite and nonnegative".into()));
        }
        Ok(())
    }

    pub fn sampler(&self) -> Sampler {
        Sampler { rng: SplitMix64::new(self.seed), plan: *self }
    }

    /// A sampler on an independent stream, e.g. one per sweep draw.
    pub fn sampler_for(&self, stream: u64) -> Sampler {
        let mut mix = SplitMix64::new(self.seed ^ stream.wrapping_mul(0xD134_2543_DE82_EF95));
        Sampler { rng: SplitMix64::new(mix.next_u64()), plan: *self }
    }
}

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: SplitMix64,
    plan: SamplePlan,
}

impl Sampler {
    pub fn point_in(&mut self, rect: Rect) -> Complex64 {
        let re = self.rng.uniform(rect.re.0, rect.re.1);
        let im = self.rng.uniform(rect.im.0, rect.im.1);
        Complex64::new(re, im)
    }

    pub fn z(&mut self) -> Complex64 {
        self.point_in(self.plan.z_box)
    }

    pub fn zs(&mut self) -> Vec<Complex64> {
        (0..self.plan.count).map(|_| self.z()).collect()
    }

    pub fn tau(&mut self) -> TauParam {
        let t = self.point_in(self.plan.tau_box);
        TauParam::new(t).expect("tau box lies in the upper half-plane")
    }

    /// A complex number with both parts uniform in `[-y_scale, y_scale)`.
    pub fn y(&mut self) -> Complex64 {
        let s = self.plan.y_scale;
        self.point_in(Rect::new((-s, s), (-s, s)))
    }

    /// n-1 free draws, the last component set to minus their sum.
    pub fn ytuple(&mut self, n: usize) -> YTuple {
        let free = (1..n).map(|_| self.y()).collect();
        YTuple::from_free(free).expect("negated sum satisfies the constraint")
    }
}
