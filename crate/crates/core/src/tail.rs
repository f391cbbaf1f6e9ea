//! Geometric tail estimates for one-dimensional Gaussian-type series.
//!
//! A dominating term sequence `t(r) = |q|^{c·(r-δ)²/2} · e^{2Y·r}` (r ≥ 0)
//! has successive ratio `|q|^{c·(2(r-δ)+1)/2} · e^{2Y}`, which decreases in
//! r. Once that ratio is at most 1/2, everything from `r` on is bounded by
//! twice the first term; counting both signs of the index doubles it again.

use std::f64::consts::PI;

#[derive(Debug, Clone, Copy)]
pub(crate) struct GaussTail {
    /// `ln |q|`, i.e. `-2π Im τ`. Kept in log form so nothing underflows early.
    log_q: f64,
    c: f64,
    growth: f64,
    offset: f64,
}

impl GaussTail {
    pub(crate) fn new(im_tau: f64, c: f64, growth: f64) -> Self {
        Self { log_q: -2.0 * PI * im_tau, c, growth: growth.abs(), offset: 0.0 }
    }

    pub(crate) fn with_offset(mut self, offset: f64) -> Self {
        self.offset = offset;
        self
    }

    fn log_term(&self, r: f64) -> f64 {
        let s = (r - self.offset).max(0.0);
        self.log_q * self.c * s * s / 2.0 + 2.0 * self.growth * r
    }

    pub(crate) fn term(&self, r: f64) -> f64 {
        self.log_term(r).exp()
    }

    pub(crate) fn ratio(&self, r: f64) -> f64 {
        let s = (r - self.offset).max(0.0);
        (self.log_q * self.c * (2.0 * s + 1.0) / 2.0 + 2.0 * self.growth).exp()
    }

    /// Bound on `Σ_{r ≥ first} t(r)`; infinite when the ratio test fails.
    pub(crate) fn one_sided_from(&self, first: f64) -> f64 {
        if self.ratio(first) <= 0.5 {
            2.0 * self.term(first)
        } else {
            f64::INFINITY
        }
    }

    /// Bound on `Σ_{|r| > radius} t(|r|)`.
    pub(crate) fn two_sided_beyond(&self, radius: u32) -> f64 {
        2.0 * self.one_sided_from(radius as f64 + 1.0)
    }

    /// Bound on the full sum `Σ_{r ∈ ℤ} t(|r|)`.
    pub(crate) fn full_sum(&self, radius: u32) -> f64 {
        let head: f64 = (-(radius as i64)..=radius as i64).map(|r| self.term(r.unsigned_abs() as f64)).sum();
        head + self.two_sided_beyond(radius)
    }
}
