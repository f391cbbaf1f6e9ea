//! The four Jacobi theta functions
//!
//! ```text
//! θ₁(z|τ) = -i q^{1/8} Σ (-1)ⁿ q^{n(n+1)/2} e^{(2n+1)iz}
//! θ₂(z|τ) =    q^{1/8} Σ       q^{n(n+1)/2} e^{(2n+1)iz}
//! θ₃(z|τ) =            Σ       q^{n²/2}     e^{2niz}
//! θ₄(z|τ) =            Σ (-1)ⁿ q^{n²/2}     e^{2niz}
//! ```
//!
//! Internally every summand is written as `q^{ν²/2} e^{2iνz}` with ν an
//! integer (θ₃, θ₄) or a half-integer (θ₁, θ₂), since
//! `q^{1/8} q^{n(n+1)/2} = q^{(n+1/2)²/2}`. Truncation keeps
//! `|ν| ≤ n_max` (resp. `n_max + 1/2`), so θ₁/θ₂ use `n ∈ [-n_max-1, n_max]`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::nome::{q_pow_phase, TauParam};
use super::zseries::ZSeries;
use crate::error::{Error, Result};
use crate::tail::GaussTail;

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ThetaKind {
    One,
    Two,
    Three,
    Four,
}

impl ThetaKind {
    pub const ALL: [ThetaKind; 4] = [ThetaKind::One, ThetaKind::Two, ThetaKind::Three, ThetaKind::Four];

    pub fn index(self) -> u8 {
        match self {
            ThetaKind::One => 1,
            ThetaKind::Two => 2,
            ThetaKind::Three => 3,
            ThetaKind::Four => 4,
        }
    }

    pub fn from_index(k: u8) -> Option<Self> {
        match k {
            1 => Some(ThetaKind::One),
            2 => Some(ThetaKind::Two),
            3 => Some(ThetaKind::Three),
            4 => Some(ThetaKind::Four),
            _ => None,
        }
    }

    fn half_integral(self) -> bool {
        matches!(self, ThetaKind::One | ThetaKind::Two)
    }

    /// `(2ν, coefficient)` for every retained summand, ordered outward in |ν|.
    fn terms(self, n_max: u32) -> impl Iterator<Item = (i64, Complex64)> {
        let one = Complex64::new(1.0, 0.0);
        let sign = |n: i64| if n.rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let indices: Vec<i64> = if self.half_integral() {
            (0..=n_max as i64).flat_map(|n| [n, -n - 1]).collect()
        } else {
            std::iter::once(0)
                .chain((1..=n_max as i64).flat_map(|n| [n, -n]))
                .collect()
        };
        indices.into_iter().map(move |n| match self {
            ThetaKind::One => (2 * n + 1, -I * sign(n)),
            ThetaKind::Two => (2 * n + 1, one),
            ThetaKind::Three => (2 * n, one),
            ThetaKind::Four => (2 * n, one * sign(n)),
        })
    }
}

impl fmt::Display for ThetaKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta{}", self.index())
    }
}

impl FromStr for ThetaKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let digit = s.trim_start_matches("theta");
        digit
            .parse::<u8>()
            .ok()
            .and_then(ThetaKind::from_index)
            .ok_or_else(|| format!("unknown theta kind {s:?}, expected 1..4"))
    }
}

/// Summation cutoff: indices with `|n| ≤ n_max` are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncationSpec {
    pub n_max: u32,
}

impl TruncationSpec {
    pub const fn new(n_max: u32) -> Self {
        Self { n_max }
    }
}

impl Default for TruncationSpec {
    fn default() -> Self {
        Self { n_max: 24 }
    }
}

fn ensure_finite(z: Complex64, what: &'static str) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Truncated θ_k(z|τ).
pub fn theta(kind: ThetaKind, z: Complex64, tau: TauParam, trunc: TruncationSpec) -> Result<Complex64> {
    ensure_finite(z, "z")?;
    let t = tau.value();
    let mut acc = Complex64::new(0.0, 0.0);
    for (two_nu, coef) in kind.terms(trunc.n_max) {
        let nu2 = (two_nu * two_nu) as f64 / 8.0;
        acc += coef * q_pow_phase(t, nu2, I * z * two_nu as f64);
    }
    Ok(acc)
}

/// Certified bound on `|θ_k(z|τ) - theta(kind, z, τ, trunc)|`.
///
/// Omitted summands are dominated by `|q|^{ν²/2} e^{2|ν||Im z|}`. When the
/// successive ratio at the first omitted index is at most 1/2 the tail is
/// at most four times that first term; otherwise the result is `+∞`.
pub fn theta_tail_bound(kind: ThetaKind, z: Complex64, tau: TauParam, trunc: TruncationSpec) -> f64 {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return f64::INFINITY;
    }
    let first = trunc.n_max as f64 + if kind.half_integral() { 1.5 } else { 1.0 };
    GaussTail::new(tau.value().im, 1.0, z.im.abs()).one_sided_from(first) * 2.0
}

/// θ_k(scale·z + shift | τ_inner) as an explicit Fourier series in z.
pub fn theta_zseries(
    kind: ThetaKind,
    shift: Complex64,
    scale: u32,
    tau_inner: TauParam,
    trunc: TruncationSpec,
) -> Result<ZSeries> {
    ensure_finite(shift, "shift")?;
    assert!(scale > 0, "scale must be positive");
    let t = tau_inner.value();
    Ok(ZSeries::from_terms(kind.terms(trunc.n_max).map(|(two_nu, coef)| {
        let nu2 = (two_nu * two_nu) as f64 / 8.0;
        (two_nu * scale as i64, coef * q_pow_phase(t, nu2, I * shift * two_nu as f64))
    })))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::nome::{nome, q_pow};
    use num_rational::Rational64;

    fn tau(re: f64, im: f64) -> TauParam {
        TauParam::from_parts(re, im).unwrap()
    }

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const T: TruncationSpec = TruncationSpec::new(24);

    #[test]
    fn theta1_vanishes_at_origin() {
        for t in [tau(0.0, 1.0), tau(0.3, 0.8), tau(-0.45, 1.7)] {
            assert!(theta(ThetaKind::One, c(0.0, 0.0), t, T).unwrap().norm() < 1e-16);
        }
    }

    #[test]
    fn theta3_at_origin_tau_i() {
        // Σ_{|n|≤10} exp(-πn²)
        let brute: f64 = (-10i32..=10).map(|n| (-std::f64::consts::PI * (n * n) as f64).exp()).sum();
        let v = theta(ThetaKind::Three, c(0.0, 0.0), tau(0.0, 1.0), T).unwrap();
        assert!((v.re - brute).abs() < 1e-15);
        assert!((v.re - 1.086_434_811_213_308).abs() < 1e-14);
        assert!(v.im.abs() < 1e-16);
    }

    #[test]
    fn theta3_is_pi_periodic() {
        let (z, t) = (c(0.3, 0.1), tau(0.2, 0.9));
        let a = theta(ThetaKind::Three, z, t, T).unwrap();
        let b = theta(ThetaKind::Three, z + std::f64::consts::PI, t, T).unwrap();
        assert!((a - b).norm() / a.norm() < 1e-13);
    }

    #[test]
    fn rejects_non_finite_z() {
        assert!(theta(ThetaKind::Two, c(f64::NAN, 0.0), tau(0.0, 1.0), T).is_err());
    }

    #[test]
    fn tail_bound_examples() {
        let b = theta_tail_bound(ThetaKind::Three, c(0.0, 0.0), tau(0.0, 1.0), TruncationSpec::new(10));
        assert!(b <= 4.0 * (-std::f64::consts::PI * 121.0).exp() * (1.0 + 1e-12));
        assert!(b < 1e-164);
        assert!(theta_tail_bound(ThetaKind::Three, c(0.0, 50.0), tau(0.0, 1.0), TruncationSpec::new(1)).is_infinite());
        let high = theta_tail_bound(ThetaKind::Three, c(0.2, 0.3), tau(0.0, 60.0), TruncationSpec::new(1));
        assert!(high < 1e-300);
    }

    #[test]
    fn zseries_read_off() {
        let t = tau(0.1, 1.2);
        let s = theta_zseries(ThetaKind::Three, c(0.0, 0.0), 1, t, TruncationSpec::new(1)).unwrap();
        let h = q_pow(t, Rational64::new(1, 2));
        assert_eq!(s.len(), 3);
        assert!((s.coeff(-2) - h).norm() < 1e-16);
        assert!((s.coeff(2) - h).norm() < 1e-16);
        assert_eq!(s.coeff(0), c(1.0, 0.0));

        let s2 = theta_zseries(ThetaKind::Two, c(0.0, 0.0), 2, t, TruncationSpec::new(0)).unwrap();
        let e = q_pow(t, Rational64::new(1, 8));
        assert_eq!(s2.len(), 2);
        assert!((s2.coeff(-2) - e).norm() < 1e-16);
        assert!((s2.coeff(2) - e).norm() < 1e-16);
    }

    #[test]
    fn zseries_matches_pointwise() {
        let t = tau(-0.3, 0.85);
        let z0 = c(0.2, 0.1);
        let shift = c(0.4, -0.2);
        for kind in ThetaKind::ALL {
            for scale in [1u32, 2, 3] {
                let s = theta_zseries(kind, shift, scale, t, T).unwrap();
                let direct = theta(kind, z0 * scale as f64 + shift, t, T).unwrap();
                let via = s.eval(z0);
                assert!((via - direct).norm() <= 1e-13 * direct.norm(), "{kind} scale {scale}");
            }
        }
    }

    #[test]
    fn theta2_leading_term() {
        // θ₂(z|τ) ≈ 2 q^{1/8} cos z for small q
        let t = tau(0.0, 6.0);
        let z = c(0.3, 0.0);
        let v = theta(ThetaKind::Two, z, t, T).unwrap();
        let lead = q_pow(t, Rational64::new(1, 8)) * 2.0 * z.cos();
        assert!((v - lead).norm() / lead.norm() < 1e-12);
        assert!(nome(t).norm() < 1e-16);
    }
}
