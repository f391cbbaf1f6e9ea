//! The modular parameter τ and powers of the nome q = e^{2πiτ}.
//!
//! Every power of q, integral or fractional, is formed as `exp(2πiτα)`.
//! Roots of the numeric value of q are never taken, so `q^{1/3}` or
//! `q^{-m²k²/2}` are single-valued and agree across the crate.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;

use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A point τ of the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TauParam {
    tau: Complex64,
}

impl TauParam {
    pub fn new(tau: Complex64) -> Result<Self> {
        if !(tau.re.is_finite() && tau.im.is_finite()) {
            return Err(Error::NonFinite("tau"));
        }
        if tau.im <= 0.0 {
            return Err(Error::NotUpperHalfPlane(tau.im));
        }
        Ok(Self { tau })
    }

    pub fn from_parts(re: f64, im: f64) -> Result<Self> {
        Self::new(Complex64::new(re, im))
    }

    pub fn value(&self) -> Complex64 {
        self.tau
    }

    /// `|q| = exp(-2π Im τ)`, always strictly below one.
    pub fn nome_abs(&self) -> f64 {
        (-2.0 * PI * self.tau.im).exp()
    }

    /// τ ↦ k·τ for a positive integer k (e.g. `m²n·τ`).
    pub fn scaled(&self, k: u64) -> Self {
        debug_assert!(k > 0);
        Self { tau: self.tau * k as f64 }
    }

    /// The Jacobi-transformed parameter `-1/(k·τ)`.
    pub fn inverted(&self, k: u64) -> Result<Self> {
        Self::new(-1.0 / (self.tau * k as f64))
    }
}

/// q = e^{2πiτ}.
pub fn nome(tau: TauParam) -> Complex64 {
    (2.0 * PI * I * tau.tau).exp()
}

/// q^α for an exact rational α, computed as `exp(2πiτα)`.
pub fn q_pow(tau: TauParam, alpha: Rational64) -> Complex64 {
    q_pow_complex(tau, Complex64::new(rational_to_f64(alpha), 0.0))
}

/// q^α for a complex exponent α, computed as `exp(2πiτα)`.
pub fn q_pow_complex(tau: TauParam, alpha: Complex64) -> Complex64 {
    (2.0 * PI * I * tau.tau * alpha).exp()
}

/// `q^α · e^{phase}` folded into a single exponential.
///
/// Lattice and theta summands pair a tiny power of q with a phase that can
/// be exponentially large when the shift has a big imaginary part; forming
/// the exponent first keeps the product representable.
#[inline]
pub(crate) fn q_pow_phase(tau: Complex64, alpha: f64, phase: Complex64) -> Complex64 {
    (2.0 * PI * I * tau * alpha + phase).exp()
}

pub(crate) fn rational_to_f64(r: Rational64) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn rejects_lower_half_plane() {
        assert!(TauParam::from_parts(0.3, 0.0).is_err());
        assert!(TauParam::from_parts(0.3, -1.0).is_err());
        assert!(TauParam::from_parts(f64::NAN, 1.0).is_err());
        assert!(TauParam::from_parts(0.0, f64::INFINITY).is_err());
    }

    #[test]
    fn nome_at_i() {
        let tau = TauParam::from_parts(0.0, 1.0).unwrap();
        let q = nome(tau);
        // exp(-2π)
        assert!((q.re - 1.867_442_731_707_989_3e-3).abs() < 1e-17);
        assert!(q.im.abs() < 1e-18);
        assert!((tau.nome_abs() - q.norm()).abs() < 1e-18);
    }

    #[test]
    fn nome_is_periodic_in_re_tau() {
        let a = nome(TauParam::from_parts(0.0, 1.0).unwrap());
        let b = nome(TauParam::from_parts(1.0, 1.0).unwrap());
        assert!(rel(b, a) < 1e-14);
    }

    #[test]
    fn nome_vanishes_high_up() {
        let q = nome(TauParam::from_parts(0.0, 200.0).unwrap());
        assert!(q.norm() < 1e-300);
    }

    #[test]
    fn fractional_powers() {
        let tau = TauParam::from_parts(0.0, 1.0).unwrap();
        let half = q_pow(tau, Rational64::new(1, 2));
        assert!((half.re - 4.321_391_826_377_226e-2).abs() < 1e-16);
        let minus_half = q_pow(tau, Rational64::new(-1, 2));
        assert!((minus_half.re - 23.140_692_632_779_27).abs() < 1e-12);
        assert_eq!(q_pow(tau, Rational64::new(0, 1)), Complex64::new(1.0, 0.0));
    }

    #[test]
    fn third_power_is_consistent_with_cubes() {
        let tau = TauParam::from_parts(0.37, 0.61).unwrap();
        let third = q_pow(tau, Rational64::new(1, 3));
        assert!(rel(third * third * third, nome(tau)) < 1e-14);
    }

    #[test]
    fn inversion_stays_in_upper_half_plane() {
        let tau = TauParam::from_parts(-0.4, 0.9).unwrap();
        let inv = tau.inverted(12).unwrap();
        assert!(inv.value().im > 0.0);
        assert!((inv.value() * tau.value() * 12.0 + 1.0).norm() < 1e-15);
    }
}
