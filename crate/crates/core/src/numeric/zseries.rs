//! Finite Fourier series in `w = e^{iz}`.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_complex::Complex64;

/// `Σ_b c_b · e^{ibz}` over finitely many integer exponents `b`.
///
/// Exponents are keyed in base `e^{iz}` so that the odd modes of θ₁/θ₂ and
/// the even modes of θ₃/θ₄ live in one series. Only coefficients that are
/// exactly zero are dropped; there is no epsilon pruning.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ZSeries {
    coeffs: BTreeMap<i64, Complex64>,
}

impl ZSeries {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The constant series `c·e^{0}`.
    pub fn constant(c: Complex64) -> Self {
        Self::from_terms([(0, c)])
    }

    /// Builds a series from `(exponent, coefficient)` pairs; repeated
    /// exponents are accumulated.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Complex64)>,
    {
        let mut coeffs = BTreeMap::new();
        for (b, c) in terms {
            *coeffs.entry(b).or_insert(Complex64::new(0.0, 0.0)) += c;
        }
        let mut s = Self { coeffs };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        self.coeffs.retain(|_, c| c.re != 0.0 || c.im != 0.0);
    }

    /// Coefficient of `e^{ibz}`, zero when absent.
    pub fn coeff(&self, b: i64) -> Complex64 {
        self.coeffs.get(&b).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.coeffs.iter().map(|(&b, &c)| (b, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_coeff_norm(&self) -> f64 {
        self.coeffs.values().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let i = Complex64::new(0.0, 1.0);
        self.coeffs.iter().map(|(&b, &c)| c * (i * z * b as f64).exp()).sum()
    }

    /// Multiplies every coefficient by `c` and shifts every exponent by
    /// `exp_shift`, i.e. the series of `c·e^{i·exp_shift·z}·X(z)`.
    pub fn scaled(&self, c: Complex64, exp_shift: i64) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(&b, &v)| (b + exp_shift, v * c)))
    }

    pub fn mul(&self, other: &ZSeries) -> ZSeries {
        let mut out: BTreeMap<i64, Complex64> = BTreeMap::new();
        for (&b1, &c1) in &self.coeffs {
            for (&b2, &c2) in &other.coeffs {
                *out.entry(b1 + b2).or_default() += c1 * c2;
            }
        }
        let mut s = ZSeries { coeffs: out };
        s.normalize();
        s
    }

    pub fn add(&self, other: &ZSeries) -> ZSeries {
        Self::from_terms(self.iter().chain(other.iter()))
    }
}

impl Add for &ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: &ZSeries) -> ZSeries {
        ZSeries::add(self, rhs)
    }
}

impl Mul for &ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: &ZSeries) -> ZSeries {
        ZSeries::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn one_is_multiplicative_identity() {
        let x = ZSeries::from_terms([(-3, c(1.0, 2.0)), (1, c(0.5, 0.0)), (4, c(0.0, -1.0))]);
        let one = ZSeries::constant(c(1.0, 0.0));
        assert_eq!(&one * &x, x);
    }

    #[test]
    fn scaling_shifts_exponents() {
        let x = ZSeries::from_terms([(-2, c(1.0, 0.0)), (2, c(3.0, 1.0))]);
        let y = x.scaled(c(1.0, 0.0), 5);
        assert_eq!(y.coeff(3), c(1.0, 0.0));
        assert_eq!(y.coeff(7), c(3.0, 1.0));
        assert_eq!(y.len(), 2);
    }

    #[test]
    fn hand_convolution() {
        let (a, b, cc) = (c(0.3, 0.1), c(1.0, -0.2), c(0.7, 0.4));
        let x = ZSeries::from_terms([(-2, a), (0, b), (2, cc)]);
        let sq = &x * &x;
        assert_eq!(sq.coeff(-2), a * b * 2.0);
        assert_eq!(sq.coeff(-4), a * a);
        assert_eq!(sq.coeff(0), b * b + a * cc * 2.0);
    }

    #[test]
    fn exact_cancellation_drops_the_mode() {
        let x = ZSeries::from_terms([(1, c(1.0, 0.0)), (2, c(2.0, 0.0))]);
        let y = ZSeries::from_terms([(1, c(-1.0, 0.0))]);
        let s = &x + &y;
        assert_eq!(s.len(), 1);
        assert_eq!(s.coeff(1), c(0.0, 0.0));
        assert!(ZSeries::from_terms([(0, c(0.0, 0.0))]).is_empty());
    }
}
