//! Mode-by-mode comparison of two Fourier series in z.

use num_complex::Complex64;
use serde::Serialize;

use super::report::ser_complex;
use crate::numeric::ZSeries;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FourierRow {
    pub mode: i64,
    #[serde(serialize_with = "ser_complex")]
    pub lhs: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub rhs: Complex64,
    pub abs_diff: f64,
}

/// One row per exponent `|b| ≤ mode_window`; absent modes count as zero.
pub fn fourier_compare(lhs: &ZSeries, rhs: &ZSeries, mode_window: i64) -> Vec<FourierRow> {
    (-mode_window..=mode_window)
        .map(|mode| {
            let (l, r) = (lhs.coeff(mode), rhs.coeff(mode));
            FourierRow { mode, lhs: l, rhs: r, abs_diff: (l - r).norm() }
        })
        .collect()
}

/// Every `abs_diff ≤ tolerance · max(1, largest coefficient in the table)`.
pub fn modes_agree(rows: &[FourierRow], tolerance: f64) -> bool {
    let scale = rows
        .iter()
        .map(|r| r.lhs.norm().max(r.rhs.norm()))
        .fold(1.0, f64::max);
    rows.iter().all(|r| r.abs_diff <= tolerance * scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identical_inputs_have_zero_diffs() {
        let s = ZSeries::from_terms([(-2, Complex64::new(0.5, 0.1)), (0, Complex64::new(1.0, 0.0)), (4, Complex64::new(0.0, 3.0))]);
        let rows = fourier_compare(&s, &s, 5);
        assert_eq!(rows.len(), 11);
        assert!(rows.iter().all(|r| r.abs_diff == 0.0));
        assert!(modes_agree(&rows, 0.0));
    }

    #[test]
    fn missing_modes_are_zero() {
        let a = ZSeries::from_terms([(1, Complex64::new(2.0, 0.0))]);
        let rows = fourier_compare(&a, &ZSeries::zero(), 1);
        assert_eq!(rows[2].abs_diff, 2.0);
        assert_eq!(rows[0].lhs, Complex64::new(0.0, 0.0));
        assert!(!modes_agree(&rows, 0.1));
    }
}
