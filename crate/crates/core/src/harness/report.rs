//! Verification reports and their JSON encoding.
//!
//! Complex numbers are written as `[re, im]` pairs. Non-finite floats (an
//! infinite tail bound, for instance) become `null`.

use num_complex::Complex64;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::fourier::FourierRow;
use super::IdentityId;

/// Floor of the relative-error denominator `max(|lhs|, |rhs|, ·)`.
pub const REL_ERR_FLOOR: f64 = 1e-30;

pub(crate) fn ser_complex<S: Serializer>(c: &Complex64, s: S) -> Result<S::Ok, S::Error> {
    [c.re, c.im].serialize(s)
}

fn ser_complex_vec<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for c in v {
        seq.serialize_element(&[c.re, c.im])?;
    }
    seq.end()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Params {
    pub m: u32,
    pub n: usize,
    #[serde(serialize_with = "ser_complex")]
    pub tau: Complex64,
    #[serde(serialize_with = "ser_complex_vec")]
    pub ys: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Truncation {
    pub n_max: u32,
    pub r_max: u32,
    pub theta_tail: f64,
    pub lattice_tail: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleRecord {
    #[serde(serialize_with = "ser_complex")]
    pub z: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub lhs: Complex64,
    #[serde(serialize_with = "ser_complex")]
    pub rhs: Complex64,
    pub abs_err: f64,
    pub rel_err: f64,
}

impl SampleRecord {
    pub fn compare(z: Complex64, lhs: Complex64, rhs: Complex64) -> Self {
        let abs_err = (lhs - rhs).norm();
        let denom = lhs.norm().max(rhs.norm()).max(REL_ERR_FLOOR);
        Self { z, lhs, rhs, abs_err, rel_err: abs_err / denom }
    }

    fn denom(&self) -> f64 {
        self.lhs.norm().max(self.rhs.norm()).max(REL_ERR_FLOOR)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub params: Params,
    pub truncation: Truncation,
    pub samples: Vec<SampleRecord>,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub verdict: Verdict,
    pub fourier: Option<Vec<FourierRow>>,
    /// Largest certified truncation error relative to the sample scale.
    #[serde(skip)]
    pub tail_allowance: f64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Collects sample comparisons and truncation data, then settles the verdict.
///
/// Verdict rules: inconclusive when the certified tails alone exceed the
/// tolerance; otherwise pass iff every sample's relative error is within
/// `tolerance + tail allowance` and, if present, every Fourier mode differs
/// by at most `tolerance · max(1, largest coefficient)`.
#[derive(Debug, Clone)]
pub(crate) struct ReportBuilder {
    identity: IdentityId,
    params: Params,
    tolerance: f64,
    n_max: u32,
    r_max: u32,
    theta_tail: f64,
    lattice_tail: f64,
    samples: Vec<SampleRecord>,
    tail_allowance: f64,
    fourier: Option<Vec<FourierRow>>,
}

impl ReportBuilder {
    pub(crate) fn new(identity: IdentityId, params: Params, tolerance: f64) -> Self {
        Self {
            identity,
            params,
            tolerance,
            n_max: 0,
            r_max: 0,
            theta_tail: 0.0,
            lattice_tail: 0.0,
            samples: Vec::new(),
            tail_allowance: 0.0,
            fourier: None,
        }
    }

    pub(crate) fn n_max(&mut self, n_max: u32) -> &mut Self {
        self.n_max = self.n_max.max(n_max);
        self
    }

    pub(crate) fn r_max(&mut self, r_max: u32) -> &mut Self {
        self.r_max = self.r_max.max(r_max);
        self
    }

    pub(crate) fn theta_tail(&mut self, t: f64) -> &mut Self {
        self.theta_tail = self.theta_tail.max(t);
        self
    }

    pub(crate) fn lattice_tail(&mut self, t: f64) -> &mut Self {
        self.lattice_tail = self.lattice_tail.max(t);
        self
    }

    /// Records a comparison whose two sides carry absolute truncation
    /// errors of at most `abs_tail` combined.
    pub(crate) fn sample(&mut self, record: SampleRecord, abs_tail: f64) -> &mut Self {
        let rel_tail = abs_tail / record.denom();
        self.sample_rel(record, rel_tail)
    }

    /// As [`Self::sample`], with the truncation error already normalized.
    pub(crate) fn sample_rel(&mut self, record: SampleRecord, rel_tail: f64) -> &mut Self {
        if !(rel_tail <= self.tail_allowance) {
            self.tail_allowance = if rel_tail.is_nan() { f64::INFINITY } else { rel_tail };
        }
        self.samples.push(record);
        self
    }

    pub(crate) fn fourier(&mut self, rows: Vec<FourierRow>) -> &mut Self {
        self.fourier = Some(rows);
        self
    }

    pub(crate) fn finish(self) -> VerificationReport {
        let max_rel_err = self
            .samples
            .iter()
            .map(|s| s.rel_err)
            .fold(0.0, |a: f64, b| if b.is_nan() { f64::NAN } else { a.max(b) });
        let fourier_ok = self
            .fourier
            .as_ref()
            .map_or(true, |rows| super::fourier::modes_agree(rows, self.tolerance));
        let verdict = if !(self.tail_allowance <= self.tolerance) {
            Verdict::Inconclusive
        } else if max_rel_err <= self.tolerance + self.tail_allowance && fourier_ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        VerificationReport {
            identity: self.identity,
            params: self.params,
            truncation: Truncation {
                n_max: self.n_max,
                r_max: self.r_max,
                theta_tail: self.theta_tail,
                lattice_tail: self.lattice_tail,
            },
            samples: self.samples,
            max_rel_err,
            tolerance: self.tolerance,
            verdict,
            fourier: self.fourier,
            tail_allowance: self.tail_allowance,
        }
    }
}

/// `Π(|v|+t) - Π|v|`: worst-case error of a product of truncated factors.
pub(crate) fn product_tail(factors: &[(Complex64, f64)]) -> f64 {
    if factors.iter().any(|(_, t)| !t.is_finite()) {
        return f64::INFINITY;
    }
    let exact: f64 = factors.iter().map(|(v, _)| v.norm()).product();
    if exact > 0.0 {
        // expm1/ln_1p keep tails far below one ulp of the product
        let log_growth: f64 = factors.iter().map(|(v, t)| (t / v.norm()).ln_1p()).sum();
        return exact * log_growth.exp_m1();
    }
    let inflated: f64 = factors.iter().map(|(v, t)| v.norm() + t).product();
    (inflated - exact).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params() -> Params {
        Params { m: 1, n: 1, tau: Complex64::new(0.0, 1.0), ys: vec![Complex64::new(0.0, 0.0)] }
    }

    #[test]
    fn verdict_rules() {
        let one = Complex64::new(1.0, 0.0);
        let mut b = ReportBuilder::new(IdentityId::Circular, params(), 1e-9);
        b.sample(SampleRecord::compare(one, one, one * (1.0 + 1e-12)), 0.0);
        assert_eq!(b.finish().verdict, Verdict::Pass);

        let mut b = ReportBuilder::new(IdentityId::Circular, params(), 1e-9);
        b.sample(SampleRecord::compare(one, one, one * 1.1), 0.0);
        assert_eq!(b.finish().verdict, Verdict::Fail);

        let mut b = ReportBuilder::new(IdentityId::Circular, params(), 1e-9);
        b.sample(SampleRecord::compare(one, one, one), 1e-3);
        assert_eq!(b.finish().verdict, Verdict::Inconclusive);

        let mut b = ReportBuilder::new(IdentityId::Circular, params(), 1e-9);
        b.sample(SampleRecord::compare(one, one, one), f64::INFINITY);
        assert_eq!(b.finish().verdict, Verdict::Inconclusive);
    }

    #[test]
    fn relative_error_floor() {
        let zero = Complex64::new(0.0, 0.0);
        let r = SampleRecord::compare(zero, zero, zero);
        assert_eq!(r.rel_err, 0.0);
    }

    #[test]
    fn product_tail_is_first_order_in_t() {
        let f = [(Complex64::new(2.0, 0.0), 1e-10), (Complex64::new(0.0, 3.0), 0.0)];
        let t = product_tail(&f);
        assert!((t - 3e-10).abs() < 1e-22);
        let tiny = product_tail(&[(Complex64::new(2.0, 0.0), 1e-200), (Complex64::new(1.0, 0.0), 0.0)]);
        assert!((tiny - 1e-200).abs() < 1e-212);
    }

    #[test]
    fn json_layout() {
        let one = Complex64::new(1.0, -2.0);
        let mut b = ReportBuilder::new(IdentityId::Decomposition, params(), 1e-9);
        b.sample(SampleRecord::compare(one, one, one), f64::INFINITY);
        let v = serde_json::to_value(b.finish()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(
            keys,
            ["fourier", "identity", "max_rel_err", "params", "samples", "tolerance", "truncation", "verdict"]
        );
        assert_eq!(v["identity"], "DECOMPOSITION");
        assert_eq!(v["samples"][0]["lhs"], serde_json::json!([1.0, -2.0]));
        assert_eq!(v["verdict"], "inconclusive");
        assert!(v["fourier"].is_null());
    }
}
