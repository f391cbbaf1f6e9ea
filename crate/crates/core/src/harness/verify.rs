//! One verifier per identity. Each assembles both sides from the numeric
//! modules, records every comparison and the certified truncation errors,
//! and returns a [`VerificationReport`].

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Rational64;

use super::fourier::fourier_compare;
use super::report::{product_tail, Params, ReportBuilder, SampleRecord, VerificationReport};
use super::sample::SamplePlan;
use super::IdentityId;
use crate::cubic::{self, cubic_tail_bound, omega, CubicArgs, CubicKind};
use crate::error::Result;
use crate::lattice::{
    f_mn_series, f_mn_via_g, f_mn_via_g_tail_bound, g_mn, lattice_tail_bound, minimal_radius, LatticeForm,
    LatticeRadius, WindingOrder, YTuple,
};
use crate::numeric::{
    nome, q_pow, q_pow_complex, q_pow_phase, theta, theta_tail_bound, theta_zseries, TauParam, ThetaKind,
    TruncationSpec, ZSeries,
};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Lattice radii are never grown past this, whatever the budget allows.
const RADIUS_CAP: u32 = 400;

/// Everything a verifier needs besides the identity's own parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub plan: SamplePlan,
    pub trunc: TruncationSpec,
    /// Lower bound on the lattice radius. Sums at a Jacobi-transformed
    /// parameter are widened until their certified tail is negligible.
    pub rad: LatticeRadius,
    pub tolerance: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            plan: SamplePlan::default(),
            trunc: TruncationSpec::default(),
            rad: LatticeRadius::default(),
            tolerance: 1e-9,
        }
    }
}

impl VerifyConfig {
    pub fn with_tolerance(self, tolerance: f64) -> Self {
        Self { tolerance, ..self }
    }

    pub fn with_plan(self, plan: SamplePlan) -> Self {
        Self { plan, ..self }
    }

    /// Absolute tail target for sums of size `scale`.
    fn tail_target(&self, scale: f64) -> f64 {
        1e-3 * self.tolerance * scale.max(1.0)
    }

    /// Smallest radius ≥ `self.rad` meeting `target` under `bound` and the
    /// work budget for an `n`-fold sum; `self.rad` when none does.
    fn radius_for(&self, n: usize, target: f64, bound: impl Fn(LatticeRadius) -> f64) -> LatticeRadius {
        let budget = self.rad.work_budget as f64;
        let mut cap = RADIUS_CAP;
        if n > 1 {
            let side = (budget / n as f64).powf(1.0 / (n - 1) as f64);
            cap = cap.min(((side - 1.0) / 2.0).floor().max(0.0) as u32);
        }
        minimal_radius(self.rad, cap.max(self.rad.r_max), target, bound).unwrap_or(self.rad)
    }
}

fn params(m: u32, ys: &[Complex64], tau: TauParam) -> Params {
    Params { m, n: ys.len(), tau: tau.value(), ys: ys.to_vec() }
}

fn m2n(m: WindingOrder, n: usize) -> u64 {
    (m.get() as u64).pow(2) * n as u64
}

/// `(-iτ)^{(1-n)/2}` on the principal branch; `Re(-iτ) > 0` keeps it well defined.
fn principal_power(tau: TauParam, n: usize) -> Complex64 {
    (Complex64::new((1.0 - n as f64) / 2.0, 0.0) * (-I * tau.value()).ln()).exp()
}

fn theta_with_tail(kind: ThetaKind, z: Complex64, tau: TauParam, trunc: TruncationSpec) -> Result<(Complex64, f64)> {
    Ok((theta(kind, z, tau, trunc)?, theta_tail_bound(kind, z, tau, trunc)))
}

/// Σ_{k<mn} Π_j θ₃(z + y_j + kπ/(mn) | τ) = G_{m,n}(y|τ) θ₃(mnz | m²nτ), at
/// every sampled z and for Fourier modes `|b| ≤ 6mn`.
pub fn verify_circular(m: WindingOrder, ys: &YTuple, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.plan.validate()?;
    let n = ys.len();
    let mn = m.get() as u64 * n as u64;
    let tau_out = tau.scaled(m2n(m, n));
    let g = g_mn(m, ys, tau, cfg.rad)?;
    let g_tail = lattice_tail_bound(m, ys, tau, cfg.rad, LatticeForm::G);
    let rotation = |k: u64| Complex64::new(k as f64 * PI / mn as f64, 0.0);

    let mut report = ReportBuilder::new(IdentityId::Circular, params(m.get(), ys.as_slice(), tau), cfg.tolerance);
    report.n_max(cfg.trunc.n_max).r_max(cfg.rad.r_max).lattice_tail(g_tail);

    for z in cfg.plan.sampler().zs() {
        let mut lhs = ZERO;
        let mut lhs_tail = 0.0;
        for k in 0..mn {
            let factors = ys
                .as_slice()
                .iter()
                .map(|&y| theta_with_tail(ThetaKind::Three, z + y + rotation(k), tau, cfg.trunc))
                .collect::<Result<Vec<_>>>()?;
            lhs += factors.iter().map(|f| f.0).product::<Complex64>();
            lhs_tail += product_tail(&factors);
            report.theta_tail(factors.iter().map(|f| f.1).fold(0.0, f64::max));
        }
        let (th, th_tail) = theta_with_tail(ThetaKind::Three, z * mn as f64, tau_out, cfg.trunc)?;
        report.theta_tail(th_tail);
        let rhs = g * th;
        let rhs_tail = product_tail(&[(g, g_tail), (th, th_tail)]);
        report.sample(SampleRecord::compare(z, lhs, rhs), lhs_tail + rhs_tail);
    }

    let mut lhs_series = ZSeries::zero();
    for k in 0..mn {
        let mut prod = ZSeries::constant(Complex64::new(1.0, 0.0));
        for &y in ys.as_slice() {
            prod = &prod * &theta_zseries(ThetaKind::Three, y + rotation(k), 1, tau, cfg.trunc)?;
        }
        lhs_series = &lhs_series + &prod;
    }
    let rhs_series = theta_zseries(ThetaKind::Three, ZERO, mn as u32, tau_out, cfg.trunc)?.scaled(g, 0);
    report.fourier(fourier_compare(&lhs_series, &rhs_series, 6 * mn as i64));
    Ok(report.finish())
}

/// Fourier series in z of `Σ_{k<mn} q^{k²/2} e^{2kiz} Π_j θ₃(mz + y_j + kmπτ | m²nτ)`.
///
/// Its constant term is `F_{m,n}(y|τ)`: only the `k ≡ 0 (mod m)` blocks
/// can produce a z-independent term.
pub fn dual_lhs_series(m: WindingOrder, ys: &YTuple, tau: TauParam, trunc: TruncationSpec) -> Result<ZSeries> {
    let n = ys.len();
    let mn = m.get() as i64 * n as i64;
    let tau_in = tau.scaled(m2n(m, n));
    let mut total = ZSeries::zero();
    for k in 0..mn {
        let lift = tau.value() * PI * (k * m.get() as i64) as f64;
        let mut prod = ZSeries::constant(Complex64::new(1.0, 0.0));
        for &y in ys.as_slice() {
            prod = &prod * &theta_zseries(ThetaKind::Three, y + lift, m.get(), tau_in, trunc)?;
        }
        total = &total + &prod.scaled(q_pow(tau, Rational64::new(k * k, 2)), 2 * k);
    }
    Ok(total)
}

/// Σ_{k<mn} q^{k²/2} e^{2kiz} Π_j θ₃(mz + y_j + kmπτ | m²nτ) = F_{m,n}(y|τ) θ₃(z|τ),
/// with F from its lattice series.
pub fn verify_dual(m: WindingOrder, ys: &YTuple, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.plan.validate()?;
    let n = ys.len();
    let mn = m.get() as u64 * n as u64;
    let tau_in = tau.scaled(m2n(m, n));
    let f = f_mn_series(m, ys, tau, cfg.rad)?;
    let f_tail = lattice_tail_bound(m, ys, tau, cfg.rad, LatticeForm::F);

    let mut report = ReportBuilder::new(IdentityId::Dual, params(m.get(), ys.as_slice(), tau), cfg.tolerance);
    report.n_max(cfg.trunc.n_max).r_max(cfg.rad.r_max).lattice_tail(f_tail);

    for z in cfg.plan.sampler().zs() {
        let mut lhs = ZERO;
        let mut lhs_tail = 0.0;
        for k in 0..mn {
            let lift = tau.value() * PI * (k * m.get() as u64) as f64;
            let factors = ys
                .as_slice()
                .iter()
                .map(|&y| theta_with_tail(ThetaKind::Three, z * m.get() as f64 + y + lift, tau_in, cfg.trunc))
                .collect::<Result<Vec<_>>>()?;
            let pre = q_pow_phase(tau.value(), (k * k) as f64 / 2.0, I * z * (2 * k) as f64);
            lhs += pre * factors.iter().map(|f| f.0).product::<Complex64>();
            lhs_tail += pre.norm() * product_tail(&factors);
            report.theta_tail(factors.iter().map(|f| f.1).fold(0.0, f64::max));
        }
        let (th, th_tail) = theta_with_tail(ThetaKind::Three, z, tau, cfg.trunc)?;
        report.theta_tail(th_tail);
        let rhs = f * th;
        let rhs_tail = product_tail(&[(f, f_tail), (th, th_tail)]);
        report.sample(SampleRecord::compare(z, lhs, rhs), lhs_tail + rhs_tail);
    }

    let lhs_series = dual_lhs_series(m, ys, tau, cfg.trunc)?;
    let rhs_series = theta_zseries(ThetaKind::Three, ZERO, 1, tau, cfg.trunc)?.scaled(f, 0);
    report.fourier(fourier_compare(&lhs_series, &rhs_series, 6 * mn as i64));
    Ok(report.finish())
}

/// F_{m,n} from its lattice series against the Jacobi-transformed G form.
pub fn verify_f_consistency(m: WindingOrder, ys: &YTuple, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let series = f_mn_series(m, ys, tau, cfg.rad)?;
    let series_tail = lattice_tail_bound(m, ys, tau, cfg.rad, LatticeForm::F);
    let rad = cfg.radius_for(ys.len(), cfg.tail_target(series.norm()), |r| f_mn_via_g_tail_bound(m, ys, tau, r));
    let dual = f_mn_via_g(m, ys, tau, rad)?;
    let dual_tail = f_mn_via_g_tail_bound(m, ys, tau, rad);

    let mut report = ReportBuilder::new(IdentityId::FConsistency, params(m.get(), ys.as_slice(), tau), cfg.tolerance);
    report.r_max(rad.r_max).lattice_tail(series_tail).lattice_tail(dual_tail);
    report.sample(SampleRecord::compare(ZERO, series, dual), series_tail + dual_tail);
    Ok(report.finish())
}

/// The dual form with every y_j replaced by πτ·y_j:
/// `F(πτ·y) = q^{-Σy²/(2m²n)} (-iτ)^{(1-n)/2} (m²n)^{-n/2} G(πy/(m²n) | -1/(m²nτ))`.
pub fn verify_thm12_reparam(m: WindingOrder, ys: &YTuple, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let n = ys.len();
    let k = m2n(m, n);
    let kf = k as f64;
    let t = tau.value();
    let scaled = ys.mapped(|y| y * t * PI);
    let reduced = ys.mapped(|y| y * PI / kf);
    let tau_t = tau.inverted(k)?;
    let pre = q_pow_complex(tau, -ys.sum_of_squares() / (2.0 * kf)) * principal_power(tau, n) / kf.powf(n as f64 / 2.0);
    let rad = cfg.radius_for(n, cfg.tail_target(1.0), |r| {
        f_mn_via_g_tail_bound(m, &scaled, tau, r).max(pre.norm() * lattice_tail_bound(m, &reduced, tau_t, r, LatticeForm::G))
    });

    let lhs = f_mn_via_g(m, &scaled, tau, rad)?;
    let lhs_tail = f_mn_via_g_tail_bound(m, &scaled, tau, rad);
    let rhs = pre * g_mn(m, &reduced, tau_t, rad)?;
    let rhs_tail = pre.norm() * lattice_tail_bound(m, &reduced, tau_t, rad, LatticeForm::G);

    let mut report = ReportBuilder::new(IdentityId::Thm12Reparam, params(m.get(), ys.as_slice(), tau), cfg.tolerance);
    report.r_max(rad.r_max).lattice_tail(lhs_tail).lattice_tail(rhs_tail);
    report.sample(SampleRecord::compare(ZERO, lhs, rhs), lhs_tail + rhs_tail);
    Ok(report.finish())
}

/// `G(y/(m²nτ) | -1/(m²nτ)) = (m²n)^{n/2} (-iτ)^{(n-1)/2} e^{iΣy²/(m²nπτ)} F_{m,n}(y|τ)`.
pub fn verify_g_transform(m: WindingOrder, ys: &YTuple, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let n = ys.len();
    let k = m2n(m, n);
    let kf = k as f64;
    let t = tau.value();
    let tau_t = tau.inverted(k)?;
    let moved = ys.mapped(|y| y / (t * kf));
    let rad = cfg.radius_for(n, cfg.tail_target(kf.powf(n as f64 / 2.0)), |r| {
        lattice_tail_bound(m, &moved, tau_t, r, LatticeForm::G)
    });
    let lhs = g_mn(m, &moved, tau_t, rad)?;
    let lhs_tail = lattice_tail_bound(m, &moved, tau_t, rad, LatticeForm::G);

    let f = f_mn_series(m, ys, tau, cfg.rad)?;
    let f_tail = lattice_tail_bound(m, ys, tau, cfg.rad, LatticeForm::F);
    let pre = kf.powf(n as f64 / 2.0) / principal_power(tau, n) * (I * ys.sum_of_squares() / (t * kf * PI)).exp();
    let rhs = pre * f;

    let mut report = ReportBuilder::new(IdentityId::GTransform, params(m.get(), ys.as_slice(), tau), cfg.tolerance);
    report.r_max(rad.r_max).lattice_tail(lhs_tail).lattice_tail(f_tail);
    report.sample(SampleRecord::compare(ZERO, lhs, rhs), lhs_tail + pre.norm() * f_tail);
    Ok(report.finish())
}

/// Σ_{r₁,r₂} q^{Q(r₁,r₂) + s(r₁+r₂+1/3)} e^{±2i(r₁(2y₁+y₂) + r₂(y₁+2y₂))}
/// with `Q = r₁² + r₂² + r₁r₂` and `s ∈ {0, 1}`, over the full square box.
fn hexagonal_bracket_sum(y1: Complex64, y2: Complex64, tau: TauParam, rad: LatticeRadius, shifted: bool, sign: f64) -> Complex64 {
    let r = rad.r_max as i64;
    let t = tau.value();
    let mut acc = ZERO;
    for r1 in -r..=r {
        for r2 in -r..=r {
            let mut e = (r1 * r1 + r2 * r2 + r1 * r2) as f64;
            if shifted {
                e += (r1 + r2) as f64 + 1.0 / 3.0;
            }
            let phase = I * ((y1 * 2.0 + y2) * r1 as f64 + (y1 + y2 * 2.0) * r2 as f64) * (2.0 * sign);
            acc += q_pow_phase(t, e, phase);
        }
    }
    acc
}

/// `-√3·i·τ·e^{2i(y₁²+y₂²+y₁y₂)/(πτ)}`
fn hexagonal_prefactor(y1: Complex64, y2: Complex64, tau: TauParam) -> Complex64 {
    let t = tau.value();
    -I * 3f64.sqrt() * t * (I * 2.0 * (y1 * y1 + y2 * y2 + y1 * y2) / (t * PI)).exp()
}

/// Right side of the m=1, n=3 transformation with the three bracketed
/// sums written out directly (no cubic-theta calls).
pub fn g13_transform_rhs(y1: Complex64, y2: Complex64, tau: TauParam, rad: LatticeRadius) -> Complex64 {
    let s0 = hexagonal_bracket_sum(y1, y2, tau, rad, false, 1.0);
    let sp = hexagonal_bracket_sum(y1, y2, tau, rad, true, 1.0);
    let sm = hexagonal_bracket_sum(y1, y2, tau, rad, true, -1.0);
    let e = (I * 2.0 * (y1 + y2)).exp();
    hexagonal_prefactor(y1, y2, tau) * (s0 + e * sp + sm / e)
}

fn cubic_bracket_tail(x: Complex64, y: Complex64, tau: TauParam, rad: LatticeRadius) -> f64 {
    let a_args = CubicArgs::new(x, y, tau);
    let c_pos = CubicArgs::new(x, y, tau);
    let c_neg = CubicArgs::new(-x, -y, tau);
    let e = (I * 2.0 * (x + y)).exp();
    cubic_tail_bound(CubicKind::A, &a_args, rad)
        + e.norm() * cubic_tail_bound(CubicKind::C, &c_pos, rad)
        + cubic_tail_bound(CubicKind::C, &c_neg, rad) / e.norm()
}

fn cubic_radius(cfg: &VerifyConfig, bound: impl Fn(LatticeRadius) -> f64) -> LatticeRadius {
    cfg.radius_for(2, cfg.tail_target(1.0), bound)
}

/// `G_{1,3}(y₁/τ, y₂/τ, -(y₁+y₂)/τ | -1/τ)` against the three-bracket form.
pub fn verify_g13_transform(y1: Complex64, y2: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let one = WindingOrder::new(1)?;
    let base = YTuple::new(vec![y1, y2, -y1 - y2])?;
    let t = tau.value();
    let moved = base.mapped(|y| y / t);
    let tau_t = tau.inverted(1)?;
    let lhs_rad = cfg.radius_for(3, cfg.tail_target(3.0), |r| lattice_tail_bound(one, &moved, tau_t, r, LatticeForm::G));
    let lhs = g_mn(one, &moved, tau_t, lhs_rad)?;
    let lhs_tail = lattice_tail_bound(one, &moved, tau_t, lhs_rad, LatticeForm::G);

    let pre = hexagonal_prefactor(y1, y2, tau).norm();
    let rhs_rad = cubic_radius(cfg, |r| pre * cubic_bracket_tail(y1, y2, tau, r));
    let rhs = g13_transform_rhs(y1, y2, tau, rhs_rad);
    let rhs_tail = pre * cubic_bracket_tail(y1, y2, tau, rhs_rad);

    let mut report = ReportBuilder::new(IdentityId::G13Transform, params(1, base.as_slice(), tau), cfg.tolerance);
    report.r_max(lhs_rad.r_max).r_max(rhs_rad.r_max).lattice_tail(lhs_tail).lattice_tail(rhs_tail);
    report.sample(SampleRecord::compare(ZERO, lhs, rhs), lhs_tail + rhs_tail);
    Ok(report.finish())
}

fn cubic_pair_report(
    id: IdentityId,
    x: Complex64,
    y: Complex64,
    tau: TauParam,
    cfg: &VerifyConfig,
    rad: LatticeRadius,
    lhs: (Complex64, f64),
    rhs: (Complex64, f64),
) -> VerificationReport {
    let mut report = ReportBuilder::new(id, params(1, &[x, y], tau), cfg.tolerance);
    report.r_max(rad.r_max).lattice_tail(lhs.1).lattice_tail(rhs.1);
    report.sample(SampleRecord::compare(ZERO, lhs.0, rhs.0), lhs.1 + rhs.1);
    report.finish()
}

fn cubic_with_tail(kind: CubicKind, x: Complex64, y: Complex64, tau: TauParam, rad: LatticeRadius) -> (Complex64, f64) {
    let args = CubicArgs::new(x, y, tau);
    (cubic::cubic(kind, &args, rad), cubic_tail_bound(kind, &args, rad))
}

/// `b(x,y|τ) = a(x, y + π/3 | τ)`
pub fn verify_cubic_b_rel(x: Complex64, y: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let y_shift = y + PI / 3.0;
    let rad = cubic_radius(cfg, |r| {
        cubic_tail_bound(CubicKind::B, &CubicArgs::new(x, y, tau), r)
            .max(cubic_tail_bound(CubicKind::A, &CubicArgs::new(x, y_shift, tau), r))
    });
    let lhs = cubic_with_tail(CubicKind::B, x, y, tau, rad);
    let rhs = cubic_with_tail(CubicKind::A, x, y_shift, tau, rad);
    Ok(cubic_pair_report(IdentityId::CubicBRel, x, y, tau, cfg, rad, lhs, rhs))
}

/// `c(x,y|τ) = q^{1/3} a(x + πτ/3, y + πτ/3 | τ)`
pub fn verify_cubic_c_rel(x: Complex64, y: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let shift = tau.value() * PI / 3.0;
    let third = q_pow(tau, Rational64::new(1, 3));
    let rad = cubic_radius(cfg, |r| {
        cubic_tail_bound(CubicKind::C, &CubicArgs::new(x, y, tau), r)
            .max(third.norm() * cubic_tail_bound(CubicKind::A, &CubicArgs::new(x + shift, y + shift, tau), r))
    });
    let lhs = cubic_with_tail(CubicKind::C, x, y, tau, rad);
    let (a, a_tail) = cubic_with_tail(CubicKind::A, x + shift, y + shift, tau, rad);
    let rhs = (third * a, third.norm() * a_tail);
    Ok(cubic_pair_report(IdentityId::CubicCRel, x, y, tau, cfg, rad, lhs, rhs))
}

/// The claim `G_{1,3}(y₁, y₂, -y₁-y₂ | τ) = a(y₁, y₂ | τ)`, checked literally.
///
/// G carries the prefactor mn = 3, so the two sides differ by a factor of
/// three and this check fails with relative error 2/3; the normalized
/// relation is `G_{1,3} = 3a`.
pub fn verify_g13_equals_a(y1: Complex64, y2: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let one = WindingOrder::new(1)?;
    let ys = YTuple::new(vec![y1, y2, -y1 - y2])?;
    let rad = cfg.radius_for(3, cfg.tail_target(3.0), |r| {
        lattice_tail_bound(one, &ys, tau, r, LatticeForm::G).max(cubic_tail_bound(CubicKind::A, &CubicArgs::new(y1, y2, tau), r))
    });
    let g = (g_mn(one, &ys, tau, rad)?, lattice_tail_bound(one, &ys, tau, rad, LatticeForm::G));
    let a = cubic_with_tail(CubicKind::A, y1, y2, tau, rad);
    let mut report = ReportBuilder::new(IdentityId::G13EqualsA, params(1, ys.as_slice(), tau), cfg.tolerance);
    report.r_max(rad.r_max).lattice_tail(g.1).lattice_tail(a.1);
    report.sample(SampleRecord::compare(ZERO, g.0, a.0), g.1 + a.1);
    Ok(report.finish())
}

/// `a(x,y|τ) + w·e^{2i(x+y)} c(x,y|τ) + w²·e^{-2i(x+y)} c(-x,-y|τ)` and its tail.
fn cubic_bracket(x: Complex64, y: Complex64, tau: TauParam, rad: LatticeRadius, w: Complex64) -> (Complex64, f64) {
    let e = (I * 2.0 * (x + y)).exp();
    let (a, _) = cubic_with_tail(CubicKind::A, x, y, tau, rad);
    let (cp, _) = cubic_with_tail(CubicKind::C, x, y, tau, rad);
    let (cm, _) = cubic_with_tail(CubicKind::C, -x, -y, tau, rad);
    (a + w * e * cp + w * w * cm / e, cubic_bracket_tail(x, y, tau, rad))
}

/// Right side of the transformation of `a` as stated, built from a and c.
pub fn proposition_a_rhs(x: Complex64, y: Complex64, tau: TauParam, rad: LatticeRadius) -> Complex64 {
    hexagonal_prefactor(x, y, tau) * cubic_bracket(x, y, tau, rad, Complex64::new(1.0, 0.0)).0
}

/// Right side of the transformation of `c` as stated.
pub fn proposition_c_rhs(x: Complex64, y: Complex64, tau: TauParam, rad: LatticeRadius) -> Complex64 {
    let extra = (-I * 2.0 * (x + y) / tau.value()).exp();
    hexagonal_prefactor(x, y, tau) * extra * cubic_bracket(x, y, tau, rad, omega()).0
}

fn verify_proposition_display(id: IdentityId, x: Complex64, y: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    let t = tau.value();
    let tau_t = tau.inverted(1)?;
    let (kind, w, extra) = match id {
        IdentityId::PropATransform => (CubicKind::A, Complex64::new(1.0, 0.0), Complex64::new(1.0, 0.0)),
        _ => (CubicKind::C, omega(), (-I * 2.0 * (x + y) / t).exp()),
    };
    let pre = hexagonal_prefactor(x, y, tau) * extra;
    let rad = cubic_radius(cfg, |r| {
        cubic_tail_bound(kind, &CubicArgs::new(x / t, y / t, tau_t), r).max(pre.norm() * cubic_bracket_tail(x, y, tau, r))
    });
    let lhs = cubic_with_tail(kind, x / t, y / t, tau_t, rad);
    let (bracket, bracket_tail) = cubic_bracket(x, y, tau, rad, w);
    let rhs = (pre * bracket, pre.norm() * bracket_tail);
    Ok(cubic_pair_report(id, x, y, tau, cfg, rad, lhs, rhs))
}

/// `a(x/τ, y/τ | -1/τ) = -√3iτ e^{2i(x²+y²+xy)/(πτ)} [a + e^{2i(x+y)}c(x,y) + e^{-2i(x+y)}c(-x,-y)]`,
/// checked as stated. The left side is a third of the `G_{1,3}` value in
/// the three-bracket transformation, so the stated form is off by 3.
pub fn verify_proposition_a(x: Complex64, y: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    verify_proposition_display(IdentityId::PropATransform, x, y, tau, cfg)
}

/// `c(x/τ, y/τ | -1/τ) = -√3iτ e^{2i(x²+y²+xy)/(πτ) - 2i(x+y)/τ} [a + ωe^{2i(x+y)}c(x,y) + ω²e^{-2i(x+y)}c(-x,-y)]`,
/// checked as stated (same factor-of-3 normalization as the `a` display).
pub fn verify_proposition_c(x: Complex64, y: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    verify_proposition_display(IdentityId::PropCTransform, x, y, tau, cfg)
}

/// Both transformation displays for the cubic theta functions.
pub fn verify_proposition(x: Complex64, y: Complex64, tau: TauParam, cfg: &VerifyConfig) -> Result<(VerificationReport, VerificationReport)> {
    Ok((verify_proposition_a(x, y, tau, cfg)?, verify_proposition_c(x, y, tau, cfg)?))
}

/// Pieces of the two-term decomposition at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CounterexampleResiduals {
    pub q: Complex64,
    /// θ₃(z|τ)
    pub theta3: Complex64,
    /// θ₃(2z|4τ) + θ₂(2z|4τ) - (1+q)·θ₃(z|τ)
    pub wrong: Complex64,
    /// θ₃(2z|4τ) + θ₂(2z|4τ) - θ₃(z|τ)
    pub right: Complex64,
    /// Certified absolute truncation error shared by both residuals.
    pub tail: f64,
}

pub fn counterexample_residuals(z: Complex64, tau: TauParam, trunc: TruncationSpec) -> Result<CounterexampleResiduals> {
    let tau4 = tau.scaled(4);
    let (t3, t3_tail) = theta_with_tail(ThetaKind::Three, z, tau, trunc)?;
    let (a, a_tail) = theta_with_tail(ThetaKind::Three, z * 2.0, tau4, trunc)?;
    let (b, b_tail) = theta_with_tail(ThetaKind::Two, z * 2.0, tau4, trunc)?;
    let q = nome(tau);
    Ok(CounterexampleResiduals {
        q,
        theta3: t3,
        wrong: a + b - (q + 1.0) * t3,
        right: a + b - t3,
        tail: a_tail + b_tail + (q + 1.0).norm() * t3_tail,
    })
}

/// Quantifies the failure of `θ₃(2z|4τ) + θ₂(2z|4τ) = (1+q)θ₃(z|τ)`.
///
/// Per sample the record holds `lhs = R/θ₃(z|τ)` (R the residual of the
/// wrong formula) and `rhs = -q`; every error is normalized by `|θ₃(z|τ)|`,
/// and `rel_err` is the largest of `|R + qθ₃|`, `|D|` (the residual of the
/// correct decomposition) and `||R| - |q||θ₃||`. Passing means the formula
/// is off by exactly `-q·θ₃(z|τ)`.
pub fn demonstrate_counterexample(tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.plan.validate()?;
    let zero = [Complex64::new(0.0, 0.0)];
    let mut report = ReportBuilder::new(IdentityId::Counterexample, params(2, &zero, tau), cfg.tolerance);
    report.n_max(cfg.trunc.n_max);
    for z in cfg.plan.sampler().zs() {
        let res = counterexample_residuals(z, tau, cfg.trunc)?;
        let scale = res.theta3.norm().max(super::REL_ERR_FLOOR);
        let lhs = res.wrong / res.theta3;
        let rhs = -res.q;
        let abs_err = (lhs - rhs).norm();
        let rel_err = abs_err
            .max(res.right.norm() / scale)
            .max((res.wrong.norm() / scale - res.q.norm()).abs());
        report.theta_tail(res.tail);
        report.sample_rel(SampleRecord { z, lhs, rhs, abs_err, rel_err }, res.tail / scale);
    }
    Ok(report.finish())
}

/// `θ₃(z|τ) = θ₃(2z|4τ) + θ₂(2z|4τ)`, pointwise and for modes `|b| ≤ 12`.
pub fn verify_decomposition(tau: TauParam, cfg: &VerifyConfig) -> Result<VerificationReport> {
    cfg.plan.validate()?;
    let zero = [Complex64::new(0.0, 0.0)];
    let mut report = ReportBuilder::new(IdentityId::Decomposition, params(2, &zero, tau), cfg.tolerance);
    report.n_max(cfg.trunc.n_max);
    let tau4 = tau.scaled(4);
    for z in cfg.plan.sampler().zs() {
        let (lhs, l_tail) = theta_with_tail(ThetaKind::Three, z, tau, cfg.trunc)?;
        let (a, a_tail) = theta_with_tail(ThetaKind::Three, z * 2.0, tau4, cfg.trunc)?;
        let (b, b_tail) = theta_with_tail(ThetaKind::Two, z * 2.0, tau4, cfg.trunc)?;
        report.theta_tail(l_tail.max(a_tail).max(b_tail));
        report.sample(SampleRecord::compare(z, lhs, a + b), l_tail + a_tail + b_tail);
    }
    let lhs_series = theta_zseries(ThetaKind::Three, ZERO, 1, tau, cfg.trunc)?;
    let rhs_series = &theta_zseries(ThetaKind::Three, ZERO, 2, tau4, cfg.trunc)?
        + &theta_zseries(ThetaKind::Two, ZERO, 2, tau4, cfg.trunc)?;
    report.fourier(fourier_compare(&lhs_series, &rhs_series, 12));
    Ok(report.finish())
}
