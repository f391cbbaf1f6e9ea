//! Constrained lattice sums behind the circular summation formula.
//!
//! ```text
//! G_{m,n}(y|τ) = mn Σ_{r₁+⋯+r_n=0} q^{(r₁²+⋯+r_n²)/2} e^{2i(r₁y₁+⋯+r_n y_n)}
//!
//! F_{m,n}(y|τ) = Σ_{k=0}^{n-1} q^{-m²k²/2} Σ_{r₁+⋯+r_n=k} q^{m²n(r₁²+⋯+r_n²)/2} e^{-2i(r₁y₁+⋯+r_n y_n)}
//!              = (-iτ)^{(1-n)/2} (m²n)^{-n/2} e^{(y₁²+⋯+y_n²)/(m²nπτi)} G_{m,n}(y/(m²nτ) | -1/(m²nτ))
//! ```
//!
//! The first n-1 indices range over `[-r_max, r_max]` and the last one is
//! fixed by the linear constraint. Summation runs shell by shell
//! (`max |r_i| = 0, 1, …, r_max`), so a larger radius only appends terms to
//! the same floating-point accumulation.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{q_pow_phase, TauParam};
use crate::tail::GaussTail;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Default cap on the number of summand evaluations.
pub const DEFAULT_WORK_BUDGET: u64 = 100_000_000;

/// The relative slack allowed on `|y₁ + ⋯ + y_n|`.
pub const Y_SUM_TOLERANCE: f64 = 1e-12;

/// n complex shifts summing to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct YTuple {
    ys: Vec<Complex64>,
}

impl YTuple {
    pub fn new(ys: Vec<Complex64>) -> Result<Self> {
        if ys.is_empty() {
            return Err(Error::EmptyYTuple);
        }
        if ys.iter().any(|y| !(y.re.is_finite() && y.im.is_finite())) {
            return Err(Error::NonFinite("y"));
        }
        let sum: Complex64 = ys.iter().sum();
        let scale = ys.iter().map(|y| y.norm()).fold(1.0, f64::max);
        let allowed = Y_SUM_TOLERANCE * scale;
        if sum.norm() > allowed {
            return Err(Error::YSumNotZero { sum: sum.norm(), allowed });
        }
        Ok(Self { ys })
    }

    /// Appends `-(y₁+⋯+y_{n-1})` to the free components.
    pub fn from_free(free: Vec<Complex64>) -> Result<Self> {
        let last: Complex64 = -free.iter().sum::<Complex64>();
        let mut ys = free;
        ys.push(last);
        Self::new(ys)
    }

    pub fn zeros(n: usize) -> Result<Self> {
        Self::new(vec![Complex64::new(0.0, 0.0); n])
    }

    /// Skips the sum check; for tuples obtained from a valid one by a
    /// linear map, where rounding may exceed the absolute slack.
    pub(crate) fn mapped(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { ys: self.ys.iter().copied().map(f).collect() }
    }

    pub fn len(&self) -> usize {
        self.ys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ys.is_empty()
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.ys
    }

    pub fn sum_of_squares(&self) -> Complex64 {
        self.ys.iter().map(|y| y * y).sum()
    }

    fn im_growth(&self) -> f64 {
        self.ys.iter().map(|y| y.im.abs()).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WindingOrder(u32);

impl WindingOrder {
    pub fn new(m: u32) -> Result<Self> {
        if m == 0 {
            Err(Error::ZeroWindingOrder)
        } else {
            Ok(Self(m))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// Bound on the free summation indices plus the enumeration budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeRadius {
    pub r_max: u32,
    pub work_budget: u64,
}

impl LatticeRadius {
    pub const fn new(r_max: u32) -> Self {
        Self { r_max, work_budget: DEFAULT_WORK_BUDGET }
    }

    pub const fn with_budget(self, work_budget: u64) -> Self {
        Self { work_budget, ..self }
    }

    pub const fn grown(self, by: u32) -> Self {
        Self { r_max: self.r_max + by, ..self }
    }

    fn check_work(&self, n: usize) -> Result<()> {
        let side = 2 * self.r_max as u128 + 1;
        let terms = (n as u128).saturating_mul(side.saturating_pow(n as u32 - 1));
        if terms > self.work_budget as u128 {
            Err(Error::WorkBudget { terms, budget: self.work_budget })
        } else {
            Ok(())
        }
    }
}

impl Default for LatticeRadius {
    fn default() -> Self {
        Self::new(12)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum LatticeForm {
    G,
    F,
}

/// Calls `visit` for every `d`-tuple in `[-r_max, r_max]^d`, shell by shell,
/// and accumulates the shell sums in order.
pub(crate) fn shell_sum(d: usize, r_max: u32, mut visit: impl FnMut(&[i64]) -> Complex64) -> Complex64 {
    if d == 0 {
        return visit(&[]);
    }
    let mut total = Complex64::new(0.0, 0.0);
    let mut idx = vec![0i64; d];
    for s in 0..=r_max as i64 {
        let mut shell = Complex64::new(0.0, 0.0);
        idx.iter_mut().for_each(|r| *r = -s);
        loop {
            if idx.iter().any(|r| r.abs() == s) {
                shell += visit(&idx);
            }
            // odometer over [-s, s]^d
            let mut pos = d;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                if idx[pos] < s {
                    idx[pos] += 1;
                    idx[pos + 1..].iter_mut().for_each(|r| *r = -s);
                    break;
                }
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX {
                break;
            }
        }
        total += shell;
    }
    total
}

/// `G_{m,n}(y₁,…,y_n | τ)`.
pub fn g_mn(m: WindingOrder, ys: &YTuple, tau: TauParam, rad: LatticeRadius) -> Result<Complex64> {
    let n = ys.len();
    rad.check_work(n)?;
    let y = ys.as_slice();
    let t = tau.value();
    let mut r = vec![0i64; n];
    let sum = shell_sum(n - 1, rad.r_max, |free| {
        r[..n - 1].copy_from_slice(free);
        r[n - 1] = -free.iter().sum::<i64>();
        let sq: i64 = r.iter().map(|v| v * v).sum();
        let phase: Complex64 = r.iter().zip(y).map(|(&ri, &yi)| yi * ri as f64).sum();
        q_pow_phase(t, sq as f64 / 2.0, I * phase * 2.0)
    });
    Ok(sum * (m.get() as f64 * n as f64))
}

/// `F_{m,n}` from its direct lattice-series form.
pub fn f_mn_series(m: WindingOrder, ys: &YTuple, tau: TauParam, rad: LatticeRadius) -> Result<Complex64> {
    let n = ys.len();
    rad.check_work(n)?;
    let y = ys.as_slice();
    let t = tau.value();
    let m2 = (m.get() as f64).powi(2);
    let mut r = vec![0i64; n];
    let sum = shell_sum(n - 1, rad.r_max, |free| {
        let partial: i64 = free.iter().sum();
        r[..n - 1].copy_from_slice(free);
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..n as i64 {
            r[n - 1] = k - partial;
            let sq: i64 = r.iter().map(|v| v * v).sum();
            let phase: Complex64 = r.iter().zip(y).map(|(&ri, &yi)| yi * ri as f64).sum();
            let alpha = m2 * (n as f64 * sq as f64 - (k * k) as f64) / 2.0;
            acc += q_pow_phase(t, alpha, -I * phase * 2.0);
        }
        acc
    });
    Ok(sum)
}

/// Parameters of the transformed G appearing in the dual form of F.
struct DualG {
    prefactor: Complex64,
    ys: YTuple,
    tau: TauParam,
}

fn dual_g(m: WindingOrder, ys: &YTuple, tau: TauParam) -> Result<DualG> {
    let n = ys.len();
    let k = (m.get() as u64).pow(2) * n as u64;
    let kf = k as f64;
    let t = tau.value();
    let tau_t = tau.inverted(k)?;
    let power = (Complex64::new((1.0 - n as f64) / 2.0, 0.0) * (-I * t).ln()).exp();
    let gauss = (ys.sum_of_squares() / (I * t * kf * PI)).exp();
    let prefactor = power / kf.powf(n as f64 / 2.0) * gauss;
    Ok(DualG { prefactor, ys: ys.mapped(|y| y / (t * kf)), tau: tau_t })
}

/// `F_{m,n}` through the Jacobi-transformed G, at the same radius.
pub fn f_mn_via_g(m: WindingOrder, ys: &YTuple, tau: TauParam, rad: LatticeRadius) -> Result<Complex64> {
    let d = dual_g(m, ys, tau)?;
    Ok(d.prefactor * g_mn(m, &d.ys, d.tau, rad)?)
}

/// Certified bound on the enumeration error of `g_mn` (form G) or
/// `f_mn_series` (form F).
///
/// Every omitted tuple has some free index with `|r_i| > r_max`. For each
/// such index the sum is bounded by its one-dimensional geometric tail times
/// the unconstrained sums over the other n-1 coordinates, all dominated by
/// `|q|^{c r²/2} e^{2Y|r|}` with `Y = Σ|Im y_j|` and `c = 1` (G) or `m²n` (F).
pub fn lattice_tail_bound(m: WindingOrder, ys: &YTuple, tau: TauParam, rad: LatticeRadius, form: LatticeForm) -> f64 {
    let n = ys.len();
    let d = n - 1;
    if d == 0 {
        return 0.0;
    }
    let im = tau.value().im;
    let m2n = (m.get() as f64).powi(2) * n as f64;
    let (c, outer) = match form {
        LatticeForm::G => (1.0, m.get() as f64 * n as f64),
        LatticeForm::F => {
            // Σ_k |q|^{-m²k²/2}
            let lifts: f64 = (0..n).map(|k| (PI * im * (m.get() as f64).powi(2) * (k * k) as f64).exp()).sum();
            (m2n, lifts)
        }
    };
    let g = GaussTail::new(im, c, ys.im_growth());
    let tail = g.two_sided_beyond(rad.r_max);
    if tail == 0.0 {
        return 0.0;
    }
    outer * d as f64 * tail * g.full_sum(rad.r_max).powi(d as i32)
}

/// Tail bound of `f_mn_via_g`: the transformed G's bound times the prefactor.
pub fn f_mn_via_g_tail_bound(m: WindingOrder, ys: &YTuple, tau: TauParam, rad: LatticeRadius) -> f64 {
    match dual_g(m, ys, tau) {
        Ok(d) => d.prefactor.norm() * lattice_tail_bound(m, &d.ys, d.tau, rad, LatticeForm::G),
        Err(_) => f64::INFINITY,
    }
}

/// Smallest radius in `[floor.r_max, cap]` whose bound (as computed by
/// `bound`) is at most `target`.
pub fn minimal_radius(floor: LatticeRadius, cap: u32, target: f64, bound: impl Fn(LatticeRadius) -> f64) -> Option<LatticeRadius> {
    (floor.r_max..=cap)
        .map(|r| LatticeRadius { r_max: r, ..floor })
        .find(|&r| bound(r) <= target)
}
