//! Dispatch from [`IdentityId`] to its verifier.

use num_complex::Complex64;

use super::verify::*;
use super::{IdentityId, Sampler, VerificationReport};
use crate::error::Result;
use crate::lattice::{WindingOrder, YTuple};
use crate::numeric::TauParam;

/// Parameters shared by every identity: `(m, y, τ)` for the lattice
/// identities and the pair `(x, y)` for the cubic ones.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub m: WindingOrder,
    pub ys: YTuple,
    pub tau: TauParam,
    pub x: Complex64,
    pub y: Complex64,
}

impl Scenario {
    /// Draws τ, an n-tuple and the cubic pair from `sampler`.
    pub fn draw(sampler: &mut Sampler, m: WindingOrder, n: usize) -> Self {
        let tau = sampler.tau();
        let ys = sampler.ytuple(n);
        let (x, y) = (sampler.y(), sampler.y());
        Self { m, ys, tau, x, y }
    }
}

pub fn verify_identity(id: IdentityId, sc: &Scenario, cfg: &VerifyConfig) -> Result<VerificationReport> {
    match id {
        IdentityId::Circular => verify_circular(sc.m, &sc.ys, sc.tau, cfg),
        IdentityId::Dual => verify_dual(sc.m, &sc.ys, sc.tau, cfg),
        IdentityId::FConsistency => verify_f_consistency(sc.m, &sc.ys, sc.tau, cfg),
        IdentityId::Thm12Reparam => verify_thm12_reparam(sc.m, &sc.ys, sc.tau, cfg),
        IdentityId::GTransform => verify_g_transform(sc.m, &sc.ys, sc.tau, cfg),
        IdentityId::G13Transform => verify_g13_transform(sc.x, sc.y, sc.tau, cfg),
        IdentityId::CubicBRel => verify_cubic_b_rel(sc.x, sc.y, sc.tau, cfg),
        IdentityId::CubicCRel => verify_cubic_c_rel(sc.x, sc.y, sc.tau, cfg),
        IdentityId::G13EqualsA => verify_g13_equals_a(sc.x, sc.y, sc.tau, cfg),
        IdentityId::PropATransform => verify_proposition_a(sc.x, sc.y, sc.tau, cfg),
        IdentityId::PropCTransform => verify_proposition_c(sc.x, sc.y, sc.tau, cfg),
        IdentityId::Counterexample => demonstrate_counterexample(sc.tau, cfg),
        IdentityId::Decomposition => verify_decomposition(sc.tau, cfg),
    }
}
