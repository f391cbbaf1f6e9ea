//! Left- and right-hand sides of every identity, compared pointwise and,
//! where both sides are Fourier series in z, coefficient by coefficient.

mod fourier;
mod registry;
mod report;
mod sample;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub use fourier::{fourier_compare, modes_agree, FourierRow};
pub use registry::{verify_identity, Scenario};
pub use report::{Params, SampleRecord, Truncation, Verdict, VerificationReport, REL_ERR_FLOOR};
pub use sample::{Rect, SamplePlan, Sampler, SplitMix64};
pub use verify::*;

/// Every identity the harness knows how to check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    /// Σ_k Π_j θ₃(z + y_j + kπ/(mn) | τ) = G_{m,n}(y|τ) θ₃(mnz | m²nτ)
    #[serde(rename = "CIRCULAR_1_1")]
    Circular,
    /// Σ_k q^{k²/2} e^{2kiz} Π_j θ₃(mz + y_j + kmπτ | m²nτ) = F_{m,n}(y|τ) θ₃(z|τ)
    #[serde(rename = "DUAL_2_1")]
    Dual,
    /// Lattice-series F equals the Jacobi-transformed G form.
    #[serde(rename = "F_CONSISTENCY_2_2_2_3")]
    FConsistency,
    /// The dual form rewritten under y_j ↦ πτ·y_j.
    #[serde(rename = "THM12_REPARAM")]
    Thm12Reparam,
    /// G at the transformed parameter expressed through the F series.
    #[serde(rename = "G_TRANSFORM_3_1")]
    GTransform,
    /// The m=1, n=3 transformation written with three hexagonal sums.
    #[serde(rename = "G13_TRANSFORM")]
    G13Transform,
    #[serde(rename = "CUBIC_B_REL")]
    CubicBRel,
    #[serde(rename = "CUBIC_C_REL")]
    CubicCRel,
    #[serde(rename = "G13_EQUALS_A")]
    G13EqualsA,
    #[serde(rename = "PROP_A_TRANSFORM")]
    PropATransform,
    #[serde(rename = "PROP_C_TRANSFORM")]
    PropCTransform,
    /// θ₃(2z|4τ) + θ₂(2z|4τ) = (1+q)θ₃(z|τ), which fails by exactly -qθ₃.
    #[serde(rename = "COUNTEREXAMPLE_1_4")]
    Counterexample,
    /// θ₃(z|τ) = θ₃(2z|4τ) + θ₂(2z|4τ)
    #[serde(rename = "DECOMPOSITION")]
    Decomposition,
}

impl IdentityId {
    pub const ALL: [IdentityId; 13] = [
        IdentityId::Circular,
        IdentityId::Dual,
        IdentityId::FConsistency,
        IdentityId::Thm12Reparam,
        IdentityId::GTransform,
        IdentityId::G13Transform,
        IdentityId::CubicBRel,
        IdentityId::CubicCRel,
        IdentityId::G13EqualsA,
        IdentityId::PropATransform,
        IdentityId::PropCTransform,
        IdentityId::Counterexample,
        IdentityId::Decomposition,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Circular => "CIRCULAR_1_1",
            IdentityId::Dual => "DUAL_2_1",
            IdentityId::FConsistency => "F_CONSISTENCY_2_2_2_3",
            IdentityId::Thm12Reparam => "THM12_REPARAM",
            IdentityId::GTransform => "G_TRANSFORM_3_1",
            IdentityId::G13Transform => "G13_TRANSFORM",
            IdentityId::CubicBRel => "CUBIC_B_REL",
            IdentityId::CubicCRel => "CUBIC_C_REL",
            IdentityId::G13EqualsA => "G13_EQUALS_A",
            IdentityId::PropATransform => "PROP_A_TRANSFORM",
            IdentityId::PropCTransform => "PROP_C_TRANSFORM",
            IdentityId::Counterexample => "COUNTEREXAMPLE_1_4",
            IdentityId::Decomposition => "DECOMPOSITION",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown identity {s:?}"))
    }
}

#[doc(hidden)]
pub fn ser_complex_pub<S: serde::Serializer>(c: &num_complex::Complex64, s: S) -> Result<S::Ok, S::Error> {
    report::ser_complex(c, s)
}
