//! Jacobi theta functions, circular-summation lattice sums and cubic theta
//! functions, together with a harness that checks the identities relating
//! them both pointwise and Fourier mode by Fourier mode.
//!
//! Layout:
//!
//! - [`numeric`]: the nome, fractional nome powers, θ₁–θ₄ with certified
//!   truncation bounds and the [`ZSeries`] Fourier engine.
//! - [`lattice`]: the constrained sums `G_{m,n}` and both forms of `F_{m,n}`.
//! - [`cubic`]: the two-variable cubic theta functions `a`, `b`, `c`.
//! - [`harness`]: identity verifiers producing [`VerificationReport`]s.
//! - [`cli`]: the command-line front end used by the `thetacirc` binary.

pub mod cli;
pub mod cubic;
pub mod error;
pub mod harness;
pub mod lattice;
pub mod numeric;
pub(crate) mod tail;

pub use error::{Error, Result};
pub use harness::{IdentityId, SamplePlan, Verdict, VerificationReport};

pub use lattice::{LatticeRadius, WindingOrder, YTuple};
pub use numeric::{TauParam, ThetaKind, TruncationSpec, ZSeries};

pub use num_complex::Complex64;
