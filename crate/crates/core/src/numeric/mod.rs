//! Complex-arithmetic foundation: nome powers, θ₁–θ₄ and Fourier series in z.

mod nome;
mod theta;
mod zseries;

pub use nome::{nome, q_pow, q_pow_complex, TauParam};
pub(crate) use nome::q_pow_phase;
pub use theta::{theta, theta_tail_bound, theta_zseries, ThetaKind, TruncationSpec};
pub use zseries::ZSeries;
