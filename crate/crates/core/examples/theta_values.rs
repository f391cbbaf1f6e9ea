//! Evaluate the four theta functions and print their certified tails.

use thetacirc::numeric::{theta, theta_tail_bound};
use thetacirc::{Complex64, TauParam, ThetaKind, TruncationSpec};

fn main() -> thetacirc::Result<()> {
    let tau = TauParam::new(Complex64::new(0.1, 0.9))?;
    let z = Complex64::new(0.4, -0.2);
    let trunc = TruncationSpec::default();

    println!("tau = {}, z = {}", tau.value(), z);
    for kind in ThetaKind::ALL {
        let v = theta(kind, z, tau, trunc)?;
        let tail = theta_tail_bound(kind, z, tau, trunc);
        println!("{kind}(z|tau) = {v:.15}   tail <= {tail:.1e}");
    }

    // Jacobi's identity theta3^4 = theta2^4 + theta4^4 at z = 0.
    let zero = Complex64::new(0.0, 0.0);
    let t = |k| theta(k, zero, tau, trunc);
    let lhs = t(ThetaKind::Three)?.powi(4);
    let rhs = t(ThetaKind::Two)?.powi(4) + t(ThetaKind::Four)?.powi(4);
    println!("theta3^4 - theta2^4 - theta4^4 = {:.1e}", (lhs - rhs).norm());
    Ok(())
}
