//! Compare both sides of an identity mode by mode as Fourier series in z.

use thetacirc::harness::{fourier_compare, modes_agree};
use thetacirc::numeric::theta_zseries;
use thetacirc::{Complex64, TauParam, ThetaKind, TruncationSpec};

fn main() -> thetacirc::Result<()> {
    let tau = TauParam::new(Complex64::new(0.2, 0.8))?;
    let trunc = TruncationSpec::default();
    let zero = Complex64::new(0.0, 0.0);

    // theta3(z|tau) against theta3(2z|4tau) + theta2(2z|4tau).
    let lhs = theta_zseries(ThetaKind::Three, zero, 1, tau, trunc)?;
    let rhs = &theta_zseries(ThetaKind::Three, zero, 2, tau.scaled(4), trunc)?
        + &theta_zseries(ThetaKind::Two, zero, 2, tau.scaled(4), trunc)?;

    let rows = fourier_compare(&lhs, &rhs, 8);
    for row in &rows {
        println!("e^({:>3} iz)  {:>24.15e}  diff {:.1e}", row.mode, row.lhs.re, row.abs_diff);
    }
    println!("modes agree: {}", modes_agree(&rows, 1e-12));
    Ok(())
}
