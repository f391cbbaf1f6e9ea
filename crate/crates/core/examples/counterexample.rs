//! theta3(2z|4tau) + theta2(2z|4tau) equals theta3(z|tau), not (1+q) theta3(z|tau).
//! The residual of the second form is exactly -q theta3(z|tau).

use thetacirc::harness::counterexample_residuals;
use thetacirc::numeric::nome;
use thetacirc::{Complex64, TauParam, TruncationSpec};

fn main() -> thetacirc::Result<()> {
    let trunc = TruncationSpec::default();
    for (re, im) in [(0.0, 1.0), (0.3, 0.7), (-0.1, 2.0)] {
        let tau = TauParam::new(Complex64::new(re, im))?;
        let z = Complex64::new(0.5, 0.1);
        let r = counterexample_residuals(z, tau, trunc)?;
        println!(
            "tau={}  |q|={:.6e}  |R|/|theta3|={:.6e}  correct form residual {:.1e}",
            tau.value(),
            nome(tau).norm(),
            r.wrong.norm() / r.theta3.norm(),
            r.right.norm()
        );
    }
    Ok(())
}
