//! Circular summation: the sum of mn shifted products of theta3 collapses
//! to G times a single theta3.

use thetacirc::harness::{verify_circular, VerifyConfig};
use thetacirc::lattice::g_mn;
use thetacirc::{Complex64, LatticeRadius, TauParam, WindingOrder, YTuple};

fn main() -> thetacirc::Result<()> {
    let tau = TauParam::new(Complex64::new(-0.2, 1.1))?;
    let ys = YTuple::from_free(vec![Complex64::new(0.3, 0.1), Complex64::new(-0.7, 0.05)])?;

    for m in 1..=3 {
        let m = WindingOrder::new(m)?;
        let g = g_mn(m, &ys, tau, LatticeRadius::default())?;
        let report = verify_circular(m, &ys, tau, &VerifyConfig::default())?;
        println!(
            "m={} n={}  G = {:.12}  verdict {:?}  max rel err {:.2e}",
            m.get(),
            ys.len(),
            g,
            report.verdict,
            report.max_rel_err
        );
    }
    Ok(())
}
