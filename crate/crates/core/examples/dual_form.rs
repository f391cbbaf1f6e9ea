//! The dual summation and its constant Fourier coefficient.

use thetacirc::harness::{dual_lhs_series, verify_dual, VerifyConfig};
use thetacirc::lattice::{f_mn_series, f_mn_via_g};
use thetacirc::{Complex64, LatticeRadius, TauParam, TruncationSpec, WindingOrder, YTuple};

fn main() -> thetacirc::Result<()> {
    let tau = TauParam::new(Complex64::new(0.15, 1.3))?;
    let m = WindingOrder::new(2)?;
    let ys = YTuple::new(vec![Complex64::new(0.2, 0.1), Complex64::new(-0.2, -0.1)])?;
    let rad = LatticeRadius::default();

    let series = f_mn_series(m, &ys, tau, rad)?;
    let via_g = f_mn_via_g(m, &ys, tau, rad)?;
    let c0 = dual_lhs_series(m, &ys, tau, TruncationSpec::default())?.coeff(0);
    println!("F from its lattice series   {series:.15}");
    println!("F from G at -1/(m^2 n tau)  {via_g:.15}");
    println!("constant Fourier mode       {c0:.15}");

    let report = verify_dual(m, &ys, tau, &VerifyConfig::default())?;
    println!("pointwise check: {:?}, max rel err {:.2e}", report.verdict, report.max_rel_err);
    Ok(())
}
