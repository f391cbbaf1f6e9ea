//! The cubic theta functions a, b, c and their relation to G_{1,3}.
//!
//! G_{1,3} carries a prefactor mn = 3, so it equals 3a, not a.

use thetacirc::cubic::{a_cubic, b_cubic, c_cubic, omega, CubicArgs};
use thetacirc::harness::proposition_a_rhs;
use thetacirc::lattice::g_mn;
use thetacirc::{Complex64, LatticeRadius, TauParam, WindingOrder, YTuple};

fn main() -> thetacirc::Result<()> {
    let tau = TauParam::new(Complex64::new(0.05, 1.2))?;
    let rad = LatticeRadius::default();
    let (x, y) = (Complex64::new(0.3, 0.05), Complex64::new(-0.1, 0.02));
    let args = CubicArgs::new(x, y, tau);

    let a = a_cubic(&args, rad);
    println!("a = {a:.12}\nb = {:.12}\nc = {:.12}", b_cubic(&args, rad), c_cubic(&args, rad));
    println!("omega = {:.6}", omega());

    let ys = YTuple::new(vec![x, y, -x - y])?;
    let g = g_mn(WindingOrder::new(1)?, &ys, tau, rad)?;
    println!("G_13 / a = {:.12}", g / a);

    // The transformation display needs an extra 1/3 to hold.
    let tau_inv = tau.inverted(1)?;
    let lhs = a_cubic(&CubicArgs::new(x / tau.value(), y / tau.value(), tau_inv), rad);
    let rhs = proposition_a_rhs(x, y, tau, rad);
    println!("a(x/tau, y/tau | -1/tau) / display = {:.12}", lhs / rhs);
    Ok(())
}
