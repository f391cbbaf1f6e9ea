//! Two-variable cubic theta functions over the hexagonal form m² + mn + n²:
//!
//! ```text
//! a(x,y|τ) = Σ q^{m²+n²+mn}             e^{2im(2x+y)+2in(x+2y)}
//! b(x,y|τ) = Σ ω^{m-n} q^{m²+n²+mn}     e^{2im(2x+y)+2in(x+2y)}
//! c(x,y|τ) = Σ q^{m²+n²+mn+m+n+1/3}     e^{2im(2x+y)+2in(x+2y)}
//! ```
//!
//! with ω = e^{2πi/3}. Both indices run over `[-r_max, r_max]`.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::lattice::{shell_sum, LatticeRadius};
use crate::numeric::{q_pow_phase, TauParam};
use crate::tail::GaussTail;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// ω = e^{2πi/3}.
pub fn omega() -> Complex64 {
    (I * (2.0 * PI / 3.0)).exp()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicArgs {
    pub x: Complex64,
    pub y: Complex64,
    pub tau: TauParam,
}

impl CubicArgs {
    pub fn new(x: Complex64, y: Complex64, tau: TauParam) -> Self {
        Self { x, y, tau }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CubicKind {
    A,
    B,
    C,
}

impl std::str::FromStr for CubicKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "a" => Ok(CubicKind::A),
            "b" => Ok(CubicKind::B),
            "c" => Ok(CubicKind::C),
            other => Err(format!("unknown cubic theta function {other:?}, expected a, b or c")),
        }
    }
}

fn hexagonal_sum(kind: CubicKind, args: &CubicArgs, rad: LatticeRadius) -> Complex64 {
    let t = args.tau.value();
    let u = args.x * 2.0 + args.y;
    let v = args.x + args.y * 2.0;
    let w = omega();
    let twists = [Complex64::new(1.0, 0.0), w, w * w];
    shell_sum(2, rad.r_max, |r| {
        let (m, n) = (r[0], r[1]);
        let quad = (m * m + n * n + m * n) as f64;
        let phase = I * (u * m as f64 + v * n as f64) * 2.0;
        match kind {
            CubicKind::A => q_pow_phase(t, quad, phase),
            CubicKind::B => twists[(m - n).rem_euclid(3) as usize] * q_pow_phase(t, quad, phase),
            CubicKind::C => q_pow_phase(t, quad + (m + n) as f64 + 1.0 / 3.0, phase),
        }
    })
}

pub fn a_cubic(args: &CubicArgs, rad: LatticeRadius) -> Complex64 {
    hexagonal_sum(CubicKind::A, args, rad)
}

pub fn b_cubic(args: &CubicArgs, rad: LatticeRadius) -> Complex64 {
    hexagonal_sum(CubicKind::B, args, rad)
}

pub fn c_cubic(args: &CubicArgs, rad: LatticeRadius) -> Complex64 {
    hexagonal_sum(CubicKind::C, args, rad)
}

pub fn cubic(kind: CubicKind, args: &CubicArgs, rad: LatticeRadius) -> Complex64 {
    hexagonal_sum(kind, args, rad)
}

/// Certified enumeration bound for [`cubic`].
///
/// Uses `m²+mn+n² ≥ (m²+n²)/2` (for c, applied at the shifted point
/// `(m+1/3, n+1/3)`), which splits the double sum into one-dimensional
/// factors; the omitted region is covered by `tail₁·full₂ + full₁·tail₂`.
pub fn cubic_tail_bound(kind: CubicKind, args: &CubicArgs, rad: LatticeRadius) -> f64 {
    let im = args.tau.value().im;
    let offset = if kind == CubicKind::C { 1.0 / 3.0 } else { 0.0 };
    let gu = GaussTail::new(im, 1.0, (args.x * 2.0 + args.y).im).with_offset(offset);
    let gv = GaussTail::new(im, 1.0, (args.x + args.y * 2.0).im).with_offset(offset);
    let (tu, tv) = (gu.two_sided_beyond(rad.r_max), gv.two_sided_beyond(rad.r_max));
    if tu == 0.0 && tv == 0.0 {
        return 0.0;
    }
    tu * gv.full_sum(rad.r_max) + gu.full_sum(rad.r_max) * tv
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn tau(re: f64, im: f64) -> TauParam {
        TauParam::from_parts(re, im).unwrap()
    }

    const R: LatticeRadius = LatticeRadius::new(12);

    /// Plain double loop over the full box, independent of the shell walker.
    fn brute(kind: CubicKind, x: Complex64, y: Complex64, t: Complex64, r: i64) -> Complex64 {
        let mut s = c(0.0, 0.0);
        for m in -r..=r {
            for n in -r..=r {
                let mut e = (m * m + n * n + m * n) as f64;
                if kind == CubicKind::C {
                    e += (m + n) as f64 + 1.0 / 3.0;
                }
                let mut term = (I * 2.0 * PI * t * e + I * 2.0 * ((x * 2.0 + y) * m as f64 + (x + y * 2.0) * n as f64)).exp();
                if kind == CubicKind::B {
                    term *= (I * 2.0 * PI * (m - n) as f64 / 3.0).exp();
                }
                s += term;
            }
        }
        s
    }

    #[test]
    fn omega_is_a_cube_root_of_unity() {
        let w = omega();
        assert!((w * w * w - 1.0).norm() < 1e-15);
        assert!((w * w + w + 1.0).norm() < 1e-15);
    }

    #[test]
    fn a_at_origin_tau_i() {
        let t = tau(0.0, 1.0);
        let v = a_cubic(&CubicArgs::new(c(0.0, 0.0), c(0.0, 0.0), t), R);
        let b = brute(CubicKind::A, c(0.0, 0.0), c(0.0, 0.0), t.value(), 6);
        assert!((v - b).norm() < 1e-15);
        assert!((v.re - 1.011_204_695_537_690_3).abs() < 1e-14);
    }

    #[test]
    fn b_and_c_at_origin_tau_i() {
        let t = tau(0.0, 1.0);
        let args = CubicArgs::new(c(0.0, 0.0), c(0.0, 0.0), t);
        for kind in [CubicKind::B, CubicKind::C] {
            let v = cubic(kind, &args, R);
            let b = brute(kind, c(0.0, 0.0), c(0.0, 0.0), t.value(), 6);
            assert!((v - b).norm() < 1e-15 * b.norm().max(1.0), "{kind:?}");
        }
        let b0 = b_cubic(&args, R);
        assert!((b0.re - 0.994_397_710_842_864_1).abs() < 1e-14);
        let c0 = c_cubic(&args, R);
        assert!((c0.re - 0.370_126_606_992_903_5).abs() < 1e-14);
    }

    #[test]
    fn high_tau_limits() {
        let args = CubicArgs::new(c(0.2, 0.1), c(-0.3, 0.05), tau(0.1, 30.0));
        assert!((a_cubic(&args, R) - 1.0).norm() < 1e-15);
        assert!((b_cubic(&args, R) - 1.0).norm() < 1e-15);
        assert!(cubic_tail_bound(CubicKind::A, &args, LatticeRadius::new(1)) < 1e-100);
    }

    #[test]
    fn symmetric_in_x_and_y() {
        let t = tau(0.23, 0.87);
        let (x, y) = (c(0.31, -0.12), c(-0.17, 0.2));
        for kind in [CubicKind::A, CubicKind::C] {
            let p = cubic(kind, &CubicArgs::new(x, y, t), R);
            let q = cubic(kind, &CubicArgs::new(y, x, t), R);
            assert!((p - q).norm() / p.norm() < 1e-13);
        }
    }

    #[test]
    fn tail_bound_covers_growth() {
        let t = tau(0.1, 0.6);
        let args = CubicArgs::new(c(0.2, 0.4), c(0.1, -0.3), t);
        for kind in [CubicKind::A, CubicKind::B, CubicKind::C] {
            for r in 2..6 {
                let lo = cubic(kind, &args, LatticeRadius::new(r));
                let hi = cubic(kind, &args, LatticeRadius::new(r + 10));
                let bound = cubic_tail_bound(kind, &args, LatticeRadius::new(r));
                assert!((hi - lo).norm() <= bound, "{kind:?} r={r}");
            }
        }
    }
}
