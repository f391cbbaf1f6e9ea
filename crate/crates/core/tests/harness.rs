use thetacirc::cubic::{a_cubic, c_cubic, CubicArgs};
use thetacirc::harness::*;
use thetacirc::{Complex64, IdentityId, LatticeRadius, SamplePlan, TauParam, Verdict, WindingOrder, YTuple};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn tau(re: f64, im: f64) -> TauParam {
    TauParam::from_parts(re, im).unwrap()
}

fn m(k: u32) -> WindingOrder {
    WindingOrder::new(k).unwrap()
}

#[test]
fn circular_small_cases() {
    let cfg = VerifyConfig::default();
    for (mm, ys) in [(1, vec![c(0.0, 0.0)]), (1, vec![c(0.2, 0.1), c(-0.2, -0.1)]), (2, vec![c(0.4, 0.0), c(-0.1, 0.2), c(-0.3, -0.2)])] {
        let r = verify_circular(m(mm), &YTuple::new(ys).unwrap(), tau(0.2, 1.1), &cfg).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
        assert!(r.fourier.is_some());
    }
}

#[test]
fn dual_m2_n1() {
    let r = verify_dual(m(2), &YTuple::zeros(1).unwrap(), tau(0.0, 1.0), &VerifyConfig::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert!(r.max_rel_err < 1e-12);
}

#[test]
fn transforms_pass() {
    let cfg = VerifyConfig::default();
    let ys = YTuple::new(vec![c(0.1, 0.05), c(-0.3, 0.1), c(0.2, -0.15)]).unwrap();
    for mm in 1..=2 {
        for r in [
            verify_f_consistency(m(mm), &ys, tau(-0.1, 1.0), &cfg).unwrap(),
            verify_thm12_reparam(m(mm), &ys, tau(-0.1, 1.0), &cfg).unwrap(),
            verify_g_transform(m(mm), &ys, tau(-0.1, 1.0), &cfg).unwrap(),
        ] {
            assert_eq!(r.verdict, Verdict::Pass, "{:?} {}", r.identity, r.max_rel_err);
        }
    }
}

#[test]
fn cubic_relations_pass() {
    let cfg = VerifyConfig::default();
    let (x, y, t) = (c(0.3, 0.05), c(-0.2, 0.1), tau(0.1, 1.2));
    assert!(verify_cubic_b_rel(x, y, t, &cfg).unwrap().passed());
    assert!(verify_cubic_c_rel(x, y, t, &cfg).unwrap().passed());
    assert!(verify_g13_transform(x, y, t, &cfg).unwrap().passed());
}

#[test]
fn stated_cubic_normalizations_are_off_by_three() {
    let cfg = VerifyConfig::default();
    let (x, y, t) = (c(0.3, 0.05), c(-0.2, 0.1), tau(0.1, 1.2));
    let g = verify_g13_equals_a(x, y, t, &cfg).unwrap();
    let (pa, pc) = verify_proposition(x, y, t, &cfg).unwrap();
    for r in [g, pa, pc] {
        assert_eq!(r.verdict, Verdict::Fail);
        assert!((r.max_rel_err - 2.0 / 3.0).abs() < 1e-12, "{:?} {}", r.identity, r.max_rel_err);
    }
}

#[test]
fn corrected_cubic_displays_hold() {
    let (x, y, t) = (c(0.3, 0.05), c(-0.2, 0.1), tau(0.1, 1.2));
    let rad = LatticeRadius::new(20);
    let (xt, yt, ti) = (x / t.value(), y / t.value(), t.inverted(1).unwrap());
    let a = a_cubic(&CubicArgs::new(xt, yt, ti), rad);
    let cc = c_cubic(&CubicArgs::new(xt, yt, ti), rad);
    assert!((a * 3.0 - proposition_a_rhs(x, y, t, rad)).norm() < 1e-12);
    assert!((cc * 3.0 - proposition_c_rhs(x, y, t, rad)).norm() < 1e-12);
}

#[test]
fn g13_bracket_sums_match_cubic_display() {
    let (x, y, t) = (c(0.25, -0.05), c(0.1, 0.12), tau(-0.2, 0.95));
    let rad = LatticeRadius::new(20);
    let direct = g13_transform_rhs(x, y, t, rad);
    let via_cubic = proposition_a_rhs(x, y, t, rad);
    let err = (direct - via_cubic).norm() / direct.norm();
    assert!(err < 1e-12, "{direct} vs {via_cubic}: {err:e}");
}

#[test]
fn counterexample_ratio_is_nome() {
    let r = demonstrate_counterexample(tau(0.0, 1.0), &VerifyConfig::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    for s in &r.samples {
        assert!((s.lhs.norm() - 1.867_442_731_707_989_3e-3).abs() < 1e-15);
    }
    let res = counterexample_residuals(c(0.4, 0.1), tau(0.0, 1.0), Default::default()).unwrap();
    assert!(res.right.norm() < 1e-15);
    assert!((res.wrong + res.q * res.theta3).norm() < 1e-15);
}

#[test]
fn decomposition_passes_with_modes() {
    let r = verify_decomposition(tau(0.3, 0.9), &VerifyConfig::default()).unwrap();
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.fourier.as_ref().map(Vec::len), Some(25));
}

#[test]
fn loose_truncation_is_inconclusive_not_pass() {
    let cfg = VerifyConfig { trunc: thetacirc::TruncationSpec::new(1), ..VerifyConfig::default() };
    let r = verify_decomposition(tau(0.0, 0.8), &cfg).unwrap();
    assert_eq!(r.verdict, Verdict::Inconclusive);
}

#[test]
fn reports_are_deterministic() {
    let plan = SamplePlan::default().with_seed(99).with_count(5);
    let cfg = VerifyConfig::default().with_plan(plan);
    let run = || {
        let sc = Scenario::draw(&mut plan.sampler_for(0), m(2), 2);
        IdentityId::ALL.iter().map(|&id| serde_json::to_string(&verify_identity(id, &sc, &cfg).unwrap()).unwrap()).collect::<Vec<_>>()
    };
    assert_eq!(run(), run());
}

#[test]
fn splitmix_reference_stream() {
    let mut g = SplitMix64::new(1234567);
    assert_eq!(g.next_u64(), 6457827717110365317);
    assert_eq!(g.next_u64(), 3203168211198807973);
    assert_eq!(g.next_u64(), 9817491932198370423);
}

#[test]
fn report_json_keys() {
    let r = demonstrate_counterexample(tau(0.0, 1.0), &VerifyConfig::default().with_plan(SamplePlan::default().with_count(1))).unwrap();
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    for k in ["identity", "params", "truncation", "samples", "max_rel_err", "tolerance", "verdict", "fourier"] {
        assert!(keys.contains(&k.to_string()), "missing {k}");
    }
    assert_eq!(v["identity"], "COUNTEREXAMPLE_1_4");
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn invalid_plan_is_rejected() {
    let cfg = VerifyConfig::default().with_plan(SamplePlan::default().with_count(0));
    assert!(verify_decomposition(tau(0.0, 1.0), &cfg).is_err());
}
