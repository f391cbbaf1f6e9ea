use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetacirc")).args(args).env_remove("THETA_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_g21_at_zero() {
    let o = run(&["eval", "g", "--m", "2", "--n", "1", "--y", "0", "--tau", "0+1i"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn eval_theta_json() {
    let o = run(&["eval", "theta", "--kind", "3", "--z", "0", "--tau", "0+1i", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["value"][0].as_f64().unwrap() - 1.086_434_811_213_308).abs() < 1e-14);
}

#[test]
fn usage_errors_exit_two_with_one_line() {
    for args in [
        &["eval", "theta", "--kind", "3", "--z", "0", "--tau", "0-1i"][..],
        &["eval", "theta", "--kind", "3", "--z", "1 + 2i", "--tau", "0+1i"],
        &["eval", "g", "--m", "1", "--n", "2", "--y", "1,1", "--tau", "0+1i"],
        &["eval", "g", "--m", "0", "--n", "1", "--y", "0", "--tau", "0+1i"],
        &["verify", "circular", "--n", "3", "--y", "0.1,-0.1"],
        &["verify", "nonsense"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(String::from_utf8_lossy(&o.stderr).trim().lines().count(), 1, "{args:?}");
    }
}

#[test]
fn passing_verify_exits_zero() {
    let o = run(&["verify", "circular", "--m", "2", "--n", "3", "--tau", "0.1+1.2i"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn failing_verify_exits_one() {
    let o = run(&["verify", "cubic-rels", "--tau", "0+1i"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("G13_EQUALS_A"));
}

#[test]
fn inconclusive_verify_exits_three() {
    let o = run(&["verify", "decomposition", "--trunc-theta", "1", "--tau", "0+0.8i"]);
    assert_eq!(o.status.code(), Some(3), "{}", stdout(&o));
}

#[test]
fn counterexample_reports_nome_ratio() {
    let o = run(&["verify", "counterexample", "--tau", "0+1i", "--samples", "3", "--format", "json", "--no-timestamp"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let report = &v["reports"][0];
    assert_eq!(report["identity"], "COUNTEREXAMPLE_1_4");
    for s in report["samples"].as_array().unwrap() {
        let (re, im) = (s["lhs"][0].as_f64().unwrap(), s["lhs"][1].as_f64().unwrap());
        assert!((re.hypot(im) - 1.8674e-3).abs() < 1e-7);
    }
}

#[test]
fn json_envelope_shape() {
    let o = run(&["verify", "dual", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["timestamp"].is_u64());
    assert_eq!(v["verdict"], "pass");
    let r = &v["reports"][0];
    for k in ["identity", "params", "truncation", "samples", "max_rel_err", "tolerance", "verdict", "fourier"] {
        assert!(r.get(k).is_some(), "missing {k}");
    }
    for k in ["n_max", "r_max", "theta_tail", "lattice_tail"] {
        assert!(r["truncation"].get(k).is_some(), "missing truncation.{k}");
    }
}

#[test]
fn seed_env_var_sets_default() {
    let with = |seed: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_thetacirc"));
        cmd.args(["verify", "decomposition", "--format", "json", "--no-timestamp"]).args(extra).env_remove("THETA_SEED");
        if let Some(s) = seed {
            cmd.env("THETA_SEED", s);
        }
        cmd.output().unwrap().stdout
    };
    assert_eq!(with(Some("5"), &[]), with(None, &["--seed", "5"]));
    assert_ne!(with(Some("5"), &[]), with(None, &[]));
    assert_eq!(with(Some("5"), &["--seed", "1"]), with(None, &[]));
}
