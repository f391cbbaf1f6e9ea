//! Command-line front end.
//!
//! ```text
//! thetacirc eval theta --kind K --z Z --tau T
//! thetacirc eval cubic --which a|b|c --x X --y Y --tau T
//! thetacirc eval g|f --m M --n N --y LIST --tau T
//! thetacirc verify circular|dual|f-consistency|thm12|g-transform|g13|cubic-rels|proposition|counterexample|decomposition|all
//! ```
//!
//! Exit codes: 0 all checks pass, 1 at least one fails, 2 usage or parse
//! error, 3 inconclusive (certified tails exceed the tolerance).

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use crate::cubic::{cubic, CubicArgs, CubicKind};
use crate::harness::{verify_identity, IdentityId, SamplePlan, Scenario, Verdict, VerificationReport, VerifyConfig};
use crate::lattice::{f_mn_series, f_mn_via_g, g_mn, LatticeRadius, WindingOrder, YTuple};
use crate::numeric::{theta, TauParam, ThetaKind, TruncationSpec};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INCONCLUSIVE: i32 = 3;

const COMPLEX_HELP: &str = "complex literal [-]<float>[(+|-)<float>i], no spaces, e.g. 0.2+1.3i";

/// Parses `[-]<float>[(+|-)<float>i]`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let bad = || format!("malformed complex literal {s:?}: expected {COMPLEX_HELP}");
    if s.is_empty() || s.chars().any(char::is_whitespace) {
        return Err(bad());
    }
    let finite = |v: f64| if v.is_finite() { Ok(v) } else { Err(bad()) };
    let Some(body) = s.strip_suffix('i') else {
        return finite(s.parse::<f64>().map_err(|_| bad())?).map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(bad)?;
    let (re, im) = body.split_at(split);
    if im.len() < 2 || im[1..].starts_with(['+', '-']) {
        return Err(bad());
    }
    let re = finite(re.parse::<f64>().map_err(|_| bad())?)?;
    let im = finite(im.parse::<f64>().map_err(|_| bad())?)?;
    Ok(Complex64::new(re, im))
}

/// Comma-separated complex literals, kept as one clap value.
#[derive(Debug, Clone)]
pub struct ComplexList(pub Vec<Complex64>);

fn parse_complex_list(s: &str) -> Result<ComplexList, String> {
    s.split(',').map(parse_complex).collect::<Result<_, _>>().map(ComplexList)
}

fn parse_tau(s: &str) -> Result<TauParam, String> {
    let t = parse_complex(s)?;
    TauParam::new(t).map_err(|e| e.to_string())
}

fn parse_kind(s: &str) -> Result<ThetaKind, String> {
    s.parse()
}

fn parse_cubic_kind(s: &str) -> Result<CubicKind, String> {
    s.parse()
}

/// Formats a complex number in the same grammar the parser accepts.
pub fn format_complex(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else {
        let sign = if c.im.is_sign_negative() { '-' } else { '+' };
        format!("{}{}{}i", c.re, sign, c.im.abs())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "thetacirc", version, about = "Theta functions, circular sums and identity checks")]
#[command(after_help = "Complex literals: [-]<float>[(+|-)<float>i] with no spaces, e.g. -0.25+1.1i.\nExit codes: 0 pass, 1 fail, 2 usage error, 3 inconclusive.")]
pub struct Cli {
    #[arg(long, value_enum, default_value = "text", global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a function at a point.
    #[command(subcommand)]
    Eval(EvalCommand),
    /// Check one or more identities.
    Verify(VerifyArgs),
}

#[derive(Debug, Subcommand)]
pub enum EvalCommand {
    /// θ_k(z|τ)
    Theta {
        #[arg(long, value_parser = parse_kind)]
        kind: ThetaKind,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
        #[arg(long, value_parser = parse_tau, allow_hyphen_values = true)]
        tau: TauParam,
        #[arg(long, default_value_t = 24)]
        trunc_theta: u32,
    },
    /// a, b or c at (x, y | τ)
    Cubic {
        #[arg(long, value_parser = parse_cubic_kind)]
        which: CubicKind,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        x: Complex64,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        y: Complex64,
        #[arg(long, value_parser = parse_tau, allow_hyphen_values = true)]
        tau: TauParam,
        #[arg(long, default_value_t = 12)]
        rad: u32,
    },
    /// G_{m,n}(y|τ)
    G(LatticeEvalArgs),
    /// F_{m,n}(y|τ)
    F {
        #[command(flatten)]
        args: LatticeEvalArgs,
        #[arg(long, value_enum, default_value = "series")]
        form: FForm,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FForm {
    Series,
    ViaG,
}

#[derive(Debug, Args)]
pub struct LatticeEvalArgs {
    #[arg(long)]
    m: u32,
    #[arg(long)]
    n: usize,
    /// Comma-separated complex literals summing to zero.
    #[arg(long = "y", value_parser = parse_complex_list, allow_hyphen_values = true)]
    ys: ComplexList,
    #[arg(long, value_parser = parse_tau, allow_hyphen_values = true)]
    tau: TauParam,
    #[arg(long, default_value_t = 12)]
    rad: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Circular,
    Dual,
    FConsistency,
    Thm12,
    GTransform,
    G13,
    CubicRels,
    Proposition,
    Counterexample,
    Decomposition,
    All,
}

impl Target {
    pub fn identities(self) -> Vec<IdentityId> {
        use IdentityId::*;
        match self {
            Target::Circular => vec![Circular],
            Target::Dual => vec![Dual],
            Target::FConsistency => vec![FConsistency],
            Target::Thm12 => vec![Thm12Reparam],
            Target::GTransform => vec![GTransform],
            Target::G13 => vec![G13Transform],
            Target::CubicRels => vec![CubicBRel, CubicCRel, G13EqualsA],
            Target::Proposition => vec![PropATransform, PropCTransform],
            Target::Counterexample => vec![Counterexample],
            Target::Decomposition => vec![Decomposition],
            Target::All => IdentityId::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub target: Target,
    #[arg(long, default_value_t = 2)]
    pub m: u32,
    /// Defaults to the length of --y, or 2.
    #[arg(long)]
    pub n: Option<usize>,
    /// Drawn from the seeded sampler when absent.
    #[arg(long, value_parser = parse_tau, allow_hyphen_values = true)]
    pub tau: Option<TauParam>,
    /// Comma-separated y-tuple summing to zero; seeded random when absent.
    #[arg(long = "y", value_parser = parse_complex_list, allow_hyphen_values = true)]
    pub ys: Option<ComplexList>,
    /// x argument of the cubic identities.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub cx: Option<Complex64>,
    /// y argument of the cubic identities.
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub cy: Option<Complex64>,
    #[arg(long, default_value_t = 10)]
    pub samples: usize,
    #[arg(long, default_value_t = 1, env = "THETA_SEED")]
    pub seed: u64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, default_value_t = 24)]
    pub trunc_theta: u32,
    #[arg(long, default_value_t = 12)]
    pub rad: u32,
    #[arg(long)]
    pub no_timestamp: bool,
}

#[derive(Serialize)]
struct Envelope<'a> {
    #[serde(skip_serializing_if = "Option::is_none")]
    timestamp: Option<u64>,
    verdict: Verdict,
    reports: &'a [VerificationReport],
}

#[derive(Serialize)]
struct ValueOut {
    #[serde(serialize_with = "crate::harness::ser_complex_pub")]
    value: Complex64,
}

struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Runs the CLI with real stdout/stderr and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_PASS
                }
                _ => {
                    // One line is enough; clap's usage hint follows on later lines.
                    let msg = e.to_string();
                    let _ = writeln!(err, "{}", msg.lines().next().unwrap_or("error: invalid arguments"));
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match cli.command {
        Command::Eval(cmd) => eval(cmd, cli.format, out),
        Command::Verify(args) => verify(args, cli.format, out),
    };
    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn emit_value(value: Complex64, format: Format, out: &mut dyn Write) -> Result<i32, UsageError> {
    match format {
        Format::Text => writeln!(out, "{}", format_complex(value))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&ValueOut { value })?)?,
    }
    Ok(EXIT_PASS)
}

fn lattice_inputs(args: &LatticeEvalArgs) -> Result<(WindingOrder, YTuple), UsageError> {
    let ys = &args.ys.0;
    if ys.len() != args.n {
        return Err(UsageError(format!("--n {} does not match the {} values given to --y", args.n, ys.len())));
    }
    Ok((WindingOrder::new(args.m)?, YTuple::new(ys.clone())?))
}

fn eval(cmd: EvalCommand, format: Format, out: &mut dyn Write) -> Result<i32, UsageError> {
    let value = match cmd {
        EvalCommand::Theta { kind, z, tau, trunc_theta } => theta(kind, z, tau, TruncationSpec::new(trunc_theta))?,
        EvalCommand::Cubic { which, x, y, tau, rad } => cubic(which, &CubicArgs::new(x, y, tau), LatticeRadius::new(rad)),
        EvalCommand::G(args) => {
            let (m, ys) = lattice_inputs(&args)?;
            g_mn(m, &ys, args.tau, LatticeRadius::new(args.rad))?
        }
        EvalCommand::F { args, form } => {
            let (m, ys) = lattice_inputs(&args)?;
            let rad = LatticeRadius::new(args.rad);
            match form {
                FForm::Series => f_mn_series(m, &ys, args.tau, rad)?,
                FForm::ViaG => f_mn_via_g(m, &ys, args.tau, rad)?,
            }
        }
    };
    emit_value(value, format, out)
}

/// Builds the scenario: explicit flags win, everything else comes from the
/// seeded sampler.
fn scenario(args: &VerifyArgs, plan: &SamplePlan) -> Result<Scenario, UsageError> {
    let given = args.ys.as_ref().map(|l| &l.0);
    let n = match (given, args.n) {
        (Some(ys), Some(n)) if ys.len() != n => {
            return Err(UsageError(format!("--n {n} does not match the {} values given to --y", ys.len())))
        }
        (Some(ys), _) => ys.len(),
        (None, Some(n)) => n,
        (None, None) => 2,
    };
    if n == 0 {
        return Err(UsageError("--n must be at least 1".into()));
    }
    let m = WindingOrder::new(args.m)?;
    let mut sampler = plan.sampler_for(0);
    let mut sc = Scenario::draw(&mut sampler, m, n);
    if let Some(tau) = args.tau {
        sc.tau = tau;
    }
    if let Some(ys) = given {
        sc.ys = YTuple::new(ys.clone())?;
    }
    if let Some(x) = args.cx {
        sc.x = x;
    }
    if let Some(y) = args.cy {
        sc.y = y;
    }
    Ok(sc)
}

fn overall(reports: &[VerificationReport]) -> Verdict {
    if reports.iter().any(|r| r.verdict == Verdict::Fail) {
        Verdict::Fail
    } else if reports.iter().any(|r| r.verdict == Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    }
}

fn verify(args: VerifyArgs, format: Format, out: &mut dyn Write) -> Result<i32, UsageError> {
    if !(args.tol.is_finite() && args.tol > 0.0) {
        return Err(UsageError(format!("--tol must be positive, got {}", args.tol)));
    }
    let plan = SamplePlan::default().with_count(args.samples).with_seed(args.seed);
    plan.validate()?;
    let cfg = VerifyConfig {
        plan,
        trunc: TruncationSpec::new(args.trunc_theta),
        rad: LatticeRadius::new(args.rad),
        tolerance: args.tol,
    };
    let sc = scenario(&args, &plan)?;
    let reports = args
        .target
        .identities()
        .into_iter()
        .map(|id| verify_identity(id, &sc, &cfg))
        .collect::<crate::Result<Vec<_>>>()?;
    let verdict = overall(&reports);

    match format {
        Format::Json => {
            let timestamp = (!args.no_timestamp).then(|| {
                std::time::SystemTime::now()
                    .duration_since(std::time::UNIX_EPOCH)
                    .map(|d| d.as_secs())
                    .unwrap_or(0)
            });
            let env = Envelope { timestamp, verdict, reports: &reports };
            writeln!(out, "{}", serde_json::to_string_pretty(&env)?)?;
        }
        Format::Text => write_text(&reports, verdict, out)?,
    }
    Ok(match verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Inconclusive => EXIT_INCONCLUSIVE,
    })
}

fn write_text(reports: &[VerificationReport], verdict: Verdict, out: &mut dyn Write) -> std::io::Result<()> {
    for r in reports {
        writeln!(
            out,
            "{:<22} {:<12} max_rel_err={:.3e} tol={:e} m={} n={} tau={}",
            r.identity.name(),
            format!("{:?}", r.verdict).to_lowercase(),
            r.max_rel_err,
            r.tolerance,
            r.params.m,
            r.params.n,
            format_complex(r.params.tau),
        )?;
        if r.identity == IdentityId::Counterexample {
            for s in &r.samples {
                writeln!(out, "    z={}  |R|/|theta3|={:.6e}  |q|={:.6e}", format_complex(s.z), s.lhs.norm(), s.rhs.norm())?;
            }
        }
    }
    writeln!(out, "overall: {}", format!("{verdict:?}").to_lowercase())
}
