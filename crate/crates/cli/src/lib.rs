//! Command-line surface of `qhfol`: argument parsing, file handling and JSON
//! reports. [`run_command`] does all the work and never touches the process
//! streams, so it can be driven from tests.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde_json::{json, Map, Value};

use qhfol::bounds::alpha::alpha_index;
use qhfol::bounds::{
    alpha_enclosure, check_bound, milnor_sum_on_v, milnor_sum_total, poincare_bound, r_n, sigma,
    BoundCase, BoundCheck, BoundValue, RationalInterval,
};
use qhfol::decimal::truncate_decimal;
use qhfol::family::{generate_family, verify_family, FamilySpec};
use qhfol::text::{
    format_field_file, format_hypersurface_file, parse_field_file, parse_hypersurface_file,
};
use qhfol::verification::{run_suite, SampleConfig, Suite, SuiteReport};
use qhfol::{sections_dimension, Invariance, QuasiSmoothness, WeightSystem};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Digits kept in decimal renderings.
const PLACES: usize = 6;

/// Failures listed per suite in a `verify` report.
const MAX_LISTED_FAILURES: usize = 20;

#[derive(Debug, Parser)]
#[command(
    name = "qhfol",
    version,
    about = "Foliations and invariant hypersurfaces on weighted projective spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certified enclosure of alpha_n.
    Alpha {
        #[arg(long)]
        n: usize,
        /// Enclosure width, as `p/q` or a decimal such as `1e-6`.
        #[arg(long)]
        width: Option<String>,
    },
    /// Degree bound for an invariant hypersurface.
    Bound(WeightsDeg),
    /// Decide whether a hypersurface degree obeys the bound.
    CheckBound {
        #[command(flatten)]
        base: WeightsDeg,
        #[arg(long = "deg-v", allow_hyphen_values = true)]
        deg_v: i64,
    },
    /// Test whether a hypersurface is invariant by a vector field.
    Invariant {
        #[arg(long)]
        field: PathBuf,
        #[arg(long)]
        hypersurface: PathBuf,
    },
    /// Milnor sums over all singularities, and over those on V.
    MilnorSum {
        #[command(flatten)]
        base: WeightsDeg,
        #[arg(long = "deg-v", allow_hyphen_values = true)]
        deg_v: Option<i64>,
    },
    /// Dimension of the space of quasi-homogeneous polynomials of a degree.
    SectionsDim(WeightsDeg),
    /// Build and verify a member of the explicit family.
    GenExample {
        /// Pairs `a0 b0 a1 b1 ...`.
        #[arg(long, num_args = 4.., required = true, value_name = "N")]
        pairs: Vec<u64>,
        /// Weight of an extra coordinate (even-dimensional variant).
        #[arg(long)]
        extra: Option<u64>,
        #[arg(long, default_value_t = 1)]
        multiplier: u64,
        /// Directory receiving `field.txt` and `hypersurface.txt`.
        #[arg(long = "out-dir")]
        out_dir: Option<PathBuf>,
    },
    /// Run seeded verification suites.
    Verify {
        /// Suite name or `all`.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Debug, Args)]
struct WeightsDeg {
    #[arg(long, num_args = 2.., required = true, value_name = "W")]
    weights: Vec<u64>,
    #[arg(long, allow_hyphen_values = true)]
    deg: i64,
}

/// Result of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    /// JSON report for standard output; absent on input errors.
    pub report: Option<Value>,
    /// Human-readable text for standard error.
    pub summary: String,
}

impl Outcome {
    fn input_error(message: impl Into<String>) -> Self {
        Outcome {
            code: 2,
            report: None,
            summary: message.into(),
        }
    }

    pub fn status(&self) -> Option<&str> {
        self.report.as_ref()?.get("status")?.as_str()
    }
}

/// Runs the command given by `args` (without the program name).
pub fn run_command<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let argv = std::iter::once("qhfol".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            return Outcome {
                code,
                report: None,
                summary: e.render().to_string(),
            };
        }
    };
    match dispatch(cli.command) {
        Ok(out) => out,
        Err(message) => Outcome::input_error(message),
    }
}

type CmdResult = Result<Outcome, String>;

fn dispatch(command: Command) -> CmdResult {
    match command {
        Command::Alpha { n, width } => alpha(n, width.as_deref()),
        Command::Bound(a) => bound(&a),
        Command::CheckBound { base, deg_v } => check(&base, deg_v),
        Command::Invariant {
            field,
            hypersurface,
        } => invariant(&field, &hypersurface),
        Command::MilnorSum { base, deg_v } => milnor(&base, deg_v),
        Command::SectionsDim(a) => sections(&a),
        Command::GenExample {
            pairs,
            extra,
            multiplier,
            out_dir,
        } => gen_example(&pairs, extra, multiplier, out_dir.as_deref()),
        Command::Verify {
            suite,
            seed,
            samples,
        } => verify(&suite, seed, samples),
    }
}

fn report(command: &str, inputs: Value, result: Value, status: &str) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "result": result,
        "status": status,
        "version": VERSION,
    })
}

fn done(code: i32, report: Value, summary: String) -> CmdResult {
    Ok(Outcome {
        code,
        report: Some(report),
        summary,
    })
}

/// `{"num", "den", "decimal"}` for a rational.
pub fn rational_json(r: &BigRational) -> Value {
    json!({
        "num": r.numer().to_string(),
        "den": r.denom().to_string(),
        "decimal": truncate_decimal(r, PLACES),
    })
}

fn integer_json(i: &BigInt) -> Value {
    rational_json(&BigRational::from_integer(i.clone()))
}

/// Longest truncated decimal, up to `PLACES` digits, shared by both ends.
fn shared_decimal(iv: &RationalInterval) -> String {
    (0..=PLACES)
        .rev()
        .find_map(|p| iv.common_truncation(p))
        .unwrap_or_else(|| truncate_decimal(&iv.lo, 0))
}

fn interval_json(iv: &RationalInterval) -> Value {
    json!({ "lo": rational_json(&iv.lo), "hi": rational_json(&iv.hi) })
}

/// Accepts `p/q`, integers and decimals with an optional exponent.
pub fn parse_rational(s: &str) -> Result<BigRational, String> {
    let bad = || format!("cannot read '{s}' as a rational number");
    let s = s.trim();
    if s.contains('/') {
        let r = BigRational::from_str(s).map_err(|_| bad())?;
        return Ok(r);
    }
    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(bad());
    }
    let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
    let shift = exponent - frac_part.len() as i32;
    let ten = BigRational::from_integer(10.into());
    let scale = if shift >= 0 {
        num_traits::pow(ten, shift as usize)
    } else {
        BigRational::one() / num_traits::pow(ten, (-shift) as usize)
    };
    Ok(BigRational::from_integer(numer) * scale)
}

fn weights(w: &[u64]) -> Result<WeightSystem, String> {
    WeightSystem::new(w.to_vec()).map_err(|e| e.to_string())
}

fn weights_inputs(a: &WeightsDeg) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("weights".into(), json!(a.weights));
    m.insert("deg".into(), json!(a.deg));
    m
}

fn alpha(n: usize, width: Option<&str>) -> CmdResult {
    let width = match width {
        Some(w) => parse_rational(w)?,
        None => qhfol::bounds::default_width(),
    };
    let iv = alpha_enclosure(n, &width).map_err(|e| e.to_string())?;
    let m = alpha_index(n);
    let result = json!({
        "n": n,
        "root_of": format!("R_{m}(x) = x(x+1)^{m} - 2"),
        "enclosure": interval_json(&iv),
        "width": rational_json(&iv.width()),
        "decimal": shared_decimal(&iv),
        "certificate": {
            "r_lo": rational_json(&r_n(m, &iv.lo)),
            "r_hi": rational_json(&r_n(m, &iv.hi)),
        },
    });
    let inputs = json!({ "n": n, "width": rational_json(&width) });
    let summary = format!(
        "alpha_{n} in [{}, {}]",
        truncate_decimal(&iv.lo, 9),
        truncate_decimal(&iv.hi, 9)
    );
    done(0, report("alpha", inputs, result, "ok"), summary)
}

fn bound(a: &WeightsDeg) -> CmdResult {
    let w = weights(&a.weights)?;
    let rep = poincare_bound(&w, a.deg).map_err(|e| e.to_string())?;
    let (value, text) = match &rep.bound_value {
        BoundValue::Exact(b) => (
            json!({ "exact": integer_json(b), "relation": "deg V <= value" }),
            format!("deg V <= {b}"),
        ),
        BoundValue::Enclosure(iv) => (
            json!({ "enclosure": interval_json(iv), "relation": "deg V < value" }),
            format!("deg V < {}", truncate_decimal(&iv.midpoint(), PLACES)),
        ),
    };
    let case = match rep.case {
        BoundCase::N2Exact => "N2Exact",
        BoundCase::NGe3Alpha => "NGe3Alpha",
    };
    let result = json!({
        "dimension": rep.dimension,
        "case": case,
        "hypothesis_met": rep.hypothesis_met,
        "sigma1": rep.sigma1.to_string(),
        "bound": value,
        "max_degree": rep.max_degree().map(|b| b.to_string()),
    });
    let status = if rep.hypothesis_met {
        "ok"
    } else {
        "HypothesisNotMet"
    };
    let summary = if rep.hypothesis_met {
        text
    } else {
        format!("{text} (hypothesis d >= sigma_1 + 1 not met)")
    };
    done(
        0,
        report("bound", Value::Object(weights_inputs(a)), result, status),
        summary,
    )
}

fn check(a: &WeightsDeg, deg_v: i64) -> CmdResult {
    let w = weights(&a.weights)?;
    let verdict = check_bound(&w, a.deg, deg_v).map_err(|e| e.to_string())?;
    let mut result = Map::new();
    result.insert("dimension".into(), json!(w.dim()));
    let sigma1 = sigma(&w, 1).map_err(|e| e.to_string())?;
    result.insert("sigma1".into(), json!(sigma1.to_string()));
    if w.dim() >= 3 && verdict != BoundCheck::HypothesisNotMet {
        let m = alpha_index(w.dim());
        let q = BigRational::new(BigInt::from(deg_v - a.deg + 1), sigma1);
        result.insert("q".into(), rational_json(&q));
        if q.is_positive() {
            result.insert("r_index".into(), json!(m));
            result.insert("r_q".into(), rational_json(&r_n(m, &q)));
        }
    } else if w.dim() == 2 {
        let b = BigInt::from(a.deg) + &sigma1 - 2;
        result.insert("bound".into(), integer_json(&b));
    }
    let (status, code) = match verdict {
        BoundCheck::Satisfied => ("Satisfied", 0),
        BoundCheck::Violated => ("Violated", 1),
        BoundCheck::HypothesisNotMet => ("HypothesisNotMet", 0),
    };
    let mut inputs = weights_inputs(a);
    inputs.insert("deg_v".into(), json!(deg_v));
    done(
        code,
        report(
            "check-bound",
            Value::Object(inputs),
            Value::Object(result),
            status,
        ),
        format!("deg V = {deg_v}, deg F = {}: {status}", a.deg),
    )
}

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn invariant(field_path: &Path, hyp_path: &Path) -> CmdResult {
    let in_file = |p: &Path, e: qhfol::Error| format!("{}: {e}", p.display());
    let field = parse_field_file(&read(field_path)?).map_err(|e| in_file(field_path, e))?;
    let (w, f) = parse_hypersurface_file(&read(hyp_path)?, Some(field.num_vars()))
        .map_err(|e| in_file(hyp_path, e))?;
    if w.as_ref().is_some_and(|w| w != field.weights()) {
        return Err(format!(
            "weights of {} differ from those of {}",
            hyp_path.display(),
            field_path.display()
        ));
    }
    let w = field.weights();
    let d0 = f.weighted_degree(w).map_err(|e| in_file(hyp_path, e))?;
    let smooth = match f.quasi_smoothness().map_err(|e| e.to_string())? {
        QuasiSmoothness::QuasiSmooth => "QuasiSmooth",
        QuasiSmoothness::NotQuasiSmooth => "NotQuasiSmooth",
        QuasiSmoothness::Undetermined => "Undetermined",
    };
    let mut result = json!({
        "weights": w.weights(),
        "foliation_degree": field.degree(),
        "hypersurface_degree": d0,
        "quasi_smoothness": smooth,
    });
    let status = match field.is_invariant(&f).map_err(|e| e.to_string())? {
        Invariance::Invariant { cofactor } => {
            result["cofactor"] = json!(cofactor.to_string());
            "Invariant"
        }
        Invariance::NotInvariant { remainder } => {
            result["remainder"] = json!(remainder.to_string());
            "NotInvariant"
        }
    };
    let inputs = json!({
        "field": field_path.display().to_string(),
        "hypersurface": hyp_path.display().to_string(),
    });
    done(
        0,
        report("invariant", inputs, result, status),
        format!("hypersurface of degree {d0}: {status}"),
    )
}

fn milnor(a: &WeightsDeg, deg_v: Option<i64>) -> CmdResult {
    let w = weights(&a.weights)?;
    let total = milnor_sum_total(&w, a.deg).map_err(|e| e.to_string())?;
    let mut result = Map::new();
    result.insert("total".into(), rational_json(&total));
    let mut summary = format!("total = {total}");
    let mut inputs = weights_inputs(a);
    if let Some(d0) = deg_v {
        inputs.insert("deg_v".into(), json!(d0));
        let on_v = milnor_sum_on_v(&w, a.deg, d0).map_err(|e| e.to_string())?;
        result.insert("on_v".into(), rational_json(&on_v));
        result.insert("off_v".into(), rational_json(&(&total - &on_v)));
        summary.push_str(&format!(", on V = {on_v}"));
    }
    done(
        0,
        report(
            "milnor-sum",
            Value::Object(inputs),
            Value::Object(result),
            "ok",
        ),
        summary,
    )
}

fn sections(a: &WeightsDeg) -> CmdResult {
    let w = weights(&a.weights)?;
    let dim = sections_dimension(&w, a.deg);
    done(
        0,
        report(
            "sections-dim",
            Value::Object(weights_inputs(a)),
            json!({ "dimension": dim.to_string() }),
            "ok",
        ),
        format!("h^0(O({})) = {dim}", a.deg),
    )
}

fn gen_example(
    flat: &[u64],
    extra: Option<u64>,
    multiplier: u64,
    out_dir: Option<&Path>,
) -> CmdResult {
    if !flat.len().is_multiple_of(2) {
        return Err(format!(
            "--pairs needs an even count of integers, got {}",
            flat.len()
        ));
    }
    let pairs: Vec<(u64, u64)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
    let mut spec = FamilySpec::new(pairs).with_multiplier(multiplier);
    if let Some(a) = extra {
        spec = spec.with_extra(a);
    }
    let inst = generate_family(&spec).map_err(|e| e.to_string())?;
    let rep = verify_family(&inst).map_err(|e| e.to_string())?;

    let dir = out_dir.unwrap_or_else(|| Path::new("."));
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let field_path = dir.join("field.txt");
    let hyp_path = dir.join("hypersurface.txt");
    let write =
        |p: &Path, text: String| fs::write(p, text).map_err(|e| format!("{}: {e}", p.display()));
    write(&field_path, format_field_file(&inst.field))?;
    write(
        &hyp_path,
        format_hypersurface_file(&inst.weights, &inst.hypersurface),
    )?;

    let bound = match rep.bound {
        BoundCheck::Satisfied => "Satisfied",
        BoundCheck::Violated => "Violated",
        BoundCheck::HypothesisNotMet => "HypothesisNotMet",
    };
    let passed = rep.passed();
    let result = json!({
        "dimension": rep.dimension,
        "weights": inst.weights.weights(),
        "zeta": rep.zeta,
        "xi": rep.xi,
        "deg_f": rep.deg_f,
        "deg_v": rep.deg_v,
        "sigma1": rep.sigma1.to_string(),
        "alphas": inst.alphas,
        "betas": inst.betas,
        "extra_exponent": inst.extra_exponent,
        "annihilated": rep.annihilated,
        "cofactor_zero": rep.cofactor_zero,
        "hypothesis_met": rep.hypothesis_met,
        "bound": bound,
        "degree_gap_ok": rep.degree_gap_ok,
        "inequality_a": rep.inequality_a,
        "inequality_b": rep.inequality_b,
        "files": {
            "field": field_path.display().to_string(),
            "hypersurface": hyp_path.display().to_string(),
        },
    });
    let inputs = json!({ "pairs": flat, "extra": extra, "multiplier": multiplier });
    let status = if passed { "pass" } else { "fail" };
    let summary = format!(
        "zeta = {}, deg F = {}, deg V = {}: bound {bound}, {status}",
        rep.zeta, rep.deg_f, rep.deg_v
    );
    done(
        if passed { 0 } else { 1 },
        report("gen-example", inputs, result, status),
        summary,
    )
}

fn suite_json(rep: &SuiteReport) -> Value {
    let failures: Vec<Value> = rep
        .failures
        .iter()
        .take(MAX_LISTED_FAILURES)
        .map(|f| {
            json!({
                "seed": f.seed,
                "index": f.index,
                "check": f.check,
                "inputs": f.inputs,
                "lhs": f.lhs,
                "relation": f.relation,
                "rhs": f.rhs,
            })
        })
        .collect();
    json!({
        "suite": rep.suite.name(),
        "samples": rep.samples,
        "cases": rep.cases,
        "passed": rep.passed(),
        "failure_count": rep.failures.len(),
        "failures": failures,
    })
}

fn verify(name: &str, seed: u64, samples: usize) -> CmdResult {
    let suites: Vec<Suite> = if name == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![name.parse::<Suite>().map_err(|e| e.to_string())?]
    };
    let cfg = SampleConfig {
        seed,
        samples,
        ..SampleConfig::default()
    };
    let reports = suites
        .iter()
        .map(|&s| run_suite(s, &cfg))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    let passed = reports.iter().all(SuiteReport::passed);
    let summary = reports
        .iter()
        .map(|r| {
            format!(
                "{}: {} samples, {} checks, {} failures",
                r.suite,
                r.samples,
                r.cases,
                r.failures.len()
            )
        })
        .collect::<Vec<_>>()
        .join("\n");
    let result = json!({ "suites": reports.iter().map(suite_json).collect::<Vec<_>>() });
    let inputs = json!({ "suite": name, "seed": seed, "samples": samples });
    let status = if passed { "pass" } else { "fail" };
    done(
        if passed { 0 } else { 1 },
        report("verify", inputs, result, status),
        summary,
    )
}
