use std::fs;
use std::process::Command;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use qhfol_cli::{parse_rational, run_command, Outcome};
use serde_json::Value;

fn run(args: &str) -> Outcome {
    run_command(args.split_whitespace())
}

fn result(out: &Outcome) -> &Value {
    &out.report.as_ref().expect("report present")["result"]
}

fn rational(v: &Value) -> BigRational {
    let part = |key: &str| BigInt::from_str(v[key].as_str().expect("string field")).unwrap();
    let den = part("den");
    assert!(!den.is_zero());
    BigRational::new(part("num"), den)
}

#[test]
fn report_envelope_is_stable() {
    let out = run("sections-dim --weights 1 2 3 --deg 6");
    assert_eq!(out.code, 0);
    let report = out.report.unwrap();
    let keys: Vec<&str> = report
        .as_object()
        .unwrap()
        .keys()
        .map(String::as_str)
        .collect();
    assert_eq!(keys, ["command", "inputs", "result", "status", "version"]);
    assert_eq!(report["command"], "sections-dim");
    assert_eq!(report["result"]["dimension"], "7");
    assert_eq!(report["inputs"]["weights"], serde_json::json!([1, 2, 3]));
}

#[test]
fn alpha_report() {
    let out = run("alpha --n 5 --width 1/1000000");
    assert_eq!(out.code, 0);
    let r = result(&out);
    assert!(r["decimal"].as_str().unwrap().starts_with("0.3880"));
    let lo = rational(&r["enclosure"]["lo"]);
    let hi = rational(&r["enclosure"]["hi"]);
    assert!(lo < hi);
    assert!(&hi - &lo <= BigRational::new(1.into(), 1_000_000.into()));
    assert!(rational(&r["certificate"]["r_lo"]) < BigRational::zero());
    assert!(rational(&r["certificate"]["r_hi"]) > BigRational::zero());

    let even = run("alpha --n 4 --width 1e-6");
    assert_eq!(
        result(&even)["enclosure"],
        result(&run("alpha --n 3"))["enclosure"]
    );
    assert_eq!(run("alpha --n 2").code, 2);
    assert_eq!(run("alpha --n 3 --width 0").code, 2);
    assert_eq!(run("alpha --n 3 --width abc").code, 2);
}

#[test]
fn bound_reports() {
    let plane = run("bound --weights 1 1 1 --deg 4");
    assert_eq!(plane.code, 0);
    assert_eq!(result(&plane)["case"], "N2Exact");
    assert_eq!(
        rational(&result(&plane)["bound"]["exact"]),
        BigRational::from_integer(5.into())
    );

    let space = run("bound --weights 1 1 1 1 --deg 5");
    assert_eq!(result(&space)["case"], "NGe3Alpha");
    assert_eq!(result(&space)["hypothesis_met"], true);
    let lo = rational(&result(&space)["bound"]["enclosure"]["lo"]);
    assert!(lo > BigRational::from_integer(6.into()));
    assert_eq!(result(&space)["max_degree"], "6");

    let weak = run("bound --weights 1 1 1 1 --deg 2");
    assert_eq!(weak.code, 0);
    assert_eq!(weak.status(), Some("HypothesisNotMet"));
}

#[test]
fn check_bound_statuses_and_exit_codes() {
    let cases = [
        ("--weights 1 1 1 1 --deg 5 --deg-v 6", "Satisfied", 0),
        ("--weights 1 1 1 1 --deg 5 --deg-v 7", "Violated", 1),
        ("--weights 1 1 1 1 --deg 3 --deg-v 2", "HypothesisNotMet", 0),
        ("--weights 1 1 1 --deg 3 --deg-v 4", "Satisfied", 0),
        ("--weights 1 1 1 --deg 3 --deg-v 5", "Violated", 1),
    ];
    for (args, status, code) in cases {
        let out = run(&format!("check-bound {args}"));
        assert_eq!(out.status(), Some(status), "{args}");
        assert_eq!(out.code, code, "{args}");
    }
    let out = run("check-bound --weights 1 1 1 1 --deg 5 --deg-v 7");
    assert_eq!(
        rational(&result(&out)["r_q"]),
        BigRational::new(517.into(), 256.into())
    );
    assert_eq!(
        run("check-bound --weights 1 1 1 1 --deg 5 --deg-v 0").code,
        2
    );
}

#[test]
fn milnor_sum_values() {
    let out = run("milnor-sum --weights 1 1 1 --deg 3");
    assert_eq!(
        rational(&result(&out)["total"]),
        BigRational::from_integer(13.into())
    );
    let out = run("milnor-sum --weights 9 5 3 --deg -8 --deg-v 8");
    assert_eq!(out.code, 0);
    assert!(rational(&result(&out)["on_v"]).is_zero());
    assert_eq!(run("milnor-sum --weights 1 1 10 --deg -20").code, 2);
}

#[test]
fn gen_example_then_invariant() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    let out = run(&format!(
        "gen-example --pairs 3 5 1 7 --extra 2 --out-dir {out_dir}"
    ));
    assert_eq!(out.code, 0, "{}", out.summary);
    assert_eq!(result(&out)["zeta"], 210);
    assert_eq!(result(&out)["dimension"], 4);

    let field = dir.path().join("field.txt");
    let hyp = dir.path().join("hypersurface.txt");
    let inv = run(&format!(
        "invariant --field {} --hypersurface {}",
        field.display(),
        hyp.display()
    ));
    assert_eq!(inv.code, 0);
    assert_eq!(inv.status(), Some("Invariant"));
    assert_eq!(result(&inv)["cofactor"], "0");
    assert_eq!(result(&inv)["quasi_smoothness"], "QuasiSmooth");

    let other = dir.path().join("other.txt");
    fs::write(&other, "f: x0*x1 + x2^3\n").unwrap();
    let not = run(&format!(
        "invariant --field {} --hypersurface {}",
        field.display(),
        other.display()
    ));
    assert_eq!(not.code, 2, "x0*x1 + x2^3 is not quasi-homogeneous here");

    fs::write(&other, "f: x2^2 - x4\n").unwrap();
    let not = run(&format!(
        "invariant --field {} --hypersurface {}",
        field.display(),
        other.display()
    ));
    assert_eq!(not.code, 0);
    assert_eq!(not.status(), Some("NotInvariant"));
}

#[test]
fn invariant_reports_file_errors() {
    let dir = tempfile::tempdir().unwrap();
    let field = dir.path().join("field.txt");
    let hyp = dir.path().join("hyp.txt");
    fs::write(&field, "weights: 1 1\ndx0: x0\ndx1: x1^2\n").unwrap();
    fs::write(&hyp, "f: x0\n").unwrap();
    let out = run(&format!(
        "invariant --field {} --hypersurface {}",
        field.display(),
        hyp.display()
    ));
    assert_eq!(out.code, 2);
    assert!(out.summary.contains("field.txt"));
    let missing = run("invariant --field /nonexistent/f --hypersurface /nonexistent/h");
    assert_eq!(missing.code, 2);
}

#[test]
fn gen_example_rejects_bad_pairs() {
    assert_eq!(run("gen-example --pairs 3 5 1 6").code, 2);
    assert_eq!(run("gen-example --pairs 3 5 1 7 2").code, 2);
    assert_eq!(run("gen-example --pairs 3 5").code, 2);
}

#[test]
fn verify_suites() {
    let out = run("verify --suite all --seed 4 --samples 10");
    assert_eq!(out.code, 0);
    let suites = result(&out)["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 5);
    assert!(suites.iter().all(|s| s["passed"] == true));
    let again = run("verify --suite all --seed 4 --samples 10");
    assert_eq!(out.report, again.report);
    assert_eq!(run("verify --suite lemma-q").code, 0);
    assert_eq!(run("verify --suite nope").code, 2);
    assert_eq!(run("verify --suite lemma-sym --samples 0").code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run("").code, 2);
    assert_eq!(run("frobnicate").code, 2);
    assert_eq!(run("bound --weights 1 1 1").code, 2);
    assert_eq!(run("sections-dim --weights 1 --deg 3").code, 2);
    let help = run("--help");
    assert_eq!(help.code, 0);
    assert!(help.report.is_none());
}

#[test]
fn rational_inputs() {
    let r = |s: &str| parse_rational(s).unwrap();
    assert_eq!(r("1/1000000"), r("1e-6"));
    assert_eq!(r("0.000001"), r("1e-6"));
    assert_eq!(r("2.5"), BigRational::new(5.into(), 2.into()));
    assert_eq!(r("-3"), BigRational::from_integer((-3).into()));
    assert_eq!(r("1.5e2"), BigRational::from_integer(150.into()));
    for bad in ["", "e3", "1/0", "x", "1.2.3"] {
        assert!(parse_rational(bad).is_err(), "{bad}");
    }
}

#[test]
fn binary_prints_json_and_sets_exit_code() {
    let bin = env!("CARGO_BIN_EXE_qhfol");
    let out = Command::new(bin)
        .args([
            "check-bound",
            "--weights",
            "1",
            "1",
            "1",
            "1",
            "--deg",
            "5",
            "--deg-v",
            "7",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["status"], "Violated");
    assert!(String::from_utf8_lossy(&out.stderr).contains("Violated"));

    let out = Command::new(bin)
        .args(["alpha", "--n", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}
