//! Seeded, exact finite checks of the inequalities behind the degree bound.
//!
//! Every sample derives its inputs from `(seed, suite, index)` alone, so a
//! report does not depend on evaluation order and any failure can be rerun
//! in isolation with [`run_case`].

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{pow, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{
    alpha_enclosure, default_width, milnor_sum_on_v, omega_poly, psi, q_poly, r_n, sigmas,
    UnivariatePoly,
};
use crate::error::{Error, Result};
use crate::poly::{rat, ratio};
use crate::weights::WeightSystem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub samples: usize,
    pub n_range: RangeInclusive<usize>,
    pub weight_max: u64,
    pub t_grid: Vec<BigRational>,
    /// Largest even `m` checked by the `Q_m` suite.
    pub m_max: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            seed: 0,
            samples: 100,
            n_range: 2..=8,
            weight_max: 20,
            t_grid: default_grid(),
            m_max: 20,
        }
    }
}

/// `{0, 1/10, ..., 10} ∪ {10^2, 10^6}`.
pub fn default_grid() -> Vec<BigRational> {
    let mut grid: Vec<BigRational> = (0..=100).map(|k| ratio(k, 10)).collect();
    grid.push(rat(100));
    grid.push(rat(1_000_000));
    grid
}

impl SampleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::InvalidArgument("samples must be >= 1".into()));
        }
        if self.n_range.is_empty() || *self.n_range.start() < 2 || *self.n_range.end() > 12 {
            return Err(Error::InvalidArgument(
                "n_range must lie within [2, 12]".into(),
            ));
        }
        if self.weight_max == 0 {
            return Err(Error::InvalidArgument("weight_max must be >= 1".into()));
        }
        if self.t_grid.iter().any(Signed::is_negative) {
            return Err(Error::InvalidArgument("t_grid must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    LemmaQ,
    LemmaSym,
    PropOmega,
    ProofItems,
    N2Boundary,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::LemmaQ,
        Suite::LemmaSym,
        Suite::PropOmega,
        Suite::ProofItems,
        Suite::N2Boundary,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::LemmaQ => "lemma-q",
            Suite::LemmaSym => "lemma-sym",
            Suite::PropOmega => "prop-omega",
            Suite::ProofItems => "proof-items",
            Suite::N2Boundary => "n2-boundary",
        }
    }

    fn stream(self) -> u64 {
        self as u64 + 1
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

/// One violated inequality with everything needed to reproduce it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub seed: u64,
    pub index: usize,
    pub check: String,
    pub inputs: String,
    pub lhs: String,
    pub relation: &'static str,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub samples: usize,
    /// Number of individual inequalities evaluated.
    pub cases: usize,
    pub failures: Vec<Failure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Debug, Default)]
struct CaseOutcome {
    checks: usize,
    failures: Vec<Failure>,
}

struct Recorder {
    seed: u64,
    index: usize,
    inputs: String,
    out: CaseOutcome,
}

impl Recorder {
    fn new(seed: u64, index: usize, inputs: impl Into<String>) -> Self {
        Recorder {
            seed,
            index,
            inputs: inputs.into(),
            out: CaseOutcome::default(),
        }
    }

    fn check<T: fmt::Display>(
        &mut self,
        check: &str,
        lhs: T,
        relation: &'static str,
        rhs: T,
        ok: bool,
    ) {
        self.out.checks += 1;
        if !ok {
            self.out.failures.push(Failure {
                seed: self.seed,
                index: self.index,
                check: check.to_string(),
                inputs: self.inputs.clone(),
                lhs: lhs.to_string(),
                relation,
                rhs: rhs.to_string(),
            });
        }
    }

    fn lt<T: fmt::Display + PartialOrd>(&mut self, check: &str, lhs: T, rhs: T) {
        let ok = lhs < rhs;
        self.check(check, lhs, "<", rhs, ok);
    }

    fn le<T: fmt::Display + PartialOrd>(&mut self, check: &str, lhs: T, rhs: T) {
        let ok = lhs <= rhs;
        self.check(check, lhs, "<=", rhs, ok);
    }

    fn eq<T: fmt::Display + PartialEq>(&mut self, check: &str, lhs: T, rhs: T) {
        let ok = lhs == rhs;
        self.check(check, lhs, "==", rhs, ok);
    }
}

fn case_rng(cfg: &SampleConfig, suite: Suite, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream((suite.stream() << 48) ^ index as u64);
    rng
}

fn random_weights<R: Rng>(rng: &mut R, n: usize, weight_max: u64) -> WeightSystem {
    let weights = (0..=n).map(|_| rng.gen_range(1..=weight_max)).collect();
    WeightSystem::new(weights).expect("positive weights")
}

fn fmt_weights(w: &WeightSystem) -> String {
    w.to_string()
}

/// Number of samples (case indices) a suite runs for `cfg`.
pub fn case_count(suite: Suite, cfg: &SampleConfig) -> usize {
    match suite {
        Suite::LemmaQ => cfg.m_max / 2,
        _ => cfg.samples,
    }
}

pub fn run_suite(suite: Suite, cfg: &SampleConfig) -> Result<SuiteReport> {
    cfg.validate()?;
    let samples = case_count(suite, cfg);
    let outcomes: Vec<CaseOutcome> = (0..samples)
        .into_par_iter()
        .map(|index| run_case_inner(suite, cfg, index))
        .collect();
    let mut report = SuiteReport {
        suite,
        samples,
        cases: 0,
        failures: Vec::new(),
    };
    for outcome in outcomes {
        report.cases += outcome.checks;
        report.failures.extend(outcome.failures);
    }
    Ok(report)
}

/// Reruns a single case, e.g. to reproduce a recorded failure.
pub fn run_case(suite: Suite, cfg: &SampleConfig, index: usize) -> Result<Vec<Failure>> {
    cfg.validate()?;
    Ok(run_case_inner(suite, cfg, index).failures)
}

fn run_case_inner(suite: Suite, cfg: &SampleConfig, index: usize) -> CaseOutcome {
    match suite {
        Suite::LemmaQ => lemma_q_case(cfg, index),
        Suite::LemmaSym => lemma_sym_case(cfg, index),
        Suite::PropOmega => prop_omega_case(cfg, index),
        Suite::ProofItems => proof_items_case(cfg, index),
        Suite::N2Boundary => n2_boundary_case(cfg, index),
    }
}

pub fn suite_lemma_q(cfg: &SampleConfig) -> Result<SuiteReport> {
    run_suite(Suite::LemmaQ, cfg)
}

pub fn suite_lemma_sym(cfg: &SampleConfig) -> Result<SuiteReport> {
    run_suite(Suite::LemmaSym, cfg)
}

pub fn suite_prop_omega(cfg: &SampleConfig) -> Result<SuiteReport> {
    run_suite(Suite::PropOmega, cfg)
}

pub fn suite_proof_items(cfg: &SampleConfig) -> Result<SuiteReport> {
    run_suite(Suite::ProofItems, cfg)
}

pub fn suite_n2_boundary(cfg: &SampleConfig) -> Result<SuiteReport> {
    run_suite(Suite::N2Boundary, cfg)
}

/// Lower bound `4(m+1) / ((m+2)^2 (t+1)^2)` for `Q_m(t)`, `m` even.
pub fn q_lower_bound(m: usize, t: &BigRational) -> BigRational {
    let m = m as i64;
    let t1 = t + rat(1);
    rat(4 * (m + 1)) / (rat((m + 2) * (m + 2)) * &t1 * &t1)
}

/// Case `index` checks `Q_m` for `m = 2(index + 1)` on the grid.
fn lemma_q_case(cfg: &SampleConfig, index: usize) -> CaseOutcome {
    let m = 2 * (index + 1);
    let q = q_poly(m).expect("m >= 1");
    let mut rec = Recorder::new(cfg.seed, index, "");
    for t in &cfg.t_grid {
        rec.inputs = format!("m={m} t={t}");
        let value = q.eval(t);
        rec.lt("Q_m(t) > 0", BigRational::zero(), value.clone());
        rec.le(
            "Q_m(t) >= 4(m+1)/((m+2)^2(t+1)^2)",
            q_lower_bound(m, t),
            value,
        );
    }
    rec.out
}

fn lemma_sym_case(cfg: &SampleConfig, index: usize) -> CaseOutcome {
    let mut rng = case_rng(cfg, Suite::LemmaSym, index);
    let n = rng.gen_range(cfg.n_range.clone());
    let w = random_weights(&mut rng, n, cfg.weight_max);
    let inputs = format!("w={}", fmt_weights(&w));
    let s = sigmas(&w);
    let mut rec = Recorder::new(cfg.seed, index, inputs);
    for k in 1..=n {
        rec.lt(
            &format!("(k+1) sigma_(k+1) < sigma_1 sigma_k, k={k}"),
            BigInt::from(k + 1) * &s[k + 1],
            &s[1] * &s[k],
        );
    }
    rec.out
}

/// Grid for `Omega_n` sign checks: the configured grid plus `[0, 10 sigma_1]`
/// in steps of `sigma_1 / 2`.
fn omega_grid(cfg: &SampleConfig, sigma1: &BigInt) -> Vec<BigRational> {
    let mut grid = cfg.t_grid.clone();
    let half = BigRational::new(sigma1.clone(), BigInt::from(2));
    grid.extend((0..=20).map(|k| &half * rat(k)));
    grid
}

fn prop_omega_case(cfg: &SampleConfig, index: usize) -> CaseOutcome {
    let mut rng = case_rng(cfg, Suite::PropOmega, index);
    let n = rng.gen_range(cfg.n_range.clone());
    let w = random_weights(&mut rng, n, cfg.weight_max);
    let s = sigmas(&w);
    let sigma1 = s[1].clone();
    let offset = [1i64, 2, 10][index % 3];
    let d = &sigma1 + offset;
    let d_i64 = i64::try_from(&d).expect("degree fits in i64");
    let inputs = format!("w={} d={d}", fmt_weights(&w));
    let omega = omega_poly(&w, d_i64).expect("n >= 2");
    let sign = if n % 2 == 1 { rat(1) } else { rat(-1) };
    let sigma_nm1 = BigRational::from_integer(s[n - 1].clone());
    let mut rec = Recorder::new(cfg.seed, index, inputs);
    for t in omega_grid(cfg, &sigma1) {
        let value = omega.eval(&t);
        rec.lt(
            &format!("(-1)^(n-1) Omega_n(t) > 0, t={t}"),
            BigRational::zero(),
            &sign * &value,
        );
        if n % 2 == 1 {
            rec.lt(
                &format!("Omega_n(t) > sigma_(n-1), t={t}"),
                sigma_nm1.clone(),
                value,
            );
        }
    }
    rec.out
}

fn proof_items_case(cfg: &SampleConfig, index: usize) -> CaseOutcome {
    let mut rng = case_rng(cfg, Suite::ProofItems, index);
    let odd: Vec<usize> = cfg
        .n_range
        .clone()
        .filter(|n| n % 2 == 1 && *n >= 3)
        .collect();
    if odd.is_empty() {
        return CaseOutcome::default();
    }
    let n = odd[rng.gen_range(0..odd.len())];
    let w = random_weights(&mut rng, n, cfg.weight_max);
    let sigma = BigRational::from_integer(sigmas(&w)[1].clone());
    // s = d - 1 with d >= sigma_1 + 1.
    let extra = rng.gen_range(0..=3 * cfg.weight_max * (n as u64 + 1));
    let s = &sigma + rat(extra as i64);
    let alpha = alpha_enclosure(n, &default_width()).expect("n >= 3");
    let t = &s + &alpha.hi * &sigma;
    let inputs = format!("n={n} w={} s={s} alpha_hi={}", fmt_weights(&w), alpha.hi);
    let mut rec = Recorder::new(cfg.seed, index, inputs);

    rec.lt("R_n(alpha_lo) < 0", r_n(n, &alpha.lo), BigRational::zero());
    rec.lt("R_n(alpha_hi) > 0", BigRational::zero(), r_n(n, &alpha.hi));

    // (II): t^n (t - sigma) >= s^n (s + sigma)
    rec.le(
        "s^n (s + sigma) <= t^n (t - sigma)",
        pow(s.clone(), n) * (&s + &sigma),
        pow(t.clone(), n) * (&t - &sigma),
    );
    // (I): (t/s)^(n-2k) >= (s + sigma/2k) / (t - sigma/2k), denominators cleared.
    for k in 1..=(n - 3) / 2 {
        let shift = &sigma / rat(2 * k as i64);
        let e = n - 2 * k;
        rec.le(
            &format!("s^(n-2k) (s + sigma/2k) <= t^(n-2k) (t - sigma/2k), k={k}"),
            pow(s.clone(), e) * (&s + &shift),
            pow(t.clone(), e) * (&t - &shift),
        );
    }
    rec.out
}

fn n2_boundary_case(cfg: &SampleConfig, index: usize) -> CaseOutcome {
    let mut rng = case_rng(cfg, Suite::N2Boundary, index);
    let w = random_weights(&mut rng, 2, cfg.weight_max);
    let lowest = 2 - w.max_pair_sum() as i64;
    let d = rng.gen_range(lowest..=lowest + 60);
    let s = sigmas(&w);
    let inputs = format!("w={} d={d}", fmt_weights(&w));
    let mut rec = Recorder::new(cfg.seed, index, inputs);

    let boundary = &s[1] + BigInt::from(d - 1);
    let expected = UnivariatePoly::new(vec![
        BigRational::zero(),
        BigRational::from_integer(boundary.clone()),
        rat(-1),
    ]);
    let p = psi(&w, d).expect("n = 2");
    rec.eq(
        "Psi(t) = -t^2 + (sigma_1 + d - 1) t",
        p.to_string(),
        expected.to_string(),
    );
    let at_boundary = BigRational::from_integer(boundary.clone());
    rec.eq(
        "Psi(sigma_1 + d - 1) = 0",
        p.eval(&at_boundary),
        BigRational::zero(),
    );

    // At the boundary degree no singularity of the foliation lies on V.
    let d0 = i64::try_from(&boundary).expect("fits in i64");
    let on_v = milnor_sum_on_v(&w, d, d0).expect("d0 >= 1");
    rec.eq(
        "milnor_sum_on_V(sigma_1 + d - 1) = 0",
        on_v,
        BigRational::zero(),
    );
    rec.out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small(seed: u64) -> SampleConfig {
        SampleConfig {
            seed,
            samples: 30,
            ..SampleConfig::default()
        }
    }

    #[test]
    fn suites_pass_on_small_runs() {
        for suite in Suite::ALL {
            let report = run_suite(suite, &small(3)).unwrap();
            assert!(report.passed(), "{suite}: {:?}", report.failures.first());
            assert!(report.cases > 0, "{suite}");
        }
    }

    #[test]
    fn lemma_q_examples() {
        let q2 = q_poly(2).unwrap();
        assert_eq!(q2.eval(&rat(0)), rat(2));
        assert_eq!(q2.eval(&rat(1)), rat(1));
        assert_eq!(q_lower_bound(2, &rat(1)), ratio(3, 16));
        assert_eq!(q_poly(4).unwrap().eval(&rat(0)), rat(2));
        assert_eq!(q_lower_bound(4, &rat(0)), ratio(5, 9));
    }

    #[test]
    fn proof_items_empty_range_for_n3() {
        let cfg = SampleConfig {
            n_range: 3..=3,
            samples: 5,
            ..SampleConfig::default()
        };
        let report = run_suite(Suite::ProofItems, &cfg).unwrap();
        // certificate (2) + item (II) per sample, no item (I) checks.
        assert_eq!(report.cases, 3 * 5);
        assert!(report.passed());

        let cfg = SampleConfig {
            n_range: 2..=2,
            ..cfg
        };
        assert_eq!(run_suite(Suite::ProofItems, &cfg).unwrap().cases, 0);
    }

    #[test]
    fn deterministic_reports() {
        let a = run_suite(Suite::LemmaSym, &small(11)).unwrap();
        let b = run_suite(Suite::LemmaSym, &small(11)).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn config_validation() {
        let bad = SampleConfig {
            samples: 0,
            ..SampleConfig::default()
        };
        assert!(run_suite(Suite::LemmaSym, &bad).is_err());
        let bad = SampleConfig {
            n_range: 1..=4,
            ..SampleConfig::default()
        };
        assert!(bad.validate().is_err());
        assert_eq!("prop-omega".parse::<Suite>(), Ok(Suite::PropOmega));
        assert!("nope".parse::<Suite>().is_err());
    }
}
