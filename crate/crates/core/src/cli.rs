//! Command implementations behind the `hyperjac` binary.
//!
//! Each command returns its text output together with an exit status so
//! that it can be tested without spawning a process:
//!
//! | status | meaning                                         |
//! |--------|-------------------------------------------------|
//! | 0      | success                                         |
//! | 1      | degenerate input or other mathematical failure  |
//! | 2      | usage, parse or validation error                |
//!
//! `selftest` and `bench` also produce JSON reports. Both carry a
//! top-level `"schema": 1`; the human-readable text is not a stable format.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cantor::{cantor_add, CantorSum};
use crate::curve::{Curve, CurveError};
use crate::field::{FieldError, FieldModulus};
use crate::grouplaw::{self, GroupLawError};
use crate::mumford::{is_on_z, parse_literal, MumfordDivisor, MumfordError};
use crate::rng::derive_seed;

pub const REPORT_SCHEMA: u32 = 1;
pub const MAX_SELFTEST_GENUS: usize = 12;
/// Translation attempts used by `add --retry-translation`.
pub const TRANSLATION_RETRIES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    Degenerate = 1,
    Usage = 2,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutput {
    pub text: String,
    pub status: ExitStatus,
}

impl CommandOutput {
    fn ok(text: String) -> Self {
        CommandOutput {
            text,
            status: ExitStatus::Ok,
        }
    }

    fn degenerate(text: String) -> Self {
        CommandOutput {
            text,
            status: ExitStatus::Degenerate,
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        CommandOutput {
            text: format!("error: {err}\n"),
            status: ExitStatus::Usage,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Divisor(#[from] MumfordError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0}")]
    Usage(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    Explicit,
    Cantor,
    #[default]
    Both,
}

impl FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "explicit" => Ok(Method::Explicit),
            "cantor" => Ok(Method::Cantor),
            "both" => Ok(Method::Both),
            other => Err(format!(
                "unknown method {other:?} (expected explicit, cantor or both)"
            )),
        }
    }
}

fn load(
    curve_text: &str,
    divisors: &[&str],
) -> Result<(Arc<Curve>, Vec<MumfordDivisor>), CliError> {
    let curve = Arc::new(Curve::parse(curve_text)?);
    let divs = divisors
        .iter()
        .map(|s| MumfordDivisor::parse(curve.clone(), s))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((curve, divs))
}

fn describe_degenerate(err: &GroupLawError) -> String {
    match err.stage() {
        Some(stage) => format!("degenerate: {} ({stage}): {err}", err.name()),
        None => format!("degenerate: {}: {err}", err.name()),
    }
}

fn describe_cantor(sum: &CantorSum) -> String {
    match sum {
        CantorSum::Generic(d) => d.to_string(),
        CantorSum::Subgeneric(r) => {
            format!("subgeneric (weight {}): u={}; v={}", r.weight(), r.u, r.v)
        }
    }
}

/// `add --curve FILE --d1 STR --d2 STR [--method M] [--retry-translation] [--seed N]`.
pub fn cmd_add(
    curve_text: &str,
    d1: &str,
    d2: &str,
    method: Method,
    retry_translation: bool,
    seed: u64,
) -> CommandOutput {
    let (_, divs) = match load(curve_text, &[d1, d2]) {
        Ok(x) => x,
        Err(e) => return CommandOutput::usage(e),
    };
    let (a, b) = (&divs[0], &divs[1]);
    let explicit = || {
        if retry_translation {
            grouplaw::add_translated(a, b, TRANSLATION_RETRIES, seed).map(|t| t.sum)
        } else {
            grouplaw::add(a, b)
        }
    };
    let cantor = || cantor_add(a, b).expect("same curve");
    match method {
        Method::Explicit => match explicit() {
            Ok(sum) => CommandOutput::ok(format!("{sum}\n")),
            Err(e) => CommandOutput::degenerate(format!("{}\n", describe_degenerate(&e))),
        },
        Method::Cantor => {
            let sum = cantor();
            let text = format!("{}\n", describe_cantor(&sum));
            match sum {
                CantorSum::Generic(_) => CommandOutput::ok(text),
                CantorSum::Subgeneric(_) => CommandOutput::degenerate(text),
            }
        }
        Method::Both => {
            let e = explicit();
            let c = cantor();
            let mut text = String::new();
            match &e {
                Ok(sum) => writeln!(text, "explicit: {sum}").unwrap(),
                Err(err) => writeln!(text, "explicit: {}", describe_degenerate(err)).unwrap(),
            }
            writeln!(text, "cantor: {}", describe_cantor(&c)).unwrap();
            let agree = matches!((&e, &c), (Ok(x), CantorSum::Generic(y)) if x == y);
            let verdict = match (&e, agree) {
                (Err(_), _) => "EXPLICIT-DEGENERATE",
                (Ok(_), true) => "AGREE",
                (Ok(_), false) => "DISAGREE",
            };
            writeln!(text, "verdict: {verdict}").unwrap();
            if agree {
                CommandOutput::ok(text)
            } else {
                CommandOutput::degenerate(text)
            }
        }
    }
}

/// `random --curve FILE --seed N`.
pub fn cmd_random(curve_text: &str, seed: u64) -> CommandOutput {
    let curve = match Curve::parse(curve_text) {
        Ok(c) => Arc::new(c),
        Err(e) => return CommandOutput::usage(e),
    };
    match MumfordDivisor::random(curve, seed, false) {
        Ok(d) => CommandOutput::ok(format!("{d}\n")),
        Err(e) => CommandOutput::degenerate(format!("error: {e}\n")),
    }
}

/// `check --curve FILE --d STR`: chart membership and the cofactor `w`.
pub fn cmd_check(curve_text: &str, d: &str) -> CommandOutput {
    let curve = match Curve::parse(curve_text) {
        Ok(c) => c,
        Err(e) => return CommandOutput::usage(e),
    };
    let result = parse_literal(curve.modulus(), d).and_then(|(u, v)| is_on_z(&curve, &u, &v));
    match result {
        Ok(Some(w)) => CommandOutput::ok(format!(
            "on-Z: true\nw={}\n",
            w.w.to_padded_string(curve.genus() + 2)
        )),
        Ok(None) => CommandOutput::degenerate("on-Z: false\n".into()),
        Err(e) => CommandOutput::usage(e),
    }
}

/// `neg --curve FILE --d STR`.
pub fn cmd_neg(curve_text: &str, d: &str) -> CommandOutput {
    match load(curve_text, &[d]) {
        Ok((_, divs)) => CommandOutput::ok(format!("{}\n", grouplaw::negate(&divs[0]))),
        Err(e) => CommandOutput::usage(e),
    }
}

/// `double --curve FILE --d STR --seed N`.
pub fn cmd_double(curve_text: &str, d: &str, seed: u64) -> CommandOutput {
    let (_, divs) = match load(curve_text, &[d]) {
        Ok(x) => x,
        Err(e) => return CommandOutput::usage(e),
    };
    match grouplaw::double(&divs[0], seed) {
        Ok(sum) => CommandOutput::ok(format!("{sum}\n")),
        Err(e) => CommandOutput::degenerate(format!("{}\n", describe_degenerate(&e))),
    }
}

/// One seeded differential-test instance: a random curve and two random divisors.
pub fn trial_instance(
    modulus: FieldModulus,
    genus: usize,
    trial_seed: u64,
) -> Result<(Arc<Curve>, MumfordDivisor, MumfordDivisor), CliError> {
    let curve = Arc::new(Curve::random(modulus, genus, derive_seed(trial_seed, 0))?);
    let d1 = MumfordDivisor::random(curve.clone(), derive_seed(trial_seed, 1), false)?;
    let d2 = MumfordDivisor::random(curve.clone(), derive_seed(trial_seed, 2), false)?;
    Ok((curve, d1, d2))
}

/// Seed of trial `trial` at genus `genus` under the run seed `seed`.
pub fn trial_seed(seed: u64, genus: usize, trial: usize) -> u64 {
    derive_seed(derive_seed(seed, genus as u64), trial as u64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SelftestConfig {
    pub genus_max: usize,
    pub trials: usize,
    pub seed: u64,
    pub modulus: u64,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        SelftestConfig {
            genus_max: 8,
            trials: 200,
            seed: 1,
            modulus: 10007,
        }
    }
}

impl SelftestConfig {
    fn validate(&self) -> Result<FieldModulus, CliError> {
        if self.genus_max == 0 || self.genus_max > MAX_SELFTEST_GENUS {
            return Err(CliError::Usage(format!(
                "genus-max must lie in 1..={MAX_SELFTEST_GENUS}"
            )));
        }
        if self.trials == 0 {
            return Err(CliError::Usage("trials must be at least 1".into()));
        }
        Ok(FieldModulus::new(self.modulus)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialOutcome {
    pub genus: usize,
    pub trial: usize,
    pub seed: u64,
    /// `ok`, `degenerate:<stage>` or `oracle-mismatch`.
    pub outcome: String,
    /// Error tag for degenerate trials.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    /// Cantor's sum has weight below `g`.
    pub subgeneric: bool,
    pub explicit_ns: u64,
    pub cantor_ns: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GenusSummary {
    pub genus: usize,
    pub trials: usize,
    pub ok: usize,
    pub degenerate: usize,
    pub mismatches: usize,
    pub subgeneric: usize,
    pub degeneracy_rate: f64,
    /// Degenerate trials per error tag.
    pub degenerate_by_error: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema: u32,
    pub kind: String,
    pub modulus: u64,
    pub seed: u64,
    pub genus_max: usize,
    pub trials: usize,
    pub total_mismatches: usize,
    pub passed: bool,
    pub genera: Vec<GenusSummary>,
    pub outcomes: Vec<TrialOutcome>,
}

impl RunReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "selftest p={} seed={} trials/genus={}",
            self.modulus, self.seed, self.trials
        )
        .unwrap();
        writeln!(
            s,
            "genus  trials     ok  degenerate  subgeneric  mismatches   rate"
        )
        .unwrap();
        for g in &self.genera {
            writeln!(
                s,
                "{:>5}  {:>6}  {:>5}  {:>10}  {:>10}  {:>10}  {:>5.2}%",
                g.genus,
                g.trials,
                g.ok,
                g.degenerate,
                g.subgeneric,
                g.mismatches,
                100.0 * g.degeneracy_rate
            )
            .unwrap();
            for (tag, n) in &g.degenerate_by_error {
                writeln!(s, "         {tag}: {n}").unwrap();
            }
        }
        writeln!(
            s,
            "{} ({} mismatches)",
            if self.passed { "PASS" } else { "FAIL" },
            self.total_mismatches
        )
        .unwrap();
        s
    }
}

/// Runs one differential trial.
pub fn run_trial(
    modulus: FieldModulus,
    genus: usize,
    trial: usize,
    seed: u64,
) -> Result<TrialOutcome, CliError> {
    let (_, d1, d2) = trial_instance(modulus, genus, seed)?;
    let t0 = Instant::now();
    let explicit = grouplaw::add(&d1, &d2);
    let explicit_ns = t0.elapsed().as_nanos() as u64;
    let t1 = Instant::now();
    let oracle = cantor_add(&d1, &d2).expect("same curve");
    let cantor_ns = t1.elapsed().as_nanos() as u64;
    let subgeneric = matches!(oracle, CantorSum::Subgeneric(_));
    let (outcome, error) = match (&explicit, &oracle) {
        (Ok(x), CantorSum::Generic(y)) if x == y => ("ok".to_string(), None),
        (Ok(_), _) => ("oracle-mismatch".to_string(), None),
        (Err(e), _) => (
            format!(
                "degenerate:{}",
                e.stage().map_or("input".to_string(), |s| s.to_string())
            ),
            Some(e.name().to_string()),
        ),
    };
    Ok(TrialOutcome {
        genus,
        trial,
        seed,
        outcome,
        error,
        subgeneric,
        explicit_ns,
        cantor_ns,
    })
}

/// Differential sweep of the explicit law against Cantor's algorithm.
pub fn selftest(config: &SelftestConfig) -> Result<RunReport, CliError> {
    let modulus = config.validate()?;
    let mut outcomes = Vec::new();
    let mut genera = Vec::new();
    for genus in 1..=config.genus_max {
        let mut summary = GenusSummary {
            genus,
            trials: config.trials,
            ok: 0,
            degenerate: 0,
            mismatches: 0,
            subgeneric: 0,
            degeneracy_rate: 0.0,
            degenerate_by_error: BTreeMap::new(),
        };
        for trial in 0..config.trials {
            let out = run_trial(modulus, genus, trial, trial_seed(config.seed, genus, trial))?;
            match out.outcome.as_str() {
                "ok" => summary.ok += 1,
                "oracle-mismatch" => summary.mismatches += 1,
                _ => {
                    summary.degenerate += 1;
                    let tag = out.error.clone().unwrap_or_default();
                    *summary.degenerate_by_error.entry(tag).or_insert(0) += 1;
                }
            }
            summary.subgeneric += out.subgeneric as usize;
            outcomes.push(out);
        }
        summary.degeneracy_rate = summary.degenerate as f64 / config.trials as f64;
        genera.push(summary);
    }
    let total_mismatches = genera.iter().map(|g| g.mismatches).sum();
    Ok(RunReport {
        schema: REPORT_SCHEMA,
        kind: "selftest".into(),
        modulus: config.modulus,
        seed: config.seed,
        genus_max: config.genus_max,
        trials: config.trials,
        total_mismatches,
        passed: total_mismatches == 0,
        genera,
        outcomes,
    })
}

pub type BenchConfig = SelftestConfig;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub genus: usize,
    pub trials: usize,
    pub explicit_failures: usize,
    pub explicit_median_ns: u64,
    pub explicit_p90_ns: u64,
    pub cantor_median_ns: u64,
    pub cantor_p90_ns: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub schema: u32,
    pub kind: String,
    pub modulus: u64,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(
            s,
            "bench p={} seed={} (ns per addition)",
            self.modulus, self.seed
        )
        .unwrap();
        writeln!(
            s,
            "genus  trials  explicit median      p90  cantor median      p90  failures"
        )
        .unwrap();
        for r in &self.rows {
            writeln!(
                s,
                "{:>5}  {:>6}  {:>15}  {:>7}  {:>13}  {:>7}  {:>8}",
                r.genus,
                r.trials,
                r.explicit_median_ns,
                r.explicit_p90_ns,
                r.cantor_median_ns,
                r.cantor_p90_ns,
                r.explicit_failures
            )
            .unwrap();
        }
        s
    }

    /// Parses a bench JSON document and checks it against schema 1.
    pub fn from_json(json: &str) -> Result<BenchReport, String> {
        let report: BenchReport = serde_json::from_str(json).map_err(|e| e.to_string())?;
        if report.schema != REPORT_SCHEMA {
            return Err(format!("unsupported schema {}", report.schema));
        }
        if report.kind != "bench" {
            return Err(format!("expected kind \"bench\", found {:?}", report.kind));
        }
        for (i, row) in report.rows.iter().enumerate() {
            if row.genus != i + 1 {
                return Err(format!("row {i} has genus {}", row.genus));
            }
            if row.explicit_median_ns > row.explicit_p90_ns
                || row.cantor_median_ns > row.cantor_p90_ns
            {
                return Err(format!("row {i}: median exceeds p90"));
            }
        }
        Ok(report)
    }
}

fn percentile(sorted: &[u64], q: f64) -> u64 {
    if sorted.is_empty() {
        return 0;
    }
    let idx = ((sorted.len() - 1) as f64 * q).round() as usize;
    sorted[idx]
}

/// Wall-clock timing of explicit and Cantor additions per genus.
pub fn bench(config: &BenchConfig) -> Result<BenchReport, CliError> {
    let modulus = config.validate()?;
    let mut rows = Vec::new();
    for genus in 1..=config.genus_max {
        let mut explicit = Vec::with_capacity(config.trials);
        let mut cantor = Vec::with_capacity(config.trials);
        let mut failures = 0;
        for trial in 0..config.trials {
            let (_, d1, d2) =
                trial_instance(modulus, genus, trial_seed(config.seed, genus, trial))?;
            let t0 = Instant::now();
            let res = grouplaw::add(&d1, &d2);
            let dt = t0.elapsed().as_nanos() as u64;
            match res {
                Ok(_) => explicit.push(dt),
                Err(_) => failures += 1,
            }
            let t1 = Instant::now();
            let _ = cantor_add(&d1, &d2);
            cantor.push(t1.elapsed().as_nanos() as u64);
        }
        explicit.sort_unstable();
        cantor.sort_unstable();
        rows.push(BenchRow {
            genus,
            trials: config.trials,
            explicit_failures: failures,
            explicit_median_ns: percentile(&explicit, 0.5),
            explicit_p90_ns: percentile(&explicit, 0.9),
            cantor_median_ns: percentile(&cantor, 0.5),
            cantor_p90_ns: percentile(&cantor, 0.9),
        });
    }
    Ok(BenchReport {
        schema: REPORT_SCHEMA,
        kind: "bench".into(),
        modulus: config.modulus,
        seed: config.seed,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const CURVE: &str = "p = 7\ng = 1\nf = [1,0,0,1]\n";

    #[test]
    fn add_both_agrees() {
        let out = cmd_add(
            CURVE,
            "u=[5,1]; v=[3]",
            "u=[6,1]; v=[3]",
            Method::Both,
            false,
            0,
        );
        assert_eq!(out.status, ExitStatus::Ok);
        assert_eq!(
            out.text,
            "explicit: u=[3,1]; v=[4]\ncantor: u=[3,1]; v=[4]\nverdict: AGREE\n"
        );
    }

    #[test]
    fn add_exit_codes() {
        let same = cmd_add(
            CURVE,
            "u=[5,1]; v=[3]",
            "u=[5,1]; v=[3]",
            Method::Explicit,
            false,
            0,
        );
        assert_eq!(same.status, ExitStatus::Degenerate);
        assert!(same.text.starts_with("degenerate: SingularM"));

        let inverse = cmd_add(
            CURVE,
            "u=[5,1]; v=[3]",
            "u=[5,1]; v=[4]",
            Method::Cantor,
            false,
            0,
        );
        assert_eq!(inverse.status, ExitStatus::Degenerate);
        assert!(inverse.text.starts_with("subgeneric (weight 0)"));

        let bad = cmd_add(
            "p = 7\ng = 1\n",
            "u=[5,1]; v=[3]",
            "u=[6,1]; v=[3]",
            Method::Both,
            false,
            0,
        );
        assert_eq!(bad.status, ExitStatus::Usage);
        let off = cmd_add(
            CURVE,
            "u=[5,1]; v=[0]",
            "u=[6,1]; v=[3]",
            Method::Both,
            false,
            0,
        );
        assert_eq!(off.status, ExitStatus::Usage);
    }

    #[test]
    fn add_with_translation() {
        let plain = cmd_add(
            CURVE,
            "u=[5,1]; v=[3]",
            "u=[0,1]; v=[1]",
            Method::Explicit,
            false,
            0,
        );
        assert_eq!(plain.status, ExitStatus::Degenerate);
        assert!(plain.text.contains("ZeroOmega"));
        let retried = cmd_add(
            CURVE,
            "u=[5,1]; v=[3]",
            "u=[0,1]; v=[1]",
            Method::Both,
            true,
            3,
        );
        assert_eq!(retried.status, ExitStatus::Ok);
        assert!(retried.text.ends_with("verdict: AGREE\n"));
    }

    #[test]
    fn small_commands() {
        let check = cmd_check(CURVE, "u=[5,1]; v=[3]");
        assert_eq!(check.status, ExitStatus::Ok);
        assert_eq!(check.text, "on-Z: true\nw=[4,2,1]\n");
        assert_eq!(
            cmd_check(CURVE, "u=[5,1]; v=[0]").status,
            ExitStatus::Degenerate
        );
        assert_eq!(
            cmd_check(CURVE, "u=[1,0,1]; v=[0]").status,
            ExitStatus::Usage
        );

        let neg = cmd_neg(CURVE, "u=[5,1]; v=[3]");
        assert_eq!(neg.text, "u=[5,1]; v=[4]\n");
        let back = cmd_neg(CURVE, neg.text.trim());
        assert_eq!(back.text, "u=[5,1]; v=[3]\n");

        let r1 = cmd_random(CURVE, 9);
        assert_eq!(r1, cmd_random(CURVE, 9));
        assert_eq!(cmd_check(CURVE, r1.text.trim()).status, ExitStatus::Ok);

        let dbl = cmd_double(CURVE, "u=[5,1]; v=[3]", 4);
        let via_cantor = cmd_add(
            CURVE,
            "u=[5,1]; v=[3]",
            "u=[5,1]; v=[3]",
            Method::Cantor,
            false,
            0,
        );
        assert_eq!(dbl.status, ExitStatus::Ok);
        assert_eq!(dbl.text, via_cantor.text);
    }

    #[test]
    fn method_parsing() {
        assert_eq!("both".parse::<Method>(), Ok(Method::Both));
        assert_eq!("explicit".parse::<Method>(), Ok(Method::Explicit));
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn selftest_is_reproducible() {
        let cfg = SelftestConfig {
            genus_max: 3,
            trials: 1,
            seed: 42,
            modulus: 10007,
        };
        let a = selftest(&cfg).unwrap();
        let b = selftest(&cfg).unwrap();
        let strip = |r: &RunReport| {
            r.outcomes
                .iter()
                .map(|o| (o.seed, o.outcome.clone(), o.error.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(strip(&a), strip(&b));
        assert!(a.passed);
        assert_eq!(a.genera.len(), 3);
    }

    #[test]
    fn selftest_rejects_bad_config() {
        let mut cfg = SelftestConfig::default();
        cfg.genus_max = 13;
        assert!(matches!(selftest(&cfg), Err(CliError::Usage(_))));
        cfg.genus_max = 2;
        cfg.trials = 0;
        assert!(matches!(selftest(&cfg), Err(CliError::Usage(_))));
        cfg.trials = 1;
        cfg.modulus = 10005;
        assert!(matches!(selftest(&cfg), Err(CliError::Field(_))));
    }

    #[test]
    fn bench_json_round_trip() {
        let cfg = BenchConfig {
            genus_max: 2,
            trials: 5,
            seed: 1,
            modulus: 10007,
        };
        let report = bench(&cfg).unwrap();
        assert_eq!(report.rows.len(), 2);
        let json = serde_json::to_string(&report).unwrap();
        assert_eq!(BenchReport::from_json(&json).unwrap(), report);
        assert!(BenchReport::from_json(&json.replace("\"schema\":1", "\"schema\":2")).is_err());
        assert!(BenchReport::from_json("{}").is_err());
    }
}
