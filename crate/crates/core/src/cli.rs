//! Command-line front end. [`run`] parses arguments, dispatches to the
//! library and writes the report; it returns the process exit code so that
//! the binary stays a one-liner and the whole surface is testable in-process.
//!
//! Exit codes: 0 success, 1 verification failure, 2 failed hypotheses,
//! 3 resource guard, 64 usage error.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use crate::arith::{witt_chi, witt_sum};
use crate::capability::{cover_spec, is_capable, verbal_center_descriptor, CapabilityError};
use crate::commutator::generate_basic;
use crate::group::GroupSpec;
use crate::multiplier::{
    divisibility_check, validate_hypotheses, Hypothesis, Mode, MultiplierError, MultiplierLimits, MultiplierQuery,
    MultiplierStructure, RankReport,
};
use crate::suites::{self, SuiteError, SuiteOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

/// Environment variable overriding the pair materialization bound.
pub const MAX_PAIRS_ENV: &str = "BAERMULT_MAX_PAIRS";

/// Largest basis listing the `basis` subcommand will print.
const MAX_BASIS_LISTING: u64 = 1_000_000;

#[derive(Debug, Parser)]
#[command(name = "baermult", version, about = "Outer commutator multipliers of nilpotent products of cyclic groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Enumerated,
    Printed,
    Both,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Enumerated => Mode::Enumerated,
            ModeArg::Printed => Mode::Printed,
            ModeArg::Both => Mode::Both,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Witt,
    Hall,
    Identity,
    Absorption,
    Struik,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// Number of infinite cyclic factors.
    #[arg(long, conflicts_with = "group")]
    pub m: Option<u32>,
    /// Orders r_1,...,r_t of the finite cyclic factors, comma separated.
    #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u64).range(2..), conflicts_with = "group")]
    pub torsion: Vec<u64>,
    /// Nilpotency degree of the product.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..), conflicts_with = "group")]
    pub n: Option<u32>,
    /// Compact form such as "Z^2 * Z11 @ n=2".
    #[arg(long)]
    pub group: Option<String>,
}

#[derive(Debug, Args)]
pub struct ClassArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub c1: Option<u32>,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub c2: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Number of basic commutators of a weight on an alphabet.
    Witt {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        weight: u32,
        #[arg(long)]
        alphabet: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the basic commutators in a weight range.
    Basis {
        #[arg(long)]
        alphabet: u32,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
        min_weight: u32,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_weight: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Structure of the [N_c1, N_c2]-multiplier.
    Mult {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value = "both")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also list every pair of A - C with its modulus (subject to the
        /// pair bound, see BAERMULT_MAX_PAIRS).
        #[arg(long)]
        list_pairs: bool,
    },
    /// [N_c1, N_c2]-capability verdict.
    Capable {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        class: ClassArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the oracle suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Class cap of the engine for the hall suite.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=8))]
        cap: u32,
        /// Alphabet size for the hall suite.
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=4))]
        alphabet: u32,
        /// Largest weight for the witt suite.
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u32).range(1..=16))]
        max_weight: u32,
        /// Largest alphabet for the witt and identity suites.
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=4))]
        max_alphabet: u32,
        /// Random samples per randomized check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// Outcome of one invocation before it is turned into an exit code.
enum Failure {
    Usage(String),
    Hypotheses { spec: Option<GroupSpec>, checks: Vec<Hypothesis> },
    Resource(String),
}

impl From<MultiplierError> for Failure {
    fn from(e: MultiplierError) -> Self {
        match e {
            MultiplierError::Hypotheses(checks) => Failure::Hypotheses { spec: None, checks },
            MultiplierError::ResourceGuard(msg) => Failure::Resource(msg),
            MultiplierError::BadParameter(msg) => Failure::Usage(msg),
        }
    }
}

impl From<CapabilityError> for Failure {
    fn from(e: CapabilityError) -> Self {
        match e {
            CapabilityError::Hypotheses(checks) => Failure::Hypotheses { spec: None, checks },
            CapabilityError::Engine(crate::hall::EngineError::ResourceGuard(msg)) => Failure::Resource(msg),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the invocation,
/// writing the report to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let first = e.to_string();
            let line = first.lines().next().unwrap_or("usage error").trim_start_matches("error: ");
            let _ = writeln!(err, "usage error: {line}");
            return EXIT_USAGE;
        }
    };
    let result = match cli.command {
        Command::Witt { weight, alphabet, format } => witt(weight, alphabet, format, out),
        Command::Basis { alphabet, min_weight, max_weight, format } => basis(alphabet, min_weight, max_weight, format, out),
        Command::Mult { group, class, mode, format, list_pairs } => mult(&group, &class, mode.into(), format, list_pairs, out),
        Command::Capable { group, class, format } => capable(&group, &class, format, out),
        Command::Verify { suite, cap, alphabet, max_weight, max_alphabet, samples, seed } => {
            return verify(suite, cap, alphabet, max_weight, max_alphabet, samples, seed, out, err);
        }
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Resource(msg)) => {
            let _ = writeln!(err, "resource guard: {msg}");
            EXIT_RESOURCE
        }
        Err(Failure::Hypotheses { spec, checks }) => {
            for h in checks.iter().filter(|h| !h.passed) {
                let _ = writeln!(err, "hypothesis failed: {}: {}", h.name, h.detail);
            }
            let payload = json!({
                "spec": spec.as_ref().map(spec_json),
                "hypotheses": hypotheses_json(&checks),
                "error": "hypotheses failed",
            });
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&payload).expect("serializable"));
            EXIT_HYPOTHESIS
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{text}").map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

fn witt(weight: u32, alphabet: u64, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let count = witt_chi(weight, alphabet).map_err(|e| Failure::Usage(e.to_string()))?;
    match format {
        Format::Text => emit(out, &count.to_string()),
        Format::Json => emit(out, &json!({"weight": weight, "alphabet": alphabet, "count": count.to_string()}).to_string()),
    }
}

fn basis(alphabet: u32, min_weight: u32, max_weight: u32, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let total = witt_sum(u64::from(alphabet), i64::from(min_weight), i64::from(max_weight));
    if total > BigUint::from(MAX_BASIS_LISTING) {
        return Err(Failure::Resource(format!("{total} basic commutators exceed the listing limit {MAX_BASIS_LISTING}")));
    }
    let list = generate_basic(alphabet, min_weight, max_weight);
    match format {
        Format::Text => {
            let lines: Vec<String> = list.iter().map(|c| format!("{}\t{c}", c.weight())).collect();
            emit(out, &lines.join("\n"))
        }
        Format::Json => {
            let items: Vec<Value> = list.iter().map(|c| json!({"weight": c.weight(), "commutator": c.to_string()})).collect();
            emit(out, &serde_json::to_string_pretty(&json!({"alphabet": alphabet, "basis": items})).expect("serializable"))
        }
    }
}

/// Builds the group from either the structural flags or `--group`.
/// Divisibility is checked here, before missing class parameters are
/// reported, so a bad torsion chain is always a hypothesis failure.
fn resolve_group(args: &GroupArgs) -> Result<GroupSpec, Failure> {
    let spec = match &args.group {
        Some(text) => GroupSpec::parse_expression(text).map_err(|e| Failure::Usage(e.to_string()))?,
        None => {
            let m = args.m.unwrap_or(0);
            let n = args.n.unwrap_or(1);
            let spec = GroupSpec::new(m, args.torsion.clone(), n).map_err(|e| Failure::Usage(e.to_string()))?;
            let chain = divisibility_check(&spec);
            if !chain.passed {
                // without --n the degree above is a placeholder, so the spec is not echoed
                let spec = args.n.is_some().then_some(spec);
                return Err(Failure::Hypotheses { spec, checks: vec![chain] });
            }
            if args.n.is_none() {
                return Err(Failure::Usage("missing required argument --n (or --group)".to_string()));
            }
            spec
        }
    };
    Ok(spec)
}

fn resolve_class(args: &ClassArgs) -> Result<(u32, u32), Failure> {
    match (args.c1, args.c2) {
        (Some(c1), Some(c2)) => Ok((c1, c2)),
        _ => Err(Failure::Usage("missing required arguments --c1 and --c2".to_string())),
    }
}

fn limits_from_env() -> Result<MultiplierLimits, Failure> {
    let mut limits = MultiplierLimits::default();
    if let Ok(raw) = std::env::var(MAX_PAIRS_ENV) {
        limits.max_pairs = raw
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{MAX_PAIRS_ENV} must be a nonnegative integer, got {raw:?}")))?;
    }
    Ok(limits)
}

pub fn spec_json(spec: &GroupSpec) -> Value {
    json!({"m": spec.m, "torsion": spec.torsion, "n": spec.n, "expression": spec.to_string()})
}

fn hypotheses_json(checks: &[Hypothesis]) -> Value {
    Value::Array(
        checks
            .iter()
            .map(|h| json!({"name": h.name, "passed": h.passed, "detail": h.detail}))
            .collect(),
    )
}

fn structure_json(s: &MultiplierStructure) -> Value {
    json!({
        "free_rank": s.free_rank.to_string(),
        "torsion": s.torsion.iter().map(|t| json!({"modulus": t.modulus, "multiplicity": t.multiplicity.to_string()})).collect::<Vec<_>>(),
    })
}

/// The JSON report of the `mult` subcommand.
pub fn report_json(report: &RankReport) -> Value {
    let mut obj = json!({
        "spec": spec_json(&report.spec),
        "c1": report.c1,
        "c2": report.c2,
        "mode": report.mode.as_str(),
        "hypotheses": hypotheses_json(&report.hypotheses),
        "result": report.enumerated.as_ref().map(structure_json),
    });
    let map = obj.as_object_mut().expect("object");
    if let Some(printed) = &report.as_printed {
        let mut p = structure_json(printed);
        if let Some((free, torsion)) = &report.printed_raw {
            p["raw"] = json!({
                "free_rank": free.to_string(),
                "torsion": torsion.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
            });
        }
        map.insert("as_printed".to_string(), p);
    }
    if report.mode == Mode::Both {
        map.insert(
            "discrepancies".to_string(),
            Value::Array(
                report
                    .discrepancies
                    .iter()
                    .map(|d| json!({"component": d.component, "enumerated": d.enumerated.to_string(), "printed": d.printed.to_string()}))
                    .collect(),
            ),
        );
    }
    obj
}

/// Aligned text rendering of a [`RankReport`].
pub fn report_text(report: &RankReport) -> String {
    let mut lines = vec![
        format!("group        {}", report.spec),
        format!("variety      [N_{}, N_{}]", report.c1, report.c2),
        format!("mode         {}", report.mode.as_str()),
    ];
    for h in &report.hypotheses {
        lines.push(format!("  {:<4} {:<22} {}", if h.passed { "ok" } else { "FAIL" }, h.name, h.detail));
    }
    if let Some(e) = &report.enumerated {
        lines.push(format!("enumerated   {e}   (normative)"));
    }
    if let Some(p) = &report.as_printed {
        lines.push(format!("as printed   {p}"));
    }
    if report.mode == Mode::Both {
        if report.discrepancies.is_empty() {
            lines.push("discrepancies none".to_string());
        }
        for d in &report.discrepancies {
            lines.push(format!("discrepancy  {:<12} enumerated {} printed {}", d.component, d.enumerated, d.printed));
        }
    }
    lines.join("\n")
}

fn mult(group: &GroupArgs, class: &ClassArgs, mode: Mode, format: Format, list_pairs: bool, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = resolve_group(group)?;
    let (c1, c2) = resolve_class(class)?;
    let checks = validate_hypotheses(&spec, c1, c2);
    if checks.iter().any(|h| !h.passed) {
        return Err(Failure::Hypotheses { spec: Some(spec), checks });
    }
    let query = MultiplierQuery::with_limits(spec, c1, c2, limits_from_env()?)?;
    let report = query.multiplier_structure(mode)?;
    // pairs are listed in (beta, alpha) order; free pairs carry no modulus
    let pairs: Option<Vec<(String, Option<u64>)>> = if list_pairs {
        let spec = query.spec();
        Some(
            query
                .enumerate_a_minus_c()?
                .into_iter()
                .map(|p| {
                    let modulus = p.max_torsion_index(spec).and_then(|j| spec.r(j));
                    (p.to_string(), modulus)
                })
                .collect(),
        )
    } else {
        None
    };
    match format {
        Format::Text => {
            let mut text = report_text(&report);
            for (pair, modulus) in pairs.iter().flatten() {
                text.push_str(&match modulus {
                    Some(r) => format!("\npair         {pair}   Z_{r}"),
                    None => format!("\npair         {pair}   Z"),
                });
            }
            emit(out, &text)
        }
        Format::Json => {
            let mut payload = report_json(&report);
            if let Some(pairs) = pairs {
                payload["pairs"] = Value::Array(pairs.into_iter().map(|(pair, modulus)| json!({"pair": pair, "modulus": modulus})).collect());
            }
            emit(out, &serde_json::to_string_pretty(&payload).expect("serializable"))
        }
    }
}

fn capable(group: &GroupArgs, class: &ClassArgs, format: Format, out: &mut dyn Write) -> Result<(), Failure> {
    let spec = resolve_group(group)?;
    let (c1, c2) = resolve_class(class)?;
    let verdict = is_capable(&spec, c1, c2).map_err(|e| match e {
        CapabilityError::Hypotheses(checks) => Failure::Hypotheses { spec: Some(spec.clone()), checks },
        other => other.into(),
    })?;
    let cover = cover_spec(&spec, c1, c2);
    let descriptor = verbal_center_descriptor(&cover, c1, c2)?;
    match format {
        Format::Text => {
            let mut lines = vec![
                format!("group        {spec}"),
                format!("variety      [N_{c1}, N_{c2}]"),
                format!("verdict      {} ({})", verdict.verdict.as_str(), verdict.witness),
                format!("V*(H)        {descriptor}   with H = {cover}"),
            ];
            lines.extend(descriptor.notes.iter().map(|n| format!("note         {n}")));
            emit(out, &lines.join("\n"))
        }
        Format::Json => {
            let payload = json!({
                "spec": spec_json(&spec),
                "c1": c1,
                "c2": c2,
                "hypotheses": hypotheses_json(&verdict.hypotheses),
                "verdict": verdict.verdict.as_str(),
                "witness": verdict.witness,
                "marginal_subgroup": {
                    "cover": spec_json(&cover),
                    "description": descriptor.to_string(),
                    "case": descriptor.case.label(),
                    "notes": descriptor.notes,
                },
            });
            emit(out, &serde_json::to_string_pretty(&payload).expect("serializable"))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    suite: Suite,
    cap: u32,
    alphabet: u32,
    max_weight: u32,
    max_alphabet: u32,
    samples: usize,
    seed: u64,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let wanted = |s: Suite| suite == Suite::All || suite == s;
    let mut runs: Vec<Result<SuiteOutcome, SuiteError>> = Vec::new();
    if wanted(Suite::Witt) {
        runs.push(Ok(suites::witt_suite(max_weight, max_alphabet)));
    }
    if wanted(Suite::Hall) {
        runs.push(suites::hall_suite(alphabet, cap, samples, seed));
    }
    if wanted(Suite::Identity) {
        runs.push(suites::identity_suite(7, max_alphabet.min(3)));
    }
    if wanted(Suite::Absorption) {
        runs.push(suites::absorption_suite());
    }
    if wanted(Suite::Struik) {
        runs.push(suites::struik_suite());
    }
    let mut all_passed = true;
    for run in runs {
        match run {
            Ok(outcome) => {
                let verdict = if outcome.passed() { "PASS" } else { "FAIL" };
                let _ = writeln!(out, "{verdict} {:<10} {} cases", outcome.name, outcome.cases);
                for f in &outcome.failures {
                    let _ = writeln!(out, "     {f}");
                }
                all_passed &= outcome.passed();
            }
            Err(SuiteError::Engine(crate::hall::EngineError::ResourceGuard(msg))) => {
                let _ = writeln!(err, "resource guard: {msg}");
                return EXIT_RESOURCE;
            }
            Err(e) => {
                let _ = writeln!(out, "FAIL {e}");
                all_passed = false;
            }
        }
    }
    if all_passed {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn invoke(args: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("baermult").chain(args.split_whitespace());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn witt_subcommand() {
        let (code, out, _) = invoke("witt --weight 6 --alphabet 2");
        assert_eq!((code, out.trim()), (0, "9"));
        let (code, out, _) = invoke("witt --weight 5 --alphabet 3 --format json");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["count"], "48");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(invoke("witt --weight 6").0, EXIT_USAGE);
        assert_eq!(invoke("witt --weight 6 --alphabet 2 --bogus").0, EXIT_USAGE);
        assert_eq!(invoke("mult --m 2 --torsion 1 --n 2 --c1 3 --c2 3").0, EXIT_USAGE);
        assert_eq!(invoke("mult --m 2 --n 2").0, EXIT_USAGE);
        let (code, _, err) = invoke("frobnicate");
        assert_eq!(code, EXIT_USAGE);
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn divisibility_is_a_hypothesis_failure() {
        let (code, _, err) = invoke("mult --m 2 --torsion 6,4");
        assert_eq!(code, EXIT_HYPOTHESIS);
        assert!(err.contains("4 does not divide 6"), "{err}");
    }

    #[test]
    fn mult_json_schema() {
        let (code, out, _) = invoke("mult --m 2 --torsion 11 --n 2 --c1 3 --c2 3 --mode both --format json");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"]["free_rank"], "36");
        assert_eq!(v["result"]["torsion"][0]["modulus"], 11);
        assert_eq!(v["result"]["torsion"][0]["multiplicity"], "2109");
        assert!(v["as_printed"].is_object());
        assert!(v["discrepancies"].is_array());
        assert_eq!(v["spec"]["torsion"][0], 11);
    }

    #[test]
    fn group_sugar_matches_flags() {
        let a = invoke("mult --group Z^2*Z11@n=2 --c1 3 --c2 3 --format json");
        let b = invoke("mult --m 2 --torsion 11 --n 2 --c1 3 --c2 3 --format json");
        assert_eq!(a, b);
        assert_eq!(invoke("mult --group Z^2@n=2 --m 2 --c1 3 --c2 3").0, EXIT_USAGE);
    }

    #[test]
    fn hypothesis_failures_list_each_check_once() {
        let (code, out, err) = invoke("mult --m 2 --torsion 30 --n 4 --c1 3 --c2 3");
        assert_eq!(code, EXIT_HYPOTHESIS);
        assert_eq!(err.lines().count(), 2);
        assert_eq!(err.matches("window_gap").count(), 1);
        assert!(err.contains("primes 2, 3, 5 divide r_1 = 30"));
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["hypotheses"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn capable_subcommand() {
        let (code, out, _) = invoke("capable --m 1 --torsion 25 --n 1 --c1 1 --c2 1 --format json");
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["verdict"], "Unknown");
        let (code, out, _) = invoke("capable --m 0 --torsion 25,25 --n 1 --c1 1 --c2 1");
        assert_eq!(code, 0);
        assert!(out.contains("Capable (m=0 ∧ r_1=r_2)"), "{out}");
    }

    #[test]
    fn basis_subcommand() {
        let (code, out, _) = invoke("basis --alphabet 2 --max-weight 3");
        assert_eq!(code, 0);
        assert_eq!(out.trim().lines().collect::<Vec<_>>(), ["1\tx1", "1\tx2", "2\t[x2,x1]", "3\t[[x2,x1],x1]", "3\t[[x2,x1],x2]"]);
        assert_eq!(invoke("basis --alphabet 4 --max-weight 14").0, EXIT_RESOURCE);
    }

    #[test]
    fn verify_subcommand() {
        let (code, out, _) = invoke("verify --suite witt --max-weight 10 --max-alphabet 3");
        assert_eq!(code, 0, "{out}");
        assert!(out.starts_with("PASS witt"));
        let (code, out, _) = invoke("verify --suite hall --cap 4 --alphabet 2 --samples 50");
        assert_eq!(code, 0, "{out}");
    }
}
