//! Command-line front end: counting, enumeration, sequence emission,
//! identity verification, and OEIS comparison.
//!
//! Exit codes: 0 success / AGREE / verification passed, 1 mismatch or
//! failed verification, 2 usage or environment errors that prevent the
//! computation from running.

use std::ffi::OsString;
use std::num::NonZeroUsize;
use std::time::{Duration, Instant};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use thiserror::Error;

use crate::enumerate::{
    count_family, count_lambda, enumerate_family, CountReport, EnumerateError, EnumerationConfig,
};
use crate::family::{Family, FamilyKind};
use crate::matrix::{BinaryMatrix, MAX_WIDTH};
use crate::oeis::{compare_sequence, fetch_bfile, parse_bfile, valid_sequence_id, OeisError, Verdict};
use crate::structure::{
    build_delta2, compositions, decompose_delta2, delta2_count, fibonacci,
    gamma_n_minus_2_count, lambda2_count_formula, StructureError, FORMULA_LIMIT,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Enumerate(#[from] EnumerateError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Oeis(#[from] OeisError),
}

#[derive(Parser)]
#[command(
    name = "lexmat",
    version,
    about = "Count, enumerate and structurally analyze binary matrices with \
             constant line sums and lexicographically ordered rows and columns"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count a family, by enumeration or a structural shortcut
    Count {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short)]
        n: u64,
        #[arg(short, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = MethodArg::Enum)]
        method: MethodArg,
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// List every matrix of a family in ascending row-code order
    Enumerate {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(short)]
        n: u64,
        #[arg(short, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        max_results: Option<NonZeroUsize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Emit the counting sequence for n = 1..n-max
    Sequence {
        #[arg(long, value_enum)]
        family: OrderedFamilyArg,
        #[arg(short, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = SeqFormatArg::Text)]
        format: SeqFormatArg,
    },
    /// Re-derive a structural identity over a parameter range
    Verify {
        #[arg(value_enum)]
        check: CheckArg,
        #[arg(long)]
        n_max: u64,
    },
    /// Compare a computed sequence against an OEIS b-file
    #[command(name = "oeis-compare")]
    OeisCompare {
        #[arg(long)]
        id: String,
        #[arg(long, value_enum)]
        family: OrderedFamilyArg,
        #[arg(short, allow_hyphen_values = true)]
        k: i64,
        #[arg(long)]
        n_max: u64,
        /// Local path or http(s) URL; default is the bundled fixture
        #[arg(long)]
        source: Option<String>,
        /// Added to the computed index n to address the reference
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        offset: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Gamma,
    Delta,
    Lambda,
}

impl FamilyArg {
    fn kind(self) -> FamilyKind {
        match self {
            FamilyArg::Gamma => FamilyKind::Gamma,
            FamilyArg::Delta => FamilyKind::Delta,
            FamilyArg::Lambda => FamilyKind::Lambda,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderedFamilyArg {
    Gamma,
    Delta,
}

impl OrderedFamilyArg {
    fn kind(self) -> FamilyKind {
        match self {
            OrderedFamilyArg::Gamma => FamilyKind::Gamma,
            OrderedFamilyArg::Delta => FamilyKind::Delta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Enum,
    Structure,
    Formula,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqFormatArg {
    Text,
    Bfile,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Duality,
    Fibonacci,
    Structure,
    Formula,
}

/// Parses argv and runs one subcommand, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Count {
            family,
            n,
            k,
            method,
            parallel,
            format,
        } => cmd_count(family, n, k, method, parallel, format),
        Command::Enumerate {
            family,
            n,
            k,
            max_results,
            format,
        } => cmd_enumerate(family, n, k, max_results, format),
        Command::Sequence {
            family,
            k,
            n_max,
            format,
        } => cmd_sequence(family, k, n_max, format),
        Command::Verify { check, n_max } => cmd_verify(check, n_max),
        Command::OeisCompare {
            id,
            family,
            k,
            n_max,
            source,
            offset,
        } => cmd_oeis_compare(id, family, k, n_max, source, offset),
    }
}

fn checked_n(n: u64) -> Result<usize, CliError> {
    if n == 0 {
        return Err(CliError::Usage("n must be at least 1".into()));
    }
    if n > MAX_WIDTH as u64 {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the supported limit of {MAX_WIDTH}"
        )));
    }
    Ok(n as usize)
}

/// None when k is negative (every count is 0, every listing empty).
fn build_family(kind: FamilyKind, n: usize, k: i64) -> Option<Family> {
    u64::try_from(k).ok().map(|k| Family::new(kind, n, k as usize))
}

fn cmd_count(
    family: FamilyArg,
    n: u64,
    k: i64,
    method: MethodArg,
    parallel: bool,
    format: FormatArg,
) -> Result<i32, CliError> {
    let n = checked_n(n)?;
    let report = match build_family(family.kind(), n, k) {
        None => CountReport {
            family: Family::new(family.kind(), n, 0),
            count: BigUint::zero(),
            method: crate::enumerate::CountMethod::Enumeration,
            elapsed: Duration::ZERO,
        },
        Some(fam) => match method {
            MethodArg::Enum => count_family(
                fam,
                EnumerationConfig {
                    parallel,
                    max_results: None,
                },
            )?,
            MethodArg::Structure => match family {
                FamilyArg::Delta if k == 2 => delta2_count(n)?,
                FamilyArg::Gamma if k >= 0 && n as i64 - k == 2 => gamma_n_minus_2_count(n)?,
                _ => {
                    return Err(CliError::Usage(
                        "--method structure applies to delta with k = 2 or gamma with k = n-2"
                            .into(),
                    ))
                }
            },
            MethodArg::Formula => match family {
                FamilyArg::Lambda if k == 2 => lambda2_count_formula(n)?,
                _ => {
                    return Err(CliError::Usage(
                        "--method formula applies to lambda with k = 2".into(),
                    ))
                }
            },
        },
    };
    match format {
        FormatArg::Text => println!("{}", report.count),
        FormatArg::Json => {
            let value = serde_json::json!({
                "family": family.kind().name(),
                "n": n,
                "k": k,
                "count": report.count.to_string(),
                "method": report.method.name(),
                "elapsed_ms": report.elapsed.as_secs_f64() * 1000.0,
            });
            println!("{value}");
        }
    }
    Ok(0)
}

fn cmd_enumerate(
    family: FamilyArg,
    n: u64,
    k: i64,
    max_results: Option<NonZeroUsize>,
    format: FormatArg,
) -> Result<i32, CliError> {
    let n = checked_n(n)?;
    let config = EnumerationConfig {
        parallel: false,
        max_results,
    };
    let mut stream = match build_family(family.kind(), n, k) {
        Some(fam) => Some(enumerate_family(fam, config)?),
        None => None,
    };
    match format {
        FormatArg::Text => {
            let mut count = 0usize;
            if let Some(stream) = &mut stream {
                for m in &mut *stream {
                    if count > 0 {
                        println!();
                    }
                    println!("{m}");
                    count += 1;
                }
            }
            if stream.as_ref().is_some_and(|s| s.truncated()) {
                eprintln!("note: listing truncated at {count} matrices");
            }
        }
        FormatArg::Json => {
            let mut matrices: Vec<Vec<String>> = Vec::new();
            if let Some(stream) = &mut stream {
                for m in &mut *stream {
                    matrices.push(m.to_text().split('\n').map(String::from).collect());
                }
            }
            let value = serde_json::json!({
                "family": family.kind().name(),
                "n": n,
                "k": k,
                "count": matrices.len(),
                "truncated": stream.as_ref().is_some_and(|s| s.truncated()),
                "matrices": matrices,
            });
            println!("{value}");
        }
    }
    Ok(0)
}

/// (n, count) pairs plus an optional note explaining an empty body.
type SequenceTerms = (Vec<(u64, BigUint)>, Option<String>);

/// Counting sequence for fixed k over n = 1..=n_max. The nonincreasing
/// k=2 family goes through the Fibonacci structure path and starts at
/// n = 2; everything else is counted by enumeration from n = 1.
fn sequence_terms(
    family: OrderedFamilyArg,
    k: i64,
    n_max: usize,
) -> Result<SequenceTerms, CliError> {
    let mut terms = Vec::new();
    if family == OrderedFamilyArg::Delta && k == 2 {
        if n_max < 2 {
            return Ok((
                terms,
                Some("no terms: the k = 2 structural sequence starts at n = 2".into()),
            ));
        }
        for n in 2..=n_max {
            terms.push((n as u64, delta2_count(n)?.count));
        }
        return Ok((terms, None));
    }
    for n in 1..=n_max {
        let count = match build_family(family.kind(), n, k) {
            None => BigUint::zero(),
            Some(fam) => count_family(fam, EnumerationConfig::default())?.count,
        };
        terms.push((n as u64, count));
    }
    Ok((terms, None))
}

fn cmd_sequence(
    family: OrderedFamilyArg,
    k: i64,
    n_max: u64,
    format: SeqFormatArg,
) -> Result<i32, CliError> {
    let n_max = checked_n(n_max)?;
    let (terms, note) = sequence_terms(family, k, n_max)?;
    if let Some(note) = note {
        eprintln!("note: {note}");
    }
    match format {
        SeqFormatArg::Text | SeqFormatArg::Bfile => {
            for (n, count) in &terms {
                println!("{n} {count}");
            }
        }
        SeqFormatArg::Json => {
            let value = serde_json::json!({
                "family": family.kind().name(),
                "k": k,
                "terms": terms
                    .iter()
                    .map(|(n, count)| {
                        serde_json::json!({"n": n, "count": count.to_string()})
                    })
                    .collect::<Vec<_>>(),
            });
            println!("{value}");
        }
    }
    Ok(0)
}

fn cmd_verify(check: CheckArg, n_max: u64) -> Result<i32, CliError> {
    let report = match check {
        CheckArg::Duality => {
            let n_max = checked_n(n_max)?;
            verify_duality(n_max)?
        }
        CheckArg::Fibonacci => {
            if n_max + 2 > MAX_WIDTH as u64 {
                return Err(CliError::Usage(format!(
                    "fibonacci check needs n-max + 2 <= {MAX_WIDTH}"
                )));
            }
            verify_fibonacci(n_max as usize)?
        }
        CheckArg::Structure => {
            let n_max = checked_n(n_max)?;
            verify_structure(n_max)?
        }
        CheckArg::Formula => {
            if n_max > FORMULA_LIMIT as u64 {
                return Err(CliError::Usage(format!(
                    "formula check needs n-max <= {FORMULA_LIMIT}"
                )));
            }
            verify_formula(n_max as usize)?
        }
    };
    for instance in &report.instances {
        println!(
            "{} {} {}: {}",
            if instance.passed { "PASS" } else { "FAIL" },
            report.check,
            instance.label,
            instance.detail
        );
    }
    let failed = report
        .instances
        .iter()
        .filter(|instance| !instance.passed)
        .count();
    println!(
        "verify {} ({}): {} ({} instances, {} failed, {:.2}s)",
        report.check,
        report.range,
        if report.passed() { "PASS" } else { "FAIL" },
        report.instances.len(),
        failed,
        report.elapsed.as_secs_f64()
    );
    Ok(if report.passed() { 0 } else { 1 })
}

fn cmd_oeis_compare(
    id: String,
    family: OrderedFamilyArg,
    k: i64,
    n_max: u64,
    source: Option<String>,
    offset: i64,
) -> Result<i32, CliError> {
    if !valid_sequence_id(&id) {
        return Err(CliError::Usage(format!(
            "{id:?} is not an OEIS id of the form A followed by six digits"
        )));
    }
    let n_max = checked_n(n_max)?;
    let reference = match &source {
        Some(src) => fetch_bfile(&id, src)?,
        None => match id.as_str() {
            "A229162" => parse_bfile(include_str!("../data/A229162.txt"), &id)?,
            "A181344" => parse_bfile(include_str!("../data/A181344.txt"), &id)?,
            other => fetch_bfile(&id, &format!("data/{other}.txt"))?,
        },
    };
    let mut computed: Vec<(i64, BigInt)> = Vec::new();
    for n in 1..=n_max {
        let count = match build_family(family.kind(), n, k) {
            None => BigUint::zero(),
            Some(fam) => count_family(fam, EnumerationConfig::default())?.count,
        };
        computed.push((n as i64, BigInt::from(count)));
    }
    let diff = compare_sequence(&computed, &reference, offset)?;
    println!(
        "{} (offset {}) vs computed {} k={}, n = 1..{}: {}, {} matched, {} mismatched",
        diff.sequence_id,
        diff.offset,
        family.kind().name(),
        k,
        n_max,
        diff.verdict,
        diff.matches,
        diff.mismatches.len()
    );
    for m in &diff.mismatches {
        println!("  n={}: reference {}, computed {}", m.index, m.expected, m.got);
    }
    Ok(if diff.verdict == Verdict::Agree { 0 } else { 1 })
}

/// One checked identity instance inside a verification run.
#[derive(Debug, Clone)]
pub struct VerifyInstance {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of one `verify` subcommand run.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub check: &'static str,
    pub range: String,
    pub instances: Vec<VerifyInstance>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.instances.iter().all(|instance| instance.passed)
    }
}

/// For every 0 <= k <= n <= n_max: gamma(n,n-k) and delta(n,k) have equal
/// counts and complementation maps one enumerated set onto the other.
pub fn verify_duality(n_max: usize) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let config = EnumerationConfig::default();
    let mut instances = Vec::new();
    for n in 1..=n_max {
        for k in 0..=n {
            let dual_k = n - k;
            let gamma_count = count_family(Family::gamma(n, dual_k), config)?.count;
            let delta_count = count_family(Family::delta(n, k), config)?.count;
            let mut complements: Vec<BinaryMatrix> =
                enumerate_family(Family::delta(n, k), config)?
                    .map(|m| m.complement())
                    .collect();
            complements.sort();
            let gammas: Vec<BinaryMatrix> =
                enumerate_family(Family::gamma(n, dual_k), config)?.collect();
            let bijection = complements == gammas;
            instances.push(VerifyInstance {
                label: format!("n={n} k={k}"),
                passed: gamma_count == delta_count && bijection,
                detail: format!(
                    "gamma({n},{dual_k})={gamma_count} delta({n},{k})={delta_count}; \
                     complement bijection {}",
                    if bijection { "holds" } else { "fails" }
                ),
            });
        }
    }
    Ok(VerifyReport {
        check: "duality",
        range: format!("n = 1..{n_max}"),
        instances,
        elapsed: start.elapsed(),
    })
}

/// For 0 <= i <= n_max: f_i equals delta(i+2,2) by enumeration, by the
/// structure path, and gamma(i+2,i) by enumeration.
pub fn verify_fibonacci(n_max: usize) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let config = EnumerationConfig::default();
    let fib = fibonacci(n_max);
    let mut instances = Vec::new();
    for i in 0..=n_max {
        let expected = fib.value(i);
        let n = i + 2;
        let delta_enum = count_family(Family::delta(n, 2), config)?.count;
        let delta_structure = delta2_count(n)?.count;
        let gamma_enum = count_family(Family::gamma(n, i), config)?.count;
        instances.push(VerifyInstance {
            label: format!("i={i}"),
            passed: delta_enum == *expected
                && delta_structure == *expected
                && gamma_enum == *expected,
            detail: format!(
                "f_{i}={expected}; delta({n},2) enum={delta_enum} structure={delta_structure}; \
                 gamma({n},{i}) enum={gamma_enum}"
            ),
        });
    }
    Ok(VerifyReport {
        check: "fibonacci",
        range: format!("f-index 0..{n_max}"),
        instances,
        elapsed: start.elapsed(),
    })
}

/// For 2 <= n <= n_max: building all compositions covers the enumerated
/// nonincreasing k=2 family exactly, and decompose inverts build.
pub fn verify_structure(n_max: usize) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let config = EnumerationConfig::default();
    let mut instances = Vec::new();
    for n in 2..=n_max {
        let enumerated: Vec<BinaryMatrix> =
            enumerate_family(Family::delta(n, 2), config)?.collect();
        let mut built = Vec::new();
        let mut round_trips = true;
        for c in compositions(n)? {
            let m = build_delta2(&c);
            round_trips &= decompose_delta2(&m).as_ref() == Ok(&c);
            built.push(m);
        }
        let composition_count = built.len();
        built.sort();
        let coverage = built == enumerated;
        let rebuilds = enumerated
            .iter()
            .all(|m| decompose_delta2(m).map(|c| build_delta2(&c) == *m).unwrap_or(false));
        instances.push(VerifyInstance {
            label: format!("n={n}"),
            passed: coverage && round_trips && rebuilds,
            detail: format!(
                "{composition_count} compositions vs {} matrices; coverage {}; \
                 decompose/build round trips {}",
                enumerated.len(),
                if coverage { "exact" } else { "broken" },
                if round_trips && rebuilds { "hold" } else { "fail" }
            ),
        });
    }
    Ok(VerifyReport {
        check: "structure",
        range: format!("n = 2..{n_max}"),
        instances,
        elapsed: start.elapsed(),
    })
}

/// For 2 <= n <= n_max: the closed-form count of unrestricted k=2
/// matrices equals the backtracking count.
pub fn verify_formula(n_max: usize) -> Result<VerifyReport, CliError> {
    let start = Instant::now();
    let mut instances = Vec::new();
    for n in 2..=n_max {
        let formula = lambda2_count_formula(n)?.count;
        let enumerated = count_lambda(n, 2)?.count;
        instances.push(VerifyInstance {
            label: format!("n={n}"),
            passed: formula == enumerated,
            detail: format!("formula={formula} enumeration={enumerated}"),
        });
    }
    Ok(VerifyReport {
        check: "formula",
        range: format!("n = 2..{n_max}"),
        instances,
        elapsed: start.elapsed(),
    })
}
