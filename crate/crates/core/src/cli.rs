//! Command-line driver.
//!
//! Weights are always given and printed in fundamental coordinates. Exit
//! status: 0 on success or pass, 1 on a violation, a flagged discrepancy or a
//! reconstruction failure, 2 on a usage error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::charring;
use crate::error::{Error, Result};
use crate::rigidity::family::CaseTag;
use crate::rigidity::oracle::BoundaryOracle;
use crate::rigidity::reconstruct::reconstruct_up_to;
use crate::rigidity::supp::{fundamental_identities, lemma_supp_check, IdentityRow, SuppInstance};
use crate::rigidity::verify::{falsify, required_coverage, verify_conditions, Verdict, VerifyMode, ViolationReport};
use crate::rigidity::FamilyTable;
use crate::rootsystem::{RootSystem, Series, Weight};
use crate::weylchar::{freudenthal_char, weyl_dimension, CharacterTable};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FLAGGED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Parser)]
#[command(
    name = "weylrigid",
    version,
    about = "Exact characters and rigidity reconstruction for classical Lie algebras",
    after_help = "TSV columns:\n  char         mu, mult\n  dim          dim\n  tensor       lambda, mult\n  orbit        weight\n  reconstruct  lambda, mu, mult, route\n  verify       PASS, or VIOLATION, condition, lambda, mu, nu, expected, found\n  supp-lemma   item, index, k, alpha_coeffs, support_size, pass\n  identities   index, dual, alpha_coeffs, stated, agrees\n  falsify      condition, lambda, mu, nu, expected, found\nWeights are comma-separated fundamental coordinates."
)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Full,
    FundamentalOnly,
}

impl From<Mode> for VerifyMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Full => VerifyMode::Full,
            Mode::FundamentalOnly => VerifyMode::FundamentalOnly,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct System {
    /// Series: A, B, C or D
    #[arg(long = "type", value_parser = parse_series)]
    pub series: Series,
    #[arg(long)]
    pub rank: usize,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Dominant multiplicities of an irreducible character
    Char {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Weyl dimension
    Dim {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Decomposition of a tensor product of two irreducibles
    Tensor {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        left: String,
        #[arg(long, allow_hyphen_values = true)]
        right: String,
    },
    /// Weyl orbit of a dominant weight
    Orbit {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Rebuild characters from boundary data and duality
    Reconstruct {
        #[command(flatten)]
        sys: System,
        #[arg(long)]
        cutoff: i64,
    },
    /// Check conditions C1-C4 on the true characters
    Verify {
        #[command(flatten)]
        sys: System,
        #[arg(long)]
        cutoff: i64,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
    },
    /// Exhaustive check of the support lemma
    SuppLemma {
        #[command(flatten)]
        sys: System,
        #[arg(long, default_value_t = 3)]
        k_bound: i64,
    },
    /// omega_i - w0 omega_i against the closed forms
    Identities {
        #[command(flatten)]
        sys: System,
    },
    /// Perturb one true multiplicity and search for a violated condition
    Falsify {
        #[command(flatten)]
        sys: System,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
        #[arg(long, default_value_t = 3)]
        cutoff: i64,
    },
}

fn parse_series(s: &str) -> std::result::Result<Series, String> {
    s.parse::<Series>().map_err(|e| e.to_string())
}

/// Exit status and both output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn flagged(stdout: String) -> Self {
        Outcome { code: EXIT_FLAGGED, stdout, stderr: String::new() }
    }
}

pub fn parse_weight(rank: usize, s: &str) -> Result<Weight> {
    let coords = s
        .split(',')
        .map(|t| t.trim().parse::<i64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|_| Error::Precondition(format!("cannot parse weight {s:?}")))?;
    if coords.len() != rank {
        return Err(Error::DimensionMismatch { expected: rank, found: coords.len() });
    }
    Ok(Weight::new(coords))
}

fn csv(w: &Weight) -> String {
    w.coords().iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn ints(v: &[i64]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::RankOutOfRange { .. }
        | Error::DimensionMismatch { .. }
        | Error::NotDominant(_)
        | Error::Precondition(_) => EXIT_USAGE,
        _ => EXIT_FLAGGED,
    }
}

pub fn run(inv: &Invocation) -> Outcome {
    match dispatch(&inv.command) {
        Ok(out) => out,
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

#[derive(Serialize)]
struct Entry {
    mu: Weight,
    mult: i64,
}

#[derive(Serialize)]
struct CharReport {
    #[serde(rename = "type")]
    series: Series,
    rank: usize,
    lambda: Weight,
    entries: Vec<Entry>,
}

#[derive(Serialize)]
struct DimReport {
    #[serde(rename = "type")]
    series: Series,
    rank: usize,
    lambda: Weight,
    dim: i64,
}

#[derive(Serialize)]
struct Component {
    lambda: Weight,
    mult: i64,
}

#[derive(Serialize)]
struct TensorReport {
    #[serde(rename = "type")]
    series: Series,
    rank: usize,
    left: Weight,
    right: Weight,
    components: Vec<Component>,
}

#[derive(Serialize)]
struct OrbitReport {
    #[serde(rename = "type")]
    series: Series,
    rank: usize,
    weight: Weight,
    size: usize,
    orbit: Vec<Weight>,
}

#[derive(Serialize)]
struct RouteEntry {
    mu: Weight,
    mult: i64,
    route: Option<String>,
}

#[derive(Serialize)]
struct RowReport {
    lambda: Weight,
    entries: Vec<RouteEntry>,
}

#[derive(Serialize)]
struct ReconstructReport {
    #[serde(rename = "type")]
    series: Series,
    rank: usize,
    cutoff: i64,
    entries: usize,
    oracle_queries: usize,
    agrees_with_freudenthal: bool,
    rows: Vec<RowReport>,
}

#[derive(Serialize)]
struct VerifyReport<'a> {
    result: &'static str,
    #[serde(flatten)]
    violation: Option<&'a ViolationReport>,
}

#[derive(Serialize)]
struct SuppLemmaReport<'a> {
    #[serde(rename = "type")]
    series: Series,
    rank: usize,
    k_bound: i64,
    instances: usize,
    failures: Vec<&'a SuppInstance>,
}

#[derive(Serialize)]
struct IdentitiesReport<'a> {
    #[serde(rename = "type")]
    series: Series,
    rank: usize,
    rows: &'a [IdentityRow],
}

fn dominant(rs: &RootSystem, s: &str) -> Result<Weight> {
    let w = parse_weight(rs.rank(), s)?;
    rs.check_dominant(&w)?;
    Ok(w)
}

fn violation_tsv(v: &ViolationReport) -> String {
    let nu = v.witness.nu.as_ref().map(csv).unwrap_or_default();
    format!("{}\t{}\t{}\t{}\t{}\t{}", v.condition, csv(&v.witness.lambda), csv(&v.witness.mu), nu, v.expected, v.found)
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Char { sys, weight } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            let lambda = dominant(&rs, weight)?;
            let row = freudenthal_char(&rs, &lambda)?;
            let entries: Vec<Entry> =
                row.sorted_desc(&rs).into_iter().map(|(mu, mult)| Entry { mu, mult }).collect();
            Ok(Outcome::ok(match sys.format.unwrap_or(Format::Json) {
                Format::Json => json(&CharReport { series: sys.series, rank: sys.rank, lambda, entries }),
                Format::Tsv => entries.iter().map(|e| format!("{}\t{}\n", csv(&e.mu), e.mult)).collect(),
            }))
        }
        Command::Dim { sys, weight } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            let lambda = dominant(&rs, weight)?;
            let dim = weyl_dimension(&rs, &lambda)?;
            Ok(Outcome::ok(match sys.format.unwrap_or(Format::Json) {
                Format::Json => json(&DimReport { series: sys.series, rank: sys.rank, lambda, dim }),
                Format::Tsv => format!("{dim}\n"),
            }))
        }
        Command::Tensor { sys, left, right } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            let left = dominant(&rs, left)?;
            let right = dominant(&rs, right)?;
            let coeffs = CharacterTable::new().tensor_coeffs(&rs, &left, &right)?;
            let mut keys: Vec<Weight> = coeffs.keys().cloned().collect();
            rs.sort_descending(&mut keys);
            let components: Vec<Component> =
                keys.into_iter().map(|l| Component { mult: coeffs[&l], lambda: l }).collect();
            Ok(Outcome::ok(match sys.format.unwrap_or(Format::Json) {
                Format::Json => json(&TensorReport { series: sys.series, rank: sys.rank, left, right, components }),
                Format::Tsv => components.iter().map(|c| format!("{}\t{}\n", csv(&c.lambda), c.mult)).collect(),
            }))
        }
        Command::Orbit { sys, weight } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            let weight = dominant(&rs, weight)?;
            let mut orbit = rs.weyl_orbit(&weight)?;
            rs.sort_descending(&mut orbit);
            Ok(Outcome::ok(match sys.format.unwrap_or(Format::Json) {
                Format::Json => json(&OrbitReport { series: sys.series, rank: sys.rank, size: orbit.len(), weight, orbit }),
                Format::Tsv => orbit.iter().map(|x| format!("{}\n", csv(x))).collect(),
            }))
        }
        Command::Reconstruct { sys, cutoff } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            if *cutoff < 0 {
                return Err(Error::Precondition("cutoff must be nonnegative".into()));
            }
            let mut oracle = BoundaryOracle::freudenthal(&rs);
            let fam = reconstruct_up_to(&rs, &mut oracle, *cutoff)?;
            let mut agrees = true;
            let mut lambdas: Vec<Weight> = fam.rows().keys().cloned().collect();
            rs.sort_ascending(&mut lambdas);
            let mut rows = Vec::new();
            for lambda in lambdas {
                let row = &fam.rows()[&lambda];
                agrees &= *row == freudenthal_char(&rs, &lambda)?;
                let entries = row
                    .sorted_desc(&rs)
                    .into_iter()
                    .map(|(mu, mult)| RouteEntry {
                        route: fam.tag(&lambda, &mu).map(|t: CaseTag| t.to_string()),
                        mu,
                        mult,
                    })
                    .collect();
                rows.push(RowReport { lambda, entries });
            }
            let report = ReconstructReport {
                series: sys.series,
                rank: sys.rank,
                cutoff: *cutoff,
                entries: fam.entry_count(),
                oracle_queries: oracle.distinct_queries(),
                agrees_with_freudenthal: agrees,
                rows,
            };
            let text = match sys.format.unwrap_or(Format::Json) {
                Format::Json => json(&report),
                Format::Tsv => {
                    let mut s = String::new();
                    for r in &report.rows {
                        for e in &r.entries {
                            let route = e.route.as_deref().unwrap_or("leading");
                            s.push_str(&format!("{}\t{}\t{}\t{}\n", csv(&r.lambda), csv(&e.mu), e.mult, route));
                        }
                    }
                    s
                }
            };
            Ok(if agrees { Outcome::ok(text) } else { Outcome::flagged(text) })
        }
        Command::Verify { sys, cutoff, mode } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            if *cutoff < 0 {
                return Err(Error::Precondition("cutoff must be nonnegative".into()));
            }
            let mode = VerifyMode::from(*mode);
            let cover = required_coverage(&rs, *cutoff, mode)?;
            let fam = FamilyTable::freudenthal(&rs, &cover)?;
            let verdict = verify_conditions(&rs, &fam, *cutoff, mode)?;
            let text = match (sys.format, &verdict) {
                (Some(Format::Json), v) => json(&VerifyReport {
                    result: if v.is_pass() { "pass" } else { "violation" },
                    violation: v.violation(),
                }),
                (_, Verdict::Pass) => "PASS\n".to_string(),
                (_, Verdict::Violation(v)) => format!("VIOLATION\t{}\n", violation_tsv(v)),
            };
            Ok(if verdict.is_pass() { Outcome::ok(text) } else { Outcome::flagged(text) })
        }
        Command::SuppLemma { sys, k_bound } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            let report = lemma_supp_check(&rs, *k_bound)?;
            let failures: Vec<&SuppInstance> = report.failures().collect();
            let text = match sys.format.unwrap_or(Format::Json) {
                Format::Json => json(&SuppLemmaReport {
                    series: sys.series,
                    rank: sys.rank,
                    k_bound: *k_bound,
                    instances: report.instances.len(),
                    failures: failures.clone(),
                }),
                Format::Tsv => report
                    .instances
                    .iter()
                    .map(|s| {
                        format!(
                            "{}\t{}\t{}\t{}\t{}\t{}\n",
                            s.item,
                            s.index,
                            ints(&s.k),
                            ints(&s.alpha_coeffs),
                            s.support_size,
                            s.pass
                        )
                    })
                    .collect(),
            };
            Ok(if failures.is_empty() { Outcome::ok(text) } else { Outcome::flagged(text) })
        }
        Command::Identities { sys } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            let rows = fundamental_identities(&rs)?;
            let flagged = rows.iter().any(|r| r.agrees == Some(false));
            let text = match sys.format.unwrap_or(Format::Json) {
                Format::Json => json(&IdentitiesReport { series: sys.series, rank: sys.rank, rows: &rows }),
                Format::Tsv => rows
                    .iter()
                    .map(|r| {
                        let stated = match &r.stated {
                            Some(crate::rigidity::supp::StatedForm::Exact(v)) => format!("exact:{}", ints(v)),
                            Some(crate::rigidity::supp::StatedForm::Prefix(v)) => format!("prefix:{}", ints(v)),
                            None => "-".to_string(),
                        };
                        let agrees = r.agrees.map(|a| a.to_string()).unwrap_or_else(|| "-".into());
                        format!("{}\t{}\t{}\t{}\t{}\n", r.index, csv(&r.dual), ints(&r.alpha_coeffs), stated, agrees)
                    })
                    .collect(),
            };
            Ok(if flagged { Outcome::flagged(text) } else { Outcome::ok(text) })
        }
        Command::Falsify { sys, lambda, mu, delta, cutoff } => {
            let rs = RootSystem::new(sys.series, sys.rank)?;
            let lambda = dominant(&rs, lambda)?;
            let mu = dominant(&rs, mu)?;
            match falsify(&rs, &lambda, &mu, *delta, *cutoff) {
                Ok(v) => Ok(Outcome::ok(match sys.format.unwrap_or(Format::Json) {
                    Format::Json => json(&VerifyReport { result: "violation", violation: Some(&v) }),
                    Format::Tsv => format!("{}\n", violation_tsv(&v)),
                })),
                Err(e @ Error::NoViolationFound { .. }) => Ok(Outcome {
                    code: EXIT_FLAGGED,
                    stdout: match sys.format.unwrap_or(Format::Json) {
                        Format::Json => json(&VerifyReport { result: "no-violation", violation: None }),
                        Format::Tsv => "NO-VIOLATION\n".to_string(),
                    },
                    stderr: format!("{e}\n"),
                }),
                Err(e) => Err(e),
            }
        }
    }
}

/// Parses, runs and returns the outcome; parse failures carry clap's
/// exit status and message.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Invocation::try_parse_from(args) {
        Ok(inv) => run(&inv),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: text }
            }
        }
    }
}

/// Recovers a row from `char` JSON output.
pub fn parse_char_json(text: &str) -> Result<(Weight, charring::WInvariant)> {
    #[derive(serde::Deserialize)]
    struct E {
        mu: Weight,
        mult: i64,
    }
    #[derive(serde::Deserialize)]
    struct R {
        lambda: Weight,
        entries: Vec<E>,
    }
    let r: R = serde_json::from_str(text).map_err(|e| Error::Precondition(e.to_string()))?;
    let row = charring::WInvariant::from_entries(r.entries.into_iter().map(|e| (e.mu, e.mult)))?;
    Ok((r.lambda, row))
}
