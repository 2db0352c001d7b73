//! Command-line front end.
//!
//! Exit status: 0 on success, 1 on a usage or input error, 2 when `verify`
//! finds a disagreement between brute force and the closed forms.

mod output;

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::field::{Cyclotomic8, FieldError, FieldSpec, PrimeField, RootOfUnityField};
use crate::groups::{GroupId, GroupTable};
use crate::invariants::{census, char2_bruteforce, char2_dims, nondeg_closed};
use crate::irreps::{Corruption, IrrepTable};
use crate::repspace::{enumerate_specs, RepError, RepSpec};
use crate::verify::{analyze_spec, verify, FormRecord, VerifyConfig, DEFAULT_SEED};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("{0}")]
    Other(String),
}

#[derive(Debug, Parser)]
#[command(name = "octoforms", version, about = "Invariant bilinear forms of representations of the groups of order 8")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the irreducible representations and the character table.
    Tables(TablesArgs),
    /// List the multiplicity vectors of a given degree.
    Enumerate(EnumerateArgs),
    /// Solve for the invariant forms and report their dimensions.
    Dims(FormsArgs),
    /// Decide whether a non-degenerate invariant form exists.
    Nondeg(FormsArgs),
    /// Count representations with and without non-degenerate forms.
    Census(CensusArgs),
    /// Trivial representation in characteristic 2.
    Char2(Char2Args),
    /// Cross-check brute force against the closed forms.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct TablesArgs {
    /// Group id (all groups when omitted).
    #[arg(long, value_parser = parse_group)]
    group: Option<GroupId>,
    #[arg(long, default_value = "17", value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long, value_parser = parse_group)]
    group: GroupId,
    #[arg(long)]
    degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["degree", "mults"])))]
struct FormsArgs {
    #[arg(long, value_parser = parse_group)]
    group: GroupId,
    /// Every representation of this degree.
    #[arg(long)]
    degree: Option<usize>,
    /// Multiplicities k1,k2,... in table order.
    #[arg(long, value_delimiter = ',', num_args = 1..)]
    mults: Option<Vec<usize>>,
    #[arg(long, default_value = "17", value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Debug, Args)]
struct CensusArgs {
    /// Group id (all groups when omitted).
    #[arg(long, value_parser = parse_group)]
    group: Option<GroupId>,
    #[arg(long)]
    degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Args)]
struct Char2Args {
    #[arg(long)]
    degree: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
    /// Largest degree for the counting checks.
    #[arg(long, default_value_t = 12)]
    count_max: usize,
    #[arg(long, default_value = "17", value_parser = parse_field)]
    field: FieldSpec,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Alter one table entry before checking, as group:irrep:generator:row:col.
    #[arg(long, hide = true, value_parser = parse_corruption)]
    corrupt: Option<Corruption>,
}

fn parse_group(s: &str) -> Result<GroupId, String> {
    s.parse().map_err(|e: crate::groups::UnknownGroup| e.to_string())
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    s.parse().map_err(|e: FieldError| e.to_string())
}

fn parse_corruption(s: &str) -> Result<Corruption, String> {
    s.parse().map_err(|e: crate::irreps::IrrepError| e.to_string())
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = if code == EXIT_OK { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Tables(a) => {
            let groups = a.group.map_or_else(|| GroupId::ALL.to_vec(), |g| vec![g]);
            tables(AnyField::new(a.field)?, &groups, a.format, out)
        }
        Command::Enumerate(a) => enumerate(&a, out),
        Command::Dims(a) => forms(AnyField::new(a.field)?, &a, false, out),
        Command::Nondeg(a) => forms(AnyField::new(a.field)?, &a, true, out),
        Command::Census(a) => census_cmd(&a, out),
        Command::Char2(a) => char2(&a, out),
        Command::Verify(a) => verify_cmd(&a, out),
    }
}

/// The backend chosen on the command line.
enum AnyField {
    Prime(PrimeField),
    Cyclotomic(Cyclotomic8),
}

impl AnyField {
    fn new(spec: FieldSpec) -> Result<Self, CliError> {
        Ok(match spec {
            FieldSpec::Prime(p) => AnyField::Prime(PrimeField::new(p)?),
            FieldSpec::Cyclotomic => AnyField::Cyclotomic(Cyclotomic8),
        })
    }
}

fn tables(field: AnyField, groups: &[GroupId], format: Format, out: &mut dyn Write) -> Result<i32, CliError> {
    match field {
        AnyField::Prime(f) => output::tables(f, groups, format, out)?,
        AnyField::Cyclotomic(f) => output::tables(f, groups, format, out)?,
    }
    Ok(EXIT_OK)
}

fn forms(field: AnyField, a: &FormsArgs, with_closed: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let specs = match (&a.mults, a.degree) {
        (Some(m), _) => {
            let spec = RepSpec::new(a.group, m.clone())?;
            if spec.degree() == 0 {
                return Err(CliError::Usage("multiplicities describe a degree-0 representation".into()));
            }
            vec![spec]
        }
        (None, Some(0)) => return Err(CliError::Usage("degree must be at least 1".into())),
        (None, Some(n)) => enumerate_specs(a.group, n),
        (None, None) => unreachable!("clap requires --degree or --mults"),
    };
    let records = match field {
        AnyField::Prime(f) => records(f, &specs, a.seed)?,
        AnyField::Cyclotomic(f) => records(f, &specs, a.seed)?,
    };
    let closed: Option<Vec<bool>> = with_closed.then(|| specs.iter().map(nondeg_closed).collect());
    output::form_records(&records, closed.as_deref(), a.format, out)?;
    Ok(EXIT_OK)
}

fn records<F: RootOfUnityField>(field: F, specs: &[RepSpec], seed: u64) -> Result<Vec<FormRecord>, CliError> {
    use rayon::prelude::*;
    let Some(first) = specs.first() else {
        return Ok(Vec::new());
    };
    let group = GroupTable::build(first.group);
    let table = IrrepTable::new(first.group, field);
    specs
        .par_iter()
        .map(|s| {
            analyze_spec(s, &table, &group, seed, crate::invariants::DEFAULT_TRIALS)
                .map(|a| FormRecord::from_analysis(&a))
                .map_err(|e| CliError::Other(e.to_string()))
        })
        .collect()
}

fn enumerate(a: &EnumerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    output::specs(&enumerate_specs(a.group, a.degree), a.format, out)?;
    Ok(EXIT_OK)
}

fn census_cmd(a: &CensusArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.degree == 0 {
        return Err(CliError::Usage("degree must be at least 1".into()));
    }
    let groups = a.group.map_or_else(|| GroupId::ALL.to_vec(), |g| vec![g]);
    let rows: Vec<_> = groups.iter().map(|&g| (g, census(g, a.degree))).collect();
    output::census(&rows, a.degree, a.format, out)?;
    Ok(EXIT_OK)
}

fn char2(a: &Char2Args, out: &mut dyn Write) -> Result<i32, CliError> {
    if a.degree == 0 {
        return Err(CliError::Usage("degree must be at least 1".into()));
    }
    let closed = char2_dims(a.degree);
    // The GF(2) solve has n² unknowns; keep it to desk-sized degrees.
    let brute = (a.degree <= 8).then(|| char2_bruteforce(a.degree));
    output::char2(a.degree, &closed, brute.as_ref(), a.format, out)?;
    Ok(EXIT_OK)
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let cfg = VerifyConfig {
        field: a.field,
        max_degree: a.max_degree,
        count_max: a.count_max,
        seed: a.seed,
        corruption: a.corrupt,
        ..VerifyConfig::default()
    };
    let report = verify(&cfg)?;
    output::verify(&report, a.format, out)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH })
}
