//! The `ladder` command line.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on usage,
//! parse or parameter errors.

pub mod output;
pub mod parse;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::identities::factorization_testers;
use crate::families::suites::{run_suite, SuiteOutcome};
use crate::families::{
    generate_assoc_legendre, generate_ladder_table, make_operator, Direction, FamilyKind, FamilySpec,
};
use crate::ladder::{factorize, verify_factorization, Form};
use crate::rational::{parse_rational, Rational};
use crate::weighted::WeightedExpression as W;
use crate::{Poly, RatFn};

pub use output::{OutputDocument, OutputRecord, Weight};
pub use parse::{parse_expression, parse_polynomial, ParseError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VERIFY_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

const FAMILY_HELP: &str = "legendre, assoc-legendre (--m), gegenbauer (--lambda), chebyshev-T, chebyshev-U, \
laguerre (--alpha), hermite, laguerre-radial (--alpha), coulomb-radial (--l), oscillator-3d (--l)";

#[derive(Debug, Parser)]
#[command(name = "ladder", version, about = "Exact ladder-operator factorizations and orthogonal polynomial identities")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate members 0..=n-max of a family by iterating its raising operator.
    ///
    /// CSV rows are `n:c0,c1,...` in ascending degree; LaTeX uses descending
    /// degree. Associated Legendre starts at n = m and carries its
    /// (1-x²)^(m/2) weight.
    Gen(GenArgs),
    /// Run a verification suite; exits 1 if any instance fails.
    Verify(VerifyArgs),
    /// Factorize a family operator as f1 D g2 + h for a given drift.
    Factorize(FactorizeArgs),
}

#[derive(Debug, Args)]
struct FamilyArgs {
    #[arg(long, help = FAMILY_HELP)]
    family: String,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    alpha: Option<Rational>,
    #[arg(long, value_parser = rational_arg, allow_hyphen_values = true)]
    lambda: Option<Rational>,
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    l: Option<u32>,
}

impl FamilyArgs {
    fn kind(&self) -> Result<FamilyKind> {
        FamilyKind::from_name(&self.family, self.alpha.clone(), self.lambda.clone(), self.m, self.l)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Debug, Args)]
struct GenArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long)]
    n_max: u32,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Write to FILE instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// oracle, eq31, remark3term, eq34, assoc-relations, factorization,
    /// rodrigues, relations, hermite, h0-reduction, remainder or all.
    #[arg(long)]
    suite: String,
    #[arg(long)]
    n_max: u32,
    /// Emit the full report as JSON.
    #[arg(long)]
    json: bool,
    /// Corrupt one generated coefficient before checking.
    #[arg(long, hide = true)]
    negative_control: bool,
}

#[derive(Debug, Args)]
struct FactorizeArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_parser = direction_arg)]
    direction: Direction,
    #[arg(long)]
    n: u32,
    /// Reduced drift t = h/a, e.g. "x/(x^2-1)".
    #[arg(long, allow_hyphen_values = true)]
    drift: String,
    /// Read --drift as h and divide it by a.
    #[arg(long)]
    drift_is_h: bool,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

fn direction_arg(s: &str) -> std::result::Result<Direction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match cli.command {
        Command::Gen(args) => cmd_gen(&args, out),
        Command::Verify(args) => cmd_verify(&args, out),
        Command::Factorize(args) => cmd_factorize(&args, out),
    };
    match outcome {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(CliError::Json(e)) if e.io_error_kind() == Some(std::io::ErrorKind::BrokenPipe) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Ladder(#[from] Error),
    #[error("drift: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

type CliResult = std::result::Result<u8, CliError>;

/// Records for `n = 0..=n_max` (from `m` for associated Legendre).
pub fn gen_records(kind: &FamilyKind, n_max: u32) -> Result<Vec<OutputRecord>> {
    let name = kind.name();
    match kind {
        FamilyKind::AssocLegendre { m } => (*m..=n_max)
            .map(|n| OutputRecord::weighted(name, n, &generate_assoc_legendre(n, *m)?))
            .collect(),
        _ => Ok(generate_ladder_table(kind, n_max)?
            .iter()
            .zip(0..)
            .map(|(p, n)| OutputRecord::polynomial(name, n, p))
            .collect()),
    }
}

pub fn gen_document(kind: &FamilyKind, n_max: u32) -> Result<OutputDocument> {
    Ok(OutputDocument {
        family: kind.name().to_string(),
        params: kind.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        records: gen_records(kind, n_max)?,
    })
}

impl OutputDocument {
    /// Parses JSON written by `gen --format json`.
    pub fn from_json(src: &str) -> serde_json::Result<Self> {
        let mut doc: Self = serde_json::from_str(src)?;
        for r in &mut doc.records {
            r.family = doc.family.clone();
        }
        Ok(doc)
    }
}

fn latex_symbol(kind: &FamilyKind) -> String {
    match kind {
        FamilyKind::Legendre => "P".into(),
        FamilyKind::AssocLegendre { m } => format!("P^{{{m}}}"),
        FamilyKind::Gegenbauer { lambda } => format!("C^{{({lambda})}}"),
        FamilyKind::ChebyshevT => "T".into(),
        FamilyKind::ChebyshevU => "U".into(),
        FamilyKind::Laguerre { alpha } | FamilyKind::LaguerreRadial { alpha } => format!("L^{{({alpha})}}"),
        FamilyKind::Hermite => "H".into(),
        FamilyKind::CoulombRadial { .. } | FamilyKind::Oscillator3d { .. } => "R".into(),
    }
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> CliResult {
    let kind = args.family.kind()?;
    let doc = gen_document(&kind, args.n_max)?;
    let mut text = match args.format {
        Format::Json => serde_json::to_string_pretty(&doc)?,
        Format::Csv => doc.records.iter().map(OutputRecord::csv_row).collect::<Vec<_>>().join("\n"),
        Format::Latex => {
            let symbol = latex_symbol(&kind);
            let rows = doc
                .records
                .iter()
                .map(|r| r.latex_row(&symbol, kind.variable()))
                .collect::<Result<Vec<_>>>()?;
            rows.join(" \\\\\n")
        }
    };
    text.push('\n');
    match &args.out {
        Some(path) => std::fs::write(path, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

/// Failures listed per identity in the text report.
const FAILURES_SHOWN: usize = 10;

fn write_report(outcome: &SuiteOutcome, out: &mut dyn Write) -> std::io::Result<()> {
    writeln!(out, "suite {} (n-max {})", outcome.suite, outcome.n_max)?;
    for report in &outcome.reports {
        let failed = report.failures().count();
        let total = report.instances.len();
        writeln!(out, "  {:<22} {}/{} passed  [{}]", report.id, total - failed, total, report.params)?;
        for f in report.failures().take(FAILURES_SHOWN) {
            let why = f.discrepancy.as_deref().unwrap_or("failed");
            writeln!(out, "    FAIL {}: {why}", f.label)?;
        }
        if failed > FAILURES_SHOWN {
            writeln!(out, "    ... {} more failures", failed - FAILURES_SHOWN)?;
        }
        for i in report.instances.iter().filter(|i| i.passed) {
            if let Some(note) = &i.note {
                writeln!(out, "    note {}: {note}", i.label)?;
            }
        }
    }
    writeln!(
        out,
        "{}: {} instances, {} failures",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.instance_count(),
        outcome.failure_count()
    )
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> CliResult {
    let outcome = run_suite(&args.suite, args.n_max, args.negative_control)?;
    if args.json {
        serde_json::to_writer_pretty(&mut *out, &outcome)?;
        writeln!(out)?;
    } else {
        write_report(&outcome, out)?;
    }
    Ok(if outcome.passed { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

#[derive(Serialize)]
struct RatFnJson {
    num: Vec<String>,
    den: Vec<String>,
}

impl From<&RatFn> for RatFnJson {
    fn from(r: &RatFn) -> Self {
        let s = |p: &Poly| p.coeffs().iter().map(Rational::to_string).collect();
        Self {
            num: s(r.num()),
            den: s(r.den()),
        }
    }
}

#[derive(Serialize)]
struct WeightedJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    phase: Option<String>,
    coeff: RatFnJson,
    powers: Vec<[String; 2]>,
    #[serde(rename = "expArg")]
    exp_arg: Vec<String>,
}

impl From<&W> for WeightedJson {
    fn from(w: &W) -> Self {
        use num_traits::Zero;
        Self {
            phase: (!w.phase().is_zero()).then(|| w.phase().to_string()),
            coeff: w.coeff().into(),
            powers: w
                .powers()
                .iter()
                .map(|pf| [pf.root.to_string(), pf.exponent.to_string()])
                .collect(),
            exp_arg: w.exp_arg().coeffs().iter().map(Rational::to_string).collect(),
        }
    }
}

#[derive(Serialize)]
struct FactorizationJson {
    family: String,
    params: BTreeMap<String, String>,
    direction: String,
    n: u32,
    drift: RatFnJson,
    f1: WeightedJson,
    g2: WeightedJson,
    h: WeightedJson,
    verified: bool,
}

fn cmd_factorize(args: &FactorizeArgs, out: &mut dyn Write) -> CliResult {
    let kind = args.family.kind()?;
    let var = kind.variable();
    let spec = FamilySpec::new(kind.clone(), args.n)?;
    let op = make_operator(&spec, args.direction)?;
    let parsed = parse_expression(&args.drift)?;
    let t = if args.drift_is_h { op.reduced_drift(&parsed)? } else { parsed };
    let fac = factorize(&op, &t)?;
    let report = verify_factorization(&op, &fac, &factorization_testers());

    let (a, b) = (op.a().display_in(var), op.b().display_in(var));
    match op.form() {
        Form::Raising => writeln!(out, "operator: [{a}] D + [{b}]")?,
        Form::Lowering => writeln!(out, "operator: -D [{a}] + [{b}]")?,
    }
    let shape = match fac.form {
        Form::Raising => "f1 D g2 + h",
        Form::Lowering => "-g2 D f1 + h",
    };
    writeln!(out, "shape:    {shape}")?;
    writeln!(out, "t = h/a:  {}", t.display_in(var))?;
    writeln!(out, "f1:       {}", fac.f1.display_in(var))?;
    writeln!(out, "g2:       {}", fac.g2.display_in(var))?;
    writeln!(out, "h:        {}", fac.h.display_in(var))?;
    match report.first_failure() {
        None => writeln!(out, "verify:   ok ({} checks)", report.checks.len())?,
        Some(f) => writeln!(
            out,
            "verify:   FAILED {}: {}",
            f.label,
            f.discrepancy.as_deref().unwrap_or("")
        )?,
    }
    let json = FactorizationJson {
        family: kind.name().to_string(),
        params: kind.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        direction: args.direction.to_string(),
        n: args.n,
        drift: (&t).into(),
        f1: (&fac.f1).into(),
        g2: (&fac.g2).into(),
        h: (&fac.h).into(),
        verified: report.passed(),
    };
    writeln!(out, "{}", serde_json::to_string(&json)?)?;
    Ok(if report.passed() { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

#[cfg(test)]
mod tests;
