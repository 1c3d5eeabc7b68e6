mod output;
mod repro;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cogrowth_core::algebraic::{self, build_g_poly, verify_series, QValue};
use cogrowth_core::oracle::{count_tables, Family};
use cogrowth_core::rates::{self, rate_discriminant_capped, rate_ratio_result, Correction};
use cogrowth_core::solver::{cogrowth_coeffs, solve_auto};
use cogrowth_core::{Error, GroupSpec};
use num_rational::BigRational;
use num_traits::One;

use output::{OracleReport, SeriesReport};

#[derive(Parser)]
#[command(
    name = "cogrowth",
    version,
    about = "Cogrowth series and rates of Baumslag-Solitar groups BS(N,M)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the functional equations and print a generating function.
    Series(SeriesArgs),
    /// Count words by brute-force enumeration.
    Oracle(OracleArgs),
    /// Print the algebraic equation satisfied by G(z;q) for BS(N,N).
    Poly(PolyArgs),
    /// Check the series solution against the algebraic equation.
    Verify(VerifyArgs),
    /// Compute the cogrowth rate of BS(N,N).
    Rate(RateArgs),
    /// Run the reproduction checks and write a report.
    Repro(ReproArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args)]
struct Sink {
    /// Output format.
    #[arg(long, value_enum)]
    output: Option<Format>,
    /// Write to this file instead of standard output.
    #[arg(long = "output-path")]
    output_path: Option<PathBuf>,
}

impl Sink {
    fn format(&self, default: Format) -> Format {
        self.output.unwrap_or(default)
    }

    fn emit(&self, text: &str) -> io::Result<()> {
        let mut text = text.to_owned();
        if !text.ends_with('\n') {
            text.push('\n');
        }
        match &self.output_path {
            Some(path) => fs::write(path, text),
            None => io::stdout().lock().write_all(text.as_bytes()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Gf {
    G,
    L,
    K,
}

#[derive(Args)]
#[group(id = "qmode", multiple = false)]
struct QMode {
    /// Print the constant term in q: the cogrowth sequence for G.
    #[arg(long)]
    q0: bool,
    /// Set q = 1.
    #[arg(long)]
    q1: bool,
    /// Print full Laurent polynomials in q (default).
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args)]
struct SeriesArgs {
    #[arg(long = "N")]
    n: u64,
    /// Defaults to N.
    #[arg(long = "M")]
    m: Option<u64>,
    /// Truncation order; defaults to 24 when N = M and 16 otherwise.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value = "G", ignore_case = true)]
    gf: Gf,
    #[command(flatten)]
    qmode: QMode,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    G,
    L,
    K,
    D,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(long = "N")]
    n: u64,
    /// Defaults to N.
    #[arg(long = "M")]
    m: Option<u64>,
    #[arg(long)]
    nmax: usize,
    #[arg(long, value_enum, default_value = "g", ignore_case = true)]
    family: FamilyArg,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args)]
struct PolyArgs {
    #[arg(long = "N")]
    n: u64,
    /// Largest N accepted.
    #[arg(long = "max-n", default_value_t = algebraic::DEFAULT_MAX_N)]
    max_n: u64,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long = "N")]
    n: u64,
    #[arg(long, default_value_t = 16)]
    order: usize,
    /// Check at q = 1 instead of symbolically.
    #[arg(long)]
    q1: bool,
    #[arg(long = "max-n", default_value_t = algebraic::DEFAULT_MAX_N)]
    max_n: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Discriminant,
    Ratio,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CorrectionArg {
    None,
    N2,
}

#[derive(Args)]
struct RateArgs {
    #[arg(long = "N")]
    n: u64,
    #[arg(long, value_enum, default_value = "discriminant")]
    method: MethodArg,
    /// Series order for the ratio method.
    #[arg(long, default_value_t = 40)]
    order: usize,
    #[arg(long, value_enum, default_value = "n2")]
    correction: CorrectionArg,
    /// Largest N accepted by the discriminant method.
    #[arg(long = "max-n", default_value_t = rates::DEFAULT_MAX_N)]
    max_n: u64,
    #[command(flatten)]
    sink: Sink,
}

#[derive(Args)]
struct ReproArgs {
    #[command(flatten)]
    sink: Sink,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidGroup { .. }
            | Error::GuardExceeded { .. }
            | Error::LengthOutOfRange { .. }
            | Error::InsufficientTerms { .. }
            | Error::OutOfRange { .. }
            | Error::MalformedWord { .. }
            | Error::Unsupported(_) => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Internal(format!("write failed: {e}"))
    }
}

type CmdResult = Result<(), Failure>;

fn group(n: u64, m: Option<u64>) -> Result<GroupSpec, Failure> {
    Ok(GroupSpec::new(n, m.unwrap_or(n))?)
}

fn cap(n: u64, max_n: u64) -> CmdResult {
    if n == 0 || n > max_n {
        return Err(Failure::Usage(format!(
            "N = {n} is outside 1..={max_n} (raise with --max-n)"
        )));
    }
    Ok(())
}

fn cmd_series(args: &SeriesArgs) -> CmdResult {
    let spec = group(args.n, args.m)?;
    let order = args
        .order
        .unwrap_or(if spec.is_symmetric() { 24 } else { 16 });
    let sol = solve_auto(spec, order)?;
    let series = match args.gf {
        Gf::G => &sol.g,
        Gf::L => &sol.l,
        Gf::K => &sol.k,
    };
    let gf = match args.gf {
        Gf::G => "G",
        Gf::L => "L",
        Gf::K => "K",
    };
    let report = if args.qmode.q0 {
        SeriesReport::sequence(spec, order, gf, "q0", series.diagonal_q0())
    } else if args.qmode.q1 {
        SeriesReport::sequence(spec, order, gf, "q1", series.eval_q1())
    } else {
        SeriesReport::symbolic(spec, order, gf, series)
    };
    let text = match args.sink.format(Format::Text) {
        Format::Json => report.json(),
        Format::Csv => report.csv(),
        Format::Text => report.text(),
    };
    Ok(args.sink.emit(&text)?)
}

fn cmd_oracle(args: &OracleArgs) -> CmdResult {
    let spec = group(args.n, args.m)?;
    let table = count_tables(spec, args.nmax)?;
    let report = match args.family {
        FamilyArg::G => OracleReport::table(&table, Family::G),
        FamilyArg::L => OracleReport::table(&table, Family::L),
        FamilyArg::K => OracleReport::table(&table, Family::K),
        FamilyArg::D => OracleReport::table(&table, Family::D),
    };
    let text = match args.sink.format(Format::Csv) {
        Format::Json => report.json(),
        Format::Csv => report.csv(),
        Format::Text => report.text(),
    };
    Ok(args.sink.emit(&text)?)
}

fn cmd_poly(args: &PolyArgs) -> CmdResult {
    cap(args.n, args.max_n)?;
    let poly = build_g_poly(args.n)?;
    let text = match args.sink.format(Format::Text) {
        Format::Json => output::to_json(&poly.to_json()),
        Format::Csv => return Err(Failure::Usage("poly has no CSV form".into())),
        Format::Text => poly.to_canonical_text(),
    };
    Ok(args.sink.emit(&text)?)
}

fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    cap(args.n, args.max_n)?;
    let poly = build_g_poly(args.n)?;
    let sol = solve_auto(GroupSpec::symmetric(args.n)?, args.order)?;
    let qval = if args.q1 {
        QValue::Rational(BigRational::one())
    } else {
        QValue::Symbolic
    };
    let v = verify_series(&poly, &sol.g, &qval, args.order)?;
    match v.first_failure {
        None => {
            println!(
                "ok: G(z;q) of BS({0},{0}) satisfies its equation through z^{1}",
                args.n, args.order
            );
            Ok(())
        }
        Some(deg) => Err(Failure::Internal(format!(
            "equation for BS({0},{0}) fails at z^{deg}",
            args.n
        ))),
    }
}

fn cmd_rate(args: &RateArgs) -> CmdResult {
    let result = match args.method {
        MethodArg::Discriminant => rate_discriminant_capped(args.n, args.max_n)?,
        MethodArg::Ratio => {
            let spec = GroupSpec::symmetric(args.n)?;
            let coeffs = cogrowth_coeffs(spec, args.order)?;
            let correction = match args.correction {
                CorrectionArg::None => Correction::None,
                CorrectionArg::N2 => Correction::N2,
            };
            rate_ratio_result(args.n, &coeffs, correction)?
        }
    };
    let text = match args.sink.format(Format::Json) {
        Format::Json => output::to_json(&result),
        Format::Csv => output::rate_csv(&result),
        Format::Text => output::rate_text(&result),
    };
    Ok(args.sink.emit(&text)?)
}

fn cmd_repro(args: &ReproArgs) -> CmdResult {
    let report = repro::run();
    let text = match args.sink.format(Format::Json) {
        Format::Json => output::to_json(&report),
        Format::Csv => return Err(Failure::Usage("repro has no CSV form".into())),
        Format::Text => report.text(),
    };
    args.sink.emit(&text)?;
    if report.all_passed {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "{} of {} checks failed",
            report.checks.iter().filter(|c| !c.passed).count(),
            report.checks.len()
        )))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Series(a) => cmd_series(a),
        Command::Oracle(a) => cmd_oracle(a),
        Command::Poly(a) => cmd_poly(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Rate(a) => cmd_rate(a),
        Command::Repro(a) => cmd_repro(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
