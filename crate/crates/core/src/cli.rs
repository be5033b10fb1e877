//! Command-line front end.
//!
//! ```text
//! multinomial-moments moment  --m 10 --x 1/4 --p 2 --central
//! multinomial-moments formula --p 2,1 --format latex
//! multinomial-moments catalog --order 4 --central --ordinary
//! multinomial-moments verify  --max-m 6 --dims 1,2,3 --order 4
//! multinomial-moments sample  --m 20 --x 1/4,1/3 --p 2,1 --n 1000000 --seed 7
//! ```
//!
//! Exit status: 0 on success, 1 on invalid input, 2 when a verification
//! sweep finds a mismatch.

use std::io::Write;

use clap::{Args, Parser, Subcommand};

use crate::errata;
use crate::oracle::{self, Mode, OracleReport, ProbabilityGrid};
use crate::rational::{self, to_decimal, to_f64};
use crate::symbolic::{self, render, Format, MomentPoly, Pattern};
use crate::{MultiIndex, MultinomialParams, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "multinomial-moments",
    version,
    about = "Exact moments of the multinomial distribution"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one moment exactly for concrete m and x
    Moment(MomentArgs),
    /// Print the closed-form polynomial for one exponent pattern
    Formula(FormulaArgs),
    /// Print the formulas for every pattern up to a total order
    Catalog(CatalogArgs),
    /// Check the formulas against brute-force enumeration
    Verify(VerifyArgs),
    /// Monte Carlo estimate of a moment
    Sample(SampleArgs),
}

#[derive(Debug, Args)]
pub struct ModeFlags {
    /// Central moment E[Π (ξ_i - m x_i)^p_i]
    #[arg(long, conflicts_with = "factorial")]
    pub central: bool,
    /// Factorial moment E[Π ξ_i^(p_i)]
    #[arg(long)]
    pub factorial: bool,
}

impl ModeFlags {
    fn mode(&self) -> Mode {
        match (self.central, self.factorial) {
            (true, _) => Mode::Central,
            (_, true) => Mode::Factorial,
            _ => Mode::Noncentral,
        }
    }
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    /// Number of trials
    #[arg(long)]
    pub m: u64,
    /// Probabilities as comma-separated rationals, e.g. 1/4,1/3
    #[arg(long, value_parser = parse_rationals)]
    pub x: RationalList,
    /// Exponents, one per probability
    #[arg(long, value_parser = parse_uints)]
    pub p: UintList,
    #[command(flatten)]
    pub mode: ModeFlags,
    /// Also print a rounded decimal with this many places
    #[arg(long)]
    pub decimal: Option<usize>,
}

#[derive(Debug, Args)]
pub struct FormulaArgs {
    /// Exponent pattern over distinct coordinates, e.g. 2,1,1
    #[arg(long, value_parser = parse_uints)]
    pub p: UintList,
    /// Central moment instead of non-central
    #[arg(long)]
    pub central: bool,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
    /// Expand the m part in ordinary powers instead of falling factorials
    #[arg(long)]
    pub ordinary: bool,
}

#[derive(Debug, Args)]
pub struct CatalogArgs {
    /// Highest total order to list
    #[arg(long, default_value_t = 4)]
    pub order: u32,
    #[arg(long)]
    pub central: bool,
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
    #[arg(long)]
    pub ordinary: bool,
    /// List the known misprints in the published order-8 table and exit
    #[arg(long)]
    pub paper_errata: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long = "max-m", default_value_t = 6)]
    pub max_m: u64,
    #[arg(long, default_value = "1,2,3", value_parser = parse_uints)]
    pub dims: UintList,
    /// Highest total order of the exponent vectors
    #[arg(long, default_value_t = 4)]
    pub order: u32,
    /// `text` prints a summary and any failures; `json` prints every report
    #[arg(long, default_value = "text", value_parser = parse_format)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long, value_parser = parse_rationals)]
    pub x: RationalList,
    #[arg(long, value_parser = parse_uints)]
    pub p: UintList,
    #[command(flatten)]
    pub mode: ModeFlags,
    /// Number of draws
    #[arg(long, default_value_t = 1_000_000)]
    pub n: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct RationalList(pub Vec<Rational>);

#[derive(Debug, Clone)]
pub struct UintList(pub Vec<u32>);

fn parse_rationals(s: &str) -> Result<RationalList, String> {
    s.split(',')
        .map(|part| rational::parse(part).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()
        .map(RationalList)
}

fn parse_uints(s: &str) -> Result<UintList, String> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| format!("cannot parse non-negative integer from {part:?}"))
        })
        .collect::<Result<_, _>>()
        .map(UintList)
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|_| format!("unknown format {s:?}; expected text, latex or json"))
}

/// Parses `argv` (program name first) and runs the command, writing to the
/// given streams. Returns the process exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    if !rendered.contains("Usage:") {
                        use clap::CommandFactory;
                        let _ = writeln!(err, "\n{}", Cli::command().render_usage());
                    }
                    EXIT_INVALID
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INVALID
        }
    }
}

type CmdResult = Result<i32, Box<dyn std::error::Error>>;

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Moment(a) => moment(a, out),
        Command::Formula(a) => formula(a, out),
        Command::Catalog(a) => catalog(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Sample(a) => sample(a, out),
    }
}

fn moment(a: MomentArgs, out: &mut dyn Write) -> CmdResult {
    let params = MultinomialParams::new(a.m, a.x.0)?;
    let value = a.mode.mode().formula(&params, &MultiIndex::from(a.p.0))?;
    writeln!(out, "{value}")?;
    if let Some(digits) = a.decimal {
        writeln!(out, "~{} (approximate)", to_decimal(&value, digits))?;
    }
    Ok(EXIT_OK)
}

fn poly_for(pattern: &Pattern, central: bool) -> MomentPoly {
    if central {
        symbolic::symbolic_central(pattern)
    } else {
        symbolic::symbolic_noncentral(pattern)
    }
}

fn render_in(poly: &MomentPoly, format: Format, ordinary: bool) -> String {
    if ordinary {
        render(&symbolic::to_ordinary(poly), format)
    } else {
        render(poly, format)
    }
}

fn formula(a: FormulaArgs, out: &mut dyn Write) -> CmdResult {
    let pattern = Pattern::new(a.p.0)?;
    let poly = poly_for(&pattern, a.central);
    writeln!(out, "{}", render_in(&poly, a.format, a.ordinary))?;
    Ok(EXIT_OK)
}

fn latex_lhs(pattern: &Pattern, central: bool) -> String {
    let factors: Vec<String> = pattern
        .exponents()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let base = if central {
                format!("(\\xi_{{{j}}} - m x_{{{j}}})", j = i + 1)
            } else {
                format!("\\xi_{{{}}}", i + 1)
            };
            if e > 1 {
                format!("{base}^{{{e}}}")
            } else {
                base
            }
        })
        .collect();
    format!("\\mathbb{{E}}[{}]", factors.join(" "))
}

fn catalog(a: CatalogArgs, out: &mut dyn Write) -> CmdResult {
    if a.paper_errata {
        for e in errata::KNOWN {
            writeln!(out, "{e}")?;
        }
        return Ok(EXIT_OK);
    }
    if a.order == 0 {
        return Err("--order must be at least 1".into());
    }
    for (pattern, poly) in symbolic::catalog(a.order, a.central) {
        let body = render_in(&poly, a.format, a.ordinary);
        match a.format {
            Format::Text => writeln!(out, "{pattern}: {body}")?,
            Format::Latex => writeln!(out, "{} &= {body} \\\\", latex_lhs(&pattern, a.central))?,
            Format::Json => writeln!(out, "{body}")?,
        }
    }
    Ok(EXIT_OK)
}

fn verify(a: VerifyArgs, out: &mut dyn Write) -> CmdResult {
    let dims: Vec<usize> = a.dims.0.iter().map(|&d| d as usize).collect();
    if dims.contains(&0) {
        return Err("--dims entries must be at least 1".into());
    }
    let reports = oracle::verify_sweep(a.max_m, &dims, a.order, &ProbabilityGrid::default())?;
    let failed = reports.iter().filter(|r| !r.pass).count();
    match a.format {
        Format::Json => {
            for r in &reports {
                writeln!(out, "{}", r.to_json_line())?;
            }
        }
        _ => {
            for r in reports.iter().filter(|r| !r.pass) {
                writeln!(out, "{}", r.to_json_line())?;
            }
            writeln!(out, "checked {} moments, {} failed", reports.len(), failed)?;
        }
    }
    Ok(verify_status(&reports))
}

/// [`EXIT_VERIFY_FAILED`] iff any report failed.
pub fn verify_status(reports: &[OracleReport]) -> i32 {
    if reports.iter().all(|r| r.pass) {
        EXIT_OK
    } else {
        EXIT_VERIFY_FAILED
    }
}

fn sample(a: SampleArgs, out: &mut dyn Write) -> CmdResult {
    let params = MultinomialParams::new(a.m, a.x.0)?;
    let p = MultiIndex::from(a.p.0);
    let mode = a.mode.mode();
    let exact = mode.formula(&params, &p)?;
    let est = oracle::sample_moment(&params, &p, mode, a.n, a.seed)?;
    writeln!(out, "mean {}", est.mean)?;
    writeln!(out, "standard_error {}", est.standard_error)?;
    writeln!(out, "n {}", est.n_samples)?;
    writeln!(out, "seed {}", est.seed)?;
    writeln!(out, "exact {exact} (~{})", to_f64(&exact))?;
    Ok(EXIT_OK)
}
