//! Command-line front end: builds the algebras, runs the checks and prints
//! one tab-separated record per check.
//!
//! Exit codes are 0 when every check passes, 1 when some check fails and 2
//! for usage, parse and parameter errors. Records with status `evidence`
//! come from searches or random sampling and never fail a run.

mod family;
mod report;
mod symmetric;
mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{num, Record, Report, Status, HEADER};

/// Seed used when `--seed` is absent.
pub const DEFAULT_SEED: u64 = 0xE1_5731;

#[derive(Debug, Parser)]
#[command(name = "solvgeom", version, about = "Verify curvature properties of metric solvable Lie algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a builtin algebra or an algebra document.
    Verify(VerifyArgs),
    /// Rank-one solvmanifolds built from two-step nilpotent data.
    #[command(subcommand)]
    Carnot(CarnotCommand),
    /// The two-parameter family of uniform subspaces of so(6).
    #[command(subcommand)]
    Family(FamilyCommand),
    /// Iwasawa algebras of symmetric spaces and their twists.
    #[command(subcommand)]
    Symmetric(SymmetricCommand),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// `complex-hyperbolic`, `carnot`, or the path of an algebra document.
    pub target: String,
    /// Complex dimension of the complex hyperbolic space.
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    #[arg(long, default_value_t = 3)]
    pub r: usize,
    #[arg(long, default_value_t = 3)]
    pub s: usize,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Tolerance of the main checks.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Seed for random restarts and sampling (decimal or 0x-prefixed hex).
    #[arg(long, value_parser = parse_seed)]
    pub seed: Option<u64>,
    /// Output file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl Common {
    pub fn seed(&self) -> u64 {
        self.seed.unwrap_or(DEFAULT_SEED)
    }
}

fn parse_seed(s: &str) -> Result<u64, String> {
    let parsed = match s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => s.parse(),
    };
    parsed.map_err(|e| format!("invalid seed {s:?}: {e}"))
}

#[derive(Debug, Subcommand)]
pub enum CarnotCommand {
    /// Same as `verify carnot`.
    Verify(VerifyCarnotArgs),
    /// Search so(r) for uniform subspaces of dimension s.
    Search(SearchArgs),
    /// Count uniform subspaces of so(4) up to equivalence, for s = 1..6.
    ClassifySo4(ClassifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyCarnotArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum FamilyCommand {
    /// Tabulate Einstein residuals, angles and sampled curvature over a grid.
    Report(FamilyArgs),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// Grid resolution: number of latitudes from the pole to the equator.
    #[arg(long, default_value_t = 25)]
    pub grid: usize,
    /// Random planes sampled per grid point.
    #[arg(long, default_value_t = 200)]
    pub samples: usize,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum SymmetricCommand {
    /// Build an algebra, check it and optionally twist it.
    Build(BuildArgs),
    /// Like `build`, with a mandatory twist.
    Twist(BuildArgs),
    /// Print the bracket table of the nilradical.
    Table(TableArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpaceKind {
    #[value(name = "so_pq")]
    SoPq,
    #[value(name = "su_pq")]
    SuPq,
    #[value(name = "sp_pq")]
    SpPq,
    #[value(name = "so_nH")]
    SoNH,
    #[value(name = "sl_nH")]
    SlNH,
    #[value(name = "type4_sl")]
    TypeIvSl,
    #[value(name = "sl_nR")]
    SlNR,
}

#[derive(Debug, Args)]
pub struct SpaceArgs {
    #[arg(long, value_enum)]
    pub space: SpaceKind,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    /// `none`, `paper`, `wa:<a>`, `rh:<i,j,..>`, `bits:<mask>` or `enumerate`.
    #[arg(long, alias = "set")]
    pub twist: Option<String>,
    /// Golden bracket table to compare the untwisted algebra against.
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub space: SpaceArgs,
    #[arg(long)]
    pub golden: Option<PathBuf>,
    #[command(flatten)]
    pub common: Common,
}

/// Everything a run produces. `main` prints the two streams and exits with
/// `code`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A bad parameter, unreadable input or unwritable output.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

/// Report plus an optional data product (a CSV file or a table).
pub(crate) struct Produced {
    pub report: Report,
    pub data: Option<String>,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let echo = std::iter::once("solvgeom".to_string())
        .chain(args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()))
        .collect::<Vec<_>>()
        .join(" ");
    let start = Instant::now();
    let (produced, out) = match dispatch(&cli.command, echo) {
        Ok(p) => p,
        Err(UsageError(msg)) => return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {msg}\n") },
    };
    let elapsed = start.elapsed().as_secs_f64();
    let code = if produced.report.passed() { 0 } else { 1 };
    let text = produced.report.render();
    let mut outcome = Outcome { code, ..Default::default() };
    let result = match (produced.data, out) {
        // The data product takes --out; the report stays on stdout.
        (Some(data), Some(path)) => std::fs::write(path, data).map(|_| outcome.stdout = text),
        // No --out: data on stdout, report on stderr.
        (Some(data), None) => {
            outcome.stdout = data;
            outcome.stderr = text;
            Ok(())
        }
        (None, Some(path)) => std::fs::write(path, text),
        (None, None) => {
            outcome.stdout = text;
            Ok(())
        }
    };
    if let Err(e) = result {
        return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") };
    }
    outcome.stderr.push_str(&format!("# runtime\t{elapsed:.3} s\n"));
    outcome
}

fn dispatch(cmd: &Command, echo: String) -> Result<(Produced, Option<PathBuf>), UsageError> {
    Ok(match cmd {
        Command::Verify(a) => (verify::verify(a, echo)?, a.common.out.clone()),
        Command::Carnot(CarnotCommand::Verify(a)) => {
            (verify::verify_carnot(a.r, a.s, a.trials, &a.common, echo)?, a.common.out.clone())
        }
        Command::Carnot(CarnotCommand::Search(a)) => (verify::search(a, echo)?, a.common.out.clone()),
        Command::Carnot(CarnotCommand::ClassifySo4(a)) => (verify::classify(a, echo)?, a.common.out.clone()),
        Command::Family(FamilyCommand::Report(a)) => (family::report(a, echo)?, a.common.out.clone()),
        Command::Symmetric(SymmetricCommand::Build(a)) => (symmetric::build(a, false, echo)?, a.common.out.clone()),
        Command::Symmetric(SymmetricCommand::Twist(a)) => (symmetric::build(a, true, echo)?, a.common.out.clone()),
        Command::Symmetric(SymmetricCommand::Table(a)) => (symmetric::table(a, echo)?, a.common.out.clone()),
    })
}

/// Thread count requested through `SOLVGEOM_THREADS`, if any.
pub fn threads_from_env(value: Option<&str>) -> Result<Option<usize>, String> {
    match value {
        None => Ok(None),
        Some(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(format!("SOLVGEOM_THREADS must be a positive integer, got {v:?}")),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds() {
        assert_eq!(parse_seed("0xff"), Ok(255));
        assert_eq!(parse_seed("12"), Ok(12));
        assert!(parse_seed("0xE1N5T31N").is_err());
    }

    #[test]
    fn thread_env() {
        assert_eq!(threads_from_env(None), Ok(None));
        assert_eq!(threads_from_env(Some("4")), Ok(Some(4)));
        assert!(threads_from_env(Some("0")).is_err());
        assert!(threads_from_env(Some("many")).is_err());
    }
}
