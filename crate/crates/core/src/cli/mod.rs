//! The `rfdb` command line.
//!
//! Exit codes: `0` when every check passes, `1` when a law or identity
//! fails (the witness is printed), `2` for usage and parse errors.

mod commands;
mod parse;

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use parse::{caret, parse_blocks, parse_map};

use crate::error::Error;
use crate::faa_di_bruno::{Mode, DEFAULT_MAX_N};
use crate::laws::Suite;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "rfdb",
    version,
    about = "Exact reverse and forward derivatives of polynomial maps"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a derivative of a polynomial map.
    ///
    /// Maps are written `(p1, p2, ...)` in the variables x1, x2, ... .
    /// Arguments introduced by a derivative continue the numbering after the
    /// input variables, block by block.
    Derive(DeriveArgs),
    /// Check the combinator laws on seeded random maps.
    Verify(VerifyArgs),
    /// List the set partitions of {1, ..., N}.
    Partitions(PartitionsArgs),
    /// Expand a Faà di Bruno formula and compare it with direct differentiation.
    Fdb(FdbArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Reverse,
    Forward,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Reverse => Mode::Reverse,
            ModeArg::Forward => Mode::Forward,
        }
    }
}

#[derive(Debug, Args)]
struct DeriveArgs {
    /// The map, or `-` to read it from stdin.
    #[arg(long)]
    map: String,
    /// Block dimensions of the domain, e.g. `2,1`. Defaults to one block
    /// holding every variable used.
    #[arg(long)]
    blocks: Option<String>,
    /// 0 prints the map itself.
    #[arg(long, default_value_t = 1)]
    order: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Reverse)]
    mode: ModeArg,
    /// Differentiate in block J only (1-based); needs order 1.
    #[arg(long, value_name = "J")]
    partial: Option<usize>,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all", value_parser = parse_suite)]
    suite: Suite,
    #[arg(long, env = "RFDB_SEED", default_value_t = 42)]
    seed: u64,
    /// Cases per law.
    #[arg(long, default_value_t = 100)]
    cases: usize,
    #[arg(long, default_value_t = 3)]
    max_dim: usize,
    #[arg(long, default_value_t = 3)]
    max_deg: u32,
    /// Largest n for the laws indexed by derivative order.
    #[arg(long, default_value_t = 3)]
    max_order: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct PartitionsArgs {
    n: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Debug, Args)]
struct FdbArgs {
    /// Inner map f : A -> B.
    #[arg(long = "f")]
    f: String,
    /// Outer map g : B -> C, written in x1, ..., x(dim B).
    #[arg(long = "g")]
    g: String,
    /// Dimension of A; defaults to the largest variable used in f.
    #[arg(long)]
    dim: Option<usize>,
    /// The formula computes the (n+1)-th derivative.
    #[arg(long, default_value_t = 1)]
    n: usize,
    #[arg(long, value_enum, default_value_t = ModeArg::Reverse)]
    mode: ModeArg,
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,
    #[arg(long)]
    json: bool,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse::<Suite>().map_err(|e| e.to_string())
}

/// Everything a command needs from the outside world.
pub struct Io<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

enum Failure {
    /// A check failed; the report has already been printed.
    Law,
    Error(Error),
    /// An error tied to a source string, reported with a caret.
    Source(Error, String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Runs the command line `args` (program name first) and returns the exit code.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            let sink: &mut dyn Write = if code == 0 { io.stdout } else { io.stderr };
            let _ = sink.write_all(text.as_bytes());
            return if code == 0 { EXIT_OK } else { EXIT_USAGE };
        }
    };
    let outcome = match cli.command {
        Command::Derive(a) => commands::derive(&a, io),
        Command::Verify(a) => commands::verify(&a, io),
        Command::Partitions(a) => commands::partitions(&a, io),
        Command::Fdb(a) => commands::fdb(&a, io),
    };
    exit_code(outcome, io.stderr)
}

/// Maps a command outcome to its exit code, reporting errors on `stderr`.
fn exit_code(outcome: Result<(), Failure>, stderr: &mut dyn Write) -> i32 {
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Law) => EXIT_FAILURE,
        Err(Failure::Error(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
        Err(Failure::Source(e, src)) => {
            let _ = writeln!(stderr, "error: {e}");
            if let Error::Parse { column, .. } = e {
                let _ = writeln!(stderr, "{}", caret(&src, column));
            }
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    let mut io = Io {
        stdin: &mut stdin.lock(),
        stdout: &mut stdout.lock(),
        stderr: &mut stderr.lock(),
    };
    run(std::env::args_os(), &mut io)
}
