mod commands;
mod input;
mod table;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lamrun_core::harness::{MachineKind, DEFAULT_FUEL};

/// Traces, compares and cross-checks abstract machines for closed
/// call-by-name λ-calculus.
#[derive(Parser)]
#[command(name = "lamrun", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct TermArgs {
    /// A term, or `@path` to read it from a file.
    term: String,
    /// Definitions file with `name = term;` statements.
    #[arg(long)]
    defs: Option<std::path::PathBuf>,
}

#[derive(clap::Args, Clone, Copy)]
struct FuelArg {
    /// Maximum number of transitions per run.
    #[arg(long, env = "LAMRUN_FUEL", default_value_t = DEFAULT_FUEL)]
    fuel: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Echo the parsed term with its size and closedness.
    Parse {
        #[command(flatten)]
        input: TermArgs,
    },
    /// Run one machine and print its trace.
    Run {
        #[arg(long, value_parser = parse_machine)]
        machine: MachineKind,
        #[command(flatten)]
        input: TermArgs,
        #[command(flatten)]
        fuel: FuelArg,
        #[arg(long, value_enum, default_value_t = TraceFormat::Table)]
        trace: TraceFormat,
        /// Write the trace here instead of stdout.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Run several machines on one term and tabulate their costs.
    Compare {
        #[command(flatten)]
        input: TermArgs,
        /// Comma-separated machine names.
        #[arg(long, value_delimiter = ',', value_parser = parse_machine, default_value = "iam,jam,pam,kam")]
        machines: Vec<MachineKind>,
        #[command(flatten)]
        fuel: FuelArg,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Infer the sequence-type derivation of `⊢ t : ★`.
    Types {
        #[command(flatten)]
        input: TermArgs,
        #[arg(long)]
        print_derivation: bool,
        /// Print the KAM and λIAM weights with the measured run lengths.
        #[arg(long)]
        weights: bool,
        #[command(flatten)]
        fuel: FuelArg,
    },
    /// Check a relationship between machines on a term or a generated corpus.
    Check {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(lamrun_core::equivalence::CHECKS))]
        name: String,
        /// A term, or `@path`.
        #[arg(required_unless_present = "corpus", conflicts_with = "corpus")]
        term: Option<String>,
        /// Generated corpus `seed,count,maxSize`.
        #[arg(long, value_parser = parse_corpus)]
        corpus: Option<(u64, usize, usize)>,
        #[arg(long)]
        defs: Option<std::path::PathBuf>,
        #[command(flatten)]
        fuel: FuelArg,
    },
    /// Run a benchmark family over a parameter range.
    Bench {
        #[arg(long, value_enum)]
        family: Family,
        /// Inclusive range `a..b`; for `rkh` both k and h range over it.
        #[arg(long, value_parser = parse_range)]
        range: (usize, usize),
        #[arg(long, value_enum, default_value_t = BenchFormat::Table)]
        format: BenchFormat,
        #[command(flatten)]
        fuel: FuelArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum TraceFormat {
    Table,
    Jsonl,
    None,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchFormat {
    Table,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Tn,
    Rkh,
}

fn parse_machine(s: &str) -> Result<MachineKind, String> {
    s.parse()
}

fn parse_corpus(s: &str) -> Result<(u64, usize, usize), String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [seed, count, max] = parts[..] else {
        return Err("expected seed,count,maxSize".into());
    };
    let bad = |e: std::num::ParseIntError| e.to_string();
    Ok((seed.parse().map_err(bad)?, count.parse().map_err(bad)?, max.parse().map_err(bad)?))
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once("..").ok_or("expected a..b")?;
    let a: usize = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b: usize = b.trim().parse().map_err(|e| format!("{e}"))?;
    if a > b {
        return Err(format!("empty range {a}..{b}"));
    }
    Ok((a, b))
}

/// Exit statuses.
pub const PASS: u8 = 0;
pub const CHECK_FAILURE: u8 = 1;
pub const FUEL_EXHAUSTED: u8 = 2;
pub const INPUT_ERROR: u8 = 3;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INPUT_ERROR } else { PASS });
        }
    };
    // Deep terms recurse deeply in the parser, printer and reduction oracle.
    let worker = std::thread::Builder::new()
        .stack_size(512 << 20)
        .spawn(move || commands::execute(cli.command))
        .expect("spawn worker thread");
    let status = match worker.join() {
        Ok(Ok(status)) => status,
        Ok(Err(e)) => {
            eprintln!("lamrun: {e}");
            INPUT_ERROR
        }
        Err(_) => CHECK_FAILURE,
    };
    ExitCode::from(status)
}
