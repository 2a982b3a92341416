//! `ssgs`: square decompositions, New Mean statistics, and the moving
//! average pipeline from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 representation overflow, 4 domain/range error.

use std::fs::File;
use std::io::{BufReader, BufWriter, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ssgs_cli::csv::{emit_csv, ingest_csv, CsvError};
use ssgs_cli::{normalize_series, render_verify};
use ssgs_core::signal::{moving_windows, SignalError};
use ssgs_core::ssgs::DecimalError;
use ssgs_core::stats::StatsError;
use ssgs_core::{decompose, decompose_decimal, summarize, verify};

const EXIT_VERIFY: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_OVERFLOW: u8 = 3;
const EXIT_DOMAIN: u8 = 4;

#[derive(Parser)]
#[command(name = "ssgs", version, about = "Unique square decompositions and the statistics built on them")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the square decomposition of a nonnegative integer or decimal
    Decompose {
        /// Treat the value as decimal text and scale by a power of ten
        #[arg(long)]
        decimal: bool,
        /// The value to decompose
        value: String,
    },
    /// Arithmetic mean, New Mean, lambda, SD and New SD of a set of integers
    Mean {
        /// Read values from a file, one per line, instead of the command line
        #[arg(long, conflicts_with = "values")]
        input: Option<PathBuf>,
        /// Values given inline
        values: Vec<String>,
    },
    /// Sliding-window moving average / New Moving Average over a CSV series
    Nma {
        /// Input series: `value` or `index,value` lines, optional header
        #[arg(long)]
        input: PathBuf,
        /// Window length
        #[arg(long)]
        window: usize,
        /// Output CSV path
        #[arg(long)]
        output: PathBuf,
    },
    /// Run the seeded self-verification suites
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        cases: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Decompose { decimal, value } => cmd_decompose(decimal, &value),
        Command::Mean { input, values } => cmd_mean(input.as_deref(), &values),
        Command::Nma {
            input,
            window,
            output,
        } => cmd_nma(&input, window, &output),
        Command::Verify { seed, cases } => cmd_verify(seed, cases),
    }
}

fn cmd_decompose(decimal: bool, value: &str) -> Result<u8, Failure> {
    if decimal {
        let d = decompose_decimal(value).map_err(|e| match e {
            DecimalError::Parse(_) | DecimalError::Negative => fail(EXIT_PARSE, e.to_string()),
            DecimalError::TooLarge => fail(EXIT_OVERFLOW, e.to_string()),
        })?;
        println!("{value} = {d}");
    } else {
        let x: u64 = value
            .parse()
            .map_err(|_| fail(EXIT_PARSE, format!("not a nonnegative integer: {value:?}")))?;
        println!("{value} = {}", decompose(x));
    }
    Ok(0)
}

fn parse_values(tokens: &[String]) -> Result<Vec<u64>, Failure> {
    tokens
        .iter()
        .map(|t| {
            t.parse()
                .map_err(|_| fail(EXIT_PARSE, format!("not a nonnegative integer: {t:?}")))
        })
        .collect()
}

fn stats_failure(e: StatsError) -> Failure {
    match e {
        StatsError::EmptySet => fail(EXIT_DOMAIN, e.to_string()),
        StatsError::RepresentationOverflow { .. } => fail(EXIT_OVERFLOW, e.to_string()),
    }
}

fn cmd_mean(input: Option<&Path>, inline: &[String]) -> Result<u8, Failure> {
    let values = match input {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
            let tokens: Vec<String> = text
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect();
            parse_values(&tokens)?
        }
        None => parse_values(inline)?,
    };
    if values.is_empty() {
        return Err(fail(EXIT_DOMAIN, "empty set"));
    }
    let s = summarize(&values).map_err(stats_failure)?;
    println!("am {:.6}", s.am);
    println!("new_mean {:.6}", s.new_mean);
    println!("lambda {:.6}", s.lambda);
    println!("sd {:.6}", s.sd);
    println!("new_sd {:.6}", s.new_sd);
    Ok(0)
}

fn cmd_nma(input: &Path, window: usize, output: &Path) -> Result<u8, Failure> {
    let file = File::open(input)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", input.display())))?;
    let series = ingest_csv(BufReader::new(file)).map_err(|e| match e {
        CsvError::Io(_) | CsvError::Empty | CsvError::Malformed { .. } => {
            fail(EXIT_PARSE, e.to_string())
        }
    })?;
    let integers = normalize_series(&series.samples).map_err(signal_failure)?;
    let reports = moving_windows(&integers, window).map_err(signal_failure)?;
    let file = File::create(output)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", output.display())))?;
    let mut sink = BufWriter::new(file);
    emit_csv(&reports, &mut sink)
        .and_then(|()| sink.flush())
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", output.display())))?;
    println!("windows {}", reports.len());
    Ok(0)
}

fn signal_failure(e: SignalError) -> Failure {
    match e {
        SignalError::EmptySeries => fail(EXIT_DOMAIN, e.to_string()),
        SignalError::WindowOutOfRange { .. } => fail(EXIT_DOMAIN, e.to_string()),
        SignalError::ValueOutOfRange => fail(EXIT_OVERFLOW, e.to_string()),
        SignalError::Stats(inner) => stats_failure(inner),
    }
}

fn cmd_verify(seed: u64, cases: u64) -> Result<u8, Failure> {
    let reports = verify::run_all(seed, cases);
    let (text, code) = render_verify(seed, cases, &reports);
    print!("{text}");
    Ok(if code == 0 { 0 } else { EXIT_VERIFY })
}
