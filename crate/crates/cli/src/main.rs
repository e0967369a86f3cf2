//! `teter`: decide Teter and strongly-Teter properties of numerical semigroup
//! rings and verify the fiber-product approximation.

mod batch;
mod paper;
mod report;

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use teter_core::approximation::DEFAULT_PRIMES;
use teter_core::teter::TeterOptions;
use teter_core::ApproximationOptions;

use report::{PipelineError, PipelineOptions};

#[derive(Parser)]
#[command(
    name = "teter",
    version,
    about = "Teter rings among numerical semigroup rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one semigroup given by generators, e.g. `3,4,5`.
    Analyze {
        generators: String,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the worked examples and compare with the expected values.
    PaperExamples {
        #[command(flatten)]
        pipeline: PipelineArgs,
        #[arg(long)]
        json: bool,
        /// Corrupt one expectation (self-test of the mismatch path).
        #[arg(long, hide = true)]
        inject_mismatch: bool,
    },
    /// Analyze one semigroup per line of FILE (`-` for stdin); JSON lines out.
    Batch {
        file: String,
        #[command(flatten)]
        pipeline: PipelineArgs,
        /// Exit 0 even when some lines are malformed.
        #[arg(long)]
        lenient: bool,
    },
}

#[derive(Args, Clone)]
struct PipelineArgs {
    /// Build and verify the fiber-product approximation B.
    #[arg(long)]
    approximate: bool,
    /// Truncation precision N (default 4(F + e + max generator)).
    #[arg(long)]
    precision: Option<usize>,
    /// Comma-separated primes for the characteristic cross-check.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_PRIMES)]
    primes: Vec<u64>,
    /// Scan shifts up to m(F + max generator).
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(i64).range(1..))]
    window_multiplier: i64,
    /// Seed for parameter perturbations in the approximation.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long)]
    timings: bool,
}

impl PipelineArgs {
    fn options(&self) -> PipelineOptions {
        PipelineOptions {
            approximate: self.approximate,
            teter: TeterOptions {
                window_multiplier: self.window_multiplier,
            },
            approximation: ApproximationOptions {
                precision: self.precision,
                primes: self.primes.clone(),
                seed: self.seed,
            },
            timings: self.timings,
        }
    }
}

fn fail(err: PipelineError) -> ExitCode {
    let label = match err {
        PipelineError::BadInput(_) => "invalid input",
        PipelineError::Internal(_) => "internal error",
    };
    eprintln!("teter: {label}: {}", err.message());
    ExitCode::from(err.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Analyze {
            generators,
            pipeline,
            json,
        } => {
            let doc = match report::parse_generators(&generators)
                .and_then(|g| report::analyze(&g, &pipeline.options()))
            {
                Ok(doc) => doc,
                Err(e) => return fail(e),
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("report serializes")
                );
            } else {
                print!("{}", report::render_text(&doc));
            }
            ExitCode::SUCCESS
        }
        Command::PaperExamples {
            pipeline,
            json,
            inject_mismatch,
        } => {
            let table = match paper::run(&pipeline.options(), inject_mismatch) {
                Ok(t) => t,
                Err(e) => return fail(e),
            };
            if json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&table).expect("table serializes")
                );
            } else {
                print!("{}", paper::render_text(&table));
            }
            if table.all_match {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::Batch {
            file,
            pipeline,
            lenient,
        } => {
            let mut text = String::new();
            let read = if file == "-" {
                std::io::stdin().read_to_string(&mut text).map(|_| ())
            } else {
                std::fs::read_to_string(&file).map(|t| text = t)
            };
            if let Err(e) = read {
                return fail(PipelineError::BadInput(format!("cannot read {file}: {e}")));
            }
            let out = batch::run(&text, &pipeline.options());
            for line in &out.lines {
                println!("{line}");
            }
            if out.internal_error {
                ExitCode::from(3)
            } else if out.bad_input && !lenient {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
    }
}
