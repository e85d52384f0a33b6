//! Command-line harness: frame and space ingestion, random instance
//! generation, verification-suite execution and machine-readable reports.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on bad
//! input (unparsable files, malformed flags).

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};

use pointfree::generate::generate_frame;
use pointfree::io::{classification_json, rat_from_str, FrameFile, SpaceFile};
use pointfree::spatial::spectrum;
use pointfree::suite::{run, SuiteConfig, SuiteName};
use pointfree::Rat;

#[derive(Parser)]
#[command(
    name = "pointfree",
    about = "Exact workbench for finite frames and pointfree real function algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a frame: regularity, complete regularity, extremal
    /// disconnectedness, Booleanness and related predicates, with witnesses
    Classify {
        /// Frame file (JSON: {"elements": [...], "leq": [[i,j], ...]})
        frame: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Compute the Boolean quotient (regular elements) of a frame
    Booleanize {
        frame: PathBuf,
        /// Output path; standard output when omitted
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the prime spectrum of a frame as a finite space
    Spectrum {
        frame: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random frame as the downset lattice of a random poset
    Generate {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Poset size (number of generators), at most 5
        #[arg(long, default_value_t = 3)]
        size: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suite and report per-law results
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest random frame, in elements
        #[arg(long, default_value_t = 8)]
        max_size: usize,
        /// Random instances per law
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Comma-separated breakpoint grid of rationals, e.g. "-2,-1,0,1,2"
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        /// Comma-separated subset of
        /// core,realfn,intervalfn,spatial,rieszfd,universal; all when omitted
        #[arg(long)]
        suites: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// Errors before any verification ran: bad files, bad flags.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

fn read_frame(path: &PathBuf) -> Result<pointfree::FiniteFrame, InputError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let file: FrameFile = serde_json::from_str(&text)?;
    Ok(file.to_frame()?)
}

fn emit(out: &Option<PathBuf>, body: &str) -> Result<(), InputError> {
    match out {
        Some(path) => {
            std::fs::write(path, body).map_err(|e| InputError(format!("{}: {e}", path.display())))?
        }
        None => print!("{body}"),
    }
    Ok(())
}

fn parse_grid(text: &str) -> Result<Vec<Rat>, InputError> {
    text.split(',')
        .map(|s| rat_from_str(s.trim()).map_err(InputError::from))
        .collect()
}

fn parse_suites(text: &str) -> Result<Vec<SuiteName>, InputError> {
    text.split(',')
        .map(|s| s.trim().parse::<SuiteName>().map_err(InputError))
        .collect()
}

fn dispatch(cli: Cli) -> Result<ExitCode, InputError> {
    match cli.command {
        Command::Classify { frame, format } => {
            let f = read_frame(&frame)?;
            let report = classification_json(&f);
            match format {
                Format::Structured => println!("{}", serde_json::to_string_pretty(&report)?),
                Format::Text => {
                    for rec in report.as_array().unwrap() {
                        let witness = match rec["witness"].as_str() {
                            Some(w) => format!(" (witness: {w})"),
                            None => String::new(),
                        };
                        println!(
                            "{}: {}{}",
                            rec["predicate"].as_str().unwrap(),
                            rec["holds"],
                            witness
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Booleanize { frame, out } => {
            let f = Arc::new(read_frame(&frame)?);
            let b = f.booleanize();
            let body = serde_json::to_string_pretty(&FrameFile::from_frame(&b.frame))?;
            emit(&out, &format!("{body}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { frame, out } => {
            let f = Arc::new(read_frame(&frame)?);
            let sp = spectrum(&f);
            let body = serde_json::to_string_pretty(&SpaceFile::from_space(&sp.space))?;
            emit(&out, &format!("{body}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Generate { seed, size, out } => {
            if size == 0 || size > 5 {
                return Err(InputError("size must be between 1 and 5".into()));
            }
            let f = generate_frame(seed, size);
            let body = serde_json::to_string_pretty(&FrameFile::from_frame(&f))?;
            emit(&out, &format!("{body}\n"))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            seed,
            max_size,
            samples,
            grid,
            suites,
            out,
            format,
        } => {
            let defaults = SuiteConfig::default();
            let cfg = SuiteConfig {
                seed,
                max_frame_size: max_size,
                samples_per_law: samples,
                breakpoint_grid: match grid {
                    Some(g) => parse_grid(&g)?,
                    None => defaults.breakpoint_grid,
                },
                suites: match suites {
                    Some(s) => parse_suites(&s)?,
                    None => defaults.suites,
                },
            };
            let report = run(&cfg).map_err(InputError)?;
            let body = match format {
                Format::Text => report.to_text(),
                Format::Structured => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report.to_json())?
                ),
            };
            emit(&out, &body)?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
