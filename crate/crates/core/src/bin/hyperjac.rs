use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hyperjac::cli::{self, CommandOutput, ExitStatus, Method, SelftestConfig};

#[derive(Parser)]
#[command(
    name = "hyperjac",
    version,
    about = "Explicit group law on hyperelliptic Jacobians"
)]
struct Opts {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Add two divisors.
    Add {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        d1: String,
        #[arg(long)]
        d2: String,
        #[arg(long, default_value = "both")]
        method: Method,
        #[arg(long)]
        retry_translation: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Differential sweep against Cantor's algorithm.
    Selftest(Sweep),
    /// Timing table for explicit and Cantor additions.
    Bench(Sweep),
    /// A random divisor on the curve.
    Random {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Chart membership and cofactor.
    Check {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Negate a divisor.
    Neg {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Double a divisor through a random auxiliary divisor.
    Double {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long)]
        d: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct Sweep {
    #[arg(long, default_value_t = 8)]
    genus_max: usize,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 10007)]
    modulus: u64,
    #[arg(long)]
    json: Option<PathBuf>,
}

impl Sweep {
    fn config(&self) -> SelftestConfig {
        SelftestConfig {
            genus_max: self.genus_max,
            trials: self.trials,
            seed: self.seed,
            modulus: self.modulus,
        }
    }
}

fn read(path: &Path) -> Result<String, CommandOutput> {
    std::fs::read_to_string(path).map_err(|e| CommandOutput {
        text: format!("error: {}: {e}\n", path.display()),
        status: ExitStatus::Usage,
    })
}

fn write_json<T: serde::Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), CommandOutput> {
    let Some(path) = path else { return Ok(()) };
    let json = serde_json::to_string_pretty(value).expect("report serializes");
    std::fs::write(path, json).map_err(|e| CommandOutput {
        text: format!("error: {}: {e}\n", path.display()),
        status: ExitStatus::Usage,
    })
}

fn usage(e: impl std::fmt::Display) -> CommandOutput {
    CommandOutput {
        text: format!("error: {e}\n"),
        status: ExitStatus::Usage,
    }
}

fn run(command: Command) -> Result<CommandOutput, CommandOutput> {
    Ok(match command {
        Command::Add {
            curve,
            d1,
            d2,
            method,
            retry_translation,
            seed,
        } => cli::cmd_add(&read(&curve)?, &d1, &d2, method, retry_translation, seed),
        Command::Selftest(sweep) => {
            let report = cli::selftest(&sweep.config()).map_err(usage)?;
            write_json(&sweep.json, &report)?;
            CommandOutput {
                text: report.to_text(),
                status: if report.passed {
                    ExitStatus::Ok
                } else {
                    ExitStatus::Degenerate
                },
            }
        }
        Command::Bench(sweep) => {
            let report = cli::bench(&sweep.config()).map_err(usage)?;
            write_json(&sweep.json, &report)?;
            CommandOutput {
                text: report.to_text(),
                status: ExitStatus::Ok,
            }
        }
        Command::Random { curve, seed } => cli::cmd_random(&read(&curve)?, seed),
        Command::Check { curve, d, .. } => cli::cmd_check(&read(&curve)?, &d),
        Command::Neg { curve, d, .. } => cli::cmd_neg(&read(&curve)?, &d),
        Command::Double { curve, d, seed } => cli::cmd_double(&read(&curve)?, &d, seed),
    })
}

fn main() -> ExitCode {
    let opts = Opts::parse();
    let out = run(opts.command).unwrap_or_else(|e| e);
    if out.status == ExitStatus::Usage {
        eprint!("{}", out.text);
    } else {
        print!("{}", out.text);
    }
    ExitCode::from(out.status.code() as u8)
}
