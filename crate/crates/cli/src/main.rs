//! `icosa`: classify harmonic cubics and binary sextics, search for
//! icosahedral sets, and run the verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 precision failure, 4 solver budget exhausted.

mod document;
mod report;
mod verify;

use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use icosa_core::so3::Vector;
use icosa_core::solver::{generate_cubic_from_param, SolveConfig};
use icosa_core::CoreError;
use icosa_exact::{parse_rational, ExactError, QSqrt5, Rational};

use document::{CubicDocument, SexticDocument};

#[derive(Parser)]
#[command(name = "icosa", version, about = "Icosahedral sets on harmonic cubics")]
struct Cli {
    /// Working precision in bits for numeric steps.
    #[arg(long, global = true, env = "ICOSA_PRECISION_BITS", default_value_t = 128)]
    precision: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Cubic document (`-` for stdin).
    #[arg(long)]
    cubic: Option<PathBuf>,
    /// Sextic document (`-` for stdin).
    #[arg(long)]
    sextic: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants, flags and verdict for a cubic or sextic.
    Classify {
        #[command(flatten)]
        input: Input,
        /// Also run the solver on a cubic and summarize the classes found.
        #[arg(long)]
        solve: bool,
        #[arg(long, default_value_t = 200)]
        starts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Deduplicated icosahedral sets on a cubic.
    FindIcosa {
        #[arg(long)]
        cubic: PathBuf,
        #[arg(long, default_value_t = 200)]
        starts: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: verify::Suite,
        /// Largest degree for the weights suite.
        #[arg(long, default_value_t = 6)]
        max_d: u32,
    },
    /// A random cubic through an exactly rotated icosahedron.
    GenerateCubic {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cayley parameter of the rotation as three rationals, e.g. `1/2,0,-3`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        param: Option<Vec<String>>,
    },
}

enum Failure {
    Verification,
    Malformed(String),
    Precision(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification => 1,
            Failure::Malformed(_) => 2,
            Failure::Precision(_) => 3,
            Failure::Budget(_) => 4,
        }
    }
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::Exact(ExactError::PrecisionUnachievable { .. }) => Failure::Precision(e.to_string()),
            e => Failure::Malformed(e.to_string()),
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    let mut text = String::new();
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map_err(|e| Failure::Malformed(format!("stdin: {e}")))?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))?;
    }
    Ok(text)
}

fn parse<T: serde::de::DeserializeOwned>(path: &PathBuf) -> Result<T, Failure> {
    serde_json::from_str(&read_input(path)?).map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

/// Writes pretty JSON to stdout; a closed pipe is not an error.
fn emit<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn run(cli: Cli) -> Result<(), Failure> {
    let prec = cli.precision;
    if !(16..=8192).contains(&prec) {
        return Err(Failure::Malformed(format!("precision {prec} outside 16..=8192")));
    }
    match cli.command {
        Command::Classify { input, solve, starts, seed } => {
            let report = if let Some(path) = &input.cubic {
                let cubic = parse::<CubicDocument>(path)?.decode(prec).map_err(Failure::Malformed)?;
                let solver = if solve {
                    let cfg = SolveConfig { starts, seed, precision: prec, ..SolveConfig::default() };
                    Some(report::summary(&report::solve(&cubic, &cfg)?))
                } else {
                    None
                };
                report::classify(&report::sextic_of(&cubic, prec)?, prec, solver)?
            } else {
                let path = input.sextic.as_ref().expect("clap enforces one input");
                let coeffs = parse::<SexticDocument>(path)?.decode(prec).map_err(Failure::Malformed)?;
                report::classify(&report::sextic_from_coeffs(coeffs), prec, None)?
            };
            emit(&report);
        }
        Command::FindIcosa { cubic, starts, tol, seed } => {
            let cubic = parse::<CubicDocument>(&cubic)?.decode(prec).map_err(Failure::Malformed)?;
            let cfg = SolveConfig { starts, tol, seed, precision: prec, ..SolveConfig::default() };
            let r = report::solve(&cubic, &cfg)?;
            emit(&report::find_report(&r, &cfg));
            if r.solutions.is_empty() {
                return Err(Failure::Budget(format!("no icosahedral set found from {starts} starts")));
            }
        }
        Command::Verify { suite, max_d } => {
            if max_d < 2 {
                return Err(Failure::Malformed("--max-d must be at least 2".into()));
            }
            let r = verify::run(suite, max_d, prec);
            emit(&r);
            if !r.passed {
                return Err(Failure::Verification);
            }
        }
        Command::GenerateCubic { seed, param } => {
            let s: Vector<QSqrt5> = match param {
                Some(p) => {
                    if p.len() != 3 {
                        return Err(Failure::Malformed(format!("--param needs 3 values, found {}", p.len())));
                    }
                    let q: Vec<Rational> = p
                        .iter()
                        .map(|t| parse_rational(t).map_err(|e| Failure::Malformed(e.to_string())))
                        .collect::<Result<_, _>>()?;
                    [0, 1, 2].map(|i| QSqrt5::rational(q[i].clone()))
                }
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    [0; 3].map(|_| QSqrt5::rational(Rational::from((rng.gen_range(-8..=8), 4))))
                }
            };
            let gen = generate_cubic_from_param(&s, seed)?;
            emit(&CubicDocument::from_exact(&gen.cubic.lift()));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Verification => eprintln!("verification failed"),
                Failure::Malformed(m) | Failure::Precision(m) | Failure::Budget(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}
