use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use molp_core::format::{self, ResultDoc};
use molp_core::molp::MolpInstance;
use molp_core::verify::{self, Algorithm};
use molp_core::{cyclicgen, oracle, Error};

#[derive(Parser)]
#[command(
    name = "molp",
    version,
    about = "Exact efficient extreme outcomes of multiobjective LPs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the efficient extreme outcomes of an instance.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        /// Result file; printed to stdout when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Also write the run statistics on their own.
        #[arg(long)]
        stats: Option<PathBuf>,
        /// Column subsets the oracle may examine.
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u128,
    },
    /// Write a generated instance.
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Run every algorithm on an instance and cross-check the results.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = oracle::DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Subcommand)]
enum GenerateKind {
    /// Dual cyclic polytope embedded as the outcome set of an MOLP.
    DualCyclic {
        #[arg(long)]
        dimension: usize,
        #[arg(long)]
        facets: usize,
        #[arg(long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Projective,
    Euclidean,
    Oracle,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Self {
        match a {
            AlgorithmArg::Projective => Algorithm::Projective,
            AlgorithmArg::Euclidean => Algorithm::Euclidean,
            AlgorithmArg::Oracle => Algorithm::Oracle,
        }
    }
}

const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INVALID: u8 = 3;
const EXIT_BUDGET: u8 = 4;

/// A failure with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) | Error::InvalidSpec(_) | Error::InvalidInstance(_) => EXIT_INPUT,
            Error::InfeasibleInstance | Error::UnboundedInstance => EXIT_INVALID,
            Error::BudgetExceeded { .. } => EXIT_BUDGET,
            _ => EXIT_MISMATCH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: EXIT_INPUT,
        message: format!("{}: {e}", path.display()),
    }
}

fn load(path: &Path) -> Result<MolpInstance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    format::parse_instance(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Solve {
            input,
            algorithm,
            output,
            stats,
            budget,
        } => {
            let inst = load(&input)?;
            let algorithm = Algorithm::from(algorithm);
            let sol = verify::solve(&inst, algorithm, budget)?;
            let doc = ResultDoc::new(algorithm.name(), &sol.outcomes, &sol.stats);
            match output {
                Some(path) => write(&path, &doc.to_toml())?,
                None => print!("{}", doc.to_toml()),
            }
            if let Some(path) = stats {
                write(&path, &format::stats_to_string(&sol.stats))?;
            }
            Ok(())
        }
        Command::Generate {
            kind:
                GenerateKind::DualCyclic {
                    dimension,
                    facets,
                    output,
                },
        } => {
            let inst = cyclicgen::dual_cyclic_instance(dimension, facets)?;
            write(&output, &format::instance_to_string(&inst))
        }
        Command::Verify { input, budget } => {
            let inst = load(&input)?;
            let report = verify::verify_instance(&inst, budget)?;
            let color = std::env::var_os("NO_COLOR").is_none_or(|v| v.is_empty());
            print!("{}", report.render(color));
            if report.passed() {
                Ok(())
            } else {
                Err(Failure {
                    code: EXIT_MISMATCH,
                    message: "verification failed".into(),
                })
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
