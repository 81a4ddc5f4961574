//! `hampair` command-line front end.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hampair::metric::ExactSolverBudget;
use hampair::Execution;

#[derive(Parser, Debug)]
#[command(name = "hampair", version, about = "Edge-disjoint Hamiltonian path and tour pairs on geometric graphs")]
pub struct Cli {
    /// Emit JSON regardless of the command's --format.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,

    /// Largest n handed to the exact solvers.
    #[arg(long, global = true, value_name = "N", default_value_t = 18)]
    pub budget_n: usize,

    /// Wall-clock limit for exact solvers and the oracle.
    #[arg(long, global = true, value_name = "SECS")]
    pub time_limit: Option<f64>,

    /// Seed for random metric instances.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a pair on a uniform line or circle.
    Construct {
        #[arg(long, value_enum)]
        problem: ConstructProblem,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run an approximation algorithm on an instance.
    Solve {
        #[arg(long, value_enum)]
        problem: SolveProblem,
        #[command(flatten)]
        source: Source,
        /// Path start, 1-indexed (default 1).
        #[arg(long)]
        from: Option<usize>,
        /// Path end, 1-indexed (default n).
        #[arg(long)]
        to: Option<usize>,
        /// Starting solution (solution JSON) instead of the exact optimum.
        #[arg(long, value_name = "FILE")]
        baseline: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact search for the best disjoint pair.
    Oracle {
        #[arg(long, value_enum)]
        problem: OracleProblem,
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value_t = Objective::MinMax)]
        objective: Objective,
        /// Only consider single solutions costing at most this much.
        #[arg(long)]
        bound: Option<f64>,
        #[arg(long)]
        from: Option<usize>,
        #[arg(long)]
        to: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check the small-instance claims and structural properties.
    VerifyClaims {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Ratio of the constructions over a range of n.
    Sweep {
        #[arg(long, value_enum)]
        problem: ConstructProblem,
        /// Smallest n (default: smallest feasible).
        #[arg(long = "from")]
        from: Option<usize>,
        #[arg(long = "to")]
        to: usize,
        /// Use the built pairs rather than the closed form.
        #[arg(long)]
        realized: bool,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Oracle ratios on the weighted lower-bound instances.
    Witness {
        #[arg(long, value_enum)]
        problem: SolveProblem,
        /// Defaults to 8 for shp2 and 7 for tsp2.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_delimiter = ',', default_value = "0.25,0.5,1.0")]
        eps: Vec<f64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Write an instance, optionally with solutions, as JSON or DOT.
    Export {
        #[command(flatten)]
        source: Source,
        /// Solution, pair, or command output JSON; may be repeated.
        #[arg(long, value_name = "FILE")]
        solution: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

/// Where the instance comes from: a generated family or a JSON file.
#[derive(Args, Debug, Clone)]
pub struct Source {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Heavy-segment weight for the witness families.
    #[arg(long)]
    pub weight: Option<f64>,
    #[arg(long, value_name = "FILE")]
    pub instance: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Line,
    Circle,
    Metric,
    ShpWitness,
    TspWitness,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstructProblem {
    Paths,
    Tours,
    NaiveTours,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolveProblem {
    Shp2,
    Tsp2,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleProblem {
    Paths,
    Tours,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Objective {
    MinMax,
    MinTotal,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

/// Settings shared by every command.
pub struct Context {
    pub exec: Execution,
    pub budget: ExactSolverBudget,
    pub time_limit: Option<Duration>,
    pub seed: u64,
    pub json: bool,
}

impl Context {
    pub fn format(&self, requested: Format) -> Format {
        if self.json {
            Format::Json
        } else {
            requested
        }
    }
}

/// A usage problem detected after parsing.
#[derive(Debug)]
pub struct Usage(pub String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// Result of a command that ran to completion.
pub enum Status {
    Ok,
    VerificationFailed,
}

fn context(cli: &Cli) -> anyhow::Result<Context> {
    let exec = match cli.jobs {
        Some(1) => Execution::Sequential,
        Some(n) => {
            rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global()?;
            Execution::Parallel
        }
        None => Execution::Parallel,
    };
    let time_limit = match cli.time_limit {
        Some(s) if s.is_finite() && s > 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Usage(format!("--time-limit must be positive, got {s}")).into()),
        None => None,
    };
    Ok(Context {
        exec,
        budget: ExactSolverBudget::new(cli.budget_n, time_limit)?,
        time_limit,
        seed: cli.seed,
        json: cli.json,
    })
}

fn run(cli: &Cli) -> anyhow::Result<Status> {
    let ctx = context(cli)?;
    let (text, status) = commands::dispatch(&cli.command, &ctx)?;
    match &cli.out {
        Some(path) => std::fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(status)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
