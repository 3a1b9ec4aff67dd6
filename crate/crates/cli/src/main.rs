use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use star_routing::TspBackend;

mod commands;
mod failure;
mod ratio_report;

use failure::Failure;

#[derive(Parser)]
#[command(
    name = "star",
    version,
    about = "Shortest closed walks covering customer edges"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum AlgoArg {
    MatchingTsp,
    DenseGrid,
    Exact,
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum TspArg {
    DoubleTree,
    Christofides,
    Exact,
}

impl From<TspArg> for TspBackend {
    fn from(t: TspArg) -> Self {
        match t {
            TspArg::DoubleTree => TspBackend::DoubleTree,
            TspArg::Christofides => TspBackend::Christofides,
            TspArg::Exact => TspBackend::Exact,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Random grid instance.
    GenGrid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Random connected instance: a spanning tree plus random extra edges.
    GenGeneral {
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        edge_prob: f64,
        #[arg(long)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    Solve {
        #[arg(long, value_enum, default_value = "matching-tsp")]
        algo: AlgoArg,
        /// TSP back-end for matching-tsp.
        #[arg(long, value_enum, default_value = "christofides")]
        tsp: TspArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Checks that a walk is closed, uses graph edges, and covers every customer.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        walk: PathBuf,
    },
    /// Builds the grid instance for a rectilinear TSP instance.
    ReduceTsp {
        #[arg(long)]
        points: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Approximate vs exact lengths over a directory of instance files.
    RatioReport {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::GenGrid {
            rows,
            cols,
            density,
            seed,
            out,
        } => commands::generate(
            &star_routing::ExperimentConfig::grid(rows, cols, density, seed),
            &out,
        ),
        Command::GenGeneral {
            vertices,
            edge_prob,
            density,
            seed,
            out,
        } => commands::generate(
            &star_routing::ExperimentConfig::general(vertices, edge_prob, density, seed),
            &out,
        ),
        Command::Solve {
            algo,
            tsp,
            input,
            out,
        } => {
            let algo = match algo {
                AlgoArg::MatchingTsp => star_routing::Algorithm::MatchingTsp(tsp.into()),
                AlgoArg::DenseGrid => star_routing::Algorithm::DenseGrid,
                AlgoArg::Exact => star_routing::Algorithm::Exact,
            };
            commands::solve(algo, &input, &out)
        }
        Command::Verify { instance, walk } => commands::verify(&instance, &walk),
        Command::ReduceTsp { points, out } => commands::reduce_tsp(&points, &out),
        Command::RatioReport { corpus, out } => ratio_report::run(&corpus, &out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.exit_code())
        }
    }
}
