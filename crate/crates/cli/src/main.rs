//! `choosable` — list coloring from the command line.

use choosable_cli::commands;
use clap::{Parser, Subcommand};
use commands::GraphKind;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "choosable",
    version,
    about = "Constructive list coloring with an exhaustive oracle and verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a graph from per-vertex lists; prints `<id> <color>` lines
    Color {
        /// Graph file (DIMACS-like `p edge` format)
        graph: PathBuf,
        /// Lists file (`<id> <color> ...` per vertex)
        lists: PathBuf,
        /// Print branch counters to the error stream
        #[arg(long)]
        trace: bool,
    },
    /// Check a coloring file; silent and exit 0 when clean
    Verify {
        graph: PathBuf,
        lists: PathBuf,
        coloring: PathBuf,
    },
    /// Exhaustive backtracking search (ground truth for small instances)
    Oracle {
        graph: PathBuf,
        lists: PathBuf,
        /// Search budget in attempted assignments
        #[arg(long, default_value_t = choosable::checking::DEFAULT_NODE_LIMIT)]
        node_limit: u64,
    },
    /// Write a graph or list-assignment file to standard output
    #[command(subcommand)]
    Gen(GenCommand),
    /// Randomized conformance harness with oracle cross-checks
    Fuzz {
        #[arg(long)]
        trials: u64,
        #[arg(long)]
        seed: u64,
        /// Largest generated instance
        #[arg(long, default_value_t = 60)]
        nmax: usize,
        /// Oracle-check instances up to this size
        #[arg(long, default_value_t = 9)]
        oracle_nmax: usize,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Generate a graph
    Graph {
        #[arg(long, value_enum)]
        kind: GraphKind,
        /// Vertex count (cycle, path, complete, regular, connected)
        #[arg(long)]
        n: Option<usize>,
        /// Degree (regular)
        #[arg(long)]
        d: Option<usize>,
        /// Degree cap (connected)
        #[arg(long)]
        dmax: Option<usize>,
        /// Generator seed (ignored by the deterministic kinds)
        #[arg(long)]
        seed: u64,
    },
    /// Generate a list assignment for an existing graph
    Lists {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        size: usize,
        #[arg(long)]
        palette: usize,
        #[arg(long)]
        seed: u64,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            if matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            ) {
                print!("{e}");
                return commands::EXIT_OK;
            }
            eprintln!("status=error");
            eprint!("{e}");
            return commands::EXIT_USAGE;
        }
    };
    match cli.command {
        Command::Color { graph, lists, trace } => commands::cmd_color(&graph, &lists, trace),
        Command::Verify {
            graph,
            lists,
            coloring,
        } => commands::cmd_verify(&graph, &lists, &coloring),
        Command::Oracle {
            graph,
            lists,
            node_limit,
        } => commands::cmd_oracle(&graph, &lists, node_limit),
        Command::Gen(GenCommand::Graph {
            kind,
            n,
            d,
            dmax,
            seed,
        }) => commands::cmd_gen_graph(kind, n, d, dmax, seed),
        Command::Gen(GenCommand::Lists {
            graph,
            size,
            palette,
            seed,
        }) => commands::cmd_gen_lists(&graph, size, palette, seed),
        Command::Fuzz {
            trials,
            seed,
            nmax,
            oracle_nmax,
        } => commands::cmd_fuzz(trials, seed, nmax, oracle_nmax),
    }
}
