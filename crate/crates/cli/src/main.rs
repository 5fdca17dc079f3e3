//! chromatica: generate, fetch, colour, verify, render, and benchmark
//! graphs from the command line.
//!
//! Exit codes: 0 success; 1 a verification that found clashes; 2 usage or
//! file-format problems; 3 graph structure that makes the request
//! infeasible (disconnected input, bridges in a face colouring); 4 network
//! or cache trouble.

mod colouring_file;
mod commands;
mod files;

use std::path::PathBuf;

use chromatica::Error;
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "chromatica",
    version,
    about = "Colour the nodes, edges, and faces of graphs",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family
    Gen(GenArgs),
    /// Fetch a graph from the House of Graphs by numeric id
    Fetch(FetchArgs),
    /// Colour nodes, edges, or faces and print a summary
    Color(ColorArgs),
    /// Check a colouring file against a graph
    Verify(VerifyArgs),
    /// Draw a coloured graph as SVG (or Graphviz dot)
    Render(RenderArgs),
    /// Run colouring algorithms over random graphs, writing CSV
    Bench(BenchArgs),
    /// Print structural facts about a graph
    Info(InfoArgs),
}

#[derive(clap::Args)]
struct GenArgs {
    #[command(subcommand)]
    family: Family,
    /// Output file; the extension picks the format (.col/.dimacs, .g6,
    /// .emb). Omitted: DIMACS on stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Family {
    /// Erdos-Renyi random graph: every edge present with probability p
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Complete graph on n nodes
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Cycle on n nodes
    Cycle {
        #[arg(long)]
        n: usize,
    },
    /// Wheel: a cycle on n-1 nodes plus a hub
    Wheel {
        #[arg(long)]
        n: usize,
    },
    /// Path on n nodes
    Path {
        #[arg(long)]
        n: usize,
    },
    /// Complete binary tree with a crossing-free drawing
    BinaryTree {
        #[arg(long)]
        nodes: usize,
    },
    /// Square grid of rows x cols cells
    SquareLattice {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Triangular grid of rows x cols cells
    TriangularLattice {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Honeycomb grid of rows x cols cells
    HexagonalLattice {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Sierpinski triangle at the given subdivision level
    Sierpinski {
        #[arg(long)]
        level: usize,
    },
    /// The dodecahedral graph with its pentagonal drawing
    Dodecahedral,
}

#[derive(clap::Args)]
struct FetchArgs {
    /// House of Graphs graph id
    id: u64,
    /// Fail rather than touch the network when the graph is not cached
    #[arg(long)]
    offline: bool,
    /// Cache directory (default: $CHROMATICA_CACHE, else ~/.cache/chromatica)
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    /// Also write the graph here; the extension picks the format
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    Nodes,
    Edges,
    Faces,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Algo {
    Greedy,
    Dsatur,
    Backtracking,
    Hea,
}

impl Algo {
    fn name(self) -> &'static str {
        match self {
            Algo::Greedy => "greedy",
            Algo::Dsatur => "dsatur",
            Algo::Backtracking => "backtracking",
            Algo::Hea => "hea",
        }
    }
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(clap::Args)]
struct ColorArgs {
    /// What to colour
    #[arg(value_enum)]
    target: Target,
    /// Graph file (.col/.dimacs, .g6, .emb); faces need an embedding
    input: PathBuf,
    /// Colouring engine
    #[arg(short, long, value_enum, default_value_t = Algo::Dsatur)]
    algorithm: Algo,
    /// Seed for the randomised engines
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cap on tentative assignments for the exact search; best colouring
    /// so far is returned when the cap is hit
    #[arg(long)]
    node_limit: Option<u64>,
    /// Wall-clock budget in seconds for the evolutionary engine
    #[arg(long)]
    time_limit: Option<f64>,
    /// Write the colouring here as '# k=<k>' plus '<element> <label>' lines
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Graph file the colouring refers to
    input: PathBuf,
    /// Colouring file to check
    colouring: PathBuf,
    /// What the colouring labels: nodes, edges, or faces
    #[arg(short, long, value_enum, default_value_t = Target::Nodes)]
    target: Target,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LayoutChoice {
    /// Force-directed placement, deterministic in --seed
    Spring,
    /// Unit circle with colour classes in contiguous arcs
    Circular,
    /// One column per colour class
    Multipartite,
    /// Coordinates stored in the input file
    Provided,
}

#[derive(clap::Args)]
struct RenderArgs {
    /// Graph file (.col/.dimacs, .g6, .emb)
    input: PathBuf,
    /// Colouring file, as written by `color -o`
    colouring: PathBuf,
    /// What the colouring labels
    #[arg(short, long, value_enum, default_value_t = Target::Nodes)]
    target: Target,
    /// Node/edge placement (default: stored coordinates, else spring)
    #[arg(long, value_enum)]
    layout: Option<LayoutChoice>,
    /// Seed for the spring layout
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Leave the node discs out of the figure
    #[arg(long)]
    hide_nodes: bool,
    /// Leave the unbounded face unpainted in face figures
    #[arg(long)]
    hide_unbounded: bool,
    /// Output file: .svg, or .dot/.gv for Graphviz. Omitted: SVG on stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct BenchArgs {
    /// Node counts, comma separated (e.g. 20,30,40)
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Edge probabilities, comma separated (e.g. 0.5)
    #[arg(long, value_delimiter = ',', required = true)]
    p: Vec<f64>,
    /// Random instances per (n, p) cell
    #[arg(long, default_value_t = 10)]
    trials: usize,
    /// Engines to run on every instance
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    algorithms: Vec<Algo>,
    /// Master seed; per-run seeds derive from it and the run's coordinates
    #[arg(long, default_value_t = 0)]
    master_seed: u64,
    /// Iteration budget per run: tentative assignments for the exact
    /// search, tabu steps per offspring for the evolutionary engine.
    /// Timings are recorded as 0 so reruns are byte-identical.
    #[arg(long, default_value_t = 2000, conflicts_with = "seconds")]
    iterations: u64,
    /// Wall-clock budget per run in seconds for the evolutionary engine;
    /// the exact search runs to completion in this mode and real timings
    /// are recorded
    #[arg(long)]
    seconds: Option<f64>,
    /// Worker threads (default: available parallelism)
    #[arg(long)]
    jobs: Option<usize>,
    /// CSV output file. Omitted: CSV on stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(clap::Args)]
struct InfoArgs {
    /// Graph file (.col/.dimacs, .g6, .emb)
    input: PathBuf,
}

/// Map an engine error onto the documented exit codes.
fn exit_code(error: &Error) -> i32 {
    match error {
        Error::Disconnected | Error::Bridge { .. } => 3,
        Error::UnknownHogId(_) | Error::HttpFailure { .. } | Error::NotCached(_) => 4,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Gen(args) => commands::cmd_gen(args),
        Command::Fetch(args) => commands::cmd_fetch(args),
        Command::Color(args) => commands::cmd_color(args),
        Command::Verify(args) => commands::cmd_verify(args),
        Command::Render(args) => commands::cmd_render(args),
        Command::Bench(args) => commands::cmd_bench(args),
        Command::Info(args) => commands::cmd_info(args),
    };
    match result {
        Ok(code) => std::process::exit(code),
        Err(error) => {
            eprintln!("error: {error}");
            std::process::exit(exit_code(&error));
        }
    }
}
