//! Implementations behind the subcommands. Each returns the process exit
//! code on the success path; errors bubble to `main`, which maps them onto
//! the documented exit codes.

use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use chromatica::io::{hog_cache_path, hog_fetch, write_benchmark_csv, write_dimacs, HttpTransport};
use chromatica::transforms::{rotation_from_coordinates, trace_faces};
use chromatica::{
    circular_grouped_layout, colour_edges, colour_faces, colour_faces_embedded, colour_nodes,
    euler_check, generators, multipartite_layout, render_edges_svg, render_faces_svg,
    render_nodes_svg, spring_layout, verify_edge_colouring, verify_face_colouring,
    verify_node_colouring, write_dot, AlgorithmChoice, BenchmarkRecord, ColourOutcome, Colouring,
    EmbeddedGraph, Error, FaceColouring, Graph, GraphDocument, HeaParams, Layout, RenderOptions,
    Result, Seed,
};
use rayon::prelude::*;

use crate::colouring_file;
use crate::files;
use crate::{
    Algo, BenchArgs, ColorArgs, Family, FetchArgs, GenArgs, InfoArgs, LayoutChoice, RenderArgs,
    Target, VerifyArgs,
};

/// Spring relaxation steps for layouts computed on the fly.
const SPRING_ITERATIONS: usize = 300;

fn positive(value: usize, what: &str) -> Result<usize> {
    if value == 0 {
        return Err(Error::InvalidParameter(format!(
            "{what} must be at least 1"
        )));
    }
    Ok(value)
}

fn document_from_graph(g: Graph, name: String) -> GraphDocument {
    let mut doc = GraphDocument::new(g);
    doc.metadata.name = Some(name);
    doc
}

fn document_from_embedded(eg: &EmbeddedGraph, name: String) -> GraphDocument {
    let mut doc = GraphDocument::from_embedded(eg);
    // make the faces explicit in the file rather than leaving them implied
    // by the coordinates
    doc.rotation = Some(rotation_from_coordinates(eg));
    doc.metadata.name = Some(name);
    doc
}

fn build_family(family: &Family) -> Result<GraphDocument> {
    Ok(match family {
        Family::Gnp { n, p, seed } => document_from_graph(
            generators::gnp(*n, *p, Seed(*seed))?,
            format!("gnp n={n} p={p} seed={seed}"),
        ),
        Family::Complete { n } => document_from_graph(
            generators::complete(positive(*n, "--n")?),
            format!("complete n={n}"),
        ),
        Family::Cycle { n } => document_from_graph(generators::cycle(*n)?, format!("cycle n={n}")),
        Family::Wheel { n } => document_from_graph(generators::wheel(*n)?, format!("wheel n={n}")),
        Family::Path { n } => document_from_graph(generators::path(*n)?, format!("path n={n}")),
        Family::BinaryTree { nodes } => document_from_embedded(
            &generators::binary_tree(positive(*nodes, "--nodes")?),
            format!("binary-tree nodes={nodes}"),
        ),
        Family::SquareLattice { rows, cols } => document_from_embedded(
            &generators::square_lattice(positive(*rows, "--rows")?, positive(*cols, "--cols")?),
            format!("square-lattice rows={rows} cols={cols}"),
        ),
        Family::TriangularLattice { rows, cols } => document_from_embedded(
            &generators::triangular_lattice(positive(*rows, "--rows")?, positive(*cols, "--cols")?),
            format!("triangular-lattice rows={rows} cols={cols}"),
        ),
        Family::HexagonalLattice { rows, cols } => document_from_embedded(
            &generators::hexagonal_lattice(positive(*rows, "--rows")?, positive(*cols, "--cols")?),
            format!("hexagonal-lattice rows={rows} cols={cols}"),
        ),
        Family::Sierpinski { level } => document_from_embedded(
            &generators::sierpinski(positive(*level, "--level")?),
            format!("sierpinski level={level}"),
        ),
        Family::Dodecahedral => {
            document_from_embedded(&generators::dodecahedral(), "dodecahedral".into())
        }
    })
}

pub fn cmd_gen(args: &GenArgs) -> Result<i32> {
    let doc = build_family(&args.family)?;
    let name = doc.metadata.name.clone().unwrap_or_else(|| "graph".into());
    let (n, m) = (doc.graph.node_count(), doc.graph.edge_count());
    match &args.output {
        Some(path) => {
            files::write_document(&doc, path)?;
            println!("{name}: n={n} m={m} -> {}", path.display());
        }
        None => {
            // the graph itself on stdout, the summary out of the data stream
            print!("{}", write_dimacs(&doc));
            eprintln!("{name}: n={n} m={m}");
        }
    }
    Ok(0)
}

fn resolve_cache_dir(flag: Option<PathBuf>) -> PathBuf {
    flag.or_else(|| std::env::var_os("CHROMATICA_CACHE").map(PathBuf::from))
        .unwrap_or_else(|| {
            std::env::var_os("HOME")
                .map(PathBuf::from)
                .unwrap_or_else(|| PathBuf::from("."))
                .join(".cache")
                .join("chromatica")
        })
}

pub fn cmd_fetch(args: &FetchArgs) -> Result<i32> {
    let cache_dir = resolve_cache_dir(args.cache_dir.clone());
    let was_cached = hog_cache_path(&cache_dir, args.id).exists();
    let doc = hog_fetch(args.id, &cache_dir, args.offline, &HttpTransport)?;
    let (n, m) = (doc.graph.node_count(), doc.graph.edge_count());
    let cached = if was_cached { " (cached)" } else { "" };
    match &args.output {
        Some(path) => {
            files::write_document(&doc, path)?;
            println!("hog-{}: n={n} m={m}{cached} -> {}", args.id, path.display());
        }
        None => {
            let kept = hog_cache_path(&cache_dir, args.id);
            println!("hog-{}: n={n} m={m}{cached} -> {}", args.id, kept.display());
        }
    }
    Ok(0)
}

fn algorithm_choice(args: &ColorArgs) -> AlgorithmChoice {
    match args.algorithm {
        Algo::Greedy => AlgorithmChoice::Greedy,
        Algo::Dsatur => AlgorithmChoice::Dsatur,
        Algo::Backtracking => AlgorithmChoice::Backtracking {
            node_limit: args.node_limit,
        },
        Algo::Hea => AlgorithmChoice::Hea(HeaParams {
            seed: Seed(args.seed),
            time_limit: args.time_limit.map(Duration::from_secs_f64),
            ..HeaParams::default()
        }),
    }
}

/// Lower bound and optimality for the summary line: the engine's own
/// certificate when it produced one, otherwise the clique bound on whatever
/// graph the colours live on.
fn summarise(outcome: &ColourOutcome, context: &Graph) -> (usize, bool) {
    match &outcome.certificate {
        Some(certificate) => (certificate.lower_bound, certificate.optimal),
        None => {
            let clique = context.greedy_clique().size();
            (clique, outcome.colouring.k == clique)
        }
    }
}

fn face_colouring(doc: &GraphDocument, choice: &AlgorithmChoice) -> Result<FaceColouring> {
    match &doc.rotation {
        // an explicit rotation defines the faces even without coordinates
        Some(rot) => colour_faces(&doc.graph, rot, doc.coordinates.as_deref(), choice),
        None => colour_faces_embedded(&doc.embedded()?, choice),
    }
}

pub fn cmd_color(args: &ColorArgs) -> Result<i32> {
    let doc = files::read_document(&args.input)?;
    let choice = algorithm_choice(args);
    let (colouring, lower, optimal) = match args.target {
        Target::Nodes => {
            let outcome = colour_nodes(&doc.graph, &choice)?;
            let (lower, optimal) = summarise(&outcome, &doc.graph);
            (outcome.colouring, lower, optimal)
        }
        Target::Edges => {
            let outcome = colour_edges(&doc.graph, &choice)?;
            let line = chromatica::transforms::line_graph(&doc.graph)?;
            let (lower, optimal) = summarise(&outcome, &line.line_graph);
            (outcome.colouring, lower, optimal)
        }
        Target::Faces => {
            let result = face_colouring(&doc, &choice)?;
            let outcome = ColourOutcome {
                colouring: result.colouring,
                certificate: result.certificate,
            };
            let (lower, optimal) = summarise(&outcome, &result.dual.dual);
            (outcome.colouring, lower, optimal)
        }
    };
    if let Some(path) = &args.output {
        std::fs::write(
            path,
            colouring_file::write_colouring(&colouring.assignment, colouring.k),
        )?;
    }
    println!("k={} lower={lower} optimal={optimal}", colouring.k);
    Ok(0)
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let doc = files::read_document(&args.input)?;
    let labels = colouring_file::parse_colouring(&std::fs::read_to_string(&args.colouring)?)?;
    let report = match args.target {
        Target::Nodes => verify_node_colouring(&doc.graph, &Colouring::node("file", labels))?,
        Target::Edges => verify_edge_colouring(&doc.graph, &Colouring::edge("file", labels))?,
        Target::Faces => {
            let rot = doc.rotation_or_derived()?;
            verify_face_colouring(&doc.graph, &rot, &Colouring::face("file", labels))?
        }
    };
    if report.valid {
        println!("valid: k={}", report.k);
        Ok(0)
    } else {
        for (a, b) in &report.clash_list {
            println!("clash: {a} {b}");
        }
        Ok(1)
    }
}

fn wants_dot(path: &Path) -> bool {
    matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("dot") | Some("gv")
    )
}

fn build_layout(doc: &GraphDocument, colouring: &Colouring, args: &RenderArgs) -> Result<Layout> {
    let choice = args.layout.unwrap_or(if doc.coordinates.is_some() {
        LayoutChoice::Provided
    } else {
        LayoutChoice::Spring
    });
    match choice {
        LayoutChoice::Spring => Ok(spring_layout(
            &doc.graph,
            Seed(args.seed),
            SPRING_ITERATIONS,
        )),
        LayoutChoice::Circular => circular_grouped_layout(&doc.graph, colouring),
        LayoutChoice::Multipartite => multipartite_layout(&doc.graph, colouring),
        LayoutChoice::Provided => doc
            .coordinates
            .clone()
            .map(Layout::provided)
            .ok_or(Error::MissingEmbedding),
    }
}

pub fn cmd_render(args: &RenderArgs) -> Result<i32> {
    let doc = files::read_document(&args.input)?;
    let labels = colouring_file::parse_colouring(&std::fs::read_to_string(&args.colouring)?)?;
    let options = RenderOptions {
        show_nodes: !args.hide_nodes,
        fill_unbounded: !args.hide_unbounded,
        ..RenderOptions::default()
    };
    let dot = args.output.as_deref().is_some_and(wants_dot);
    let text = match args.target {
        Target::Faces => {
            let colouring = Colouring::face("file", labels);
            if args.layout.is_some() {
                return Err(Error::InvalidParameter(
                    "face figures take their geometry from the embedding; \
                     --layout applies to node and edge figures"
                        .into(),
                ));
            }
            if dot {
                write_dot(&doc.graph, &colouring, &options)? // rejected: no dot form
            } else {
                let eg = doc.embedded()?;
                let rot = doc.rotation_or_derived()?;
                let faces = trace_faces(&doc.graph, &rot)?;
                render_faces_svg(&eg, &faces, &colouring, &options)?
            }
        }
        Target::Nodes | Target::Edges => {
            let colouring = match args.target {
                Target::Nodes => Colouring::node("file", labels),
                _ => Colouring::edge("file", labels),
            };
            if dot {
                write_dot(&doc.graph, &colouring, &options)?
            } else {
                let layout = build_layout(&doc, &colouring, args)?;
                match args.target {
                    Target::Nodes => render_nodes_svg(&doc.graph, &layout, &colouring, &options)?,
                    _ => render_edges_svg(&doc.graph, &layout, &colouring, &options)?,
                }
            }
        }
    };
    match &args.output {
        Some(path) => {
            std::fs::write(path, &text)?;
            println!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(0)
}

#[derive(Clone, Copy)]
enum Budget {
    Iterations(u64),
    Seconds(f64),
}

impl Budget {
    fn node_limit(self) -> Option<u64> {
        match self {
            // exact search runs to completion under a wall-clock budget;
            // only heuristics can usefully stop on time
            Budget::Iterations(i) => Some(i),
            Budget::Seconds(_) => None,
        }
    }

    fn time_limit(self) -> Option<Duration> {
        match self {
            Budget::Iterations(_) => None,
            Budget::Seconds(s) => Some(Duration::from_secs_f64(s)),
        }
    }

    fn tabu_iterations(self) -> u64 {
        match self {
            Budget::Iterations(i) => i,
            Budget::Seconds(_) => HeaParams::default().tabu_iterations_per_offspring,
        }
    }
}

struct Task {
    n: usize,
    p: f64,
    trial: usize,
    algo: Algo,
}

fn run_task(task: &Task, master: Seed, budget: Budget) -> Result<BenchmarkRecord> {
    // documented derivation: one FNV-1a key per (n, p, trial, algorithm);
    // adding algorithms or sizes later never reshuffles existing streams
    let seed = master.derive(&format!(
        "n={}|p={}|trial={}|algorithm={}",
        task.n,
        task.p,
        task.trial,
        task.algo.name()
    ));
    let g = generators::gnp(task.n, task.p, seed)?;
    let choice = match task.algo {
        Algo::Greedy => AlgorithmChoice::Greedy,
        Algo::Dsatur => AlgorithmChoice::Dsatur,
        Algo::Backtracking => AlgorithmChoice::Backtracking {
            node_limit: budget.node_limit(),
        },
        Algo::Hea => AlgorithmChoice::Hea(HeaParams {
            seed: seed.derive("search"),
            time_limit: budget.time_limit(),
            tabu_iterations_per_offspring: budget.tabu_iterations(),
            ..HeaParams::default()
        }),
    };
    let started = Instant::now();
    let outcome = colour_nodes(&g, &choice)?;
    let millis = match budget {
        // wall-clock numbers would break byte-identical reruns
        Budget::Iterations(_) => 0,
        Budget::Seconds(_) => started.elapsed().as_millis() as u64,
    };
    let (lower_bound, optimal) = summarise(&outcome, &g);
    Ok(BenchmarkRecord {
        n: task.n,
        p: task.p,
        seed: seed.0,
        algorithm: task.algo.name().to_string(),
        colours: outcome.colouring.k,
        lower_bound,
        optimal,
        millis,
    })
}

pub fn cmd_bench(args: &BenchArgs) -> Result<i32> {
    positive(args.trials, "--trials")?;
    for &p in &args.p {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!(
                "edge probability {p} is outside [0, 1]"
            )));
        }
    }
    let master = Seed(args.master_seed);
    let budget = match args.seconds {
        Some(s) => Budget::Seconds(s),
        None => Budget::Iterations(args.iterations),
    };
    let mut tasks = Vec::new();
    for &n in &args.n {
        for &p in &args.p {
            for trial in 0..args.trials {
                for &algo in &args.algorithms {
                    tasks.push(Task { n, p, trial, algo });
                }
            }
        }
    }
    let execute = || {
        tasks
            .par_iter()
            .map(|task| run_task(task, master, budget))
            .collect::<Result<Vec<_>>>()
    };
    let records = match args.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(positive(jobs, "--jobs")?)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?
            .install(execute),
        None => execute(),
    }?;
    let csv = write_benchmark_csv(&records);
    match &args.output {
        Some(path) => {
            std::fs::write(path, &csv)?;
            println!("wrote {} records -> {}", records.len(), path.display());
        }
        None => print!("{csv}"),
    }
    Ok(0)
}

pub fn cmd_info(args: &InfoArgs) -> Result<i32> {
    let doc = files::read_document(&args.input)?;
    let g = &doc.graph;
    if let Some(name) = &doc.metadata.name {
        println!("name: {name}");
    }
    if let Some(source) = &doc.metadata.source {
        println!("source: {source}");
    }
    println!("nodes: {}", g.node_count());
    println!("edges: {}", g.edge_count());
    println!("max degree: {}", g.max_degree());
    println!("connected: {}", g.is_connected());
    println!("bipartite: {}", g.bipartition().is_some());
    println!("eulerian: {}", g.is_eulerian());
    println!("clique lower bound: {}", g.greedy_clique().size());
    if g.is_connected() && (doc.coordinates.is_some() || doc.rotation.is_some()) {
        let rot = doc.rotation_or_derived()?;
        let faces = trace_faces(g, &rot)?;
        println!("faces: {}", faces.count());
        println!(
            "euler n-m+f=2: {}",
            euler_check(g.node_count(), g.edge_count(), faces.count())
        );
    }
    Ok(0)
}
