use std::net::SocketAddr;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use curvlab::io::report::ErrorDocument;
use curvlab::search::{LeafSearchOptions, Predicate, DEFAULT_SCAN_CAP, LEAF_BUDGET_CAP};
use curvlab::Error;
use curvlab_cli::commands::{self, CurvatureFormat, ScanArgs, ScanFormat};
use curvlab_cli::service::{self, ServiceConfig, DEFAULT_MAX_N};
use curvlab_cli::source::load_graph;

/// Exact Steinerberger curvature of graphs.
///
/// GRAPH arguments are `family:NAME(args)` (e.g. `family:cycle(6)`),
/// `g6:LINE`, a `.g6` file, or an edge-list file.
#[derive(Parser)]
#[command(name = "curvlab", version)]
struct Cli {
    /// Worker threads for parallel searches (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Curvature vector and summary.
    Curvature {
        graph: String,
        #[arg(long, value_enum, default_value = "json")]
        format: CurvatureFormat,
    },
    /// Full analysis: bounds, sharpness, antipodality, average distance.
    Analyze { graph: String },
    /// Predicted curvature after joining G1 and G2 by the bridge {u, v}.
    PredictBridge { g1: String, u: usize, g2: String, v: usize },
    /// Predicted curvature after attaching a leaf at u.
    PredictLeaf { g1: String, u: usize },
    /// Scan connected graphs for a predicate.
    Scan {
        #[arg(long, default_value_t = 2)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// zero-total, negative-total, bm-sharp, antipodal-mismatch, singular-D, inconsistent-system
        #[arg(long)]
        predicate: String,
        /// Read graphs from a graph6 stream instead of enumerating.
        #[arg(long)]
        graph6: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_SCAN_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: ScanFormat,
    },
    /// Fewest leaves making every original vertex negatively curved.
    MinLeaves {
        graph: String,
        #[arg(long)]
        budget: usize,
        /// Require the attached leaves to be negative as well.
        #[arg(long)]
        strict_all_vertices: bool,
        /// Require at least one leaf on every original vertex.
        #[arg(long)]
        every_vertex: bool,
    },
    /// Characteristic polynomial of the distance matrix.
    Charpoly { graph: String },
    /// Curvature of the original vertices as leaves are attached one by one.
    Probe { graph: String, vertices: Vec<usize> },
    /// Serve the JSON API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
        #[arg(long, default_value_t = DEFAULT_MAX_N)]
        max_n: usize,
    },
}

fn run(cli: Cli) -> Result<String, Error> {
    match cli.command {
        Command::Curvature { graph, format } => commands::curvature(&load_graph(&graph)?, format),
        Command::Analyze { graph } => commands::analyze_command(&load_graph(&graph)?),
        Command::PredictBridge { g1, u, g2, v } => {
            commands::predict_bridge(&load_graph(&g1)?, u, &load_graph(&g2)?, v)
        }
        Command::PredictLeaf { g1, u } => commands::predict_leaf(&load_graph(&g1)?, u),
        Command::Scan { n_min, n_max, predicate, graph6, cap, format } => {
            let predicate: Predicate = predicate.parse()?;
            let text = graph6
                .map(|p| {
                    std::fs::read_to_string(&p)
                        .map_err(|e| Error::Parse { line: 0, message: format!("cannot read {}: {e}", p.display()) })
                })
                .transpose()?;
            commands::scan(&ScanArgs { n_min, n_max, predicate, graph6: text.as_deref(), cap, format })
        }
        Command::MinLeaves { graph, budget, strict_all_vertices, every_vertex } => {
            let options = LeafSearchOptions { strict: strict_all_vertices, every_vertex, cap: LEAF_BUDGET_CAP };
            commands::min_leaves(&load_graph(&graph)?, budget, options)
        }
        Command::Charpoly { graph } => commands::charpoly(&load_graph(&graph)?),
        Command::Probe { graph, vertices } => commands::probe(&load_graph(&graph)?, &vertices),
        Command::Serve { .. } => unreachable!("handled in main"),
    }
}

fn serve(host: &str, port: u16, max_n: usize) -> ExitCode {
    let addr: SocketAddr = match format!("{host}:{port}").parse() {
        Ok(a) => a,
        Err(e) => return fail(&Error::Parse { line: 0, message: format!("bad address: {e}") }),
    };
    let runtime = tokio::runtime::Runtime::new().expect("tokio runtime");
    match runtime.block_on(service::serve(addr, ServiceConfig { max_n })) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{}", serde_json::json!({ "error": "IoError", "message": e.to_string() }));
            ExitCode::FAILURE
        }
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("{}", serde_json::to_string(&ErrorDocument::from(e)).expect("serializable"));
    ExitCode::from(if e.is_malformed_input() { 2 } else { 1 })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global().expect("thread pool set once");
    }
    if let Command::Serve { port, ref host, max_n } = cli.command {
        return serve(host, port, max_n);
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}
