//! Thin command-line front end; all real work lives in the library.

use std::fs;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cayleydim::{
    all_pairs_distances, build_cayley, is_connected, metric_dimension, run_sweep, to_adjacency_list,
    to_dot, AbelianGroup, ConnectionSet, DimensionOutcome, GatingVariant, Graph, MobiusConvention,
    SweepOptions,
};

#[derive(Parser)]
#[command(
    name = "cayleydim",
    about = "Cayley graphs on finite Abelian groups and exact metric dimension",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the metric dimension and a witness for one graph.
    Dim(DimArgs),
    /// Enumerate groups and connection sets, solve each instance, and compare
    /// against the closed-form predictions. Exits nonzero on any mismatch
    /// under the gating variant.
    Sweep(SweepArgs),
    /// Write a graph to a file (DOT by default).
    Export(ExportArgs),
}

#[derive(Args)]
#[command(group(
    ArgGroup::new("source").required(true).args(["group", "family", "graph"])
))]
struct SourceArgs {
    /// Group literal, e.g. Z10 or Z2xZ4 (needs --set).
    #[arg(long, requires = "set")]
    group: Option<String>,
    /// Connection set literal, e.g. "2,8,5" or "(1,0);(0,1);(0,3)".
    #[arg(long)]
    set: Option<String>,
    /// Family literal: prism:m,n | mobius:p | hypercube:d | cycle:n | complete:n.
    #[arg(long)]
    family: Option<String>,
    /// Path to a graph file (DOT or adjacency list, sniffed by content).
    #[arg(long)]
    graph: Option<String>,
    /// Möbius ladder indexing: does the parameter count vertices or rungs?
    #[arg(long, value_enum, default_value_t = ConventionArg::Vertices)]
    convention: ConventionArg,
}

#[derive(Args)]
struct DimArgs {
    #[command(flatten)]
    source: SourceArgs,
    /// Largest witness size searched before reporting ">= cap+1".
    #[arg(long, default_value_t = 5, env = "CAYLEYDIM_CAP")]
    cap: usize,
    #[arg(long, value_enum, default_value_t = TextOrJson::Text)]
    format: TextOrJson,
    /// Include the full table of metric representations in JSON output.
    #[arg(long)]
    representations: bool,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct SweepArgs {
    /// Inclusive order range, e.g. 5..24.
    #[arg(long, value_parser = parse_order_range)]
    orders: (u64, u64),
    #[arg(long, default_value_t = 5, env = "CAYLEYDIM_CAP")]
    cap: usize,
    /// Largest connection-set size enumerated.
    #[arg(long, default_value_t = 3)]
    max_set_size: usize,
    /// Which predictor reading gates the match column and the exit status.
    #[arg(long, value_enum, default_value_t = VariantArg::ProofConsistent)]
    variant: VariantArg,
    #[arg(long, value_enum, default_value_t = SweepFormat::Text)]
    format: SweepFormat,
    #[arg(long)]
    out: Option<String>,
    /// Worker threads (0 = one per core). Output is identical either way.
    #[arg(long, default_value_t = 0, env = "CAYLEYDIM_JOBS")]
    jobs: usize,
    /// Append the Möbius ladder convention cross-check (text format only).
    #[arg(long)]
    mobius: bool,
}

#[derive(Args)]
struct ExportArgs {
    #[command(flatten)]
    source: SourceArgs,
    #[arg(long, value_enum, default_value_t = ExportFormat::Dot)]
    format: ExportFormat,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Vertices,
    Rungs,
}

impl From<ConventionArg> for MobiusConvention {
    fn from(value: ConventionArg) -> Self {
        match value {
            ConventionArg::Vertices => MobiusConvention::Vertices,
            ConventionArg::Rungs => MobiusConvention::Rungs,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    AsStated,
    ProofConsistent,
    Both,
}

impl From<VariantArg> for GatingVariant {
    fn from(value: VariantArg) -> Self {
        match value {
            VariantArg::AsStated => GatingVariant::AsStated,
            VariantArg::ProofConsistent => GatingVariant::ProofConsistent,
            VariantArg::Both => GatingVariant::Both,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TextOrJson {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SweepFormat {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Dot,
    Adjacency,
}

fn parse_order_range(s: &str) -> Result<(u64, u64), String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let lo: u64 = lo.trim().parse().map_err(|_| format!("bad lower bound {lo:?}"))?;
    let hi = hi.trim().trim_start_matches('=');
    let hi: u64 = hi.parse().map_err(|_| format!("bad upper bound {hi:?}"))?;
    Ok((lo, hi))
}

/// Builds the graph named by the input source flags.
fn load_graph(source: &SourceArgs) -> Result<Graph, String> {
    if let Some(group_literal) = &source.group {
        let group: AbelianGroup = group_literal.parse().map_err(|e| format!("{e}"))?;
        let set_literal = source.set.as_ref().expect("clap enforces --set");
        let set = ConnectionSet::parse(&group, set_literal).map_err(|e| format!("{e}"))?;
        return Ok(build_cayley(&group, &set));
    }
    if let Some(family) = &source.family {
        return build_family(family, source.convention.into());
    }
    let path = source.graph.as_ref().expect("clap enforces one source");
    let text = fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    cayleydim::parse_auto(&text).map_err(|e| format!("cannot parse {path}: {e}"))
}

fn build_family(literal: &str, convention: MobiusConvention) -> Result<Graph, String> {
    let (name, params) = literal
        .split_once(':')
        .ok_or_else(|| format!("expected family:params, got {literal:?}"))?;
    let numbers: Result<Vec<u64>, _> = params.split(',').map(|p| p.trim().parse::<u64>()).collect();
    let numbers = numbers.map_err(|_| format!("bad family parameters {params:?}"))?;
    let wrong_arity = |want: usize| format!("{name} takes {want} parameter(s), got {}", numbers.len());
    match (name, numbers.as_slice()) {
        ("prism", [m, n]) => {
            cayleydim::prism(*m as usize, *n as usize).map_err(|e| format!("{e}"))
        }
        ("prism", _) => Err(wrong_arity(2)),
        ("mobius", [p]) => cayleydim::mobius_ladder(*p, convention).map_err(|e| format!("{e}")),
        ("mobius", _) => Err(wrong_arity(1)),
        ("hypercube", [d]) => cayleydim::hypercube(*d as usize).map_err(|e| format!("{e}")),
        ("hypercube", _) => Err(wrong_arity(1)),
        ("cycle", [n]) => cayleydim::cycle(*n).map_err(|e| format!("{e}")),
        ("cycle", _) => Err(wrong_arity(1)),
        ("complete", [n]) => cayleydim::complete(*n).map_err(|e| format!("{e}")),
        ("complete", _) => Err(wrong_arity(1)),
        _ => Err(format!("unknown family {name:?}")),
    }
}

fn emit(out: &Option<String>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| format!("cannot write {path}: {e}")),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct WitnessJson {
    dim: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    landmarks: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representations: Option<Vec<Vec<u32>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    cap: Option<usize>,
}

fn cmd_dim(args: &DimArgs) -> Result<(), String> {
    let graph = load_graph(&args.source)?;
    if !is_connected(&graph) {
        return Err("metric dimension is undefined on a disconnected graph".into());
    }
    let dist = all_pairs_distances(&graph);
    let outcome = metric_dimension(&graph, &dist, args.cap).map_err(|e| format!("{e}"))?;

    let content = match args.format {
        TextOrJson::Text => {
            let mut text = format!(
                "graph: {} vertices, {} edges\n",
                graph.vertex_count(),
                graph.edge_count()
            );
            match &outcome {
                DimensionOutcome::Exact { dim, witness } => {
                    text.push_str(&format!("dim: {dim}\nwitness: {witness:?}\n"));
                }
                DimensionOutcome::ExceedsCap { cap } => {
                    text.push_str(&format!(
                        "dim: >={} (no resolving set with at most {cap} landmarks)\n",
                        cap + 1
                    ));
                }
            }
            text
        }
        TextOrJson::Json => {
            let json = match &outcome {
                DimensionOutcome::Exact { dim, witness } => WitnessJson {
                    dim: Some(*dim),
                    representations: args.representations.then(|| {
                        (0..graph.vertex_count())
                            .map(|v| cayleydim::metric::representation(&dist, v, witness))
                            .collect()
                    }),
                    landmarks: Some(witness.clone()),
                    cap: None,
                },
                DimensionOutcome::ExceedsCap { cap } => WitnessJson {
                    dim: None,
                    landmarks: None,
                    representations: None,
                    cap: Some(*cap),
                },
            };
            let mut s = serde_json::to_string_pretty(&json).expect("witness serializes");
            s.push('\n');
            s
        }
    };
    emit(&args.out, &content)
}

fn cmd_sweep(args: &SweepArgs) -> Result<bool, String> {
    let mut options = SweepOptions::new(args.orders.0, args.orders.1);
    options.solver_cap = args.cap;
    options.max_set_size = args.max_set_size;
    if args.mobius {
        options.mobius_max_parameter = Some(args.orders.1.max(8));
    }

    let report = if args.jobs == 0 {
        run_sweep(&options).map_err(|e| format!("{e}"))?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(args.jobs)
            .build()
            .map_err(|e| format!("cannot build worker pool: {e}"))?;
        pool.install(|| run_sweep(&options)).map_err(|e| format!("{e}"))?
    };

    let gating: GatingVariant = args.variant.into();
    let content = match args.format {
        SweepFormat::Text => report.to_text(gating),
        SweepFormat::Csv => report.to_csv(gating),
        SweepFormat::Json => {
            let mut s = report.to_json(gating);
            s.push('\n');
            s
        }
    };
    emit(&args.out, &content)?;
    Ok(report.mismatches(gating).is_empty())
}

fn cmd_export(args: &ExportArgs) -> Result<(), String> {
    let graph = load_graph(&args.source)?;
    let content = match args.format {
        ExportFormat::Dot => to_dot(&graph, "cayley"),
        ExportFormat::Adjacency => to_adjacency_list(&graph),
    };
    emit(&args.out, &content)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Dim(args) => cmd_dim(args).map(|()| true),
        Command::Sweep(args) => cmd_sweep(args),
        Command::Export(args) => cmd_export(args).map(|()| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        // verification ran but found mismatches: distinct from usage errors
        Ok(false) => ExitCode::from(2),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}
