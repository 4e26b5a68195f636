use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use distchroma::bounds::{construction_counts, girth_thresholds, BoundsRecord};
use distchroma::colouring::{
    distance_chromatic_index, distance_chromatic_number, SolveReport, SolveStatus,
    DEFAULT_NODE_BUDGET,
};
use distchroma::constructions::{
    check_claims, Claim, ClaimOutcome, ConstructionDescriptor, Family, Params,
};
use distchroma::graph::{EntityKind, Multigraph};
use distchroma::io::{bundle_to_json, graph_to_dot, read_graph_text};

/// Exit codes: 0 success, 1 a checked claim failed, 2 usage or input error,
/// 3 the search gave up before deciding.
const EXIT_CLAIM_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "distchroma",
    version,
    about = "Distance colouring toolkit: closed-form bounds, extremal constructions, \
             exact solvers and claim checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a named construction and emit it with its descriptor
    Gen(GenArgs),
    /// Print the closed-form tree bounds and girth thresholds for one (t, d)
    Bounds(BoundsArgs),
    /// Emit CSV tables of bounds, girth thresholds or edge-count ratios
    Table(TableArgs),
    /// Re-check the claims attached to a stored construction bundle
    Verify(VerifyArgs),
    /// Compute an exact distance-chromatic index or number
    Chroma(ChromaArgs),
    /// Convert a stored graph to Graphviz DOT
    Export(ExportArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Family name, e.g. shannon, octahedron, extremal_tree_edge
    #[arg(long)]
    family: String,
    /// Colouring radius parameter, where the family takes one
    #[arg(long)]
    t: Option<u64>,
    /// Maximum degree parameter
    #[arg(long)]
    d: Option<u64>,
    /// Hierarchy height parameter
    #[arg(long)]
    k: Option<u64>,
    /// Cycle length for the vertex certificates
    #[arg(long)]
    ell: Option<u64>,
    /// Vertex count for paths and cycles
    #[arg(long)]
    n: Option<u64>,
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: GenFormat,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFormat {
    /// Bundle of descriptor, predicted counts, claims and edge list
    Json,
    /// Edge list only, as Graphviz DOT
    Dot,
}

#[derive(Args)]
struct BoundsArgs {
    #[arg(long)]
    t: u64,
    #[arg(long)]
    d: u64,
    /// Emit JSON instead of key=value lines
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(subcommand)]
    kind: TableKind,
}

#[derive(Subcommand)]
enum TableKind {
    /// Grid of tau_edge and tau_vertex over t and d
    Bounds {
        #[arg(long, default_value_t = 7)]
        max_t: u64,
        #[arg(long, default_value_t = 8)]
        max_d: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Girth thresholds per radius; empty cells where no threshold exists
    Girth {
        #[arg(long, default_value_t = 9)]
        max_t: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Edge counts of the lower-bound witness families against the tree
    /// bounds they defeat, with the ratio as a reduced fraction
    Ratios {
        #[arg(long, default_value_t = 100)]
        max_d: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Bundle file produced by `gen` ("-" for stdin)
    #[arg(long = "in")]
    input: PathBuf,
    /// Search-node budget for each chromatic claim
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(Args)]
struct ChromaArgs {
    /// Graph or bundle file ("-" for stdin)
    #[arg(long = "in")]
    input: PathBuf,
    /// Distance radius
    #[arg(long)]
    t: u64,
    /// Colour edges (distance-t index) or vertices (distance-t number)
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Search-node budget before reporting bounds only
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Emit the full solve report as JSON
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Edge,
    Vertex,
}

#[derive(Args)]
struct ExportArgs {
    /// Graph or bundle file ("-" for stdin)
    #[arg(long = "in")]
    input: PathBuf,
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    configure_threads()?;
    match cli.command {
        Command::Gen(args) => cmd_gen(args),
        Command::Bounds(args) => cmd_bounds(args),
        Command::Table(args) => cmd_table(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Chroma(args) => cmd_chroma(args),
        Command::Export(args) => cmd_export(args),
    }
}

/// Honours DISTCHROMA_THREADS by sizing the global worker pool before any
/// parallel work runs. Unset means the library default.
fn configure_threads() -> Result<()> {
    if let Ok(raw) = std::env::var("DISTCHROMA_THREADS") {
        let threads: usize = raw
            .parse()
            .ok()
            .filter(|&n| n >= 1)
            .with_context(|| format!("DISTCHROMA_THREADS must be a positive integer, got {raw:?}"))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("failed to configure the worker pool")?;
    }
    Ok(())
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("failed to write {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<(Multigraph, Option<ConstructionDescriptor>)> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .context("failed to read stdin")?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("failed to read {}", path.display()))?
    };
    read_graph_text(&text).with_context(|| format!("failed to parse {}", path.display()))
}

fn cmd_gen(args: GenArgs) -> Result<u8> {
    let family = Family::from_name(&args.family)
        .with_context(|| format!("unknown family {:?}", args.family))?;
    let params = Params {
        t: args.t,
        d: args.d,
        k: args.k,
        ell: args.ell,
        n: args.n,
    };
    let descriptor = ConstructionDescriptor::new(family, params)?;
    let graph = descriptor.build();
    let text = match args.format {
        GenFormat::Json => bundle_to_json(&descriptor, &graph),
        GenFormat::Dot => graph_to_dot(&graph),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(0)
}

fn cmd_bounds(args: BoundsArgs) -> Result<u8> {
    if args.t < 1 {
        bail!("t must be at least 1");
    }
    if args.d < 3 {
        bail!("the closed forms need d >= 3");
    }
    let record = BoundsRecord::new(args.t, args.d);
    let girth = girth_thresholds(args.t);
    if args.json {
        let value = serde_json::json!({ "bounds": record, "girth": girth });
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        let parity = if args.t % 2 == 0 { "even" } else { "odd" };
        println!("t={} d={} parity={parity}", record.t, record.d);
        println!("tau_edge={}", record.tau_edge);
        println!("tau_vertex={}", record.tau_vertex);
        println!("girth_edge_main={}", opt(girth.edge_main));
        match girth.edge_tradeoff {
            Some(tr) => println!(
                "girth_edge_tradeoff={} (min_degree={})",
                tr.girth, tr.min_degree
            ),
            None => println!("girth_edge_tradeoff=-"),
        }
        println!("girth_vertex_main={}", opt(girth.vertex_main));
    }
    Ok(0)
}

fn opt(value: Option<u64>) -> String {
    value.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn cmd_table(args: TableArgs) -> Result<u8> {
    match args.kind {
        TableKind::Bounds { max_t, max_d, out } => {
            if max_t < 1 || max_d < 3 {
                bail!("the grid needs max_t >= 1 and max_d >= 3");
            }
            let mut csv = String::from("t,d,tau_edge,tau_vertex\n");
            for t in 1..=max_t {
                for d in 3..=max_d {
                    let record = BoundsRecord::new(t, d);
                    writeln!(csv, "{t},{d},{},{}", record.tau_edge, record.tau_vertex)?;
                }
            }
            emit(out.as_deref(), &csv)?;
        }
        TableKind::Girth { max_t, out } => {
            let mut csv = String::from(
                "t,edge_main,edge_tradeoff_girth,edge_tradeoff_min_degree,vertex_main\n",
            );
            for t in 1..=max_t {
                let g = girth_thresholds(t);
                let (tg, td) = match g.edge_tradeoff {
                    Some(tr) => (tr.girth.to_string(), tr.min_degree.to_string()),
                    None => (String::new(), String::new()),
                };
                writeln!(
                    csv,
                    "{t},{},{tg},{td},{}",
                    g.edge_main.map_or_else(String::new, |v| v.to_string()),
                    g.vertex_main.map_or_else(String::new, |v| v.to_string()),
                )?;
            }
            emit(out.as_deref(), &csv)?;
        }
        TableKind::Ratios { max_d, out } => {
            if max_d < 6 {
                bail!("the ratio table needs max_d >= 6");
            }
            let mut csv = String::from("family,d,t,edges,tau_edge,ratio\n");
            for d in (4..=max_d).step_by(2) {
                push_ratio_row(&mut csv, Family::Shannon, d, 1)?;
            }
            for d in (6..=max_d).step_by(2) {
                push_ratio_row(&mut csv, Family::Octahedron, d, 2)?;
            }
            emit(out.as_deref(), &csv)?;
        }
    }
    Ok(0)
}

fn push_ratio_row(csv: &mut String, family: Family, d: u64, t: u64) -> Result<()> {
    let params = Params {
        d: Some(d),
        ..Params::default()
    };
    let (_, edges) = construction_counts(family, &params)?;
    let tau = distchroma::bounds::tau_edge(t, d);
    let g = gcd(edges, tau);
    writeln!(
        csv,
        "{},{d},{t},{edges},{tau},{}/{}",
        family.name(),
        edges / g,
        tau / g
    )?;
    Ok(())
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let (graph, descriptor) = read_input(&args.input)?;
    let descriptor = descriptor.context("input has no descriptor; `verify` needs a bundle")?;
    println!(
        "family={} params={}",
        descriptor.family.name(),
        params_summary(&descriptor.params)
    );
    let v_ok = graph.num_vertices() as u64 == descriptor.predicted_vertices;
    let e_ok = graph.num_edges() as u64 == descriptor.predicted_edges;
    println!(
        "counts: vertices {}/{} edges {}/{} [{}]",
        graph.num_vertices(),
        descriptor.predicted_vertices,
        graph.num_edges(),
        descriptor.predicted_edges,
        if v_ok && e_ok { "OK" } else { "MISMATCH" }
    );
    let outcomes = check_claims(&descriptor, &graph, args.budget);
    let mut failed = !(v_ok && e_ok);
    let mut inconclusive = false;
    for (claim, outcome) in &outcomes {
        match outcome {
            ClaimOutcome::Pass => println!("claim {} [PASS]", claim_summary(claim)),
            ClaimOutcome::Fail { detail } => {
                failed = true;
                println!("claim {} [FAIL] {detail}", claim_summary(claim));
            }
            ClaimOutcome::Inconclusive { detail } => {
                inconclusive = true;
                println!("claim {} [INCONCLUSIVE] {detail}", claim_summary(claim));
            }
        }
    }
    if failed {
        println!("verdict: FAILED");
        Ok(EXIT_CLAIM_FAILED)
    } else if inconclusive {
        println!("verdict: INCONCLUSIVE (raise --budget to decide)");
        Ok(EXIT_INCONCLUSIVE)
    } else {
        println!("verdict: all {} claims hold", outcomes.len());
        Ok(0)
    }
}

fn params_summary(params: &Params) -> String {
    let mut parts = Vec::new();
    for (name, value) in [
        ("t", params.t),
        ("d", params.d),
        ("k", params.k),
        ("ell", params.ell),
        ("n", params.n),
    ] {
        if let Some(v) = value {
            parts.push(format!("{name}={v}"));
        }
    }
    if parts.is_empty() {
        "(none)".to_string()
    } else {
        parts.join(" ")
    }
}

fn claim_summary(claim: &Claim) -> String {
    match claim {
        Claim::VertexPowerClique { radius, sharp } => {
            format!("vertex_power_clique radius={radius} sharp={sharp}")
        }
        Claim::EdgePowerClique { radius, sharp } => {
            format!("edge_power_clique radius={radius} sharp={sharp}")
        }
        Claim::Girth { value } => format!("girth value={value}"),
        Claim::MaxDegree { value } => format!("max_degree value={value}"),
        Claim::IsTree => "is_tree".to_string(),
        Claim::ChromaticExceeds { kind, t, bound } => {
            let kind = match kind {
                EntityKind::Edge => "edge",
                EntityKind::Vertex => "vertex",
            };
            format!("chromatic_exceeds kind={kind} t={t} bound={bound}")
        }
        Claim::StrongCliqueEdgeBound => "strong_clique_edge_bound".to_string(),
    }
}

fn cmd_chroma(args: ChromaArgs) -> Result<u8> {
    if args.t < 1 {
        bail!("t must be at least 1");
    }
    let (graph, _) = read_input(&args.input)?;
    let report: SolveReport = match args.kind {
        KindArg::Edge => distance_chromatic_index(&graph, args.t, args.budget),
        KindArg::Vertex => distance_chromatic_number(&graph, args.t, args.budget),
    };
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        let kind = match args.kind {
            KindArg::Edge => "edge",
            KindArg::Vertex => "vertex",
        };
        println!("kind={kind} t={}", args.t);
        println!(
            "lower={} upper={} nodes={} clique_size={}",
            report.lower_bound,
            report.upper_bound,
            report.nodes,
            report.clique.len()
        );
        match report.value() {
            Some(value) => println!("value={value}"),
            None => println!("value=unresolved (raise --budget)"),
        }
    }
    Ok(match report.status {
        SolveStatus::Exact => 0,
        SolveStatus::BoundsOnly => EXIT_INCONCLUSIVE,
    })
}

fn cmd_export(args: ExportArgs) -> Result<u8> {
    let (graph, _) = read_input(&args.input)?;
    emit(args.out.as_deref(), &graph_to_dot(&graph))?;
    Ok(0)
}
