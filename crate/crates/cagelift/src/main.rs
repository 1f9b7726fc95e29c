//! Command-line surface: construct, lift, analyze, certify, identify,
//! search, convert. All commands are pure pipelines; identical inputs
//! and flags produce byte-identical outputs. `CAGELIFT_THREADS` caps the
//! analysis thread pool (0 or unset = automatic).

use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cagelift::analysis;
use cagelift::constructions::{Built, ConstructionSpec};
use cagelift::cycles::{self, Verdict};
use cagelift::identify::{identify, IdentifySpec};
use cagelift::io::{
    read_edge_list, read_graph6, read_voltage_graph, simple_graph_to_dot, voltage_graph_to_dot,
    write_edge_list, write_graph6, write_voltage_graph,
};
use cagelift::search::{search, SearchProblem, Strategy};
use cagelift::{SimpleGraph, VoltageGraph};

#[derive(Parser)]
#[command(
    name = "cagelift",
    version,
    about = "Biregular (3,m)-graphs of even girth via voltage-graph lifts and remote-vertex gluing"
)]
struct Cli {
    /// Output file ("-" or omitted: stdout)
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,

    /// Output format where a graph is written
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Emit a single JSON object instead of text (analyze, certify)
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Format {
    /// graph6 line (simple graphs)
    G6,
    /// order line plus `u v` edge lines (simple graphs)
    Edges,
    /// Graphviz DOT
    Dot,
    /// voltage-graph text format
    Vg,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Family {
    G6,
    G8,
    G10,
    H10,
    G12,
    H12,
    T4t2,
    T4t,
    K33,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and write it out
    Construct(ConstructArgs),
    /// Lift a voltage graph at a modulus
    Lift(LiftArgs),
    /// Print order, size, girth, bipartiteness, degrees, diameter
    Analyze(InputArgs),
    /// Certify lift girth per modulus from the voltage graph alone
    Certify(CertifyArgs),
    /// Glue copies of a cubic girth-g graph at remote vertices
    Identify(IdentifyArgs),
    /// Search voltage assignments on a skeleton for a target girth
    Search(SearchArgs),
    /// Re-encode a graph between formats
    Convert(InputArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Which construction to build
    #[arg(long, value_enum)]
    family: Family,
    /// Tree parameter for t4t2 (t >= 1) and t4t (t >= 2)
    #[arg(short, long)]
    t: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    delta: Option<i64>,
    /// Override the H12 `v` voltage
    #[arg(long, allow_hyphen_values = true)]
    h12_v: Option<i64>,
}

#[derive(Args)]
struct LiftArgs {
    /// Voltage graph file (text format; "-" for stdin)
    #[arg(short, long)]
    input: PathBuf,
    /// Modulus (m >= 1)
    #[arg(short, long)]
    m: usize,
}

#[derive(Args)]
struct InputArgs {
    /// Graph file; format by extension (.vg, .g6, .edges) unless --from
    #[arg(short, long)]
    input: PathBuf,
    /// Input format override
    #[arg(long, value_enum)]
    from: Option<Format>,
}

#[derive(Args)]
struct CertifyArgs {
    /// Voltage graph file (text format; "-" for stdin)
    #[arg(short, long)]
    input: PathBuf,
    /// Target girth (even, >= 4)
    #[arg(long)]
    girth: usize,
    #[arg(long)]
    m_min: usize,
    #[arg(long)]
    m_max: usize,
    /// Also print the short-cycle census
    #[arg(long)]
    census: bool,
}

#[derive(Args)]
struct IdentifyArgs {
    /// Base graph file (.g6 or .edges)
    #[arg(long)]
    base: PathBuf,
    /// Input format override for the base graph
    #[arg(long, value_enum)]
    from: Option<Format>,
    /// Girth of the base graph
    #[arg(long)]
    girth: usize,
    /// Target degree m >= 3
    #[arg(short, long)]
    m: usize,
    /// Remote-pair vertices by label (default: lexicographically
    /// smallest remote pair)
    #[arg(long)]
    x: Option<String>,
    #[arg(long)]
    y: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Skeleton voltage graph file
    #[arg(long)]
    skeleton: PathBuf,
    /// Comma-separated arc indices whose voltages are searched
    #[arg(long)]
    free: String,
    /// Target girth
    #[arg(long)]
    girth: usize,
    /// Comma-separated moduli that must certify
    #[arg(long)]
    m_set: String,
    /// Inclusive voltage range, e.g. -6..6 (default: -(girth/2)..girth/2)
    #[arg(long, allow_hyphen_values = true)]
    range: Option<String>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    strategy: StrategyArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1_000_000)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Random,
}

fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run() -> Result<()> {
    configure_threads()?;
    let cli = Cli::parse();
    let out = match &cli.command {
        Command::Construct(args) => run_construct(&cli, args)?,
        Command::Lift(args) => run_lift(&cli, args)?,
        Command::Analyze(args) => run_analyze(&cli, args)?,
        Command::Certify(args) => run_certify(&cli, args)?,
        Command::Identify(args) => run_identify(&cli, args)?,
        Command::Search(args) => run_search(args)?,
        Command::Convert(args) => run_convert(&cli, args)?,
    };
    emit(cli.output.as_deref(), &out)
}

fn configure_threads() -> Result<()> {
    if let Ok(value) = std::env::var("CAGELIFT_THREADS") {
        let n: usize = value
            .parse()
            .map_err(|_| anyhow!("CAGELIFT_THREADS must be a number, got {value:?}"))?;
        if n > 0 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global()
                .context("building the thread pool")?;
        }
    }
    Ok(())
}

fn emit(path: Option<&Path>, content: &str) -> Result<()> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::write(p, content).with_context(|| format!("writing {}", p.display()))
        }
        _ => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn infer_format(path: &Path, from: Option<Format>) -> Format {
    from.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some("vg") => Format::Vg,
        Some("edges") | Some("el") => Format::Edges,
        _ => Format::G6,
    })
}

fn load_simple_graph(path: &Path, from: Option<Format>) -> Result<SimpleGraph> {
    let text = read_input(path)?;
    match infer_format(path, from) {
        Format::G6 => Ok(read_graph6(&text)?),
        Format::Edges => Ok(read_edge_list(&text)?),
        f => bail!("cannot read a simple graph from {f:?} input"),
    }
}

fn load_voltage_graph(path: &Path) -> Result<VoltageGraph> {
    let text = read_input(path)?;
    Ok(read_voltage_graph(&text)?)
}

fn render_simple(g: &SimpleGraph, format: Format) -> Result<String> {
    Ok(match format {
        Format::G6 => format!("{}\n", write_graph6(g)),
        Format::Edges => write_edge_list(g),
        Format::Dot => simple_graph_to_dot(g),
        Format::Vg => bail!("a lifted graph has no voltages; choose g6, edges or dot"),
    })
}

fn render_voltage(g: &VoltageGraph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Vg => write_voltage_graph(g),
        Format::Dot => voltage_graph_to_dot(g),
        f => bail!("a voltage graph cannot be written as {f:?}; choose vg or dot"),
    })
}

fn run_construct(cli: &Cli, args: &ConstructArgs) -> Result<String> {
    let need_t = |what: &str| {
        args.t
            .ok_or_else(|| anyhow!("--family {what} requires --t"))
    };
    let need = |value: Option<i64>, flag: &str| {
        value.ok_or_else(|| anyhow!("--family {:?} requires --{flag}", args.family))
    };
    let spec = match args.family {
        Family::G6 => ConstructionSpec::G6 {
            alpha: need(args.alpha, "alpha")?,
            beta: need(args.beta, "beta")?,
        },
        Family::G8 => ConstructionSpec::G8 {
            alpha: need(args.alpha, "alpha")?,
            beta: need(args.beta, "beta")?,
            gamma: need(args.gamma, "gamma")?,
            delta: need(args.delta, "delta")?,
        },
        Family::G10 => ConstructionSpec::G10,
        Family::H10 => ConstructionSpec::H10,
        Family::G12 => ConstructionSpec::G12,
        Family::H12 => ConstructionSpec::H12 { v: args.h12_v },
        Family::T4t2 => {
            let t = need_t("t4t2")?;
            if t < 1 {
                bail!("t4t2 requires t >= 1");
            }
            ConstructionSpec::TreeT4t2 { t }
        }
        Family::T4t => {
            let t = need_t("t4t")?;
            if t < 2 {
                bail!("t4t requires t >= 2");
            }
            ConstructionSpec::TreeT4t { t }
        }
        Family::K33 => ConstructionSpec::K33,
    };
    match spec.build() {
        Built::Voltage(g) => render_voltage(&g, cli.format.unwrap_or(Format::Vg)),
        Built::Simple(g) => render_simple(&g, cli.format.unwrap_or(Format::G6)),
    }
}

fn run_lift(cli: &Cli, args: &LiftArgs) -> Result<String> {
    if args.m < 1 {
        bail!("modulus must be at least 1");
    }
    let g = load_voltage_graph(&args.input)?;
    let lifted = g.lift(args.m)?;
    render_simple(&lifted, cli.format.unwrap_or(Format::G6))
}

fn run_analyze(cli: &Cli, args: &InputArgs) -> Result<String> {
    let g = load_simple_graph(&args.input, args.from)?;
    let report = analysis::analyze(&g);
    if cli.json {
        Ok(format!("{}\n", serde_json::to_string(&report)?))
    } else {
        Ok(format!("{report}\n"))
    }
}

fn run_certify(cli: &Cli, args: &CertifyArgs) -> Result<String> {
    if args.girth < 4 || !args.girth.is_multiple_of(2) {
        bail!("target girth must be an even number >= 4");
    }
    let g = load_voltage_graph(&args.input)?;
    let cert = cycles::certify(&g, args.girth, args.m_min..=args.m_max)?;
    if cli.json {
        let verdicts: Vec<serde_json::Value> = cert
            .verdicts
            .iter()
            .map(|(m, v)| match v {
                Verdict::Certified => serde_json::json!({"m": m, "certified": true}),
                Verdict::Violated(w) => serde_json::json!({
                    "m": m,
                    "certified": false,
                    "lift_cycle_len": w.lift_cycle_len,
                    "witness": w.describe(&g),
                }),
            })
            .collect();
        let mut doc = serde_json::json!({
            "target_girth": cert.target_girth,
            "girth_ceiling": cert.girth_ceiling(),
            "verdicts": verdicts,
        });
        if args.census {
            doc["census"] = serde_json::json!({
                "directed_by_length": cert.census.directed_by_length,
                "directed_total": cert.census.directed_total(),
                "undirected_total": cert.census.undirected_total(),
                "distinct_sums": cert.census.distinct_sums(),
            });
        }
        return Ok(format!("{doc}\n"));
    }
    let mut out = format!("target girth: {}\n", cert.target_girth);
    match (&cert.shortest_pinned_path, cert.girth_ceiling()) {
        (Some(path), Some(ceiling)) => {
            out.push_str(&format!(
                "girth ceiling: {} (pinned path {})\n",
                ceiling,
                path.describe(&g)
            ));
        }
        _ => out.push_str("girth ceiling: none from pinned paths\n"),
    }
    out.push_str("   m  verdict    witness\n");
    for (m, v) in &cert.verdicts {
        match v {
            Verdict::Certified => out.push_str(&format!("{m:>4}  certified  -\n")),
            Verdict::Violated(w) => {
                out.push_str(&format!("{m:>4}  VIOLATED   {}\n", w.describe(&g)))
            }
        }
    }
    if args.census {
        out.push_str(&format!("{}\n", cert.census));
    }
    Ok(out)
}

fn run_identify(cli: &Cli, args: &IdentifyArgs) -> Result<String> {
    let base = load_simple_graph(&args.base, args.from)?;
    let remote_pair = match (&args.x, &args.y) {
        (Some(x), Some(y)) => {
            let find = |label: &str| {
                base.vertex_by_label(label)
                    .ok_or_else(|| anyhow!("no vertex labeled {label:?} in the base graph"))
            };
            Some((find(x)?, find(y)?))
        }
        (None, None) => None,
        _ => bail!("--x and --y must be given together"),
    };
    let spec = IdentifySpec {
        base: &base,
        girth: args.girth,
        m: args.m,
        remote_pair,
    };
    let glued = identify(&spec)?;
    render_simple(&glued, cli.format.unwrap_or(Format::G6))
}

fn parse_comma_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>> {
    text.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.trim()
                .parse::<T>()
                .map_err(|_| anyhow!("invalid {what} entry {s:?}"))
        })
        .collect()
}

fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<i64>> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| anyhow!("range must look like -6..6, got {text:?}"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| anyhow!("bad range start {lo:?}"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| anyhow!("bad range end {hi:?}"))?;
    Ok(lo..=hi)
}

fn run_search(args: &SearchArgs) -> Result<String> {
    let skeleton = load_voltage_graph(&args.skeleton)?;
    let value_range = match &args.range {
        Some(text) => parse_range(text)?,
        None => {
            let half = args.girth as i64 / 2;
            -half..=half
        }
    };
    let problem = SearchProblem {
        skeleton: skeleton.clone(),
        free_arcs: parse_comma_list(&args.free, "arc index")?,
        target_girth: args.girth,
        m_set: parse_comma_list(&args.m_set, "modulus")?,
        value_range,
        strategy: match args.strategy {
            StrategyArg::Exhaustive => Strategy::Exhaustive,
            StrategyArg::Random => Strategy::RandomRestart,
        },
        seed: args.seed,
        budget: args.budget,
    };
    let result = search(&problem)?;
    let mut out = String::new();
    for assignment in &result.assignments {
        let arcs: Vec<String> = problem
            .free_arcs
            .iter()
            .zip(&assignment.voltages)
            .map(|(&index, v)| {
                let arc = skeleton.arc(index);
                format!(
                    "arc {} {} {}",
                    skeleton.name(arc.tail),
                    skeleton.name(arc.head),
                    v
                )
            })
            .collect();
        out.push_str(&arcs.join(" ; "));
        out.push('\n');
    }
    eprintln!(
        "search: {} solution(s), {} candidate(s) tried in {:.2?}{}",
        result.assignments.len(),
        result.candidates_tried,
        result.elapsed,
        if result.budget_exhausted {
            " (budget exhausted)"
        } else {
            ""
        }
    );
    Ok(out)
}

fn run_convert(cli: &Cli, args: &InputArgs) -> Result<String> {
    match infer_format(&args.input, args.from) {
        Format::Vg => {
            let g = load_voltage_graph(&args.input)?;
            render_voltage(&g, cli.format.unwrap_or(Format::Vg))
        }
        _ => {
            let g = load_simple_graph(&args.input, args.from)?;
            render_simple(&g, cli.format.unwrap_or(Format::G6))
        }
    }
}
