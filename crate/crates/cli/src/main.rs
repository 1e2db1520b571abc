//! Command-line front end: graph I/O, solver and enumerator invocation,
//! gadget construction and verification, corpus generation, and property
//! checks.
//!
//! Exit codes: 0 = decided/solved, 1 = usage error, 2 = rejected
//! precondition.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use transversal::corpus::{generate_corpus, CorpusGraph, Family};
use transversal::dimacs::{parse_graph, serialize_graph};
use transversal::{
    gadget_cfvs_girth, gadget_cfvs_linegraph, gadget_coct_girth, gadget_coct_linegraph,
    gadget_oct_girth, gadget_oct_linegraph, min_connected_transversal, min_transversal,
    verify_gadget, EnumerationStream, GadgetInstance, Graph, PadBudget, SolveReport,
    TransversalKind,
};

mod report;

/// Hard safety cap on the oracle ceiling.
const CEILING_CAP: usize = 24;

#[derive(Parser)]
#[command(name = "transversal", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a minimum (connected) transversal.
    Solve(SolveArgs),
    /// Enumerate a minimal-set family, one canonical set per line.
    Enumerate(EnumerateArgs),
    /// Construct a reduction instance and print it as DIMACS.
    Gadget(GadgetArgs),
    /// Verify a reduction equivalence by brute force.
    Verify(VerifyArgs),
    /// Generate a graph corpus.
    Gen(GenArgs),
    /// Check a structural property of the input graph.
    Check(CheckArgs),
}

#[derive(Args)]
struct InputArg {
    /// Input graph file (DIMACS edge list); stdin when omitted.
    #[arg(long)]
    input: Option<std::path::PathBuf>,
}

impl InputArg {
    fn read_graph(&self) -> Result<Graph, CliError> {
        let text = match &self.input {
            Some(path) => std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?,
            None => {
                let mut buf = String::new();
                std::io::stdin()
                    .read_to_string(&mut buf)
                    .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
                buf
            }
        };
        // Malformed input is a usage error; exit code 2 is reserved for
        // well-formed graphs that violate a construction's precondition.
        parse_graph(&text).map_err(|e| CliError::Usage(e.to_string()))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Vc,
    Fvs,
    Oct,
}

impl From<KindArg> for TransversalKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Vc => TransversalKind::VertexCover,
            KindArg::Fvs => TransversalKind::FeedbackVertexSet,
            KindArg::Oct => TransversalKind::OddCycleTransversal,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Require the transversal to induce a connected subgraph.
    #[arg(long)]
    connected: bool,
    /// Induced-matching freeness parameter used by AUTO padding.
    #[arg(long, default_value_t = 2)]
    s: usize,
    /// Padding budget: AUTO (price-of-connectivity constant) or a number.
    #[arg(long, default_value = "AUTO")]
    pad_budget: String,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Args)]
struct EnumerateArgs {
    #[command(flatten)]
    input: InputArg,
    /// mis enumerates maximal independent sets; vc/fvs/oct the minimal
    /// transversals.
    #[arg(long)]
    kind: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetName {
    OctLine,
    CoctLine,
    CfvsLine,
    OctGirth,
    CoctGirth,
    CfvsGirth,
}

#[derive(Args)]
struct GadgetArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long, value_enum)]
    name: GadgetName,
    /// Girth parameter for the girth gadgets.
    #[arg(long, default_value_t = 3)]
    p: usize,
    /// Carried budget for the girth gadgets.
    #[arg(long, default_value_t = 0)]
    k: i64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArg,
    #[arg(long, value_enum)]
    gadget: GadgetName,
    #[arg(long, default_value_t = 3)]
    p: usize,
    #[arg(long, default_value_t = 0)]
    k: i64,
    /// Oracle ceiling for the brute-force deciders (capped at 24).
    #[arg(long, default_value_t = 16)]
    oracle_ceiling: usize,
}

#[derive(Args)]
struct GenArgs {
    /// path | cycle | complete | complete-multipartite |
    /// random-filtered-sp2free | petersen
    #[arg(long)]
    family: String,
    #[arg(long, default_value_t = 5)]
    n: usize,
    /// Part sizes for complete-multipartite, comma separated.
    #[arg(long, value_delimiter = ',')]
    parts: Vec<usize>,
    #[arg(long, default_value_t = 2)]
    s: usize,
    #[arg(long, default_value_t = 0.5)]
    edge_probability: f64,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    input: InputArg,
    /// sp2free | girth | claw-free
    #[arg(long)]
    property: String,
    #[arg(long, default_value_t = 2)]
    s: usize,
}

enum CliError {
    Usage(String),
    Rejected(String),
}

impl From<transversal::Error> for CliError {
    fn from(e: transversal::Error) -> Self {
        CliError::Rejected(e.to_string())
    }
}

fn main() -> ExitCode {
    // Die quietly on a closed pipe (e.g. `transversal gadget ... | head`)
    // instead of panicking on the failed write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not usage errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Rejected(msg)) => {
            eprintln!("rejected: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve(args) => solve(args),
        Command::Enumerate(args) => enumerate(args),
        Command::Gadget(args) => gadget(args),
        Command::Verify(args) => verify(args),
        Command::Gen(args) => gen(args),
        Command::Check(args) => check(args),
    }
}

fn solve(args: SolveArgs) -> Result<(), CliError> {
    let g = args.input.read_graph()?;
    let kind: TransversalKind = args.kind.into();
    let report: SolveReport = if args.connected {
        let budget = if args.pad_budget.eq_ignore_ascii_case("auto") {
            PadBudget::Auto { s: args.s }
        } else {
            let b: usize = args
                .pad_budget
                .parse()
                .map_err(|_| CliError::Usage(format!("bad --pad-budget '{}'", args.pad_budget)))?;
            PadBudget::Fixed(b)
        };
        min_connected_transversal(&g, kind, budget)?
    } else {
        min_transversal(&g, kind)
    };
    match args.format {
        FormatArg::Json => println!("{}", report::to_json(&report)),
        FormatArg::Human => print!("{}", report::to_human(&report)),
    }
    Ok(())
}

fn enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let g = args.input.read_graph()?;
    let stream = match args.kind.as_str() {
        "mis" => EnumerationStream::maximal_independent_sets(&g),
        "vc" => EnumerationStream::minimal_vertex_covers(&g),
        "fvs" => EnumerationStream::minimal_feedback_vertex_sets(&g),
        "oct" => EnumerationStream::minimal_odd_cycle_transversals(&g),
        other => return Err(CliError::Usage(format!("unknown enumerate kind '{other}'"))),
    };
    let mut count = 0usize;
    for set in stream {
        let ids: Vec<String> = set.iter().map(|v| (v + 1).to_string()).collect();
        println!("{}", ids.join(" "));
        count += 1;
    }
    eprintln!("{count} sets");
    Ok(())
}

fn build_gadget(name: GadgetName, g: &Graph, p: usize, k: i64) -> Result<GadgetInstance, CliError> {
    Ok(match name {
        GadgetName::OctLine => gadget_oct_linegraph(g)?,
        GadgetName::CoctLine => gadget_coct_linegraph(g)?,
        GadgetName::CfvsLine => gadget_cfvs_linegraph(g)?,
        GadgetName::OctGirth => gadget_oct_girth(g, p, k)?,
        GadgetName::CoctGirth => gadget_coct_girth(g, p, k)?,
        GadgetName::CfvsGirth => gadget_cfvs_girth(g, p, k)?,
    })
}

fn gadget(args: GadgetArgs) -> Result<(), CliError> {
    let g = args.input.read_graph()?;
    let inst = build_gadget(args.name, &g, args.p, args.k)?;
    println!(
        "c gadget {} budget_k {}",
        inst.provenance.name(),
        inst.budget_k
    );
    for (v, role) in inst.labels.iter().enumerate() {
        println!("c vertex {} role {:?}", v + 1, role);
    }
    print!("{}", serialize_graph(&inst.graph));
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let g = args.input.read_graph()?;
    let ceiling = args.oracle_ceiling.min(CEILING_CAP);
    let inst = build_gadget(args.gadget, &g, args.p, args.k)?;
    let holds = verify_gadget(&inst, &g, ceiling)?;
    println!(
        "gadget {} on n={} m={}: equivalence {}",
        inst.provenance.name(),
        g.n(),
        g.m(),
        if holds { "holds" } else { "VIOLATED" }
    );
    Ok(())
}

fn gen(args: GenArgs) -> Result<(), CliError> {
    let family = match args.family.as_str() {
        "path" => Family::Path { n: args.n },
        "cycle" => Family::Cycle { n: args.n },
        "complete" => Family::Complete { n: args.n },
        "complete-multipartite" => {
            if args.parts.is_empty() {
                return Err(CliError::Usage(
                    "complete-multipartite needs --parts a,b,...".into(),
                ));
            }
            Family::CompleteMultipartite {
                parts: args.parts.clone(),
            }
        }
        "random-filtered-sp2free" => Family::RandomSp2Free {
            n: args.n,
            s: args.s,
            edge_probability: args.edge_probability,
            count: args.count,
        },
        "petersen" => Family::Petersen,
        other => return Err(CliError::Usage(format!("unknown family '{other}'"))),
    };
    let graphs = generate_corpus(&family, args.seed)?;
    for CorpusGraph {
        name,
        graph,
        verified_s,
    } in graphs
    {
        println!("c {name}");
        if let Some(s) = verified_s {
            println!("c verified {s}P2-free");
        }
        print!("{}", serialize_graph(&graph));
    }
    Ok(())
}

fn check(args: CheckArgs) -> Result<(), CliError> {
    let g = args.input.read_graph()?;
    match args.property.as_str() {
        "sp2free" => match g.find_induced_matching(args.s) {
            None => println!("{}P2-free: yes", args.s),
            Some(witness) => {
                let pretty: Vec<String> = witness
                    .iter()
                    .map(|&(u, v)| format!("({},{})", u + 1, v + 1))
                    .collect();
                println!(
                    "{}P2-free: no (induced matching {})",
                    args.s,
                    pretty.join(" ")
                );
            }
        },
        "girth" => match g.girth() {
            Some(girth) => println!("girth: {girth}"),
            None => println!("girth: infinite"),
        },
        "claw-free" => println!("claw-free: {}", if g.is_claw_free() { "yes" } else { "no" }),
        other => return Err(CliError::Usage(format!("unknown property '{other}'"))),
    }
    Ok(())
}
