//! `recolour`: command-line access to the reconfiguration explorer, the
//! constructive recolouring routines and the reproducible checks.

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use thiserror::Error;

use recolour::checks::{run_check, CheckOptions};
use recolour::colouring::is_frozen;
use recolour::explorer::{
    components, distance, hamiltonian_cycle, metrics, verify_sequence, Distance, HamiltonOutcome,
    DEFAULT_SEARCH_BUDGET, DEFAULT_STATE_BUDGET,
};
use recolour::graph::{
    complete_bipartite, complete_bipartite_minus_matching, forcing_gadget, frozen_list_instance, k18_list_instance,
    layered_example, path, path_plus_chain,
};
use recolour::kpq::{
    diameter_interval, extremal_pair, recolour_kpq, regime_table, upper_bound_formula, KpqInstance, REGIME_TABLE_HEADER,
};
use recolour::renaming::optimal_renaming;
use recolour::{Colour, Colouring, Graph, ListAssignment, Palette, RecolouringSequence};

const BUDGET_ENV: &str = "RECOLOUR_BUDGET";

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Core(#[from] recolour::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    File { path: PathBuf, source: recolour::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(recolour::Error::BudgetExhausted { .. })
            | CliError::File {
                source: recolour::Error::BudgetExhausted { .. },
                ..
            } => 3,
            _ => 2,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

/// Outcome of a successful command: `Fail` maps to exit status 1.
enum Verdict {
    Ok,
    Fail,
}

#[derive(Parser)]
#[command(
    name = "recolour",
    version,
    about = "Explore and certify graph recolouring sequences"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PaletteArgs {
    /// Uniform palette {1..k}.
    #[arg(long)]
    k: Option<Colour>,
    /// List assignment file, one line of colours per vertex.
    #[arg(long)]
    lists: Option<PathBuf>,
}

#[derive(Args)]
struct GraphArgs {
    #[arg(long)]
    graph: PathBuf,
    #[command(flatten)]
    palette: PaletteArgs,
    /// Maximum number of colourings to enumerate (default: $RECOLOUR_BUDGET or 10^8).
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct KpqArgs {
    #[arg(long)]
    k: Colour,
    #[arg(long)]
    p: usize,
    #[arg(long)]
    q: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// K_{p,q}: needs --p and --q.
    CompleteBipartite,
    /// K_{m,m} minus a perfect matching: needs --m.
    KmmMinusMatching,
    /// Path on --n vertices.
    Path,
    /// The 10-vertex layered graph.
    Layered,
    /// List-forcing gadget: needs --t and --s.
    ForcingGadget,
    /// Path with hung gadgets: needs --n.
    PathPlusChain,
    /// The K_{18,18} list instance with its two colourings.
    K18,
    /// K_{m,m} minus a matching with a frozen list colouring: needs --m.
    FrozenList,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph family to <out>.graph (plus .lists and colourings where defined).
    Gen {
        family: Family,
        /// Output path prefix.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        p: Option<usize>,
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
    },
    /// Diameter, radius and connectivity of the reconfiguration graph.
    Metrics {
        #[command(flatten)]
        g: GraphArgs,
        /// Use one BFS source per colour-permutation orbit (uniform palettes only).
        #[arg(long)]
        symmetry: bool,
    },
    /// Shortest recolouring distance between two colourings.
    Distance {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        /// Write one shortest sequence here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Connected components of the reconfiguration graph.
    Components {
        #[command(flatten)]
        g: GraphArgs,
    },
    /// Whether a colouring is frozen (no vertex can change colour).
    Frozen {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long)]
        colouring: PathBuf,
    },
    /// Search for a Hamiltonian cycle in the reconfiguration graph.
    Ham {
        #[command(flatten)]
        g: GraphArgs,
        /// Search-tree node limit.
        #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
        search_budget: u64,
        /// Write the cycle here, one colouring per line.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a recolouring sequence between two colourings.
    Verify {
        #[command(flatten)]
        g: GraphArgs,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        seq: PathBuf,
    },
    /// Recolour between two colourings with the same partition using `ell` colours.
    Renaming {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        ell: Colour,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Diameter bounds for C_k(K_{p,q}).
    KpqFormula {
        #[command(flatten)]
        inst: KpqArgs,
        #[arg(long)]
        json: bool,
    },
    /// Write the extremal pair of k-colourings of K_{p,q}.
    KpqExtremal {
        #[command(flatten)]
        inst: KpqArgs,
        #[arg(long)]
        alpha: PathBuf,
        #[arg(long)]
        beta: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Recolour between two k-colourings of K_{p,q} within the proven bound.
    KpqRecolour {
        #[command(flatten)]
        inst: KpqArgs,
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Tab-separated regime bounds for q = p..=qmax.
    KpqRegimes {
        #[arg(long)]
        k: Colour,
        #[arg(long)]
        p: usize,
        #[arg(long)]
        qmax: usize,
    },
    /// Recompute one published value and print PASS or FAIL.
    PaperCheck {
        item: String,
        /// Include the larger optional instances.
        #[arg(long)]
        full: bool,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(Verdict::Ok) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn write(path: &Path, text: &str) -> CliResult<()> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn parse_file<T>(path: &Path, parse: impl FnOnce(&str) -> recolour::Result<T>) -> CliResult<T> {
    parse(&read(path)?).map_err(|source| CliError::File {
        path: path.to_path_buf(),
        source,
    })
}

fn load_graph(path: &Path) -> CliResult<Graph> {
    parse_file(path, Graph::from_text)
}

fn load_colouring(path: &Path) -> CliResult<Colouring> {
    parse_file(path, Colouring::from_text)
}

fn load_palette(args: &PaletteArgs) -> CliResult<Palette> {
    match (args.k, &args.lists) {
        (Some(k), _) => Ok(Palette::Uniform(k)),
        (None, Some(p)) => Ok(Palette::Lists(parse_file(p, ListAssignment::from_text)?)),
        (None, None) => Err(CliError::Usage("one of --k or --lists is required".into())),
    }
}

fn budget(flag: Option<u64>) -> CliResult<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("{BUDGET_ENV}={v} is not a non-negative integer"))),
        Err(_) => Ok(DEFAULT_STATE_BUDGET),
    }
}

fn emit_sequence(seq: &RecolouringSequence, out: Option<&Path>) -> CliResult<()> {
    match out {
        Some(p) => {
            write(p, &seq.to_text())?;
            println!("length={}", seq.len());
        }
        None => print!("{}", seq.to_text()),
    }
    Ok(())
}

fn print_json(value: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(value).expect("report serialises"));
}

fn need(name: &str, v: Option<usize>) -> CliResult<usize> {
    v.ok_or_else(|| CliError::Usage(format!("this family needs --{name}")))
}

fn run(cmd: Command) -> CliResult<Verdict> {
    match cmd {
        Command::Gen {
            family,
            out,
            p,
            q,
            m,
            n,
            t,
            s,
        } => gen(family, &out, [p, q, m, n, t, s]),
        Command::Metrics { g, symmetry } => {
            let graph = load_graph(&g.graph)?;
            let report = metrics(&graph, &load_palette(&g.palette)?, symmetry, budget(g.budget)?)?;
            if g.json {
                print_json(&report);
            } else {
                println!(
                    "nodes={} connected={} components={} diameter={} radius={}",
                    report.node_count, report.connected, report.component_count, report.diameter, report.radius
                );
            }
            Ok(Verdict::Ok)
        }
        Command::Distance { g, from, to, out } => {
            let graph = load_graph(&g.graph)?;
            let (a, b) = (load_colouring(&from)?, load_colouring(&to)?);
            let limit = budget(g.budget)?;
            let d = distance(&graph, &load_palette(&g.palette)?, &a, &b, limit)?;
            let seq = match &d {
                Distance::Reachable(_, seq) => Some(seq),
                Distance::Unreachable => None,
                Distance::BudgetExhausted => return Err(recolour::Error::BudgetExhausted { limit }.into()),
            };
            if let (Some(seq), Some(p)) = (seq, &out) {
                write(p, &seq.to_text())?;
            }
            match (g.json, d.length()) {
                (true, len) => print_json(&json!({ "distance": len, "reachable": len.is_some() })),
                (false, Some(len)) => println!("distance={len}"),
                (false, None) => println!("distance=unreachable"),
            }
            Ok(Verdict::Ok)
        }
        Command::Components { g } => {
            let graph = load_graph(&g.graph)?;
            let c = components(&graph, &load_palette(&g.palette)?, budget(g.budget)?)?;
            if g.json {
                print_json(&c);
            } else {
                println!("components={} nodes={}", c.count, c.sizes.iter().sum::<usize>());
                for (i, (size, rep)) in c.sizes.iter().zip(&c.representatives).enumerate() {
                    print!("component {i} size={size} first={}", rep.to_text());
                }
            }
            Ok(Verdict::Ok)
        }
        Command::Frozen { g, colouring } => {
            let graph = load_graph(&g.graph)?;
            let c = load_colouring(&colouring)?;
            let frozen = is_frozen(&graph, &c, &load_palette(&g.palette)?)?;
            if g.json {
                print_json(&json!({ "frozen": frozen }));
            } else {
                println!("frozen={frozen}");
            }
            Ok(Verdict::Ok)
        }
        Command::Ham { g, search_budget, out } => {
            let graph = load_graph(&g.graph)?;
            let outcome = hamiltonian_cycle(&graph, &load_palette(&g.palette)?, search_budget, budget(g.budget)?)?;
            let cycle = match outcome {
                HamiltonOutcome::Found(cycle) => Some(cycle),
                HamiltonOutcome::None => None,
                HamiltonOutcome::BudgetExhausted => {
                    return Err(recolour::Error::BudgetExhausted { limit: search_budget }.into())
                }
            };
            if let (Some(cycle), Some(p)) = (&cycle, &out) {
                write(p, &cycle.iter().map(Colouring::to_text).collect::<String>())?;
            }
            let len = cycle.as_ref().map(Vec::len);
            if g.json {
                print_json(&json!({ "hamiltonian": len.is_some(), "length": len }));
            } else {
                match len {
                    Some(l) => println!("hamiltonian=true length={l}"),
                    None => println!("hamiltonian=false"),
                }
            }
            Ok(Verdict::Ok)
        }
        Command::Verify { g, from, to, seq } => {
            let graph = load_graph(&g.graph)?;
            let (a, b) = (load_colouring(&from)?, load_colouring(&to)?);
            let s = parse_file(&seq, |t| RecolouringSequence::from_text(a, t))?;
            let report = verify_sequence(&graph, &load_palette(&g.palette)?, &s, &b);
            if g.json {
                print_json(&report);
            } else {
                print!(
                    "valid={} length={} max_per_vertex={}",
                    report.valid,
                    report.length,
                    report.max_per_vertex()
                );
                match report.failure_step {
                    Some(i) => println!(" failure_step={i}"),
                    None => println!(),
                }
            }
            Ok(if report.valid { Verdict::Ok } else { Verdict::Fail })
        }
        Command::Renaming {
            graph,
            from,
            to,
            ell,
            out,
        } => {
            let g = load_graph(&graph)?;
            let seq = optimal_renaming(&g, &load_colouring(&from)?, &load_colouring(&to)?, ell)?;
            emit_sequence(&seq, out.as_deref())?;
            Ok(Verdict::Ok)
        }
        Command::KpqFormula { inst, json } => {
            let inst = KpqInstance::new(inst.k, inst.p, inst.q)?;
            let d = diameter_interval(&inst);
            if json {
                print_json(&d);
            } else {
                println!("k={} p={} q={} regime={}", inst.k, inst.p, inst.q, d.regime);
                println!("lower={}", d.lower);
                println!("upper={}", d.upper);
                println!("g_slack={}", d.g_slack);
                println!("exact={}", d.exact);
            }
            Ok(Verdict::Ok)
        }
        Command::KpqExtremal {
            inst,
            alpha,
            beta,
            json,
        } => {
            let inst = KpqInstance::new(inst.k, inst.p, inst.q)?;
            let (a, b, spec) = extremal_pair(&inst);
            write(&alpha, &a.to_text())?;
            write(&beta, &b.to_text())?;
            if json {
                print_json(&spec);
            } else {
                let blocks: Vec<String> = spec.blocks.iter().map(|(i, j)| format!("({i},{j})")).collect();
                println!("a={} b={} blocks={}", spec.a, spec.b, blocks.join(","));
                println!("u_sizes={:?} v_sizes={:?}", spec.u_sizes, spec.v_sizes);
            }
            Ok(Verdict::Ok)
        }
        Command::KpqRecolour { inst, from, to, out } => {
            let inst = KpqInstance::new(inst.k, inst.p, inst.q)?;
            let seq = recolour_kpq(&inst, &load_colouring(&from)?, &load_colouring(&to)?)?;
            emit_sequence(&seq, out.as_deref())?;
            if out.is_some() {
                println!("bound={}", upper_bound_formula(&inst));
            }
            Ok(Verdict::Ok)
        }
        Command::KpqRegimes { k, p, qmax } => {
            let rows = regime_table(k, p, qmax)?;
            let mut text = format!("{REGIME_TABLE_HEADER}\n");
            for r in rows {
                text.push_str(&r.to_tsv());
                text.push('\n');
            }
            print!("{text}");
            Ok(Verdict::Ok)
        }
        Command::PaperCheck {
            item,
            full,
            budget: b,
            json,
        } => {
            let report = run_check(
                &item,
                &CheckOptions {
                    budget: budget(b)?,
                    full,
                },
            )?;
            if json {
                print_json(&json!({
                    "item": report.item,
                    "lines": report.lines,
                    "passed": report.passed,
                }));
            } else {
                print!("{}", report.to_text());
            }
            std::io::stdout().flush().ok();
            Ok(if report.passed { Verdict::Ok } else { Verdict::Fail })
        }
    }
}

fn gen(family: Family, out: &Path, params: [Option<usize>; 6]) -> CliResult<Verdict> {
    let [p, q, m, n, t, s] = params;
    let file = |ext: &str| {
        let mut name = out.as_os_str().to_owned();
        name.push(format!(".{ext}"));
        PathBuf::from(name)
    };
    let mut written = Vec::new();
    let mut put = |ext: &str, text: String| -> CliResult<()> {
        let path = file(ext);
        write(&path, &text)?;
        written.push(path);
        Ok(())
    };
    match family {
        Family::CompleteBipartite => put("graph", complete_bipartite(need("p", p)?, need("q", q)?)?.to_text())?,
        Family::KmmMinusMatching => put("graph", complete_bipartite_minus_matching(need("m", m)?)?.to_text())?,
        Family::Path => put("graph", path(need("n", n)?)?.to_text())?,
        Family::Layered => put("graph", layered_example().to_text())?,
        Family::ForcingGadget => {
            let gadget = forcing_gadget(need("t", t)?, need("s", s)?)?;
            put("graph", gadget.graph.to_text())?;
            put("lists", gadget.lists.to_text())?;
        }
        Family::PathPlusChain => {
            let (g, lists) = path_plus_chain(need("n", n)?)?;
            put("graph", g.to_text())?;
            put("lists", lists.to_text())?;
        }
        Family::K18 => {
            let inst = k18_list_instance();
            put("graph", inst.graph.to_text())?;
            put("lists", inst.lists.to_text())?;
            put("alpha", inst.alpha.to_text())?;
            put("beta", inst.beta.to_text())?;
        }
        Family::FrozenList => {
            let (g, lists, phi) = frozen_list_instance(need("m", m)?)?;
            put("graph", g.to_text())?;
            put("lists", lists.to_text())?;
            put("phi", phi.to_text())?;
        }
    }
    for path in written {
        println!("wrote {}", path.display());
    }
    Ok(Verdict::Ok)
}
