//! The `hypertopo` command line. `run` is the whole program minus process I/O.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};

use hypertopo::colorings::{
    build_topcode_matrix, verify_6c_labeling, verify_kd_total_coloring, verify_set_ordered_graceful, hypergraph_chromatics,
    KdKind, KdParams,
};
use hypertopo::generators::{cyclic_k_uniform, enumerate_3i, key_matchings, strong_hyperedge_set};
use hypertopo::graph::Graph;
use hypertopo::groups::{generate_hypergraph_group, shift_set, verify_every_zero, GroupLaw, GroupTable};
use hypertopo::hyperset::{complement_set, graham_reduction, verify_3i, Hypergraph, Vertex};
use hypertopo::intersected::{
    build_v_intersected, find_proper_hamiltonian_cycle, hyperedge_connectivity, intersected_metrics,
};
use hypertopo::io::{canonical_hypergraph_json, to_dot, GraphDocument, HypergraphDocument};
use hypertopo::treeforest::{forest_count, group_digits, spanning_tree_count};
use hypertopo::Error;

pub const SEED_VAR: &str = "HYPERTOPO_SEED";

/// Exit status and the two output streams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Parser, Debug)]
#[command(name = "hypertopo", version, about = "Hypergraph and set-coloring toolkit")]
struct Cli {
    /// Worker threads for the parallel library routines.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Independence / Intersection / Integrity report.
    Verify {
        file: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Family of complements.
    Complement { file: PathBuf },
    /// Graham reduction.
    Reduce { file: PathBuf },
    /// Re-emit a hypergraph document in canonical form.
    Canon { file: PathBuf },
    /// v-intersected graph with intersection edge labels.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Json)]
        out: GraphFormat,
    },
    /// Hyperedge degrees, hyperdiameter, domination, connectivity, chromatic numbers.
    Metrics { file: PathBuf },
    /// Proper hyperedge-hamiltonian cycle search.
    Cycle { file: PathBuf },
    #[command(subcommand)]
    Group(GroupCommand),
    #[command(subcommand)]
    Gen(GenCommand),
    /// All families over [1,n] passing Independence and Integrity (and Intersection with --strict).
    Enum {
        #[arg(long)]
        ground: usize,
        #[arg(long)]
        strict: bool,
    },
    /// Pairs (E, complement of E) with both sides strict 3I.
    Keys {
        #[arg(long)]
        ground: usize,
        #[arg(long, default_value_t = 10)]
        limit: usize,
        /// Falls back to HYPERTOPO_SEED, then 0.
        #[arg(long)]
        seed: Option<u64>,
    },
    #[command(subcommand)]
    Count(CountCommand),
    #[command(subcommand)]
    Color(ColorCommand),
    /// Topcode matrix of a colored graph document.
    Topcode { file: PathBuf },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum LawArg {
    #[default]
    Index,
    LiteralOffset,
}

impl From<LawArg> for GroupLaw {
    fn from(l: LawArg) -> Self {
        match l {
            LawArg::Index => GroupLaw::Index,
            LawArg::LiteralOffset => GroupLaw::LiteralOffset,
        }
    }
}

#[derive(Args, Debug)]
struct LawOpt {
    #[arg(long, value_enum, default_value_t = LawArg::Index)]
    law: LawArg,
}

#[derive(Subcommand, Debug)]
enum GroupCommand {
    /// Shift every hyperedge by r modulo M.
    Shift {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long)]
        modulus: u32,
    },
    /// Index table for a fixed zero.
    Table {
        #[arg(long)]
        modulus: usize,
        #[arg(long, default_value_t = 1)]
        zero: usize,
        #[command(flatten)]
        law: LawOpt,
    },
    /// Every-zero axioms for the shift family seeded by the file.
    Check {
        file: PathBuf,
        #[arg(long)]
        modulus: u32,
        #[command(flatten)]
        law: LawOpt,
    },
}

#[derive(Subcommand, Debug)]
enum GenCommand {
    Strong {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        t: usize,
    },
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CountCommand {
    /// Spanning trees of K_n, K_{m,n} (--bipartite m) or a graph document.
    Trees {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        complete: bool,
        #[arg(long)]
        bipartite: Option<usize>,
        file: Option<PathBuf>,
    },
    /// Labelled forests on n vertices.
    Forests {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ColorKind {
    Graceful,
    OddGraceful,
    EdgeAntimagic,
    Harmonious,
    OddElegant,
    EdgeMagic,
    EdgeDifference,
    FelicitousDifference,
    GracefulDifference,
    SetOrdered,
    #[value(name = "6c")]
    SixC,
}

#[derive(Subcommand, Debug)]
enum ColorCommand {
    Verify {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: ColorKind,
        #[arg(long, default_value_t = 1)]
        k: i64,
        #[arg(long, default_value_t = 1)]
        d: i64,
        #[arg(long)]
        strong: bool,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(PathBuf, std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Step = std::result::Result<(bool, String), Failure>;

fn read(path: &PathBuf) -> std::result::Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Failure::Io(path.clone(), e))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Io(path.clone(), e))
}

fn load(path: &PathBuf) -> std::result::Result<(Hypergraph, Option<BTreeMap<String, Vertex>>), Failure> {
    let doc = HypergraphDocument::parse(&read(path)?)?;
    Ok((doc.to_hypergraph()?, doc.labels))
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn family_lists(h: &Hypergraph) -> Vec<Vec<Vertex>> {
    h.edges().iter().map(|e| e.members().to_vec()).collect()
}

fn count_json(kind: &str, n: &BigInt, formula: Option<&BigInt>) -> String {
    let mut s = String::from("{\n");
    let _ = writeln!(s, "  \"count\": {n},");
    if let Some(f) = formula {
        let _ = writeln!(s, "  \"formula\": {f},");
        let _ = writeln!(s, "  \"formula_agrees\": {},", f == n);
    }
    let _ = writeln!(s, "  \"grouped\": \"{}\",", group_digits(n));
    let _ = writeln!(s, "  \"kind\": \"{kind}\"");
    s.push_str("}\n");
    s
}

fn seed_value(flag: Option<u64>) -> std::result::Result<u64, Failure> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match std::env::var(SEED_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("{SEED_VAR}={v:?} is not an unsigned integer"))),
        Err(_) => Ok(0),
    }
}

fn kd_kind(k: ColorKind) -> Option<KdKind> {
    Some(match k {
        ColorKind::Graceful => KdKind::Graceful,
        ColorKind::OddGraceful => KdKind::OddGraceful,
        ColorKind::EdgeAntimagic => KdKind::EdgeAntimagic,
        ColorKind::Harmonious => KdKind::Harmonious,
        ColorKind::OddElegant => KdKind::OddElegant,
        ColorKind::EdgeMagic => KdKind::EdgeMagic,
        ColorKind::EdgeDifference => KdKind::EdgeDifference,
        ColorKind::FelicitousDifference => KdKind::FelicitousDifference,
        ColorKind::GracefulDifference => KdKind::GracefulDifference,
        ColorKind::SetOrdered | ColorKind::SixC => return None,
    })
}

fn execute(cmd: Command) -> Step {
    match cmd {
        Command::Verify { file, strict } => {
            let (h, _) = load(&file)?;
            let r = verify_3i(&h, strict);
            let pass = if strict {
                r.overall == Some(true)
            } else {
                r.independence.holds && r.integrity.holds
            };
            Ok((pass, pretty(&r)))
        }
        Command::Complement { file } => {
            let (h, labels) = load(&file)?;
            Ok((true, canonical_hypergraph_json(&complement_set(&h)?, labels.as_ref())))
        }
        Command::Reduce { file } => {
            let (h, labels) = load(&file)?;
            Ok((true, canonical_hypergraph_json(&graham_reduction(&h), labels.as_ref())))
        }
        Command::Canon { file } => {
            let (h, labels) = load(&file)?;
            Ok((true, canonical_hypergraph_json(&h, labels.as_ref())))
        }
        Command::Graph { file, out } => {
            let (h, _) = load(&file)?;
            let g = build_v_intersected(&h);
            let text = match out {
                GraphFormat::Dot => to_dot(&g),
                GraphFormat::Json => pretty(&GraphDocument::from_set_colored(&g)),
            };
            Ok((true, text))
        }
        Command::Metrics { file } => {
            let (h, _) = load(&file)?;
            let m = intersected_metrics(&h)?;
            let c = hyperedge_connectivity(&h)?;
            let chi = hypergraph_chromatics(&h);
            Ok((true, pretty(&json!({ "metrics": m, "connectivity": c, "chromatic": chi }))))
        }
        Command::Cycle { file } => {
            let (h, _) = load(&file)?;
            let c = find_proper_hamiltonian_cycle(&h)?;
            let found = c.is_some();
            Ok((found, pretty(&json!({ "found": found, "cycle": c }))))
        }
        Command::Group(g) => group(g),
        Command::Gen(GenCommand::Strong { m, t }) => {
            Ok((true, canonical_hypergraph_json(&strong_hyperedge_set(m, t)?, None)))
        }
        Command::Gen(GenCommand::Cyclic { n, k }) => {
            Ok((true, canonical_hypergraph_json(&cyclic_k_uniform(n, k)?, None)))
        }
        Command::Enum { ground, strict } => {
            let all = enumerate_3i(ground, strict)?;
            let lists: Vec<Vec<Vec<Vertex>>> = all.iter().map(family_lists).collect();
            Ok((true, pretty(&json!({ "ground": ground, "strict": strict, "count": lists.len(), "families": lists }))))
        }
        Command::Keys { ground, limit, seed } => {
            let seed = seed_value(seed)?;
            let pairs = key_matchings(ground, limit, seed)?;
            let lists: Vec<Value> = pairs
                .iter()
                .map(|(a, b)| json!({ "family": family_lists(a), "complement": family_lists(b) }))
                .collect();
            Ok((true, pretty(&json!({ "ground": ground, "seed": seed, "count": lists.len(), "pairs": lists }))))
        }
        Command::Count(CountCommand::Trees { n, complete, bipartite, file }) => {
            let (g, formula) = match (file, n, bipartite) {
                (Some(f), None, None) => (GraphDocument::parse(&read(&f)?)?.graph()?, None),
                (None, Some(n), Some(m)) => (
                    Graph::complete_bipartite(m, n),
                    Some(hypertopo::treeforest::bipartite_tree_formula(m as u32, n as u32)),
                ),
                (None, Some(n), None) => {
                    let _ = complete;
                    (Graph::complete(n), Some(hypertopo::treeforest::cayley(n as u32)))
                }
                _ => return Err(Failure::Usage("give --n [--complete | --bipartite M] or a graph file".into())),
            };
            let value = spanning_tree_count(&g)?;
            Ok((true, count_json("trees", &value, formula.as_ref())))
        }
        Command::Count(CountCommand::Forests { n }) => Ok((true, count_json("forests", &forest_count(n)?, None))),
        Command::Color(ColorCommand::Verify { file, kind, k, d, strong }) => {
            let c = GraphDocument::parse(&read(&file)?)?.to_coloring()?;
            match kind {
                ColorKind::SetOrdered => {
                    let r = verify_set_ordered_graceful(&c)?;
                    Ok((r.pass, pretty(&r)))
                }
                ColorKind::SixC => {
                    let r = verify_6c_labeling(&c)?;
                    let failing = r.failing_clauses();
                    Ok((r.pass, pretty(&json!({ "report": r, "failing_clauses": failing }))))
                }
                other => {
                    let params = KdParams::new(kd_kind(other).expect("kd kind"), k, d, strong)?;
                    let r = verify_kd_total_coloring(&c, params)?;
                    Ok((r.pass, pretty(&r)))
                }
            }
        }
        Command::Topcode { file } => {
            let c = GraphDocument::parse(&read(&file)?)?.to_coloring()?;
            let t = build_topcode_matrix(&c)?;
            Ok((true, pretty(&json!({ "rows": t.rows(), "columns": t.columns.len() }))))
        }
    }
}

fn group(cmd: GroupCommand) -> Step {
    match cmd {
        GroupCommand::Shift { file, r, modulus } => {
            let (h, labels) = load(&file)?;
            let shifted = h.with_edges(shift_set(h.edges(), r, modulus)?)?;
            Ok((true, canonical_hypergraph_json(&shifted, labels.as_ref())))
        }
        GroupCommand::Table { modulus, zero, law } => {
            let t = GroupTable::new(modulus, zero, law.law.into())?;
            let latin = t.is_latin();
            Ok((latin, pretty(&json!({ "table": t, "latin": latin }))))
        }
        GroupCommand::Check { file, modulus, law } => {
            let (h, _) = load(&file)?;
            let fam = generate_hypergraph_group(&h, modulus)?;
            let r = verify_every_zero(&fam, law.law.into())?;
            let members: Vec<Vec<Vec<Vertex>>> =
                fam.members().iter().map(|m| m.iter().map(|e| e.members().to_vec()).collect()).collect();
            Ok((r.pass, pretty(&json!({ "report": r, "members": members }))))
        }
    }
}

/// Runs one command line; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let step = match cli.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| execute(cli.command)),
            Err(e) => Err(Failure::Usage(format!("cannot start {j} workers: {e}"))),
        },
        None => execute(cli.command),
    };
    match step {
        Ok((pass, stdout)) => Outcome {
            code: if pass { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        },
        Err(f) => {
            let msg = match f {
                Failure::Usage(m) => m,
                Failure::Lib(e) => e.to_string(),
                Failure::Io(p, e) => format!("{}: {e}", p.display()),
            };
            Outcome {
                code: 2,
                stdout: String::new(),
                stderr: format!("error: {msg}\n"),
            }
        }
    }
}
