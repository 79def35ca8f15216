use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use setcolor::discharging::{self, initial_charges, HalfInt};
use setcolor::engine::{is_valid_coloring, ListAssignment};
use setcolor::format::{self, Document};
use setcolor::gadgets::{self, Shape};
use setcolor::gen::random_lists;
use setcolor::graph::{PlaneGraph, PrecoloredClique, VertexId};
use setcolor::reducer::{self, default_clique, find_all, find_configuration, Kind, ReduceError};

/// Random lists draw this many colors per vertex...
const LIST_SIZE: usize = 11;
/// ...out of 1..=UNIVERSE.
const UNIVERSE: u32 = 33;

#[derive(Parser)]
#[command(name = "setcolor", version, about = "(L:3)-coloring of plane graphs without 4- and 5-cycles")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Color a graph with 3 colors per vertex from lists of 11.
    Solve {
        graph: PathBuf,
        /// List file; without one, lists come from the graph file or are drawn at random.
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check a coloring against the graph, its lists and demands.
    Verify { graph: PathBuf, phi: PathBuf },
    /// Run the discharging rules and print final charges.
    Discharge {
        graph: PathBuf,
        /// Also print every transfer.
        #[arg(long)]
        ledger: bool,
    },
    /// Sweep a gadget construction and judge every output.
    CheckLemma {
        /// Gadget name, e.g. triangle, p5, c6-t3, claw4-edge.
        name: String,
        #[arg(long, conflicts_with = "random")]
        exhaustive: bool,
        /// Number of random instances.
        #[arg(long)]
        random: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Report a reducible configuration.
    FindReducible {
        graph: PathBuf,
        /// List every configuration of every kind.
        #[arg(long)]
        all: bool,
    },
    /// Extract the largest color class of a coloring.
    IndependenceRatio {
        graph: PathBuf,
        /// Use this coloring instead of solving.
        #[arg(long)]
        phi: Option<PathBuf>,
        #[arg(long, conflicts_with = "phi")]
        lists: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Final charges with every negative entry explained.
    Audit { graph: PathBuf },
}

/// Bad input; exit 2.
struct InputError(String);

type Outcome = Result<(String, bool), InputError>;

fn input<E: std::fmt::Display>(path: &Path) -> impl Fn(E) -> InputError + '_ {
    move |e| InputError(format!("{}: {e}", path.display()))
}

fn read_doc(path: &Path) -> Result<Document, InputError> {
    let text = std::fs::read_to_string(path).map_err(input(path))?;
    Document::parse(&text).map_err(input(path))
}

fn read_graph(path: &Path) -> Result<(Document, PlaneGraph), InputError> {
    let doc = read_doc(path)?;
    let g = doc.plane_graph().map_err(input(path))?;
    if let Some(v) = doc.out_of_range(g.vertex_count()) {
        return Err(InputError(format!("{}: vertex {v} is not in the graph", path.display())));
    }
    Ok((doc, g))
}

/// Precolored vertices declared in the file, or none.
fn declared_z(doc: &Document, g: &PlaneGraph, path: &Path) -> Result<Vec<VertexId>, InputError> {
    let z = doc.z.clone().unwrap_or_default();
    if let Some(&v) = z.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(InputError(format!("{}: Z vertex {v} is not in the graph", path.display())));
    }
    Ok(z)
}

/// Lists and precolored clique for solving: the list file overrides the
/// graph file, and random lists fill in when neither has any.
fn instance(
    gdoc: &Document,
    g: &PlaneGraph,
    gpath: &Path,
    lists: Option<&Path>,
    seed: u64,
    out: &mut String,
) -> Result<(ListAssignment, PrecoloredClique), InputError> {
    let n = g.vertex_count();
    let mut doc = gdoc.clone();
    let mut source = gpath;
    if let Some(p) = lists {
        let ldoc = read_doc(p)?;
        if let Some(v) = ldoc.out_of_range(n) {
            return Err(InputError(format!("{}: vertex {v} is not in the graph", p.display())));
        }
        doc.lists.extend(ldoc.lists);
        if ldoc.z.is_some() {
            doc.z = ldoc.z;
            doc.z_colors = ldoc.z_colors;
        }
        source = p;
    }
    let l = if doc.lists.is_empty() && lists.is_none() {
        let _ = writeln!(out, "# random lists: {LIST_SIZE} of 1..{UNIVERSE}, seed={seed}");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_lists(n, LIST_SIZE, UNIVERSE, &mut rng)
    } else {
        doc.list_assignment(n).map_err(input(source))?
    };
    let z = match doc.clique(g).map_err(input(source))? {
        Some(z) => z,
        None => default_clique(g, &l).map_err(|e| InputError(e.to_string()))?,
    };
    Ok((l, z))
}

fn solve(graph: &Path, lists: Option<&Path>, seed: u64) -> Outcome {
    let (doc, g) = read_graph(graph)?;
    let mut out = String::new();
    let (l, z) = instance(&doc, &g, graph, lists, seed, &mut out)?;
    out.push_str(&format::write_clique(&z));
    match reducer::reduce_and_extend(&g, &l, &z) {
        Ok((phi, stats)) => {
            let alpha = reducer::independence_ratio(&g, &phi).map_err(InputError)?;
            out.push_str(&format::write_coloring(&phi));
            let kinds: Vec<String> = stats.reductions.iter().map(|(k, c)| format!("{k}:{c}")).collect();
            let _ = writeln!(
                out,
                "# reductions={} [{}] base_cases={} splits={}/{}/{} depth={}",
                stats.total_reductions(),
                kinds.join(" "),
                stats.base_cases,
                stats.component_splits,
                stats.cut_vertex_splits,
                stats.triangle_splits,
                stats.max_depth
            );
            let _ = writeln!(out, "RESULT status=ok n={} alpha={}", g.vertex_count(), alpha.vertices.len());
            Ok((out, true))
        }
        Err(ReduceError::InvalidInput(msg)) => Err(InputError(msg)),
        Err(ReduceError::Failure(report)) => {
            let _ = write!(out, "{report}");
            let _ = writeln!(out, "RESULT status=fail n={} alpha=0", g.vertex_count());
            Ok((out, false))
        }
    }
}

fn verify(graph: &Path, phi: &Path) -> Outcome {
    let (gdoc, g) = read_graph(graph)?;
    let pdoc = read_doc(phi)?;
    let n = g.vertex_count();
    if let Some(v) = pdoc.out_of_range(n) {
        return Err(InputError(format!("{}: vertex {v} is not in the graph", phi.display())));
    }
    let coloring = pdoc.coloring(n).map_err(input(phi))?;
    let mut doc = gdoc;
    doc.lists.extend(pdoc.lists);
    doc.demands.extend(pdoc.demands);
    // without lists, any colors are allowed
    let l = if doc.lists.is_empty() && doc.z_colors.is_empty() {
        ListAssignment::new(coloring.iter().copied().collect())
    } else {
        doc.list_assignment(n).map_err(input(graph))?
    };
    let f = doc.demand_function(n);
    match is_valid_coloring(g.graph(), &l, &f, &coloring) {
        Ok(()) => Ok((format!("VALID\nRESULT status=ok n={n}\n"), true)),
        Err(v) => Ok((format!("INVALID {v}\nRESULT status=fail n={n}\n"), false)),
    }
}

fn discharge(graph: &Path, ledger: bool) -> Outcome {
    let (doc, g) = read_graph(graph)?;
    let z = declared_z(&doc, &g, graph)?;
    let start = initial_charges(&g).map_err(input(graph))?;
    let s = discharging::apply_rules(&g, &z).map_err(input(graph))?;
    let mut out = String::new();
    if ledger {
        for t in &s.transfers {
            let _ = writeln!(out, "{t}");
        }
    }
    let failed = s.identity_failures().count();
    let ok = start.total() == HalfInt::from_int(-12) && s.total() == start.total() && failed == 0;
    let status = if ok { "ok" } else { "fail" };
    let _ = writeln!(
        out,
        "RESULT status={status} n={} faces={} initial={} final={} identity_failures={failed}",
        g.vertex_count(),
        g.faces().len(),
        start.total(),
        s.total()
    );
    let mut rows = vec![["node".to_string(), "size".into(), "initial".into(), "final".into()]];
    for v in 0..g.vertex_count() {
        let tag = if z.contains(&v) { format!("v{v}*") } else { format!("v{v}") };
        rows.push([tag, g.degree(v).to_string(), start.vertex_charge[v].to_string(), s.vertex_charge[v].to_string()]);
    }
    for f in g.faces() {
        rows.push([format!("f{}", f.id), f.len().to_string(), start.face_charge[f.id].to_string(), s.face_charge[f.id].to_string()]);
    }
    out.push_str(&table(&rows));
    let _ = writeln!(out, "TOTAL {}", s.total());
    Ok((out, ok))
}

fn table(rows: &[[String; 4]]) -> String {
    let mut width = [0; 4];
    for r in rows {
        for (w, cell) in width.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "{:<w0$}  {:>w1$}  {:>w2$}  {:>w3$}", r[0], r[1], r[2], r[3], w0 = width[0], w1 = width[1], w2 = width[2], w3 = width[3]);
    }
    out
}

fn check_lemma(name: &str, exhaustive: bool, random: Option<u64>, seed: u64) -> Outcome {
    let Some(shape) = Shape::from_name(name) else {
        let names: Vec<String> = Shape::all().iter().map(Shape::name).collect();
        return Err(InputError(format!("unknown gadget `{name}`; one of {}", names.join(", "))));
    };
    let small = shape.names().len() <= 4;
    let report = match (exhaustive, random) {
        (true, _) if !small => return Err(InputError(format!("{name} has more than 4 vertices; use --random"))),
        (true, _) => gadgets::exhaustive(shape),
        (false, Some(n)) => gadgets::random(shape, n, seed),
        (false, None) if small => gadgets::exhaustive(shape),
        (false, None) => gadgets::random(shape, 10_000, seed),
    };
    let mode = if exhaustive || (random.is_none() && small) { "exhaustive".to_string() } else { format!("random seed={seed}") };
    let status = if report.passed() { "ok" } else { "fail" };
    let mut out = format!(
        "RESULT status={status} lemma={name} mode={mode} instances={} colored={} rejected={} violations={}\n",
        report.instances, report.colored, report.rejected, report.violations
    );
    if let Some(c) = &report.first_counterexample {
        out.push_str(c);
    }
    Ok((out, report.passed()))
}

fn find_reducible(graph: &Path, all: bool) -> Outcome {
    let (doc, g) = read_graph(graph)?;
    let z = match doc.z {
        Some(_) => declared_z(&doc, &g, graph)?,
        None => vec![0],
    };
    let mut out = String::new();
    let found: Vec<_> = if all {
        Kind::ALL.iter().flat_map(|&k| find_all(&g, &z, k)).collect()
    } else {
        find_configuration(&g, &z).into_iter().collect()
    };
    for c in &found {
        let _ = writeln!(out, "CONFIG {c}");
    }
    let ok = !found.is_empty();
    let first = found.first().map_or("none".to_string(), |c| c.kind.to_string());
    let _ = writeln!(out, "RESULT status={} n={} found={} first={first}", if ok { "ok" } else { "fail" }, g.vertex_count(), found.len());
    Ok((out, ok))
}

fn independence(graph: &Path, phi: Option<&Path>, lists: Option<&Path>, seed: u64) -> Outcome {
    let (doc, g) = read_graph(graph)?;
    let n = g.vertex_count();
    let mut out = String::new();
    let coloring = match phi {
        Some(p) => read_doc(p)?.coloring(n).map_err(input(p))?,
        None => {
            let (l, z) = instance(&doc, &g, graph, lists, seed, &mut out)?;
            match reducer::reduce_and_extend(&g, &l, &z) {
                Ok((c, _)) => c,
                Err(ReduceError::InvalidInput(msg)) => return Err(InputError(msg)),
                Err(ReduceError::Failure(report)) => {
                    let _ = write!(out, "{report}");
                    let _ = writeln!(out, "RESULT status=fail n={n} alpha=0");
                    return Ok((out, false));
                }
            }
        }
    };
    let set = match reducer::independence_ratio(&g, &coloring) {
        Ok(s) => s,
        Err(msg) => {
            let _ = writeln!(out, "INVALID {msg}\nRESULT status=fail n={n} alpha=0");
            return Ok((out, false));
        }
    };
    let ids: Vec<String> = set.vertices.iter().map(|v| v.to_string()).collect();
    let _ = writeln!(out, "I: {}", ids.join(" "));
    let _ = writeln!(out, "# color={} ratio={:.4} bound=3/11", set.color, set.ratio());
    let _ = writeln!(out, "RESULT status=ok n={n} alpha={}", set.vertices.len());
    Ok((out, true))
}

fn audit(graph: &Path) -> Outcome {
    let (doc, g) = read_graph(graph)?;
    let z = declared_z(&doc, &g, graph)?;
    let a = discharging::audit(&g, &z).map_err(input(graph))?;
    let failed = a.state.identity_failures().count();
    // negative charges are expected outside minimal counterexamples, so they
    // are reported but do not fail the audit
    let ok = a.conserved() && a.precolored_mismatches.is_empty() && failed == 0;
    let mut out = a.render(&g);
    let _ = writeln!(
        out,
        "RESULT status={} n={} negative_vertices={} negative_faces={} precolored_mismatches={} identity_failures={failed}",
        if ok { "ok" } else { "fail" },
        g.vertex_count(),
        a.negative_vertices.len(),
        a.negative_faces.len(),
        a.precolored_mismatches.len()
    );
    Ok((out, ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.verb {
        Verb::Solve { graph, lists, seed } => solve(graph, lists.as_deref(), *seed),
        Verb::Verify { graph, phi } => verify(graph, phi),
        Verb::Discharge { graph, ledger } => discharge(graph, *ledger),
        Verb::CheckLemma { name, exhaustive, random, seed } => check_lemma(name, *exhaustive, *random, *seed),
        Verb::FindReducible { graph, all } => find_reducible(graph, *all),
        Verb::IndependenceRatio { graph, phi, lists, seed } => independence(graph, phi.as_deref(), lists.as_deref(), *seed),
        Verb::Audit { graph } => audit(graph),
    };
    match outcome {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
