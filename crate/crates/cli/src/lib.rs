//! Command-line front end for the atomgraph toolkit.
//!
//! [`run`] parses arguments, dispatches to the library and writes a text or
//! JSON report. Exit status: 0 on success, 1 on a domain error (bad input,
//! failed verification), 2 on a usage error.

use std::io::Write;
use std::path::{Path, PathBuf};

use atomgraph::contextuality::{cabello18, kcbs_scenario, ks_check, VERDICT_LEVEL};
use atomgraph::exactla::{to_f64, Rational};
use atomgraph::extension::{equal_dim_extension, extend_contexts, realize_extension};
use atomgraph::graph::io::graph_to_json_value;
use atomgraph::graph::{
    context_counts, graph_dimension, graph_isomorphic, maximal_cliques, total_contexts, weighted_independence,
};
use atomgraph::orthorep::{construct_flior, verify_faithful, verify_linear_independence, OrthoRep};
use atomgraph::pba::{
    atom_graph, atoms, generate_pba, is_exclusive, maximal_contexts, pba_dimension, pba_isomorphic, pba_to_json_value,
    symbolic_from_atom_graph,
};
use atomgraph::states::{all_zero_one_states, extend_substate, find_state, quantum_state_eval_rays, zero_one_state};
use atomgraph::{catalog, Graph, PartialBooleanAlgebra, Result, WeightVector};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

mod input;

pub use input::{BuiltinAlgebra, BuiltinGraph};

#[derive(Parser, Debug)]
#[command(
    name = "atomgraph",
    version,
    about = "Atom graphs, partial Boolean algebras and KS contextuality"
)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Render rationals as floating point numbers.
    #[arg(long, global = true)]
    float: bool,
    /// Include wall-clock timings (makes output nondeterministic).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

/// A graph file (JSON or DIMACS) or a built-in graph.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph file, JSON or DIMACS.
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<BuiltinGraph>,
}

/// An algebra dump, a generator file, or a built-in generator set.
#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct AlgebraInput {
    /// Algebra dump or generator file (JSON).
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<BuiltinAlgebra>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Maximal cliques, contexts per vertex and c(G).
    Cliques(GraphInput),
    /// Maximum weight of an independent set.
    Alpha {
        #[command(flatten)]
        graph: GraphInput,
        /// `ones`, `cg` (contexts per vertex) or a JSON file of weights.
        #[arg(long, default_value = "ones")]
        weights: String,
    },
    /// Kochen-Specker contextuality certificate of a scenario graph.
    KsCheck(GraphInput),
    /// Faithful linearly independent orthogonal co-representation.
    Orthorep {
        #[command(flatten)]
        graph: GraphInput,
        /// Check faithfulness and linear independence exactly.
        #[arg(long)]
        verify: bool,
        /// Use this representation (JSON) instead of constructing one.
        #[arg(long)]
        rep: Option<PathBuf>,
    },
    /// Add one vertex per maximal clique.
    Extend {
        #[command(flatten)]
        graph: GraphInput,
        /// Skip maximum-size cliques.
        #[arg(long)]
        equal_dim: bool,
    },
    /// Realise the context extension as the atom graph of a projector algebra.
    Realize(GraphInput),
    /// Partial Boolean algebras.
    #[command(subcommand)]
    Pba(PbaCommand),
    /// States on graphs.
    #[command(subcommand)]
    State(StateCommand),
    /// Built-in scenarios.
    Builtin {
        #[arg(value_enum)]
        name: BuiltinReport,
    },
}

#[derive(Subcommand, Debug)]
enum PbaCommand {
    /// Close a generator set under the partial operations.
    Generate(AlgebraInput),
    /// Atoms of an algebra.
    Atoms(AlgebraInput),
    /// Atom graph of an algebra.
    AtomGraph(AlgebraInput),
    /// Rebuild the algebra an atom graph determines.
    FromGraph(GraphInput),
}

#[derive(Subcommand, Debug)]
enum StateCommand {
    /// Some state, by exact linear programming.
    Find(GraphInput),
    /// A 0-1 state, by exact cover search.
    ZeroOne {
        #[command(flatten)]
        graph: GraphInput,
        /// List every 0-1 state.
        #[arg(long)]
        all: bool,
    },
    /// Extend a substate to a state on the context extension.
    Extend {
        #[command(flatten)]
        graph: GraphInput,
        /// JSON array or label map of exact values.
        #[arg(long)]
        substate: PathBuf,
    },
    /// Expectation values tr(ρP) of rank-one projectors.
    EvalQuantum(QuantumInput),
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct QuantumInput {
    /// JSON with "rays" and "rho" or "psi".
    input: Option<PathBuf>,
    #[arg(long, value_enum)]
    builtin: Option<QuantumBuiltin>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum QuantumBuiltin {
    /// Pentagon umbrella rays with the handle state.
    Kcbs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BuiltinReport {
    Kcbs,
    Cabello18,
    Fig3Bowtie,
}

#[derive(Clone, Copy)]
struct Style {
    float: bool,
    timing: bool,
}

impl Style {
    fn num(self, x: &Rational) -> Value {
        if self.float {
            return json!(to_f64(x));
        }
        if x.is_integer() {
            if let Some(i) = x.to_integer().to_i64() {
                return json!(i);
            }
        }
        json!(atomgraph::exactla::format_rational(x))
    }

    fn text(self, x: &Rational) -> String {
        if self.float {
            sig17(to_f64(x))
        } else {
            x.to_string()
        }
    }
}

/// Seventeen significant digits.
fn sig17(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..=15).contains(&e) {
        let prec = (16 - e).max(0) as usize;
        format!("{x:.prec$}")
    } else {
        format!("{x:.16e}")
    }
}

struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report { text, json, ok: true }
    }

    /// For commands whose output is a graph: JSON in both modes.
    fn graph(g: &Graph) -> Self {
        let v = graph_to_json_value(g);
        Report::new(pretty(&v), v)
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serialisable")
}

fn set(g: &Graph, vs: &[usize]) -> String {
    let names: Vec<&str> = vs.iter().map(|&v| g.label(v)).collect();
    format!("{{{}}}", names.join(", "))
}

fn names(g: &Graph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v).to_string()).collect()
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn graph_of(input: &GraphInput) -> Result<Graph> {
    input::load_graph(input.input.as_deref(), input.builtin)
}

fn algebra_of(input: &AlgebraInput) -> Result<PartialBooleanAlgebra> {
    input::load_algebra(input.input.as_deref(), input.builtin)
}

/// Runs the command line `args` (including the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let informational = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let sink: &mut dyn Write = if informational { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return if informational { 0 } else { 2 };
        }
    };
    let style = Style {
        float: cli.float,
        timing: cli.timing,
    };
    match dispatch(&cli.command, style) {
        Ok(report) => {
            let body = if cli.json { pretty(&report.json) } else { report.text };
            let _ = writeln!(out, "{}", body.trim_end());
            if report.ok {
                0
            } else {
                let _ = writeln!(err, "error: verification failed");
                1
            }
        }
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn dispatch(cmd: &Command, style: Style) -> Result<Report> {
    match cmd {
        Command::Cliques(g) => cliques(&graph_of(g)?),
        Command::Alpha { graph, weights } => alpha(&graph_of(graph)?, weights, style),
        Command::KsCheck(g) => ks(&graph_of(g)?, style),
        Command::Orthorep { graph, verify, rep } => orthorep(&graph_of(graph)?, *verify, rep.as_deref(), style),
        Command::Extend { graph, equal_dim } => {
            let g = graph_of(graph)?;
            Ok(Report::graph(&if *equal_dim {
                equal_dim_extension(&g)
            } else {
                extend_contexts(&g).graph
            }))
        }
        Command::Realize(g) => realize(&graph_of(g)?, style),
        Command::Pba(PbaCommand::Generate(a)) => algebra_report(&algebra_of(a)?, style),
        Command::Pba(PbaCommand::Atoms(a)) => {
            let b = algebra_of(a)?;
            let labels: Vec<&str> = atoms(&b).into_iter().map(|x| b.label(x)).collect();
            let json = json!({ "atoms": labels, "dimension": pba_dimension(&b) });
            Ok(Report::new(labels.join("\n"), json))
        }
        Command::Pba(PbaCommand::AtomGraph(a)) => Ok(Report::graph(&atom_graph(&algebra_of(a)?))),
        Command::Pba(PbaCommand::FromGraph(g)) => algebra_report(&symbolic_from_atom_graph(&graph_of(g)?)?, style),
        Command::State(StateCommand::Find(g)) => state_find(&graph_of(g)?, style),
        Command::State(StateCommand::ZeroOne { graph, all }) => state_zero_one(&graph_of(graph)?, *all),
        Command::State(StateCommand::Extend { graph, substate }) => state_extend(&graph_of(graph)?, substate, style),
        Command::State(StateCommand::EvalQuantum(q)) => eval_quantum(q),
        Command::Builtin { name } => match name {
            BuiltinReport::Kcbs => builtin_kcbs(),
            BuiltinReport::Cabello18 => builtin_cabello(style),
            BuiltinReport::Fig3Bowtie => builtin_bowtie(style),
        },
    }
}

fn cliques(g: &Graph) -> Result<Report> {
    let cl = maximal_cliques(g);
    let counts = context_counts(g);
    let dim = graph_dimension(g)?;
    let mut text = format!("{} maximal cliques, dimension {dim}\n", cl.len());
    for c in &cl {
        text.push_str(&set(g, c));
        text.push('\n');
    }
    let per: Vec<String> = (0..g.len()).map(|v| format!("{}:{}", g.label(v), counts[v])).collect();
    text.push_str(&format!("contexts per vertex: {}\n", per.join(" ")));
    let count_map: Map<String, Value> = (0..g.len())
        .map(|v| (g.label(v).to_string(), json!(counts[v])))
        .collect();
    let json = json!({
        "n": g.len(),
        "m": g.edge_count(),
        "cliques": cl.iter().map(|c| names(g, c)).collect::<Vec<_>>(),
        "counts": count_map,
        "c_total": total_contexts(g),
        "dimension": dim,
    });
    Ok(Report::new(text, json))
}

fn alpha(g: &Graph, weights: &str, style: Style) -> Result<Report> {
    let (kind, w) = match weights {
        "ones" => ("ones", WeightVector::ones(g.len())),
        "cg" => ("cg", WeightVector::from_counts(&context_counts(g))),
        path => (
            "file",
            WeightVector::new(input::vertex_values(g, &input::read_json(Path::new(path))?)?)?,
        ),
    };
    let a = weighted_independence(g, &w)?;
    let text = format!("{}\nwitness: {}\n", style.text(&a.value), set(g, &a.witness));
    let json = json!({ "weights": kind, "value": style.num(&a.value), "witness": names(g, &a.witness) });
    Ok(Report::new(text, json))
}

fn ks(g: &Graph, style: Style) -> Result<Report> {
    let r = ks_check(g)?;
    let mut json = r.to_json_value(style.timing);
    json["alpha_cg"]["value"] = style.num(&r.alpha_cg.value);
    let zero_one = match &r.zero_one.witness {
        Some(w) => format!("{} ({} search nodes)", set(g, w), r.zero_one.nodes),
        None => format!("none ({} search nodes, exhausted)", r.zero_one.nodes),
    };
    let s = r.statements;
    let mut text = format!(
        "vertices {}, edges {}\nc(G) = {}\nalpha(G; c_G) = {}, witness {}\n0-1 state: {zero_one}\n\
         verdict: {} ({VERDICT_LEVEL} level)\nstatements: {} {} {} {}\n",
        g.len(),
        g.edge_count(),
        r.c_total,
        style.text(&r.alpha_cg.value),
        set(g, &r.alpha_cg.witness),
        r.verdict,
        s[0],
        s[1],
        s[2],
        s[3],
    );
    if style.timing {
        text.push_str(&format!("elapsed: {:.3} ms\n", r.elapsed.as_secs_f64() * 1e3));
    }
    Ok(Report::new(text, json))
}

fn orthorep(g: &Graph, verify: bool, rep: Option<&Path>, style: Style) -> Result<Report> {
    let rep = match rep {
        Some(p) => OrthoRep::from_json_value(g.clone(), &input::read_json(p)?)?,
        None => construct_flior(g)?,
    };
    let mut json = if style.float {
        rep.to_float_json_value()
    } else {
        rep.to_json_value()
    };
    let mut text = format!("dimension {}\n", rep.dimension());
    if style.float {
        for (v, x) in rep.normalized_f64().iter().enumerate() {
            let xs: Vec<String> = x.iter().map(|&c| sig17(c)).collect();
            text.push_str(&format!("{}: ({})\n", g.label(v), xs.join(", ")));
        }
    } else {
        for v in 0..g.len() {
            let xs: Vec<String> = rep.vector(v).iter().map(|c| c.to_string()).collect();
            text.push_str(&format!("{}: ({})\n", g.label(v), xs.join(", ")));
        }
    }
    let mut ok = true;
    if verify {
        let faithful = verify_faithful(g, &rep);
        let independent = verify_linear_independence(&rep);
        ok = faithful && independent;
        json["faithful"] = json!(faithful);
        json["linearly_independent"] = json!(independent);
        text.push_str(&format!(
            "faithful: {}\nlinearly independent: {}\n",
            yes(faithful),
            yes(independent)
        ));
    }
    Ok(Report { text, json, ok })
}

fn realize(g: &Graph, style: Style) -> Result<Report> {
    let r = realize_extension(g)?;
    let ext = r.extended();
    let atom_list = atoms(&r.algebra);
    let mut text = format!(
        "base: {} vertices, {} edges\nextension: {} vertices, {} edges\ndimension {}\n\
         algebra: {} elements, {} atoms\natom -> extension vertex\n",
        g.len(),
        g.edge_count(),
        ext.len(),
        ext.edge_count(),
        r.rep.dimension(),
        r.algebra.len(),
        atom_list.len(),
    );
    for (&a, &v) in atom_list.iter().zip(&r.iso) {
        text.push_str(&format!("  {} -> {}\n", r.algebra.label(a), ext.label(v)));
    }
    Ok(Report::new(text, r.to_json_value(style.float)))
}

fn algebra_report(b: &PartialBooleanAlgebra, style: Style) -> Result<Report> {
    let atom_list = atoms(b);
    let exclusive = is_exclusive(b);
    let mut text = format!(
        "{} elements, {} atoms, exclusive: {}\nelements: {}\natoms: {}\n",
        b.len(),
        atom_list.len(),
        yes(exclusive),
        (0..b.len()).map(|i| b.label(i)).collect::<Vec<_>>().join(", "),
        atom_list.iter().map(|&a| b.label(a)).collect::<Vec<_>>().join(", "),
    );
    if exclusive {
        for (k, c) in maximal_contexts(b)?.iter().enumerate() {
            let labels: Vec<&str> = c.atoms.iter().map(|&a| b.label(a)).collect();
            text.push_str(&format!("context {k}: {{{}}}\n", labels.join(", ")));
        }
    }
    Ok(Report::new(text, pba_to_json_value(b, style.float)))
}

fn value_map(g: &Graph, p: &[Rational], style: Style) -> (String, Value) {
    let mut text = String::new();
    let mut map = Map::new();
    for (v, x) in p.iter().enumerate() {
        text.push_str(&format!("{} = {}\n", g.label(v), style.text(x)));
        map.insert(g.label(v).to_string(), style.num(x));
    }
    (text, Value::Object(map))
}

fn state_find(g: &Graph, style: Style) -> Result<Report> {
    Ok(match find_state(g)? {
        Some(p) => {
            let (text, map) = value_map(g, &p, style);
            Report::new(text, json!({ "state": map }))
        }
        None => Report::new("no state\n".into(), json!({ "state": null })),
    })
}

fn state_zero_one(g: &Graph, all: bool) -> Result<Report> {
    let s = zero_one_state(g);
    let mut text = match &s.witness {
        Some(w) => format!("0-1 state: {}\n", set(g, w)),
        None => "no 0-1 state\n".to_string(),
    };
    text.push_str(&format!("search nodes: {}\n", s.nodes));
    let mut json = json!({
        "exists": s.exists(),
        "witness": s.witness.as_ref().map(|w| names(g, w)),
        "search_nodes": s.nodes,
    });
    if all {
        let every = all_zero_one_states(g);
        text.push_str(&format!("{} 0-1 states\n", every.len()));
        for w in &every {
            text.push_str(&set(g, w));
            text.push('\n');
        }
        json["all"] = json!(every.iter().map(|w| names(g, w)).collect::<Vec<_>>());
    }
    Ok(Report::new(text, json))
}

fn state_extend(g: &Graph, substate: &Path, style: Style) -> Result<Report> {
    let q = input::vertex_values(g, &input::read_json(substate)?)?;
    let p = extend_substate(g, &q)?;
    let ext = extend_contexts(g).graph;
    let (text, map) = value_map(&ext, &p, style);
    Ok(Report::new(
        text,
        json!({ "graph": graph_to_json_value(&ext), "state": map }),
    ))
}

fn eval_quantum(q: &QuantumInput) -> Result<Report> {
    let setup = match (&q.input, q.builtin) {
        (_, Some(QuantumBuiltin::Kcbs)) => input::kcbs_quantum()?,
        (Some(p), None) => input::quantum_from_json(&input::read_json(p)?)?,
        (None, None) => unreachable!("clap requires an input"),
    };
    let probs = quantum_state_eval_rays(&setup.rays, &setup.rho)?;
    let total: f64 = probs.iter().sum();
    let mut text = String::new();
    let mut map = Map::new();
    for (l, p) in setup.labels.iter().zip(&probs) {
        text.push_str(&format!("{l} = {}\n", sig17(*p)));
        map.insert(l.clone(), json!(p));
    }
    text.push_str(&format!("total = {}\n", sig17(total)));
    Ok(Report::new(text, json!({ "probabilities": map, "total": total })))
}

fn builtin_kcbs() -> Result<Report> {
    let s = kcbs_scenario()?;
    let text = format!(
        "classical bound alpha(C5) = {}\nquantum value = {}\nsqrt(5) = {}\nviolation: {}\n\
         orthogonality residual = {:e}\ncontext extension: {} vertices, {} maximal cliques\n",
        s.classical_bound,
        sig17(s.quantum_value),
        sig17(5f64.sqrt()),
        yes(s.violation),
        s.orthogonality_residual,
        s.extended.len(),
        maximal_cliques(&s.extended).len(),
    );
    Ok(Report::new(text, s.to_json_value()))
}

fn builtin_cabello(style: Style) -> Result<Report> {
    let c = cabello18()?;
    let r = &c.report;
    let mut json = c.to_json_value(style.timing);
    json["report"]["alpha_cg"]["value"] = style.num(&r.alpha_cg.value);
    json["inequality"] = c.inequality.to_json_value(&c.graph, style.float);
    let text = format!(
        "rays {}, bases {}, orthogonal pairs {}\nevery ray in an even number of bases, odd number of bases: {}\n\
         c(G) = {}\nalpha(G; c_G) = {}\ngap = {}\n0-1 state: {}\nverdict: {} ({VERDICT_LEVEL} level)\n",
        c.rays.len(),
        c.bases.len(),
        c.graph.edge_count(),
        yes(c.parity_obstruction()),
        r.c_total,
        style.text(&r.alpha_cg.value),
        style.text(&c.inequality.gap),
        match &r.zero_one.witness {
            Some(w) => set(&c.graph, w),
            None => format!("none ({} search nodes, exhausted)", r.zero_one.nodes),
        },
        r.verdict,
    );
    Ok(Report::new(text, json))
}

fn builtin_bowtie(style: Style) -> Result<Report> {
    let b = generate_pba(&catalog::bowtie_projectors())?;
    let ag = atom_graph(&b);
    let iso = graph_isomorphic(&ag, &catalog::bowtie()).is_some();
    let symbolic = symbolic_from_atom_graph(&ag)?;
    let same = pba_isomorphic(&b, &symbolic)?;
    let atom_labels: Vec<&str> = atoms(&b).into_iter().map(|a| b.label(a)).collect();
    let text = format!(
        "{} elements, {} atoms: {}\natom graph: {} vertices, {} edges, isomorphic to the bowtie: {}\n\
         rebuilt from the atom graph: {} elements, isomorphic: {}\n",
        b.len(),
        atom_labels.len(),
        atom_labels.join(", "),
        ag.len(),
        ag.edge_count(),
        yes(iso),
        symbolic.len(),
        yes(same),
    );
    let json = json!({
        "algebra": pba_to_json_value(&b, style.float),
        "atoms": atom_labels,
        "atom_graph": graph_to_json_value(&ag),
        "atom_graph_is_bowtie": iso,
        "symbolic_isomorphic": same,
    });
    Ok(Report {
        text,
        json,
        ok: iso && same,
    })
}
