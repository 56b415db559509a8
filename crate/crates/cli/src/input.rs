//! Reading graphs, value lists, generator sets and quantum setups.

use std::path::Path;

use atomgraph::catalog;
use atomgraph::contextuality::cabello18;
use atomgraph::exactla::{parse_rational, projector_onto, Rational};
use atomgraph::extension::context_extension;
use atomgraph::graph::io::parse_graph;
use atomgraph::pba::{generate_pba, pba_from_json_value};
use atomgraph::{Error, Graph, PartialBooleanAlgebra, Projector, Result};
use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuiltinGraph {
    /// The pentagon C5, vertices "0".."4".
    Kcbs,
    /// Context extension of the pentagon (10 vertices, five triangles).
    KcbsExtended,
    /// Two triangles sharing the hub "c".
    Bowtie,
    /// Orthogonality graph of the 18-ray set in dimension 4.
    Cabello18,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BuiltinAlgebra {
    /// Projectors c, a1, b1, a2, b2 in dimension 3 (atom graph is the bowtie).
    Fig3Bowtie,
    /// Two non-commuting rank-one projectors on a qubit.
    Qubit,
}

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = read_text(path)?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn builtin_graph(b: BuiltinGraph) -> Result<Graph> {
    Ok(match b {
        BuiltinGraph::Kcbs => catalog::pentagon(),
        BuiltinGraph::KcbsExtended => context_extension(&catalog::pentagon()),
        BuiltinGraph::Bowtie => catalog::bowtie(),
        BuiltinGraph::Cabello18 => cabello18()?.graph,
    })
}

pub fn load_graph(path: Option<&Path>, builtin: Option<BuiltinGraph>) -> Result<Graph> {
    match (path, builtin) {
        (_, Some(b)) => builtin_graph(b),
        (Some(p), None) => parse_graph(&read_text(p)?),
        (None, None) => Err(Error::Parse("no input given".into())),
    }
}

fn scalar(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().expect("checked").into())),
        other => Err(Error::Parse(format!(
            "expected an integer or \"p/q\" string, got {other}"
        ))),
    }
}

fn float(v: &Value) -> Result<f64> {
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| Error::Parse(format!("bad number {n}"))),
        Value::String(s) => Ok(atomgraph::exactla::to_f64(&parse_rational(s)?)),
        other => Err(Error::Parse(format!("expected a number, got {other}"))),
    }
}

/// One exact value per vertex: either an array in vertex order or an object
/// keyed by vertex label covering every vertex.
pub fn vertex_values(g: &Graph, v: &Value) -> Result<Vec<Rational>> {
    match v {
        Value::Array(items) => {
            if items.len() != g.len() {
                return Err(Error::DimensionMismatch {
                    expected: g.len(),
                    found: items.len(),
                });
            }
            items.iter().map(scalar).collect()
        }
        Value::Object(map) => {
            if let Some(k) = map.keys().find(|k| g.index_of(k).is_none()) {
                return Err(Error::Parse(format!("unknown vertex {k:?}")));
            }
            g.labels()
                .iter()
                .map(|l| {
                    map.get(l)
                        .ok_or_else(|| Error::Parse(format!("no value for vertex {l:?}")))
                        .and_then(scalar)
                })
                .collect()
        }
        other => Err(Error::Parse(format!(
            "values must be an array or an object, got {other}"
        ))),
    }
}

fn vector(v: &Value) -> Result<Vec<Rational>> {
    v.as_array()
        .ok_or_else(|| Error::Parse(format!("vector must be an array, got {v}")))?
        .iter()
        .map(scalar)
        .collect()
}

/// `{"dimension": d, "generators": {label: [vector, ...]}}`; each generator
/// is the projector onto the span of its vectors. `dimension` may be
/// omitted when some generator lists a vector.
pub fn generators_from_json(v: &Value) -> Result<Vec<(String, Projector)>> {
    let map = v
        .get("generators")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("generator file needs a \"generators\" object".into()))?;
    let spans: Vec<(String, Vec<Vec<Rational>>)> = map
        .iter()
        .map(|(label, span)| {
            let vectors = span
                .as_array()
                .ok_or_else(|| Error::Parse(format!("generator {label:?} must list vectors")))?
                .iter()
                .map(vector)
                .collect::<Result<Vec<_>>>()?;
            Ok((label.clone(), vectors))
        })
        .collect::<Result<_>>()?;
    let dim = match v.get("dimension") {
        Some(d) => {
            d.as_u64()
                .ok_or_else(|| Error::Parse("\"dimension\" must be a nonnegative integer".into()))? as usize
        }
        None => spans
            .iter()
            .find_map(|(_, s)| s.first().map(Vec::len))
            .ok_or_else(|| Error::Parse("cannot infer the dimension".into()))?,
    };
    spans
        .into_iter()
        .map(|(label, s)| Ok((label, projector_onto(&s, dim)?)))
        .collect()
}

pub fn builtin_generators(b: BuiltinAlgebra) -> Vec<(String, Projector)> {
    match b {
        BuiltinAlgebra::Fig3Bowtie => catalog::bowtie_projectors(),
        BuiltinAlgebra::Qubit => catalog::qubit_projectors(),
    }
}

/// An algebra from either a dump (has `"elements"`) or a generator file.
pub fn load_algebra(path: Option<&Path>, builtin: Option<BuiltinAlgebra>) -> Result<PartialBooleanAlgebra> {
    if let Some(b) = builtin {
        return generate_pba(&builtin_generators(b));
    }
    let path = path.ok_or_else(|| Error::Parse("no input given".into()))?;
    let v = read_json(path)?;
    if v.get("elements").is_some() {
        pba_from_json_value(&v)
    } else {
        generate_pba(&generators_from_json(&v)?)
    }
}

/// Rays and a density matrix for quantum expectation values.
pub struct QuantumSetup {
    pub labels: Vec<String>,
    pub rays: Vec<Vec<f64>>,
    pub rho: atomgraph::states::DensityMatrix,
}

/// `{"rays": {label: [x, ...]}, "rho": [[..], ..]}` or with `"psi": [..]`
/// instead of `"rho"` for a pure state. Entries are numbers or `"p/q"`.
pub fn quantum_from_json(v: &Value) -> Result<QuantumSetup> {
    use atomgraph::states::DensityMatrix;
    let map = v
        .get("rays")
        .and_then(Value::as_object)
        .ok_or_else(|| Error::Parse("quantum file needs a \"rays\" object".into()))?;
    let floats = |x: &Value| -> Result<Vec<f64>> {
        x.as_array()
            .ok_or_else(|| Error::Parse(format!("expected an array, got {x}")))?
            .iter()
            .map(float)
            .collect()
    };
    let labels: Vec<String> = map.keys().cloned().collect();
    let rays = map.values().map(floats).collect::<Result<Vec<_>>>()?;
    let rho = match (v.get("rho"), v.get("psi")) {
        (Some(r), None) => {
            let rows = r
                .as_array()
                .ok_or_else(|| Error::Parse("\"rho\" must be an array of rows".into()))?
                .iter()
                .map(floats)
                .collect::<Result<Vec<_>>>()?;
            DensityMatrix::new(rows)?
        }
        (None, Some(p)) => DensityMatrix::pure(&floats(p)?)?,
        _ => return Err(Error::Parse("give exactly one of \"rho\" and \"psi\"".into())),
    };
    Ok(QuantumSetup { labels, rays, rho })
}

pub fn kcbs_quantum() -> Result<QuantumSetup> {
    let u = atomgraph::orthorep::kcbs_umbrella();
    Ok(QuantumSetup {
        labels: (0..5).map(|i| i.to_string()).collect(),
        rays: u.vectors.iter().map(|v| v.to_vec()).collect(),
        rho: atomgraph::states::DensityMatrix::pure(&u.handle)?,
    })
}
