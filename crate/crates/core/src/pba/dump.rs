//! JSON form of an algebra.
//!
//! ```text
//! {
//!   "size": n,
//!   "elements": [{"label": .., "projector": [["p/q", ..], ..]}
//!              | {"label": .., "representatives": [{"clique": k, "atoms": [labels]}, ..]}
//!              | {"label": ..}],
//!   "zero": i, "one": j,
//!   "neg": [..],
//!   "compatible": [[a, b], ..],        a < b
//!   "meet": [[a, b, c], ..], "join": [[a, b, c], ..],
//!   "atoms": [..],
//!   "source_graph": graph JSON         symbolic algebras only
//! }
//! ```

use serde_json::{json, Value};

use super::{atoms, Element, ElementData, PartialBooleanAlgebra, SymbolicElement, Tables};
use crate::exactla::{Projector, RationalMatrix};
use crate::graph::io::{graph_from_json_value, graph_to_json_value};
use crate::graph::maximal_cliques;
use crate::{Error, Result};

/// Exact dump. With `float`, projector entries become `f64` numbers and
/// the result can no longer be read back.
pub fn pba_to_json_value(b: &PartialBooleanAlgebra, float: bool) -> Value {
    let elements: Vec<Value> = b
        .elements()
        .iter()
        .map(|e| match &e.data {
            ElementData::Projector(p) if float => json!({ "label": e.label, "projector": p.to_f64_rows() }),
            ElementData::Projector(p) => json!({ "label": e.label, "projector": p.matrix().to_string_rows() }),
            ElementData::Symbolic(s) => {
                let g = b.source_graph().expect("symbolic algebras keep their graph");
                let reps: Vec<Value> = s
                    .representatives
                    .iter()
                    .map(|(k, set)| {
                        let names: Vec<&str> = set.iter().map(|&v| g.label(v)).collect();
                        json!({ "clique": k, "atoms": names })
                    })
                    .collect();
                json!({ "label": e.label, "representatives": reps })
            }
            ElementData::Abstract => json!({ "label": e.label }),
        })
        .collect();
    let pairs = b.compatible_pairs();
    let triples = |op: &dyn Fn(usize, usize) -> Option<usize>| -> Vec<Value> {
        pairs
            .iter()
            .map(|&(x, y)| json!([x, y, op(x, y).expect("defined on compatible pairs")]))
            .collect()
    };
    let mut out = json!({
        "size": b.len(),
        "elements": elements,
        "zero": b.zero(),
        "one": b.one(),
        "neg": b.neg_table(),
        "compatible": pairs.iter().map(|&(x, y)| json!([x, y])).collect::<Vec<_>>(),
        "meet": triples(&|x, y| b.meet(x, y)),
        "join": triples(&|x, y| b.join(x, y)),
        "atoms": atoms(b),
    });
    if let Some(g) = b.source_graph() {
        out["source_graph"] = graph_to_json_value(g);
    }
    out
}

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn as_index(v: &Value) -> Result<usize> {
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("expected an element index, got {v}")))
}

fn index_tuples(v: Option<&Value>, width: usize, name: &str) -> Result<Vec<Vec<usize>>> {
    v.and_then(Value::as_array)
        .ok_or_else(|| parse_err(format!("missing \"{name}\" array")))?
        .iter()
        .map(|t| {
            let items = t
                .as_array()
                .filter(|a| a.len() == width)
                .ok_or_else(|| parse_err(format!("\"{name}\" entries must have {width} indices")))?;
            items.iter().map(as_index).collect()
        })
        .collect()
}

/// Reads an exact dump back. Projector entries are revalidated.
pub fn pba_from_json_value(v: &Value) -> Result<PartialBooleanAlgebra> {
    let source = v.get("source_graph").map(graph_from_json_value).transpose()?;
    let cliques = source.as_ref().map(maximal_cliques);
    let elements = v
        .get("elements")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing \"elements\" array"))?
        .iter()
        .map(|e| {
            let label = e
                .get("label")
                .and_then(Value::as_str)
                .ok_or_else(|| parse_err("element without a label"))?
                .to_string();
            let data = if let Some(rows) = e.get("projector") {
                let rows: Vec<Vec<String>> =
                    serde_json::from_value(rows.clone()).map_err(|err| parse_err(err.to_string()))?;
                ElementData::Projector(Projector::from_matrix(RationalMatrix::from_string_rows(&rows)?)?)
            } else if let Some(reps) = e.get("representatives") {
                let (g, cliques) = source
                    .as_ref()
                    .zip(cliques.as_ref())
                    .ok_or_else(|| parse_err("symbolic elements need \"source_graph\""))?;
                let reps = reps
                    .as_array()
                    .ok_or_else(|| parse_err("\"representatives\" must be an array"))?
                    .iter()
                    .map(|r| {
                        let k = r
                            .get("clique")
                            .map(as_index)
                            .transpose()?
                            .ok_or_else(|| parse_err("missing clique"))?;
                        if k >= cliques.len() {
                            return Err(parse_err(format!("clique id {k} out of range")));
                        }
                        let mut set = r
                            .get("atoms")
                            .and_then(Value::as_array)
                            .ok_or_else(|| parse_err("missing atoms"))?
                            .iter()
                            .map(|a| {
                                a.as_str()
                                    .and_then(|l| g.index_of(l))
                                    .ok_or_else(|| parse_err(format!("unknown atom {a}")))
                            })
                            .collect::<Result<Vec<_>>>()?;
                        set.sort_unstable();
                        Ok((k, set))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ElementData::Symbolic(SymbolicElement { representatives: reps })
            } else {
                ElementData::Abstract
            };
            Ok(Element { label, data })
        })
        .collect::<Result<Vec<_>>>()?;

    let pairs = index_tuples(v.get("compatible"), 2, "compatible")?;
    let meet = index_tuples(v.get("meet"), 3, "meet")?;
    let join = index_tuples(v.get("join"), 3, "join")?;
    let neg = v
        .get("neg")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing \"neg\" array"))?
        .iter()
        .map(as_index)
        .collect::<Result<Vec<_>>>()?;
    let tables = Tables {
        compatible: pairs.iter().map(|p| (p[0], p[1])).collect(),
        meet: meet.iter().map(|t| (t[0], t[1], t[2])).collect(),
        join: join.iter().map(|t| (t[0], t[1], t[2])).collect(),
        neg,
        zero: v
            .get("zero")
            .map(as_index)
            .transpose()?
            .ok_or_else(|| parse_err("missing \"zero\""))?,
        one: v
            .get("one")
            .map(as_index)
            .transpose()?
            .ok_or_else(|| parse_err("missing \"one\""))?,
    };
    PartialBooleanAlgebra::assemble(elements, tables, source)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::pba::{generate_pba, symbolic_from_atom_graph};

    fn round_trip(b: &PartialBooleanAlgebra) {
        let v = pba_to_json_value(b, false);
        let back = pba_from_json_value(&v).unwrap();
        assert_eq!(pba_to_json_value(&back, false), v);
        assert_eq!(back.elements(), b.elements());
    }

    #[test]
    fn projector_algebra() {
        round_trip(&generate_pba(&catalog::bowtie_projectors()).unwrap());
    }

    #[test]
    fn symbolic_algebra() {
        round_trip(&symbolic_from_atom_graph(&catalog::bowtie()).unwrap());
    }

    #[test]
    fn abstract_algebra() {
        round_trip(&catalog::non_exclusive_algebra());
    }

    #[test]
    fn float_dump_has_numbers() {
        let b = generate_pba(&catalog::qubit_projectors()).unwrap();
        let v = pba_to_json_value(&b, true);
        assert!(v["elements"][1]["projector"][0][0].is_f64());
        assert!(pba_from_json_value(&v).is_err());
    }
}
