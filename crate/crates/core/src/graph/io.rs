//! Graph ingestion and emission.
//!
//! Two formats:
//!
//! * JSON: `{"vertices": [labels], "edges": [[label, label], ...]}`. Labels
//!   may be strings or integers; integers are read as their decimal text.
//! * DIMACS edge lists: a `p edge n m` header, then `e i j` lines with
//!   1-based vertex numbers. `c` lines are comments. Vertices are labelled
//!   `"1"` … `"n"`.

use serde_json::{json, Value};

use super::Graph;
use crate::{Error, Result};

fn label_of(v: &Value) -> Result<String> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) if n.is_u64() || n.is_i64() => Ok(n.to_string()),
        other => Err(Error::Parse(format!(
            "vertex label must be a string or integer, got {other}"
        ))),
    }
}

pub fn graph_from_json_value(v: &Value) -> Result<Graph> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("graph JSON must be an object".into()))?;
    let vertices = obj
        .get("vertices")
        .and_then(Value::as_array)
        .ok_or_else(|| Error::Parse("graph JSON needs a \"vertices\" array".into()))?;
    let labels = vertices.iter().map(label_of).collect::<Result<Vec<_>>>()?;
    let mut g = Graph::new(labels)?;
    let empty = Vec::new();
    let edges = match obj.get("edges") {
        None => &empty,
        Some(e) => e
            .as_array()
            .ok_or_else(|| Error::Parse("\"edges\" must be an array".into()))?,
    };
    for e in edges {
        let pair = e
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| Error::Parse(format!("edge must be a two-element array, got {e}")))?;
        let a = label_of(&pair[0])?;
        let b = label_of(&pair[1])?;
        g.add_edge_by_label(&a, &b)?;
    }
    Ok(g)
}

pub fn graph_from_json(text: &str) -> Result<Graph> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    graph_from_json_value(&v)
}

pub fn graph_to_json_value(g: &Graph) -> Value {
    let edges: Vec<Value> = g
        .edges()
        .into_iter()
        .map(|(a, b)| json!([g.label(a), g.label(b)]))
        .collect();
    json!({ "vertices": g.labels(), "edges": edges })
}

pub fn graph_from_dimacs(text: &str) -> Result<Graph> {
    let mut graph: Option<Graph> = None;
    let mut declared_edges = 0usize;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        let bad = |msg: &str| Error::Parse(format!("line {}: {msg}: {line:?}", lineno + 1));
        let mut parts = line.split_whitespace();
        match parts.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(bad("duplicate problem line"));
                }
                if parts.next() != Some("edge") {
                    return Err(bad("expected \"p edge n m\""));
                }
                let n: usize = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad vertex count"))?;
                declared_edges = parts
                    .next()
                    .and_then(|s| s.parse().ok())
                    .ok_or_else(|| bad("bad edge count"))?;
                graph = Some(Graph::new((1..=n).map(|i| i.to_string()))?);
            }
            Some("e") => {
                let g = graph.as_mut().ok_or_else(|| bad("edge before problem line"))?;
                let mut idx = || -> Result<usize> {
                    let i: usize = parts
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| bad("bad vertex number"))?;
                    if i == 0 || i > g.len() {
                        return Err(bad("vertex number out of range"));
                    }
                    Ok(i - 1)
                };
                let a = idx()?;
                let b = idx()?;
                g.add_edge(a, b)?;
            }
            Some(_) => return Err(bad("unrecognised line")),
        }
    }
    let g = graph.ok_or_else(|| Error::Parse("missing \"p edge n m\" line".into()))?;
    if g.edge_count() != declared_edges {
        return Err(Error::Parse(format!(
            "header declares {declared_edges} edges but {} distinct edges were read",
            g.edge_count()
        )));
    }
    Ok(g)
}

pub fn graph_to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.len(), g.edge_count());
    for (a, b) in g.edges() {
        out.push_str(&format!("e {} {}\n", a + 1, b + 1));
    }
    out
}

/// Reads either format, deciding by the first non-blank character.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        graph_from_json(text)
    } else {
        graph_from_dimacs(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn json_round_trip() {
        let g = catalog::bowtie();
        let v = graph_to_json_value(&g);
        let back = graph_from_json_value(&v).unwrap();
        assert_eq!(back, g);
        assert_eq!(graph_to_json_value(&back), v);
    }

    #[test]
    fn json_integer_labels() {
        let g = graph_from_json(r#"{"vertices": [1, 2, 3], "edges": [[1, 2]]}"#).unwrap();
        assert_eq!(g.labels(), ["1", "2", "3"]);
        assert!(g.adjacent(0, 1));
    }

    #[test]
    fn json_errors() {
        assert!(graph_from_json("[]").is_err());
        assert!(graph_from_json(r#"{"vertices": ["a"], "edges": [["a", "a"]]}"#).is_err());
        assert!(graph_from_json(r#"{"vertices": ["a"], "edges": [["a", "b"]]}"#).is_err());
        assert!(graph_from_json(r#"{"vertices": ["a", "a"]}"#).is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let text = "c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let g = graph_from_dimacs(text).unwrap();
        assert_eq!(g.len(), 5);
        assert_eq!(g.edge_count(), 5);
        let out = graph_to_dimacs(&g);
        assert_eq!(graph_from_dimacs(&out).unwrap(), g);
        assert_eq!(parse_graph(&out).unwrap(), g);
    }

    #[test]
    fn dimacs_errors() {
        assert!(graph_from_dimacs("e 1 2\n").is_err());
        assert!(graph_from_dimacs("p edge 2 1\ne 1 3\n").is_err());
        assert!(graph_from_dimacs("p edge 2 2\ne 1 2\n").is_err());
        assert!(graph_from_dimacs("p edge 2 1\nx\n").is_err());
    }
}
