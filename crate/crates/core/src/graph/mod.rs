//! Labeled simple undirected graphs and the clique/independence machinery
//! built on them.

mod cliques;
mod independence;
pub mod io;
mod iso;
mod polytope;

use std::collections::HashMap;

use num_traits::{One, Signed};

use crate::exactla::Rational;
use crate::{Error, Result};

pub use cliques::{context_counts, graph_dimension, maximal_cliques, total_contexts};
pub use independence::{independent_sets, weighted_independence, Independence};
pub use iso::{graph_isomorphic, is_isomorphism};
pub use polytope::{vp_membership, VP_VERTEX_LIMIT};

/// Sorted list of vertex indices.
pub type VertexSet = Vec<usize>;

/// Simple undirected graph with unique string labels.
///
/// Vertex `i` is identified by its index; labels are only for I/O and
/// reports. Adjacency is kept both as a dense matrix and as sorted
/// neighbour lists.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    adj: Vec<Vec<bool>>,
    neighbors: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let edges: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(a, b)| format!("{}-{}", self.labels[a], self.labels[b]))
            .collect();
        write!(f, "Graph({:?}; {})", self.labels, edges.join(" "))
    }
}

impl Graph {
    /// Edgeless graph on the given labels.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if let Some(j) = seen.insert(l.as_str(), i) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate vertex label {l:?} at positions {j} and {i}"
                )));
            }
        }
        let n = labels.len();
        Ok(Graph {
            labels,
            adj: vec![vec![false; n]; n],
            neighbors: vec![Vec::new(); n],
        })
    }

    /// Graph on vertices labelled `"0"`, `"1"`, … with the given index edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new((0..n).map(|i| i.to_string()))?;
        for &(a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn from_labeled_edges(labels: &[&str], edges: &[(&str, &str)]) -> Result<Self> {
        let mut g = Graph::new(labels.iter().copied())?;
        for (a, b) in edges {
            g.add_edge_by_label(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, label: impl Into<String>) -> Result<usize> {
        let label = label.into();
        if self.index_of(&label).is_some() {
            return Err(Error::InvalidGraph(format!("duplicate vertex label {label:?}")));
        }
        self.labels.push(label);
        for row in &mut self.adj {
            row.push(false);
        }
        let n = self.labels.len();
        self.adj.push(vec![false; n]);
        self.neighbors.push(Vec::new());
        Ok(n - 1)
    }

    /// Adds the undirected edge `a–b`. Adding an existing edge is a no-op.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<()> {
        let n = self.len();
        if a >= n || b >= n {
            return Err(Error::InvalidGraph(format!(
                "edge ({a}, {b}) out of range for {n} vertices"
            )));
        }
        if a == b {
            return Err(Error::InvalidGraph(format!("self-loop on vertex {:?}", self.labels[a])));
        }
        if !self.adj[a][b] {
            self.adj[a][b] = true;
            self.adj[b][a] = true;
            let pos = self.neighbors[a].binary_search(&b).unwrap_err();
            self.neighbors[a].insert(pos, b);
            let pos = self.neighbors[b].binary_search(&a).unwrap_err();
            self.neighbors[b].insert(pos, a);
        }
        Ok(())
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<()> {
        let ia = self
            .index_of(a)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {a:?}")))?;
        let ib = self
            .index_of(b)
            .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {b:?}")))?;
        self.add_edge(ia, ib)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges `(a, b)` with `a < b`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .flat_map(|a| self.neighbors[a].iter().filter(move |&&b| b > a).map(move |&b| (a, b)))
            .collect()
    }

    pub fn is_clique(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| self.adj[a][b]))
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(k, &a)| set[k + 1..].iter().all(|&b| a != b && !self.adj[a][b]))
    }

    /// Subgraph induced on `vertices`, keeping their labels and order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        let mut g = Graph::new(vertices.iter().map(|&v| self.labels[v].clone()))?;
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.adj[a][b] {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// Same graph with vertices renamed through `f`.
    pub fn relabeled(&self, f: impl Fn(usize, &str) -> String) -> Result<Graph> {
        let mut g = Graph::new(self.labels.iter().enumerate().map(|(i, l)| f(i, l)))?;
        g.adj = self.adj.clone();
        g.neighbors = self.neighbors.clone();
        Ok(g)
    }

    /// Graph with vertex `i` of `self` placed at position `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.len();
        if perm.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: perm.len(),
            });
        }
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let mut g = Graph::new(labels)?;
        for (a, b) in self.edges() {
            g.add_edge(perm[a], perm[b])?;
        }
        Ok(g)
    }
}

/// Nonnegative exact weight per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        if let Some(w) = weights.iter().find(|w| w.is_negative()) {
            return Err(Error::InvalidGraph(format!("negative weight {w}")));
        }
        Ok(WeightVector(weights))
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![Rational::one(); n])
    }

    pub fn from_counts(counts: &[usize]) -> Self {
        WeightVector(counts.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_inner(self) -> Vec<Rational> {
        self.0
    }
}

impl std::ops::Index<usize> for WeightVector {
    type Output = Rational;

    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::int;

    #[test]
    fn rejects_self_loops_and_duplicates() {
        assert!(Graph::new(["a", "a"]).is_err());
        let mut g = Graph::new(["a", "b"]).unwrap();
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 2).is_err());
        g.add_edge(1, 0).unwrap();
        g.add_edge(0, 1).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert!(g.adjacent(0, 1) && g.adjacent(1, 0));
    }

    #[test]
    fn induced_and_permuted() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        let p = g.permuted(&[3, 2, 1, 0]).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(p.label(0), "3");
    }

    #[test]
    fn weight_vector_rejects_negative() {
        assert!(WeightVector::new(vec![int(1), int(-1)]).is_err());
        assert_eq!(WeightVector::ones(3).len(), 3);
    }
}
