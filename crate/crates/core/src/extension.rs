//! Context extensions and their realisation by projectors.
//!
//! The context extension `G^e` of a graph adds one new vertex `x_k` per
//! maximal clique `C_k`, adjacent to exactly the members of `C_k`. The
//! maximal cliques of `G^e` are then exactly the sets `C_k ∪ {x_k}`, and
//! `G` sits inside `G^e` as an induced subgraph. [`realize_extension`]
//! builds a projector algebra whose atom graph is `G^e`.

use std::collections::HashSet;

use serde_json::{json, Value};

use crate::exactla::{projector_onto, Projector};
use crate::graph::io::graph_to_json_value;
use crate::graph::{is_isomorphism, maximal_cliques, Graph, VertexSet};
use crate::orthorep::{construct_flior_in, OrthoRep};
use crate::pba::{atom_graph, atoms, fresh_label, generate_pba, pba_to_json_value, PartialBooleanAlgebra};
use crate::{Error, Result};

/// A graph with one vertex added for some of its maximal cliques.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extended {
    pub graph: Graph,
    /// Maximal cliques of the base graph, in canonical order.
    pub cliques: Vec<VertexSet>,
    /// `(clique id, added vertex)` pairs.
    pub added: Vec<(usize, usize)>,
}

fn extend_selected(g: &Graph, keep: impl Fn(&VertexSet) -> bool) -> Extended {
    let cliques = maximal_cliques(g);
    let mut graph = g.clone();
    let mut taken: HashSet<String> = g.labels().iter().cloned().collect();
    let mut added = Vec::new();
    for (k, c) in cliques.iter().enumerate() {
        if !keep(c) {
            continue;
        }
        let x = graph
            .add_vertex(fresh_label(&format!("x{k}"), &mut taken))
            .expect("fresh label");
        for &v in c {
            graph.add_edge(v, x).expect("valid edge");
        }
        added.push((k, x));
    }
    Extended { graph, cliques, added }
}

/// `G^e` with its bookkeeping. Added vertices follow the original ones,
/// one per maximal clique in canonical clique order, labelled `x{k}`
/// (primed if that label is already taken).
pub fn extend_contexts(g: &Graph) -> Extended {
    extend_selected(g, |_| true)
}

pub fn context_extension(g: &Graph) -> Graph {
    extend_contexts(g).graph
}

/// Adds a vertex only to maximal cliques smaller than the largest ones.
/// All cliques of maximum size are left alone.
pub fn equal_dim_extension(g: &Graph) -> Graph {
    equal_dim_extension_detailed(g).graph
}

pub fn equal_dim_extension_detailed(g: &Graph) -> Extended {
    let largest = maximal_cliques(g).iter().map(Vec::len).max().unwrap_or(0);
    extend_selected(g, |c| c.len() < largest)
}

/// Injective, and adjacency in `g` matches adjacency of the images in `h`.
pub fn verify_induced_subgraph(g: &Graph, h: &Graph, embed: &[usize]) -> bool {
    if embed.len() != g.len() || embed.iter().any(|&v| v >= h.len()) {
        return false;
    }
    let distinct: HashSet<usize> = embed.iter().copied().collect();
    if distinct.len() != embed.len() {
        return false;
    }
    (0..g.len()).all(|a| (a + 1..g.len()).all(|b| g.adjacent(a, b) == h.adjacent(embed[a], embed[b])))
}

/// Everything [`realize_extension`] builds, kept for inspection.
#[derive(Clone, Debug)]
pub struct ExtensionResult {
    pub base: Graph,
    pub extension: Extended,
    pub rep: OrthoRep,
    /// Generator projectors, indexed like the vertices of the extension:
    /// rank-one projectors for original vertices, then one projector per
    /// maximal clique.
    pub atom_projectors: Vec<Projector>,
    pub algebra: PartialBooleanAlgebra,
    /// `iso[i]` is the extension vertex matched to the `i`-th atom.
    pub iso: Vec<usize>,
}

impl ExtensionResult {
    pub fn extended(&self) -> &Graph {
        &self.extension.graph
    }

    pub fn to_json_value(&self, float: bool) -> Value {
        let ext = &self.extension.graph;
        let added: Vec<Value> = self
            .extension
            .added
            .iter()
            .map(|&(k, x)| {
                let members: Vec<&str> = self.extension.cliques[k].iter().map(|&v| self.base.label(v)).collect();
                json!({ "clique": members, "vertex": ext.label(x) })
            })
            .collect();
        let projectors: serde_json::Map<String, Value> = self
            .atom_projectors
            .iter()
            .enumerate()
            .map(|(v, p)| {
                let m = if float {
                    json!(p.to_f64_rows())
                } else {
                    json!(p.matrix().to_string_rows())
                };
                (ext.label(v).to_string(), m)
            })
            .collect();
        let atom_list = atoms(&self.algebra);
        let iso: serde_json::Map<String, Value> = atom_list
            .iter()
            .zip(&self.iso)
            .map(|(&a, &v)| (self.algebra.label(a).to_string(), json!(ext.label(v))))
            .collect();
        json!({
            "base": graph_to_json_value(&self.base),
            "extended": graph_to_json_value(ext),
            "added": added,
            "rep": if float { self.rep.to_float_json_value() } else { self.rep.to_json_value() },
            "projectors": projectors,
            "algebra": pba_to_json_value(&self.algebra, float),
            "iso": iso,
        })
    }
}

/// Builds a projector algebra whose atom graph is the context extension of
/// `g`, and checks that it is.
///
/// Pipeline: a faithful, linearly independent co-representation `v` of `g`;
/// `P̂_i` = projector onto `v_i`; for each maximal clique,
/// `P_k = ¬(⋁_{i ∈ C_k} P̂_i)`; the algebra generated by all of them. The
/// atoms must be exactly the `P̂_i` and `P_k`, with `P̂_i ↦ i` and
/// `P_k ↦ x_k` an isomorphism onto `G^e`; anything else is reported as an
/// internal error.
///
/// The representation lives in dimension `n = |V(g)|`, except for complete
/// graphs: there the only clique spans the whole space, so `P_k` would be
/// 0, and one extra coordinate is added.
pub fn realize_extension(g: &Graph) -> Result<ExtensionResult> {
    let n = g.len();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let extension = extend_contexts(g);
    let complete = extension.cliques.len() == 1 && extension.cliques[0].len() == n;
    let dim = if complete { n + 1 } else { n };
    let rep = construct_flior_in(g, dim)?;

    let mut atom_projectors: Vec<Projector> = rep
        .vectors()
        .iter()
        .map(|v| projector_onto(std::slice::from_ref(v), dim))
        .collect::<Result<_>>()?;
    for c in &extension.cliques {
        let mut span = Projector::zero(dim);
        for &i in c {
            span = span.join(&atom_projectors[i])?;
        }
        let p = span.complement();
        if p.is_zero() {
            return Err(Error::Internal("a maximal clique spans the whole space".into()));
        }
        atom_projectors.push(p);
    }

    let ext = &extension.graph;
    let generators: Vec<(String, Projector)> = atom_projectors
        .iter()
        .enumerate()
        .map(|(v, p)| (ext.label(v).to_string(), p.clone()))
        .collect();
    let algebra = generate_pba(&generators)?;

    let element_of: Vec<usize> = atom_projectors
        .iter()
        .map(|p| {
            algebra
                .index_of_projector(p)
                .ok_or_else(|| Error::Internal("generator missing from the algebra".into()))
        })
        .collect::<Result<_>>()?;
    let atom_list = atoms(&algebra);
    let mut expected = element_of.clone();
    expected.sort_unstable();
    if atom_list != expected {
        return Err(Error::Internal(format!(
            "atoms are not the generators: {} atoms for {} generators",
            atom_list.len(),
            expected.len()
        )));
    }
    let iso: Vec<usize> = atom_list
        .iter()
        .map(|a| element_of.iter().position(|e| e == a).expect("atom is a generator"))
        .collect();
    if !is_isomorphism(&atom_graph(&algebra), ext, &iso) {
        return Err(Error::Internal("atom graph differs from the context extension".into()));
    }
    Ok(ExtensionResult {
        base: g.clone(),
        extension,
        rep,
        atom_projectors,
        algebra,
        iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::graph_isomorphic;

    #[test]
    fn pentagon_extension() {
        let e = extend_contexts(&catalog::pentagon());
        assert_eq!(e.graph.len(), 10);
        let cliques = maximal_cliques(&e.graph);
        assert_eq!(cliques.len(), 5);
        assert!(cliques.iter().all(|c| c.len() == 3));
        let labels: Vec<&str> = (5..10).map(|v| e.graph.label(v)).collect();
        assert_eq!(labels, ["x0", "x1", "x2", "x3", "x4"]);
        let identity: Vec<usize> = (0..5).collect();
        assert!(verify_induced_subgraph(&catalog::pentagon(), &e.graph, &identity));
        // 0 and 1 are adjacent; 5 and 7 are not
        assert!(!verify_induced_subgraph(
            &catalog::pentagon(),
            &e.graph,
            &[5, 7, 2, 3, 4]
        ));
    }

    #[test]
    fn small_extensions() {
        assert!(graph_isomorphic(&context_extension(&catalog::complete(3)), &catalog::complete(4)).is_some());
        assert!(graph_isomorphic(&context_extension(&catalog::complete(1)), &catalog::complete(2)).is_some());
        assert!(verify_induced_subgraph(
            &catalog::complete(3),
            &catalog::complete(4),
            &[3, 0, 2]
        ));
    }

    #[test]
    fn label_clash_gets_primed() {
        let g = Graph::new(["x0", "a"]).unwrap();
        let e = context_extension(&g);
        assert_eq!(e.labels(), ["x0", "a", "x0'", "x1"]);
    }

    #[test]
    fn equal_dim_examples() {
        assert_eq!(equal_dim_extension(&catalog::complete(3)), catalog::complete(3));
        assert_eq!(equal_dim_extension(&catalog::bowtie()), catalog::bowtie());
        let t = catalog::triangle_with_pendant();
        let e = equal_dim_extension_detailed(&t);
        assert_eq!(e.graph.len(), 5);
        assert_eq!(e.added.len(), 1);
        let (k, x) = e.added[0];
        assert_eq!(e.cliques[k], vec![2, 3]);
        assert_eq!(e.graph.neighbors(x), &[2, 3]);
    }

    #[test]
    fn realize_small_graphs() {
        for g in [
            catalog::complete(1),
            catalog::complete(2),
            catalog::edgeless(2),
            catalog::path(3),
        ] {
            let r = realize_extension(&g).unwrap();
            assert_eq!(r.iso.len(), g.len() + maximal_cliques(&g).len());
            assert!(graph_isomorphic(&atom_graph(&r.algebra), r.extended()).is_some());
        }
    }

    #[test]
    fn complete_graph_is_padded() {
        let r = realize_extension(&catalog::complete(2)).unwrap();
        assert_eq!(r.rep.dimension(), 3);
        assert_eq!(r.atom_projectors[2].rank(), 1);
    }

    #[test]
    fn edgeless_pair() {
        let r = realize_extension(&catalog::edgeless(2)).unwrap();
        let ag = atom_graph(&r.algebra);
        assert_eq!(ag.len(), 4);
        assert_eq!(ag.edge_count(), 2);
        assert!(!r.atom_projectors[0].commutes(&r.atom_projectors[1]).unwrap());
    }

    #[test]
    fn json_bundle() {
        let r = realize_extension(&catalog::path(2)).unwrap();
        let v = r.to_json_value(false);
        assert_eq!(v["extended"]["vertices"].as_array().unwrap().len(), 3);
        assert_eq!(v["iso"].as_object().unwrap().len(), 3);
    }
}
