use super::{Graph, VertexSet};
use crate::{Error, Result};

/// All inclusion-maximal cliques, each sorted, the list sorted
/// lexicographically.
///
/// Bron–Kerbosch with Tomita pivoting: the pivot is the vertex of `P ∪ X`
/// with the most neighbours in `P`. Isolated vertices come out as singleton
/// cliques.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.is_empty() {
        return out;
    }
    let mut r = Vec::new();
    let p: Vec<usize> = (0..g.len()).collect();
    expand(g, &mut r, p, Vec::new(), &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    out
}

fn expand(g: &Graph, r: &mut Vec<usize>, mut p: Vec<usize>, mut x: Vec<usize>, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| g.adjacent(u, v)).count())
        .expect("p is nonempty");
    let todo: Vec<usize> = p.iter().copied().filter(|&v| !g.adjacent(pivot, v)).collect();
    for v in todo {
        let np = p.iter().copied().filter(|&u| g.adjacent(v, u)).collect();
        let nx = x.iter().copied().filter(|&u| g.adjacent(v, u)).collect();
        r.push(v);
        expand(g, r, np, nx, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}

/// `c_G(i)`: the number of maximal cliques containing each vertex.
pub fn context_counts(g: &Graph) -> Vec<usize> {
    counts_from(g.len(), &maximal_cliques(g))
}

pub(crate) fn counts_from(n: usize, cliques: &[VertexSet]) -> Vec<usize> {
    let mut counts = vec![0; n];
    for c in cliques {
        for &v in c {
            counts[v] += 1;
        }
    }
    counts
}

/// `c(G)`: the number of maximal cliques.
pub fn total_contexts(g: &Graph) -> usize {
    maximal_cliques(g).len()
}

/// Size of a maximum clique.
pub fn graph_dimension(g: &Graph) -> Result<usize> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    Ok(maximal_cliques(g).iter().map(Vec::len).max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn pentagon_cliques_are_its_edges() {
        let g = catalog::pentagon();
        let cliques = maximal_cliques(&g);
        assert_eq!(
            cliques,
            vec![vec![0, 1], vec![0, 4], vec![1, 2], vec![2, 3], vec![3, 4]]
        );
        // each edge is maximal: no third vertex is adjacent to both ends
        for c in &cliques {
            assert!((0..5)
                .filter(|v| !c.contains(v))
                .all(|v| !c.iter().all(|&u| g.adjacent(u, v))));
        }
        assert_eq!(context_counts(&g), vec![2; 5]);
        assert_eq!(total_contexts(&g), 5);
        assert_eq!(graph_dimension(&g).unwrap(), 2);
    }

    #[test]
    fn triangle() {
        let g = catalog::complete(3);
        assert_eq!(maximal_cliques(&g), vec![vec![0, 1, 2]]);
        assert_eq!(context_counts(&g), vec![1, 1, 1]);
        assert_eq!(total_contexts(&g), 1);
        assert_eq!(graph_dimension(&g).unwrap(), 3);
    }

    #[test]
    fn edgeless_gives_singletons() {
        let g = catalog::edgeless(3);
        assert_eq!(maximal_cliques(&g), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn bowtie_counts() {
        let g = catalog::bowtie();
        let c = g.index_of("c").unwrap();
        let counts = context_counts(&g);
        for (v, &k) in counts.iter().enumerate() {
            assert_eq!(k, if v == c { 2 } else { 1 });
        }
        assert_eq!(total_contexts(&g), 2);
        assert_eq!(graph_dimension(&g).unwrap(), 3);
    }

    #[test]
    fn empty_graph_dimension_is_error() {
        let g = Graph::new(Vec::<String>::new()).unwrap();
        assert_eq!(graph_dimension(&g).unwrap_err(), Error::EmptyGraph);
        assert!(maximal_cliques(&g).is_empty());
    }
}
