//! Named graphs, graph generators and small algebras used by fixtures,
//! tests and the CLI.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactla::{int, projector_onto, Projector};
use crate::graph::{context_counts, graph_isomorphic, Graph};
use crate::pba::PartialBooleanAlgebra;

/// The 5-cycle `0–1–2–3–4–0`.
pub fn pentagon() -> Graph {
    cycle(5)
}

pub fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).expect("valid cycle")
}

pub fn path(n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

pub fn complete(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    Graph::from_edges(n, &edges).expect("valid complete graph")
}

pub fn edgeless(n: usize) -> Graph {
    Graph::from_edges(n, &[]).expect("valid edgeless graph")
}

/// Two triangles sharing the hub `c`: `{c, a1, b1}` and `{c, a2, b2}`.
pub fn bowtie() -> Graph {
    Graph::from_labeled_edges(
        &["c", "a1", "b1", "a2", "b2"],
        &[
            ("c", "a1"),
            ("c", "b1"),
            ("a1", "b1"),
            ("c", "a2"),
            ("c", "b2"),
            ("a2", "b2"),
        ],
    )
    .expect("valid bowtie")
}

/// Triangle `{0, 1, 2}` with a pendant edge `2–3`.
pub fn triangle_with_pendant() -> Graph {
    Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2), (2, 3)]).expect("valid graph")
}

/// Erdős–Rényi `G(n, p)` with labels `"0"` … `"n-1"`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.random_bool(p) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid random graph")
}

/// `count` random graphs with `1..=max_n` vertices and edge probability
/// drawn uniformly from `[0.1, 0.9]`, reproducible from `seed`.
pub fn random_graphs(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=max_n);
            let p = rng.random_range(0.1..0.9);
            random_graph(n, p, &mut rng)
        })
        .collect()
}

/// One representative of every isomorphism class of graphs on `n`
/// vertices.
///
/// Built by adding a vertex with every possible neighbourhood to each class
/// on `n - 1` vertices, then discarding duplicates by isomorphism testing
/// within buckets of equal invariants. Counts are 1, 1, 2, 4, 11, 34, 156,
/// 1044 for `n = 0..=7`.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut classes = vec![edgeless(0)];
    for k in 1..=n {
        let mut buckets: HashMap<Vec<(usize, usize)>, Vec<usize>> = HashMap::new();
        let mut next: Vec<Graph> = Vec::new();
        for base in &classes {
            for mask in 0u32..(1 << (k - 1)) {
                let mut edges = base.edges();
                edges.extend((0..k - 1).filter(|&i| mask >> i & 1 == 1).map(|i| (i, k - 1)));
                let g = Graph::from_edges(k, &edges).expect("valid extension");
                let key = invariant_key(&g);
                let bucket = buckets.entry(key).or_default();
                if bucket.iter().any(|&i| graph_isomorphic(&next[i], &g).is_some()) {
                    continue;
                }
                bucket.push(next.len());
                next.push(g);
            }
        }
        classes = next;
    }
    classes
}

/// All isomorphism classes on `1..=max_n` vertices, smallest first.
pub fn nonisomorphic_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(nonisomorphic_graphs).collect()
}

fn invariant_key(g: &Graph) -> Vec<(usize, usize)> {
    let counts = context_counts(g);
    let mut key: Vec<(usize, usize)> = (0..g.len()).map(|v| (g.degree(v), counts[v])).collect();
    key.sort_unstable();
    key
}

fn rank_one(label: &str, v: &[i64]) -> (String, Projector) {
    let v: Vec<_> = v.iter().map(|&x| int(x)).collect();
    let d = v.len();
    (label.to_string(), projector_onto(&[v], d).expect("nonzero vector"))
}

/// Two non-commuting rank-one qubit projectors: onto `(1, 0)` and onto
/// `(1, 1)`.
pub fn qubit_projectors() -> Vec<(String, Projector)> {
    vec![rank_one("P0", &[1, 0]), rank_one("P+", &[1, 1])]
}

/// Five rank-one projectors in `Q^3` whose orthogonality graph is the
/// [`bowtie`]: `c = (0,0,1)` is orthogonal to the two bases
/// `{(1,0,0), (0,1,0)}` and `{(1,1,0), (1,-1,0)}` of the plane below it.
pub fn bowtie_projectors() -> Vec<(String, Projector)> {
    vec![
        rank_one("c", &[0, 0, 1]),
        rank_one("a1", &[1, 0, 0]),
        rank_one("b1", &[0, 1, 0]),
        rank_one("a2", &[1, 1, 0]),
        rank_one("b2", &[1, -1, 0]),
    ]
}

/// The power set of `k` atoms `a0` … as a single block.
pub fn boolean_algebra(k: usize) -> PartialBooleanAlgebra {
    let size = 1usize << k;
    let labels = (0..size)
        .map(|m| match m {
            0 => "0".to_string(),
            m if m == size - 1 => "1".to_string(),
            m if m.is_power_of_two() => format!("a{}", m.trailing_zeros()),
            m => {
                let parts: Vec<String> = (0..k).filter(|i| m >> i & 1 == 1).map(|i| format!("a{i}")).collect();
                format!("({})", parts.join(" | "))
            }
        })
        .collect();
    PartialBooleanAlgebra::from_boolean_blocks(labels, &[(0..size).collect()]).expect("valid Boolean algebra")
}

/// Two 8-element Boolean algebras glued along `{0, 1, c, !c}`, where
/// `c = a | a2` in the first and `!c = b | b2` in the second. Then
/// `a ≤ c` and `b ≤ !c`, yet `a` and `b` are incompatible: a partial
/// Boolean algebra that violates exclusivity.
pub fn non_exclusive_algebra() -> PartialBooleanAlgebra {
    let labels = ["0", "1", "a", "a2", "c", "!c", "!a", "!a2", "b", "b2", "!b", "!b2"]
        .map(String::from)
        .to_vec();
    // first block atoms a, a2, !c; second block atoms b, b2, c
    let first = vec![0, 2, 3, 4, 5, 7, 6, 1];
    let second = vec![0, 8, 9, 5, 4, 11, 10, 1];
    PartialBooleanAlgebra::from_boolean_blocks(labels, &[first, second]).expect("valid glued algebra")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts_match_known_sequence() {
        let expected = [1, 1, 2, 4, 11, 34, 156];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(nonisomorphic_graphs(n).len(), count, "n = {n}");
        }
    }

    #[test]
    fn random_graphs_are_reproducible() {
        assert_eq!(random_graphs(5, 8, 3), random_graphs(5, 8, 3));
    }

    #[test]
    fn named_graphs() {
        assert_eq!(pentagon().edge_count(), 5);
        assert_eq!(complete(4).edge_count(), 6);
        assert_eq!(path(5).edge_count(), 4);
        assert_eq!(bowtie().edge_count(), 6);
    }
}
