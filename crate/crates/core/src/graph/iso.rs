use super::cliques::{counts_from, maximal_cliques};
use super::Graph;

/// Finds an adjacency-preserving bijection `V(g1) → V(g2)`, returned as
/// `map[i] = image of vertex i`.
///
/// Plain backtracking. Candidates must agree on degree and on the number
/// of maximal cliques through the vertex, and vertices of `g1` are matched
/// in an order where each one has as many already-mapped neighbours as
/// possible. Worst case exponential; fine for graphs of a few dozen
/// vertices.
pub fn graph_isomorphic(g1: &Graph, g2: &Graph) -> Option<Vec<usize>> {
    let n = g1.len();
    if n != g2.len() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let inv1 = invariants(g1);
    let inv2 = invariants(g2);
    let mut s1 = inv1.clone();
    let mut s2 = inv2.clone();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return None;
    }

    let order = matching_order(g1);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g1, g2, &inv1, &inv2, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn invariants(g: &Graph) -> Vec<(usize, usize)> {
    let counts = counts_from(g.len(), &maximal_cliques(g));
    (0..g.len()).map(|v| (g.degree(v), counts[v])).collect()
}

/// Greedy order: repeatedly take the unplaced vertex with the most placed
/// neighbours, breaking ties by degree then index.
fn matching_order(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                links[a]
                    .cmp(&links[b])
                    .then(g.degree(a).cmp(&g.degree(b)))
                    .then(b.cmp(&a))
            })
            .expect("an unplaced vertex remains");
        placed[v] = true;
        for &u in g.neighbors(v) {
            links[u] += 1;
        }
        order.push(v);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g1: &Graph,
    g2: &Graph,
    inv1: &[(usize, usize)],
    inv2: &[(usize, usize)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for cand in 0..g2.len() {
        if used[cand] || inv1[v] != inv2[cand] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g1.adjacent(u, v) == g2.adjacent(map[u], cand));
        if !consistent {
            continue;
        }
        map[v] = cand;
        used[cand] = true;
        if extend(g1, g2, inv1, inv2, order, depth + 1, map, used) {
            return true;
        }
        used[cand] = false;
        map[v] = usize::MAX;
    }
    false
}

/// `true` iff `map` is a bijection preserving both edges and non-edges.
pub fn is_isomorphism(g1: &Graph, g2: &Graph, map: &[usize]) -> bool {
    let n = g1.len();
    if n != g2.len() || map.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in map {
        if m >= n || std::mem::replace(&mut seen[m], true) {
            return false;
        }
    }
    (0..n).all(|a| (a + 1..n).all(|b| g1.adjacent(a, b) == g2.adjacent(map[a], map[b])))
}
