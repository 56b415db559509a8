use num_traits::Zero;

use super::{Graph, VertexSet, WeightVector};
use crate::exactla::Rational;
use crate::{Error, Result};

/// Maximum weight of an independent set, with one set attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Independence {
    pub value: Rational,
    pub witness: VertexSet,
}

/// `α(G; w)`, computed exactly by branch and bound.
///
/// Branches on the heaviest remaining candidate. The bound at each node is
/// the current weight plus, for a greedy partition of the candidates into
/// cliques, the heaviest vertex of each clique; an independent set meets
/// each clique at most once. Exponential in the worst case; intended for
/// graphs up to a few dozen vertices.
pub fn weighted_independence(g: &Graph, w: &WeightVector) -> Result<Independence> {
    if w.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            found: w.len(),
        });
    }
    let mut order: Vec<usize> = (0..g.len()).collect();
    // heaviest first; index breaks ties so the search is deterministic
    order.sort_by(|&a, &b| w[b].cmp(&w[a]).then(a.cmp(&b)));
    let mut search = Search {
        g,
        w: w.as_slice(),
        best: Independence {
            value: Rational::zero(),
            witness: Vec::new(),
        },
        chosen: Vec::new(),
    };
    search.branch(order, Rational::zero());
    let mut best = search.best;
    best.witness.sort_unstable();
    Ok(best)
}

struct Search<'a> {
    g: &'a Graph,
    w: &'a [Rational],
    best: Independence,
    chosen: Vec<usize>,
}

impl Search<'_> {
    fn branch(&mut self, candidates: Vec<usize>, current: Rational) {
        if current > self.best.value {
            self.best.value = current.clone();
            self.best.witness = self.chosen.clone();
        }
        if candidates.is_empty() || current.clone() + self.clique_cover_bound(&candidates) <= self.best.value {
            return;
        }
        let v = candidates[0];
        let rest: Vec<usize> = candidates[1..].to_vec();

        let with_v: Vec<usize> = rest.iter().copied().filter(|&u| !self.g.adjacent(u, v)).collect();
        self.chosen.push(v);
        self.branch(with_v, current.clone() + &self.w[v]);
        self.chosen.pop();

        self.branch(rest, current);
    }

    fn clique_cover_bound(&self, candidates: &[usize]) -> Rational {
        // candidates arrive heaviest first, so the first member of each
        // greedy clique is its heaviest
        let mut cliques: Vec<Vec<usize>> = Vec::new();
        let mut bound = Rational::zero();
        for &v in candidates {
            match cliques.iter_mut().find(|c| c.iter().all(|&u| self.g.adjacent(u, v))) {
                Some(c) => c.push(v),
                None => {
                    bound += &self.w[v];
                    cliques.push(vec![v]);
                }
            }
        }
        bound
    }
}

/// Every independent set (including the empty set), each sorted.
///
/// The caller is responsible for keeping the graph small; the count can be
/// exponential.
pub fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(g: &Graph, next: usize, current: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
        if next == g.len() {
            out.push(current.clone());
            return;
        }
        rec(g, next + 1, current, out);
        if current.iter().all(|&u| !g.adjacent(u, next)) {
            current.push(next);
            rec(g, next + 1, current, out);
            current.pop();
        }
    }
    rec(g, 0, &mut current, &mut out);
    out
}
