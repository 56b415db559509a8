//! States on graphs and on partial Boolean algebras.
//!
//! A state on a graph gives each vertex a value in `[0, 1]` so that every
//! maximal clique sums to exactly 1; a substate only asks for sums of at
//! most 1. A 0-1 state is the same thing as a set of vertices meeting every
//! maximal clique exactly once, which [`zero_one_state`] finds by exact
//! cover search.
//!
//! Values are exact rationals throughout, except in [`quantum`], which
//! evaluates floating density matrices.

use num_traits::{One, Signed, Zero};

use crate::exactla::{feasible_point, Rational, RationalMatrix};
use crate::extension::context_extension;
use crate::graph::{maximal_cliques, Graph, VertexSet};
use crate::{Error, Result};

mod pba_state;
pub mod quantum;

pub use pba_state::{extend_state_to_pba, restrict_pba_state, trace_state, verify_pba_state};
pub use quantum::{quantum_state_eval, quantum_state_eval_rays, DensityMatrix};

fn in_unit_interval(x: &Rational) -> bool {
    !x.is_negative() && *x <= Rational::one()
}

fn clique_sums(g: &Graph, p: &[Rational]) -> Vec<Rational> {
    maximal_cliques(g)
        .iter()
        .map(|c| c.iter().fold(Rational::zero(), |acc, &v| acc + &p[v]))
        .collect()
}

/// Values in `[0, 1]` with every maximal clique summing to 1.
pub fn is_state(g: &Graph, p: &[Rational]) -> bool {
    p.len() == g.len() && p.iter().all(in_unit_interval) && clique_sums(g, p).iter().all(One::is_one)
}

/// Values in `[0, 1]` with every maximal clique summing to at most 1.
pub fn is_substate(g: &Graph, p: &[Rational]) -> bool {
    p.len() == g.len() && p.iter().all(in_unit_interval) && clique_sums(g, p).iter().all(|s| *s <= Rational::one())
}

/// Some state on `g`, found by exact LP, or `None` if there is none.
///
/// An isolated vertex is its own maximal clique, so every state gives it
/// the value 1.
pub fn find_state(g: &Graph) -> Result<Option<Vec<Rational>>> {
    find_state_with(g, None)
}

/// As [`find_state`], optionally with one extra linear equality
/// `Σ w_i p_i = target`.
pub(crate) fn find_state_with(g: &Graph, extra: Option<(&[Rational], &Rational)>) -> Result<Option<Vec<Rational>>> {
    let n = g.len();
    let cliques = maximal_cliques(g);
    let rows = cliques.len() + usize::from(extra.is_some());
    let mut a = RationalMatrix::zeros(rows, n);
    let mut b = vec![Rational::one(); cliques.len()];
    for (r, c) in cliques.iter().enumerate() {
        for &v in c {
            a.set(r, v, Rational::one());
        }
    }
    if let Some((w, target)) = extra {
        if w.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: w.len(),
            });
        }
        for (v, wv) in w.iter().enumerate() {
            a.set(cliques.len(), v, wv.clone());
        }
        b.push(target.clone());
    }
    if n == 0 {
        return Ok(b.iter().all(Zero::is_zero).then(Vec::new));
    }
    feasible_point(&a, &b)
}

/// Outcome of the 0-1 state search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroOneSearch {
    /// Vertices set to 1, sorted; they meet every maximal clique once.
    pub witness: Option<VertexSet>,
    /// Search tree nodes visited. When `witness` is `None` this is the
    /// size of the exhausted tree.
    pub nodes: usize,
}

impl ZeroOneSearch {
    pub fn exists(&self) -> bool {
        self.witness.is_some()
    }

    /// The 0-1 state as a vector.
    pub fn state(&self, n: usize) -> Option<Vec<Rational>> {
        self.witness.as_ref().map(|w| {
            let mut p = vec![Rational::zero(); n];
            for &v in w {
                p[v] = Rational::one();
            }
            p
        })
    }
}

/// Exact cover of the maximal cliques by vertices: each chosen vertex
/// covers the cliques containing it, and every clique must be covered
/// exactly once. Branches on the uncovered clique with the fewest usable
/// vertices.
struct CoverSearch {
    cliques: Vec<VertexSet>,
    cliques_of: Vec<Vec<usize>>,
    covered: Vec<bool>,
    usable: Vec<bool>,
    chosen: Vec<usize>,
    nodes: usize,
}

impl CoverSearch {
    fn new(g: &Graph) -> Self {
        let mut cliques = maximal_cliques(g);
        // smaller cliques first, so ties in the branching rule go to them
        cliques.sort_by_key(Vec::len);
        let mut cliques_of = vec![Vec::new(); g.len()];
        for (k, c) in cliques.iter().enumerate() {
            for &v in c {
                cliques_of[v].push(k);
            }
        }
        CoverSearch {
            covered: vec![false; cliques.len()],
            usable: vec![true; g.len()],
            cliques,
            cliques_of,
            chosen: Vec::new(),
            nodes: 0,
        }
    }

    /// Calls `found` on each exact cover until it returns `false`. Returns
    /// `false` if stopped early.
    fn run(&mut self, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        self.nodes += 1;
        let mut best: Option<(usize, usize)> = None;
        for (k, c) in self.cliques.iter().enumerate() {
            if self.covered[k] {
                continue;
            }
            let free = c.iter().filter(|&&v| self.usable[v]).count();
            if best.is_none_or(|(_, f)| free < f) {
                best = Some((k, free));
            }
        }
        let Some((k, free)) = best else {
            let mut w = self.chosen.clone();
            w.sort_unstable();
            return found(&w);
        };
        if free == 0 {
            return true;
        }
        let options: Vec<usize> = self.cliques[k].iter().copied().filter(|&v| self.usable[v]).collect();
        for v in options {
            // choosing v covers its cliques and rules out every vertex in them
            let mut newly_covered = Vec::new();
            let mut disabled = Vec::new();
            for &c in &self.cliques_of[v] {
                debug_assert!(!self.covered[c]);
                self.covered[c] = true;
                newly_covered.push(c);
                for &u in &self.cliques[c] {
                    if self.usable[u] {
                        self.usable[u] = false;
                        disabled.push(u);
                    }
                }
            }
            self.chosen.push(v);
            let go_on = self.run(found);
            self.chosen.pop();
            for c in newly_covered {
                self.covered[c] = false;
            }
            for u in disabled {
                self.usable[u] = true;
            }
            if !go_on {
                return false;
            }
        }
        true
    }
}

/// A 0-1 state, if one exists, with the independent set of vertices set
/// to 1 as witness.
pub fn zero_one_state(g: &Graph) -> ZeroOneSearch {
    let mut search = CoverSearch::new(g);
    let mut witness = None;
    search.run(&mut |w| {
        witness = Some(w.to_vec());
        false
    });
    ZeroOneSearch {
        witness,
        nodes: search.nodes,
    }
}

/// Every 0-1 state, as sorted witness sets in search order.
pub fn all_zero_one_states(g: &Graph) -> Vec<VertexSet> {
    let mut all = Vec::new();
    for_each_zero_one_state(g, &mut |w| {
        all.push(w.to_vec());
        true
    });
    all
}

/// Visits 0-1 state witnesses until `f` returns `false`.
pub fn for_each_zero_one_state(g: &Graph, f: &mut dyn FnMut(&[usize]) -> bool) {
    CoverSearch::new(g).run(f);
}

/// The unique state on the context extension of `g` that agrees with the
/// substate `q` on the original vertices: each added vertex `x_k` gets
/// `1 − Σ_{i ∈ C_k} q(i)`. Vertex order matches [`context_extension`].
pub fn extend_substate(g: &Graph, q: &[Rational]) -> Result<Vec<Rational>> {
    if q.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: g.len(),
            found: q.len(),
        });
    }
    if !is_substate(g, q) {
        return Err(Error::NotSubstate(
            "a value lies outside [0, 1] or a maximal clique sums above 1".into(),
        ));
    }
    let mut p = q.to_vec();
    p.extend(clique_sums(g, q).into_iter().map(|s| Rational::one() - s));
    debug_assert!(is_state(&context_extension(g), &p));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::rat;

    fn all(n: usize, x: Rational) -> Vec<Rational> {
        vec![x; n]
    }

    #[test]
    fn state_examples() {
        assert!(is_state(&catalog::complete(3), &all(3, rat(1, 3))));
        assert!(is_state(&catalog::pentagon(), &all(5, rat(1, 2))));
        assert!(!is_state(&catalog::pentagon(), &all(5, rat(1, 3))));
        assert!(is_substate(&catalog::pentagon(), &all(5, rat(1, 3))));
        assert!(!is_substate(&catalog::pentagon(), &all(5, rat(2, 3))));
        assert!(!is_state(&catalog::pentagon(), &all(4, rat(1, 2))));
        assert!(!is_substate(&catalog::edgeless(1), &[rat(-1, 2)]));
    }

    #[test]
    fn find_state_examples() {
        let p = find_state(&catalog::pentagon()).unwrap().unwrap();
        assert_eq!(p, all(5, rat(1, 2)));
        let k3 = catalog::complete(3);
        assert!(is_state(&k3, &find_state(&k3).unwrap().unwrap()));
        // isolated vertices are forced to 1
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let p = find_state(&g).unwrap().unwrap();
        assert_eq!(p[2], rat(1, 1));
        assert_eq!(find_state(&catalog::edgeless(0)).unwrap(), Some(vec![]));
    }

    #[test]
    fn zero_one_examples() {
        let k3 = zero_one_state(&catalog::complete(3));
        assert!(k3.exists());
        assert_eq!(k3.witness.as_ref().unwrap().len(), 1);
        assert!(!zero_one_state(&catalog::pentagon()).exists());
        let ext = context_extension(&catalog::pentagon());
        let all_states = all_zero_one_states(&ext);
        assert!(all_states.contains(&(5..10).collect::<Vec<_>>()));
        for w in &all_states {
            assert!(is_state(
                &ext,
                &ZeroOneSearch {
                    witness: Some(w.clone()),
                    nodes: 0
                }
                .state(10)
                .unwrap()
            ));
        }
    }

    #[test]
    fn zero_one_matches_brute_force() {
        // oracle: try every 0-1 vector
        for g in catalog::nonisomorphic_graphs_up_to(6) {
            let n = g.len();
            let brute = (0u32..1 << n).any(|mask| {
                let p: Vec<Rational> = (0..n)
                    .map(|v| Rational::from_integer(((mask >> v) & 1).into()))
                    .collect();
                is_state(&g, &p)
            });
            let search = zero_one_state(&g);
            assert_eq!(search.exists(), brute, "{g:?}");
            if let Some(p) = search.state(n) {
                assert!(is_state(&g, &p));
            }
        }
    }

    #[test]
    fn all_zero_one_counts() {
        // K3: any single vertex; path 0-1-2: {1} or {0, 2}
        assert_eq!(all_zero_one_states(&catalog::complete(3)).len(), 3);
        let mut p3 = all_zero_one_states(&catalog::path(3));
        p3.sort();
        assert_eq!(p3, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn substate_extension_examples() {
        let c5 = catalog::pentagon();
        let p = extend_substate(&c5, &all(5, Rational::zero())).unwrap();
        assert_eq!(&p[5..], &all(5, Rational::one())[..]);
        let p = extend_substate(&c5, &all(5, rat(1, 2))).unwrap();
        assert_eq!(&p[5..], &all(5, Rational::zero())[..]);
        let k3 = catalog::complete(3);
        let p = extend_substate(&k3, &[rat(1, 2), rat(1, 4), Rational::zero()]).unwrap();
        assert_eq!(p[3], rat(1, 4));
        assert!(matches!(
            extend_substate(&k3, &all(3, rat(1, 2))),
            Err(Error::NotSubstate(_))
        ));
    }
}
