//! Rebuilding an algebra from its atom graph.
//!
//! In an atomic, complete, exclusive algebra every element is the join of a
//! set of atoms inside some maximal context, and two such descriptions
//! `(D1, A1)`, `(D2, A2)` name the same element exactly when
//! `(D1 \ A1) ∪ A2` and `A1 ∪ (D2 \ A2)` are both maximal contexts. The
//! condition only mentions cliques of the atom graph, so the whole algebra
//! can be recovered from the graph: elements are the classes of clique
//! subsets under this relation, `¬` is complement inside a clique, and
//! `∧`, `∨` are intersection and union inside a shared clique.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use super::{fresh_label, Element, ElementData, PartialBooleanAlgebra, SymbolicElement, Tables};
use crate::graph::{maximal_cliques, Graph, VertexSet};
use crate::{Error, Result};

/// Largest maximal clique the reconstruction will expand.
pub const SYMBOLIC_CLIQUE_LIMIT: usize = 12;

/// Largest total number of clique subsets the reconstruction will compare.
pub const SYMBOLIC_SUBSET_LIMIT: usize = 1 << 14;

type Bits = Vec<u64>;

fn bits(n: usize, vertices: impl IntoIterator<Item = usize>) -> Bits {
    let mut b = vec![0u64; n.div_ceil(64).max(1)];
    for v in vertices {
        b[v / 64] |= 1 << (v % 64);
    }
    b
}

fn union(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

fn minus(a: &Bits, b: &Bits) -> Bits {
    a.iter().zip(b).map(|(x, y)| x & !y).collect()
}

/// Whether `(c1, s1)` and `(c2, s2)` describe the same join: both
/// `(c1 \ s1) ∪ s2` and `s1 ∪ (c2 \ s2)` must be maximal cliques of `g`.
pub fn is_same_join(g: &Graph, c1: &[usize], s1: &[usize], c2: &[usize], s2: &[usize]) -> bool {
    let n = g.len();
    let cliques: HashSet<Bits> = maximal_cliques(g).into_iter().map(|c| bits(n, c)).collect();
    same_join(
        &cliques,
        &bits(n, c1.iter().copied()),
        &bits(n, s1.iter().copied()),
        &bits(n, c2.iter().copied()),
        &bits(n, s2.iter().copied()),
    )
}

fn same_join(cliques: &HashSet<Bits>, c1: &Bits, s1: &Bits, c2: &Bits, s2: &Bits) -> bool {
    cliques.contains(&union(&minus(c1, s1), s2)) && cliques.contains(&union(s1, &minus(c2, s2)))
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.0[root] != root {
            root = self.0[root];
        }
        let mut y = x;
        while self.0[y] != root {
            let next = self.0[y];
            self.0[y] = root;
            y = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Builds the algebra whose elements are the [`is_same_join`] classes of
/// clique subsets of `g`.
///
/// Everything the construction relies on is checked: the relation must be
/// an equivalence, distinct vertices must stay distinct atoms, no nonempty
/// set may collapse to 0, and `¬`, `∧`, `∨` must not depend on the chosen
/// representatives. Any failure means `g` is not the atom graph of an
/// atomic, complete, exclusive algebra and is reported as
/// [`Error::NotAtomGraph`]. Passing these checks is not claimed to be
/// sufficient for being an atom graph.
///
/// Element order: 0, then the atoms in vertex order, then the rest by size
/// of their smallest description. The atom graph of the result is `g`
/// itself, labels included.
pub fn symbolic_from_atom_graph(g: &Graph) -> Result<PartialBooleanAlgebra> {
    let n = g.len();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let cliques = maximal_cliques(g);
    if let Some(c) = cliques.iter().find(|c| c.len() > SYMBOLIC_CLIQUE_LIMIT) {
        return Err(Error::SizeGuard {
            what: "maximal clique",
            size: c.len(),
            limit: SYMBOLIC_CLIQUE_LIMIT,
        });
    }
    let total: usize = cliques.iter().map(|c| 1usize << c.len()).sum();
    if total > SYMBOLIC_SUBSET_LIMIT {
        return Err(Error::SizeGuard {
            what: "clique subsets",
            size: total,
            limit: SYMBOLIC_SUBSET_LIMIT,
        });
    }
    let clique_bits: Vec<Bits> = cliques.iter().map(|c| bits(n, c.iter().copied())).collect();
    let clique_set: HashSet<Bits> = clique_bits.iter().cloned().collect();

    // candidates: (clique id, local mask); offsets[k] is the first id of clique k
    let subset_of = |k: usize, mask: usize| -> VertexSet {
        cliques[k]
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect()
    };
    let mut offsets = Vec::with_capacity(cliques.len());
    let mut candidates: Vec<(usize, usize, Bits)> = Vec::with_capacity(total);
    for (k, c) in cliques.iter().enumerate() {
        offsets.push(candidates.len());
        for mask in 0..1usize << c.len() {
            candidates.push((k, mask, bits(n, subset_of(k, mask))));
        }
    }
    let related = |a: usize, b: usize| {
        let (ka, _, sa) = &candidates[a];
        let (kb, _, sb) = &candidates[b];
        same_join(&clique_set, &clique_bits[*ka], sa, &clique_bits[*kb], sb)
    };

    let mut uf = UnionFind((0..candidates.len()).collect());
    for a in 0..candidates.len() {
        for b in a + 1..candidates.len() {
            // within one clique the relation is equality
            if candidates[a].0 != candidates[b].0 && related(a, b) {
                uf.union(a, b);
            }
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..candidates.len() {
        classes.entry(uf.find(a)).or_default().push(a);
    }
    for members in classes.values() {
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                if !related(a, b) {
                    return Err(Error::NotAtomGraph(format!(
                        "same-join relation is not transitive: {:?} and {:?} are linked but not related",
                        describe(g, &subset_of(candidates[a].0, candidates[a].1)),
                        describe(g, &subset_of(candidates[b].0, candidates[b].1)),
                    )));
                }
            }
        }
        let sizes: HashSet<usize> = members.iter().map(|&a| candidates[a].1.count_ones() as usize).collect();
        if sizes.contains(&0) && sizes.len() > 1 {
            return Err(Error::NotAtomGraph("a nonempty set of atoms joins to 0".into()));
        }
        let singletons: BTreeSet<VertexSet> = members
            .iter()
            .filter(|&&a| candidates[a].1.count_ones() == 1)
            .map(|&a| subset_of(candidates[a].0, candidates[a].1))
            .collect();
        if singletons.len() > 1 {
            let names: Vec<String> = singletons.iter().map(|s| describe(g, s)).collect();
            return Err(Error::NotAtomGraph(format!(
                "distinct atoms {} coincide",
                names.join(" and ")
            )));
        }
    }

    // order classes by their smallest description
    let mut ordered: Vec<(Vec<usize>, (usize, VertexSet))> = classes
        .into_values()
        .map(|members| {
            let key = members
                .iter()
                .map(|&a| {
                    let s = subset_of(candidates[a].0, candidates[a].1);
                    (s.len(), s)
                })
                .min()
                .expect("classes are nonempty");
            (members, key)
        })
        .collect();
    ordered.sort_by(|a, b| a.1.cmp(&b.1));

    let mut class_of = vec![0usize; candidates.len()];
    for (ci, (members, _)) in ordered.iter().enumerate() {
        for &a in members {
            class_of[a] = ci;
        }
    }
    let id = |k: usize, mask: usize| class_of[offsets[k] + mask];

    let mut neg = vec![usize::MAX; ordered.len()];
    let mut meet: HashMap<(usize, usize), usize> = HashMap::new();
    let mut join: HashMap<(usize, usize), usize> = HashMap::new();
    let ill_defined = |op: &str| Error::NotAtomGraph(format!("{op} depends on the chosen representatives"));
    for (k, c) in cliques.iter().enumerate() {
        let full = (1usize << c.len()) - 1;
        for m1 in 0..=full {
            let x = id(k, m1);
            let nx = id(k, full ^ m1);
            if neg[x] != usize::MAX && neg[x] != nx {
                return Err(ill_defined("¬"));
            }
            neg[x] = nx;
            for m2 in m1 + 1..=full {
                let y = id(k, m2);
                let pair = super::key(x, y);
                for (table, value, name) in [(&mut meet, id(k, m1 & m2), "∧"), (&mut join, id(k, m1 | m2), "∨")] {
                    if let Some(prev) = table.insert(pair, value) {
                        if prev != value {
                            return Err(ill_defined(name));
                        }
                    }
                }
            }
        }
    }

    let mut taken: HashSet<String> = g.labels().iter().cloned().collect();
    let elements: Vec<Element> = ordered
        .iter()
        .map(|(members, (size, canonical))| {
            let label = match *size {
                0 => fresh_label("0", &mut taken),
                1 => g.label(canonical[0]).to_string(),
                _ if members
                    .iter()
                    .any(|&a| candidates[a].1 == (1 << cliques[candidates[a].0].len()) - 1) =>
                {
                    fresh_label("1", &mut taken)
                }
                _ => fresh_label(&describe(g, canonical), &mut taken),
            };
            let mut representatives: Vec<(usize, VertexSet)> = members
                .iter()
                .map(|&a| (candidates[a].0, subset_of(candidates[a].0, candidates[a].1)))
                .collect();
            representatives.sort();
            Element {
                label,
                data: ElementData::Symbolic(SymbolicElement { representatives }),
            }
        })
        .collect();

    let zero = id(0, 0);
    let one = id(0, (1 << cliques[0].len()) - 1);
    let split = |t: HashMap<(usize, usize), usize>| -> Vec<(usize, usize, usize)> {
        let mut v: Vec<_> = t.into_iter().map(|((a, b), c)| (a, b, c)).collect();
        v.sort_unstable();
        v
    };
    let meet = split(meet);
    let join = split(join);
    let tables = Tables {
        compatible: meet.iter().map(|&(a, b, _)| (a, b)).collect(),
        meet,
        join,
        neg,
        zero,
        one,
    };
    let b = PartialBooleanAlgebra::assemble(elements, tables, Some(g.clone()))?;

    let found = super::atoms(&b);
    let expected: Vec<usize> = (0..n).map(|v| id_of_vertex(&cliques, &offsets, &class_of, v)).collect();
    if found != expected || super::atom_graph(&b) != *g {
        return Err(Error::NotAtomGraph(
            "atoms of the rebuilt algebra do not match the vertices".into(),
        ));
    }
    Ok(b)
}

fn id_of_vertex(cliques: &[VertexSet], offsets: &[usize], class_of: &[usize], v: usize) -> usize {
    let (k, pos) = cliques
        .iter()
        .enumerate()
        .find_map(|(k, c)| c.iter().position(|&u| u == v).map(|p| (k, p)))
        .expect("every vertex lies in a maximal clique");
    class_of[offsets[k] + (1 << pos)]
}

fn describe(g: &Graph, set: &[usize]) -> String {
    let names: Vec<&str> = set.iter().map(|&v| g.label(v)).collect();
    format!("({})", names.join(" | "))
}
