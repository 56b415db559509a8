//! Finite partial Boolean algebras.
//!
//! An algebra is stored as explicit tables: a reflexive, symmetric
//! compatibility relation, `∧` and `∨` on compatible pairs, and a total
//! `¬`. Elements carry a payload saying where they came from: a projector
//! (from [`generate_pba`]), a class of clique subsets (from
//! [`symbolic_from_atom_graph`]), or nothing (hand-built tables). Every
//! query below reads only the tables, so it works the same for all three.

use std::collections::{HashMap, HashSet};

use crate::exactla::Projector;
use crate::graph::{graph_isomorphic, maximal_cliques, Graph, VertexSet};
use crate::{Error, Result};

mod dump;
mod generate;
mod symbolic;

pub use dump::{pba_from_json_value, pba_to_json_value};
pub use generate::{generate_pba, generate_pba_with_cap, DEFAULT_CLOSURE_CAP};
pub use symbolic::{is_same_join, symbolic_from_atom_graph};

/// Largest context, in atoms, that [`maximal_contexts`] will expand.
pub const CONTEXT_ATOM_LIMIT: usize = 16;

/// Largest algebra [`check_partial_boolean`] will examine exhaustively.
pub const PARTIAL_BOOLEAN_CHECK_LIMIT: usize = 16;

/// A class of `(maximal clique, subset)` pairs naming one element of the
/// algebra rebuilt from a graph. Clique ids index
/// [`maximal_cliques`] of the source graph; subsets are vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicElement {
    pub representatives: Vec<(usize, VertexSet)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementData {
    Projector(Projector),
    Symbolic(SymbolicElement),
    Abstract,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    pub label: String,
    pub data: ElementData,
}

fn key(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug)]
pub struct PartialBooleanAlgebra {
    elements: Vec<Element>,
    compat: Vec<Vec<bool>>,
    meet: HashMap<(usize, usize), usize>,
    join: HashMap<(usize, usize), usize>,
    neg: Vec<usize>,
    zero: usize,
    one: usize,
    source: Option<Graph>,
}

/// Raw tables for [`PartialBooleanAlgebra::from_tables`]. Pairs may be
/// given in either order; the diagonal is filled in automatically.
#[derive(Clone, Debug, Default)]
pub struct Tables {
    pub compatible: Vec<(usize, usize)>,
    pub meet: Vec<(usize, usize, usize)>,
    pub join: Vec<(usize, usize, usize)>,
    pub neg: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

impl PartialBooleanAlgebra {
    /// Builds an algebra from explicit tables, checking the structural
    /// invariants: unique labels, `¬` an involution swapping 0 and 1,
    /// `∧`/`∨` defined exactly on compatible pairs, and 0 and 1 compatible
    /// with everything. The Boolean-subalgebra condition itself is not
    /// checked here; see [`check_partial_boolean`].
    pub fn from_tables(elements: Vec<Element>, tables: Tables) -> Result<Self> {
        Self::assemble(elements, tables, None)
    }

    /// Glues Boolean algebras along shared elements. Each block lists the
    /// element index of every join of atoms, indexed by the atom bitmask,
    /// so a block on `k` atoms has `2^k` entries with the atoms at the
    /// powers of two.
    pub fn from_boolean_blocks(labels: Vec<String>, blocks: &[Vec<usize>]) -> Result<Self> {
        let n = labels.len();
        let mut compatible = Vec::new();
        let mut meet = Vec::new();
        let mut join = Vec::new();
        let mut neg = vec![usize::MAX; n];
        let (mut zero, mut one) = (None, None);
        for block in blocks {
            let size = block.len();
            if !size.is_power_of_two() {
                return Err(Error::InvalidAlgebra(format!(
                    "block of size {size} is not a power of two"
                )));
            }
            if let Some(&bad) = block.iter().find(|&&e| e >= n) {
                return Err(Error::InvalidAlgebra(format!("element index {bad} out of range")));
            }
            let full = size - 1;
            for claim in [(&mut zero, block[0]), (&mut one, block[full])] {
                match claim.0 {
                    Some(prev) if *prev != claim.1 => {
                        return Err(Error::InvalidAlgebra("blocks disagree on 0 or 1".into()))
                    }
                    _ => *claim.0 = Some(claim.1),
                }
            }
            for m1 in 0..size {
                let e = block[m1];
                let complement = block[full ^ m1];
                if neg[e] != usize::MAX && neg[e] != complement {
                    return Err(Error::InvalidAlgebra(format!("blocks disagree on ¬{}", labels[e])));
                }
                neg[e] = complement;
                for m2 in m1 + 1..size {
                    compatible.push((e, block[m2]));
                    meet.push((e, block[m2], block[m1 & m2]));
                    join.push((e, block[m2], block[m1 | m2]));
                }
            }
        }
        if let Some(i) = neg.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidAlgebra(format!("element {} lies in no block", labels[i])));
        }
        let elements = labels
            .into_iter()
            .map(|label| Element {
                label,
                data: ElementData::Abstract,
            })
            .collect();
        let tables = Tables {
            compatible,
            meet,
            join,
            neg,
            zero: zero.ok_or_else(|| Error::InvalidAlgebra("no blocks".into()))?,
            one: one.ok_or_else(|| Error::InvalidAlgebra("no blocks".into()))?,
        };
        Self::from_tables(elements, tables)
    }

    pub(crate) fn assemble(elements: Vec<Element>, t: Tables, source: Option<Graph>) -> Result<Self> {
        let n = elements.len();
        let bad = |msg: String| Err(Error::InvalidAlgebra(msg));
        if n == 0 {
            return bad("no elements".into());
        }
        let mut seen = HashSet::new();
        for e in &elements {
            if !seen.insert(e.label.as_str()) {
                return bad(format!("duplicate label {:?}", e.label));
            }
        }
        if t.neg.len() != n || t.zero >= n || t.one >= n {
            return bad("table sizes do not match the element list".into());
        }
        for (i, &x) in t.neg.iter().enumerate() {
            if x >= n || t.neg[x] != i {
                return bad(format!("¬ is not an involution at {:?}", elements[i].label));
            }
        }
        if t.neg[t.zero] != t.one {
            return bad("¬0 ≠ 1".into());
        }

        let mut compat = vec![vec![false; n]; n];
        for i in 0..n {
            compat[i][i] = true;
        }
        for &(a, b) in &t.compatible {
            if a >= n || b >= n {
                return bad(format!("compatible pair ({a}, {b}) out of range"));
            }
            compat[a][b] = true;
            compat[b][a] = true;
        }
        let fill = |entries: &[(usize, usize, usize)], name: &str| -> Result<HashMap<(usize, usize), usize>> {
            let mut table: HashMap<(usize, usize), usize> = (0..n).map(|i| ((i, i), i)).collect();
            for &(a, b, c) in entries {
                if a >= n || b >= n || c >= n {
                    return Err(Error::InvalidAlgebra(format!("{name} entry out of range")));
                }
                if !compat[a][b] {
                    return Err(Error::InvalidAlgebra(format!(
                        "{name} defined on incompatible pair ({:?}, {:?})",
                        elements[a].label, elements[b].label
                    )));
                }
                if let Some(prev) = table.insert(key(a, b), c) {
                    if prev != c {
                        return Err(Error::InvalidAlgebra(format!(
                            "conflicting {name} for ({:?}, {:?})",
                            elements[a].label, elements[b].label
                        )));
                    }
                }
            }
            Ok(table)
        };
        let meet = fill(&t.meet, "∧")?;
        let join = fill(&t.join, "∨")?;
        for a in 0..n {
            for b in a..n {
                if compat[a][b] && !(meet.contains_key(&(a, b)) && join.contains_key(&(a, b))) {
                    return bad(format!(
                        "∧ or ∨ missing for compatible pair ({:?}, {:?})",
                        elements[a].label, elements[b].label
                    ));
                }
            }
            if !compat[t.zero][a] || !compat[t.one][a] {
                return bad(format!("0 or 1 is not compatible with {:?}", elements[a].label));
            }
        }
        Ok(PartialBooleanAlgebra {
            elements,
            compat,
            meet,
            join,
            neg: t.neg,
            zero: t.zero,
            one: t.one,
            source,
        })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Never true: every algebra contains 0.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i].label
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|e| e.label == label)
    }

    pub fn projector(&self, i: usize) -> Option<&Projector> {
        match &self.elements[i].data {
            ElementData::Projector(p) => Some(p),
            _ => None,
        }
    }

    pub fn index_of_projector(&self, p: &Projector) -> Option<usize> {
        self.elements
            .iter()
            .position(|e| matches!(&e.data, ElementData::Projector(q) if q == p))
    }

    /// Ambient dimension for projector algebras.
    pub fn ambient_dimension(&self) -> Option<usize> {
        self.projector(self.zero).map(Projector::dim)
    }

    /// The graph a symbolic algebra was rebuilt from.
    pub fn source_graph(&self) -> Option<&Graph> {
        self.source.as_ref()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn is_compatible(&self, a: usize, b: usize) -> bool {
        self.compat[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.meet.get(&key(a, b)).copied()
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.join.get(&key(a, b)).copied()
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn neg_table(&self) -> &[usize] {
        &self.neg
    }

    /// `a ≤ b` iff `a ⊙ b` and `a ∧ b = a`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == Some(a)
    }

    /// Compatible pairs `(a, b)` with `a < b`, sorted.
    pub fn compatible_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a + 1..n).filter(move |&b| self.compat[a][b]).map(move |b| (a, b)))
            .collect()
    }
}

/// Minimal nonzero elements, in element order.
pub fn atoms(b: &PartialBooleanAlgebra) -> VertexSet {
    let n = b.len();
    (0..n)
        .filter(|&a| a != b.zero && (0..n).all(|x| x == a || x == b.zero || !b.leq(x, a)))
        .collect()
}

/// Graph on the atoms with an edge for each compatible pair. Vertex labels
/// are the element labels, in the order of [`atoms`].
pub fn atom_graph(b: &PartialBooleanAlgebra) -> Graph {
    atom_graph_of(b, &atoms(b))
}

fn atom_graph_of(b: &PartialBooleanAlgebra, atoms: &[usize]) -> Graph {
    let mut g = Graph::new(atoms.iter().map(|&a| b.label(a).to_string())).expect("labels are unique");
    for (i, &x) in atoms.iter().enumerate() {
        for (j, &y) in atoms.iter().enumerate().skip(i + 1) {
            if b.is_compatible(x, y) {
                g.add_edge(i, j).expect("distinct in-range vertices");
            }
        }
    }
    g
}

struct BitSet(Vec<u64>);

impl BitSet {
    fn new(n: usize) -> Self {
        BitSet(vec![0; n.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersects(&self, other: &BitSet) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}

/// Logical exclusivity: whenever `a ≤ c` and `b ≤ ¬c` for some `c`, the
/// pair `a, b` is compatible.
pub fn is_exclusive(b: &PartialBooleanAlgebra) -> bool {
    exclusivity_violation(b).is_none()
}

/// An exclusive but incompatible pair, if there is one.
pub fn exclusivity_violation(b: &PartialBooleanAlgebra) -> Option<(usize, usize)> {
    let n = b.len();
    // above[x] = {c : x ≤ c}; below_neg[x] = {c : x ≤ ¬c}
    let mut above: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    let mut below_neg: Vec<BitSet> = (0..n).map(|_| BitSet::new(n)).collect();
    for (&(x, y), &m) in &b.meet {
        for (lo, hi) in [(x, y), (y, x)] {
            if m == lo {
                above[lo].insert(hi);
                below_neg[lo].insert(b.neg(hi));
            }
        }
    }
    for x in 0..n {
        for y in x + 1..n {
            if !b.is_compatible(x, y) && above[x].intersects(&below_neg[y]) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Largest number of atoms in a maximal context, i.e. the clique number of
/// the atom graph.
pub fn pba_dimension(b: &PartialBooleanAlgebra) -> usize {
    maximal_cliques(&atom_graph(b)).iter().map(Vec::len).max().unwrap_or(0)
}

/// A maximal Boolean subalgebra: `elements[m]` is the join of the atoms
/// selected by bitmask `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Context {
    pub atoms: Vec<usize>,
    pub elements: Vec<usize>,
}

impl Context {
    /// `(bitmask, element)` pairs.
    pub fn masks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.elements.iter().copied().enumerate()
    }
}

/// One Boolean subalgebra per maximal clique of the atom graph, each
/// checked to be closed under `¬`, `∧`, `∨` with the expected tables.
pub fn maximal_contexts(b: &PartialBooleanAlgebra) -> Result<Vec<Context>> {
    let atom_list = atoms(b);
    let g = atom_graph_of(b, &atom_list);
    maximal_cliques(&g)
        .into_iter()
        .map(|clique| {
            let atoms: Vec<usize> = clique.iter().map(|&v| atom_list[v]).collect();
            expand_context(b, atoms)
        })
        .collect()
}

fn expand_context(b: &PartialBooleanAlgebra, atoms: Vec<usize>) -> Result<Context> {
    let k = atoms.len();
    if k > CONTEXT_ATOM_LIMIT {
        return Err(Error::SizeGuard {
            what: "context",
            size: k,
            limit: CONTEXT_ATOM_LIMIT,
        });
    }
    let size = 1usize << k;
    let mut elements = vec![b.zero; size];
    for m in 1..size {
        let low = m.trailing_zeros() as usize;
        let rest = elements[m & (m - 1)];
        elements[m] = b.join(rest, atoms[low]).ok_or_else(|| {
            Error::InvalidAlgebra(format!(
                "join of {:?} and atom {:?} is undefined",
                b.label(rest),
                b.label(atoms[low])
            ))
        })?;
    }
    let distinct: HashSet<_> = elements.iter().collect();
    if distinct.len() != size {
        return Err(Error::InvalidAlgebra("joins of distinct atom sets coincide".into()));
    }
    let full = size - 1;
    for m1 in 0..size {
        let x = elements[m1];
        if b.neg(x) != elements[full ^ m1] {
            return Err(Error::InvalidAlgebra(format!(
                "context not closed under ¬ at {:?}",
                b.label(x)
            )));
        }
        for m2 in m1 + 1..size {
            let y = elements[m2];
            if b.meet(x, y) != Some(elements[m1 & m2]) || b.join(x, y) != Some(elements[m1 | m2]) {
                return Err(Error::InvalidAlgebra(format!(
                    "context operations disagree at ({:?}, {:?})",
                    b.label(x),
                    b.label(y)
                )));
            }
        }
    }
    Ok(Context { atoms, elements })
}

/// Isomorphism of atomic, complete, exclusive algebras, decided on their
/// atom graphs.
pub fn pba_isomorphic(b1: &PartialBooleanAlgebra, b2: &PartialBooleanAlgebra) -> Result<bool> {
    if !is_exclusive(b1) || !is_exclusive(b2) {
        return Err(Error::NotExclusive);
    }
    Ok(graph_isomorphic(&atom_graph(b1), &atom_graph(b2)).is_some())
}

/// Checks, for every pairwise-compatible subset `S`, that the closure of
/// `S` under the algebra's operations is pairwise compatible and satisfies
/// the Boolean algebra laws. Exhaustive, so limited to small algebras.
pub fn check_partial_boolean(b: &PartialBooleanAlgebra) -> Result<bool> {
    let n = b.len();
    if n > PARTIAL_BOOLEAN_CHECK_LIMIT {
        return Err(Error::SizeGuard {
            what: "algebra",
            size: n,
            limit: PARTIAL_BOOLEAN_CHECK_LIMIT,
        });
    }
    let mut ok = true;
    let mut current = Vec::new();
    compatible_subsets(b, 0, &mut current, &mut |s| {
        ok = ok && closure_is_boolean(b, s);
        ok
    });
    Ok(ok)
}

/// Depth-first enumeration of cliques of the compatibility relation; `f`
/// returning false stops the search.
fn compatible_subsets(
    b: &PartialBooleanAlgebra,
    start: usize,
    current: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if !f(current) {
        return false;
    }
    for x in start..b.len() {
        if current.iter().all(|&y| b.is_compatible(x, y)) {
            current.push(x);
            let go_on = compatible_subsets(b, x + 1, current, f);
            current.pop();
            if !go_on {
                return false;
            }
        }
    }
    true
}

fn closure_is_boolean(b: &PartialBooleanAlgebra, seed: &[usize]) -> bool {
    let mut set: Vec<usize> = vec![b.zero, b.one];
    set.extend_from_slice(seed);
    set.sort_unstable();
    set.dedup();
    let mut i = 0;
    while i < set.len() {
        let x = set[i];
        let mut fresh = vec![b.neg(x)];
        for &y in &set[..=i] {
            match (b.meet(x, y), b.join(x, y)) {
                (Some(m), Some(j)) => fresh.extend([m, j]),
                _ => return false,
            }
        }
        for f in fresh {
            if !set.contains(&f) {
                set.push(f);
            }
        }
        i += 1;
    }
    let m = |x, y| b.meet(x, y).expect("closed set is pairwise compatible");
    let j = |x, y| b.join(x, y).expect("closed set is pairwise compatible");
    for &x in &set {
        if m(x, b.neg(x)) != b.zero || j(x, b.neg(x)) != b.one || m(x, b.one) != x || j(x, b.zero) != x {
            return false;
        }
        for &y in &set {
            if m(x, j(x, y)) != x || j(x, m(x, y)) != x {
                return false;
            }
            for &z in &set {
                if m(x, m(y, z)) != m(m(x, y), z)
                    || j(x, j(y, z)) != j(j(x, y), z)
                    || m(x, j(y, z)) != j(m(x, y), m(x, z))
                {
                    return false;
                }
            }
        }
    }
    true
}

/// `base`, or `base` with primes appended, whichever is not yet taken.
pub(crate) fn fresh_label(base: &str, taken: &mut HashSet<String>) -> String {
    let mut label = base.to_string();
    while taken.contains(&label) {
        label.push('\'');
    }
    taken.insert(label.clone());
    label
}
