use std::collections::{HashMap, HashSet};

use super::{fresh_label, Element, ElementData, PartialBooleanAlgebra, Tables};
use crate::exactla::{Projector, RationalMatrix};
use crate::{Error, Result};

pub const DEFAULT_CLOSURE_CAP: usize = 4096;

/// Closure of the labelled generators under `¬` and under `∧`, `∨` of
/// commuting pairs, with compatibility = exact commutation.
///
/// Elements are numbered in discovery order: `0`, `1`, the generators, then
/// derived elements. Derived labels spell out how each element was first
/// reached: `!x`, `(x & y)`, `(x | y)`.
pub fn generate_pba(generators: &[(String, Projector)]) -> Result<PartialBooleanAlgebra> {
    generate_pba_with_cap(generators, DEFAULT_CLOSURE_CAP)
}

pub fn generate_pba_with_cap(generators: &[(String, Projector)], cap: usize) -> Result<PartialBooleanAlgebra> {
    let d = generators
        .first()
        .map(|(_, p)| p.dim())
        .ok_or_else(|| Error::InvalidAlgebra("no generators".into()))?;
    if let Some((_, p)) = generators.iter().find(|(_, p)| p.dim() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: p.dim(),
        });
    }

    let mut taken: HashSet<String> = HashSet::new();
    let gen_labels: Vec<String> = generators.iter().map(|(l, _)| fresh_label(l, &mut taken)).collect();
    let mut closure = Closure {
        cap,
        taken,
        projectors: Vec::new(),
        labels: Vec::new(),
        index: HashMap::new(),
    };
    let zero_label = fresh_label("0", &mut closure.taken);
    let one_label = fresh_label("1", &mut closure.taken);
    closure.insert_labeled(Projector::zero(d), zero_label)?;
    closure.insert_labeled(Projector::identity(d), one_label)?;
    for ((_, p), label) in generators.iter().zip(gen_labels) {
        closure.insert_labeled(p.clone(), label)?;
    }

    let mut neg = Vec::new();
    let mut compatible = Vec::new();
    let mut meet = Vec::new();
    let mut join = Vec::new();
    let mut i = 0;
    while i < closure.projectors.len() {
        let p = closure.projectors[i].clone();
        let label = closure.labels[i].clone();
        neg.push(closure.insert(p.complement(), || format!("!{label}"))?);
        for j in 0..i {
            let q = closure.projectors[j].clone();
            if let Some((m, jn)) = p.meet_join(&q)? {
                let other = &closure.labels[j];
                let (ml, jl) = (format!("({other} & {label})"), format!("({other} | {label})"));
                let mi = closure.insert(m, || ml)?;
                let ji = closure.insert(jn, || jl)?;
                compatible.push((j, i));
                meet.push((j, i, mi));
                join.push((j, i, ji));
            }
        }
        i += 1;
    }

    let elements = closure
        .projectors
        .into_iter()
        .zip(closure.labels)
        .map(|(p, label)| Element {
            label,
            data: ElementData::Projector(p),
        })
        .collect();
    let tables = Tables {
        compatible,
        meet,
        join,
        neg,
        zero: 0,
        one: 1,
    };
    PartialBooleanAlgebra::assemble(elements, tables, None)
}

struct Closure {
    cap: usize,
    taken: HashSet<String>,
    projectors: Vec<Projector>,
    labels: Vec<String>,
    index: HashMap<RationalMatrix, usize>,
}

impl Closure {
    fn insert(&mut self, p: Projector, label: impl FnOnce() -> String) -> Result<usize> {
        if let Some(&i) = self.index.get(p.matrix()) {
            return Ok(i);
        }
        let label = fresh_label(&label(), &mut self.taken);
        self.push(p, label)
    }

    /// Like `insert`, with a label already reserved in `taken`.
    fn insert_labeled(&mut self, p: Projector, label: String) -> Result<usize> {
        match self.index.get(p.matrix()) {
            Some(&i) => Ok(i),
            None => self.push(p, label),
        }
    }

    fn push(&mut self, p: Projector, label: String) -> Result<usize> {
        if self.projectors.len() >= self.cap {
            return Err(Error::ClosureBlowup { cap: self.cap });
        }
        let i = self.projectors.len();
        self.index.insert(p.matrix().clone(), i);
        self.projectors.push(p);
        self.labels.push(label);
        Ok(i)
    }
}
