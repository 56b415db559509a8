use num_traits::{One, Signed, Zero};

use super::is_state;
use crate::exactla::{Rational, RationalMatrix};
use crate::pba::{atom_graph, atoms, is_exclusive, maximal_contexts, PartialBooleanAlgebra};
use crate::{Error, Result};

/// Extends a state on the atom graph of an exclusive algebra to the whole
/// algebra: an element that is the join of atoms `A` in some context gets
/// `Σ_{a ∈ A} p(a)`. `p` is indexed like [`atoms`].
pub fn extend_state_to_pba(b: &PartialBooleanAlgebra, p: &[Rational]) -> Result<Vec<Rational>> {
    if !is_exclusive(b) {
        return Err(Error::NotExclusive);
    }
    let atom_list = atoms(b);
    if p.len() != atom_list.len() {
        return Err(Error::DimensionMismatch {
            expected: atom_list.len(),
            found: p.len(),
        });
    }
    if !is_state(&atom_graph(b), p) {
        return Err(Error::NotState("values do not form a state on the atom graph".into()));
    }
    let mut position = vec![usize::MAX; b.len()];
    for (i, &a) in atom_list.iter().enumerate() {
        position[a] = i;
    }

    let mut values: Vec<Option<Rational>> = vec![None; b.len()];
    for context in maximal_contexts(b)? {
        let mut sums = vec![Rational::zero(); context.elements.len()];
        for (mask, element) in context.masks() {
            if mask > 0 {
                let low = mask.trailing_zeros() as usize;
                sums[mask] = &sums[mask & (mask - 1)] + &p[position[context.atoms[low]]];
            }
            match &values[element] {
                Some(v) if *v != sums[mask] => {
                    return Err(Error::InvalidAlgebra(format!(
                        "element {:?} gets different values in different contexts",
                        b.label(element)
                    )))
                }
                Some(_) => {}
                None => values[element] = Some(sums[mask].clone()),
            }
        }
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| {
            v.ok_or_else(|| {
                Error::InvalidAlgebra(format!(
                    "element {:?} is not a join of atoms of one context",
                    b.label(i)
                ))
            })
        })
        .collect()
}

/// Values of `s` on the atoms, in the order of [`atoms`].
pub fn restrict_pba_state(b: &PartialBooleanAlgebra, s: &[Rational]) -> Result<Vec<Rational>> {
    if s.len() != b.len() {
        return Err(Error::DimensionMismatch {
            expected: b.len(),
            found: s.len(),
        });
    }
    Ok(atoms(b).into_iter().map(|a| s[a].clone()).collect())
}

/// `s(0) = 0`, `s(¬x) = 1 − s(x)`, and `s(x ∨ y) + s(x ∧ y) = s(x) + s(y)`
/// on every compatible pair, all exactly, with every value in `[0, 1]`.
pub fn verify_pba_state(b: &PartialBooleanAlgebra, s: &[Rational]) -> bool {
    if s.len() != b.len() || !s[b.zero()].is_zero() {
        return false;
    }
    if s.iter().any(|x| x.is_negative() || *x > Rational::one()) {
        return false;
    }
    if (0..b.len()).any(|x| s[b.neg(x)] != Rational::one() - &s[x]) {
        return false;
    }
    b.compatible_pairs().into_iter().all(|(x, y)| {
        let (m, j) = (b.meet(x, y).expect("compatible"), b.join(x, y).expect("compatible"));
        &s[j] + &s[m] == &s[x] + &s[y]
    })
}

/// `tr(ρP)` for every element of a projector algebra, with `ρ` a rational
/// symmetric matrix of trace 1. Positivity of `ρ` is not checked; a state
/// that is not positive shows up as values outside `[0, 1]`.
pub fn trace_state(b: &PartialBooleanAlgebra, rho: &RationalMatrix) -> Result<Vec<Rational>> {
    if !rho.is_square() || !rho.is_symmetric() || !rho.trace().is_one() {
        return Err(Error::InvalidDensity(
            "ρ must be square, symmetric and of trace 1".into(),
        ));
    }
    (0..b.len())
        .map(|i| {
            b.projector(i)
                .ok_or_else(|| Error::InvalidAlgebra("trace states need a projector algebra".into()))?
                .expectation(rho)
        })
        .collect()
}
