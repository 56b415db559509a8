use num_traits::{One, Signed};

use super::{independent_sets, Graph};
use crate::exactla::{feasible_point, Rational, RationalMatrix};
use crate::{Error, Result};

/// Largest graph [`vp_membership`] will enumerate independent sets for.
pub const VP_VERTEX_LIMIT: usize = 20;

/// Whether `x` lies in the vertex packing polytope: the convex hull of the
/// incidence vectors of all independent sets.
///
/// Enumerates the independent sets and solves the exact feasibility LP
/// `Σ λ_I 1_I = x, Σ λ_I = 1, λ ≥ 0`.
pub fn vp_membership(g: &Graph, x: &[Rational]) -> Result<bool> {
    let n = g.len();
    if n > VP_VERTEX_LIMIT {
        return Err(Error::SizeGuard {
            what: "graph",
            size: n,
            limit: VP_VERTEX_LIMIT,
        });
    }
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if x.iter().any(|v| v.is_negative() || *v > Rational::one()) {
        return Ok(false);
    }
    let sets = independent_sets(g);
    let mut a = RationalMatrix::zeros(n + 1, sets.len());
    for (j, s) in sets.iter().enumerate() {
        for &v in s {
            a.set(v, j, Rational::one());
        }
        a.set(n, j, Rational::one());
    }
    let mut b = x.to_vec();
    b.push(Rational::one());
    Ok(feasible_point(&a, &b)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactla::{int, rat};
    use num_traits::Zero;

    #[test]
    fn pentagon_examples() {
        let g = catalog::pentagon();
        assert!(vp_membership(&g, &vec![Rational::zero(); 5]).unwrap());
        assert!(!vp_membership(&g, &vec![int(1); 5]).unwrap());
    }

    #[test]
    fn pentagon_half_point_is_outside() {
        // oracle: every independent set of C5 has at most two vertices, so
        // every point of the hull has coordinate sum at most 2; all-1/2
        // sums to 5/2
        let g = catalog::pentagon();
        let max_size = independent_sets(&g).iter().map(Vec::len).max().unwrap();
        assert_eq!(max_size, 2);
        let half = vec![rat(1, 2); 5];
        let sum = half.iter().fold(Rational::zero(), |a, x| a + x);
        assert!(sum > int(max_size as i64));
        assert!(!vp_membership(&g, &half).unwrap());
    }

    #[test]
    fn pentagon_average_of_pairs_is_inside() {
        // average of the five non-adjacent pairs {i, i+2}
        let g = catalog::pentagon();
        let mut avg = vec![Rational::zero(); 5];
        for i in 0..5 {
            let pair = [i, (i + 2) % 5];
            assert!(g.is_independent(&pair));
            for v in pair {
                avg[v] += rat(1, 5);
            }
        }
        assert_eq!(avg, vec![rat(2, 5); 5]);
        assert!(vp_membership(&g, &avg).unwrap());
        // just past the facet Σx ≤ 2
        assert!(!vp_membership(&g, &vec![rat(41, 100); 5]).unwrap());
    }

    #[test]
    fn size_guard() {
        let g = catalog::edgeless(21);
        assert!(matches!(
            vp_membership(&g, &vec![Rational::zero(); 21]),
            Err(Error::SizeGuard { .. })
        ));
    }
}
