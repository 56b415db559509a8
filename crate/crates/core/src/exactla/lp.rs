//! Phase-one simplex over the rationals.
//!
//! Only feasibility is needed anywhere in the crate, so this solves
//! `A x = b, x ≥ 0` by minimising the sum of artificial variables. Pivoting
//! follows Bland's rule (lowest-index entering column, lowest-index leaving
//! basic variable on ratio ties), which rules out cycling.

use num_traits::{Signed, Zero};

use super::{Rational, RationalMatrix};
use crate::{Error, Result};

/// Returns some `x ≥ 0` with `a · x = b`, or `None` if none exists.
pub fn feasible_point(a: &RationalMatrix, b: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let (m, n) = (a.rows(), a.cols());
    if b.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: b.len(),
        });
    }
    let width = n + m;
    let rhs = width;

    let mut tab: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let flip = b[i].is_negative();
            let mut row = vec![Rational::zero(); width + 1];
            for j in 0..n {
                row[j] = if flip {
                    -a.get(i, j).clone()
                } else {
                    a.get(i, j).clone()
                };
            }
            row[n + i] = Rational::from_integer(1.into());
            row[rhs] = if flip { -b[i].clone() } else { b[i].clone() };
            row
        })
        .collect();
    let mut basis: Vec<usize> = (n..width).collect();

    // reduced costs of the phase-one objective; cost[rhs] holds -objective
    let mut cost = vec![Rational::zero(); width + 1];
    for row in &tab {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[rhs] -= &row[rhs];
    }

    while let Some(enter) = (0..width).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((pr, _)) = leave else {
            return Err(Error::Internal("phase-one objective unbounded".into()));
        };

        let inv = tab[pr][enter].recip();
        for x in tab[pr].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = tab[pr].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i == pr || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        if !cost[enter].is_zero() {
            let f = cost[enter].clone();
            for (x, p) in cost.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        basis[pr] = enter;
    }

    if !cost[rhs].is_zero() {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &bv) in basis.iter().enumerate() {
        if bv < n {
            x[bv] = tab[i][rhs].clone();
        }
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, rat};

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        RationalMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()).unwrap()
    }

    fn check(a: &RationalMatrix, b: &[Rational], x: &[Rational]) {
        assert!(x.iter().all(|v| !v.is_negative()));
        assert_eq!(a.mul_vec(x).unwrap(), b);
    }

    #[test]
    fn simple_feasible() {
        let a = m(&[&[1, 1, 0], &[0, 1, 1]]);
        let b = [int(1), int(1)];
        let x = feasible_point(&a, &b).unwrap().unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn negative_rhs_infeasible() {
        // x1 + x2 = -1 with x >= 0
        let a = m(&[&[1, 1]]);
        assert!(feasible_point(&a, &[int(-1)]).unwrap().is_none());
    }

    #[test]
    fn negative_rhs_feasible_after_flip() {
        let a = m(&[&[1, -1]]);
        let b = [int(-2)];
        let x = feasible_point(&a, &b).unwrap().unwrap();
        check(&a, &b, &x);
    }

    #[test]
    fn pentagon_half_state() {
        // every edge of C5 sums to one
        let a = m(&[
            &[1, 1, 0, 0, 0],
            &[0, 1, 1, 0, 0],
            &[0, 0, 1, 1, 0],
            &[0, 0, 0, 1, 1],
            &[1, 0, 0, 0, 1],
        ]);
        let b = vec![int(1); 5];
        let x = feasible_point(&a, &b).unwrap().unwrap();
        check(&a, &b, &x);
        // the system is nonsingular, so the point is unique
        assert!(x.iter().all(|v| *v == rat(1, 2)));
    }

    #[test]
    fn redundant_rows_are_fine() {
        let a = m(&[&[1, 1], &[2, 2], &[1, 1]]);
        let b = [int(1), int(2), int(1)];
        let x = feasible_point(&a, &b).unwrap().unwrap();
        check(&a, &b, &x);
        assert!(feasible_point(&a, &[int(1), int(3), int(1)]).unwrap().is_none());
    }
}
