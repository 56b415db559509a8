use std::hash::{Hash, Hasher};

use num_traits::Zero;

use super::solve::{inverse, row_reduce};
use super::{Rational, RationalMatrix};
use crate::{Error, Result};

/// Orthogonal projector on `Q^d`: a rational symmetric idempotent matrix.
///
/// The matrix is authoritative. `basis` caches a spanning set of the image
/// (pivot columns of the matrix) so rank queries need no elimination.
#[derive(Clone)]
pub struct Projector {
    matrix: RationalMatrix,
    basis: Vec<Vec<Rational>>,
}

impl PartialEq for Projector {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl Eq for Projector {}

impl Hash for Projector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl std::fmt::Debug for Projector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Projector(rank {}, {:?})", self.rank(), self.matrix)
    }
}

impl Projector {
    pub fn zero(dim: usize) -> Self {
        Projector {
            matrix: RationalMatrix::zeros(dim, dim),
            basis: Vec::new(),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_matrix_unchecked(RationalMatrix::identity(dim))
    }

    /// Validates symmetry and idempotence exactly.
    pub fn from_matrix(matrix: RationalMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::InvalidProjector("matrix is not square".into()));
        }
        if !matrix.is_symmetric() {
            return Err(Error::InvalidProjector("matrix is not symmetric".into()));
        }
        if matrix.matmul(&matrix)? != matrix {
            return Err(Error::InvalidProjector("matrix is not idempotent".into()));
        }
        Ok(Self::from_matrix_unchecked(matrix))
    }

    fn from_matrix_unchecked(matrix: RationalMatrix) -> Self {
        let mut work = matrix.clone();
        let pivots = row_reduce(&mut work);
        let basis = pivots.iter().map(|&c| matrix.column(c)).collect();
        Projector { matrix, basis }
    }

    /// Order `d` of the ambient space.
    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix(&self) -> &RationalMatrix {
        &self.matrix
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.rank() == self.dim()
    }

    fn check_order(&self, other: &Projector) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(())
    }

    pub fn commutes(&self, other: &Projector) -> Result<bool> {
        self.check_order(other)?;
        Ok(self.matrix.matmul(&other.matrix)? == other.matrix.matmul(&self.matrix)?)
    }

    /// `PQ = 0`.
    pub fn is_orthogonal_to(&self, other: &Projector) -> Result<bool> {
        self.check_order(other)?;
        Ok(self.matrix.matmul(&other.matrix)?.is_zero())
    }

    /// `I − P`.
    pub fn complement(&self) -> Projector {
        let d = self.dim();
        let m = RationalMatrix::identity(d)
            .sub(&self.matrix)
            .expect("square matrices of equal order");
        Self::from_matrix_unchecked(m)
    }

    /// `PQ` for commuting projectors.
    pub fn meet(&self, other: &Projector) -> Result<Projector> {
        if !self.commutes(other)? {
            return Err(Error::Incompatible);
        }
        Ok(Self::from_matrix_unchecked(self.matrix.matmul(&other.matrix)?))
    }

    /// `¬(¬P ∧ ¬Q)`, which equals `P + Q − PQ` for commuting projectors.
    pub fn join(&self, other: &Projector) -> Result<Projector> {
        Ok(self.complement().meet(&other.complement())?.complement())
    }

    /// `(P ∧ Q, P ∨ Q)` when the two commute, from a single product: `PQ`
    /// is symmetric exactly when `PQ = QP`.
    pub fn meet_join(&self, other: &Projector) -> Result<Option<(Projector, Projector)>> {
        self.check_order(other)?;
        let pq = self.matrix.matmul(&other.matrix)?;
        if !pq.is_symmetric() {
            return Ok(None);
        }
        let join = self.matrix.add(&other.matrix)?.sub(&pq)?;
        Ok(Some((
            Self::from_matrix_unchecked(pq),
            Self::from_matrix_unchecked(join),
        )))
    }

    /// `P ≤ Q` iff the two commute and `PQ = P`.
    pub fn leq(&self, other: &Projector) -> Result<bool> {
        if !self.commutes(other)? {
            return Ok(false);
        }
        Ok(self.matrix.matmul(&other.matrix)? == self.matrix)
    }

    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        self.matrix.to_f64_rows()
    }
}

/// Projector onto `span(vectors)` in `Q^dim`, computed as `B (BᵀB)⁻¹ Bᵀ`.
pub fn projector_onto(vectors: &[Vec<Rational>], dim: usize) -> Result<Projector> {
    if vectors.is_empty() {
        return Ok(Projector::zero(dim));
    }
    let b = RationalMatrix::from_columns(vectors, dim)?;
    let bt = b.transpose();
    let gram = bt.matmul(&b)?;
    let gram_inv = inverse(&gram).ok_or(Error::DependentVectors)?;
    let matrix = b.matmul(&gram_inv)?.matmul(&bt)?;
    debug_assert!(matrix.is_symmetric());
    Ok(Projector {
        matrix,
        basis: vectors.to_vec(),
    })
}

pub fn commute(p: &Projector, q: &Projector) -> Result<bool> {
    p.commutes(q)
}

pub fn complement(p: &Projector) -> Projector {
    p.complement()
}

pub fn meet(p: &Projector, q: &Projector) -> Result<Projector> {
    p.meet(q)
}

pub fn join(p: &Projector, q: &Projector) -> Result<Projector> {
    p.join(q)
}

pub fn leq(p: &Projector, q: &Projector) -> Result<bool> {
    p.leq(q)
}

impl Projector {
    /// Trace of `P`, which equals its rank.
    pub fn trace(&self) -> Rational {
        self.matrix.trace()
    }

    /// `tr(ρP)` for a rational `ρ`.
    pub fn expectation(&self, rho: &RationalMatrix) -> Result<Rational> {
        if rho.rows() != self.dim() || rho.cols() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rho.rows(),
            });
        }
        let d = self.dim();
        let mut acc = Rational::zero();
        for i in 0..d {
            for k in 0..d {
                acc += rho.get(i, k) * self.matrix.get(k, i);
            }
        }
        Ok(acc)
    }

    /// `true` iff the image of `P` contains `v`.
    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        Ok(self.matrix.mul_vec(v)? == v)
    }
}
