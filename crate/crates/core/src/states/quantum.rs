//! Born-rule evaluation `p(P) = tr(ρP)` with floating density matrices.

use nalgebra::DMatrix;

use crate::exactla::{to_f64, Projector, RationalMatrix};
use crate::{Error, Result};

/// Tolerance for trace, symmetry, positivity and probability clipping.
pub const DENSITY_TOLERANCE: f64 = 1e-12;

/// Real symmetric positive semidefinite matrix of trace 1.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    m: DMatrix<f64>,
}

impl DensityMatrix {
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        let d = rows.len();
        if d == 0 || rows.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidDensity("matrix must be square and nonempty".into()));
        }
        if rows.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidDensity("entries must be finite".into()));
        }
        let m = DMatrix::from_fn(d, d, |i, j| rows[i][j]);
        if (&m - m.transpose()).amax() > DENSITY_TOLERANCE {
            return Err(Error::InvalidDensity("matrix is not symmetric".into()));
        }
        if (m.trace() - 1.0).abs() > DENSITY_TOLERANCE {
            return Err(Error::InvalidDensity(format!("trace is {}, not 1", m.trace())));
        }
        let min = m.clone().symmetric_eigen().eigenvalues.min();
        if min < -DENSITY_TOLERANCE {
            return Err(Error::InvalidDensity(format!("eigenvalue {min} is negative")));
        }
        Ok(DensityMatrix { m })
    }

    /// `|ψ⟩⟨ψ| / ⟨ψ|ψ⟩`.
    pub fn pure(psi: &[f64]) -> Result<Self> {
        let norm2: f64 = psi.iter().map(|x| x * x).sum();
        if psi.is_empty() || norm2 == 0.0 || !norm2.is_finite() {
            return Err(Error::InvalidDensity("state vector must be nonzero and finite".into()));
        }
        let d = psi.len();
        Ok(DensityMatrix {
            m: DMatrix::from_fn(d, d, |i, j| psi[i] * psi[j] / norm2),
        })
    }

    /// `I / d`.
    pub fn maximally_mixed(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::InvalidDensity("dimension must be positive".into()));
        }
        Ok(DensityMatrix {
            m: DMatrix::identity(d, d) / d as f64,
        })
    }

    pub fn from_rational(rho: &RationalMatrix) -> Result<Self> {
        Self::new(rho.to_f64_rows())
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim())
            .map(|i| self.m.row(i).iter().copied().collect())
            .collect()
    }

    fn check_dim(&self, d: usize) -> Result<()> {
        if d != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: d,
            });
        }
        Ok(())
    }
}

fn clip(x: f64) -> Result<f64> {
    if !(-DENSITY_TOLERANCE..=1.0 + DENSITY_TOLERANCE).contains(&x) {
        return Err(Error::Internal(format!("probability {x} outside [0, 1]")));
    }
    Ok(x.clamp(0.0, 1.0))
}

/// `tr(ρ P_i)` for each projector.
pub fn quantum_state_eval(projectors: &[Projector], rho: &DensityMatrix) -> Result<Vec<f64>> {
    projectors
        .iter()
        .map(|p| {
            rho.check_dim(p.dim())?;
            let d = p.dim();
            let pm = DMatrix::from_fn(d, d, |i, j| to_f64(p.matrix().get(i, j)));
            clip((&rho.m * pm).trace())
        })
        .collect()
}

/// `⟨v|ρ|v⟩ / ⟨v|v⟩` for each ray `v`, i.e. the value on the rank-one
/// projector onto `v`.
pub fn quantum_state_eval_rays(rays: &[Vec<f64>], rho: &DensityMatrix) -> Result<Vec<f64>> {
    rays.iter()
        .map(|v| {
            rho.check_dim(v.len())?;
            let v = nalgebra::DVector::from_column_slice(v);
            let norm2 = v.norm_squared();
            if norm2 == 0.0 {
                return Err(Error::InvalidProjector("zero ray".into()));
            }
            clip((v.transpose() * &rho.m * &v)[(0, 0)] / norm2)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{int, projector_onto};
    use crate::orthorep::kcbs_umbrella;

    #[test]
    fn maximally_mixed_on_rank_one() {
        let p = projector_onto(&[vec![int(1), int(2), int(2)]], 3).unwrap();
        let rho = DensityMatrix::maximally_mixed(3).unwrap();
        let v = quantum_state_eval(&[p], &rho).unwrap();
        assert!((v[0] - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn state_on_its_own_projector() {
        let rho = DensityMatrix::pure(&[1.0, 1.0, 0.0]).unwrap();
        let p = projector_onto(&[vec![int(1), int(1), int(0)]], 3).unwrap();
        assert!((quantum_state_eval(&[p], &rho).unwrap()[0] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn umbrella_values() {
        let u = kcbs_umbrella();
        let rho = DensityMatrix::pure(&u.handle).unwrap();
        let rays: Vec<Vec<f64>> = u.vectors.iter().map(|v| v.to_vec()).collect();
        let p = quantum_state_eval_rays(&rays, &rho).unwrap();
        for x in &p {
            assert!((x - 1.0 / 5f64.sqrt()).abs() < 1e-12);
        }
        assert!((p.iter().sum::<f64>() - 5f64.sqrt()).abs() < 1e-9);
    }

    #[test]
    fn validation() {
        assert!(DensityMatrix::new(vec![vec![1.0, 0.0], vec![0.0, 0.0]]).is_ok());
        assert!(DensityMatrix::new(vec![vec![0.5, 0.1], vec![0.0, 0.5]]).is_err());
        assert!(DensityMatrix::new(vec![vec![0.5, 0.0], vec![0.0, 0.6]]).is_err());
        assert!(DensityMatrix::new(vec![vec![1.5, 0.0], vec![0.0, -0.5]]).is_err());
        assert!(DensityMatrix::new(vec![vec![1.0]; 2]).is_err());
        assert!(DensityMatrix::pure(&[0.0, 0.0]).is_err());
        let rho = DensityMatrix::maximally_mixed(2).unwrap();
        assert!(matches!(
            quantum_state_eval(&[Projector::identity(3)], &rho),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
