use alloc::vec::Vec;

use super::validation::{Identity, Subject, ValidationReport, Violation};
use super::LieAlgebra;
use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Matrix, Vector};

/// A representation `ρ : g → gl(V)`, stored as one matrix per basis element
/// of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    algebra: LieAlgebra,
    space_dim: usize,
    matrices: Vec<Matrix>,
}

impl Representation {
    /// Validated constructor: fails unless the matrices satisfy the
    /// homomorphism identity on every basis pair.
    pub fn new(algebra: LieAlgebra, matrices: Vec<Matrix>) -> Result<Self> {
        let rep = Self::new_unchecked(algebra, matrices)?;
        let report = rep.validate();
        if report.passed {
            Ok(rep)
        } else {
            Err(Error::InvalidRepresentation(report))
        }
    }

    /// Shape checks only.
    pub fn new_unchecked(algebra: LieAlgebra, matrices: Vec<Matrix>) -> Result<Self> {
        check_dim(algebra.dim(), matrices.len())?;
        let space_dim = matrices[0].rows();
        if space_dim == 0 {
            return Err(Error::InvalidParameter("representation space must be nonzero".into()));
        }
        for m in &matrices {
            check_dim(space_dim, m.rows())?;
            check_dim(space_dim, m.cols())?;
        }
        Ok(Representation { algebra, space_dim, matrices })
    }

    /// The zero representation of `algebra` on `ℚ^space_dim`.
    pub fn zero(algebra: LieAlgebra, space_dim: usize) -> Result<Self> {
        let matrices = (0..algebra.dim()).map(|_| Matrix::zeros(space_dim, space_dim)).collect();
        Self::new(algebra, matrices)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// `ρ(b_i)`.
    pub fn matrix(&self, i: usize) -> &Matrix {
        &self.matrices[i]
    }

    /// `ρ(x) = Σ x_i ρ(b_i)`.
    pub fn rho(&self, x: &Vector) -> Result<Matrix> {
        check_dim(self.algebra.dim(), x.dim())?;
        let mut out = Matrix::zeros(self.space_dim, self.space_dim);
        for (xi, m) in x.iter().zip(&self.matrices) {
            if !xi.is_zero() {
                out = out.add(&m.scale(xi))?;
            }
        }
        Ok(out)
    }

    /// Checks `ρ([b_i,b_j]) = [ρ(b_i), ρ(b_j)]` for every pair `i < j`.
    pub fn validate(&self) -> ValidationReport {
        let n = self.algebra.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = self.rho(self.algebra.structure_constants(i, j)).expect("dims match");
                let rhs = self.matrices[i].commutator(&self.matrices[j]).expect("square");
                let defect = lhs.sub(&rhs).expect("same shape");
                if !defect.is_zero() {
                    violations.push(Violation {
                        identity: Identity::Homomorphism,
                        indices: alloc::vec![i, j],
                        discrepancy: defect.as_vector(),
                    });
                }
            }
        }
        ValidationReport::from_violations(Subject::Representation, violations)
    }

    /// The adjoint representation `x ↦ ad(x)` of a valid algebra.
    pub fn adjoint(algebra: &LieAlgebra) -> Result<Self> {
        let rep = Self::new_unchecked(algebra.clone(), algebra.ad_matrices())?;
        // For ad, the homomorphism identity is exactly Jacobi.
        let report = rep.validate();
        if report.passed {
            Ok(rep)
        } else {
            Err(Error::InvalidAlgebra(algebra.validate()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sl2;
    use alloc::vec;

    #[test]
    fn adjoint_of_sl2() {
        let ad = Representation::adjoint(&sl2()).unwrap();
        assert_eq!(ad.space_dim(), 3);
        assert_eq!(ad.matrix(2), &Matrix::from_i64s(&[&[2, 0, 0], &[0, -2, 0], &[0, 0, 0]]).unwrap());
        assert!(ad.validate().passed);
    }

    #[test]
    fn adjoint_of_abelian_is_zero() {
        let a = LieAlgebra::abelian(vec!["a".into(), "b".into()]).unwrap();
        let ad = Representation::adjoint(&a).unwrap();
        assert!(ad.matrices().iter().all(Matrix::is_zero));
    }

    #[test]
    fn non_homomorphism_is_reported() {
        let g = sl2();
        // ρ(e) = ρ(f) = 0 but ρ(h) = 1 breaks ρ([e,f]) = ρ(h).
        let ms = vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1), Matrix::identity(1)];
        let err = Representation::new(g, ms).unwrap_err();
        let Error::InvalidRepresentation(report) = err else { panic!() };
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].indices, vec![0, 1]);
    }

    #[test]
    fn shape_errors() {
        let g = sl2();
        assert!(Representation::new(g.clone(), vec![Matrix::zeros(2, 2)]).is_err());
        let ms = vec![Matrix::zeros(2, 2), Matrix::zeros(2, 2), Matrix::zeros(3, 3)];
        assert!(Representation::new(g, ms).is_err());
    }
}
