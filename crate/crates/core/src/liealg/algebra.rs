use alloc::string::String;
use alloc::vec::Vec;

use super::validation::{Identity, Subject, ValidationReport, Violation};
use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Matrix, Rational, Subspace, Vector};

/// Finite-dimensional Lie algebra over `ℚ` given by structure constants
/// `[b_i, b_j] = Σ_k c_ij^k b_k`.
#[derive(Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    names: Vec<String>,
    /// `constants[i][j]` holds the coefficients of `[b_i, b_j]`.
    constants: Vec<Vec<Vector>>,
}

impl core::fmt::Debug for LieAlgebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("LieAlgebra").field("basis", &self.names).finish_non_exhaustive()
    }
}

impl LieAlgebra {
    /// Validated constructor from a dense `n×n` grid of bracket vectors.
    pub fn new(names: Vec<String>, constants: Vec<Vec<Vector>>) -> Result<Self> {
        let algebra = Self::new_unchecked(names, constants)?;
        let report = algebra.validate();
        if report.passed {
            Ok(algebra)
        } else {
            Err(Error::InvalidAlgebra(report))
        }
    }

    /// Shape-checked but not identity-checked. Meant for feeding possibly
    /// broken data to [`LieAlgebra::validate`].
    pub fn new_unchecked(names: Vec<String>, constants: Vec<Vec<Vector>>) -> Result<Self> {
        let n = names.len();
        if n == 0 {
            return Err(Error::InvalidParameter("a Lie algebra needs a nonempty basis".into()));
        }
        check_dim(n, constants.len())?;
        for row in &constants {
            check_dim(n, row.len())?;
            for v in row {
                check_dim(n, v.dim())?;
            }
        }
        Ok(LieAlgebra { names, constants })
    }

    /// Builds the algebra from the brackets `[b_i, b_j]` with `i < j`; the
    /// rest of the grid is filled in by antisymmetry. Unlisted pairs commute.
    pub fn from_brackets(names: Vec<String>, brackets: &[(usize, usize, Vector)]) -> Result<Self> {
        let n = names.len();
        let mut constants: Vec<Vec<Vector>> = (0..n).map(|_| (0..n).map(|_| Vector::zeros(n)).collect()).collect();
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= j || j >= n {
                return Err(Error::InvalidParameter(alloc::format!(
                    "bracket entry ({i}, {j}) must satisfy i < j < {n}"
                )));
            }
            check_dim(n, v.dim())?;
            constants[i][j] = v.clone();
            constants[j][i] = v.neg();
        }
        Self::new(names, constants)
    }

    /// The `n`-dimensional abelian algebra.
    pub fn abelian(names: Vec<String>) -> Result<Self> {
        Self::from_brackets(names, &[])
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn basis_names(&self) -> &[String] {
        &self.names
    }

    /// Coefficients of `[b_i, b_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &Vector {
        &self.constants[i][j]
    }

    pub fn basis_vector(&self, i: usize) -> Vector {
        Vector::unit(self.dim(), i)
    }

    /// Bilinear extension of the structure constants.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Result<Vector> {
        let n = self.dim();
        check_dim(n, x.dim())?;
        check_dim(n, y.dim())?;
        let mut out = Vector::zeros(n);
        for (i, xi) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if i != j {
                    out.axpy(&(xi * yj), &self.constants[i][j]);
                }
            }
        }
        Ok(out)
    }

    /// `[b_i, y]` without building the basis vector.
    fn bracket_basis_left(&self, i: usize, y: &Vector) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (j, yj) in y.iter().enumerate() {
            out.axpy(yj, &self.constants[i][j]);
        }
        out
    }

    /// Matrix of `x ↦ [b_i, x]`.
    pub fn ad_basis(&self, i: usize) -> Matrix {
        let columns: Vec<Vector> = (0..self.dim()).map(|j| self.constants[i][j].clone()).collect();
        Matrix::from_columns(&columns, self.dim()).expect("square grid")
    }

    pub fn ad_matrices(&self) -> Vec<Matrix> {
        (0..self.dim()).map(|i| self.ad_basis(i)).collect()
    }

    /// Exhaustive check of antisymmetry on all ordered pairs and of the
    /// Jacobi identity on all basis triples `i < j < k` (which, together with
    /// antisymmetry, covers every triple).
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                let defect = self.constants[i][j].add(&self.constants[j][i]).expect("same dim");
                if !defect.is_zero() {
                    violations.push(Violation {
                        identity: Identity::Antisymmetry,
                        indices: alloc::vec![i, j],
                        discrepancy: defect,
                    });
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut total = self.bracket_right_basis(&self.constants[i][j], k);
                    let t2 = self.bracket_right_basis(&self.constants[j][k], i);
                    let t3 = self.bracket_right_basis(&self.constants[k][i], j);
                    total.axpy(&Rational::one(), &t2);
                    total.axpy(&Rational::one(), &t3);
                    if !total.is_zero() {
                        violations.push(Violation {
                            identity: Identity::Jacobi,
                            indices: alloc::vec![i, j, k],
                            discrepancy: total,
                        });
                    }
                }
            }
        }
        ValidationReport::from_violations(Subject::Algebra, violations)
    }

    /// `[x, b_k]` computed from the stored grid.
    fn bracket_right_basis(&self, x: &Vector, k: usize) -> Vector {
        let mut out = Vector::zeros(self.dim());
        for (l, xl) in x.iter().enumerate() {
            out.axpy(xl, &self.constants[l][k]);
        }
        out
    }

    /// `span{[a, b] : a ∈ A, b ∈ B}` over the stored bases.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        check_dim(self.dim(), a.ambient_dim())?;
        check_dim(self.dim(), b.ambient_dim())?;
        let mut out = Subspace::zero(self.dim());
        for x in a.basis() {
            for y in b.basis() {
                out.insert(&self.bracket(x, y)?)?;
            }
        }
        Ok(out)
    }

    /// `[g, S]` for the whole algebra `g`, using basis brackets directly.
    pub(crate) fn ad_span(&self, s: &Subspace) -> Result<Subspace> {
        check_dim(self.dim(), s.ambient_dim())?;
        let mut out = Subspace::zero(self.dim());
        for i in 0..self.dim() {
            for y in s.basis() {
                out.insert(&self.bracket_basis_left(i, y))?;
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sl2;
    use alloc::vec;

    fn v(xs: &[i64]) -> Vector {
        Vector::from_i64s(xs)
    }

    #[test]
    fn sl2_brackets() {
        let g = sl2();
        let (e, f, h) = (v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 0, 1]));
        assert_eq!(g.bracket(&h, &e).unwrap(), v(&[2, 0, 0]));
        assert_eq!(g.bracket(&e, &f).unwrap(), h);
        assert_eq!(g.bracket(&h, &f).unwrap(), v(&[0, -2, 0]));
        let x = v(&[3, -1, 7]);
        assert!(g.bracket(&x, &x).unwrap().is_zero());
        assert!(g.bracket(&x, &v(&[1, 1])).is_err());
    }

    #[test]
    fn abelian_brackets_vanish() {
        let a = LieAlgebra::abelian(vec!["a".into(), "b".into()]).unwrap();
        assert!(a.bracket(&v(&[1, 2]), &v(&[-3, 5])).unwrap().is_zero());
        assert!(a.validate().passed);
    }

    fn perturbed_sl2(antisymmetric: bool) -> LieAlgebra {
        let g = sl2();
        let mut grid: Vec<Vec<Vector>> =
            (0..3).map(|i| (0..3).map(|j| g.structure_constants(i, j).clone()).collect()).collect();
        // [h, e] = 3e instead of 2e; basis order is (e, f, h).
        grid[2][0] = v(&[3, 0, 0]);
        if antisymmetric {
            grid[0][2] = v(&[-3, 0, 0]);
        }
        LieAlgebra::new_unchecked(g.basis_names().to_vec(), grid).unwrap()
    }

    #[test]
    fn perturbed_sl2_fails_jacobi_on_the_only_triple() {
        let report = perturbed_sl2(true).validate();
        assert!(!report.passed);
        assert_eq!(report.violations.len(), 1);
        let viol = &report.violations[0];
        assert_eq!(viol.identity, Identity::Jacobi);
        assert_eq!(viol.indices, vec![0, 1, 2]);
        // [[e,f],h] + [[f,h],e] + [[h,e],f] = 0 + [2f,e] + [3e,f] = -2h + 3h
        assert_eq!(viol.discrepancy, v(&[0, 0, 1]));
    }

    #[test]
    fn perturbed_sl2_reports_antisymmetry_first() {
        let report = perturbed_sl2(false).validate();
        assert_eq!(report.violations[0].identity, Identity::Antisymmetry);
        assert_eq!(report.violations[0].indices, vec![0, 2]);
        assert!(report.violations.iter().any(|x| x.identity == Identity::Jacobi));
    }

    #[test]
    fn from_brackets_rejects_bad_entries() {
        let names: Vec<String> = vec!["x".into(), "y".into()];
        assert!(LieAlgebra::from_brackets(names.clone(), &[(1, 0, v(&[1, 0]))]).is_err());
        assert!(LieAlgebra::from_brackets(names.clone(), &[(0, 2, v(&[1, 0]))]).is_err());
        // The 2-dimensional nonabelian algebra [x, y] = y.
        let aff = LieAlgebra::from_brackets(names, &[(0, 1, v(&[0, 1]))]).unwrap();
        assert_eq!(aff.bracket(&v(&[0, 1]), &v(&[1, 0])).unwrap(), v(&[0, -1]));
    }

    #[test]
    fn ad_matrix_columns_are_brackets() {
        let g = sl2();
        let ad_h = g.ad_basis(2);
        assert_eq!(ad_h, Matrix::from_i64s(&[&[2, 0, 0], &[0, -2, 0], &[0, 0, 0]]).unwrap());
    }
}
