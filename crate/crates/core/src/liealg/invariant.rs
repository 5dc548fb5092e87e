use alloc::vec::Vec;

use super::Representation;
use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Matrix, Subspace, Vector};

/// Result of [`Representation::irreducibility_scan`]. Irreducibility itself
/// is never certified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IrreducibilityVerdict {
    /// A proper nonzero invariant subspace.
    Reducible(Subspace),
    NotDisproved,
}

impl Representation {
    /// `{x ∈ g : ρ(x)V₀ ⊆ V₀}`, the largest subspace of `g` preserving `v0`.
    pub fn stabilizer_in_g(&self, v0: &Subspace) -> Result<Subspace> {
        check_dim(self.space_dim(), v0.ambient_dim())?;
        let n = self.algebra().dim();
        // Column i stacks the residuals of ρ(b_i)w over the basis vectors w.
        let mut columns = Vec::with_capacity(n);
        for m in self.matrices() {
            let mut col = Vec::with_capacity(v0.dim() * self.space_dim());
            for w in v0.basis() {
                col.extend(v0.residual(&m.mul_vec(w)?)?.into_entries());
            }
            columns.push(Vector::new(col));
        }
        let rows = v0.dim() * self.space_dim();
        let stabilizer = Subspace::kernel(&Matrix::from_columns(&columns, rows)?);
        debug_assert!(self.algebra().is_subalgebra(&stabilizer)?);
        Ok(stabilizer)
    }

    /// Smallest `ρ(g)`-invariant subspace containing `v`.
    pub fn invariant_closure(&self, v: &Vector) -> Result<Subspace> {
        check_dim(self.space_dim(), v.dim())?;
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        Subspace::span(core::slice::from_ref(v), self.space_dim())?.invariant_closure(self.matrices())
    }

    pub fn is_invariant(&self, s: &Subspace) -> Result<bool> {
        check_dim(self.space_dim(), s.ambient_dim())?;
        for m in self.matrices() {
            if !s.image(m)?.leq(s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Looks for a proper invariant subspace among the closures of the
    /// standard basis vectors and then of `extra_candidates` (zero vectors
    /// are skipped). The first proper closure found is returned as witness.
    pub fn irreducibility_scan(&self, extra_candidates: &[Vector]) -> Result<IrreducibilityVerdict> {
        let d = self.space_dim();
        let basis = (0..d).map(|i| Vector::unit(d, i));
        for v in basis.chain(extra_candidates.iter().cloned()) {
            check_dim(d, v.dim())?;
            if v.is_zero() {
                continue;
            }
            let closure = self.invariant_closure(&v)?;
            if !closure.is_full() {
                return Ok(IrreducibilityVerdict::Reducible(closure));
            }
        }
        Ok(IrreducibilityVerdict::NotDisproved)
    }
}
