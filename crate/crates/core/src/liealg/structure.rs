//! Subalgebras, ideals and derived series inside a structure-constant algebra.

use alloc::vec::Vec;

use super::LieAlgebra;
use crate::error::{check_dim, Result};
use crate::exactlin::{Subspace, Vector};

impl LieAlgebra {
    /// Smallest bracket-closed subspace containing `vectors`.
    pub fn subalgebra_closure(&self, vectors: &[Vector]) -> Result<Subspace> {
        let mut current = Subspace::span(vectors, self.dim())?;
        loop {
            let next = current.sum(&self.bracket_span(&current, &current)?)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> Result<bool> {
        self.bracket_span(s, s)?.leq(s)
    }

    /// `[g, S] ⊆ S`.
    pub fn is_ideal(&self, s: &Subspace) -> Result<bool> {
        self.ad_span(s)?.leq(s)
    }

    /// `I` is an ideal of the subalgebra `s`: `[s, I] ⊆ I`.
    pub fn is_ideal_of(&self, ideal: &Subspace, s: &Subspace) -> Result<bool> {
        self.bracket_span(s, ideal)?.leq(ideal)
    }

    pub fn is_abelian(&self, s: &Subspace) -> Result<bool> {
        Ok(self.bracket_span(s, s)?.is_zero())
    }

    /// `S ⊇ [S,S] ⊇ [[S,S],[S,S]] ⊇ …`, stopped at the first repeat. The
    /// first entry is `S` itself.
    pub fn derived_series(&self, s: &Subspace) -> Result<Vec<Subspace>> {
        let mut series = alloc::vec![s.clone()];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_span(last, last)?;
            if &next == last {
                return Ok(series);
            }
            series.push(next);
        }
    }

    /// Solvable iff the derived series reaches `{0}`.
    pub fn is_solvable(&self, s: &Subspace) -> Result<bool> {
        Ok(self.derived_series(s)?.last().expect("nonempty").is_zero())
    }

    /// Largest ideal of the algebra contained in `s`, by iterating
    /// `I ↦ {x ∈ I : [b_i, x] ∈ I for all i}` to a fixpoint.
    pub fn largest_ideal_in(&self, s: &Subspace) -> Result<Subspace> {
        check_dim(self.dim(), s.ambient_dim())?;
        let ad = self.ad_matrices();
        let mut current = s.clone();
        loop {
            let next = current.relative_invariant(&ad, &current)?;
            if next == current {
                return Ok(current);
            }
            current = next;
        }
    }

    /// Largest ideal contained in `s`, computed on the dual side: close the
    /// annihilator of `s` under the transposed adjoint operators, then take
    /// the annihilator again.
    pub fn largest_ideal_in_dual(&self, s: &Subspace) -> Result<Subspace> {
        check_dim(self.dim(), s.ambient_dim())?;
        let n = self.dim();
        let annihilator = annihilator(s)?;
        let transposed: Vec<_> = self.ad_matrices().iter().map(|m| m.transpose()).collect();
        let closed = annihilator.invariant_closure(&transposed)?;
        Ok(annihilator_of_basis(closed.basis(), n))
    }
}

/// `{φ : φ·s = 0 for all s ∈ S}` in coordinates.
pub(crate) fn annihilator(s: &Subspace) -> Result<Subspace> {
    Ok(annihilator_of_basis(s.basis(), s.ambient_dim()))
}

fn annihilator_of_basis(rows: &[Vector], n: usize) -> Subspace {
    let m = crate::exactlin::Matrix::from_vectors(rows, n).expect("rows have width n");
    Subspace::kernel(&m)
}
