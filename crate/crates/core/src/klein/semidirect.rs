use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Subspace, Vector};
use crate::jetfilt::image_span;
use crate::liealg::{LieAlgebra, Representation};

/// `g ⋉_ρ V`: basis ordered as the basis of `g` followed by the basis of `V`,
/// with `[b_i, v_a] = ρ(b_i)v_a` and `[v_a, v_b] = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemidirectAlgebra {
    rep: Representation,
    total: LieAlgebra,
}

#[allow(clippy::needless_range_loop)]
pub fn semidirect(rep: &Representation) -> Result<SemidirectAlgebra> {
    let base = rep.algebra();
    let (n, d) = (base.dim(), rep.space_dim());
    let total_dim = n + d;
    let mut grid: Vec<Vec<Vector>> =
        (0..total_dim).map(|_| (0..total_dim).map(|_| Vector::zeros(total_dim)).collect()).collect();
    for i in 0..n {
        for j in 0..n {
            grid[i][j] = base.structure_constants(i, j).concat(&Vector::zeros(d));
        }
        for a in 0..d {
            let image = Vector::zeros(n).concat(&rep.matrix(i).column(a));
            grid[n + a][i] = image.neg();
            grid[i][n + a] = image;
        }
    }
    let mut names: Vec<String> = base.basis_names().to_vec();
    names.extend((1..=d).map(|a| format!("v{a}")));
    let total = LieAlgebra::new(names, grid).map_err(|e| match e {
        Error::InvalidAlgebra(_) => Error::InvalidRepresentation(rep.validate()),
        other => other,
    })?;
    Ok(SemidirectAlgebra { rep: rep.clone(), total })
}

impl SemidirectAlgebra {
    pub fn base(&self) -> &LieAlgebra {
        self.rep.algebra()
    }

    pub fn rep(&self) -> &Representation {
        &self.rep
    }

    pub fn total(&self) -> &LieAlgebra {
        &self.total
    }

    fn g_dim(&self) -> usize {
        self.rep.algebra().dim()
    }

    /// `x ↦ (x, 0)`.
    pub fn embed_g(&self, x: &Vector) -> Result<Vector> {
        check_dim(self.g_dim(), x.dim())?;
        Ok(x.concat(&Vector::zeros(self.rep.space_dim())))
    }

    /// `v ↦ (0, v)`.
    pub fn embed_v(&self, v: &Vector) -> Result<Vector> {
        check_dim(self.rep.space_dim(), v.dim())?;
        Ok(Vector::zeros(self.g_dim()).concat(v))
    }

    pub fn embed_g_subspace(&self, s: &Subspace) -> Result<Subspace> {
        let vs = s.basis().iter().map(|x| self.embed_g(x)).collect::<Result<Vec<_>>>()?;
        Subspace::span(&vs, self.total.dim())
    }

    pub fn embed_v_subspace(&self, s: &Subspace) -> Result<Subspace> {
        let vs = s.basis().iter().map(|v| self.embed_v(v)).collect::<Result<Vec<_>>>()?;
        Subspace::span(&vs, self.total.dim())
    }

    /// `[g, V]` computed with the total bracket, compared against the
    /// embedding of `ρ(g)V`.
    pub fn ideal_image_identity(&self) -> Result<bool> {
        let g = self.embed_g_subspace(&Subspace::full(self.g_dim()))?;
        let v = self.embed_v_subspace(&Subspace::full(self.rep.space_dim()))?;
        let lhs = self.total.bracket_span(&g, &v)?;
        let rhs = self.embed_v_subspace(&image_span(&self.rep, &Subspace::full(self.rep.space_dim()))?)?;
        Ok(lhs == rhs)
    }
}
