use super::{semidirect, SemidirectAlgebra};
use crate::error::{check_dim, Error, Result};
use crate::exactlin::Subspace;
use crate::jetfilt::{validate_jet_filtration, Filtration};
use crate::liealg::{LieAlgebra, Representation};

/// A Lie algebra `h` with a proper subalgebra `h0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KleinPair {
    h: LieAlgebra,
    h0: Subspace,
    provenance: Option<Provenance>,
}

/// How a pair was obtained from a representation and a jet-filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub semidirect: SemidirectAlgebra,
    pub filtration: Filtration,
    pub stabilizer: StabilizerChoice,
    /// `V_0`, the top term of the descending relabel, embedded in `h`.
    pub v0: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilizerChoice {
    /// `h0 = V_0`.
    Abelian,
    /// `h0 = r ⋉ V_0` for a subalgebra `r ⊆ g` preserving `V_0`.
    Subalgebra(Subspace),
}

impl KleinPair {
    pub fn new(h: LieAlgebra, h0: Subspace) -> Result<Self> {
        check_dim(h.dim(), h0.ambient_dim())?;
        if h0.is_full() {
            return Err(Error::InvalidParameter("h0 must be a proper subspace of h".into()));
        }
        if !h.is_subalgebra(&h0)? {
            return Err(Error::NotSubalgebra("h0"));
        }
        Ok(KleinPair { h, h0, provenance: None })
    }

    pub fn h(&self) -> &LieAlgebra {
        &self.h
    }

    pub fn h0(&self) -> &Subspace {
        &self.h0
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }
}

/// `h = g ⋉_ρ V` with `h0 = V_0` (abelian choice) or `h0 = r ⋉ V_0`, where
/// `V_0` is the largest term of the jet-filtration.
pub fn build_klein_pair(rep: &Representation, filtration: &Filtration, choice: StabilizerChoice) -> Result<KleinPair> {
    if !validate_jet_filtration(rep, filtration)? {
        return Err(Error::InvalidFiltration("not a jet-filtration of this representation".into()));
    }
    let descending = filtration.to_descending()?;
    let top = descending
        .subspaces()
        .first()
        .ok_or_else(|| Error::InvalidFiltration("an empty filtration has no V_0".into()))?;
    let sd = semidirect(rep)?;
    let v0 = sd.embed_v_subspace(top)?;
    let h0 = match &choice {
        StabilizerChoice::Abelian => v0.clone(),
        StabilizerChoice::Subalgebra(r) => {
            check_dim(rep.algebra().dim(), r.ambient_dim())?;
            if !rep.algebra().is_subalgebra(r)? {
                return Err(Error::NotSubalgebra("r"));
            }
            for m in r.basis().iter().map(|x| rep.rho(x)) {
                if !top.image(&m?)?.leq(top)? {
                    return Err(Error::NotPreserved);
                }
            }
            sd.embed_g_subspace(r)?.sum(&v0)?
        }
    };
    let mut pair = KleinPair::new(sd.total().clone(), h0)?;
    pair.provenance = Some(Provenance { semidirect: sd, filtration: filtration.clone(), stabilizer: choice, v0 });
    Ok(pair)
}
