use super::{half_tail_report, is_effective, weissfeiler, HalfTailReport, KleinPair, WeissfeilerResult};
use crate::error::Result;
use crate::exactlin::Subspace;
use crate::liealg::LieAlgebra;

/// Everything the reports need about one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairAnalysis {
    pub h_dim: usize,
    pub h0_dim: usize,
    pub h0_abelian: bool,
    pub h0_solvable: bool,
    pub weissfeiler: WeissfeilerResult,
    /// Effectiveness decided independently of the Weissfeiler chain, as
    /// `largest_ideal_in(h, h0) = {0}`.
    pub effective: bool,
    pub half_tail: HalfTailReport,
}

impl PairAnalysis {
    /// The Weissfeiler fixpoint agrees with the largest-ideal route.
    pub fn consistent(&self) -> bool {
        self.effective == self.weissfeiler.effective
    }
}

pub fn analyze_pair(pair: &KleinPair) -> Result<PairAnalysis> {
    analyze(pair.h(), pair.h0())
}

/// Same as [`analyze_pair`] for a subalgebra that may be all of `h`.
pub fn analyze(h: &LieAlgebra, h0: &Subspace) -> Result<PairAnalysis> {
    let w = weissfeiler(h, h0)?;
    let half_tail = half_tail_report(h, &w)?;
    Ok(PairAnalysis {
        h_dim: h.dim(),
        h0_dim: h0.dim(),
        h0_abelian: h.is_abelian(h0)?,
        h0_solvable: h.is_solvable(h0)?,
        effective: is_effective(h, h0)?,
        weissfeiler: w,
        half_tail,
    })
}
