use alloc::vec::Vec;

use crate::error::{check_dim, Error, Result};
use crate::exactlin::Subspace;
use crate::liealg::LieAlgebra;

/// The descending chain `h_0 ⊋ h_1 ⊋ …` with
/// `h_{i+1} = {x ∈ h_i : [x, h] ⊆ h_i}`, iterated to its fixpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeissfeilerResult {
    /// The distinct nonzero terms `h_0, …, h_m`. For a non-effective pair the
    /// last entry is the (nonzero) fixpoint.
    pub chain: Vec<Subspace>,
    /// Index of the last stored term; `-1` when `h_0 = {0}`.
    pub m: i64,
    /// Infinitesimal order `m + 1`.
    pub ord: usize,
    pub stabilized_at: Subspace,
    pub effective: bool,
}

impl WeissfeilerResult {
    pub fn dims(&self) -> Vec<usize> {
        self.chain.iter().map(Subspace::dim).collect()
    }

    /// `h_t` for any `t ≥ 0`, continuing with the fixpoint past the end.
    pub fn term(&self, t: usize) -> Subspace {
        self.chain.get(t).cloned().unwrap_or_else(|| self.stabilized_at.clone())
    }
}

pub fn weissfeiler(h: &LieAlgebra, h0: &Subspace) -> Result<WeissfeilerResult> {
    check_dim(h.dim(), h0.ambient_dim())?;
    if !h.is_subalgebra(h0)? {
        return Err(Error::NotSubalgebra("h0"));
    }
    let ad = h.ad_matrices();
    let mut chain = Vec::new();
    let mut current = h0.clone();
    loop {
        if current.is_zero() {
            break;
        }
        // [x, b_i] ∈ h_i for all i is the same as ad(b_i)x ∈ h_i.
        let next = current.relative_invariant(&ad, &current)?;
        let strict = next.lt(&current)?;
        chain.push(current.clone());
        if !strict {
            assert_eq!(next, current, "relative invariant escaped its source");
            break;
        }
        current = next;
    }
    let m = chain.len() as i64 - 1;
    let effective = current.is_zero();
    Ok(WeissfeilerResult { chain, m, ord: (m + 1) as usize, stabilized_at: current, effective })
}

/// `h0` contains no nonzero ideal of `h`.
pub fn is_effective(h: &LieAlgebra, h0: &Subspace) -> Result<bool> {
    check_dim(h.dim(), h0.ambient_dim())?;
    if !h.is_subalgebra(h0)? {
        return Err(Error::NotSubalgebra("h0"));
    }
    Ok(h.largest_ideal_in(h0)?.is_zero())
}

/// Clause-by-clause outcome of [`half_tail_report`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HalfTailReport {
    /// `[h_i, h_j] ⊆ h_{i+j}` for all `0 ≤ i, j ≤ m`.
    pub graded: bool,
    /// `h_i` is abelian whenever `2i ≥ m + 1`.
    pub abelian_tail: bool,
    /// Those same `h_i` are ideals of `h_0`.
    pub tail_ideals: bool,
}

impl HalfTailReport {
    pub fn passed(&self) -> bool {
        self.graded && self.abelian_tail && self.tail_ideals
    }
}

pub fn half_tail_report(h: &LieAlgebra, w: &WeissfeilerResult) -> Result<HalfTailReport> {
    let top = usize::try_from(w.m).ok();
    let mut report = HalfTailReport { graded: true, abelian_tail: true, tail_ideals: true };
    let Some(m) = top else {
        return Ok(report);
    };
    for i in 0..=m {
        for j in i..=m {
            let target = w.term(i + j);
            if !h.bracket_span(&w.chain[i], &w.chain[j])?.leq(&target)? {
                report.graded = false;
            }
        }
    }
    let h0 = &w.chain[0];
    for i in (0..=m).filter(|i| 2 * i > m) {
        let hi = &w.chain[i];
        if !h.is_abelian(hi)? {
            report.abelian_tail = false;
        }
        if !h.is_ideal_of(hi, h0)? {
            report.tail_ideals = false;
        }
    }
    Ok(report)
}
