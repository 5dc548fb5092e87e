use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use super::{named_subalgebra, sympower, NamedSubalgebra};
use crate::error::{Error, Result};
use crate::exactlin::Vector;
use crate::jetfilt::{greedy_chain, jet_order_search, SearchStrategy};
use crate::klein::{analyze_pair, build_klein_pair, PairAnalysis, StabilizerChoice};

/// Note attached to every family report about the order column.
pub const ORD_DISCREPANCY_NOTE: &str = "ord_abelian follows the recursion \
h_{i+1} = {x in h_i : [x,h] in h_i} literally and equals k for degree k \
(ord = 1 at k = 1, ord = 2 at k = 2). The closed form k+1 usually quoted for these pairs \
(column ord_stated) is one larger: the relabelled descending chain V_0 > ... > V_{k-1} has k \
proper terms, not k+1.";

/// One row of the symmetric-power family table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyRow {
    pub k: usize,
    pub jet_length: usize,
    pub certified: bool,
    /// Index (0-based) of the first basis vector attaining `jet_length`.
    pub witness_index: Option<usize>,
    pub ord_abelian: usize,
    pub ord_stabilizer: usize,
    /// The value `k + 1` stated for these pairs, kept for comparison.
    pub ord_stated: usize,
    pub weissfeiler_dims_abelian: Vec<usize>,
    pub weissfeiler_dims_stabilizer: Vec<usize>,
    pub effective_abelian: bool,
    pub effective_stabilizer: bool,
    /// Weissfeiler fixpoint and largest-ideal route agree for both pairs.
    pub routes_agree: bool,
    pub half_tail_abelian: bool,
    pub half_tail_stabilizer: bool,
}

impl FamilyRow {
    pub fn effective(&self) -> bool {
        self.effective_abelian && self.effective_stabilizer
    }

    pub fn half_tail(&self) -> bool {
        self.half_tail_abelian && self.half_tail_stabilizer
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub rows: Vec<FamilyRow>,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyError {
    Computation { k: usize, source: Error },
    Check { k: usize, reason: String, row: Box<FamilyRow>, rows_so_far: Vec<FamilyRow> },
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::Computation { k, source } => write!(f, "k = {k}: {source}"),
            FamilyError::Check { k, reason, .. } => write!(f, "k = {k}: {reason}"),
        }
    }
}

impl core::error::Error for FamilyError {}

/// Computes one table row for `sympower(k)` without judging it.
pub fn family_row(k: usize) -> Result<FamilyRow> {
    let rep = sympower(k)?;
    let search = jet_order_search(&rep, &SearchStrategy::Basis)?;
    let witness_index = search.witness.iter().position(|x| !x.is_zero());
    let filtration = greedy_chain(&rep, &Vector::unit(k + 1, 0))?.filtration;
    let analysis = |choice| -> Result<PairAnalysis> { analyze_pair(&build_klein_pair(&rep, &filtration, choice)?) };
    let abelian = analysis(StabilizerChoice::Abelian)?;
    let stabilizer = analysis(StabilizerChoice::Subalgebra(named_subalgebra(NamedSubalgebra::BorelLower)))?;
    Ok(FamilyRow {
        k,
        jet_length: search.best_length,
        certified: search.certified_maximal,
        witness_index,
        ord_abelian: abelian.weissfeiler.ord,
        ord_stabilizer: stabilizer.weissfeiler.ord,
        ord_stated: k + 1,
        weissfeiler_dims_abelian: abelian.weissfeiler.dims(),
        weissfeiler_dims_stabilizer: stabilizer.weissfeiler.dims(),
        effective_abelian: abelian.effective && abelian.weissfeiler.effective,
        effective_stabilizer: stabilizer.effective && stabilizer.weissfeiler.effective,
        routes_agree: abelian.consistent() && stabilizer.consistent(),
        half_tail_abelian: abelian.half_tail.passed(),
        half_tail_stabilizer: stabilizer.half_tail.passed(),
    })
}

/// Builds rows for `k = 1..=k_max` and checks that the jet length is `k`
/// and certified, that both pairs are effective with agreeing routes, and
/// that the abelian order increases strictly with `k`.
pub fn verify_family(k_max: usize) -> Result<FamilyReport, FamilyError> {
    if k_max < 1 {
        return Err(FamilyError::Computation {
            k: k_max,
            source: Error::InvalidParameter("k_max must be at least 1".into()),
        });
    }
    let mut rows: Vec<FamilyRow> = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let row = family_row(k).map_err(|source| FamilyError::Computation { k, source })?;
        let previous_ord = rows.last().map(|r| r.ord_abelian);
        let failure = if row.jet_length != k {
            Some(format!("jet length {} differs from {k}", row.jet_length))
        } else if !row.certified {
            Some("jet length is not certified maximal".into())
        } else if !row.effective() {
            Some("a Klein pair is not effective".into())
        } else if !row.routes_agree {
            Some("Weissfeiler fixpoint and largest ideal disagree".into())
        } else if previous_ord.is_some_and(|p| row.ord_abelian <= p) {
            Some(format!("ord {} does not increase over the previous row", row.ord_abelian))
        } else {
            None
        };
        if let Some(reason) = failure {
            return Err(FamilyError::Check { k, reason, row: Box::new(row), rows_so_far: rows });
        }
        rows.push(row);
    }
    Ok(FamilyReport { rows, note: ORD_DISCREPANCY_NOTE })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn first_two_rows() {
        let report = verify_family(2).unwrap();
        let lengths: Vec<usize> = report.rows.iter().map(|r| r.jet_length).collect();
        assert_eq!(lengths, vec![1, 2]);
        assert!(report.rows.iter().all(|r| r.certified && r.effective()));
        let ords: Vec<usize> = report.rows.iter().map(|r| r.ord_abelian).collect();
        assert_eq!(ords, vec![1, 2]);
        let stated: Vec<usize> = report.rows.iter().map(|r| r.ord_stated).collect();
        assert_eq!(stated, vec![2, 3]);
        assert_eq!(report.rows[1].weissfeiler_dims_stabilizer, vec![4, 2]);
        assert_eq!(report.rows[0].witness_index, Some(0));
    }

    #[test]
    fn zero_k_max_is_rejected() {
        assert!(matches!(verify_family(0), Err(FamilyError::Computation { .. })));
    }
}
