use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::greedy_chain;
use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Rational, Vector};
use crate::liealg::Representation;

/// Which start vectors [`jet_order_search`] tries, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchStrategy {
    /// The standard basis vectors.
    Basis,
    /// The standard basis followed by `count` seeded random vectors with
    /// entries in `{-2, …, 2}` (zero draws are redrawn).
    BasisAndRandom {
        seed: u64,
        count: usize,
    },
    Explicit(Vec<Vector>),
}

impl SearchStrategy {
    pub fn candidates(&self, dim: usize) -> Result<Vec<Vector>> {
        let basis = || (0..dim).map(|i| Vector::unit(dim, i));
        let candidates: Vec<Vector> = match self {
            SearchStrategy::Basis => basis().collect(),
            SearchStrategy::BasisAndRandom { seed, count } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut out: Vec<Vector> = basis().collect();
                while out.len() < dim + count {
                    let v = Vector::new((0..dim).map(|_| Rational::from(rng.gen_range(-2i64..=2))).collect());
                    if !v.is_zero() {
                        out.push(v);
                    }
                }
                out
            }
            SearchStrategy::Explicit(vs) => vs.clone(),
        };
        if candidates.is_empty() {
            return Err(Error::EmptyCandidates);
        }
        Ok(candidates)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CandidateOutcome {
    pub candidate: Vector,
    /// Chain length, or 0 when the chain stalled before reaching `V`.
    pub length: usize,
    pub stalled: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetSearchResult {
    pub best_length: usize,
    /// First candidate (in candidate order) attaining `best_length`.
    pub witness: Vector,
    /// `best_length` equals the hard bound `dim V - 1`.
    pub certified_maximal: bool,
    pub per_candidate: Vec<CandidateOutcome>,
}

/// Greedy chains from every candidate; the best line-start length is a lower
/// bound for the jet-order, and is exact when it meets `dim V - 1`.
pub fn jet_order_search(rep: &Representation, strategy: &SearchStrategy) -> Result<JetSearchResult> {
    let d = rep.space_dim();
    let candidates = strategy.candidates(d)?;
    let mut per_candidate = Vec::with_capacity(candidates.len());
    for candidate in candidates {
        check_dim(d, candidate.dim())?;
        let chain = greedy_chain(rep, &candidate)?;
        let stalled = chain.is_stalled();
        let length = if stalled { 0 } else { chain.len() };
        per_candidate.push(CandidateOutcome { candidate, length, stalled });
    }
    let best = per_candidate
        .iter()
        .enumerate()
        .max_by(|(i, a), (j, b)| a.length.cmp(&b.length).then(j.cmp(i)))
        .map(|(_, c)| c)
        .expect("candidates are nonempty");
    Ok(JetSearchResult {
        best_length: best.length,
        witness: best.candidate.clone(),
        certified_maximal: best.length + 1 == d,
        per_candidate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sl2, sympower};
    use alloc::vec;

    #[test]
    fn sympower_basis_search() {
        for k in 1..=6 {
            let r = jet_order_search(&sympower(k).unwrap(), &SearchStrategy::Basis).unwrap();
            assert_eq!(r.best_length, k);
            assert_eq!(r.witness, Vector::unit(k + 1, 0));
            assert!(r.certified_maximal);
        }
    }

    #[test]
    fn adjoint_sl2_search() {
        let ad = Representation::adjoint(&sl2()).unwrap();
        let r = jet_order_search(&ad, &SearchStrategy::Basis).unwrap();
        assert_eq!(r.best_length, 2);
        assert_eq!(r.witness, Vector::unit(3, 0));
        assert!(r.certified_maximal);
        let lengths: Vec<usize> = r.per_candidate.iter().map(|c| c.length).collect();
        assert_eq!(lengths, vec![2, 2, 1]);
    }

    #[test]
    fn zero_representation_stalls_everywhere() {
        let zero = Representation::zero(sl2(), 3).unwrap();
        let r = jet_order_search(&zero, &SearchStrategy::BasisAndRandom { seed: 7, count: 5 }).unwrap();
        assert_eq!(r.per_candidate.len(), 8);
        assert!(r.per_candidate.iter().all(|c| c.stalled && c.length == 0));
        assert_eq!(r.best_length, 0);
        assert!(!r.certified_maximal);
    }

    #[test]
    fn random_candidates_are_reproducible() {
        let s = SearchStrategy::BasisAndRandom { seed: 42, count: 10 };
        let a = s.candidates(4).unwrap();
        assert_eq!(a, s.candidates(4).unwrap());
        assert_eq!(a.len(), 14);
        assert!(a.iter().all(|v| !v.is_zero()));
        assert!(a.iter().flat_map(Vector::iter).all(|x| x.abs() <= Rational::from(2)));
    }

    #[test]
    fn empty_and_bad_candidates() {
        let rep = sympower(2).unwrap();
        assert_eq!(jet_order_search(&rep, &SearchStrategy::Explicit(vec![])), Err(Error::EmptyCandidates));
        assert!(jet_order_search(&rep, &SearchStrategy::Explicit(vec![Vector::zeros(3)])).is_err());
        assert!(jet_order_search(&rep, &SearchStrategy::Explicit(vec![Vector::unit(2, 0)])).is_err());
    }
}
