use alloc::vec::Vec;

use super::{Direction, Filtration};
use crate::error::{check_dim, Error, Result};
use crate::exactlin::{Subspace, Vector};
use crate::liealg::Representation;

/// `span{ρ(b_i)w}` over the algebra basis and the basis of `s`.
pub fn image_span(rep: &Representation, s: &Subspace) -> Result<Subspace> {
    check_dim(rep.space_dim(), s.ambient_dim())?;
    let mut out = Subspace::zero(rep.space_dim());
    for w in s.basis() {
        for m in rep.matrices() {
            out.insert(&m.mul_vec(w)?)?;
        }
    }
    Ok(out)
}

/// Output of [`greedy_chain`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyChain {
    pub filtration: Filtration,
    /// Set when the iteration reached a proper invariant subspace instead of
    /// the whole space. The subspace is a reducibility witness.
    pub stall: Option<Subspace>,
}

impl GreedyChain {
    pub fn is_stalled(&self) -> bool {
        self.stall.is_some()
    }

    /// Number of stored proper subspaces.
    pub fn len(&self) -> usize {
        self.filtration.len()
    }

    pub fn is_empty(&self) -> bool {
        self.filtration.is_empty()
    }
}

/// `V_1 = span{v}`, `V_{i+1} = V_i + ρ(g)V_i`, until `V` is reached (not
/// stored) or the chain stalls at an invariant subspace.
pub fn greedy_chain(rep: &Representation, v: &Vector) -> Result<GreedyChain> {
    let d = rep.space_dim();
    check_dim(d, v.dim())?;
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let mut current = Subspace::span(core::slice::from_ref(v), d)?;
    let mut terms = Vec::new();
    // Vectors spanning V_i modulo V_{i-1}; by linearity only their images can
    // enlarge V_i.
    let mut frontier = alloc::vec![v.clone()];
    let mut stall = None;
    while !current.is_full() {
        terms.push(current.clone());
        let mut next = current.clone();
        let mut new_frontier = Vec::new();
        for w in &frontier {
            for m in rep.matrices() {
                let image = m.mul_vec(w)?;
                if next.insert(&image)? {
                    new_frontier.push(image);
                }
            }
        }
        if new_frontier.is_empty() {
            stall = Some(current);
            break;
        }
        current = next;
        frontier = new_frontier;
    }
    Ok(GreedyChain { filtration: Filtration::new(Direction::Ascending, d, terms)?, stall })
}

fn check_ascending(rep: &Representation, f: &Filtration) -> Result<()> {
    if f.direction() != Direction::Ascending {
        return Err(Error::DirectionMismatch);
    }
    check_dim(rep.space_dim(), f.ambient_dim())
}

/// Consecutive pairs `(V_i, V_{i+1})` with `V_{k+1} = V`.
fn with_top(f: &Filtration) -> impl Iterator<Item = (&Subspace, Subspace)> {
    let top = Subspace::full(f.ambient_dim());
    let subs = f.subspaces();
    subs.iter().enumerate().map(move |(i, s)| (s, subs.get(i + 1).cloned().unwrap_or_else(|| top.clone())))
}

/// Jet-filtration condition on every term: `ρ(g)V_i ⊄ V_i`, so that
/// `V_i ⊊ V_i + ρ(g)V_i`, and `ρ(g)V_i ⊆ V_{i+1}`.
pub fn validate_jet_filtration(rep: &Representation, f: &Filtration) -> Result<bool> {
    check_ascending(rep, f)?;
    for (term, next) in with_top(f) {
        let image = image_span(rep, term)?;
        if image.leq(term)? || !image.leq(&next)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A valid jet-filtration is maximally refined iff every successor equals
/// `V_i + ρ(g)V_i`: any insertable term would have to contain that sum while
/// staying strictly below the successor.
pub fn is_maximally_refined(rep: &Representation, f: &Filtration) -> Result<bool> {
    if !validate_jet_filtration(rep, f)? {
        return Err(Error::InvalidFiltration("not a jet-filtration of this representation".into()));
    }
    for (term, next) in with_top(f) {
        if term.sum(&image_span(rep, term)?)? != next {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{sl2, sympower};
    use alloc::vec;

    fn coord(idx: &[usize], n: usize) -> Subspace {
        Subspace::coordinate(idx, n).unwrap()
    }

    #[test]
    fn image_span_examples() {
        let zero = Representation::zero(sl2(), 3).unwrap();
        assert!(image_span(&zero, &Subspace::full(3)).unwrap().is_zero());

        let rep = sympower(2).unwrap();
        assert_eq!(image_span(&rep, &coord(&[0], 3)).unwrap(), coord(&[0, 1], 3));
        assert!(image_span(&rep, &Subspace::full(3)).unwrap().is_full());
    }

    #[test]
    fn greedy_examples() {
        let rep = sympower(2).unwrap();
        let from_v1 = greedy_chain(&rep, &Vector::unit(3, 0)).unwrap();
        assert_eq!(from_v1.filtration.dims(), vec![1, 2]);
        assert!(!from_v1.is_stalled());

        let from_sum = greedy_chain(&rep, &Vector::from_i64s(&[1, 0, 1])).unwrap();
        assert_eq!(from_sum.filtration.dims(), vec![1]);

        let zero = Representation::zero(sl2(), 2).unwrap();
        let v = Vector::from_i64s(&[1, 1]);
        let stalled = greedy_chain(&zero, &v).unwrap();
        assert_eq!(stalled.stall, Some(Subspace::span(&[v], 2).unwrap()));
        assert_eq!(stalled.len(), 1);

        assert_eq!(greedy_chain(&rep, &Vector::zeros(3)), Err(Error::ZeroVector));
    }

    #[test]
    fn one_dimensional_space_gives_empty_chain() {
        let trivial = Representation::zero(sl2(), 1).unwrap();
        let chain = greedy_chain(&trivial, &Vector::unit(1, 0)).unwrap();
        assert!(chain.is_empty());
        assert!(!chain.is_stalled());
        assert!(validate_jet_filtration(&trivial, &chain.filtration).unwrap());
    }

    #[test]
    fn validation_examples() {
        let rep = sympower(2).unwrap();
        let good = greedy_chain(&rep, &Vector::unit(3, 0)).unwrap().filtration;
        assert!(validate_jet_filtration(&rep, &good).unwrap());
        assert!(is_maximally_refined(&rep, &good).unwrap());

        // Middle term replaced by span{v2}: V_1 = span{v1} is no longer below it.
        assert!(Filtration::new(Direction::Ascending, 3, vec![coord(&[0], 3), coord(&[1], 3)]).is_err());
        // span{v2} alone: ρ(g)v2 = span{v1, v3} is not inside a chain ending
        // at span{v1, v2}.
        let broken = Filtration::new(Direction::Ascending, 3, vec![coord(&[1], 3), coord(&[0, 1], 3)]).unwrap();
        assert!(!validate_jet_filtration(&rep, &broken).unwrap());
        assert!(is_maximally_refined(&rep, &broken).is_err());

        let top = Filtration::new(Direction::Ascending, 3, vec![coord(&[2], 3)]).unwrap();
        assert!(validate_jet_filtration(&rep, &top).unwrap());
        assert_eq!(image_span(&rep, &coord(&[2], 3)).unwrap(), coord(&[1, 2], 3));

        assert_eq!(validate_jet_filtration(&rep, &good.to_descending().unwrap()), Err(Error::DirectionMismatch));
    }

    #[test]
    fn skipping_a_greedy_term_is_not_maximal() {
        let rep = sympower(3).unwrap();
        let greedy = greedy_chain(&rep, &Vector::unit(4, 0)).unwrap().filtration;
        assert_eq!(greedy.dims(), vec![1, 2, 3]);
        let coarse = Filtration::new(
            Direction::Ascending,
            4,
            vec![greedy.subspaces()[0].clone(), greedy.subspaces()[2].clone()],
        )
        .unwrap();
        assert!(validate_jet_filtration(&rep, &coarse).unwrap());
        assert!(!is_maximally_refined(&rep, &coarse).unwrap());
    }

    #[test]
    fn single_term_with_full_sum_is_maximal() {
        let rep = sympower(2).unwrap();
        let f = Filtration::new(Direction::Ascending, 3, vec![coord(&[2], 3)]).unwrap();
        // span{v3} + ρ(g)v3 = span{v2, v3} ≠ V, so this one is refinable ...
        assert!(!is_maximally_refined(&rep, &f).unwrap());
        // ... while span{v1 + v3} reaches V in one step.
        let g = Filtration::new(
            Direction::Ascending,
            3,
            vec![Subspace::span(&[Vector::from_i64s(&[1, 0, 1])], 3).unwrap()],
        )
        .unwrap();
        assert!(is_maximally_refined(&rep, &g).unwrap());
    }
}
