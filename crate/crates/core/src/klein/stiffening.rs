use crate::error::{check_dim, Error, Result};
use crate::exactlin::Subspace;
use crate::liealg::LieAlgebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StiffeningReport {
    /// `g + h' = g'`
    pub sum_is_full: bool,
    /// `g ∩ h' = h`
    pub intersection_matches: bool,
    pub holds: bool,
    /// `dim g − dim h = dim g' − dim h'`; `None` unless the relation holds.
    pub dim_identity: Option<bool>,
}

/// Whether `(g, h)` stiffens `(g', h')` inside the ambient algebra `g'`.
pub fn is_stiffening(g_prime: &LieAlgebra, h_prime: &Subspace, g: &Subspace, h: &Subspace) -> Result<StiffeningReport> {
    for (label, s) in [("h'", h_prime), ("g", g), ("h", h)] {
        check_dim(g_prime.dim(), s.ambient_dim())?;
        if !g_prime.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra(label));
        }
    }
    let sum_is_full = g.sum(h_prime)?.is_full();
    let intersection_matches = &g.intersect(h_prime)? == h;
    let holds = sum_is_full && intersection_matches;
    let dim_identity = holds.then(|| g.dim() as i64 - h.dim() as i64 == g_prime.dim() as i64 - h_prime.dim() as i64);
    Ok(StiffeningReport { sum_is_full, intersection_matches, holds, dim_identity })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::sl2;

    fn coord(idx: &[usize]) -> Subspace {
        Subspace::coordinate(idx, 3).unwrap()
    }

    #[test]
    fn sl2_cases() {
        let g = sl2();
        // (e, f, h) = (0, 1, 2)
        let reflexive = is_stiffening(&g, &coord(&[0, 2]), &Subspace::full(3), &coord(&[0, 2])).unwrap();
        assert!(reflexive.holds);
        assert_eq!(reflexive.dim_identity, Some(true));

        let too_small = is_stiffening(&g, &coord(&[2]), &coord(&[0, 2]), &coord(&[2])).unwrap();
        assert!(!too_small.holds);
        assert!(!too_small.sum_is_full);
        assert_eq!(too_small.dim_identity, None);

        let borels = is_stiffening(&g, &coord(&[0, 2]), &coord(&[1, 2]), &coord(&[2])).unwrap();
        assert!(borels.holds);
        assert_eq!(borels.dim_identity, Some(true));

        let wrong_h = is_stiffening(&g, &coord(&[0, 2]), &coord(&[1, 2]), &Subspace::zero(3)).unwrap();
        assert!(wrong_h.sum_is_full && !wrong_h.intersection_matches);
    }

    #[test]
    fn rejects_non_subalgebras() {
        let g = sl2();
        assert_eq!(
            is_stiffening(&g, &coord(&[0, 1]), &Subspace::full(3), &coord(&[0, 1])),
            Err(Error::NotSubalgebra("h'"))
        );
    }
}
