use alloc::format;
use alloc::vec::Vec;

use crate::error::{check_dim, Error, Result};
use crate::exactlin::Subspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Ascending,
    Descending,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Ascending => "ascending",
            Direction::Descending => "descending",
        }
    }
}

/// A strictly nested chain of proper nonzero subspaces of `ℚ^ambient_dim`.
///
/// Ascending chains implicitly start at `{0}` and end at `V`; descending
/// chains start at `V` and end at `{0}`. Neither endpoint is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Filtration {
    direction: Direction,
    ambient_dim: usize,
    subspaces: Vec<Subspace>,
}

impl Filtration {
    pub fn new(direction: Direction, ambient_dim: usize, subspaces: Vec<Subspace>) -> Result<Self> {
        for (i, s) in subspaces.iter().enumerate() {
            check_dim(ambient_dim, s.ambient_dim())?;
            if s.is_zero() || s.is_full() {
                return Err(Error::InvalidFiltration(format!("term {i} is not proper and nonzero")));
            }
        }
        for (i, pair) in subspaces.windows(2).enumerate() {
            let (lower, upper) = match direction {
                Direction::Ascending => (&pair[0], &pair[1]),
                Direction::Descending => (&pair[1], &pair[0]),
            };
            if !lower.lt(upper)? {
                return Err(Error::InvalidFiltration(format!("terms {i} and {} are not strictly nested", i + 1)));
            }
        }
        Ok(Filtration { direction, ambient_dim, subspaces })
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    /// Number of stored proper subspaces.
    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Subspace::dim).collect()
    }

    /// Relabels an ascending chain `V_1 ⊊ … ⊊ V_k` as the descending chain
    /// `V_0 ⊋ … ⊋ V_{k-1}` with `V_j(desc) = V_{k-j}(asc)`.
    pub fn to_descending(&self) -> Result<Filtration> {
        self.reversed(Direction::Ascending, Direction::Descending)
    }

    pub fn to_ascending(&self) -> Result<Filtration> {
        self.reversed(Direction::Descending, Direction::Ascending)
    }

    fn reversed(&self, from: Direction, to: Direction) -> Result<Filtration> {
        if self.direction != from {
            return Err(Error::DirectionMismatch);
        }
        let mut subspaces = self.subspaces.clone();
        subspaces.reverse();
        Ok(Filtration { direction: to, ambient_dim: self.ambient_dim, subspaces })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn chain(dims: &[usize], n: usize) -> Vec<Subspace> {
        dims.iter().map(|&d| Subspace::coordinate(&(0..d).collect::<Vec<_>>(), n).unwrap()).collect()
    }

    #[test]
    fn rejects_bad_chains() {
        assert!(Filtration::new(Direction::Ascending, 3, chain(&[0], 3)).is_err());
        assert!(Filtration::new(Direction::Ascending, 3, chain(&[3], 3)).is_err());
        assert!(Filtration::new(Direction::Ascending, 3, chain(&[1, 1], 3)).is_err());
        assert!(Filtration::new(Direction::Ascending, 3, chain(&[2, 1], 3)).is_err());
        assert!(Filtration::new(Direction::Descending, 3, chain(&[2, 1], 3)).is_ok());
        let skew = vec![Subspace::coordinate(&[0], 3).unwrap(), Subspace::coordinate(&[1, 2], 3).unwrap()];
        assert!(Filtration::new(Direction::Ascending, 3, skew).is_err());
    }

    #[test]
    fn relabel_reverses() {
        let f = Filtration::new(Direction::Ascending, 3, chain(&[1, 2], 3)).unwrap();
        let d = f.to_descending().unwrap();
        assert_eq!(d.dims(), vec![2, 1]);
        assert_eq!(d.direction(), Direction::Descending);
        assert_eq!(d.to_ascending().unwrap(), f);
        assert_eq!(d.to_descending(), Err(Error::DirectionMismatch));

        let single = Filtration::new(Direction::Ascending, 3, chain(&[1], 3)).unwrap();
        assert_eq!(single.to_descending().unwrap().dims(), vec![1]);
    }
}
