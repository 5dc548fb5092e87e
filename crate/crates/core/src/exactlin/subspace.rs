use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{Matrix, Rational, Vector};
use crate::error::{check_dim, Result};

/// Reduced row-echelon form of `m` with zero rows removed, together with the
/// (strictly increasing) pivot columns.
pub fn rref(m: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, pivots) = rref_rows(m.row_vectors(), m.cols());
    let reduced = Matrix::from_vectors(&rows, m.cols()).expect("rows keep their width");
    (reduced, pivots)
}

/// Gauss-Jordan elimination over a list of rows of width `cols`.
fn rref_rows(mut rows: Vec<Vector>, cols: usize) -> (Vec<Vector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip().expect("pivot is nonzero");
        if !inv.is_one() {
            rows[r] = rows[r].scale(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = -&row[c];
                row.axpy(&factor, &pivot_row);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// A linear subspace of `ℚ^n`, stored as its canonical reduced row-echelon
/// basis. Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| Vector::unit(ambient_dim, i)).collect(),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Canonical span of `vectors`, each of length `ambient_dim`.
    pub fn span(vectors: &[Vector], ambient_dim: usize) -> Result<Self> {
        for v in vectors {
            check_dim(ambient_dim, v.dim())?;
        }
        let (basis, pivots) = rref_rows(vectors.to_vec(), ambient_dim);
        Ok(Subspace { ambient_dim, basis, pivots })
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(indices: &[usize], ambient_dim: usize) -> Result<Self> {
        let vectors: Vec<Vector> = indices.iter().map(|&i| Vector::unit(ambient_dim, i)).collect();
        Self::span(&vectors, ambient_dim)
    }

    /// Null space of `m`.
    pub fn kernel(m: &Matrix) -> Self {
        let (reduced, pivots) = rref(m);
        let n = m.cols();
        let mut generators = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for free in 0..n {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut entries = vec![Rational::zero(); n];
            entries[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                entries[p] = -reduced.get(row, free);
            }
            generators.push(Vector::new(entries));
        }
        Self::span(&generators, n).expect("kernel vectors have width cols(m)")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient_dim
    }

    /// `v` minus its echelon reduction against the basis; zero iff `v ∈ self`.
    pub fn residual(&self, v: &Vector) -> Result<Vector> {
        check_dim(self.ambient_dim, v.dim())?;
        let mut r = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            let c = -&r[p];
            r.axpy(&c, b);
        }
        Ok(r)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool> {
        Ok(self.residual(v)?.is_zero())
    }

    /// Inclusion `self ⊆ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        check_dim(other.ambient_dim, self.ambient_dim)?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        for b in &self.basis {
            if !other.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Strict inclusion `self ⊊ other`.
    pub fn lt(&self, other: &Subspace) -> Result<bool> {
        Ok(self.dim() < other.dim() && self.leq(other)?)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        Subspace::span(&all, self.ambient_dim)
    }

    /// Intersection via the Zassenhaus sum-intersection elimination.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let n = self.ambient_dim;
        let mut rows: Vec<Vector> = self.basis.iter().map(|a| a.concat(a)).collect();
        rows.extend(other.basis.iter().map(|b| b.concat(&Vector::zeros(n))));
        let (reduced, pivots) = rref_rows(rows, 2 * n);
        let meet: Vec<Vector> = reduced
            .iter()
            .zip(&pivots)
            .filter(|(_, &p)| p >= n)
            .map(|(row, _)| Vector::new(row.entries()[n..].to_vec()))
            .collect();
        Subspace::span(&meet, n)
    }

    /// Span of `{m·b : b ∈ basis}`.
    pub fn image(&self, m: &Matrix) -> Result<Subspace> {
        let images = self.basis.iter().map(|b| m.mul_vec(b)).collect::<Result<Vec<_>>>()?;
        Subspace::span(&images, m.rows())
    }

    /// Adds `v` in place, keeping the basis canonical. Returns whether the
    /// dimension grew.
    pub(crate) fn insert(&mut self, v: &Vector) -> Result<bool> {
        let mut r = self.residual(v)?;
        let Some(lead) = r.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let inv = r[lead].recip().expect("leading entry is nonzero");
        r = r.scale(&inv);
        for b in &mut self.basis {
            if !b[lead].is_zero() {
                let c = -&b[lead];
                b.axpy(&c, &r);
            }
        }
        let at = self.pivots.partition_point(|&p| p < lead);
        self.pivots.insert(at, lead);
        self.basis.insert(at, r);
        Ok(true)
    }

    /// Smallest subspace containing `self` and mapped into itself by every
    /// operator.
    pub fn invariant_closure(&self, operators: &[Matrix]) -> Result<Subspace> {
        for op in operators {
            check_dim(self.ambient_dim, op.cols())?;
            check_dim(self.ambient_dim, op.rows())?;
        }
        let mut closure = self.clone();
        let mut frontier: Vec<Vector> = self.basis.clone();
        while !frontier.is_empty() && !closure.is_full() {
            let mut next = Vec::new();
            for w in &frontier {
                for op in operators {
                    let image = op.mul_vec(w)?;
                    if closure.insert(&image)? {
                        next.push(image);
                    }
                }
            }
            frontier = next;
        }
        Ok(closure)
    }

    /// `{x ∈ self : A·x ∈ target for every A in operators}`.
    ///
    /// Each operator cuts the current subspace down to the kernel of
    /// `x ↦ residual_target(A·x)` restricted to it.
    pub fn relative_invariant(&self, operators: &[Matrix], target: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient_dim, target.ambient_dim)?;
        for op in operators {
            check_dim(self.ambient_dim, op.rows())?;
            check_dim(self.ambient_dim, op.cols())?;
        }
        let mut current = self.clone();
        for op in operators {
            if current.is_zero() {
                break;
            }
            let residuals =
                current.basis.iter().map(|b| target.residual(&op.mul_vec(b)?)).collect::<Result<Vec<_>>>()?;
            if residuals.iter().all(Vector::is_zero) {
                continue;
            }
            // Columns are the residuals; kernel vectors are coefficient tuples
            // over the current basis.
            let constraints = Matrix::from_columns(&residuals, self.ambient_dim)?;
            let coefficients = Subspace::kernel(&constraints);
            let survivors: Vec<Vector> = coefficients
                .basis
                .iter()
                .map(|c| {
                    let mut x = Vector::zeros(self.ambient_dim);
                    for (ci, b) in c.iter().zip(&current.basis) {
                        x.axpy(ci, b);
                    }
                    x
                })
                .collect();
            current = Subspace::span(&survivors, self.ambient_dim)?;
        }
        Ok(current)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(n={}, ", self.ambient_dim)?;
        f.debug_list().entries(self.basis.iter()).finish()?;
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        Vector::from_i64s(xs)
    }

    #[test]
    fn rref_examples() {
        let (r, p) = rref(&Matrix::identity(3));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);

        let (r, p) = rref(&Matrix::from_i64s(&[&[1, 2], &[2, 4]]).unwrap());
        assert_eq!(r, Matrix::from_i64s(&[&[1, 2]]).unwrap());
        assert_eq!(p, vec![0]);

        let (r, p) = rref(&Matrix::zeros(2, 3));
        assert_eq!((r.rows(), r.cols()), (0, 3));
        assert!(p.is_empty());
    }

    #[test]
    fn span_examples() {
        assert_eq!(Subspace::span(&[v(&[1, 0]), v(&[0, 1])], 2).unwrap(), Subspace::full(2));
        let s = Subspace::span(&[v(&[1, 2]), v(&[2, 4])], 2).unwrap();
        assert_eq!(s.basis(), &[v(&[1, 2])]);
        assert_eq!(Subspace::span(&[], 2).unwrap().dim(), 0);
        assert!(Subspace::span(&[v(&[1, 2]), v(&[1])], 2).is_err());
    }

    #[test]
    fn span_is_idempotent_and_canonical() {
        let s = Subspace::span(&[v(&[2, 4, 1]), v(&[0, 3, 3])], 3).unwrap();
        assert_eq!(Subspace::span(s.basis(), 3).unwrap(), s);
        let t = Subspace::span(&[v(&[2, 7, 4]), v(&[2, 1, -2])], 3).unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn lattice_examples() {
        let x = Subspace::span(&[v(&[1, 0])], 2).unwrap();
        assert!(x.contains(&v(&[2, 0])).unwrap());
        assert!(!x.contains(&v(&[1, 1])).unwrap());

        let diag = Subspace::span(&[v(&[1, 1])], 2).unwrap();
        assert_eq!(Subspace::full(2).intersect(&diag).unwrap(), diag);
        assert!(x.intersect(&diag).unwrap().is_zero());
        assert_eq!(x.sum(&diag).unwrap(), Subspace::full(2));

        let k = Subspace::kernel(&Matrix::from_i64s(&[&[1, 1]]).unwrap());
        assert_eq!(k.basis(), &[v(&[1, -1])]);

        assert!(x.leq(&Subspace::span(&[v(&[1, 0, 0])], 3).unwrap()).is_err());
    }

    #[test]
    fn insert_matches_span() {
        let vs = [v(&[0, 2, 1, 0]), v(&[1, 1, 0, 3]), v(&[1, 3, 1, 3]), v(&[0, 0, 5, 1])];
        let mut s = Subspace::zero(4);
        let grew: Vec<bool> = vs.iter().map(|x| s.insert(x).unwrap()).collect();
        assert_eq!(grew, vec![true, true, false, true]);
        assert_eq!(s, Subspace::span(&vs, 4).unwrap());
    }

    #[test]
    fn relative_invariant_trivial_cases() {
        let s = Subspace::span(&[v(&[1, 2, 0])], 3).unwrap();
        let t = Subspace::zero(3);
        assert_eq!(s.relative_invariant(&[], &t).unwrap(), s);
        let ops = [Matrix::from_i64s(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]).unwrap()];
        let full = Subspace::full(3);
        assert_eq!(full.relative_invariant(&ops, &full).unwrap(), full);
        // x ↦ Nx into {0} is the kernel of the shift.
        assert_eq!(full.relative_invariant(&ops, &t).unwrap(), Subspace::span(&[v(&[1, 0, 0])], 3).unwrap());
    }
}
