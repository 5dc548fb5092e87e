//! Slow reference implementations for the subspace kernel. Subspaces here are
//! plain spanning lists; everything reduces to a rank computation by
//! unreduced Gaussian elimination, sharing no code with `Subspace`.

#![allow(dead_code)]

use klein_core::{LieAlgebra, Matrix, Rational, Representation, Subspace, Vector};

pub fn rank(vectors: &[Vector]) -> usize {
    let Some(n) = vectors.first().map(Vector::dim) else {
        return 0;
    };
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.entries().to_vec()).collect();
    let mut r = 0;
    for col in 0..n {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        for i in (r + 1)..rows.len() {
            if rows[i][col].is_zero() {
                continue;
            }
            let f = &rows[i][col] / &rows[r][col];
            let pivot_row = rows[r].clone();
            for (x, p) in rows[i].iter_mut().zip(&pivot_row).skip(col) {
                *x = &*x - &(&f * p);
            }
        }
        r += 1;
    }
    r
}

pub fn in_span(span: &[Vector], v: &Vector) -> bool {
    let mut with = span.to_vec();
    with.push(v.clone());
    rank(&with) == rank(span)
}

pub fn spans_within(inner: &[Vector], outer: &[Vector]) -> bool {
    inner.iter().all(|v| in_span(outer, v))
}

pub fn same_span(a: &[Vector], b: &[Vector]) -> bool {
    spans_within(a, b) && spans_within(b, a)
}

pub fn mat_vec(m: &Matrix, v: &Vector) -> Vector {
    let entries = (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j) * &v[j]).fold(Rational::zero(), |a, b| a + b))
        .collect();
    Vector::new(entries)
}

/// `[x, y]` summed straight from the structure constants.
pub fn bracket(g: &LieAlgebra, x: &Vector, y: &Vector) -> Vector {
    let n = g.dim();
    let mut out = vec![Rational::zero(); n];
    for i in 0..n {
        for j in 0..n {
            let c = &x[i] * &y[j];
            if c.is_zero() {
                continue;
            }
            for (k, s) in g.structure_constants(i, j).iter().enumerate() {
                out[k] = &out[k] + &(&c * s);
            }
        }
    }
    Vector::new(out)
}

/// Every subspace of `Q^n` with an RREF basis whose free entries lie in
/// `{-1, 0, 1}`.
pub fn rref_grid(n: usize) -> Vec<Vec<Vector>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let pivots: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        // Free slots: row r, column c > pivot r, c not a pivot column.
        let slots: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| ((p + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
            .collect();
        let combos = 3usize.pow(slots.len() as u32);
        for mut code in 0..combos {
            let mut rows: Vec<Vec<i64>> = pivots
                .iter()
                .map(|&p| {
                    let mut row = vec![0; n];
                    row[p] = 1;
                    row
                })
                .collect();
            for &(r, c) in &slots {
                rows[r][c] = (code % 3) as i64 - 1;
                code /= 3;
            }
            out.push(rows.iter().map(|r| Vector::from_i64s(r)).collect());
        }
    }
    out
}

pub fn subspace(vectors: &[Vector], n: usize) -> Subspace {
    Subspace::span(vectors, n).unwrap()
}

/// Lattice identities and dimension counts for three subspaces given by
/// spanning lists.
pub fn check_lattice(a: &[Vector], b: &[Vector], c: &[Vector], n: usize) -> Result<(), String> {
    let (sa, sb, sc) = (subspace(a, n), subspace(b, n), subspace(c, n));
    let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_owned()) };
    ensure(sa.dim() == rank(a), "dim equals oracle rank")?;
    ensure(same_span(sa.basis(), a), "canonical basis spans the input")?;
    let sum = sa.sum(&sb).unwrap();
    let meet = sa.intersect(&sb).unwrap();
    let ab: Vec<Vector> = a.iter().chain(b).cloned().collect();
    ensure(same_span(sum.basis(), &ab), "sum spans the union")?;
    ensure(spans_within(meet.basis(), a) && spans_within(meet.basis(), b), "meet lies in both")?;
    ensure(meet.dim() + rank(&ab) == rank(a) + rank(b), "dim(A∩B) + dim(A+B) = dim A + dim B")?;
    ensure(sum == sb.sum(&sa).unwrap() && meet == sb.intersect(&sa).unwrap(), "commutativity")?;
    ensure(sa.intersect(&sum).unwrap() == sa && sa.sum(&meet).unwrap() == sa, "absorption")?;
    ensure(
        sum.sum(&sc).unwrap() == sa.sum(&sb.sum(&sc).unwrap()).unwrap()
            && meet.intersect(&sc).unwrap() == sa.intersect(&sb.intersect(&sc).unwrap()).unwrap(),
        "associativity",
    )?;
    // Modular law with A ∩ C ⊆ C.
    let ac = sa.intersect(&sc).unwrap();
    ensure(
        ac.sum(&sb.intersect(&sc).unwrap()).unwrap() == ac.sum(&sb).unwrap().intersect(&sc).unwrap(),
        "modular law",
    )?;
    ensure(sa.leq(&sum).unwrap() && meet.leq(&sa).unwrap(), "order")?;
    ensure(sa.leq(&sb).unwrap() == spans_within(a, b), "leq agrees with oracle inclusion")?;
    Ok(())
}

/// Brute-force maximality of `relative_invariant` on the grid.
pub fn check_relative_invariant(s: &Subspace, ops: &[Matrix], target: &Subspace) -> Result<(), String> {
    let n = s.ambient_dim();
    let result = s.relative_invariant(ops, target).unwrap();
    let maps_in = |basis: &[Vector]| ops.iter().all(|m| basis.iter().all(|v| in_span(target.basis(), &mat_vec(m, v))));
    if !spans_within(result.basis(), s.basis()) || !maps_in(result.basis()) {
        return Err("result violates its defining property".into());
    }
    for w in rref_grid(n) {
        if spans_within(&w, s.basis()) && maps_in(&w) && !spans_within(&w, result.basis()) {
            return Err(format!("grid subspace {w:?} qualifies but is not contained in the result"));
        }
    }
    Ok(())
}

pub fn is_ideal(g: &LieAlgebra, basis: &[Vector]) -> bool {
    (0..g.dim()).all(|i| basis.iter().all(|v| in_span(basis, &bracket(g, &g.basis_vector(i), v))))
}

/// Brute-force maximality of `largest_ideal_in`, and agreement with the
/// dual route.
pub fn check_largest_ideal(g: &LieAlgebra, s: &Subspace) -> Result<(), String> {
    let result = g.largest_ideal_in(s).unwrap();
    if result != g.largest_ideal_in_dual(s).unwrap() {
        return Err("primal and dual routes disagree".into());
    }
    if !spans_within(result.basis(), s.basis()) || !is_ideal(g, result.basis()) {
        return Err("result is not an ideal inside s".into());
    }
    for w in rref_grid(g.dim()) {
        if spans_within(&w, s.basis()) && is_ideal(g, &w) && !spans_within(&w, result.basis()) {
            return Err(format!("grid ideal {w:?} inside s is not contained in the result"));
        }
    }
    Ok(())
}

/// Algebra of dimension `1 + d` spanned by `t` and `V = Q^d` with
/// `[t, v] = A v` and `V` abelian. Valid for every square `A`.
pub fn one_dim_extension(m: &Matrix) -> LieAlgebra {
    let d = m.rows();
    let mut names = vec!["t".to_owned()];
    names.extend((1..=d).map(|a| format!("v{a}")));
    let brackets: Vec<(usize, usize, Vector)> = (0..d)
        .map(|a| {
            let mut image = vec![Rational::zero()];
            image.extend((0..d).map(|b| a_entry(a, b, m)));
            (0, a + 1, Vector::new(image))
        })
        .collect();
    LieAlgebra::from_brackets(names, &brackets).unwrap()
}

fn a_entry(column: usize, row: usize, m: &Matrix) -> Rational {
    m.get(row, column).clone()
}

/// Greedy chain length computed with the oracle: `None` when it stalls.
pub fn greedy_length(rep: &Representation, v: &Vector) -> Option<usize> {
    let d = rep.space_dim();
    let mut current = vec![v.clone()];
    let mut length = 0;
    loop {
        let r = current.len();
        if r == d {
            return Some(length);
        }
        length += 1;
        // Keep only independent vectors so the list stays at most d long.
        let mut next = current.clone();
        for m in rep.matrices() {
            for w in &current {
                let image = mat_vec(m, w);
                if !in_span(&next, &image) {
                    next.push(image);
                }
            }
        }
        if next.len() == r {
            return None;
        }
        current = next;
    }
}
