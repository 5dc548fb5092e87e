use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::str::FromStr;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Rational, Subspace, Vector};
use crate::liealg::{LieAlgebra, Representation};

pub const E: usize = 0;
pub const F: usize = 1;
pub const H: usize = 2;

/// `sl(2)` with basis `(e, f, h)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2() -> LieAlgebra {
    let names: Vec<String> = ["e", "f", "h"].iter().map(|s| s.to_string()).collect();
    LieAlgebra::from_brackets(
        names,
        &[
            (E, F, Vector::from_i64s(&[0, 0, 1])),
            (E, H, Vector::from_i64s(&[-2, 0, 0])),
            (F, H, Vector::from_i64s(&[0, 2, 0])),
        ],
    )
    .expect("sl2 structure constants satisfy Jacobi")
}

/// A monomial `x^a y^b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Monomial {
    x: u32,
    y: u32,
}

#[derive(Debug, Clone, Copy)]
enum Variable {
    X,
    Y,
}

/// `multiplier · ∂/∂variable`, one term of a first-order operator.
#[derive(Debug, Clone, Copy)]
struct VectorFieldTerm {
    coefficient: i64,
    multiplier: Variable,
    derivative: Variable,
}

impl VectorFieldTerm {
    fn apply(&self, m: Monomial) -> Option<(i64, Monomial)> {
        let (power, mut out) = match self.derivative {
            Variable::X => (m.x, Monomial { x: m.x.checked_sub(1)?, y: m.y }),
            Variable::Y => (m.y, Monomial { x: m.x, y: m.y.checked_sub(1)? }),
        };
        match self.multiplier {
            Variable::X => out.x += 1,
            Variable::Y => out.y += 1,
        }
        Some((self.coefficient * i64::from(power), out))
    }
}

/// Vector fields on the plane acting on degree-`k` forms: `e = x∂_y`,
/// `f = y∂_x`, `h = x∂_x − y∂_y`.
fn sl2_vector_fields() -> [Vec<VectorFieldTerm>; 3] {
    use Variable::{X, Y};
    let term = |coefficient, multiplier, derivative| VectorFieldTerm { coefficient, multiplier, derivative };
    [vec![term(1, X, Y)], vec![term(1, Y, X)], vec![term(1, X, X), term(-1, Y, Y)]]
}

/// Basis `v_1 = y^k, v_2 = y^{k-1}x, …, v_{k+1} = x^k`; index `i` is 0-based.
fn basis_monomial(k: u32, i: u32) -> Monomial {
    Monomial { x: i, y: k - i }
}

fn basis_index(m: Monomial) -> usize {
    m.x as usize
}

/// The degree-`k` symmetric power of the defining representation of `sl(2)`,
/// on homogeneous polynomials in `x, y`. The matrices are produced by
/// differentiating each basis monomial.
pub fn sympower(k: usize) -> Result<Representation> {
    if k < 1 {
        return Err(Error::InvalidParameter("symmetric power needs k >= 1".into()));
    }
    let degree = u32::try_from(k).map_err(|_| Error::InvalidParameter("k too large".into()))?;
    let d = k + 1;
    let matrices = sl2_vector_fields()
        .iter()
        .map(|field| {
            let mut m = Matrix::zeros(d, d);
            for col in 0..=degree {
                for term in field {
                    if let Some((c, image)) = term.apply(basis_monomial(degree, col)) {
                        let row = basis_index(image);
                        let entry = m.get(row, col as usize) + &Rational::from(c);
                        m.set(row, col as usize, entry);
                    }
                }
            }
            m
        })
        .collect();
    Representation::new(sl2(), matrices)
}

/// Named subalgebras of `sl(2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSubalgebra {
    /// `span{h}`
    Cartan,
    /// `span{e, h}`
    BorelUpper,
    /// `span{f, h}`
    BorelLower,
}

impl NamedSubalgebra {
    pub const ALL: [NamedSubalgebra; 3] = [Self::Cartan, Self::BorelUpper, Self::BorelLower];

    pub fn name(self) -> &'static str {
        match self {
            Self::Cartan => "cartan",
            Self::BorelUpper => "borel_upper",
            Self::BorelLower => "borel_lower",
        }
    }
}

impl FromStr for NamedSubalgebra {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.name() == s)
            .ok_or_else(|| Error::InvalidParameter(alloc::format!("unknown subalgebra name {s:?}")))
    }
}

pub fn named_subalgebra(name: NamedSubalgebra) -> Subspace {
    let indices: &[usize] = match name {
        NamedSubalgebra::Cartan => &[H],
        NamedSubalgebra::BorelUpper => &[E, H],
        NamedSubalgebra::BorelLower => &[F, H],
    };
    Subspace::coordinate(indices, 3).expect("indices below 3")
}
