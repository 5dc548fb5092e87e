use alloc::vec::Vec;

use crate::exactlin::Vector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    Algebra,
    Representation,
}

/// The identity a violation breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    /// `c_ij^k = -c_ji^k`
    Antisymmetry,
    /// `[[x,y],z] + [[y,z],x] + [[z,x],y] = 0`
    Jacobi,
    /// `ρ([x,y]) = ρ(x)ρ(y) - ρ(y)ρ(x)`
    Homomorphism,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Antisymmetry => "antisymmetry",
            Identity::Jacobi => "jacobi",
            Identity::Homomorphism => "homomorphism",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub identity: Identity,
    /// Basis indices of the offending pair or triple.
    pub indices: Vec<usize>,
    /// Nonzero defect: a coefficient vector, or a row-major flattened matrix
    /// for homomorphism failures.
    pub discrepancy: Vector,
}

/// Outcome of an exhaustive identity check. Violations are ordered by
/// identity, then lexicographically by indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub subject: Subject,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub(crate) fn from_violations(subject: Subject, violations: Vec<Violation>) -> Self {
        ValidationReport { subject, passed: violations.is_empty(), violations }
    }
}
