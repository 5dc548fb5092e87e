//! Structure-constant Lie algebras and their representations.

mod algebra;
mod invariant;
mod representation;
mod structure;
mod validation;

pub use algebra::LieAlgebra;
pub use invariant::IrreducibilityVerdict;
pub use representation::Representation;
pub use validation::{Identity, Subject, ValidationReport, Violation};
