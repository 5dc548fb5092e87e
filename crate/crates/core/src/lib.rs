//! Exact rational toolkit for high-order Klein pairs.
//!
//! The crate is `no_std` (it needs `alloc`). Every scalar is an
//! arbitrary-precision [`Rational`]; subspaces are kept in canonical reduced
//! row-echelon form so that equality and inclusion are structural.
//!
//! Layout:
//!
//! - [`exactlin`]: rationals, dense vectors and matrices, canonical subspaces.
//! - [`liealg`]: structure-constant Lie algebras, representations, ideals.
//! - [`jetfilt`]: jet-filtrations of representations and jet-order search.
//! - [`klein`]: semidirect products, Klein pairs, Weissfeiler filtrations.
//! - [`catalog`]: `sl(2)`, its symmetric powers, and the family harness.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod exactlin;
pub mod jetfilt;
pub mod klein;
pub mod liealg;

pub use error::{Error, Result};
pub use exactlin::{Matrix, Rational, Subspace, Vector};
pub use liealg::{LieAlgebra, Representation, ValidationReport};
