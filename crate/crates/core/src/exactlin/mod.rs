//! Exact rational linear algebra: scalars, dense arrays, canonical subspaces.

mod matrix;
mod rational;
mod subspace;
mod vector;

pub use matrix::Matrix;
pub use rational::Rational;
pub use subspace::{rref, Subspace};
pub use vector::Vector;
