//! Exact linear algebra over the Gaussian rationals Q[i].

mod matrix;
mod scalar;
mod subspace;

pub use matrix::MatrixGQ;
pub use scalar::GaussianRational;
pub use subspace::{image, kernel, QuotientMap, Subspace};
