//! Exact computation, validation and classification of degenerations of
//! polarized Hodge structures.
//!
//! The crate is organised bottom-up:
//!
//! * [`linalg`] — exact scalars, matrices and canonical subspaces over Q[i];
//! * [`hodge`] — polarized Hodge structures and the Hodge–Riemann relations;
//! * [`lmhs`] — weight filtrations, Deligne splittings, the nilpotent-orbit
//!   validator and the adjoint limiting mixed Hodge structure;
//! * [`roots`] — root systems, grading elements and orbit root counts;
//! * [`degen`] — minimal and maximal (Hodge–Tate / closed-orbit)
//!   degeneration classifiers and constructors;
//! * [`catalog`], [`diagram`], [`corpus`] — worked examples, (p,q)-diagram
//!   rendering and the invariant corpus runner used by the CLI.

pub mod bigrading;
pub mod catalog;
pub mod corpus;
pub mod degen;
pub mod diagram;
pub mod error;
pub mod hodge;
pub mod json;
pub mod linalg;
pub mod lmhs;
pub mod report;
pub mod roots;

pub use bigrading::{Bigrading, BigradingDims};
pub use error::{Error, ParseError, Result};
pub use hodge::{HodgeDatum, HodgeNumbers};
pub use linalg::{GaussianRational, MatrixGQ, Subspace};
pub use lmhs::{AdjointLmhs, LmhsDatum, WeightFiltration};
pub use report::Report;
