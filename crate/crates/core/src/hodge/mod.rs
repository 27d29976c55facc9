//! Polarized Hodge structures `(V, Q, F•)` and the Hodge–Riemann relations.

mod filtration;
mod phs;

pub use filtration::{Filtration, IncreasingFiltration};
pub use phs::{model_phs, HodgeDatum, HodgeNumbers, PolarizationForm};
