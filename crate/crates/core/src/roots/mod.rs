//! Root systems, grading elements and the root-theoretic descriptions of
//! Hodge structures, their degenerations and real orbits.

mod characteristic;
mod grading;
mod orbits;
mod system;

pub use characteristic::{
    characteristic_vector, classical_characteristic_vector, even_jm_candidates, jm_parabolic,
    normalize_dominant, passes_sl2_dimension_test, y_levels,
};
pub use grading::{
    adjoint_bigrading, compactness, grading_from_sigma, l_decomposition, rep_bigrading,
    sigma_from_grading, GradingElement, WeightMultiset,
};
pub use orbits::{closed_orbit_criterion, orbit_dims, InvolutionDatum, OrbitDims};
pub use system::{build_root_system, expected_root_count, RootSystem, TypeLetter};
