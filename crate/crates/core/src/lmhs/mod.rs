//! Limiting mixed Hodge structures: weight filtrations of nilpotents,
//! Deligne splittings, the nilpotent-orbit validator, the adjoint structure
//! on `g ⊂ End(V, Q)` and the reduced limit.

mod adjoint;
mod datum;
mod limit;
mod splitting;
mod validate;
mod weight;

pub use adjoint::{
    adjoint_lmhs, adjoint_lmhs_in, diagonal_levi, endomorphism_algebra, trace_of_product,
    AdjointLmhs, DiagonalLevi,
};
pub use datum::LmhsDatum;
pub use limit::{is_hodge_tate, reduced_limit, reduced_limit_violations};
pub use splitting::{
    deligne_splitting, hodge_filtration_of, n_type_violations, reconstructs, splitting_of,
};
pub use validate::{
    disc_sample, epsilon, primitive_hodge_datum, primitive_quotient, primitives, qk_form,
    qk_form_with, validate_lmhs, validate_lmhs_with,
};
pub use weight::{weight_filtration, WeightFiltration};
