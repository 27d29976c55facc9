//! Minimal and maximal degenerations: classification by Hodge numbers and
//! explicit nilpotent-orbit constructors.

pub mod blocks;
pub mod closed;
pub mod hodge_tate;
pub mod minimal;
pub mod normal_forms;
pub mod principal;

pub use blocks::{assemble, Block};
pub use closed::{
    c_orb_figure_pattern, cp_orb_check, n_strings, period_closed_check, period_closed_k4_violation,
    period_closed_weight_two, primitive_dims, NString,
};
pub use hodge_tate::{atomic_block, ht_construct, ht_gate, ht_plan, HtPlan};
pub use minimal::{minimal_types, minimal_witness, MinimalKind, MinimalType};
pub use normal_forms::{
    basic_boundary_exhaustion, check_normal_form, normal_form_q, normal_forms, period_domains, NormalForm,
    NormalFormCheck, NormalFormFamily,
};
pub use principal::{principal_characteristic_vector, principal_lmhs, PrincipalFamily};
