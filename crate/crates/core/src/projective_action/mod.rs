//! The projective subalgebra `sl(n+1)` of polynomial vector fields and its
//! action on `𝒜 ⊗ V`, where `𝒜` is the polynomial ring in `n` variables.

mod checks;
mod chevalley;
mod export;
mod graded;
mod module;
mod witt;

pub use checks::{
    apply_pseudo_product, bracket_consistency_failures, commutator_on_degree, compose_on_degree,
    derivative_identity_sides, triangle_delta, triangle_delta_with_shift,
    verify_bracket_consistency,
};
pub use chevalley::{cartan_matrix, chevalley_generators, ChevalleySet};
pub use export::{polynomial_module, OperatorDocument};
pub use graded::{GradedElement, MonomialBasis};
pub use module::{act, graded_basis, operator_matrix, ProjectiveModule};
pub use witt::{spanning_ops, SpanningOp, WittElement};
