//! Irreducibility of `𝒜 ⊗ V`: the closed-form criterion, the `q_c`
//! coefficients, and the composition series in the reducible case.

mod criterion;
mod jordan_holder;
mod qcoeff;
mod submodule;

pub use criterion::{
    corollary_threshold, criterion, criterion_equivalence_check, criterion_value,
    eligible_indices, main_theorem_verdict, CriterionWitness, FailingPair, Verdict,
};
pub use jordan_holder::{jordan_holder, sl_dimension, JordanHolderReport};
pub use qcoeff::{q_coefficient, q_coefficient_bruteforce, residual_summands};
pub use submodule::{tensor_action_map, tensor_action_source, up_submodule_rank, PseudoSubmodule};
