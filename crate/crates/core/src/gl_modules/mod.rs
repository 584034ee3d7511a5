//! Finite-dimensional irreducible gl(n)-modules, weights, and the Pieri rule.

mod construct;
mod json;
mod pieri;
mod representation;
mod weight;

pub use construct::{build_irreducible, build_irreducible_capped, GlModule, DEFAULT_DIM_CAP};
pub use json::{ActionEntry, GlModuleDocument};
pub use pieri::{in_pieri_set, pieri_index_set, PieriIndexSet};
pub use representation::{
    annihilated_by, check_representation, highest_weight_vectors, raising_operators,
    tensor_product, weight_space_projector, ModuleData, Representation,
};
pub use weight::{weight_from_labels, weight_of_vector, weyl_dimension, DominantLabels, Weight};
