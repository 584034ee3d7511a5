//! Exact computations with the representations of sl(n+1) on `𝒜 ⊗ V`, where
//! `𝒜` is the polynomial ring in `n` variables and `V` an irreducible
//! gl(n)-module, acting through the projective vector fields.
//!
//! * [`linalg`]: sparse rational matrices, rank, kernels, spectral projectors
//! * [`gl_modules`]: irreducible gl(n)-modules, weights, the Pieri rule
//! * [`char_identity`]: characteristic identities and tensor projectors
//! * [`projective_action`]: the vector-field action on graded pieces
//! * [`irreducibility`]: the irreducibility criterion and composition series
//! * [`report`], [`selfcheck`]: what the `projrep` binary prints

pub mod char_identity;
pub mod error;
pub mod gl_modules;
pub mod irreducibility;
pub mod linalg;
pub mod projective_action;
pub mod report;
pub mod selfcheck;

pub use error::{Error, Result};
pub use gl_modules::{build_irreducible, DominantLabels, GlModule, Representation, Weight};
pub use linalg::{Matrix, Rational};
