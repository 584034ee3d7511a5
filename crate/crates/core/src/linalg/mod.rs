//! Exact rational linear algebra on sparse matrices.

mod elimination;
mod matrix;
pub mod rational;
mod spectral;

pub use elimination::{
    column_space_basis, components, in_column_space, kernel_basis, rank, square_components,
    Component,
};
pub use matrix::Matrix;
pub use rational::{
    as_integer, common_denominator, display_rational, format_rational, int,
    is_nonpositive_integer, parse_rational, rat, Rational,
};
pub use spectral::{
    characteristic_polynomial, eval_operator_polynomial, idempotent_from_spectrum,
    rational_spectrum, RationalSpectrum,
};
