//! Tensor-product polynomial interpolation on Chebyshev–Lobatto grids.
//!
//! Interpolants are stored in Newton form over each axis. The Newton basis on an axis
//! uses a Leja ordering of that axis' nodes, which keeps the divided differences
//! well conditioned up to degrees in the hundreds; the grid itself is always indexed in
//! the natural `cos(kπ/n)` order.

mod grid;
mod lebesgue;
mod polynomial;

pub use grid::{cheb_lobatto_nodes, ChebyshevGrid};
pub use lebesgue::{lagrange_basis_1d, lebesgue_constant, lebesgue_constant_default, lebesgue_estimate};
pub use polynomial::{eval_lagrange_form, GridEvaluation, TensorPolynomial};
