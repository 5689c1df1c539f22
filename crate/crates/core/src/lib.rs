//! High-order quadrature on curved triangulated surfaces.
//!
//! Each flat triangle of a mesh is re-parametrised over the square `[-1,1]²` (by
//! square-squeezing or the Duffy map), lifted onto an implicit surface by closest-point
//! projection, and interpolated with tensor Chebyshev–Lobatto polynomials. The surface
//! integral is then the sum of cube quadratures of the integrand times the interpolated
//! volume element.
//!
//! All numerical code is generic over [`Real`] (`f32` or `f64`); the `*64` aliases
//! below name the double-precision instantiations used by the CLI.

// `!(x > y)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod geometry;
pub mod integrator;
pub mod interpolation;
pub mod linalg;
pub mod quadrature;
pub mod real;
pub mod sampling;
pub mod sum;
pub mod transforms;

pub use error::{Error, Result};
pub use real::Real;
pub use transforms::{CubeSimplexMap, TransformKind};

pub type ChebyshevGrid64 = interpolation::ChebyshevGrid<f64>;
pub type TensorPolynomial64 = interpolation::TensorPolynomial<f64>;
pub type QuadratureRule64 = quadrature::QuadratureRule<f64>;
pub type LevelSetSurface64 = geometry::LevelSetSurface<f64>;
pub type TriangleMesh64 = geometry::TriangleMesh<f64>;
pub type HosqConfig64 = integrator::HosqConfig;
pub type IntegrationReport64 = integrator::IntegrationReport<f64>;

pub type ChebyshevGrid32 = interpolation::ChebyshevGrid<f32>;
pub type TensorPolynomial32 = interpolation::TensorPolynomial<f32>;
pub type QuadratureRule32 = quadrature::QuadratureRule<f32>;
