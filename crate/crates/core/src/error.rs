use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported dimension {dim} (supported: {supported})")]
    UnsupportedDimension { dim: usize, supported: &'static str },

    #[error("invalid degree {degree}: {reason}")]
    InvalidDegree { degree: usize, reason: &'static str },

    #[error("shape mismatch: expected {expected} values, got {actual}")]
    Shape { expected: usize, actual: usize },

    #[error("point {point:?} is singular for the {map} map")]
    SingularPoint { map: &'static str, point: Vec<f64> },

    #[error("{what} did not converge (residual {residual:e})")]
    NoConvergence { what: &'static str, residual: f64 },

    #[error("no symmetric triangle rule of degree {degree} (embedded degrees 1..=20); use a tensor Gauss-Legendre rule instead")]
    UnsupportedRuleDegree { degree: usize },

    #[error("quadrature point {point:?} lies on the boundary of the triangle; the pull-back is singular there")]
    SingularPullback { point: Vec<f64> },

    #[error("closest-point projection of {point:?} failed after {iterations} iterations (residual {residual:e})")]
    ProjectionFailure { point: [f64; 3], iterations: usize, residual: f64 },

    #[error("level-set gradient vanishes at {point:?}")]
    SingularSurface { point: [f64; 3] },

    #[error("mesh is not a closed 2-complex: edge ({0}, {1}) is shared by {2} triangle(s)")]
    NonClosedMesh(usize, usize, usize),

    #[error("invalid mesh: {0}")]
    InvalidMesh(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("element {triangle} failed at interpolation node {node}: {source}")]
    Element {
        triangle: usize,
        node: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{} element(s) failed; first: {}", .0.len(), .0[0])]
    Elements(Vec<Error>),

    #[error("integrand returned a non-finite value at {point:?}")]
    IntegrandEvaluation { point: [f64; 3] },

    #[error("I/O error on {path}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
