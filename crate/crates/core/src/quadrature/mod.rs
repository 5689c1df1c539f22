//! Quadrature rules on the cube `[-1,1]^d` and the unit triangle, and pull-backs of
//! triangle rules to the square through a cube–simplex map.

mod gauss_legendre;
mod pullback;
mod triangle;

pub use gauss_legendre::{gauss_legendre_1d, tensor_gauss_legendre, MAX_GAUSS_LEGENDRE_POINTS};
pub use pullback::pullback_rule;
pub use triangle::{symmetric_triangle_rule, MAX_TRIANGLE_DEGREE};

use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    /// `[-1,1]^d`
    Cube(usize),
    /// `{y >= 0, Σ y <= 1}` in `d` dimensions
    Simplex(usize),
}

impl Domain {
    pub fn dim(&self) -> usize {
        match *self {
            Domain::Cube(d) | Domain::Simplex(d) => d,
        }
    }

    pub fn volume(&self) -> f64 {
        match *self {
            Domain::Cube(d) => 2f64.powi(d as i32),
            Domain::Simplex(d) => 1.0 / (1..=d).product::<usize>() as f64,
        }
    }

    /// Closed-domain membership with an absolute slack.
    pub fn contains(&self, p: &[f64], slack: f64) -> bool {
        match self {
            Domain::Cube(_) => p.iter().all(|v| v.abs() <= 1.0 + slack),
            Domain::Simplex(_) => p.iter().all(|&v| v >= -slack) && p.iter().sum::<f64>() <= 1.0 + slack,
        }
    }
}

/// Points and weights on a reference domain.
///
/// For Gauss–Legendre and triangle rules `exactness_degree` is the polynomial degree
/// integrated exactly (per axis for tensor rules, total degree for triangle rules).
/// Pull-back rules inherit the degree of the triangle rule they came from.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule<T> {
    domain: Domain,
    points: Vec<T>,
    weights: Vec<T>,
    exactness_degree: usize,
}

impl<T: Real> QuadratureRule<T> {
    pub(crate) fn new(domain: Domain, points: Vec<T>, weights: Vec<T>, exactness_degree: usize) -> Self {
        assert_eq!(points.len(), weights.len() * domain.dim());
        Self { domain, points, weights, exactness_degree }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn dim(&self) -> usize {
        self.domain.dim()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn exactness_degree(&self) -> usize {
        self.exactness_degree
    }

    pub fn point(&self, i: usize) -> &[T] {
        let d = self.dim();
        &self.points[i * d..(i + 1) * d]
    }

    pub fn points(&self) -> impl Iterator<Item = &[T]> + '_ {
        self.points.chunks(self.dim())
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn weight_sum(&self) -> T {
        crate::sum::kahan_sum(&self.weights)
    }

    /// `Σ w_i f(p_i)` with compensated accumulation.
    pub fn integrate<F: FnMut(&[T]) -> T>(&self, mut f: F) -> T {
        self.points()
            .zip(&self.weights)
            .map(|(p, &w)| w * f(p))
            .collect::<crate::sum::KahanSum<T>>()
            .value()
    }
}
