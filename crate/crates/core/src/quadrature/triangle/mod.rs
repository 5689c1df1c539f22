use super::{Domain, QuadratureRule};
use crate::error::{Error, Result};
use crate::real::Real;

mod tables;

pub const MAX_TRIANGLE_DEGREE: usize = 20;

/// Symmetry orbit of a fully symmetric triangle rule, in barycentric parameters.
#[derive(Debug, Clone, Copy)]
pub(crate) enum Orbit {
    /// `(1/3, 1/3)`, weight
    Centroid(f64),
    /// the three permutations of `(a, a, 1-2a)`, weight per point
    Edge(f64, f64),
    /// the six permutations of `(a, b, 1-a-b)`, weight per point
    Interior(f64, f64, f64),
}

impl Orbit {
    fn expand(&self, points: &mut Vec<f64>, weights: &mut Vec<f64>) {
        let mut push = |u: f64, v: f64, w: f64| {
            points.extend([u, v]);
            weights.push(w);
        };
        match *self {
            Orbit::Centroid(w) => push(1.0 / 3.0, 1.0 / 3.0, w),
            Orbit::Edge(a, w) => {
                let c = 1.0 - 2.0 * a;
                push(a, a, w);
                push(a, c, w);
                push(c, a, w);
            }
            Orbit::Interior(a, b, w) => {
                let c = 1.0 - a - b;
                for (u, v) in [(a, b), (b, a), (a, c), (c, a), (b, c), (c, b)] {
                    push(u, v, w);
                }
            }
        }
    }
}

/// Fully symmetric Gauss-type rule on the unit triangle exact for total degree `degree`.
///
/// Degree 14 has 42 points. Degrees above [`MAX_TRIANGLE_DEGREE`] are not tabulated.
pub fn symmetric_triangle_rule<T: Real>(degree: usize) -> Result<QuadratureRule<T>> {
    if degree == 0 || degree > MAX_TRIANGLE_DEGREE {
        return Err(Error::UnsupportedRuleDegree { degree });
    }
    let (count, orbits) = tables::RULES[degree - 1];
    let mut points = Vec::with_capacity(2 * count);
    let mut weights = Vec::with_capacity(count);
    for orbit in orbits {
        orbit.expand(&mut points, &mut weights);
    }
    debug_assert_eq!(weights.len(), count);
    Ok(QuadratureRule::new(
        Domain::Simplex(2),
        points.into_iter().map(T::c).collect(),
        weights.into_iter().map(T::c).collect(),
        degree,
    ))
}
