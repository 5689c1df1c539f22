use super::{Domain, QuadratureRule};
use crate::error::{Error, Result};
use crate::real::Real;
use crate::transforms::CubeSimplexMap;

/// Transports a triangle rule to the square through `map`:
/// points `p* = σ⁻¹(q)` and weights `ω_q |det Dσ⁻¹(q)| = ω_q / |det Dσ(p*)|`.
///
/// For any `h`, `Σ ω_{p*} h(p*) |det Dσ(p*)| = Σ ω_q h(σ⁻¹(q))`, so integrating a
/// cube integrand that carries the factor `|det Dσ|` reproduces the original rule.
pub fn pullback_rule<T: Real>(simplex_rule: &QuadratureRule<T>, map: &CubeSimplexMap) -> Result<QuadratureRule<T>> {
    let d = map.dim();
    if simplex_rule.domain() != Domain::Simplex(d) {
        return Err(Error::InvalidParameter(format!(
            "pull-back through a {d}-dimensional map needs a Simplex({d}) rule, got {:?}",
            simplex_rule.domain()
        )));
    }
    let eps = T::epsilon() * T::c(4.0);
    let mut points = Vec::with_capacity(simplex_rule.len() * d);
    let mut weights = Vec::with_capacity(simplex_rule.len());
    for (q, &w) in simplex_rule.points().zip(simplex_rule.weights()) {
        let sum: T = q.iter().copied().sum();
        let on_boundary = q.iter().any(|&v| v <= eps) || sum >= T::one() - eps;
        if on_boundary {
            return Err(Error::SingularPullback { point: q.iter().map(|v| v.to_f64_lossy()).collect() });
        }
        let p = map.inverse(q)?;
        let det = map.jacobian(&p)?.determinant().abs();
        if det <= eps || p.iter().any(|v| v.abs() >= T::one()) {
            return Err(Error::SingularPullback { point: q.iter().map(|v| v.to_f64_lossy()).collect() });
        }
        points.extend(p);
        weights.push(w / det);
    }
    Ok(QuadratureRule::new(Domain::Cube(d), points, weights, simplex_rule.exactness_degree()))
}
