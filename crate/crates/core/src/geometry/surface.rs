use std::fmt;
use std::sync::Arc;

use super::jet::Jet;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix, Vec3};
use crate::real::Real;

/// A scalar field `l: ℝ³ → ℝ` with derivatives up to second order.
pub trait ImplicitFunction<T: Real>: Send + Sync {
    fn level(&self, p: Vec3<T>) -> T;

    /// Value, gradient and Hessian at `p`.
    fn jet(&self, p: Vec3<T>) -> Jet<T>;
}

type LevelFn<T> = dyn Fn(Vec3<T>) -> T + Send + Sync;
type GradientFn<T> = dyn Fn(Vec3<T>) -> Vec3<T> + Send + Sync;
type HessianFn<T> = dyn Fn(Vec3<T>) -> [Vec3<T>; 3] + Send + Sync;

/// Implicit function assembled from user-supplied closures.
pub struct ClosureFunction<T> {
    level: Box<LevelFn<T>>,
    gradient: Box<GradientFn<T>>,
    hessian: Box<HessianFn<T>>,
}

impl<T: Real> ImplicitFunction<T> for ClosureFunction<T> {
    fn level(&self, p: Vec3<T>) -> T {
        (self.level)(p)
    }

    fn jet(&self, p: Vec3<T>) -> Jet<T> {
        Jet { value: (self.level)(p), grad: (self.gradient)(p), hess: (self.hessian)(p) }
    }
}

/// The zero level set `S = l⁻¹(0)` of a smooth function.
#[derive(Clone)]
pub struct LevelSetSurface<T: Real> {
    function: Arc<dyn ImplicitFunction<T>>,
    name: String,
    reference_area: Option<T>,
    params: Vec<(String, f64)>,
    euler_characteristic: Option<i64>,
}

impl<T: Real> fmt::Debug for LevelSetSurface<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LevelSetSurface")
            .field("name", &self.name)
            .field("params", &self.params)
            .field("reference_area", &self.reference_area)
            .finish_non_exhaustive()
    }
}

impl<T: Real> LevelSetSurface<T> {
    pub fn new(name: impl Into<String>, function: Arc<dyn ImplicitFunction<T>>) -> Self {
        LevelSetSurface {
            function,
            name: name.into(),
            reference_area: None,
            params: Vec::new(),
            euler_characteristic: None,
        }
    }

    pub fn from_closures(
        name: impl Into<String>,
        level: impl Fn(Vec3<T>) -> T + Send + Sync + 'static,
        gradient: impl Fn(Vec3<T>) -> Vec3<T> + Send + Sync + 'static,
        hessian: impl Fn(Vec3<T>) -> [Vec3<T>; 3] + Send + Sync + 'static,
    ) -> Self {
        let function = ClosureFunction { level: Box::new(level), gradient: Box::new(gradient), hessian: Box::new(hessian) };
        Self::new(name, Arc::new(function))
    }

    pub fn with_reference_area(mut self, area: T) -> Self {
        self.reference_area = Some(area);
        self
    }

    pub fn with_params(mut self, params: Vec<(String, f64)>) -> Self {
        self.params = params;
        self
    }

    /// Euler characteristic of the surface, when known in advance.
    pub fn with_euler_characteristic(mut self, chi: i64) -> Self {
        self.euler_characteristic = Some(chi);
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn reference_area(&self) -> Option<T> {
        self.reference_area
    }

    pub fn params(&self) -> &[(String, f64)] {
        &self.params
    }

    pub fn param(&self, key: &str) -> Option<f64> {
        self.params.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn euler_characteristic(&self) -> Option<i64> {
        self.euler_characteristic
    }

    pub fn level(&self, p: Vec3<T>) -> T {
        self.function.level(p)
    }

    pub fn gradient(&self, p: Vec3<T>) -> Vec3<T> {
        self.function.jet(p).grad
    }

    pub fn hessian(&self, p: Vec3<T>) -> [Vec3<T>; 3] {
        self.function.jet(p).hess
    }

    pub fn jet(&self, p: Vec3<T>) -> Jet<T> {
        self.function.jet(p)
    }

    /// Gauss curvature `K = ∇l·adj(H)·∇lᵀ / ‖∇l‖⁴` at a surface point.
    pub fn gauss_curvature(&self, p: Vec3<T>) -> Result<T> {
        let j = self.jet(p);
        let g = j.grad;
        let gn = linalg::norm(g);
        if !(gn > T::c(SINGULAR_GRADIENT)) {
            return Err(Error::SingularSurface { point: linalg::to_f64_3(p) });
        }
        let h = j.hess;
        let cof = |r0: usize, r1: usize, c0: usize, c1: usize| h[r0][c0] * h[r1][c1] - h[r0][c1] * h[r1][c0];
        let adj = [
            [cof(1, 2, 1, 2), -cof(0, 2, 1, 2), cof(0, 1, 1, 2)],
            [-cof(1, 2, 0, 2), cof(0, 2, 0, 2), -cof(0, 1, 0, 2)],
            [cof(1, 2, 0, 1), -cof(0, 2, 0, 1), cof(0, 1, 0, 1)],
        ];
        let mut num = T::zero();
        for a in 0..3 {
            for b in 0..3 {
                num = num + g[a] * adj[a][b] * g[b];
            }
        }
        let g2 = gn * gn;
        Ok(num / (g2 * g2))
    }

    /// Mean curvature `(‖∇l‖² tr H − ∇l·H·∇l) / (2‖∇l‖³)` at a surface point.
    pub fn mean_curvature(&self, p: Vec3<T>) -> Result<T> {
        let j = self.jet(p);
        let g = j.grad;
        let gn = linalg::norm(g);
        if !(gn > T::c(SINGULAR_GRADIENT)) {
            return Err(Error::SingularSurface { point: linalg::to_f64_3(p) });
        }
        let h = j.hess;
        let mut ghg = T::zero();
        for a in 0..3 {
            for b in 0..3 {
                ghg = ghg + g[a] * h[a][b] * g[b];
            }
        }
        let trace = h[0][0] + h[1][1] + h[2][2];
        Ok((gn * gn * trace - ghg) / (T::c(2.0) * gn * gn * gn))
    }

    /// Largest absolute principal curvature at a surface point.
    pub fn max_curvature(&self, p: Vec3<T>) -> Result<T> {
        let h = self.mean_curvature(p)?;
        let k = self.gauss_curvature(p)?;
        Ok(h.abs() + (h * h - k).max(T::zero()).sqrt())
    }

    /// Closest point of `S` to `x`, see [`closest_point_project`].
    pub fn project(&self, x: Vec3<T>) -> Result<Vec3<T>> {
        closest_point_project(self, x)
    }
}

pub(crate) const SINGULAR_GRADIENT: f64 = 1e-10;
const SIGNED_DISTANCE_SWEEPS: usize = 5;
const PROJECTION_TOL: f64 = 1e-14;
const PROJECTION_MAX_ITER: usize = 100;

/// Closest point `argmin_{y ∈ S} ‖x − y‖` for `x` near the surface.
///
/// A few signed-distance steps `y ← y − l∇l/‖∇l‖²` bring `y` onto `S`; damped Newton on
/// the Lagrange system `y − x + μ∇l(y) = 0, l(y) = 0` then enforces that `y − x` is normal.
pub fn closest_point_project<T: Real>(surface: &LevelSetSurface<T>, x: Vec3<T>) -> Result<Vec3<T>> {
    let singular = |p: Vec3<T>| Error::SingularSurface { point: linalg::to_f64_3(p) };
    let min_grad = T::c(SINGULAR_GRADIENT);
    let mut y = x;
    for _ in 0..SIGNED_DISTANCE_SWEEPS {
        let j = surface.jet(y);
        let g2 = linalg::dot(j.grad, j.grad);
        if !(g2.sqrt() > min_grad) {
            return Err(singular(y));
        }
        if j.value == T::zero() {
            break;
        }
        y = linalg::sub(y, linalg::scale(j.grad, j.value / g2));
    }

    let tol = T::tol(PROJECTION_TOL);
    let xn = linalg::norm(x);
    // residual of the Lagrange system together with the scale it is measured against
    let residual = |y: Vec3<T>, mu: T, j: &Jet<T>| -> T {
        let gn = linalg::norm(j.grad);
        let r = linalg::add(linalg::sub(y, x), linalg::scale(j.grad, mu));
        let stat = linalg::norm(r) / (T::one() + xn + (mu * gn).abs());
        let lev = j.value.abs() / (T::one() + gn);
        stat.max(lev)
    };

    let mut j = surface.jet(y);
    let g2 = linalg::dot(j.grad, j.grad);
    let mut mu = -linalg::dot(linalg::sub(y, x), j.grad) / g2;
    let mut res = residual(y, mu, &j);
    let mut iterations = 0;
    while iterations < PROJECTION_MAX_ITER {
        if !res.is_finite() {
            break;
        }
        if res <= tol {
            return Ok(y);
        }
        iterations += 1;
        let g = j.grad;
        if !(linalg::norm(g) > min_grad) {
            return Err(singular(y));
        }
        let mut a = Matrix::zeros(4, 4);
        for r in 0..3 {
            for c in 0..3 {
                a[(r, c)] = mu * j.hess[r][c] + if r == c { T::one() } else { T::zero() };
            }
            a[(r, 3)] = g[r];
            a[(3, r)] = g[r];
        }
        let f = linalg::add(linalg::sub(y, x), linalg::scale(g, mu));
        let rhs = [-f[0], -f[1], -f[2], -j.value];
        let Some(step) = a.solve(&rhs) else { break };
        let mut t = T::one();
        let mut accepted = false;
        for _ in 0..30 {
            let yt = [y[0] + t * step[0], y[1] + t * step[1], y[2] + t * step[2]];
            let mt = mu + t * step[3];
            let jt = surface.jet(yt);
            let rt = residual(yt, mt, &jt);
            if rt < res {
                y = yt;
                mu = mt;
                j = jt;
                res = rt;
                accepted = true;
                break;
            }
            t = t * T::c(0.5);
        }
        if !accepted {
            // rounding floor reached: accept if the post-conditions hold
            if acceptable(surface, x, y) {
                return Ok(y);
            }
            break;
        }
    }
    if res <= tol || acceptable(surface, x, y) {
        return Ok(y);
    }
    Err(Error::ProjectionFailure {
        point: linalg::to_f64_3(x),
        iterations,
        residual: res.to_f64_lossy(),
    })
}

fn acceptable<T: Real>(surface: &LevelSetSurface<T>, x: Vec3<T>, y: Vec3<T>) -> bool {
    let j = surface.jet(y);
    let gn = linalg::norm(j.grad);
    if !(j.value.abs() < T::tol(1e-13) * (T::one() + gn)) {
        return false;
    }
    let d = linalg::sub(y, x);
    let dn = linalg::norm(d);
    if dn <= T::tol(1e-13) * (T::one() + linalg::norm(x)) {
        return true;
    }
    let sin = linalg::norm(linalg::cross(d, j.grad)) / (dn * gn);
    sin < T::tol(1e-8)
}
