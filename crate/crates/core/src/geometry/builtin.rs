//! Polynomial level sets used in the numerical experiments.

use std::sync::Arc;

use super::jet::{Jet, LevelScalar};
use super::surface::{ImplicitFunction, LevelSetSurface};
use crate::error::{Error, Result};
use crate::linalg::Vec3;
use crate::real::Real;

/// A level function written once over any [`LevelScalar`].
pub trait PolynomialLevel: Send + Sync {
    fn eval<T: Real, S: LevelScalar<T>>(&self, p: [S; 3]) -> S;
}

struct Poly<P>(P);

impl<T: Real, P: PolynomialLevel> ImplicitFunction<T> for Poly<P> {
    fn level(&self, p: Vec3<T>) -> T {
        self.0.eval::<T, T>(p)
    }

    fn jet(&self, p: Vec3<T>) -> Jet<T> {
        self.0.eval::<T, Jet<T>>(Jet::seed(p))
    }
}

fn k<T: Real, S: LevelScalar<T>>(v: f64) -> S {
    S::constant(T::c(v))
}

#[derive(Clone, Copy, Debug)]
pub struct Sphere {
    pub radius: f64,
}

impl PolynomialLevel for Sphere {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [x, y, z]: [S; 3]) -> S {
        x.sq() + y.sq() + z.sq() - k(self.radius * self.radius)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Ellipsoid {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl PolynomialLevel for Ellipsoid {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [x, y, z]: [S; 3]) -> S {
        x.sq() * k(1.0 / (self.a * self.a)) + y.sq() * k(1.0 / (self.b * self.b)) + z.sq() * k(1.0 / (self.c * self.c))
            - k(1.0)
    }
}

/// Torus of tube radius `r` around the circle of radius `big_r` in the xy-plane.
#[derive(Clone, Copy, Debug)]
pub struct Torus {
    pub r: f64,
    pub big_r: f64,
}

impl PolynomialLevel for Torus {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [x, y, z]: [S; 3]) -> S {
        let (r, rr) = (self.r, self.big_r);
        let rho = x.sq() + y.sq();
        (rho + z.sq() + k(rr * rr - r * r)).sq() - k::<T, S>(4.0 * rr * rr) * rho
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Genus2;

impl PolynomialLevel for Genus2 {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [x, y, z]: [S; 3]) -> S {
        let one_minus_z2 = k::<T, S>(1.0) - z.sq();
        k::<T, S>(2.0) * y * (y.sq() - k::<T, S>(3.0) * x.sq()) * one_minus_z2 + (x.sq() + y.sq()).sq()
            - (k::<T, S>(9.0) * z.sq() - k(1.0)) * one_minus_z2
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Dziuk;

impl PolynomialLevel for Dziuk {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [x, y, z]: [S; 3]) -> S {
        (x - z.sq()).sq() + y.sq() + z.sq() - k(1.0)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct DoubleTorus {
    pub a: f64,
}

impl PolynomialLevel for DoubleTorus {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [x, y, z]: [S; 3]) -> S {
        ((x.sq() + y.sq()).sq() - x.sq() + y.sq()).sq() + z.sq() - k(self.a * self.a)
    }
}

/// Red blood cell model `(d² + x² + y² + z²)³ − 8d²(y² + z²) − c⁴`, symmetric about the x-axis.
#[derive(Clone, Copy, Debug)]
pub struct Biconcave {
    pub c: f64,
    pub d: f64,
}

impl PolynomialLevel for Biconcave {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [x, y, z]: [S; 3]) -> S {
        let (c, d) = (self.c, self.d);
        let s = k::<T, S>(d * d) + x.sq() + y.sq() + z.sq();
        s * s * s - k::<T, S>(8.0 * d * d) * (y.sq() + z.sq()) - k(c.powi(4))
    }
}

/// The plane `z = 0`.
#[derive(Clone, Copy, Debug)]
pub struct Plane;

impl PolynomialLevel for Plane {
    fn eval<T: Real, S: LevelScalar<T>>(&self, [_, _, z]: [S; 3]) -> S {
        z
    }
}

/// Names accepted by [`builtin_surface`].
pub const BUILTIN_SURFACES: &[&str] =
    &["sphere", "ellipsoid", "torus", "genus2", "dziuk", "double-torus", "biconcave", "plane"];

/// Looks up a built-in surface; missing parameters take their defaults.
///
/// | name | parameters (defaults) |
/// |---|---|
/// | `sphere` | `radius` (1) |
/// | `ellipsoid` | `a`, `b`, `c` (0.6, 0.8, 2) |
/// | `torus` | `r`, `R` (1, 2) |
/// | `genus2` | none |
/// | `dziuk` | none |
/// | `double-torus` | `a` (0.2) |
/// | `biconcave` | `c`, `d` (0.375, 0.5) |
/// | `plane` | none |
pub fn builtin_surface<T: Real>(name: &str, params: &[(&str, f64)]) -> Result<LevelSetSurface<T>> {
    let canonical = match name.to_ascii_lowercase().replace('_', "-").as_str() {
        "sphere" => "sphere",
        "ellipsoid" => "ellipsoid",
        "torus" => "torus",
        "genus2" | "genus-2" => "genus2",
        "dziuk" => "dziuk",
        "double-torus" | "doubletorus" => "double-torus",
        "biconcave" | "rbc" => "biconcave",
        "plane" | "flat" => "plane",
        _ => {
            return Err(Error::InvalidParameter(format!(
                "unknown surface '{name}' (known: {})",
                BUILTIN_SURFACES.join(", ")
            )))
        }
    };
    let allowed: &[(&str, f64)] = match canonical {
        "sphere" => &[("radius", 1.0)],
        "ellipsoid" => &[("a", 0.6), ("b", 0.8), ("c", 2.0)],
        "torus" => &[("r", 1.0), ("R", 2.0)],
        "double-torus" => &[("a", 0.2)],
        "biconcave" => &[("c", 0.375), ("d", 0.5)],
        _ => &[],
    };
    for (key, value) in params {
        if !allowed.iter().any(|(a, _)| a == key) {
            return Err(Error::InvalidParameter(format!("surface '{canonical}' has no parameter '{key}'")));
        }
        if !value.is_finite() {
            return Err(Error::InvalidParameter(format!("parameter {key} = {value} is not finite")));
        }
    }
    let get = |key: &str| {
        params.iter().rev().find(|(k, _)| *k == key).map(|(_, v)| *v).unwrap_or_else(|| {
            allowed.iter().find(|(k, _)| *k == key).map(|(_, v)| *v).expect("default exists")
        })
    };
    let stored: Vec<(String, f64)> = allowed.iter().map(|(key, _)| (key.to_string(), get(key))).collect();
    let positive = |key: &str| -> Result<f64> {
        let v = get(key);
        if v > 0.0 {
            Ok(v)
        } else {
            Err(Error::InvalidParameter(format!("{canonical}: {key} must be positive, got {v}")))
        }
    };
    let pi = std::f64::consts::PI;
    let surface = match canonical {
        "sphere" => {
            let radius = positive("radius")?;
            LevelSetSurface::new(canonical, Arc::new(Poly(Sphere { radius })))
                .with_reference_area(T::c(4.0 * pi * radius * radius))
                .with_euler_characteristic(2)
        }
        "ellipsoid" => {
            let (a, b, c) = (positive("a")?, positive("b")?, positive("c")?);
            LevelSetSurface::new(canonical, Arc::new(Poly(Ellipsoid { a, b, c }))).with_euler_characteristic(2)
        }
        "torus" => {
            let (r, big_r) = (positive("r")?, positive("R")?);
            if r >= big_r {
                return Err(Error::InvalidParameter(format!("torus needs 0 < r < R, got r = {r}, R = {big_r}")));
            }
            LevelSetSurface::new(canonical, Arc::new(Poly(Torus { r, big_r })))
                .with_reference_area(T::c(4.0 * pi * pi * r * big_r))
                .with_euler_characteristic(0)
        }
        "genus2" => LevelSetSurface::new(canonical, Arc::new(Poly(Genus2))).with_euler_characteristic(-2),
        "dziuk" => LevelSetSurface::new(canonical, Arc::new(Poly(Dziuk))).with_euler_characteristic(2),
        "double-torus" => {
            let a = positive("a")?;
            // beyond a = 1/4 the two holes close up
            if a >= 0.25 {
                return Err(Error::InvalidParameter(format!("double-torus needs 0 < a < 1/4, got {a}")));
            }
            LevelSetSurface::new(canonical, Arc::new(Poly(DoubleTorus { a }))).with_euler_characteristic(-2)
        }
        "biconcave" => {
            // only c⁴ enters, so the sign of c is irrelevant
            let c = get("c").abs();
            let d = positive("d")?;
            if c == 0.0 || c >= d {
                return Err(Error::InvalidParameter(format!("biconcave needs 0 < |c| < d, got c = {c}, d = {d}")));
            }
            LevelSetSurface::new(canonical, Arc::new(Poly(Biconcave { c, d }))).with_euler_characteristic(2)
        }
        "plane" => LevelSetSurface::new(canonical, Arc::new(Poly(Plane))),
        _ => unreachable!(),
    };
    Ok(surface.with_params(stored))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::halton;

    #[test]
    fn examples() {
        let s = builtin_surface::<f64>("sphere", &[]).unwrap();
        assert_eq!(s.reference_area(), Some(4.0 * std::f64::consts::PI));
        let t = builtin_surface::<f64>("torus", &[("r", 1.0), ("R", 2.0)]).unwrap();
        assert_eq!(t.reference_area(), Some(8.0 * std::f64::consts::PI.powi(2)));
        let d = builtin_surface::<f64>("dziuk", &[]).unwrap();
        assert_eq!(d.level([1.0, 0.0, 0.0]), 0.0);
        assert_eq!(d.level([0.0, 0.0, 0.0]), -1.0);
        assert_eq!(d.level([0.0, 0.0, 1.0]), 1.0);
    }

    #[test]
    fn invalid_parameters() {
        for (name, params) in [
            ("torus", vec![("r", 2.0), ("R", 1.0)]),
            ("biconcave", vec![("c", 0.6), ("d", 0.5)]),
            ("sphere", vec![("radius", -1.0)]),
            ("sphere", vec![("r", 1.0)]),
            ("klein", vec![]),
        ] {
            assert!(matches!(builtin_surface::<f64>(name, &params), Err(Error::InvalidParameter(_))), "{name}");
        }
        assert!(builtin_surface::<f64>("biconcave", &[("c", -0.934), ("d", 1.0)]).is_ok());
    }

    #[test]
    fn derivatives_match_finite_differences() {
        for name in BUILTIN_SURFACES {
            let s = builtin_surface::<f64>(name, &[]).unwrap();
            for i in 0..100 {
                let p: Vec<f64> = halton(i + 1, 3).iter().map(|v| 3.0 * v - 1.5).collect();
                let p = [p[0], p[1], p[2]];
                let j = s.jet(p);
                let h = 1e-6;
                for a in 0..3 {
                    let mut pp = p;
                    let mut pm = p;
                    pp[a] += h;
                    pm[a] -= h;
                    let fd = (s.level(pp) - s.level(pm)) / (2.0 * h);
                    let scale = 1.0 + j.grad[a].abs();
                    assert!((fd - j.grad[a]).abs() < 1e-7 * scale, "{name} grad {a} at {p:?}");
                    let (gp, gm) = (s.gradient(pp), s.gradient(pm));
                    for b in 0..3 {
                        let fd = (gp[b] - gm[b]) / (2.0 * h);
                        let scale = 1.0 + j.hess[a][b].abs();
                        assert!((fd - j.hess[a][b]).abs() < 1e-7 * scale, "{name} hess {a}{b}");
                    }
                }
            }
        }
    }

    #[test]
    fn f32_surfaces() {
        let s = builtin_surface::<f32>("torus", &[]).unwrap();
        assert!((s.gauss_curvature([3.0, 0.0, 0.0]).unwrap() - 1.0 / 3.0).abs() < 1e-6);
        let y = s.project([3.5_f32, 0.0, 0.1]).unwrap();
        assert!(s.level(y).abs() < 1e-4);
    }
}
