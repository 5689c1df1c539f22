//! Homeomorphisms between the cube `[-1,1]^d` and the unit simplex
//! `{y >= 0, Σ y <= 1}`.
//!
//! Square-squeezing is the multilinear map that sends each cube vertex `γ ∈ {0,1}^d`
//! (after the internal rescale `x̃ = (x + 1)/2`) to `γ/|γ|₁`, and the origin to itself.
//! It is a homeomorphism of the closed domains and a diffeomorphism of their interiors.
//! The Duffy map collapses the edge `x₂ = 1` onto the vertex `(0, 1)`.

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::real::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransformKind {
    SquareSqueeze,
    Duffy,
}

/// A cube-to-simplex map `σ: [-1,1]^d → △_d` with its inverse and Jacobian.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CubeSimplexMap {
    kind: TransformKind,
    dim: usize,
}

impl CubeSimplexMap {
    pub fn new(kind: TransformKind, dim: usize) -> Result<Self> {
        match (kind, dim) {
            (TransformKind::SquareSqueeze, 2 | 3) | (TransformKind::Duffy, 2) => Ok(Self { kind, dim }),
            (TransformKind::SquareSqueeze, _) => {
                Err(Error::UnsupportedDimension { dim, supported: "2 or 3" })
            }
            (TransformKind::Duffy, _) => Err(Error::UnsupportedDimension { dim, supported: "2" }),
        }
    }

    pub fn square_squeeze(dim: usize) -> Result<Self> {
        Self::new(TransformKind::SquareSqueeze, dim)
    }

    pub fn duffy() -> Self {
        Self { kind: TransformKind::Duffy, dim: 2 }
    }

    pub fn kind(&self) -> TransformKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn check<T>(&self, p: &[T]) -> Result<()> {
        if p.len() != self.dim {
            return Err(Error::Shape { expected: self.dim, actual: p.len() });
        }
        Ok(())
    }

    pub fn forward<T: Real>(&self, x: &[T]) -> Result<Vec<T>> {
        self.check(x)?;
        match self.kind {
            TransformKind::SquareSqueeze => squeeze_forward(x),
            TransformKind::Duffy => Ok(duffy_forward([x[0], x[1]]).to_vec()),
        }
    }

    pub fn inverse<T: Real>(&self, y: &[T]) -> Result<Vec<T>> {
        self.check(y)?;
        match self.kind {
            TransformKind::SquareSqueeze => squeeze_inverse(y),
            TransformKind::Duffy => Ok(duffy_inverse([y[0], y[1]])?.to_vec()),
        }
    }

    pub fn jacobian<T: Real>(&self, x: &[T]) -> Result<Matrix<T>> {
        self.check(x)?;
        match self.kind {
            TransformKind::SquareSqueeze => squeeze_jacobian(x),
            TransformKind::Duffy => Ok(duffy_jacobian([x[0], x[1]])),
        }
    }
}

fn check_squeeze_dim(d: usize) -> Result<()> {
    if d == 2 || d == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension { dim: d, supported: "2 or 3" })
    }
}

/// Multilinear weights `Φ_γ(x̃)` and `γ/|γ|₁` summed over the nonzero cube vertices.
fn squeeze_unit<T: Real>(xt: &[T]) -> Vec<T> {
    let d = xt.len();
    let mut out = vec![T::zero(); d];
    for mask in 1usize..(1 << d) {
        let ones = mask.count_ones() as f64;
        let mut phi = T::one();
        for (i, &x) in xt.iter().enumerate() {
            phi = phi * if mask >> i & 1 == 1 { x } else { T::one() - x };
        }
        let w = phi / T::c(ones);
        for (i, o) in out.iter_mut().enumerate() {
            if mask >> i & 1 == 1 {
                *o = *o + w;
            }
        }
    }
    out
}

/// Square-squeezing (d = 2) or cube-squeezing (d = 3), `d = x.len()`.
pub fn squeeze_forward<T: Real>(x: &[T]) -> Result<Vec<T>> {
    check_squeeze_dim(x.len())?;
    let half = T::c(0.5);
    let xt: Vec<T> = x.iter().map(|&v| (v + T::one()) * half).collect();
    if xt.len() == 2 {
        // closed form, identical to the multilinear sum
        let p = xt[0] * xt[1] * half;
        return Ok(vec![xt[0] - p, xt[1] - p]);
    }
    Ok(squeeze_unit(&xt))
}

/// Analytic Jacobian `∂σ/∂x` including the `∂x̃/∂x = 1/2` factor.
pub fn squeeze_jacobian<T: Real>(x: &[T]) -> Result<Matrix<T>> {
    let d = x.len();
    check_squeeze_dim(d)?;
    let half = T::c(0.5);
    let xt: Vec<T> = x.iter().map(|&v| (v + T::one()) * half).collect();
    let mut jac = Matrix::zeros(d, d);
    for mask in 1usize..(1 << d) {
        let inv_ones = T::one() / T::c(mask.count_ones() as f64);
        for j in 0..d {
            // ∂Φ_γ/∂x̃_j
            let mut dphi = if mask >> j & 1 == 1 { T::one() } else { -T::one() };
            for (i, &v) in xt.iter().enumerate() {
                if i != j {
                    dphi = dphi * if mask >> i & 1 == 1 { v } else { T::one() - v };
                }
            }
            let dphi = dphi * inv_ones * half;
            for i in 0..d {
                if mask >> i & 1 == 1 {
                    jac[(i, j)] = jac[(i, j)] + dphi;
                }
            }
        }
    }
    Ok(jac)
}

/// Inverse of square-squeezing. Closed form for d = 2; damped Newton for d = 3.
pub fn squeeze_inverse<T: Real>(y: &[T]) -> Result<Vec<T>> {
    match y.len() {
        2 => {
            let (u, v) = (y[0], y[1]);
            let diff = u - v;
            let root = (diff * diff + T::c(4.0) * (T::one() - u - v)).max(T::zero()).sqrt();
            Ok(vec![T::one() + diff - root, T::one() - diff - root])
        }
        3 => squeeze_inverse_newton(y),
        d => Err(Error::UnsupportedDimension { dim: d, supported: "2 or 3" }),
    }
}

const NEWTON_TOL: f64 = 1e-13;
const NEWTON_MAX_ITER: usize = 50;

fn squeeze_inverse_newton<T: Real>(y: &[T]) -> Result<Vec<T>> {
    let residual = |x: &[T]| -> Result<(Vec<T>, T)> {
        let f = squeeze_forward(x)?;
        let r: Vec<T> = f.iter().zip(y).map(|(a, b)| *a - *b).collect();
        let n = r.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        Ok((r, n))
    };
    let tol = T::tol(NEWTON_TOL);
    let mut x: Vec<T> = y.iter().map(|&v| T::c(2.0) * v - T::one()).collect();
    let (mut r, mut rn) = residual(&x)?;
    let mut polished = false;
    for _ in 0..NEWTON_MAX_ITER {
        if rn <= tol {
            if polished {
                return Ok(x);
            }
            // one extra step squeezes the last bits out of the residual
            polished = true;
        }
        let jac = squeeze_jacobian(&x)?;
        let neg: Vec<T> = r.iter().map(|v| -*v).collect();
        let step = jac.solve(&neg).ok_or(Error::NoConvergence {
            what: "cube-squeezing inverse (singular Jacobian)",
            residual: rn.to_f64_lossy(),
        })?;
        let mut t = T::one();
        loop {
            let trial: Vec<T> = x.iter().zip(&step).map(|(a, s)| *a + t * *s).collect();
            let (tr, trn) = residual(&trial)?;
            if trn < rn || (t < T::c(1e-4) && !polished) {
                x = trial;
                r = tr;
                rn = trn;
                break;
            }
            if polished {
                break;
            }
            t = t * T::c(0.5);
        }
    }
    if rn <= tol {
        Ok(x)
    } else {
        Err(Error::NoConvergence { what: "cube-squeezing inverse", residual: rn.to_f64_lossy() })
    }
}

pub fn duffy_forward<T: Real>(x: [T; 2]) -> [T; 2] {
    let q = T::c(0.25);
    [q * (T::one() + x[0]) * (T::one() - x[1]), (T::one() + x[1]) * T::c(0.5)]
}

/// Inverse Duffy map; undefined at the collapsed vertex `y₂ = 1`.
pub fn duffy_inverse<T: Real>(y: [T; 2]) -> Result<[T; 2]> {
    let gap = T::one() - y[1];
    if gap <= T::epsilon() {
        return Err(Error::SingularPoint {
            map: "Duffy",
            point: vec![y[0].to_f64_lossy(), y[1].to_f64_lossy()],
        });
    }
    Ok([T::c(2.0) * y[0] / gap - T::one(), T::c(2.0) * y[1] - T::one()])
}

pub fn duffy_jacobian<T: Real>(x: [T; 2]) -> Matrix<T> {
    let q = T::c(0.25);
    Matrix::from_rows(&[
        [q * (T::one() - x[1]), -q * (T::one() + x[0])],
        [T::zero(), T::c(0.5)],
    ])
}
