use super::grid::ChebyshevGrid;
use super::lebesgue::lagrange_basis_1d;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::real::Real;

/// A vector-valued tensor-product polynomial of maximum per-axis degree `n`, stored
/// as Newton coefficients over a Chebyshev–Lobatto grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorPolynomial<T> {
    grid: ChebyshevGrid<T>,
    codomain_dim: usize,
    /// `codomain_dim` blocks of `(n+1)^d` coefficients; within a block the multi-index
    /// refers to Newton (Leja) positions, last axis fastest.
    coeffs: Vec<T>,
}

/// Values and first partials of a bivariate polynomial on a tensor product of points.
/// Every array is laid out `[component][i_x][i_y]`.
#[derive(Debug, Clone)]
pub struct GridEvaluation<T> {
    pub nx: usize,
    pub ny: usize,
    pub values: Vec<T>,
    pub dx: Vec<T>,
    pub dy: Vec<T>,
}

impl<T: Real> GridEvaluation<T> {
    #[inline]
    pub fn index(&self, component: usize, ix: usize, iy: usize) -> usize {
        (component * self.nx + ix) * self.ny + iy
    }
}

fn divided_differences<T: Real>(values: &mut [T], nodes: &[T], stride: usize) {
    let n = nodes.len();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = values[i * stride] - values[(i - 1) * stride];
            values[i * stride] = num / (nodes[i] - nodes[i - j]);
        }
    }
}

impl<T: Real> TensorPolynomial<T> {
    /// Interpolates sampled values at every grid point.
    ///
    /// `samples` holds `codomain_dim` consecutive values per grid point, points in the
    /// grid's lexicographic order (see [`ChebyshevGrid::points`]).
    pub fn interpolate(samples: &[T], grid: &ChebyshevGrid<T>, codomain_dim: usize) -> Result<Self> {
        let n_pts = grid.len();
        let expected = n_pts * codomain_dim;
        if codomain_dim == 0 || samples.len() != expected {
            return Err(Error::Shape { expected, actual: samples.len() });
        }
        let p = grid.points_per_axis();
        let d = grid.dim();
        let order = grid.newton_order();
        let mut coeffs = vec![T::zero(); expected];
        // reorder samples into Newton positions
        for flat in 0..n_pts {
            let mut rem = flat;
            let mut point = 0;
            let mut weight = 1;
            for _ in 0..d {
                let beta = rem % p;
                rem /= p;
                point += order[beta] * weight;
                weight *= p;
            }
            for c in 0..codomain_dim {
                coeffs[c * n_pts + flat] = samples[point * codomain_dim + c];
            }
        }
        let nodes = grid.newton_nodes();
        for block in coeffs.chunks_mut(n_pts) {
            for axis in 0..d {
                let stride = p.pow((d - 1 - axis) as u32);
                for base in 0..n_pts {
                    if !(base / stride).is_multiple_of(p) {
                        continue;
                    }
                    divided_differences(&mut block[base..], nodes, stride);
                }
            }
        }
        Ok(Self { grid: grid.clone(), codomain_dim, coeffs })
    }

    /// Builds the polynomial directly from Newton coefficients (component-major blocks).
    pub fn from_newton_coefficients(grid: &ChebyshevGrid<T>, codomain_dim: usize, coeffs: Vec<T>) -> Result<Self> {
        let expected = grid.len() * codomain_dim;
        if codomain_dim == 0 || coeffs.len() != expected {
            return Err(Error::Shape { expected, actual: coeffs.len() });
        }
        Ok(Self { grid: grid.clone(), codomain_dim, coeffs })
    }

    /// Interpolates a function sampled at the grid points.
    pub fn from_fn<F>(grid: &ChebyshevGrid<T>, codomain_dim: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(&[T]) -> Vec<T>,
    {
        let mut samples = Vec::with_capacity(grid.len() * codomain_dim);
        for x in grid.points() {
            let v = f(&x);
            if v.len() != codomain_dim {
                return Err(Error::Shape { expected: codomain_dim, actual: v.len() });
            }
            samples.extend(v);
        }
        Self::interpolate(&samples, grid, codomain_dim)
    }

    pub fn grid(&self) -> &ChebyshevGrid<T> {
        &self.grid
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn newton_coefficients(&self) -> &[T] {
        &self.coeffs
    }

    fn block(&self, c: usize) -> &[T] {
        let n = self.grid.len();
        &self.coeffs[c * n..(c + 1) * n]
    }

    /// Multivariate Horner evaluation, optionally carrying first partials.
    /// Returns `1 + d` numbers per component when `with_gradient`, else one.
    fn horner(&self, x: &[T], with_gradient: bool, out: &mut Vec<T>) {
        let d = self.grid.dim();
        let p = self.grid.points_per_axis();
        let z = self.grid.newton_nodes();
        let stride = if with_gradient { 1 + d } else { 1 };
        let mut work: Vec<T> = Vec::with_capacity(self.grid.len() * stride);
        let mut next: Vec<T> = Vec::with_capacity(self.grid.len() / p * stride);
        for c in 0..self.codomain_dim {
            work.clear();
            for &v in self.block(c) {
                work.push(v);
                work.extend(std::iter::repeat_n(T::zero(), stride - 1));
            }
            let mut count = self.grid.len();
            for axis in (0..d).rev() {
                let xa = x[axis];
                let groups = count / p;
                next.clear();
                next.resize(groups * stride, T::zero());
                for g in 0..groups {
                    let base = g * p;
                    let acc = &mut next[g * stride..(g + 1) * stride];
                    acc.copy_from_slice(&work[(base + p - 1) * stride..(base + p) * stride]);
                    for j in (0..p - 1).rev() {
                        let t = xa - z[j];
                        let cj = &work[(base + j) * stride..(base + j + 1) * stride];
                        if with_gradient {
                            // d/dx_axis picks up the previous value
                            let prev = acc[0];
                            for k in 0..stride {
                                acc[k] = acc[k] * t + cj[k];
                            }
                            acc[1 + axis] = acc[1 + axis] + prev;
                        } else {
                            acc[0] = acc[0] * t + cj[0];
                        }
                    }
                }
                std::mem::swap(&mut work, &mut next);
                count = groups;
            }
            out.extend_from_slice(&work[..stride]);
        }
    }

    /// Value at `x` (one entry per codomain component).
    pub fn eval(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.grid.dim(), "point dimension");
        let mut out = Vec::with_capacity(self.codomain_dim);
        self.horner(x, false, &mut out);
        out
    }

    /// Value and `m × d` Jacobian at `x`.
    pub fn eval_with_gradient(&self, x: &[T]) -> (Vec<T>, Matrix<T>) {
        let d = self.grid.dim();
        assert_eq!(x.len(), d, "point dimension");
        let mut raw = Vec::with_capacity(self.codomain_dim * (d + 1));
        self.horner(x, true, &mut raw);
        let mut values = Vec::with_capacity(self.codomain_dim);
        let mut jac = Matrix::zeros(self.codomain_dim, d);
        for c in 0..self.codomain_dim {
            let jet = &raw[c * (d + 1)..(c + 1) * (d + 1)];
            values.push(jet[0]);
            for a in 0..d {
                jac[(c, a)] = jet[1 + a];
            }
        }
        (values, jac)
    }

    pub fn eval_gradient(&self, x: &[T]) -> Matrix<T> {
        self.eval_with_gradient(x).1
    }

    /// Evaluates a bivariate polynomial and its partials on `xs × ys` by sum factorisation.
    pub fn eval_grid_2d(&self, xs: &[T], ys: &[T]) -> GridEvaluation<T> {
        assert_eq!(self.grid.dim(), 2, "eval_grid_2d needs a bivariate polynomial");
        let p = self.grid.points_per_axis();
        let (bx, dbx) = self.newton_basis_table(xs);
        let (by, dby) = self.newton_basis_table(ys);
        let (nx, ny) = (xs.len(), ys.len());
        let m = self.codomain_dim;
        let mut out = GridEvaluation {
            nx,
            ny,
            values: vec![T::zero(); m * nx * ny],
            dx: vec![T::zero(); m * nx * ny],
            dy: vec![T::zero(); m * nx * ny],
        };
        let mut t = vec![T::zero(); nx * p];
        let mut dt = vec![T::zero(); nx * p];
        for c in 0..m {
            let coeff = self.block(c);
            // contract the first axis
            for ix in 0..nx {
                let row_b = &bx[ix * p..(ix + 1) * p];
                let row_db = &dbx[ix * p..(ix + 1) * p];
                for j in 0..p {
                    let mut s = T::zero();
                    let mut ds = T::zero();
                    for i in 0..p {
                        let cij = coeff[i * p + j];
                        s = s + row_b[i] * cij;
                        ds = ds + row_db[i] * cij;
                    }
                    t[ix * p + j] = s;
                    dt[ix * p + j] = ds;
                }
            }
            for ix in 0..nx {
                let tr = &t[ix * p..(ix + 1) * p];
                let dtr = &dt[ix * p..(ix + 1) * p];
                for iy in 0..ny {
                    let b = &by[iy * p..(iy + 1) * p];
                    let db = &dby[iy * p..(iy + 1) * p];
                    let (mut v, mut vx, mut vy) = (T::zero(), T::zero(), T::zero());
                    for j in 0..p {
                        v = v + tr[j] * b[j];
                        vx = vx + dtr[j] * b[j];
                        vy = vy + tr[j] * db[j];
                    }
                    let k = out.index(c, ix, iy);
                    out.values[k] = v;
                    out.dx[k] = vx;
                    out.dy[k] = vy;
                }
            }
        }
        out
    }

    /// Newton basis `N_j(x) = Π_{i<j} (x - z_i)` and its derivative, row per point.
    fn newton_basis_table(&self, xs: &[T]) -> (Vec<T>, Vec<T>) {
        let p = self.grid.points_per_axis();
        let z = self.grid.newton_nodes();
        let mut b = vec![T::zero(); xs.len() * p];
        let mut db = vec![T::zero(); xs.len() * p];
        for (r, &x) in xs.iter().enumerate() {
            b[r * p] = T::one();
            for j in 1..p {
                let t = x - z[j - 1];
                b[r * p + j] = b[r * p + j - 1] * t;
                db[r * p + j] = db[r * p + j - 1] * t + b[r * p + j - 1];
            }
        }
        (b, db)
    }
}

/// Direct Lagrange-form evaluation `Σ_α f(p_α) L_α(x)` of the interpolant of `samples`
/// (same layout as [`TensorPolynomial::interpolate`]). Independent of the Newton path.
pub fn eval_lagrange_form<T: Real>(samples: &[T], grid: &ChebyshevGrid<T>, codomain_dim: usize, x: &[T]) -> Vec<T> {
    let d = grid.dim();
    let basis: Vec<Vec<T>> = (0..d).map(|a| lagrange_basis_1d(grid.nodes_1d(), x[a])).collect();
    let mut out = vec![T::zero(); codomain_dim];
    for flat in 0..grid.len() {
        let alpha = grid.multi_index(flat);
        let w = alpha.iter().enumerate().fold(T::one(), |acc, (a, &k)| acc * basis[a][k]);
        for c in 0..codomain_dim {
            out[c] = out[c] + w * samples[flat * codomain_dim + c];
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::halton_cube;

    fn grid(d: usize, n: usize) -> ChebyshevGrid<f64> {
        ChebyshevGrid::new(d, n).unwrap()
    }

    #[test]
    fn constants_reproduced() {
        for (d, n) in [(1, 5), (2, 7), (3, 4)] {
            let g = grid(d, n);
            let p = TensorPolynomial::from_fn(&g, 1, |_| vec![1.0]).unwrap();
            for i in 0..50 {
                assert!((p.eval(&halton_cube(i, d))[0] - 1.0).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn in_space_monomial_exact() {
        let g = grid(2, 3);
        let p = TensorPolynomial::from_fn(&g, 1, |x| vec![x[0].powi(3) * x[1].powi(2)]).unwrap();
        let v = p.eval(&[0.3, -0.7])[0];
        assert!((v - 0.3f64.powi(3) * 0.7f64.powi(2)).abs() < 1e-13);
    }

    #[test]
    fn linear_reproduction_and_zero() {
        let g = grid(2, 4);
        let p = TensorPolynomial::from_fn(&g, 1, |x| vec![x[0] + x[1]]).unwrap();
        assert!((p.eval(&[0.25, 0.5])[0] - 0.75).abs() < 1e-15);
        let z = TensorPolynomial::from_newton_coefficients(&g, 2, vec![0.0; 50]).unwrap();
        assert_eq!(z.eval(&[0.1, 0.2]), vec![0.0, 0.0]);
    }

    #[test]
    fn sample_count_mismatch() {
        let g = grid(2, 3);
        assert!(matches!(TensorPolynomial::interpolate(&[0.0; 15], &g, 1), Err(Error::Shape { expected: 16, actual: 15 })));
        assert!(TensorPolynomial::interpolate(&[0.0; 16], &g, 2).is_err());
    }

    #[test]
    fn interpolation_property_at_nodes() {
        let g = grid(2, 12);
        let f = |x: &[f64]| vec![(x[0] * 2.0).sin() * (x[1] + 0.3).exp(), 1.0 / (2.0 + x[0] * x[1])];
        let p = TensorPolynomial::from_fn(&g, 2, f).unwrap();
        for x in g.points() {
            let want = f(&x);
            let got = p.eval(&x);
            for c in 0..2 {
                assert!((got[c] - want[c]).abs() <= 1e-13 * want[c].abs().max(1.0));
            }
        }
    }

    #[test]
    fn newton_matches_lagrange_form() {
        for (d, n) in [(1, 12), (2, 5), (2, 12)] {
            let g = grid(d, n);
            let f = |x: &[f64]| vec![x.iter().map(|v| (3.0 * v).cos()).product::<f64>()];
            let samples: Vec<f64> = g.points().flat_map(|x| f(&x)).collect();
            let p = TensorPolynomial::interpolate(&samples, &g, 1).unwrap();
            for i in 0..1000 {
                let x = halton_cube(i, d);
                let a = p.eval(&x)[0];
                let b = eval_lagrange_form(&samples, &g, 1, &x)[0];
                assert!((a - b).abs() < 1e-12, "d={d} n={n} at {x:?}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn gradient_examples() {
        let g = grid(2, 4);
        let p = TensorPolynomial::from_fn(&g, 1, |x| vec![x[0] * x[0]]).unwrap();
        let j = p.eval_gradient(&[0.5, 0.1]);
        assert!((j[(0, 0)] - 1.0).abs() < 1e-14 && j[(0, 1)].abs() < 1e-14);
        let c = TensorPolynomial::from_fn(&g, 1, |_| vec![3.0]).unwrap();
        let jc = c.eval_gradient(&[0.2, -0.4]);
        assert!(jc[(0, 0)].abs() < 1e-14 && jc[(0, 1)].abs() < 1e-14);
    }

    #[test]
    fn gradient_matches_analytic() {
        let g = grid(2, 20);
        let p = TensorPolynomial::from_fn(&g, 1, |x| vec![x[0].sin() * x[1].cos()]).unwrap();
        for i in 0..100 {
            let x = halton_cube(i, 2);
            let j = p.eval_gradient(&x);
            assert!((j[(0, 0)] - x[0].cos() * x[1].cos()).abs() < 1e-10);
            assert!((j[(0, 1)] + x[0].sin() * x[1].sin()).abs() < 1e-10);
        }
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let g = grid(3, 6);
        let p = TensorPolynomial::from_fn(&g, 2, |x| vec![(x[0] * x[1]).exp() + x[2], (x[2] - x[0]).sin()]).unwrap();
        let h = 1e-6;
        for i in 0..100 {
            let x: Vec<f64> = halton_cube(i, 3).iter().map(|v| v * 0.95).collect();
            let j = p.eval_gradient(&x);
            for a in 0..3 {
                let mut xp = x.clone();
                let mut xm = x.clone();
                xp[a] += h;
                xm[a] -= h;
                let (fp, fm) = (p.eval(&xp), p.eval(&xm));
                for c in 0..2 {
                    let fd = (fp[c] - fm[c]) / (2.0 * h);
                    assert!((j[(c, a)] - fd).abs() <= 1e-7 * fd.abs().max(1.0));
                }
            }
        }
    }

    #[test]
    fn grid_evaluation_matches_pointwise() {
        let g = grid(2, 9);
        let p = TensorPolynomial::from_fn(&g, 3, |x| vec![x[0] * x[1], (x[0] - x[1]).exp(), x[1].powi(5)]).unwrap();
        let xs = [-0.9, -0.2, 0.0, 0.33, 0.8];
        let ys = [-0.7, 0.1, 0.95];
        let ge = p.eval_grid_2d(&xs, &ys);
        for (ix, &x) in xs.iter().enumerate() {
            for (iy, &y) in ys.iter().enumerate() {
                let (v, j) = p.eval_with_gradient(&[x, y]);
                for c in 0..3 {
                    let k = ge.index(c, ix, iy);
                    assert!((ge.values[k] - v[c]).abs() < 1e-13);
                    assert!((ge.dx[k] - j[(c, 0)]).abs() < 1e-12);
                    assert!((ge.dy[k] - j[(c, 1)]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn runge_function_converges() {
        let f = |x: f64| 1.0 / (1.0 + 25.0 * x * x);
        let mut errors = Vec::new();
        for n in [8, 16, 32, 64, 128] {
            let g = grid(1, n);
            let p = TensorPolynomial::from_fn(&g, 1, |x| vec![f(x[0])]).unwrap();
            let err = (0..1000)
                .map(|i| {
                    let x = -1.0 + 2.0 * i as f64 / 999.0;
                    (p.eval(&[x])[0] - f(x)).abs()
                })
                .fold(0.0, f64::max);
            errors.push(err);
        }
        assert!(errors.windows(2).all(|w| w[1] < w[0]), "{errors:?}");
        assert!(errors[4] < 1e-10, "{errors:?}");
    }

    #[test]
    fn f32_interpolation() {
        let g = ChebyshevGrid::<f32>::new(2, 6).unwrap();
        let p = TensorPolynomial::from_fn(&g, 1, |x| vec![x[0] * x[1] + 1.0]).unwrap();
        assert!((p.eval(&[0.5, 0.5])[0] - 1.25).abs() < 1e-6);
    }
}
