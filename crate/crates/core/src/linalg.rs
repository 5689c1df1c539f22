//! Small dense linear algebra used by the transforms, projections and pipeline.
//! Everything here is sized at most 4x4.

use crate::real::Real;

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_rows<R: AsRef<[T]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged rows");
            data.extend_from_slice(row.as_ref());
        }
        Self { rows: r, cols: c, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)] + a * other[(k, j)];
                }
            }
        }
        out
    }

    /// Spectral norm of a 2x2 or 3x3 matrix through the largest eigenvalue of
    /// `AᵀA` (power iteration for 3x3, closed form for 2x2).
    pub fn operator_norm(&self) -> T {
        let ata = self.transpose().matmul(self);
        if ata.rows == 2 {
            let (a, b, d) = (ata[(0, 0)], ata[(0, 1)], ata[(1, 1)]);
            let half_tr = (a + d) / T::c(2.0);
            let disc = ((a - d) * (a - d) / T::c(4.0) + b * b).sqrt();
            return (half_tr + disc).max(T::zero()).sqrt();
        }
        let n = ata.rows;
        let mut v = vec![T::one(); n];
        let mut lambda = T::zero();
        for _ in 0..200 {
            let w: Vec<T> = (0..n).map(|i| (0..n).map(|j| ata[(i, j)] * v[j]).sum()).collect();
            let norm = w.iter().map(|x| *x * *x).sum::<T>().sqrt();
            if norm == T::zero() {
                return T::zero();
            }
            v = w.iter().map(|x| *x / norm).collect();
            lambda = norm;
        }
        lambda.sqrt()
    }

    pub fn determinant(&self) -> T {
        assert_eq!(self.rows, self.cols);
        match self.rows {
            1 => self.data[0],
            2 => self[(0, 0)] * self[(1, 1)] - self[(0, 1)] * self[(1, 0)],
            3 => {
                let m = |i, j| self[(i, j)];
                m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                    - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
            }
            _ => {
                let mut lu = self.clone();
                let n = self.rows;
                let mut det = T::one();
                for k in 0..n {
                    let p = (k..n)
                        .max_by(|&a, &b| lu[(a, k)].abs().partial_cmp(&lu[(b, k)].abs()).unwrap())
                        .unwrap();
                    if lu[(p, k)] == T::zero() {
                        return T::zero();
                    }
                    if p != k {
                        lu.swap_rows(p, k);
                        det = -det;
                    }
                    det = det * lu[(k, k)];
                    for i in k + 1..n {
                        let f = lu[(i, k)] / lu[(k, k)];
                        for j in k..n {
                            lu[(i, j)] = lu[(i, j)] - f * lu[(k, j)];
                        }
                    }
                }
                det
            }
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Solves `self * x = rhs` by Gaussian elimination with partial pivoting.
    /// Returns `None` for a numerically singular system.
    pub fn solve(&self, rhs: &[T]) -> Option<Vec<T>> {
        let n = self.rows;
        assert_eq!(n, self.cols);
        assert_eq!(rhs.len(), n);
        let mut a = self.clone();
        let mut b = rhs.to_vec();
        let scale = self.data.iter().fold(T::zero(), |m, v| m.max(v.abs()));
        if scale == T::zero() {
            return None;
        }
        for k in 0..n {
            let p = (k..n)
                .max_by(|&x, &y| a[(x, k)].abs().partial_cmp(&a[(y, k)].abs()).unwrap())
                .unwrap();
            if a[(p, k)].abs() <= scale * T::epsilon() * T::c(16.0) {
                return None;
            }
            if p != k {
                a.swap_rows(p, k);
                b.swap(p, k);
            }
            for i in k + 1..n {
                let f = a[(i, k)] / a[(k, k)];
                for j in k..n {
                    a[(i, j)] = a[(i, j)] - f * a[(k, j)];
                }
                b[i] = b[i] - f * b[k];
            }
        }
        let mut x = vec![T::zero(); n];
        for i in (0..n).rev() {
            let mut s = b[i];
            for j in i + 1..n {
                s = s - a[(i, j)] * x[j];
            }
            x[i] = s / a[(i, i)];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.rows;
        let mut inv = Self::zeros(n, n);
        for j in 0..n {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            let col = self.solve(&e)?;
            for i in 0..n {
                inv[(i, j)] = col[i];
            }
        }
        Some(inv)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

pub type Vec3<T> = [T; 3];

#[inline]
pub fn sub<T: Real>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

#[inline]
pub fn add<T: Real>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

#[inline]
pub fn scale<T: Real>(a: Vec3<T>, s: T) -> Vec3<T> {
    [a[0] * s, a[1] * s, a[2] * s]
}

#[inline]
pub fn dot<T: Real>(a: Vec3<T>, b: Vec3<T>) -> T {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross<T: Real>(a: Vec3<T>, b: Vec3<T>) -> Vec3<T> {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

#[inline]
pub fn norm<T: Real>(a: Vec3<T>) -> T {
    // hypot-style scaling is unnecessary at the magnitudes seen here
    dot(a, a).sqrt()
}

pub fn to_f64_3<T: Real>(a: Vec3<T>) -> [f64; 3] {
    [a[0].to_f64_lossy(), a[1].to_f64_lossy(), a[2].to_f64_lossy()]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solve_and_inverse() {
        let a = Matrix::from_rows(&[[4.0, 1.0, 0.0, 2.0], [1.0, 3.0, 1.0, 0.0], [0.0, 1.0, 5.0, 1.0], [2.0, 0.0, 1.0, 6.0]]);
        let x = a.solve(&[1.0, 2.0, 3.0, 4.0]).unwrap();
        for i in 0..4 {
            let r: f64 = (0..4).map(|j| a[(i, j)] * x[j]).sum();
            assert!((r - [1.0, 2.0, 3.0, 4.0][i]).abs() < 1e-14);
        }
        let id = a.matmul(&a.inverse().unwrap());
        for i in 0..4 {
            for j in 0..4 {
                let e = if i == j { 1.0 } else { 0.0 };
                assert!((id[(i, j)] - e).abs() < 1e-14);
            }
        }
        let det3 = Matrix::from_rows(&[[2.0, 0.0, 1.0], [1.0, 3.0, 2.0], [1.0, 1.0, 2.0]]).determinant();
        assert!((det3 - 6.0f64).abs() < 1e-14);
    }

    #[test]
    fn singular_system_detected() {
        let a = Matrix::from_rows(&[[1.0, 2.0], [2.0, 4.0]]);
        assert!(a.solve(&[1.0, 1.0]).is_none());
    }

    #[test]
    fn operator_norm_matches_singular_value() {
        let a = Matrix::from_rows(&[[3.0_f64, 0.0], [0.0, -5.0]]);
        assert!((a.operator_norm() - 5.0).abs() < 1e-14);
        let b = Matrix::from_rows(&[[1.0_f64, 0.0, 0.0], [0.0, 2.0, 0.0], [0.0, 0.0, 0.5]]);
        assert!((b.operator_norm() - 2.0).abs() < 1e-12);
    }
}
