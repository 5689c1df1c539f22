//! Second-order forward-mode differentiation in three variables, so each level function
//! is written once and yields value, gradient and Hessian.

use std::ops::{Add, Mul, Neg, Sub};

use crate::real::Real;

/// Arithmetic needed to evaluate a polynomial level function.
pub trait LevelScalar<T: Real>:
    Copy + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn constant(v: T) -> Self;

    fn sq(self) -> Self {
        self * self
    }
}

impl<T: Real> LevelScalar<T> for T {
    #[inline]
    fn constant(v: T) -> Self {
        v
    }
}

/// Value, gradient and Hessian of a scalar function of `(x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Jet<T> {
    pub value: T,
    pub grad: [T; 3],
    pub hess: [[T; 3]; 3],
}

impl<T: Real> Jet<T> {
    pub fn variable(v: T, axis: usize) -> Self {
        let mut grad = [T::zero(); 3];
        grad[axis] = T::one();
        Jet { value: v, grad, hess: [[T::zero(); 3]; 3] }
    }

    /// Independent variables seeded at `p`.
    pub fn seed(p: [T; 3]) -> [Self; 3] {
        [Self::variable(p[0], 0), Self::variable(p[1], 1), Self::variable(p[2], 2)]
    }
}

impl<T: Real> Add for Jet<T> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let mut r = self;
        r.value = r.value + o.value;
        for i in 0..3 {
            r.grad[i] = r.grad[i] + o.grad[i];
            for j in 0..3 {
                r.hess[i][j] = r.hess[i][j] + o.hess[i][j];
            }
        }
        r
    }
}

impl<T: Real> Neg for Jet<T> {
    type Output = Self;
    fn neg(self) -> Self {
        let mut r = self;
        r.value = -r.value;
        for i in 0..3 {
            r.grad[i] = -r.grad[i];
            for j in 0..3 {
                r.hess[i][j] = -r.hess[i][j];
            }
        }
        r
    }
}

impl<T: Real> Sub for Jet<T> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<T: Real> Mul for Jet<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let mut r = Jet { value: self.value * o.value, grad: [T::zero(); 3], hess: [[T::zero(); 3]; 3] };
        for i in 0..3 {
            r.grad[i] = self.grad[i] * o.value + self.value * o.grad[i];
            for j in 0..3 {
                r.hess[i][j] = self.hess[i][j] * o.value
                    + self.value * o.hess[i][j]
                    + self.grad[i] * o.grad[j]
                    + o.grad[i] * self.grad[j];
            }
        }
        r
    }
}

impl<T: Real> LevelScalar<T> for Jet<T> {
    fn constant(v: T) -> Self {
        Jet { value: v, grad: [T::zero(); 3], hess: [[T::zero(); 3]; 3] }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_rule() {
        // f = x²y + 3z
        let [x, y, z] = Jet::seed([2.0, -1.0, 0.5]);
        let f = x * x * y + Jet::constant(3.0) * z;
        assert_eq!(f.value, -4.0 + 1.5);
        assert_eq!(f.grad, [-4.0, 4.0, 3.0]);
        assert_eq!(f.hess, [[-2.0, 4.0, 0.0], [4.0, 0.0, 0.0], [0.0, 0.0, 0.0]]);
    }
}
