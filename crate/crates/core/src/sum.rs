//! Compensated and pairwise summation.

use crate::real::Real;

/// Kahan–Babuška (Neumaier) running sum.
#[derive(Debug, Clone, Copy)]
pub struct KahanSum<T> {
    sum: T,
    compensation: T,
}

impl<T: Real> Default for KahanSum<T> {
    fn default() -> Self {
        Self { sum: T::zero(), compensation: T::zero() }
    }
}

impl<T: Real> KahanSum<T> {
    pub fn add(&mut self, v: T) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.compensation = self.compensation + ((self.sum - t) + v);
        } else {
            self.compensation = self.compensation + ((v - t) + self.sum);
        }
        self.sum = t;
    }

    pub fn value(&self) -> T {
        self.sum + self.compensation
    }
}

impl<T: Real> FromIterator<T> for KahanSum<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut s = Self::default();
        for v in iter {
            s.add(v);
        }
        s
    }
}

pub fn kahan_sum<T: Real>(values: &[T]) -> T {
    values.iter().copied().collect::<KahanSum<T>>().value()
}

/// Pairwise (tree) reduction over the slice in its given order.
pub fn pairwise_sum<T: Real>(values: &[T]) -> T {
    const LEAF: usize = 8;
    if values.len() <= LEAF {
        return values.iter().fold(T::zero(), |a, b| a + *b);
    }
    let mid = values.len() / 2;
    pairwise_sum(&values[..mid]) + pairwise_sum(&values[mid..])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kahan_recovers_small_terms() {
        let mut v = vec![1.0_f64];
        v.extend(std::iter::repeat_n(1e-16, 10_000));
        let naive: f64 = v.iter().sum();
        assert_eq!(naive, 1.0);
        assert!((kahan_sum(&v) - (1.0 + 1e-12)).abs() < 1e-15);
    }

    #[test]
    fn pairwise_matches_exact_integer_sum() {
        let v: Vec<f64> = (1..=1000).map(|i| i as f64).collect();
        assert_eq!(pairwise_sum(&v), 500_500.0);
    }
}
