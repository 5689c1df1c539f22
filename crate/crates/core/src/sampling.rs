//! Deterministic low-discrepancy samples for diagnostics and tests.

const PRIMES: [u32; 6] = [2, 3, 5, 7, 11, 13];

/// Radical inverse of `index` in the given base.
pub fn radical_inverse(mut index: u64, base: u32) -> f64 {
    let b = base as u64;
    let inv = 1.0 / base as f64;
    let mut f = inv;
    let mut r = 0.0;
    while index > 0 {
        r += f * (index % b) as f64;
        index /= b;
        f *= inv;
    }
    r
}

/// The `index`-th Halton point in `(0,1)^dim` (index 0 is skipped so the origin is never returned).
pub fn halton(index: u64, dim: usize) -> Vec<f64> {
    assert!(dim <= PRIMES.len());
    (0..dim).map(|k| radical_inverse(index + 1, PRIMES[k])).collect()
}

/// Halton point mapped into the open cube `(-1,1)^dim`.
pub fn halton_cube(index: u64, dim: usize) -> Vec<f64> {
    halton(index, dim).into_iter().map(|v| 2.0 * v - 1.0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_halton_points() {
        assert_eq!(halton(0, 2), vec![0.5, 1.0 / 3.0]);
        assert_eq!(halton(1, 2), vec![0.25, 2.0 / 3.0]);
    }
}
