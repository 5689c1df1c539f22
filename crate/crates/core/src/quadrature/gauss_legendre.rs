use super::{Domain, QuadratureRule};
use crate::error::{Error, Result};
use crate::real::Real;

pub const MAX_GAUSS_LEGENDRE_POINTS: usize = 100;

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::one();
    let mut p1 = x;
    for k in 2..=n {
        let kf = T::from_usize_exact(k);
        let p2 = ((T::c(2.0) * kf - T::one()) * x * p1 - (kf - T::one()) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = T::from_usize_exact(n);
    let dp = nf * (x * p1 - p0) / (x * x - T::one());
    (p1, dp)
}

/// Gauss–Legendre nodes (ascending) and weights on `[-1, 1]`.
pub fn gauss_legendre_1d<T: Real>(n_points: usize) -> Result<QuadratureRule<T>> {
    if n_points == 0 || n_points > MAX_GAUSS_LEGENDRE_POINTS {
        return Err(Error::InvalidParameter(format!(
            "Gauss-Legendre point count must be in 1..={MAX_GAUSS_LEGENDRE_POINTS}, got {n_points}"
        )));
    }
    let n = n_points;
    let mut nodes = vec![T::zero(); n];
    let mut weights = vec![T::zero(); n];
    if n == 1 {
        return Ok(QuadratureRule::new(Domain::Cube(1), vec![T::zero()], vec![T::c(2.0)], 1));
    }
    let tol = T::tol(1e-15);
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // i-th largest root
        let mut x = T::c((std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos());
        for _ in 0..100 {
            let (p, dp) = legendre(n, x);
            let dx = p / dp;
            x = x - dx;
            if dx.abs() <= tol {
                break;
            }
        }
        let (_, dp) = legendre(n, x);
        let w = T::c(2.0) / ((T::one() - x * x) * dp * dp);
        nodes[n - 1 - i] = x;
        nodes[i] = -x;
        weights[n - 1 - i] = w;
        weights[i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = T::zero();
    }
    Ok(QuadratureRule::new(Domain::Cube(1), nodes, weights, 2 * n - 1))
}

/// Tensor product of `n_points_per_axis`-point Gauss–Legendre rules on `[-1,1]^d`;
/// points ordered lexicographically, first axis slowest.
pub fn tensor_gauss_legendre<T: Real>(d: usize, n_points_per_axis: usize) -> Result<QuadratureRule<T>> {
    if !(1..=3).contains(&d) {
        return Err(Error::UnsupportedDimension { dim: d, supported: "1, 2 or 3" });
    }
    let base = gauss_legendre_1d::<T>(n_points_per_axis)?;
    let n = base.len();
    let total = n.pow(d as u32);
    let mut points = Vec::with_capacity(total * d);
    let mut weights = Vec::with_capacity(total);
    for flat in 0..total {
        let mut rem = flat;
        let mut idx = vec![0; d];
        for a in (0..d).rev() {
            idx[a] = rem % n;
            rem /= n;
        }
        points.extend(idx.iter().map(|&i| base.point(i)[0]));
        weights.push(idx.iter().fold(T::one(), |acc, &i| acc * base.weights()[i]));
    }
    Ok(QuadratureRule::new(Domain::Cube(d), points, weights, 2 * n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn monomial_integral(j: usize) -> f64 {
        if j % 2 == 1 {
            0.0
        } else {
            2.0 / (j as f64 + 1.0)
        }
    }

    #[test]
    fn small_rules() {
        let r1 = gauss_legendre_1d::<f64>(1).unwrap();
        assert_eq!(r1.point(0), &[0.0]);
        assert_eq!(r1.weights(), &[2.0]);
        let r2 = gauss_legendre_1d::<f64>(2).unwrap();
        let s = 1.0 / 3f64.sqrt();
        assert!((r2.point(0)[0] + s).abs() < 3e-16 && (r2.point(1)[0] - s).abs() < 3e-16);
        assert!((r2.weights()[0] - 1.0).abs() < 1e-15 && (r2.weights()[1] - 1.0).abs() < 1e-15);
        assert!((r2.integrate(|x| x[0] * x[0]) - 2.0 / 3.0).abs() < 1e-15);
        let r5 = gauss_legendre_1d::<f64>(5).unwrap();
        assert!((r5.integrate(|x| x[0].powi(8)) - 2.0 / 9.0).abs() < 1e-14);
    }

    #[test]
    fn out_of_range_counts() {
        assert!(gauss_legendre_1d::<f64>(0).is_err());
        assert!(gauss_legendre_1d::<f64>(101).is_err());
        assert!(tensor_gauss_legendre::<f64>(4, 3).is_err());
    }

    #[test]
    fn monomial_exactness_all_sizes() {
        for n in 1..=MAX_GAUSS_LEGENDRE_POINTS {
            let r = gauss_legendre_1d::<f64>(n).unwrap();
            assert_eq!(r.exactness_degree(), 2 * n - 1);
            assert!(r.weights().iter().all(|&w| w > 0.0));
            for j in 0..=2 * n - 1 {
                let got = r.integrate(|x| x[0].powi(j as i32));
                assert!((got - monomial_integral(j)).abs() < 1e-13, "n={n} j={j}: {got}");
            }
        }
    }

    #[test]
    fn tensor_rules() {
        let r = tensor_gauss_legendre::<f64>(2, 14).unwrap();
        assert_eq!(r.len(), 196);
        assert!((r.weight_sum() - 4.0).abs() < 1e-13);
        let r3 = tensor_gauss_legendre::<f64>(2, 3).unwrap();
        let got = r3.integrate(|x| x[0].powi(2) * x[1].powi(4));
        assert!((got - 4.0 / 15.0).abs() < 1e-14);
        let c = tensor_gauss_legendre::<f64>(3, 4).unwrap();
        assert_eq!(c.len(), 64);
        let got = c.integrate(|x| x[0].powi(6) * x[1].powi(2) * x[2].powi(7));
        assert!(got.abs() < 1e-15);
        let got = c.integrate(|x| x[0].powi(6) * x[1].powi(2) * x[2].powi(4));
        assert!((got - (2.0 / 7.0) * (2.0 / 3.0) * (2.0 / 5.0)).abs() < 1e-14);
    }

    #[test]
    fn f32_rule() {
        let r = gauss_legendre_1d::<f32>(6).unwrap();
        assert!((r.integrate(|x| x[0].powi(10)) - 2.0 / 11.0).abs() < 1e-6);
    }
}
