use super::grid::ChebyshevGrid;
use crate::error::{Error, Result};
use crate::real::Real;

/// Values `l_j(x)` of the 1D Lagrange basis on `nodes`, straight from the product formula.
pub fn lagrange_basis_1d<T: Real>(nodes: &[T], x: T) -> Vec<T> {
    (0..nodes.len())
        .map(|j| {
            nodes.iter().enumerate().filter(|&(k, _)| k != j).fold(T::one(), |acc, (_, &pk)| {
                acc * (x - pk) / (nodes[j] - pk)
            })
        })
        .collect()
}

/// Lower estimate of the Lebesgue constant: the maximum of `Σ_α |L_α|` over a uniform
/// lattice with `resolution` points per axis.
pub fn lebesgue_constant<T: Real>(grid: &ChebyshevGrid<T>, resolution: usize) -> Result<T> {
    if resolution < 10 {
        return Err(Error::InvalidParameter(format!(
            "Lebesgue sampling needs at least 10 points per axis, got {resolution}"
        )));
    }
    let d = grid.dim();
    let p = grid.points_per_axis();
    let step = T::c(2.0) / T::from_usize_exact(resolution - 1);
    // |l_j(x_s)| table shared by every axis
    let table: Vec<Vec<T>> = (0..resolution)
        .map(|s| {
            let x = -T::one() + step * T::from_usize_exact(s);
            lagrange_basis_1d(grid.nodes_1d(), x).into_iter().map(|v| v.abs()).collect()
        })
        .collect();
    let lattice = resolution.pow(d as u32);
    let mut best = T::zero();
    let mut sample = vec![0usize; d];
    for flat in 0..lattice {
        let mut rem = flat;
        for a in (0..d).rev() {
            sample[a] = rem % resolution;
            rem /= resolution;
        }
        let mut total = T::zero();
        for alpha in 0..grid.len() {
            let mut r = alpha;
            let mut term = T::one();
            for a in (0..d).rev() {
                term = term * table[sample[a]][r % p];
                r /= p;
            }
            total = total + term;
        }
        best = best.max(total);
    }
    Ok(best)
}

/// [`lebesgue_constant`] at the default sampling density (1000 points for d = 1, 300 per axis otherwise).
pub fn lebesgue_constant_default<T: Real>(grid: &ChebyshevGrid<T>) -> Result<T> {
    let resolution = if grid.dim() == 1 { 1000 } else { 300 };
    lebesgue_constant(grid, resolution)
}

/// The asymptotic expression `(2/π)(log(n+1) + γ + log(8/π))` for 1D Chebyshev–Lobatto nodes.
pub fn lebesgue_estimate(n: usize) -> f64 {
    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;
    2.0 / std::f64::consts::PI * (((n + 1) as f64).ln() + EULER_GAMMA + (8.0 / std::f64::consts::PI).ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_on_endpoints_is_one() {
        let g = ChebyshevGrid::<f64>::new(1, 1).unwrap();
        assert!((lebesgue_constant(&g, 1000).unwrap() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn degree_ten_near_asymptotic_value() {
        let g = ChebyshevGrid::<f64>::new(1, 10).unwrap();
        let lambda = lebesgue_constant_default(&g).unwrap();
        let est = lebesgue_estimate(10);
        assert!((est - 2.489).abs() < 1e-3);
        assert!((lambda - est).abs() / est < 0.05, "{lambda} vs {est}");
    }

    #[test]
    fn tensor_bound() {
        let g1 = ChebyshevGrid::<f64>::new(1, 10).unwrap();
        let g2 = ChebyshevGrid::<f64>::new(2, 10).unwrap();
        let l1 = lebesgue_constant(&g1, 300).unwrap();
        let l2 = lebesgue_constant(&g2, 300).unwrap();
        assert!(l2 <= l1 * l1 + 1e-9);
        assert!(l2 > l1);
    }

    #[test]
    fn growth_follows_asymptotics() {
        for n in [8, 16, 32] {
            let g = ChebyshevGrid::<f64>::new(1, n).unwrap();
            let lambda = lebesgue_constant_default(&g).unwrap();
            let est = lebesgue_estimate(n);
            assert!((lambda - est).abs() / est < 0.05, "n={n}: {lambda} vs {est}");
        }
    }

    #[test]
    fn rejects_coarse_sampling() {
        let g = ChebyshevGrid::<f64>::new(1, 3).unwrap();
        assert!(lebesgue_constant(&g, 5).is_err());
    }

    #[test]
    fn lagrange_basis_is_partition_of_unity() {
        let g = ChebyshevGrid::<f64>::new(1, 9).unwrap();
        let s: f64 = lagrange_basis_1d(g.nodes_1d(), 0.123).iter().sum();
        assert!((s - 1.0).abs() < 1e-14);
    }
}
