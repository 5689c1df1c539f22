use crate::error::{Error, Result};
use crate::real::Real;

/// The `n + 1` Chebyshev–Lobatto nodes `cos(kπ/n)`, `k = 0..=n`, strictly decreasing.
///
/// Nodes past the midpoint are mirrored (`x[k] = -x[n-k]`) so the set is exactly
/// antisymmetric in floating point.
pub fn cheb_lobatto_nodes<T: Real>(n: usize) -> Result<Vec<T>> {
    if n == 0 {
        return Err(Error::InvalidDegree { degree: 0, reason: "Chebyshev-Lobatto grids need n >= 1" });
    }
    let nf = T::from_usize_exact(n);
    let mut nodes: Vec<T> = (0..=n).map(|k| (T::from_usize_exact(k) * T::PI() / nf).cos()).collect();
    for k in 0..=n {
        if 2 * k > n {
            nodes[k] = -nodes[n - k];
        } else if 2 * k == n {
            nodes[k] = T::zero();
        }
    }
    nodes[0] = T::one();
    nodes[n] = -T::one();
    Ok(nodes)
}

/// Greedy Leja ordering: start at the node of largest modulus, then repeatedly take the
/// node maximising the product of distances to those already chosen.
fn leja_order<T: Real>(nodes: &[T]) -> Vec<usize> {
    let n = nodes.len();
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    let first = (0..n)
        .max_by(|&a, &b| nodes[a].abs().partial_cmp(&nodes[b].abs()).unwrap().then(b.cmp(&a)))
        .unwrap();
    order.push(first);
    used[first] = true;
    // running sum of log-distances to the chosen set
    let mut score: Vec<T> = nodes.iter().map(|&x| (x - nodes[first]).abs().ln()).collect();
    while order.len() < n {
        let mut best = None;
        for i in 0..n {
            if used[i] {
                continue;
            }
            match best {
                None => best = Some(i),
                Some(b) if score[i] > score[b] => best = Some(i),
                _ => {}
            }
        }
        let next = best.unwrap();
        used[next] = true;
        order.push(next);
        for i in 0..n {
            if !used[i] {
                score[i] = score[i] + (nodes[i] - nodes[next]).abs().ln();
            }
        }
    }
    order
}

/// The tensor grid `Cheb_n ⊗ … ⊗ Cheb_n` in `d` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct ChebyshevGrid<T> {
    dim: usize,
    degree: usize,
    nodes: Vec<T>,
    newton_order: Vec<usize>,
    newton_nodes: Vec<T>,
}

impl<T: Real> ChebyshevGrid<T> {
    pub fn new(dim: usize, degree: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::UnsupportedDimension { dim, supported: ">= 1" });
        }
        let nodes = cheb_lobatto_nodes(degree)?;
        let newton_order = leja_order(&nodes);
        let newton_nodes = newton_order.iter().map(|&i| nodes[i]).collect();
        Ok(Self { dim, degree, nodes, newton_order, newton_nodes })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// One-dimensional nodes in `cos(kπ/n)` order.
    pub fn nodes_1d(&self) -> &[T] {
        &self.nodes
    }

    /// Permutation of the 1D nodes used by the Newton basis: the j-th Newton factor
    /// involves `nodes_1d[newton_order[0..j]]`.
    pub fn newton_order(&self) -> &[usize] {
        &self.newton_order
    }

    pub fn newton_nodes(&self) -> &[T] {
        &self.newton_nodes
    }

    pub fn points_per_axis(&self) -> usize {
        self.degree + 1
    }

    /// Number of grid points, `(n+1)^d`.
    pub fn len(&self) -> usize {
        self.points_per_axis().pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Multi-index of the flat lexicographic index (first axis slowest).
    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let p = self.points_per_axis();
        let mut alpha = vec![0; self.dim];
        for a in (0..self.dim).rev() {
            alpha[a] = flat % p;
            flat /= p;
        }
        alpha
    }

    pub fn point(&self, alpha: &[usize]) -> Vec<T> {
        alpha.iter().map(|&k| self.nodes[k]).collect()
    }

    /// All grid points in lexicographic multi-index order.
    pub fn points(&self) -> impl Iterator<Item = Vec<T>> + '_ {
        (0..self.len()).map(move |i| self.point(&self.multi_index(i)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_examples() {
        assert_eq!(cheb_lobatto_nodes::<f64>(1).unwrap(), vec![1.0, -1.0]);
        assert_eq!(cheb_lobatto_nodes::<f64>(2).unwrap(), vec![1.0, 0.0, -1.0]);
        let h = 2f64.sqrt() / 2.0;
        let n4 = cheb_lobatto_nodes::<f64>(4).unwrap();
        for (a, b) in n4.iter().zip([1.0, h, 0.0, -h, -1.0]) {
            assert!((a - b).abs() < 1e-16);
        }
        assert!(matches!(cheb_lobatto_nodes::<f64>(0), Err(Error::InvalidDegree { .. })));
    }

    #[test]
    fn nodes_antisymmetric_and_decreasing() {
        for n in 1..80 {
            let x = cheb_lobatto_nodes::<f64>(n).unwrap();
            assert_eq!(x.len(), n + 1);
            for k in 0..=n {
                assert_eq!(x[k], -x[n - k]);
            }
            assert!(x.windows(2).all(|w| w[0] > w[1]));
        }
    }

    #[test]
    fn leja_order_is_a_permutation() {
        let g = ChebyshevGrid::<f64>::new(2, 17).unwrap();
        let mut o = g.newton_order().to_vec();
        assert_eq!(o[0], 0);
        o.sort_unstable();
        assert_eq!(o, (0..=17).collect::<Vec<_>>());
    }

    #[test]
    fn grid_points_lexicographic() {
        let g = ChebyshevGrid::<f64>::new(2, 2).unwrap();
        let pts: Vec<_> = g.points().collect();
        assert_eq!(pts.len(), 9);
        assert_eq!(pts[0], vec![1.0, 1.0]);
        assert_eq!(pts[1], vec![1.0, 0.0]);
        assert_eq!(pts[3], vec![0.0, 1.0]);
        assert_eq!(g.multi_index(5), vec![1, 2]);
    }
}
