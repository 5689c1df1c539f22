use hosq::interpolation::{eval_lagrange_form, ChebyshevGrid, TensorPolynomial};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomials_are_reproduced(n in 1usize..=10, coeffs in prop::collection::vec(-1.0f64..1.0, 121), x in -1.0f64..1.0, y in -1.0f64..1.0) {
        // p(x, y) = Σ c_ij x^i y^j with i, j ≤ n
        let p = |u: f64, v: f64| -> f64 {
            let mut s = 0.0;
            for i in 0..=n {
                for j in 0..=n {
                    s += coeffs[i * 11 + j] * u.powi(i as i32) * v.powi(j as i32);
                }
            }
            s
        };
        let grid = ChebyshevGrid::<f64>::new(2, n).unwrap();
        let q = TensorPolynomial::from_fn(&grid, 1, |z| vec![p(z[0], z[1])]).unwrap();
        let scale: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>().max(1.0);
        prop_assert!((q.eval(&[x, y])[0] - p(x, y)).abs() <= 1e-12 * scale);
    }

    #[test]
    fn newton_and_lagrange_forms_agree(n in 1usize..=12, a in 0.1f64..3.0, x in -1.0f64..1.0, y in -1.0f64..1.0) {
        let grid = ChebyshevGrid::<f64>::new(2, n).unwrap();
        let f = |z: &[f64]| vec![(a * z[0]).exp() * (z[1] - 0.3).cos()];
        let samples: Vec<f64> = grid.points().flat_map(|z| f(&z)).collect();
        let q = TensorPolynomial::interpolate(&samples, &grid, 1).unwrap();
        let lag = eval_lagrange_form(&samples, &grid, 1, &[x, y]);
        prop_assert!((q.eval(&[x, y])[0] - lag[0]).abs() <= 1e-12 * (1.0 + lag[0].abs()));
    }

    #[test]
    fn gradient_matches_central_differences(n in 2usize..=10, a in 0.1f64..2.0, x in -0.9f64..0.9, y in -0.9f64..0.9) {
        let grid = ChebyshevGrid::<f64>::new(2, n).unwrap();
        let q = TensorPolynomial::from_fn(&grid, 2, |z| vec![(a * z[0] * z[1]).sin(), z[0] * z[0] - a * z[1]]).unwrap();
        let jac = q.eval_gradient(&[x, y]);
        let h = 1e-6;
        for axis in 0..2 {
            let mut p = [x, y];
            let mut m = [x, y];
            p[axis] += h;
            m[axis] -= h;
            let (fp, fm) = (q.eval(&p), q.eval(&m));
            for c in 0..2 {
                prop_assert!(((fp[c] - fm[c]) / (2.0 * h) - jac[(c, axis)]).abs() < 1e-6);
            }
        }
    }
}
