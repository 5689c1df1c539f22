use hosq::quadrature::{gauss_legendre_1d, pullback_rule, symmetric_triangle_rule, tensor_gauss_legendre};
use hosq::CubeSimplexMap;
use proptest::prelude::*;

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

fn triangle_monomial() -> impl Strategy<Value = (usize, usize, usize)> {
    (1usize..=20).prop_flat_map(|d| (Just(d), 0..=d)).prop_flat_map(|(d, a)| (Just(d), Just(a), 0..=d - a))
}

fn gl_exponents() -> impl Strategy<Value = (usize, usize, usize)> {
    (1usize..=12).prop_flat_map(|n| (Just(n), 0..2 * n, 0..2 * n))
}

proptest! {
    #[test]
    fn triangle_rules_integrate_monomials((degree, a, b) in triangle_monomial()) {
        let rule = symmetric_triangle_rule::<f64>(degree).unwrap();
        let exact = factorial(a) * factorial(b) / factorial(a + b + 2);
        let got = rule.integrate(|p| p[0].powi(a as i32) * p[1].powi(b as i32));
        prop_assert!((got - exact).abs() <= 1e-12 * exact);
        prop_assert!(rule.weights().iter().all(|&w| w > 0.0));
    }

    #[test]
    fn gauss_legendre_integrates_monomials((n, e) in (1usize..=40).prop_flat_map(|n| (Just(n), 0..2 * n))) {
        let rule = gauss_legendre_1d::<f64>(n).unwrap();
        let exact = if e % 2 == 1 { 0.0 } else { 2.0 / (e + 1) as f64 };
        let got = rule.integrate(|p| p[0].powi(e as i32));
        prop_assert!((got - exact).abs() <= 1e-13);
    }

    #[test]
    fn tensor_rule_is_separable((n, a, b) in gl_exponents()) {
        let rule = tensor_gauss_legendre::<f64>(2, n).unwrap();
        let m = |e: usize| if e % 2 == 1 { 0.0 } else { 2.0 / (e + 1) as f64 };
        let got = rule.integrate(|p| p[0].powi(a as i32) * p[1].powi(b as i32));
        prop_assert!((got - m(a) * m(b)).abs() <= 1e-13);
    }

    #[test]
    fn pullback_reproduces_the_triangle_rule(
        degree in 1usize..=20,
        c in prop::array::uniform4(-2.0f64..2.0),
        duffy in any::<bool>(),
    ) {
        let g = |y: &[f64]| (c[0] * y[0] + c[1] * y[1]).sin() + c[2] * y[0] * y[1] + c[3];
        let tri = symmetric_triangle_rule::<f64>(degree).unwrap();
        let map = if duffy { CubeSimplexMap::duffy() } else { CubeSimplexMap::square_squeeze(2).unwrap() };
        let cube = pullback_rule(&tri, &map).unwrap();
        let direct = tri.integrate(g);
        let pulled = cube.integrate(|x| g(&map.forward(x).unwrap()) * map.jacobian(x).unwrap().determinant().abs());
        prop_assert!((direct - pulled).abs() <= 1e-13 * (1.0 + direct.abs()));
    }
}
