use hosq::transforms::{duffy_forward, duffy_inverse, squeeze_forward, squeeze_inverse, squeeze_jacobian};
use hosq::CubeSimplexMap;
use proptest::prelude::*;

fn interior() -> impl Strategy<Value = f64> {
    -0.999f64..0.999
}

proptest! {
    #[test]
    fn squeeze_round_trip_2d(x in interior(), y in interior()) {
        let back = squeeze_inverse(&squeeze_forward(&[x, y]).unwrap()).unwrap();
        prop_assert!((back[0] - x).abs() < 1e-11 && (back[1] - y).abs() < 1e-11);
    }

    #[test]
    fn squeeze_round_trip_3d(x in interior(), y in interior(), z in interior()) {
        let back = squeeze_inverse(&squeeze_forward(&[x, y, z]).unwrap()).unwrap();
        for (a, b) in back.iter().zip([x, y, z]) {
            prop_assert!((a - b).abs() < 1e-11, "{back:?} vs {:?}", [x, y, z]);
        }
    }

    #[test]
    fn forward_images_lie_in_the_simplex(x in -1.0f64..=1.0, y in -1.0f64..=1.0, z in -1.0f64..=1.0) {
        for p in [squeeze_forward(&[x, y]).unwrap(), squeeze_forward(&[x, y, z]).unwrap(), duffy_forward([x, y]).to_vec()] {
            prop_assert!(p.iter().all(|&v| v >= -1e-15));
            prop_assert!(p.iter().sum::<f64>() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn squeeze_jacobian_is_a_contraction(x in -1.0f64..=1.0, y in -1.0f64..=1.0) {
        let j = squeeze_jacobian(&[x, y]).unwrap();
        prop_assert!(j.operator_norm() <= 1.0 + 1e-12);
    }

    #[test]
    fn interior_determinants_are_positive(x in interior(), y in interior()) {
        for map in [CubeSimplexMap::square_squeeze(2).unwrap(), CubeSimplexMap::duffy()] {
            prop_assert!(map.jacobian(&[x, y]).unwrap().determinant() > 0.0);
        }
    }

    #[test]
    fn duffy_round_trip(x in interior(), y in interior()) {
        let back = duffy_inverse(duffy_forward([x, y])).unwrap();
        prop_assert!((back[0] - x).abs() < 1e-11 && (back[1] - y).abs() < 1e-12);
    }
}
