mod common;

use common::{rel_close, scale_rotation, sides, triangle, unit};
use polydev::{
    affine_deviation, affine_deviation_from_delta, centroid, heron_area, inner_product,
    isometric_deviation, isometric_deviation_from_delta, norm_sqr, normalized_area, quadrofactor,
    side_lengths, symmetric_components, unbalance_factor, unbalance_factor_from_sides, Triangle,
};
use proptest::prelude::*;

fn delta() -> Triangle {
    Triangle::regular_side_one_ccw()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn centered_norm_is_mean_square_side(t in triangle()) {
        let p = t.to_polygon();
        let s = side_lengths(&t);
        prop_assert!(rel_close(norm_sqr(&p.centered()), s.sum_sq() / 3.0, 1e-10));
    }

    #[test]
    fn alignment_with_delta_from_sides(t in triangle()) {
        let s = side_lengths(&t);
        let p = inner_product(&t.to_polygon().centered(), &delta().to_polygon()).unwrap();
        let n = normalized_area(&s);
        let expected = s.u() / std::f64::consts::SQRT_2 * (1.0 + f64::from(s.sign()) * n).sqrt();
        prop_assert!(rel_close(p.norm(), expected, 1e-9), "{} vs {expected}", p.norm());
    }

    #[test]
    fn quadrofactor_bounds(s in sides()) {
        let q = quadrofactor(&s);
        prop_assert!((1.0 / 3.0..=0.5).contains(&q), "{q}");
    }

    #[test]
    fn heron_matches_shoelace(t in triangle()) {
        prop_assert!(rel_close(heron_area(&side_lengths(&t)), t.area(), 1e-9));
    }

    #[test]
    fn side_formulas_match_vertex_deviations(t in triangle()) {
        let s = side_lengths(&t);
        let (x, d) = (t.to_polygon(), delta().to_polygon());
        let iso = isometric_deviation(&x, &d).unwrap().value;
        let aff = affine_deviation(&x, &d).unwrap().value;
        prop_assert!(rel_close(isometric_deviation_from_delta(&s), iso, 1e-9));
        prop_assert!(rel_close(affine_deviation_from_delta(&s), aff, 1e-9));
    }

    #[test]
    fn unbalance_matches_components(t in triangle()) {
        let c = symmetric_components(&t);
        let ratio = c.negative.norm() / c.positive.norm();
        prop_assert!(rel_close(unbalance_factor_from_sides(&side_lengths(&t)), ratio, 1e-9));
        prop_assert!(rel_close(unbalance_factor(&t), ratio, 1e-15));
    }

    #[test]
    fn similarity_invariance(t in triangle(), a in scale_rotation(), r in unit(), b in common::point()) {
        let s = side_lengths(&t);
        let moved = side_lengths(&t.map(a, b));
        prop_assert!((affine_deviation_from_delta(&s) - affine_deviation_from_delta(&moved)).abs() <= 1e-10);
        let turned = side_lengths(&t.map(r, b));
        prop_assert!(
            (isometric_deviation_from_delta(&s) - isometric_deviation_from_delta(&turned)).abs()
                <= 1e-10 * (1.0 + isometric_deviation_from_delta(&s))
        );
    }

    #[test]
    fn conjugation_swaps_components(t in triangle()) {
        let c = symmetric_components(&t);
        let m = symmetric_components(&t.conj());
        prop_assert_eq!(side_lengths(&t.conj()).sign(), -side_lengths(&t).sign());
        prop_assert!((m.positive - c.negative.conj()).norm() <= 1e-12);
        prop_assert!((m.negative - c.positive.conj()).norm() <= 1e-12);
        prop_assert!((m.zero - c.zero.conj()).norm() <= 1e-12);
        prop_assert!((c.zero - centroid(&t.to_polygon())).norm() <= 1e-12);
    }
}

#[test]
fn isometric_deviation_sees_scale() {
    let t = Triangle::from_pairs([(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]).unwrap();
    let s = side_lengths(&t);
    let half = side_lengths(&t.scaled(0.5));
    assert!(
        (isometric_deviation_from_delta(&s) - isometric_deviation_from_delta(&half)).abs() > 1.0
    );
    assert!((affine_deviation_from_delta(&s) - affine_deviation_from_delta(&half)).abs() < 1e-15);
}
