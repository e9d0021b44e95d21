#![allow(dead_code)]

use polydev::{Complex64, Polygon, Triangle, TriangleSides};
use proptest::prelude::*;

pub fn coord() -> impl Strategy<Value = f64> {
    -10.0..10.0f64
}

pub fn point() -> impl Strategy<Value = Complex64> {
    (coord(), coord()).prop_map(|(re, im)| Complex64::new(re, im))
}

pub fn polygon(n: usize) -> impl Strategy<Value = Polygon> {
    prop::collection::vec(point(), n).prop_map(|v| Polygon::new(v).unwrap())
}

pub fn polygon_pair() -> impl Strategy<Value = (Polygon, Polygon)> {
    (2usize..=8).prop_flat_map(|n| (polygon(n), polygon(n)))
}

pub fn unit() -> impl Strategy<Value = Complex64> {
    (0.0..std::f64::consts::TAU).prop_map(|t| Complex64::from_polar(1.0, t))
}

/// Nonzero multiplier with modulus in [0.1, 10].
pub fn scale_rotation() -> impl Strategy<Value = Complex64> {
    (-1.0..1.0f64, 0.0..std::f64::consts::TAU)
        .prop_map(|(e, t)| Complex64::from_polar(10f64.powf(e), t))
}

/// Vertex triangles whose area is not tiny relative to their size.
pub fn triangle() -> impl Strategy<Value = Triangle> {
    (point(), point(), point())
        .prop_map(|(a, b, c)| Triangle::new(a, b, c).unwrap())
        .prop_filter("nearly degenerate", |t| {
            let [z1, z2, z3] = t.vertices();
            let s = (z2 - z1).norm_sqr() + (z3 - z2).norm_sqr() + (z1 - z3).norm_sqr();
            t.area() > 1e-3 * s
        })
}

/// Valid side triples with a random non-zero orientation.
pub fn sides() -> impl Strategy<Value = TriangleSides> {
    (0.1..10.0f64, 0.1..10.0f64, 0.001..0.999f64, prop::bool::ANY).prop_map(|(a, b, t, ccw)| {
        let c = (a - b).abs() + t * (a + b - (a - b).abs());
        TriangleSides::new(a, b, c, if ccw { 1 } else { -1 }).unwrap()
    })
}

pub fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * x.abs().max(y.abs())
}
