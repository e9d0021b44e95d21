//! n-gons in the complex plane viewed as vectors of `C^n`.
//!
//! Vertices are matched index-to-index by every binary operation, so two
//! polygons are only comparable when they have the same number of vertices.

use std::ops::{Index, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// A finite point of the plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexPoint(Complex64);

impl ComplexPoint {
    pub fn new(re: f64, im: f64) -> Result<Self> {
        Self::try_from(Complex64::new(re, im))
    }

    pub fn re(self) -> f64 {
        self.0.re
    }

    pub fn im(self) -> f64 {
        self.0.im
    }

    pub fn get(self) -> Complex64 {
        self.0
    }
}

impl TryFrom<Complex64> for ComplexPoint {
    type Error = Error;

    fn try_from(z: Complex64) -> Result<Self> {
        if z.re.is_finite() && z.im.is_finite() {
            Ok(Self(z))
        } else {
            Err(Error::NonFinite { index: 0 })
        }
    }
}

impl From<ComplexPoint> for Complex64 {
    fn from(p: ComplexPoint) -> Self {
        p.0
    }
}

/// The map `z -> a*z + b`.
///
/// `attained == false` marks a boundary witness: the infimum it stands for is
/// only approached as `a -> 0`, and `a` is reported as exactly zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AffineWitness {
    pub a: Complex64,
    pub b: Complex64,
    pub attained: bool,
}

impl AffineWitness {
    pub fn new(a: Complex64, b: Complex64) -> Self {
        Self {
            a,
            b,
            attained: true,
        }
    }

    pub fn identity() -> Self {
        Self::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    pub fn apply(&self, z: Complex64) -> Complex64 {
        self.a * z + self.b
    }
}

/// An ordered, non-empty tuple of finite vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct Polygon {
    vertices: Vec<Complex64>,
}

impl Polygon {
    pub fn new(vertices: Vec<Complex64>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPolygon);
        }
        if let Some(index) = vertices
            .iter()
            .position(|z| !(z.re.is_finite() && z.im.is_finite()))
        {
            return Err(Error::NonFinite { index });
        }
        Ok(Self { vertices })
    }

    pub fn from_points<I: IntoIterator<Item = ComplexPoint>>(points: I) -> Result<Self> {
        let vertices: Vec<Complex64> = points.into_iter().map(Complex64::from).collect();
        if vertices.is_empty() {
            return Err(Error::EmptyPolygon);
        }
        Ok(Self { vertices })
    }

    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(
            pairs
                .iter()
                .map(|&(re, im)| Complex64::new(re, im))
                .collect(),
        )
    }

    /// Constant polygon with `n` copies of `z`.
    pub fn constant(z: Complex64, n: usize) -> Result<Self> {
        Self::new(vec![z; n])
    }

    /// Internal constructor for results of arithmetic on already valid polygons.
    pub(crate) fn from_vec_unchecked(vertices: Vec<Complex64>) -> Self {
        debug_assert!(!vertices.is_empty());
        Self { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertices(&self) -> &[Complex64] {
        &self.vertices
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Complex64> {
        self.vertices.iter()
    }

    /// The polygon translated by `shift`.
    pub fn shifted(&self, shift: Complex64) -> Polygon {
        Self::from_vec_unchecked(self.vertices.iter().map(|z| z + shift).collect())
    }

    /// The polygon translated so its centroid is the origin.
    pub fn centered(&self) -> Polygon {
        self.shifted(-centroid(self))
    }

    pub fn conj(&self) -> Polygon {
        Self::from_vec_unchecked(self.vertices.iter().map(|z| z.conj()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.vertices.iter().all(|z| z.re == 0.0 && z.im == 0.0)
    }

    pub fn is_constant(&self) -> bool {
        let first = self.vertices[0];
        self.vertices.iter().all(|&z| z == first)
    }
}

impl Index<usize> for Polygon {
    type Output = Complex64;

    fn index(&self, index: usize) -> &Complex64 {
        &self.vertices[index]
    }
}

impl<'a> IntoIterator for &'a Polygon {
    type Item = &'a Complex64;
    type IntoIter = std::slice::Iter<'a, Complex64>;

    fn into_iter(self) -> Self::IntoIter {
        self.vertices.iter()
    }
}

impl Sub for &Polygon {
    type Output = Result<Polygon>;

    fn sub(self, rhs: &Polygon) -> Result<Polygon> {
        check_same_len(self, rhs)?;
        Ok(Polygon::from_vec_unchecked(
            self.iter().zip(rhs).map(|(x, y)| x - y).collect(),
        ))
    }
}

pub(crate) fn check_same_len(x: &Polygon, y: &Polygon) -> Result<()> {
    if x.len() == y.len() {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        })
    }
}

/// `<x|y> = sum x_k * conj(y_k)`.
pub fn inner_product(x: &Polygon, y: &Polygon) -> Result<Complex64> {
    check_same_len(x, y)?;
    Ok(x.iter().zip(y).map(|(a, b)| a * b.conj()).sum())
}

pub fn norm_sqr(x: &Polygon) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum()
}

pub fn norm(x: &Polygon) -> f64 {
    norm_sqr(x).sqrt()
}

pub fn distance(x: &Polygon, y: &Polygon) -> Result<f64> {
    check_same_len(x, y)?;
    Ok(x.iter()
        .zip(y)
        .map(|(a, b)| (a - b).norm_sqr())
        .sum::<f64>()
        .sqrt())
}

pub fn centroid(x: &Polygon) -> Complex64 {
    x.iter().sum::<Complex64>() / x.len() as f64
}

pub fn apply_affine(w: &AffineWitness, x: &Polygon) -> Polygon {
    Polygon::from_vec_unchecked(x.iter().map(|&z| w.apply(z)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn poly(pairs: &[(f64, f64)]) -> Polygon {
        Polygon::from_pairs(pairs).unwrap()
    }

    #[test]
    fn inner_product_examples() {
        let one = poly(&[(1.0, 0.0)]);
        assert_eq!(inner_product(&one, &one).unwrap(), c(1.0, 0.0));
        let pair = poly(&[(1.0, 0.0), (0.0, 1.0)]);
        assert_eq!(inner_product(&pair, &pair).unwrap(), c(2.0, 0.0));
        let i = poly(&[(0.0, 1.0)]);
        assert_eq!(inner_product(&one, &i).unwrap(), c(0.0, -1.0));
    }

    #[test]
    fn inner_product_length_mismatch() {
        let x = poly(&[(1.0, 0.0)]);
        let y = poly(&[(1.0, 0.0), (0.0, 0.0)]);
        assert_eq!(
            inner_product(&x, &y),
            Err(Error::DimensionMismatch { left: 1, right: 2 })
        );
        assert!(distance(&x, &y).is_err());
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm(&poly(&[(0.0, 0.0), (0.0, 0.0)])), 0.0);
        assert_eq!(norm(&poly(&[(3.0, 0.0), (0.0, 4.0)])), 5.0);
        assert_relative_eq!(
            norm(&poly(&[(1.0, 0.0), (1.0, 0.0), (1.0, 0.0)])),
            3f64.sqrt()
        );
    }

    #[test]
    fn distance_examples() {
        let x = poly(&[(1.0, 2.0), (-3.0, 0.5)]);
        assert_eq!(distance(&x, &x).unwrap(), 0.0);
        assert_eq!(
            distance(&poly(&[(0.0, 0.0)]), &poly(&[(3.0, 4.0)])).unwrap(),
            5.0
        );
        assert_relative_eq!(
            distance(
                &poly(&[(1.0, 0.0), (0.0, 0.0)]),
                &poly(&[(0.0, 0.0), (1.0, 0.0)])
            )
            .unwrap(),
            2f64.sqrt()
        );
    }

    #[test]
    fn centroid_examples() {
        let z = centroid(&poly(&[(0.0, 0.0), (2.0, 0.0), (0.0, 2.0)]));
        assert_relative_eq!(z.re, 2.0 / 3.0);
        assert_relative_eq!(z.im, 2.0 / 3.0);
        assert_eq!(centroid(&poly(&[(1.5, -2.0)])), c(1.5, -2.0));
        assert_eq!(centroid(&poly(&[(1.0, 0.0), (-1.0, 0.0)])), c(0.0, 0.0));
    }

    #[test]
    fn apply_affine_examples() {
        let x = poly(&[(1.0, 2.0), (3.0, -1.0)]);
        assert_eq!(apply_affine(&AffineWitness::identity(), &x), x);
        let rot = AffineWitness::new(c(0.0, 1.0), c(0.0, 0.0));
        assert_eq!(
            apply_affine(&rot, &poly(&[(1.0, 0.0)])),
            poly(&[(0.0, 1.0)])
        );
        let w = AffineWitness::new(c(2.0, 0.0), c(1.0, 0.0));
        assert_eq!(
            apply_affine(&w, &poly(&[(0.0, 0.0), (1.0, 0.0)])),
            poly(&[(1.0, 0.0), (3.0, 0.0)])
        );
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(Polygon::new(vec![]), Err(Error::EmptyPolygon));
        assert_eq!(
            Polygon::new(vec![c(0.0, 0.0), c(f64::NAN, 1.0)]),
            Err(Error::NonFinite { index: 1 })
        );
        assert!(Polygon::from_pairs(&[(f64::INFINITY, 0.0)]).is_err());
        assert!(ComplexPoint::new(0.0, f64::NEG_INFINITY).is_err());
        let p = ComplexPoint::new(1.0, -2.0).unwrap();
        assert_eq!((p.re(), p.im()), (1.0, -2.0));
        assert_eq!(
            Polygon::from_points([p]).unwrap().vertices(),
            &[c(1.0, -2.0)]
        );
    }

    fn coord() -> impl Strategy<Value = Complex64> {
        (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(re, im)| Complex64::new(re, im))
    }

    fn polygon_pair() -> impl Strategy<Value = (Polygon, Polygon)> {
        (1usize..9).prop_flat_map(|n| {
            (
                prop::collection::vec(coord(), n),
                prop::collection::vec(coord(), n),
            )
                .prop_map(|(x, y)| (Polygon::new(x).unwrap(), Polygon::new(y).unwrap()))
        })
    }

    proptest! {
        #[test]
        fn conjugate_symmetry((x, y) in polygon_pair()) {
            let xy = inner_product(&x, &y).unwrap();
            let yx = inner_product(&y, &x).unwrap();
            prop_assert!((xy - yx.conj()).norm() <= 1e-12 * (1.0 + xy.norm()));
        }

        #[test]
        fn cauchy_schwarz((x, y) in polygon_pair()) {
            let lhs = inner_product(&x, &y).unwrap().norm();
            let rhs = norm(&x) * norm(&y);
            prop_assert!(lhs <= rhs * (1.0 + 1e-12));
        }

        #[test]
        fn distance_is_a_metric((x, y) in polygon_pair(), shift in coord()) {
            let z = x.shifted(shift);
            let dxy = distance(&x, &y).unwrap();
            prop_assert_eq!(dxy, distance(&y, &x).unwrap());
            let dxz = distance(&x, &z).unwrap();
            let dzy = distance(&z, &y).unwrap();
            prop_assert!(dxy <= dxz + dzy + 1e-12 * (1.0 + dxy));
        }

        #[test]
        fn affine_scales_distance((x, y) in polygon_pair(), a in coord(), b in coord()) {
            let w = AffineWitness::new(a, b);
            let lhs = distance(&apply_affine(&w, &x), &apply_affine(&w, &y)).unwrap();
            let rhs = a.norm() * distance(&x, &y).unwrap();
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs));
        }

        #[test]
        fn centroid_is_affine_equivariant((x, _y) in polygon_pair(), a in coord(), b in coord()) {
            let w = AffineWitness::new(a, b);
            let lhs = centroid(&apply_affine(&w, &x));
            let rhs = a * centroid(&x) + b;
            prop_assert!((lhs - rhs).norm() <= 1e-12 * (1.0 + rhs.norm() + a.norm() * norm(&x)));
        }

        #[test]
        fn centered_polygon_has_zero_centroid((x, _y) in polygon_pair()) {
            prop_assert!(centroid(&x.centered()).norm() <= 1e-12 * (1.0 + norm(&x)));
        }

        #[test]
        fn pythagorean_split((x, _y) in polygon_pair()) {
            let x0 = centroid(&x);
            let lhs = norm_sqr(&x.centered()) + x.len() as f64 * x0.norm_sqr();
            let rhs = norm_sqr(&x);
            prop_assert!((lhs - rhs).abs() <= 1e-10 * (1.0 + rhs));
        }
    }
}
