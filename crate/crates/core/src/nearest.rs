//! Closed-form nearest triangles to `Δ` in the affine and isometry orbits of
//! a triangle given by its side lengths.
//!
//! Both come from one centered triangle `z°` (here [`z_rings`]), which is
//! `Δ`-aligned but carries an extra scale of `|<z − z0|Δ>|·u`. Dividing by
//! `u²` gives the affine representative `z*`, dividing by
//! `|<z − z0|Δ>| = u·√((1 + sign·n)/2)` gives the isometric one `z★`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::triangle::{
    affine_deviation_from_delta, isometric_deviation_from_delta, ShapeTerms, Triangle,
    TriangleSides,
};

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Below this value of `1 + sign·n` the isometric representative falls back
/// to the equilateral clockwise limit: mean side times `Δ̄`.
pub const DEGENERATE_ISOMETRIC_THRESHOLD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearestPair {
    /// `z*`, realizes the affine deviation as a plain distance to `Δ`.
    pub z_star_affine: Triangle,
    /// `z★`, realizes the isometric deviation as a plain distance to `Δ`.
    pub z_star_isometric: Triangle,
    pub degenerate_isometric: bool,
}

fn require_non_singular(s: &TriangleSides) -> Result<()> {
    if s.is_singular() {
        Err(Error::SingularTriangle)
    } else {
        Ok(())
    }
}

/// The vertices `(z1°, z2°, z3°)`, written out in `a, b, c, u, q` and the
/// sign. Their centroid is zero.
pub fn z_rings(s: &TriangleSides) -> Result<Triangle> {
    require_non_singular(s)?;
    let [a2, b2, c2] = s.lengths().map(|x| x * x);
    let u2 = s.sum_sq() / 3.0;
    // 3·sign·u²·√(3 − 6q)
    let t = 3.0 * f64::from(s.sign()) * u2 * ShapeTerms::of(s).area_norm;

    let z1 = Complex64::new(
        (2.0 * a2 + 2.0 * c2 - b2 + t) / (6.0 * SQRT3),
        (c2 - a2) / 6.0,
    );
    let z2 = Complex64::new(
        (c2 - 5.0 * a2 + b2 - t) / (12.0 * SQRT3),
        (a2 - c2 + 3.0 * b2 + t) / 12.0,
    );
    let z3 = Complex64::new(
        (a2 - 5.0 * c2 + b2 - t) / (12.0 * SQRT3),
        -(c2 - a2 + 3.0 * b2 + t) / 12.0,
    );
    Triangle::new(z1, z2, z3)
}

pub fn nearest_pair(s: &TriangleSides) -> Result<NearestPair> {
    let rings = z_rings(s)?;
    let u = s.u();
    let z_star_affine = rings.scaled(1.0 / (u * u));

    let plus = ShapeTerms::of(s).plus(s.sign());
    let degenerate_isometric = plus < DEGENERATE_ISOMETRIC_THRESHOLD;
    let z_star_isometric = if degenerate_isometric {
        let side = (s.a() + s.b() + s.c()) / 3.0;
        Triangle::regular_side_one_ccw().conj().scaled(side)
    } else {
        rings.scaled(std::f64::consts::SQRT_2 / (u * plus.sqrt()))
    };

    Ok(NearestPair {
        z_star_affine,
        z_star_isometric,
        degenerate_isometric,
    })
}

/// The pair together with the two deviations it realizes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NearestSummary {
    pub pair: NearestPair,
    pub affine_dev: f64,
    pub isometric_dev: f64,
}

pub fn nearest_summary(s: &TriangleSides) -> Result<NearestSummary> {
    Ok(NearestSummary {
        pair: nearest_pair(s)?,
        affine_dev: affine_deviation_from_delta(s),
        isometric_dev: isometric_deviation_from_delta(s),
    })
}
