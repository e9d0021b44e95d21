//! Closed-form deviations of one n-gon from another under the four
//! orientation-preserving affine subgroups acting on the plane.
//!
//! Each deviation is the distance from `y` to the orbit of `x`:
//!
//! | group     | maps            | multiplier `a` | shift `b` |
//! |-----------|-----------------|----------------|-----------|
//! | Rotation  | `z -> a z`      | `\|a\| = 1`    | 0         |
//! | Linear    | `z -> a z`      | `a != 0`       | 0         |
//! | Isometry  | `z -> a z + b`  | `\|a\| = 1`    | any       |
//! | Affine    | `z -> a z + b`  | `a != 0`       | any       |
//!
//! The shift is always eliminated by matching centroids, which reduces the
//! isometry and affine cases to the rotation and linear cases on centered
//! polygons.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polygon::{
    apply_affine, centroid, check_same_len, distance, inner_product, norm_sqr, AffineWitness,
    Polygon,
};

/// Inner products below this fraction of `|x| |y|` are treated as zero when
/// picking a witness.
pub const ZERO_INNER_PRODUCT_REL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupKind {
    Rotation,
    Linear,
    Isometry,
    Affine,
}

impl GroupKind {
    pub const ALL: [GroupKind; 4] = [
        GroupKind::Rotation,
        GroupKind::Linear,
        GroupKind::Isometry,
        GroupKind::Affine,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::Rotation => "rotation",
            GroupKind::Linear => "linear",
            GroupKind::Isometry => "isometry",
            GroupKind::Affine => "affine",
        }
    }

    /// Whether the group allows an arbitrary shift `b`.
    pub fn has_translation(self) -> bool {
        matches!(self, GroupKind::Isometry | GroupKind::Affine)
    }

    /// Whether the multiplier is restricted to the unit circle.
    pub fn is_unitary(self) -> bool {
        matches!(self, GroupKind::Rotation | GroupKind::Isometry)
    }

    pub fn deviation(self, x: &Polygon, y: &Polygon) -> Result<DeviationResult> {
        match self {
            GroupKind::Rotation => rotational_deviation(x, y),
            GroupKind::Linear => linear_deviation(x, y),
            GroupKind::Isometry => isometric_deviation(x, y),
            GroupKind::Affine => affine_deviation(x, y),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "rotation" | "rotational" => Ok(GroupKind::Rotation),
            "linear" => Ok(GroupKind::Linear),
            "isometry" | "isometric" => Ok(GroupKind::Isometry),
            "affine" => Ok(GroupKind::Affine),
            other => Err(format!(
                "unknown group '{other}' (expected rotation, linear, isometry or affine)"
            )),
        }
    }
}

/// Deviation value together with the group element that realizes it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeviationResult {
    pub value: f64,
    pub witness: AffineWitness,
}

/// Coordinates near `f64::MAX` are finite but their squared norms are not,
/// and every formula below would then return garbage.
fn check_norms(x: &Polygon, y: &Polygon) -> Result<()> {
    check_same_len(x, y)?;
    for p in [x, y] {
        let n = norm_sqr(p);
        if !n.is_finite() {
            return Err(Error::Domain {
                name: "squared norm",
                value: n,
                domain: "finite (coordinates too large)",
            });
        }
    }
    Ok(())
}

fn clamped_sqrt(radicand: f64) -> f64 {
    radicand.max(0.0).sqrt()
}

fn is_negligible(p: Complex64, x_norm_sqr: f64, y_norm_sqr: f64) -> bool {
    p.norm() <= ZERO_INNER_PRODUCT_REL * (x_norm_sqr * y_norm_sqr).sqrt()
}

/// Best unit multiplier for `<x|y> = p`, or 1 when `p` vanishes.
fn unit_multiplier(p: Complex64, x_norm_sqr: f64, y_norm_sqr: f64) -> Complex64 {
    if is_negligible(p, x_norm_sqr, y_norm_sqr) {
        Complex64::new(1.0, 0.0)
    } else {
        p.conj() / p.norm()
    }
}

/// Residual of an attained witness on centered data. This is the same number
/// as the closed-form value, but it does not lose half the digits to
/// cancellation when the deviation is close to zero.
fn residual(a: Complex64, x: &Polygon, y: &Polygon) -> f64 {
    x.iter()
        .zip(y)
        .map(|(xk, yk)| (a * xk - yk).norm_sqr())
        .sum::<f64>()
        .sqrt()
}

pub fn rotational_deviation(x: &Polygon, y: &Polygon) -> Result<DeviationResult> {
    check_norms(x, y)?;
    let p = inner_product(x, y)?;
    let (nx, ny) = (norm_sqr(x), norm_sqr(y));
    let a = unit_multiplier(p, nx, ny);
    Ok(DeviationResult {
        value: residual(a, x, y),
        witness: AffineWitness::new(a, Complex64::new(0.0, 0.0)),
    })
}

pub fn isometric_deviation(x: &Polygon, y: &Polygon) -> Result<DeviationResult> {
    check_norms(x, y)?;
    let (x0, y0) = (centroid(x), centroid(y));
    let (xc, yc) = (x.centered(), y.centered());
    let p = inner_product(&xc, &yc)?;
    let a = unit_multiplier(p, norm_sqr(&xc), norm_sqr(&yc));
    Ok(DeviationResult {
        value: residual(a, &xc, &yc),
        witness: AffineWitness::new(a, y0 - a * x0),
    })
}

/// Scaling-and-rotation fit of `x` onto `y`. Falls back to the boundary
/// witness `a = 0` (not attained) when `x` and `y` are orthogonal.
fn linear_fit(x: &Polygon, y: &Polygon) -> Result<(f64, Complex64, bool)> {
    let p = inner_product(x, y)?;
    let (nx, ny) = (norm_sqr(x), norm_sqr(y));
    if is_negligible(p, nx, ny) {
        let value = clamped_sqrt(ny - p.norm_sqr() / nx);
        return Ok((value, Complex64::new(0.0, 0.0), false));
    }
    let a = p.conj() / nx;
    Ok((residual(a, x, y), a, true))
}

pub fn linear_deviation(x: &Polygon, y: &Polygon) -> Result<DeviationResult> {
    check_norms(x, y)?;
    if x.is_zero() {
        return Ok(DeviationResult {
            value: norm_sqr(y).sqrt(),
            witness: AffineWitness::identity(),
        });
    }
    let (value, a, attained) = linear_fit(x, y)?;
    Ok(DeviationResult {
        value,
        witness: AffineWitness {
            a,
            b: Complex64::new(0.0, 0.0),
            attained,
        },
    })
}

pub fn affine_deviation(x: &Polygon, y: &Polygon) -> Result<DeviationResult> {
    check_norms(x, y)?;
    let (x0, y0) = (centroid(x), centroid(y));
    let yc = y.centered();
    if x.is_constant() {
        return Ok(DeviationResult {
            value: norm_sqr(&yc).sqrt(),
            witness: AffineWitness::new(Complex64::new(1.0, 0.0), y0 - x0),
        });
    }
    let (value, a, attained) = linear_fit(&x.centered(), &yc)?;
    Ok(DeviationResult {
        value,
        witness: AffineWitness {
            a,
            b: y0 - a * x0,
            attained,
        },
    })
}

/// Distance from `y` to the image of `x` under `w`, for checking witnesses.
pub fn witness_distance(w: &AffineWitness, x: &Polygon, y: &Polygon) -> Result<f64> {
    distance(&apply_affine(w, x), y)
}
