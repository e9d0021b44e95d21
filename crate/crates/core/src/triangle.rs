//! Triangle asymmetry metrics against the unit regular triangle
//! `Δ = (1, ω, ω̄)/√3`, `ω = e^{2πi/3}`.
//!
//! Everything here except the symmetric components depends only on the side
//! lengths and the orientation sign, which is what makes these metrics
//! usable when only line-to-line voltages are measured.
//!
//! Two quantities carry most of the numerics: the normalized area
//! `n = √(3 − 6q)` and its complement `1 − n`. The complement is computed as
//! `2·Σ(a² − b²)² / ((a² + b² + c²)² (1 + n))`, which is exact algebra but
//! keeps full relative precision for nearly equilateral triangles, where the
//! naive `1 − √(3 − 6q)` would be pure rounding noise.

use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::polygon::Polygon;

const SQRT3: f64 = 1.732_050_807_568_877_2;

/// `e^{2πi/3}` with an exactly representable real part.
pub(crate) const OMEGA: Complex64 = Complex64 {
    re: -0.5,
    im: SQRT3 / 2.0,
};

/// Relative slack allowed in the triangle inequality.
pub const TRIANGLE_INEQUALITY_REL: f64 = 1e-12;

/// Collinearity cutoff on `|2A|`, scaled by `max(1, u²)`.
pub const COLLINEAR_REL: f64 = 1e-12;

/// Relative side spread below which a triangle counts as equilateral.
pub const EQUILATERAL_REL: f64 = 1e-10;

/// `|positive| <= UNBALANCE_INF_RATIO * |negative|` reports an infinite
/// unbalance factor.
pub const UNBALANCE_INF_RATIO: f64 = 1e-13;

/// Three vertices `(z1, z2, z3)`. Singular and collinear triangles are legal.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle([Complex64; 3]);

impl Triangle {
    pub fn new(z1: Complex64, z2: Complex64, z3: Complex64) -> Result<Self> {
        for (index, z) in [z1, z2, z3].iter().enumerate() {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFinite { index });
            }
        }
        Ok(Self([z1, z2, z3]))
    }

    pub fn from_pairs(pairs: [(f64, f64); 3]) -> Result<Self> {
        let [p1, p2, p3] = pairs.map(|(re, im)| Complex64::new(re, im));
        Self::new(p1, p2, p3)
    }

    pub fn from_polygon(p: &Polygon) -> Result<Self> {
        match p.vertices() {
            &[z1, z2, z3] => Ok(Self([z1, z2, z3])),
            other => Err(Error::DimensionMismatch {
                left: other.len(),
                right: 3,
            }),
        }
    }

    /// `Δ`: side 1, counter-clockwise, centroid 0.
    pub fn regular_side_one_ccw() -> Self {
        let s = 1.0 / SQRT3;
        Self([Complex64::new(s, 0.0), OMEGA * s, OMEGA.conj() * s])
    }

    pub fn vertices(&self) -> [Complex64; 3] {
        self.0
    }

    pub fn to_polygon(&self) -> Polygon {
        Polygon::from_vec_unchecked(self.0.to_vec())
    }

    pub fn conj(&self) -> Self {
        Self(self.0.map(|z| z.conj()))
    }

    pub fn scaled(&self, k: f64) -> Self {
        Self(self.0.map(|z| z * k))
    }

    pub fn map(&self, a: Complex64, b: Complex64) -> Self {
        Self(self.0.map(|z| a * z + b))
    }

    /// Twice the signed area; positive for counter-clockwise order.
    pub fn signed_double_area(&self) -> f64 {
        let [z1, z2, z3] = self.0;
        ((z2 - z1).conj() * (z3 - z1)).im
    }

    /// Shoelace area.
    pub fn area(&self) -> f64 {
        0.5 * self.signed_double_area().abs()
    }

    pub fn is_singular(&self) -> bool {
        let [z1, z2, z3] = self.0;
        z1 == z2 && z2 == z3
    }

    pub fn centroid(&self) -> Complex64 {
        (self.0[0] + self.0[1] + self.0[2]) / 3.0
    }
}

/// Side lengths `a = |z1 − z2|`, `b = |z2 − z3|`, `c = |z3 − z1|` plus the
/// orientation sign: +1 counter-clockwise, −1 clockwise or singular,
/// 0 collinear but not singular.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleSides {
    a: f64,
    b: f64,
    c: f64,
    sign: i8,
}

impl TriangleSides {
    /// Validates a raw side triple. A degenerate (tight) triple must carry
    /// sign 0, and sign 0 requires a tight triple. All-zero sides are the
    /// singular triangle and always get sign −1.
    pub fn new(a: f64, b: f64, c: f64, sign: i8) -> Result<Self> {
        for side in [a, b, c] {
            if !side.is_finite() || side < 0.0 {
                return Err(Error::InvalidSide(side));
            }
        }
        if !(-1..=1).contains(&sign) {
            return Err(Error::InconsistentOrientation { sign, a, b, c });
        }
        if a == 0.0 && b == 0.0 && c == 0.0 {
            return Ok(Self { a, b, c, sign: -1 });
        }
        let perimeter = a + b + c;
        let longest = a.max(b).max(c);
        let slack = perimeter - 2.0 * longest;
        let tol = TRIANGLE_INEQUALITY_REL * perimeter;
        if slack < -tol {
            return Err(Error::TriangleInequality { a, b, c });
        }
        let tight = slack <= tol;
        if tight != (sign == 0) {
            return Err(Error::InconsistentOrientation { sign, a, b, c });
        }
        Ok(Self { a, b, c, sign })
    }

    pub(crate) fn from_parts_unchecked(a: f64, b: f64, c: f64, sign: i8) -> Self {
        Self { a, b, c, sign }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn lengths(&self) -> [f64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn sum_sq(&self) -> f64 {
        self.a * self.a + self.b * self.b + self.c * self.c
    }

    /// Root-mean-square side `u = √((a² + b² + c²)/3)`.
    pub fn u(&self) -> f64 {
        (self.sum_sq() / 3.0).sqrt()
    }

    pub fn is_singular(&self) -> bool {
        self.a == 0.0 && self.b == 0.0 && self.c == 0.0
    }

    pub fn is_equilateral(&self) -> bool {
        let hi = self.a.max(self.b).max(self.c);
        let lo = self.a.min(self.b).min(self.c);
        hi - lo <= EQUILATERAL_REL * hi
    }

    /// The same lengths with the opposite winding.
    pub fn mirrored(&self) -> Self {
        let sign = if self.is_singular() { -1 } else { -self.sign };
        Self { sign, ..*self }
    }

    /// `z1 = 0`, `z2 = a` on the positive real axis and `z3` above (ccw) or
    /// below (cw) the real axis.
    pub fn canonical_placement(&self) -> Triangle {
        let (a, c) = (self.a, self.c);
        let z3 = if a == 0.0 || c == 0.0 {
            Complex64::new(c, 0.0)
        } else {
            let x3 = (a * a + c * c - self.b * self.b) / (2.0 * a);
            let y3 = f64::from(self.sign) * 2.0 * heron_area(self) / a;
            Complex64::new(x3, y3)
        };
        Triangle([Complex64::new(0.0, 0.0), Complex64::new(a, 0.0), z3])
    }
}

impl fmt::Display for TriangleSides {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}; sign {})",
            self.a, self.b, self.c, self.sign
        )
    }
}

pub fn side_lengths(t: &Triangle) -> TriangleSides {
    let [z1, z2, z3] = t.vertices();
    let (a, b, c) = ((z1 - z2).norm(), (z2 - z3).norm(), (z3 - z1).norm());
    let sign = if t.is_singular() {
        -1
    } else {
        let twice_area = t.signed_double_area();
        let u_sq = (a * a + b * b + c * c) / 3.0;
        if twice_area.abs() <= COLLINEAR_REL * u_sq.max(1.0) {
            0
        } else if twice_area > 0.0 {
            1
        } else {
            -1
        }
    };
    TriangleSides::from_parts_unchecked(a, b, c, sign)
}

/// `q = (a⁴ + b⁴ + c⁴)/(a² + b² + c²)²`, clamped into `[1/3, 1/2]`; 1/2 for
/// the singular triangle.
pub fn quadrofactor(s: &TriangleSides) -> f64 {
    let sum_sq = s.sum_sq();
    if sum_sq == 0.0 {
        return 0.5;
    }
    let quartic: f64 = s.lengths().iter().map(|x| x.powi(4)).sum();
    (quartic / (sum_sq * sum_sq)).clamp(1.0 / 3.0, 0.5)
}

/// Kahan's ordering of Heron's formula; a violated inequality clamps to 0.
fn kahan_heron(a: f64, b: f64, c: f64) -> f64 {
    let mut s = [a, b, c];
    s.sort_by(|p, q| q.total_cmp(p));
    let [x, y, z] = s;
    let product = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
    0.25 * product.max(0.0).sqrt()
}

pub fn heron_area(s: &TriangleSides) -> f64 {
    kahan_heron(s.a, s.b, s.c)
}

/// Heron's formula on raw lengths, rejecting triples that do not close.
pub fn heron_area_from_lengths(a: f64, b: f64, c: f64) -> Result<f64> {
    for side in [a, b, c] {
        if !side.is_finite() || side < 0.0 {
            return Err(Error::InvalidSide(side));
        }
    }
    let perimeter = a + b + c;
    if perimeter - 2.0 * a.max(b).max(c) < -TRIANGLE_INEQUALITY_REL * perimeter {
        return Err(Error::TriangleInequality { a, b, c });
    }
    Ok(kahan_heron(a, b, c))
}

/// `n = √(3 − 6q) = 4√3·A/(a² + b² + c²)` in `[0, 1]`.
pub fn normalized_area(s: &TriangleSides) -> f64 {
    ShapeTerms::of(s).area_norm
}

/// Normalized area and its complement `1 − n`, both accurate to full
/// relative precision.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ShapeTerms {
    pub area_norm: f64,
    pub area_defect: f64,
}

impl ShapeTerms {
    pub fn of(s: &TriangleSides) -> Self {
        let sum_sq = s.sum_sq();
        if sum_sq == 0.0 {
            return Self {
                area_norm: 0.0,
                area_defect: 1.0,
            };
        }
        let area_norm = (4.0 * SQRT3 * heron_area(s) / sum_sq).clamp(0.0, 1.0);
        let [a2, b2, c2] = s.lengths().map(|x| x * x);
        let spread = (a2 - b2).powi(2) + (b2 - c2).powi(2) + (c2 - a2).powi(2);
        let area_defect = (2.0 * spread / (sum_sq * sum_sq) / (1.0 + area_norm)).clamp(0.0, 1.0);
        Self {
            area_norm,
            area_defect,
        }
    }

    /// `1 + sign·n`
    pub fn plus(&self, sign: i8) -> f64 {
        match sign {
            1 => 1.0 + self.area_norm,
            0 => 1.0,
            _ => self.area_defect,
        }
    }

    /// `1 − sign·n`
    pub fn minus(&self, sign: i8) -> f64 {
        self.plus(-sign)
    }
}

/// Isometric deviation `d(𝕋z + ℂ, Δ) = √(1 + u² − √2·u·√(1 + sign·n))`.
pub fn isometric_deviation_from_delta(s: &TriangleSides) -> f64 {
    let u = s.u();
    let plus = ShapeTerms::of(s).plus(s.sign);
    (1.0 + u * u - std::f64::consts::SQRT_2 * u * plus.sqrt())
        .max(0.0)
        .sqrt()
}

/// Affine deviation `d(ℂ*z + ℂ, Δ) = √((1 − sign·n)/2)`, in `[0, 1]`.
pub fn affine_deviation_from_delta(s: &TriangleSides) -> f64 {
    (0.5 * ShapeTerms::of(s).minus(s.sign)).sqrt().min(1.0)
}

/// Fortescue decomposition: `z1 = P + N + Z`, `z2 = ωP + ω̄N + Z`,
/// `z3 = ω̄P + ωN + Z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricComponents {
    pub positive: Complex64,
    pub negative: Complex64,
    pub zero: Complex64,
}

impl SymmetricComponents {
    pub fn reconstruct(&self) -> [Complex64; 3] {
        let (p, n, z) = (self.positive, self.negative, self.zero);
        [
            p + n + z,
            OMEGA * p + OMEGA.conj() * n + z,
            OMEGA.conj() * p + OMEGA * n + z,
        ]
    }
}

pub fn symmetric_components(t: &Triangle) -> SymmetricComponents {
    let [z1, z2, z3] = t.vertices();
    // ω̄·z2 + ω·z3 expanded, so equal vertices cancel exactly
    let mid = z1 - 0.5 * (z2 + z3);
    let turn = Complex64::new(0.0, 0.5 * SQRT3) * (z3 - z2);
    SymmetricComponents {
        positive: (mid + turn) / 3.0,
        negative: (mid - turn) / 3.0,
        zero: (z1 + z2 + z3) / 3.0,
    }
}

fn magnitude_ratio(negative: f64, positive: f64) -> f64 {
    if positive <= UNBALANCE_INF_RATIO * negative {
        f64::INFINITY
    } else {
        negative / positive
    }
}

/// `|negative| / |positive|` from the vertices. The singular triangle, where
/// both components vanish, gets 1 to agree with the side-length formula.
pub fn unbalance_factor(t: &Triangle) -> f64 {
    if t.is_singular() {
        return 1.0;
    }
    let comps = symmetric_components(t);
    magnitude_ratio(comps.negative.norm(), comps.positive.norm())
}

/// `K = √((1 − sign·n)/(1 + sign·n))`.
pub fn unbalance_factor_from_sides(s: &TriangleSides) -> f64 {
    let terms = ShapeTerms::of(s);
    magnitude_ratio(terms.minus(s.sign).sqrt(), terms.plus(s.sign).sqrt())
}

/// `d = √(K²/(1 + K²))`; `K = ∞` maps to 1.
pub fn unbalance_to_affine(k: f64) -> Result<f64> {
    if k.is_nan() || k < 0.0 {
        return Err(Error::Domain {
            name: "unbalance factor",
            value: k,
            domain: "[0, inf]",
        });
    }
    if k.is_infinite() {
        return Ok(1.0);
    }
    Ok(k / (1.0 + k * k).sqrt())
}

/// `K = √(d²/(1 − d²))`; `d = 1` maps to `∞`.
pub fn affine_to_unbalance(d: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&d) {
        return Err(Error::Domain {
            name: "affine deviation",
            value: d,
            domain: "[0, 1]",
        });
    }
    if d == 1.0 {
        return Ok(f64::INFINITY);
    }
    Ok(d / ((1.0 - d) * (1.0 + d)).sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    Singular,
    LinearNonSingular,
    RegularCCW,
    RegularCW,
    GenericCCW,
    GenericCW,
}

impl Classification {
    /// Where the affine deviation from `Δ` falls: 0, 1, 1/√2 for the
    /// regular ccw, regular cw and linear classes, and the open intervals
    /// `(0, 1/√2)`, `(1/√2, 1)` for the generic ones.
    pub fn of(s: &TriangleSides) -> Self {
        if s.is_singular() {
            Classification::Singular
        } else if s.sign == 0 {
            Classification::LinearNonSingular
        } else if s.is_equilateral() {
            if s.sign > 0 {
                Classification::RegularCCW
            } else {
                Classification::RegularCW
            }
        } else if s.sign > 0 {
            Classification::GenericCCW
        } else {
            Classification::GenericCW
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Classification::Singular => "Singular",
            Classification::LinearNonSingular => "LinearNonSingular",
            Classification::RegularCCW => "RegularCCW",
            Classification::RegularCW => "RegularCW",
            Classification::GenericCCW => "GenericCCW",
            Classification::GenericCW => "GenericCW",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleReport {
    pub u: f64,
    pub q: f64,
    pub normalized_area: f64,
    pub area: f64,
    pub sign: i8,
    pub isometric_dev: f64,
    pub affine_dev: f64,
    /// May be `f64::INFINITY`.
    pub unbalance: f64,
    pub classification: Classification,
}

/// Report from side lengths; the unbalance factor comes from the side formula.
pub fn sides_report(s: &TriangleSides) -> TriangleReport {
    TriangleReport {
        u: s.u(),
        q: quadrofactor(s),
        normalized_area: normalized_area(s),
        area: heron_area(s),
        sign: s.sign,
        isometric_dev: isometric_deviation_from_delta(s),
        affine_dev: affine_deviation_from_delta(s),
        unbalance: unbalance_factor_from_sides(s),
        classification: Classification::of(s),
    }
}

/// Report from vertices; the unbalance factor comes from the symmetric
/// components.
pub fn triangle_report(t: &Triangle) -> TriangleReport {
    TriangleReport {
        unbalance: unbalance_factor(t),
        ..sides_report(&side_lengths(t))
    }
}
