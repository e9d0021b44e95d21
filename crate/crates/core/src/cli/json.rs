//! Output documents. Numbers go out as raw JSON with 17 significant digits;
//! an infinite unbalance factor is the string `"inf"`.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::value::RawValue;

use crate::deviation::DeviationResult;
use crate::numfmt::round_trip;
use crate::triangle::{SymmetricComponents, TriangleReport};

pub type Num = Box<RawValue>;

pub fn num(v: f64) -> Num {
    let text = if v.is_finite() {
        round_trip(v)
    } else if v.is_nan() {
        "null".to_string()
    } else if v > 0.0 {
        "\"inf\"".to_string()
    } else {
        "\"-inf\"".to_string()
    };
    RawValue::from_string(text).expect("formatted number is valid JSON")
}

pub fn pair(z: Complex64) -> [Num; 2] {
    [num(z.re), num(z.im)]
}

#[derive(Serialize)]
pub struct WitnessDoc {
    pub a: [Num; 2],
    pub b: [Num; 2],
    pub attained: bool,
}

#[derive(Serialize)]
pub struct VerifiedDoc {
    pub oracle_value: Num,
    pub abs_diff: Num,
}

#[derive(Serialize)]
pub struct DeviateDoc {
    pub group: &'static str,
    pub value: Num,
    pub witness: WitnessDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<VerifiedDoc>,
}

impl DeviateDoc {
    pub fn new(group: &'static str, r: &DeviationResult) -> Self {
        Self {
            group,
            value: num(r.value),
            witness: WitnessDoc {
                a: pair(r.witness.a),
                b: pair(r.witness.b),
                attained: r.witness.attained,
            },
            verified: None,
        }
    }
}

#[derive(Serialize)]
pub struct ReportDoc {
    pub u: Num,
    pub q: Num,
    pub normalized_area: Num,
    pub area: Num,
    pub sign: i8,
    pub isometric_dev: Num,
    pub affine_dev: Num,
    pub unbalance: Num,
    pub classification: &'static str,
}

impl From<&TriangleReport> for ReportDoc {
    fn from(r: &TriangleReport) -> Self {
        Self {
            u: num(r.u),
            q: num(r.q),
            normalized_area: num(r.normalized_area),
            area: num(r.area),
            sign: r.sign,
            isometric_dev: num(r.isometric_dev),
            affine_dev: num(r.affine_dev),
            unbalance: num(r.unbalance),
            classification: r.classification.name(),
        }
    }
}

#[derive(Serialize)]
pub struct ComponentsDoc {
    pub positive: [Num; 2],
    pub negative: [Num; 2],
    pub zero: [Num; 2],
    pub unbalance: Num,
}

impl ComponentsDoc {
    pub fn new(c: &SymmetricComponents, unbalance: f64) -> Self {
        Self {
            positive: pair(c.positive),
            negative: pair(c.negative),
            zero: pair(c.zero),
            unbalance: num(unbalance),
        }
    }
}

#[derive(Serialize)]
pub struct NearestDoc {
    pub affine_dev: Num,
    pub isometric_dev: Num,
    pub degenerate_isometric: bool,
}

pub fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents always serialize")
}
