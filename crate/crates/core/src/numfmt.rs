//! Decimal formatting shared by the JSON, CSV and SVG writers.

/// `digits` significant digits, fixed notation for moderate exponents and
/// scientific otherwise. Zero prints as `0`, infinities as `inf`/`-inf`.
pub fn significant(v: f64, digits: usize) -> String {
    if v.is_nan() {
        return "nan".to_string();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, v);
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .unwrap_or(0);
    if exp < -5 || exp >= digits as i32 {
        sci
    } else {
        format!("{:.*}", (digits as i32 - 1 - exp) as usize, v)
    }
}

/// 17 significant digits, enough to round-trip any finite double.
pub fn round_trip(v: f64) -> String {
    if v == 0.0 {
        return "0.0".to_string();
    }
    significant(v, 17)
}
