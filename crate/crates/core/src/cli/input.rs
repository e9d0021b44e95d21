//! JSON input documents: `{"vertices": [[re, im], ...]}` or
//! `{"sides": {"a": .., "b": .., "c": .., "orientation": "ccw"}}`.

use std::fs;

use num_complex::Complex64;
use serde_json::{Map, Value};

use crate::polygon::Polygon;
use crate::triangle::{Triangle, TriangleSides};

#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Vertices(Polygon),
    Sides(TriangleSides),
}

impl Shape {
    /// Polygon form; side documents use the canonical placement.
    pub fn polygon(&self) -> Polygon {
        match self {
            Shape::Vertices(p) => p.clone(),
            Shape::Sides(s) => s.canonical_placement().to_polygon(),
        }
    }

    pub fn triangle(&self) -> Result<Triangle, String> {
        match self {
            Shape::Vertices(p) => Triangle::from_polygon(p).map_err(|_| {
                format!(
                    "vertices: expected 3 vertices for a triangle, found {}",
                    p.len()
                )
            }),
            Shape::Sides(s) => Ok(s.canonical_placement()),
        }
    }
}

pub fn parse_orientation(s: &str) -> Option<i8> {
    match s.trim().to_ascii_lowercase().as_str() {
        "ccw" => Some(1),
        "cw" => Some(-1),
        "linear" => Some(0),
        _ => None,
    }
}

/// `arg` is a path, or an inline document if it starts with `{`.
pub fn load(arg: &str) -> Result<Shape, String> {
    let (label, text) = if arg.trim_start().starts_with('{') {
        ("<inline>".to_string(), arg.to_string())
    } else {
        let text = fs::read_to_string(arg).map_err(|e| format!("{arg}: {e}"))?;
        (arg.to_string(), text)
    };
    parse(&text).map_err(|e| format!("{label}: {e}"))
}

pub fn parse(text: &str) -> Result<Shape, String> {
    let value: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let obj = value
        .as_object()
        .ok_or("expected a JSON object with `vertices` or `sides`")?;
    match (obj.get("vertices"), obj.get("sides")) {
        (Some(v), None) => parse_vertices(v).map(Shape::Vertices),
        (None, Some(s)) => parse_sides(s).map(Shape::Sides),
        (Some(_), Some(_)) => Err("give either `vertices` or `sides`, not both".into()),
        (None, None) => Err("missing field `vertices` or `sides`".into()),
    }
}

fn finite(v: &Value, field: &str) -> Result<f64, String> {
    match v.as_f64() {
        Some(x) if x.is_finite() => Ok(x),
        _ => Err(format!("{field}: expected a finite number, found {v}")),
    }
}

fn parse_vertices(v: &Value) -> Result<Polygon, String> {
    let items = v
        .as_array()
        .ok_or("vertices: expected an array of [re, im] pairs")?;
    if items.is_empty() {
        return Err("vertices: polygon must have at least one vertex".into());
    }
    let mut pts = Vec::with_capacity(items.len());
    for (k, item) in items.iter().enumerate() {
        let pair = match item.as_array() {
            Some(p) if p.len() == 2 => p,
            _ => return Err(format!("vertices[{k}]: expected [re, im], found {item}")),
        };
        let re = finite(&pair[0], &format!("vertices[{k}][0]"))?;
        let im = finite(&pair[1], &format!("vertices[{k}][1]"))?;
        pts.push(Complex64::new(re, im));
    }
    Polygon::new(pts).map_err(|e| format!("vertices: {e}"))
}

fn parse_sides(v: &Value) -> Result<TriangleSides, String> {
    let obj: &Map<String, Value> = v.as_object().ok_or("sides: expected an object")?;
    let get = |key: &str| -> Result<f64, String> {
        let field = format!("sides.{key}");
        finite(obj.get(key).ok_or(format!("{field}: missing"))?, &field)
    };
    let (a, b, c) = (get("a")?, get("b")?, get("c")?);
    let orientation = obj
        .get("orientation")
        .ok_or("sides.orientation: missing (one of \"ccw\", \"cw\", \"linear\")")?;
    let sign = orientation
        .as_str()
        .and_then(parse_orientation)
        .ok_or_else(|| {
            format!(
                "sides.orientation: expected \"ccw\", \"cw\" or \"linear\", found {orientation}"
            )
        })?;
    TriangleSides::new(a, b, c, sign).map_err(|e| format!("sides: {e}"))
}
