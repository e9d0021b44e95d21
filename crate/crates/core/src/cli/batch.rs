//! CSV in, one report row per input row out.

use std::io::{Read, Write};

use rayon::prelude::*;

use crate::deviation::GroupKind;
use crate::numfmt::round_trip;
use crate::oracle::{oracle_min, OracleConfig};
use crate::triangle::{
    sides_report, triangle_report, Classification, Triangle, TriangleReport, TriangleSides,
};

use super::input::parse_orientation;

pub const VERIFY_TOLERANCE: f64 = 1e-5;

pub const OUTPUT_HEADER: [&str; 10] = [
    "u",
    "q",
    "normalized_area",
    "area",
    "sign",
    "isometric_dev",
    "affine_dev",
    "unbalance",
    "classification",
    "error",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Form {
    Vertices,
    Sides,
}

fn detect_form(header: &csv::StringRecord) -> Result<Form, String> {
    let names: Vec<String> = header
        .iter()
        .map(|h| h.trim().to_ascii_lowercase())
        .collect();
    if names == ["x1", "y1", "x2", "y2", "x3", "y3"] {
        Ok(Form::Vertices)
    } else if names == ["a", "b", "c", "orientation"] {
        Ok(Form::Sides)
    } else {
        Err(format!(
            "unrecognized header `{}` (expected x1,y1,x2,y2,x3,y3 or a,b,c,orientation)",
            names.join(",")
        ))
    }
}

/// Parsed row: its report and a concrete placement for the oracle.
#[derive(Debug, Clone)]
pub struct RowOk {
    pub report: TriangleReport,
    pub triangle: Triangle,
}

#[derive(Debug, Clone)]
pub struct Row {
    pub line: u64,
    pub outcome: Result<RowOk, String>,
}

fn field(record: &csv::StringRecord, k: usize, name: &str) -> Result<f64, String> {
    let raw = record.get(k).unwrap_or("").trim();
    match raw.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(format!(
            "field `{name}`: expected a finite number, found `{raw}`"
        )),
    }
}

fn parse_row(form: Form, record: &csv::StringRecord) -> Result<RowOk, String> {
    let expected = match form {
        Form::Vertices => 6,
        Form::Sides => 4,
    };
    if record.len() != expected {
        return Err(format!(
            "expected {expected} fields, found {}",
            record.len()
        ));
    }
    match form {
        Form::Vertices => {
            const NAMES: [&str; 6] = ["x1", "y1", "x2", "y2", "x3", "y3"];
            let mut v = [0.0; 6];
            for (k, slot) in v.iter_mut().enumerate() {
                *slot = field(record, k, NAMES[k])?;
            }
            let triangle = Triangle::from_pairs([(v[0], v[1]), (v[2], v[3]), (v[4], v[5])])
                .map_err(|e| e.to_string())?;
            Ok(RowOk {
                report: triangle_report(&triangle),
                triangle,
            })
        }
        Form::Sides => {
            let a = field(record, 0, "a")?;
            let b = field(record, 1, "b")?;
            let c = field(record, 2, "c")?;
            let raw = record.get(3).unwrap_or("").trim();
            let sign = parse_orientation(raw).ok_or_else(|| {
                format!("field `orientation`: expected ccw, cw or linear, found `{raw}`")
            })?;
            let s = TriangleSides::new(a, b, c, sign).map_err(|e| e.to_string())?;
            Ok(RowOk {
                report: sides_report(&s),
                triangle: s.canonical_placement(),
            })
        }
    }
}

/// Reads every row; a malformed row becomes an error entry. Only a missing or
/// unknown header is fatal.
pub fn read_rows<R: Read>(input: R) -> Result<Vec<Row>, String> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(input);
    let header = reader.headers().map_err(|e| e.to_string())?.clone();
    if header.is_empty() {
        return Err("missing CSV header".into());
    }
    let form = detect_form(&header)?;

    let mut records = Vec::new();
    for (k, item) in reader.records().enumerate() {
        // header is line 1
        let fallback = k as u64 + 2;
        records.push(match item {
            Ok(rec) => (rec.position().map_or(fallback, |p| p.line()), Ok(rec)),
            Err(e) => {
                let line = e.position().map_or(fallback, |p| p.line());
                (line, Err(e.to_string()))
            }
        });
    }

    Ok(records
        .into_par_iter()
        .map(|(line, rec)| Row {
            line,
            outcome: rec.and_then(|r| parse_row(form, &r)),
        })
        .collect())
}

/// Compares the report's deviations from `Δ` with the oracle. The affine
/// value of the singular class is a convention, not an orbit distance, so it
/// is not checked.
pub fn verify_row(row: &RowOk, cfg: &OracleConfig) -> Result<(), String> {
    let x = row.triangle.to_polygon();
    let delta = Triangle::regular_side_one_ccw().to_polygon();
    let mut checks = vec![(GroupKind::Isometry, row.report.isometric_dev)];
    if row.report.classification != Classification::Singular {
        checks.push((GroupKind::Affine, row.report.affine_dev));
    }
    for (group, closed) in checks {
        let oracle = oracle_min(group, &x, &delta, cfg).map_err(|e| e.to_string())?;
        let diff = (oracle - closed).abs();
        if diff.is_nan() || diff > VERIFY_TOLERANCE {
            return Err(format!(
                "{group} deviation {closed} differs from oracle {oracle} by {diff:e}"
            ));
        }
    }
    Ok(())
}

/// Verification failures as `(line, message)`, in input order.
pub fn verify_rows(rows: &[Row], cfg: &OracleConfig) -> Vec<(u64, String)> {
    rows.par_iter()
        .filter_map(|row| match &row.outcome {
            Ok(ok) => verify_row(ok, cfg).err().map(|msg| (row.line, msg)),
            Err(_) => None,
        })
        .collect()
}

pub fn write_rows<W: Write>(rows: &[Row], out: W) -> Result<(), String> {
    let mut writer = csv::Writer::from_writer(out);
    writer
        .write_record(OUTPUT_HEADER)
        .map_err(|e| e.to_string())?;
    for row in rows {
        let record: Vec<String> = match &row.outcome {
            Ok(RowOk { report: r, .. }) => vec![
                round_trip(r.u),
                round_trip(r.q),
                round_trip(r.normalized_area),
                round_trip(r.area),
                r.sign.to_string(),
                round_trip(r.isometric_dev),
                round_trip(r.affine_dev),
                round_trip(r.unbalance),
                r.classification.name().to_string(),
                String::new(),
            ],
            Err(msg) => {
                let mut blank = vec![String::new(); OUTPUT_HEADER.len() - 1];
                blank.push(format!("line {}: {msg}", row.line));
                blank
            }
        };
        writer.write_record(&record).map_err(|e| e.to_string())?;
    }
    writer.flush().map_err(|e| e.to_string())
}
