//! SVG figure of `Δ` with the nearest affine and isometric representatives.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::Result;
use crate::nearest::nearest_summary;
use crate::numfmt::significant;
use crate::triangle::{unbalance_factor_from_sides, Triangle, TriangleSides};

const CANVAS: f64 = 800.0;
const FILL_FRACTION: f64 = 0.8;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderOptions {
    pub stroke_width: f64,
    pub reference_color: String,
    pub affine_color: String,
    pub isometric_color: String,
    pub legend: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            stroke_width: 2.0,
            reference_color: "gray".to_string(),
            affine_color: "blue".to_string(),
            isometric_color: "red".to_string(),
            legend: true,
        }
    }
}

/// Plane to canvas: the union bounding box fills 80% of the canvas and the
/// y axis points up.
struct Viewport {
    center: Complex64,
    scale: f64,
}

impl Viewport {
    fn fit(points: &[Complex64]) -> Self {
        let (mut lo_x, mut hi_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for p in points {
            lo_x = lo_x.min(p.re);
            hi_x = hi_x.max(p.re);
            lo_y = lo_y.min(p.im);
            hi_y = hi_y.max(p.im);
        }
        let span = (hi_x - lo_x).max(hi_y - lo_y);
        let scale = if span > 0.0 {
            FILL_FRACTION * CANVAS / span
        } else {
            1.0
        };
        Self {
            center: Complex64::new(0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)),
            scale,
        }
    }

    fn project(&self, z: Complex64) -> (f64, f64) {
        let d = z - self.center;
        (
            0.5 * CANVAS + d.re * self.scale,
            0.5 * CANVAS - d.im * self.scale,
        )
    }
}

fn coord(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".to_string()
    } else {
        s
    }
}

fn draw_triangle(
    out: &mut String,
    id: &str,
    t: &Triangle,
    view: &Viewport,
    color: &str,
    width: f64,
    dash: Option<&str>,
) {
    let pts: Vec<(f64, f64)> = t.vertices().iter().map(|&z| view.project(z)).collect();
    let points = pts
        .iter()
        .map(|(x, y)| format!("{},{}", coord(*x), coord(*y)))
        .collect::<Vec<_>>()
        .join(" ");
    let dash = dash
        .map(|d| format!(" stroke-dasharray=\"{d}\""))
        .unwrap_or_default();
    let _ = writeln!(out, "  <g id=\"{id}\">");
    let _ = writeln!(
        out,
        "    <polygon points=\"{points}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"{}\" stroke-linejoin=\"round\"{dash}/>",
        coord(width)
    );
    for (k, (x, y)) in pts.iter().enumerate() {
        let _ = writeln!(
            out,
            "    <circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"{color}\"/>",
            coord(*x),
            coord(*y)
        );
        let _ = writeln!(
            out,
            "    <text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"13\" fill=\"{color}\">{}</text>",
            coord(x + 6.0),
            coord(y - 6.0),
            k + 1
        );
    }
    let _ = writeln!(out, "  </g>");
}

/// Standalone SVG 1.1 document. Output depends only on the inputs.
pub fn render_svg(s: &TriangleSides, options: &RenderOptions) -> Result<String> {
    let summary = nearest_summary(s)?;
    let delta = Triangle::regular_side_one_ccw();
    let pair = summary.pair;

    let all: Vec<Complex64> = [delta, pair.z_star_affine, pair.z_star_isometric]
        .iter()
        .flat_map(|t| t.vertices())
        .collect();
    let view = Viewport::fit(&all);

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{0}\" viewBox=\"0 0 {0} {0}\">",
        CANVAS
    );
    let _ = writeln!(
        out,
        "  <rect x=\"0\" y=\"0\" width=\"{0}\" height=\"{0}\" fill=\"white\"/>",
        CANVAS
    );

    let w = options.stroke_width;
    draw_triangle(
        &mut out,
        "reference",
        &delta,
        &view,
        &options.reference_color,
        w,
        Some("8 5"),
    );
    draw_triangle(
        &mut out,
        "affine-nearest",
        &pair.z_star_affine,
        &view,
        &options.affine_color,
        w,
        None,
    );
    draw_triangle(
        &mut out,
        "isometric-nearest",
        &pair.z_star_isometric,
        &view,
        &options.isometric_color,
        w,
        Some("2 4"),
    );

    if options.legend {
        let mut lines = vec![
            (
                options.reference_color.as_str(),
                "Δ unit regular triangle".to_string(),
            ),
            (
                options.affine_color.as_str(),
                format!("z* affine deviation {}", significant(summary.affine_dev, 6)),
            ),
            (
                options.isometric_color.as_str(),
                format!(
                    "z★ isometric deviation {}",
                    significant(summary.isometric_dev, 6)
                ),
            ),
            (
                "black",
                format!(
                    "unbalance factor {}",
                    significant(unbalance_factor_from_sides(s), 6)
                ),
            ),
        ];
        if pair.degenerate_isometric {
            lines.push((
                options.isometric_color.as_str(),
                "z★ = a·Δ̄ (equilateral clockwise, degenerate branch)".to_string(),
            ));
        }
        let _ = writeln!(
            out,
            "  <g id=\"legend\" font-family=\"sans-serif\" font-size=\"14\">"
        );
        for (k, (color, text)) in lines.iter().enumerate() {
            let _ = writeln!(
                out,
                "    <text x=\"16\" y=\"{}\" fill=\"{color}\">{text}</text>",
                24 + 20 * k
            );
        }
        let _ = writeln!(out, "  </g>");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn sides(a: f64, b: f64, c: f64, sign: i8) -> TriangleSides {
        TriangleSides::new(a, b, c, sign).unwrap()
    }

    #[test]
    fn regular_ccw_legend_shows_zeros() {
        let svg = render_svg(&sides(1.0, 1.0, 1.0, 1), &RenderOptions::default()).unwrap();
        assert!(svg.contains("z* affine deviation 0<"));
        assert!(svg.contains("z★ isometric deviation 0<"));
        assert!(!svg.contains("degenerate"));
        assert_eq!(svg.matches("<polygon").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 9);
    }

    #[test]
    fn legend_uses_six_significant_digits() {
        let svg = render_svg(&sides(4.0, 5.0, 3.0, 1), &RenderOptions::default()).unwrap();
        assert!(svg.contains("z* affine deviation 0.290358<"), "{svg}");
        assert!(svg.contains("z★ isometric deviation 3.13902<"));
        assert!(svg.contains("stroke=\"blue\""));
        assert!(svg.contains("stroke=\"red\""));
        assert!(svg.contains("stroke=\"gray\""));
    }

    #[test]
    fn equilateral_cw_is_annotated() {
        let svg = render_svg(&sides(2.0, 2.0, 2.0, -1), &RenderOptions::default()).unwrap();
        assert!(svg.contains("degenerate branch"));
        assert!(svg.contains("unbalance factor inf"));
    }

    #[test]
    fn options_are_honored_and_output_is_deterministic() {
        let opts = RenderOptions {
            stroke_width: 3.5,
            affine_color: "#00aa00".to_string(),
            legend: false,
            ..RenderOptions::default()
        };
        let s = sides(4.0, 5.0, 3.0, -1);
        let first = render_svg(&s, &opts).unwrap();
        assert_eq!(first, render_svg(&s, &opts).unwrap());
        assert!(first.contains("stroke-width=\"3.500\""));
        assert!(first.contains("stroke=\"#00aa00\""));
        assert!(!first.contains("id=\"legend\""));
    }

    #[test]
    fn bounding_box_fills_eighty_percent() {
        let svg = render_svg(&sides(4.0, 5.0, 3.0, 1), &RenderOptions::default()).unwrap();
        let mut xs = Vec::new();
        let mut ys = Vec::new();
        for line in svg.lines().filter(|l| l.contains("<circle")) {
            let grab = |key: &str| -> f64 {
                let start = line.find(key).unwrap() + key.len();
                let rest = &line[start..];
                rest[..rest.find('"').unwrap()].parse().unwrap()
            };
            xs.push(grab("cx=\""));
            ys.push(grab("cy=\""));
        }
        let span = |v: &[f64]| {
            v.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
                - v.iter().cloned().fold(f64::INFINITY, f64::min)
        };
        let widest = span(&xs).max(span(&ys));
        assert!((widest - 640.0).abs() < 0.01, "{widest}");
    }

    #[test]
    fn singular_is_rejected() {
        assert_eq!(
            render_svg(&sides(0.0, 0.0, 0.0, -1), &RenderOptions::default()),
            Err(Error::SingularTriangle)
        );
    }
}
