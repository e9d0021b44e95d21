//! The `polydev` command line.
//!
//! Exit codes: 0 success, 1 input error, 2 verification failure.

pub mod batch;
pub mod input;
pub mod json;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::deviation::GroupKind;
use crate::nearest::nearest_summary;
use crate::numfmt::significant;
use crate::oracle::{oracle_min, OracleConfig};
use crate::svg::{render_svg, RenderOptions};
use crate::triangle::{
    side_lengths, sides_report, symmetric_components, triangle_report, unbalance_factor, Triangle,
    TriangleReport,
};

use input::Shape;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "polydev",
    version,
    about = "Orbit deviations between polygons and triangle asymmetry metrics"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Deviation of polygon X from reference Y under a transformation group
    Deviate {
        /// Polygon document (path or inline JSON)
        x: String,
        /// Reference document; defaults to the unit regular triangle when X has 3 vertices
        y: Option<String>,
        #[arg(long, conflicts_with = "y")]
        reference: Option<String>,
        #[arg(long, default_value = "affine")]
        group: GroupKind,
        /// Cross-check the value against the numerical oracle
        #[arg(long)]
        verify: bool,
    },
    /// Quadrofactor, areas, deviations from Δ, unbalance and class
    Triangle {
        input: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Positive, negative and zero symmetric components
    Components { input: String },
    /// Write an SVG of the nearest affine and isometric triangles to Δ
    Nearest {
        input: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Per-row triangle reports for a CSV file
    Batch {
        input: PathBuf,
        /// Output CSV; standard output if omitted
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Verify(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Input(_) => EXIT_INPUT,
            Failure::Verify(_) => EXIT_VERIFY,
        }
    }
}

type Outcome = Result<(), Failure>;

/// Verification failure when the closed form and the oracle disagree by more
/// than the tolerance, or either is not a number.
fn compare_with_oracle(closed: f64, oracle: f64) -> Result<f64, Failure> {
    let diff = (oracle - closed).abs();
    if diff <= batch::VERIFY_TOLERANCE {
        Ok(diff)
    } else {
        Err(Failure::Verify(format!(
            "closed form {closed} vs oracle {oracle} (|diff| = {diff:e})"
        )))
    }
}

fn input_err<E: ToString>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = match cli.command {
        Command::Deviate {
            x,
            y,
            reference,
            group,
            verify,
        } => cmd_deviate(&mut out, &x, y.or(reference).as_deref(), group, verify),
        Command::Triangle { input, format } => cmd_triangle(&mut out, &input, format),
        Command::Components { input } => cmd_components(&mut out, &input),
        Command::Nearest { input, out: path } => cmd_nearest(&mut out, &input, &path),
        Command::Batch {
            input,
            out: path,
            verify,
        } => cmd_batch(&mut out, &input, path.as_ref(), verify),
    };
    let _ = out.flush();
    match result {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            match &failure {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Verify(msg) => eprintln!("verification failed: {msg}"),
            }
            failure.code()
        }
    }
}

fn print(out: &mut dyn Write, text: &str) -> Outcome {
    writeln!(out, "{text}").map_err(input_err)
}

fn cmd_deviate(
    out: &mut dyn Write,
    x_arg: &str,
    y_arg: Option<&str>,
    group: GroupKind,
    verify: bool,
) -> Outcome {
    let x = input::load(x_arg).map_err(Failure::Input)?.polygon();
    let y = match y_arg {
        Some(arg) => input::load(arg).map_err(Failure::Input)?.polygon(),
        None if x.len() == 3 => Triangle::regular_side_one_ccw().to_polygon(),
        None => {
            return Err(Failure::Input(format!(
                "no reference given and X has {} vertices (the default reference needs 3)",
                x.len()
            )))
        }
    };
    let result = group.deviation(&x, &y).map_err(input_err)?;
    let mut doc = json::DeviateDoc::new(group.name(), &result);
    let mut failure = None;
    if verify {
        let oracle = oracle_min(group, &x, &y, &OracleConfig::default()).map_err(input_err)?;
        let diff = (oracle - result.value).abs();
        failure = compare_with_oracle(result.value, oracle).err();
        doc.verified = Some(json::VerifiedDoc {
            oracle_value: json::num(oracle),
            abs_diff: json::num(diff),
        });
    }
    print(out, &json::to_string(&doc))?;
    failure.map_or(Ok(()), Err)
}

fn report_for(shape: &Shape) -> Result<TriangleReport, Failure> {
    match shape {
        Shape::Sides(s) => Ok(sides_report(s)),
        Shape::Vertices(_) => Ok(triangle_report(&shape.triangle().map_err(Failure::Input)?)),
    }
}

fn report_text(r: &TriangleReport) -> String {
    let rows = [
        ("u", significant(r.u, 10)),
        ("q", significant(r.q, 10)),
        ("normalized area", significant(r.normalized_area, 10)),
        ("area", significant(r.area, 10)),
        ("orientation sign", r.sign.to_string()),
        ("isometric deviation", significant(r.isometric_dev, 10)),
        ("affine deviation", significant(r.affine_dev, 10)),
        ("unbalance factor", significant(r.unbalance, 10)),
        ("classification", r.classification.name().to_string()),
    ];
    let mut text = String::new();
    for (label, value) in rows {
        let _ = writeln!(text, "{label:<20} {value}");
    }
    text.pop();
    text
}

fn report_csv(r: &TriangleReport) -> Result<String, Failure> {
    let row = batch::Row {
        line: 2,
        outcome: Ok(batch::RowOk {
            report: *r,
            triangle: Triangle::regular_side_one_ccw(),
        }),
    };
    let mut buf = Vec::new();
    batch::write_rows(std::slice::from_ref(&row), &mut buf).map_err(Failure::Input)?;
    let text = String::from_utf8(buf).map_err(input_err)?;
    Ok(text.trim_end().to_string())
}

fn cmd_triangle(out: &mut dyn Write, arg: &str, format: Format) -> Outcome {
    let shape = input::load(arg).map_err(Failure::Input)?;
    let report = report_for(&shape)?;
    let text = match format {
        Format::Json => json::to_string(&json::ReportDoc::from(&report)),
        Format::Csv => report_csv(&report)?,
        Format::Text => report_text(&report),
    };
    print(out, &text)
}

fn cmd_components(out: &mut dyn Write, arg: &str) -> Outcome {
    let t = input::load(arg)
        .map_err(Failure::Input)?
        .triangle()
        .map_err(Failure::Input)?;
    let doc = json::ComponentsDoc::new(&symmetric_components(&t), unbalance_factor(&t));
    print(out, &json::to_string(&doc))
}

fn cmd_nearest(out: &mut dyn Write, arg: &str, path: &PathBuf) -> Outcome {
    let sides = match input::load(arg).map_err(Failure::Input)? {
        Shape::Sides(s) => s,
        shape @ Shape::Vertices(_) => side_lengths(&shape.triangle().map_err(Failure::Input)?),
    };
    let summary = nearest_summary(&sides).map_err(input_err)?;
    let svg = render_svg(&sides, &RenderOptions::default()).map_err(input_err)?;
    fs::write(path, svg).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let doc = json::NearestDoc {
        affine_dev: json::num(summary.affine_dev),
        isometric_dev: json::num(summary.isometric_dev),
        degenerate_isometric: summary.pair.degenerate_isometric,
    };
    print(out, &json::to_string(&doc))
}

fn cmd_batch(
    out: &mut dyn Write,
    path: &PathBuf,
    out_path: Option<&PathBuf>,
    verify: bool,
) -> Outcome {
    let file = File::open(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let rows = batch::read_rows(io::BufReader::new(file))
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    match out_path {
        Some(p) => {
            let file =
                File::create(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            batch::write_rows(&rows, BufWriter::new(file)).map_err(Failure::Input)?;
        }
        None => batch::write_rows(&rows, &mut *out).map_err(Failure::Input)?,
    }
    if !verify {
        return Ok(());
    }
    let failures = batch::verify_rows(&rows, &OracleConfig::default());
    if failures.is_empty() {
        return Ok(());
    }
    let mut msg = format!("{} of {} rows", failures.len(), rows.len());
    for (line, why) in &failures {
        let _ = write!(msg, "\n  line {line}: {why}");
    }
    Err(Failure::Verify(msg))
}
