use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("polygon must have at least one vertex")]
    EmptyPolygon,

    #[error("non-finite coordinate at vertex {index}")]
    NonFinite { index: usize },

    #[error("dimension mismatch: {left} vertices vs {right} vertices")]
    DimensionMismatch { left: usize, right: usize },

    #[error("side lengths ({a}, {b}, {c}) violate the triangle inequality")]
    TriangleInequality { a: f64, b: f64, c: f64 },

    #[error("invalid side length {0}: must be finite and non-negative")]
    InvalidSide(f64),

    #[error("orientation sign {sign} is inconsistent with side lengths ({a}, {b}, {c})")]
    InconsistentOrientation { sign: i8, a: f64, b: f64, c: f64 },

    #[error("singular triangle (all vertices coincide)")]
    SingularTriangle,

    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
