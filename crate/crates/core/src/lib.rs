//! Orbit deviations between polygons in the complex plane, and closed-form
//! asymmetry metrics for triangles.
//!
//! A polygon is a vector of `n` complex vertices. For a group of maps
//! `z -> a·z + b` acting on it, the deviation of `x` from `y` is the least
//! distance between `y` and any image of `x`. Four groups are supported:
//! rotations, isometries, complex-linear maps and complex-affine maps.
//!
//! For triangles the deviations from the unit regular triangle depend only on
//! the side lengths and orientation; see [`triangle`] and [`nearest`].

pub mod cli;
pub mod deviation;
pub mod error;
pub mod nearest;
pub mod numfmt;
pub mod optimize;
pub mod oracle;
pub mod polygon;
pub mod svg;
pub mod triangle;

pub use num_complex::Complex64;

pub use deviation::{
    affine_deviation, isometric_deviation, linear_deviation, rotational_deviation,
    witness_distance, DeviationResult, GroupKind,
};
pub use error::{Error, Result};
pub use nearest::{nearest_pair, nearest_summary, z_rings, NearestPair, NearestSummary};
pub use oracle::{oracle_min, OracleConfig};
pub use polygon::{
    apply_affine, centroid, distance, inner_product, norm, norm_sqr, AffineWitness, ComplexPoint,
    Polygon,
};
pub use svg::{render_svg, RenderOptions};
pub use triangle::{
    affine_deviation_from_delta, affine_to_unbalance, heron_area, heron_area_from_lengths,
    isometric_deviation_from_delta, normalized_area, quadrofactor, side_lengths, sides_report,
    symmetric_components, triangle_report, unbalance_factor, unbalance_factor_from_sides,
    unbalance_to_affine, Classification, SymmetricComponents, Triangle, TriangleReport,
    TriangleSides,
};
