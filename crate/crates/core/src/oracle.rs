//! Brute-force numerical minimization of `d(g·x, y)` over each group.
//!
//! This is the ground truth the closed forms are checked against, so it only
//! ever evaluates distances of transformed polygons. Nothing here consults
//! inner products or the witnesses produced by the closed forms.
//!
//! * Rotation: dense angle grid, then golden-section refinement.
//! * Isometry: same, with the shift set by matching centroids at each angle.
//! * Linear, Affine: (angle × log-scale) grid, then Nelder-Mead restarts over
//!   the real coordinates of `a` (and `b` for Affine).

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::deviation::GroupKind;
use crate::error::{Error, Result};
use crate::optimize::{golden_section, nelder_mead};
use crate::polygon::{centroid, check_same_len, norm_sqr, Polygon};

const MAX_RESTARTS: usize = 40;

#[derive(Debug, Clone, PartialEq)]
pub struct OracleConfig {
    pub angle_samples: usize,
    /// Candidate moduli `|a|` for the Linear and Affine grids.
    pub scale_grid: Vec<f64>,
    /// Simplex iterations per restart.
    pub refine_iters: usize,
    pub tolerance: f64,
    /// Seed for the restart simplex orientation.
    pub seed: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            angle_samples: 4096,
            scale_grid: log_grid(1e-3, 1e3, 64),
            refine_iters: 200,
            tolerance: 1e-8,
            seed: 0x5eed,
        }
    }
}

/// `count` log-spaced points from `lo` to `hi` inclusive.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    let (l, h) = (lo.ln(), hi.ln());
    (0..count)
        .map(|k| (l + (h - l) * k as f64 / (count - 1) as f64).exp())
        .collect()
}

impl OracleConfig {
    pub fn validate(&self) -> Result<()> {
        if self.angle_samples < 16 {
            return Err(Error::Domain {
                name: "angle_samples",
                value: self.angle_samples as f64,
                domain: ">= 16",
            });
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::Domain {
                name: "tolerance",
                value: self.tolerance,
                domain: "> 0",
            });
        }
        if let Some(&bad) = self
            .scale_grid
            .iter()
            .find(|s| !(s.is_finite() && **s > 0.0))
        {
            return Err(Error::Domain {
                name: "scale_grid",
                value: bad,
                domain: "finite positive reals",
            });
        }
        if self.scale_grid.is_empty() {
            return Err(Error::Domain {
                name: "scale_grid length",
                value: 0.0,
                domain: ">= 1",
            });
        }
        Ok(())
    }
}

fn sq_distance(a: Complex64, b: Complex64, x: &Polygon, y: &Polygon) -> f64 {
    x.iter()
        .zip(y)
        .map(|(xk, yk)| (a * xk + b - yk).norm_sqr())
        .sum()
}

fn cis(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Grid over the circle followed by golden-section on the best cell.
fn minimize_on_circle<F: Fn(f64) -> f64>(f: F, samples: usize, xtol: f64) -> f64 {
    let step = TAU / samples as f64;
    let (best_k, _) = (0..samples)
        .map(|k| (k, f(k as f64 * step)))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one sample");
    let center = best_k as f64 * step;
    let (_, fx) = golden_section(&f, center - step, center + step, xtol);
    fx.min(f(center))
}

fn rotation_min(x: &Polygon, y: &Polygon, cfg: &OracleConfig) -> f64 {
    let zero = Complex64::new(0.0, 0.0);
    minimize_on_circle(
        |t| sq_distance(cis(t), zero, x, y),
        cfg.angle_samples,
        1e-13,
    )
}

fn isometry_min(x: &Polygon, y: &Polygon, cfg: &OracleConfig) -> f64 {
    let (x0, y0) = (centroid(x), centroid(y));
    minimize_on_circle(
        |t| {
            let a = cis(t);
            sq_distance(a, y0 - a * x0, x, y)
        },
        cfg.angle_samples,
        1e-13,
    )
}

/// Coarse (angle, scale) grid; the shift, when allowed, matches centroids.
fn grid_start(
    x: &Polygon,
    y: &Polygon,
    cfg: &OracleConfig,
    shift: bool,
) -> (Complex64, Complex64, f64) {
    let (x0, y0) = (centroid(x), centroid(y));
    let step = TAU / cfg.angle_samples as f64;
    let mut best = (
        Complex64::new(0.0, 0.0),
        Complex64::new(0.0, 0.0),
        f64::INFINITY,
    );
    for k in 0..cfg.angle_samples {
        let unit = cis(k as f64 * step);
        for &s in &cfg.scale_grid {
            let a = unit * s;
            let b = if shift {
                y0 - a * x0
            } else {
                Complex64::new(0.0, 0.0)
            };
            let f = sq_distance(a, b, x, y);
            if f < best.2 {
                best = (a, b, f);
            }
        }
    }
    best
}

/// Repeated Nelder-Mead from the incumbent with shrinking, randomly
/// perturbed simplices until a restart stops improving.
fn refine<F: Fn(&[f64]) -> f64>(
    f: F,
    start: Vec<f64>,
    initial_steps: Vec<f64>,
    cfg: &OracleConfig,
    rng: &mut ChaCha8Rng,
) -> f64 {
    let mut x = start;
    let mut fx = f(&x);
    let mut steps = initial_steps;
    let target = cfg.tolerance * cfg.tolerance * 1e-4;
    for _ in 0..MAX_RESTARTS {
        let jittered: Vec<f64> = steps
            .iter()
            .map(|s| {
                let sign = if rng.gen::<bool>() { 1.0 } else { -1.0 };
                sign * s * rng.gen_range(0.5..1.5)
            })
            .collect();
        let r = nelder_mead(&f, &x, &jittered, cfg.refine_iters, 1e-30);
        let moved = x
            .iter()
            .zip(&r.x)
            .map(|(p, q)| (p - q).abs())
            .fold(0.0, f64::max);
        let gain = fx - r.fx;
        if r.fx < fx {
            x = r.x;
            fx = r.fx;
        }
        if gain <= target * (1.0 + fx)
            && moved <= 1e-12 * (1.0 + x.iter().map(|v| v.abs()).fold(0.0, f64::max))
        {
            break;
        }
        let floor = 1e-10 * (1.0 + x.iter().map(|v| v.abs()).fold(0.0, f64::max));
        steps = steps.iter().map(|_| (moved * 2.0).max(floor)).collect();
    }
    fx
}

fn linear_min(x: &Polygon, y: &Polygon, cfg: &OracleConfig, rng: &mut ChaCha8Rng) -> f64 {
    let (a, _, _) = grid_start(x, y, cfg, false);
    let zero = Complex64::new(0.0, 0.0);
    let step = (a.norm() * 0.01).max(1e-4);
    refine(
        |p| sq_distance(Complex64::new(p[0], p[1]), zero, x, y),
        vec![a.re, a.im],
        vec![step; 2],
        cfg,
        rng,
    )
}

fn affine_min(x: &Polygon, y: &Polygon, cfg: &OracleConfig, rng: &mut ChaCha8Rng) -> f64 {
    let (a, b, _) = grid_start(x, y, cfg, true);
    let a_step = (a.norm() * 0.01).max(1e-4);
    let b_step = (b.norm() * 0.01).max(1e-3);
    refine(
        |p| sq_distance(Complex64::new(p[0], p[1]), Complex64::new(p[2], p[3]), x, y),
        vec![a.re, a.im, b.re, b.im],
        vec![a_step, a_step, b_step, b_step],
        cfg,
        rng,
    )
}

/// Numerical approximation of `inf { d(g·x, y) : g in group }`.
///
/// For Linear with `x = 0` and Affine with constant `x` the orbit is a single
/// point and its distance is returned directly.
pub fn oracle_min(group: GroupKind, x: &Polygon, y: &Polygon, cfg: &OracleConfig) -> Result<f64> {
    check_same_len(x, y)?;
    cfg.validate()?;
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
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let sq = match group {
        GroupKind::Rotation => rotation_min(x, y, cfg),
        GroupKind::Isometry => isometry_min(x, y, cfg),
        GroupKind::Linear if x.is_zero() => sq_distance(one, zero, x, y),
        GroupKind::Linear => linear_min(x, y, cfg, &mut rng),
        GroupKind::Affine if x.is_constant() => sq_distance(one, centroid(y) - centroid(x), x, y),
        GroupKind::Affine => affine_min(x, y, cfg, &mut rng),
    };
    Ok(sq.max(0.0).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deviation::GroupKind::*;
    use crate::triangle::Triangle;

    fn poly(pts: &[(f64, f64)]) -> Polygon {
        Polygon::from_pairs(pts).unwrap()
    }

    #[test]
    fn identity_pair_is_zero_in_every_group() {
        let x = poly(&[(1.0, 2.0), (-3.0, 0.5), (0.25, -1.0), (2.0, 2.0)]);
        let cfg = OracleConfig::default();
        for g in GroupKind::ALL {
            let v = oracle_min(g, &x, &x, &cfg).unwrap();
            assert!(v < 1e-10, "{g}: {v}");
        }
    }

    #[test]
    fn single_point_rotation() {
        let v = oracle_min(
            Rotation,
            &poly(&[(1.0, 0.0)]),
            &poly(&[(0.0, 1.0)]),
            &OracleConfig::default(),
        )
        .unwrap();
        assert!(v < 1e-10, "{v}");
    }

    #[test]
    fn right_triangle_to_delta_affine() {
        let x = poly(&[(0.0, 0.0), (4.0, 0.0), (0.0, 3.0)]);
        let delta = Triangle::regular_side_one_ccw().to_polygon();
        let v = oracle_min(Affine, &x, &delta, &OracleConfig::default()).unwrap();
        assert!((v - 0.2903580654699803).abs() < 1e-6, "{v}");
    }

    #[test]
    fn degenerate_orbits() {
        let cfg = OracleConfig::default();
        let y = poly(&[(3.0, 0.0), (0.0, 4.0)]);
        let zero = poly(&[(0.0, 0.0), (0.0, 0.0)]);
        assert!((oracle_min(Linear, &zero, &y, &cfg).unwrap() - 5.0).abs() < 1e-15);
        let constant = poly(&[(7.0, 7.0), (7.0, 7.0)]);
        let expected = (12.5f64).sqrt();
        assert!((oracle_min(Affine, &constant, &y, &cfg).unwrap() - expected).abs() < 1e-12);
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let x = poly(&[(0.3, 1.0), (2.0, -1.0), (-1.0, -0.5)]);
        let y = poly(&[(1.0, 1.0), (0.0, 2.0), (-2.0, 0.0)]);
        let cfg = OracleConfig::default();
        for g in GroupKind::ALL {
            assert_eq!(
                oracle_min(g, &x, &y, &cfg).unwrap(),
                oracle_min(g, &x, &y, &cfg).unwrap()
            );
        }
    }

    #[test]
    fn rejects_bad_config_and_lengths() {
        let x = poly(&[(0.0, 0.0)]);
        let cfg = OracleConfig {
            angle_samples: 4,
            ..OracleConfig::default()
        };
        assert!(matches!(
            oracle_min(Rotation, &x, &x, &cfg),
            Err(Error::Domain { .. })
        ));
        let cfg = OracleConfig {
            tolerance: 0.0,
            ..OracleConfig::default()
        };
        assert!(cfg.validate().is_err());
        let y = poly(&[(0.0, 0.0), (1.0, 1.0)]);
        assert!(matches!(
            oracle_min(Rotation, &x, &y, &OracleConfig::default()),
            Err(Error::DimensionMismatch { .. })
        ));
    }
}
