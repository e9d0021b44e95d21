//! Derivative-free minimizers used by the brute-force oracle.

/// Golden-section search for a minimum of `f` on `[lo, hi]`.
pub fn golden_section<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, xtol: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    while (hi - lo).abs() > xtol {
        if f1 <= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
        }
    }
    if f1 <= f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

#[derive(Debug, Clone)]
pub struct SimplexResult {
    pub x: Vec<f64>,
    pub fx: f64,
    pub iterations: usize,
}

/// Nelder-Mead with the standard coefficients (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2). The initial simplex is `x0` plus one
/// vertex per axis offset by `steps[i]`.
pub fn nelder_mead<F: Fn(&[f64]) -> f64>(
    f: F,
    x0: &[f64],
    steps: &[f64],
    max_iter: usize,
    ftol: f64,
) -> SimplexResult {
    let dim = x0.len();
    assert_eq!(dim, steps.len());

    let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
    simplex.push((x0.to_vec(), f(x0)));
    for i in 0..dim {
        let mut v = x0.to_vec();
        v[i] += steps[i];
        let fv = f(&v);
        simplex.push((v, fv));
    }

    let lerp = |from: &[f64], to: &[f64], t: f64| -> Vec<f64> {
        from.iter().zip(to).map(|(a, b)| a + t * (b - a)).collect()
    };

    let mut iterations = 0;
    while iterations < max_iter {
        simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
        let best = simplex[0].1;
        let worst = simplex[dim].1;
        if (worst - best).abs() <= ftol * (1.0 + best.abs()) {
            break;
        }
        iterations += 1;

        let mut centroid = vec![0.0; dim];
        for (v, _) in &simplex[..dim] {
            for (c, x) in centroid.iter_mut().zip(v) {
                *c += x / dim as f64;
            }
        }

        let reflected = lerp(&centroid, &simplex[dim].0, -1.0);
        let fr = f(&reflected);
        if fr < best {
            let expanded = lerp(&centroid, &simplex[dim].0, -2.0);
            let fe = f(&expanded);
            simplex[dim] = if fe < fr {
                (expanded, fe)
            } else {
                (reflected, fr)
            };
            continue;
        }
        if fr < simplex[dim - 1].1 {
            simplex[dim] = (reflected, fr);
            continue;
        }
        let (contracted, fc) = if fr < worst {
            let c = lerp(&centroid, &reflected, 0.5);
            let fc = f(&c);
            (c, fc)
        } else {
            let c = lerp(&centroid, &simplex[dim].0, 0.5);
            let fc = f(&c);
            (c, fc)
        };
        if fc < worst.min(fr) {
            simplex[dim] = (contracted, fc);
            continue;
        }
        let anchor = simplex[0].0.clone();
        for entry in simplex.iter_mut().skip(1) {
            let v = lerp(&anchor, &entry.0, 0.5);
            let fv = f(&v);
            *entry = (v, fv);
        }
    }

    simplex.sort_by(|a, b| a.1.total_cmp(&b.1));
    let (x, fx) = simplex.swap_remove(0);
    SimplexResult { x, fx, iterations }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_section_finds_parabola_minimum() {
        let (x, fx) = golden_section(|t| (t - 0.3).powi(2) + 2.0, -1.0, 1.0, 1e-12);
        assert!((x - 0.3).abs() < 1e-7);
        assert!((fx - 2.0).abs() < 1e-15);
    }

    #[test]
    fn nelder_mead_rosenbrock() {
        let rosen = |p: &[f64]| (1.0 - p[0]).powi(2) + 100.0 * (p[1] - p[0] * p[0]).powi(2);
        let r = nelder_mead(rosen, &[-1.2, 1.0], &[0.1, 0.1], 5000, 1e-20);
        assert!((r.x[0] - 1.0).abs() < 1e-6, "{:?}", r);
        assert!((r.x[1] - 1.0).abs() < 1e-6);
    }

    #[test]
    fn nelder_mead_quadratic_to_high_accuracy() {
        let q = |p: &[f64]| {
            (p[0] - 1.0).powi(2) + 3.0 * (p[1] + 2.0).powi(2) + (p[2] - p[3]).powi(2) + p[3].powi(2)
        };
        let r = nelder_mead(q, &[0.0; 4], &[0.5; 4], 20_000, 1e-30);
        assert!(r.fx < 1e-20, "{}", r.fx);
    }
}
