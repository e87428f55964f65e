//! Selection metrics: absolute rotation index, `L²` curvature deviation
//! from an arc, and radial distance to an arc.

use serde::{Deserialize, Serialize};

use crate::canonical::CanonicalData;
use crate::error::{Error, Result};
use crate::ph::Ph7Curve;
use crate::quad::{adaptive_simpson, adaptive_simpson_panels, DEFAULT_PANELS};
use crate::solution::{CandidateSolution, SolutionSet};
use crate::Complex;

pub const ROTATION_TOL: f64 = 1e-8;
pub const CURVATURE_REL_TOL: f64 = 1e-12;
pub const TURNING_SCAN: usize = 512;
pub const RADIAL_SCAN: usize = 2049;
pub const RADIAL_REFINE: usize = 3;
pub const RADIAL_T_TOL: f64 = 1e-12;
pub const HAUSDORFF_SAMPLES: usize = 4096;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Absolute rotation index; any data.
    RotationIndex,
    /// `∫(κ + 2 sin α)²`; arc data only.
    CurvatureL2,
    /// Radial distance to the arc; arc data only.
    Radial,
}

impl Criterion {
    pub fn name(self) -> &'static str {
        match self {
            Criterion::RotationIndex => "rotation_index",
            Criterion::CurvatureL2 => "curvature_l2",
            Criterion::Radial => "radial",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    pub r_abs: f64,
    pub e_kappa: Option<f64>,
    pub d_rad: Option<f64>,
    pub argmax_t: Option<f64>,
}

impl MetricsReport {
    /// Rotation index always; the arc metrics when `data` is arc data.
    pub fn compute(curve: &Ph7Curve, data: &CanonicalData) -> Self {
        let r_abs = rotation_index_abs(curve);
        match data.arc_alpha() {
            Some(alpha) => {
                let (d_rad, t) = radial_distance(curve, alpha);
                MetricsReport {
                    r_abs,
                    e_kappa: Some(curvature_error_l2(curve, alpha)),
                    d_rad: Some(d_rad),
                    argmax_t: Some(t),
                }
            }
            None => MetricsReport {
                r_abs,
                e_kappa: None,
                d_rad: None,
                argmax_t: None,
            },
        }
    }
}

fn raw_curvature(curve: &Ph7Curve, t: f64) -> f64 {
    let pre = curve.preimage();
    let s = pre.sigma(t);
    2.0 * pre.turning_numerator(t) / (s * s)
}

/// Breakpoints of `[0, 1]` at the sign changes of `Im(w̄ w')`.
fn turning_breakpoints(curve: &Ph7Curve) -> Vec<f64> {
    let pre = curve.preimage();
    let f = |t: f64| pre.turning_numerator(t);
    let mut points = vec![0.0];
    let n = TURNING_SCAN;
    let mut prev = (0.0, f(0.0));
    for i in 1..=n {
        let t = i as f64 / n as f64;
        let v = f(t);
        if prev.1 * v < 0.0 {
            let (mut lo, mut hi, mut flo) = (prev.0, t, prev.1);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let fm = f(mid);
                if fm * flo <= 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    flo = fm;
                }
            }
            points.push(0.5 * (lo + hi));
        }
        prev = (t, v);
    }
    points.push(1.0);
    points
}

/// `∫|κ| ‖p'‖ dt = ∫ 2|Im(w̄ w')| / σ dt`.
pub fn rotation_index_abs(curve: &Ph7Curve) -> f64 {
    rotation_index_abs_panels(curve, DEFAULT_PANELS)
}

pub fn rotation_index_abs_panels(curve: &Ph7Curve, panels: usize) -> f64 {
    let pre = curve.preimage();
    let f = |t: f64| 2.0 * pre.turning_numerator(t).abs() / pre.sigma(t);
    let bp = turning_breakpoints(curve);
    let tol = ROTATION_TOL / (bp.len() - 1) as f64;
    bp.windows(2)
        .map(|w| adaptive_simpson_panels(f, w[0], w[1], tol, panels))
        .sum()
}

/// `E_κ = ∫ (κ + 2 sin α)² dt`.
pub fn curvature_error_l2(curve: &Ph7Curve, alpha: f64) -> f64 {
    curvature_error_l2_panels(curve, alpha, DEFAULT_PANELS)
}

pub fn curvature_error_l2_panels(curve: &Ph7Curve, alpha: f64, panels: usize) -> f64 {
    let target = -2.0 * alpha.sin();
    let f = |t: f64| {
        let e = raw_curvature(curve, t) - target;
        e * e
    };
    let rough = adaptive_simpson(f, 0.0, 1.0, 1e-6);
    adaptive_simpson_panels(f, 0.0, 1.0, CURVATURE_REL_TOL * (1.0 + rough), panels)
}

/// `|‖p - c‖ - R|` for the arc with centre `c = (1/2, -cot α / 2)` and
/// radius `R = 1/(2 sin α)`, evaluated without cancellation.
pub fn radial_error_at(point: Complex, alpha: f64) -> f64 {
    let (x, y) = (point.re, point.im);
    let cot = alpha.cos() / alpha.sin();
    let radius = 0.5 / alpha.sin();
    let center = Complex::new(0.5, -0.5 * cot);
    // |p - c|² - R² = x(x - 1) + y(y + cot α)
    let power = x * (x - 1.0) + y * (y + cot);
    power.abs() / ((point - center).norm() + radius)
}

/// Maximum radial error over `t ∈ [0, 1]` and where it is attained.
pub fn radial_distance(curve: &Ph7Curve, alpha: f64) -> (f64, f64) {
    let f = |t: f64| radial_error_at(curve.eval(t), alpha);
    let n = RADIAL_SCAN - 1;
    let values: Vec<f64> = (0..=n).map(|i| f(i as f64 / n as f64)).collect();
    let mut peaks: Vec<usize> = (0..=n)
        .filter(|&i| {
            let left = if i == 0 { f64::NEG_INFINITY } else { values[i - 1] };
            let right = if i == n { f64::NEG_INFINITY } else { values[i + 1] };
            values[i] >= left && values[i] >= right
        })
        .collect();
    peaks.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    peaks.truncate(RADIAL_REFINE);

    let mut best = (values[0], 0.0);
    for i in peaks {
        let lo = i.saturating_sub(1) as f64 / n as f64;
        let hi = (i + 1).min(n) as f64 / n as f64;
        let (t, v) = golden_max(&f, lo, hi);
        let (t, v) = if values[i] > v {
            (i as f64 / n as f64, values[i])
        } else {
            (t, v)
        };
        if v > best.0 {
            best = (v, t);
        }
    }
    best
}

fn golden_max<F: Fn(f64) -> f64>(f: &F, mut a: f64, mut b: f64) -> (f64, f64) {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > RADIAL_T_TOL {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    let t = 0.5 * (a + b);
    (t, f(t))
}

/// Brute-force two-sided Hausdorff distance between point sets.
pub fn sampled_hausdorff(a: &[Complex], b: &[Complex]) -> f64 {
    let one_sided = |from: &[Complex], to: &[Complex]| {
        from.iter()
            .map(|p| {
                to.iter()
                    .map(|q| (p - q).norm_sqr())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max)
            .sqrt()
    };
    one_sided(a, b).max(one_sided(b, a))
}

/// `samples` points of the canonical arc with half angle `α`, from `0` to `1`.
pub fn arc_samples(alpha: f64, samples: usize) -> Vec<Complex> {
    let center = Complex::new(0.5, -0.5 * alpha.cos() / alpha.sin());
    let radius = 0.5 / alpha.sin();
    let start = (Complex::new(0.0, 0.0) - center).arg();
    (0..samples)
        .map(|i| {
            let s = i as f64 / (samples - 1) as f64;
            center + Complex::from_polar(radius, start - 2.0 * alpha * s)
        })
        .collect()
}

/// Value of `criterion` for one solution of `data`.
pub fn criterion_value(
    solution: &CandidateSolution,
    data: &CanonicalData,
    criterion: Criterion,
) -> Result<f64> {
    let curve = &solution.curve;
    match criterion {
        Criterion::RotationIndex => Ok(rotation_index_abs(curve)),
        Criterion::CurvatureL2 => data
            .arc_alpha()
            .map(|a| curvature_error_l2(curve, a))
            .ok_or(Error::CriterionNeedsArc("curvature_l2")),
        Criterion::Radial => data
            .arc_alpha()
            .map(|a| radial_distance(curve, a).0)
            .ok_or(Error::CriterionNeedsArc("radial")),
    }
}

/// Index of the minimiser of `criterion`; ties go to the smaller `d`.
pub fn select_best_index(set: &SolutionSet, criterion: Criterion) -> Result<usize> {
    if set.is_empty() {
        return Err(Error::EmptySolutionSet);
    }
    let mut best: Option<(usize, f64, f64)> = None;
    for (i, s) in set.iter().enumerate() {
        let v = criterion_value(s, &set.data, criterion)?;
        let d = s.unknowns.d;
        let better = match best {
            None => true,
            Some((_, bv, bd)) => v < bv || (v == bv && d < bd),
        };
        if better {
            best = Some((i, v, d));
        }
    }
    Ok(best.map(|b| b.0).unwrap_or(0))
}

pub fn select_best(set: &SolutionSet, criterion: Criterion) -> Result<&CandidateSolution> {
    let i = select_best_index(set, criterion)?;
    Ok(&set.solutions()[i])
}
