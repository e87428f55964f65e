//! Newton and multistart solver for the reduced five-equation system with
//! arbitrary canonical data.

use nalgebra::{Matrix5, Vector5};
use serde::{Deserialize, Serialize};

use crate::arc::solve_arc;
use crate::canonical::CanonicalData;
use crate::error::{Error, Result};
use crate::solution::{CandidateSolution, SolutionSet, Unknowns};

pub const NEWTON_TOL: f64 = 1e-11;
pub const MAX_NEWTON_ITERATIONS: usize = 100;
pub const ACCEPT_RESIDUAL: f64 = 1e-9;
pub const DEDUP_TOL: f64 = 1e-7;
pub const HOMOTOPY_STEPS: usize = 32;
pub const GRID_D: [f64; 16] = [
    0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0, 2.25, 2.5, 2.75, 3.0, 3.25, 3.5, 3.75, 4.0,
];
/// Offsets along the solution lines of the two curvature equations.
pub const GRID_TAU: [f64; 5] = [-3.0, -1.5, 0.0, 1.5, 3.0];
const MIN_D: f64 = 1e-6;

struct HalfAngles {
    c0: f64,
    s0: f64,
    c1: f64,
    s1: f64,
}

impl HalfAngles {
    fn of(data: &CanonicalData) -> Self {
        let (s0, c0) = (0.5 * data.theta0).sin_cos();
        let (s1, c1) = (0.5 * data.theta1).sin_cos();
        HalfAngles { c0, s0, c1, s1 }
    }
}

/// Left-hand sides of the five equations.
pub fn residuals(x: &Unknowns, data: &CanonicalData) -> [f64; 5] {
    let HalfAngles { c0, s0, c1, s1 } = HalfAngles::of(data);
    let Unknowns { d, u1, v1, u2, v2 } = *x;
    let l = data.length;
    let d2 = d * d;
    let e1 = 6.0 * u1 * u1 + 9.0 * u1 * u2 + 6.0 * u2 * u2
        + (10.0 * c0 * c0 + 10.0 * c1 * c1 + c0 * c1) * d2
        + 10.0 * d * (u1 * c0 + u2 * c1)
        + 4.0 * d * (u1 * c1 + u2 * c0)
        - 35.0 * (l + 1.0);
    let e2 = 6.0 * v1 * v1 + 9.0 * v1 * v2 + 6.0 * v2 * v2
        + (10.0 * s0 * s0 + 10.0 * s1 * s1 + s0 * s1) * d2
        + 10.0 * d * (v1 * s0 + v2 * s1)
        + 4.0 * d * (v1 * s1 + v2 * s0)
        - 35.0 * (l - 1.0);
    let e3 = data.k0 * d2 * d + 6.0 * s0 * u1 - 6.0 * c0 * v1;
    let e4 = data.k1 * d2 * d - 6.0 * s1 * u2 + 6.0 * c1 * v2;
    let e5 = 12.0 * u1 * v1 + 9.0 * u2 * v1 + 9.0 * u1 * v2 + 12.0 * u2 * v2
        + (s0 * (20.0 * c0 + c1) + s1 * (c0 + 20.0 * c1)) * d2
        + 2.0
            * ((5.0 * v1 + 2.0 * v2) * c0
                + (2.0 * v1 + 5.0 * v2) * c1
                + (5.0 * u1 + 2.0 * u2) * s0
                + (2.0 * u1 + 5.0 * u2) * s1)
            * d;
    [e1, e2, e3, e4, e5]
}

/// Rows are equations, columns are `d, u1, v1, u2, v2`.
pub fn jacobian(x: &Unknowns, data: &CanonicalData) -> [[f64; 5]; 5] {
    let HalfAngles { c0, s0, c1, s1 } = HalfAngles::of(data);
    let Unknowns { d, u1, v1, u2, v2 } = *x;
    let a = 10.0 * c0 * c0 + 10.0 * c1 * c1 + c0 * c1;
    let b = 10.0 * s0 * s0 + 10.0 * s1 * s1 + s0 * s1;
    let c = s0 * (20.0 * c0 + c1) + s1 * (c0 + 20.0 * c1);
    let e = (5.0 * v1 + 2.0 * v2) * c0
        + (2.0 * v1 + 5.0 * v2) * c1
        + (5.0 * u1 + 2.0 * u2) * s0
        + (2.0 * u1 + 5.0 * u2) * s1;
    [
        [
            2.0 * a * d + 10.0 * (u1 * c0 + u2 * c1) + 4.0 * (u1 * c1 + u2 * c0),
            12.0 * u1 + 9.0 * u2 + 10.0 * d * c0 + 4.0 * d * c1,
            0.0,
            9.0 * u1 + 12.0 * u2 + 10.0 * d * c1 + 4.0 * d * c0,
            0.0,
        ],
        [
            2.0 * b * d + 10.0 * (v1 * s0 + v2 * s1) + 4.0 * (v1 * s1 + v2 * s0),
            0.0,
            12.0 * v1 + 9.0 * v2 + 10.0 * d * s0 + 4.0 * d * s1,
            0.0,
            9.0 * v1 + 12.0 * v2 + 10.0 * d * s1 + 4.0 * d * s0,
        ],
        [3.0 * data.k0 * d * d, 6.0 * s0, -6.0 * c0, 0.0, 0.0],
        [3.0 * data.k1 * d * d, 0.0, 0.0, -6.0 * s1, 6.0 * c1],
        [
            2.0 * c * d + 2.0 * e,
            12.0 * v1 + 9.0 * v2 + 2.0 * d * (5.0 * s0 + 2.0 * s1),
            12.0 * u1 + 9.0 * u2 + 2.0 * d * (5.0 * c0 + 2.0 * c1),
            9.0 * v1 + 12.0 * v2 + 2.0 * d * (2.0 * s0 + 5.0 * s1),
            9.0 * u1 + 12.0 * u2 + 2.0 * d * (2.0 * c0 + 5.0 * c1),
        ],
    ]
}

fn norm_inf(f: &[f64; 5]) -> f64 {
    f.iter().fold(0.0, |m, v| m.max(v.abs()))
}

fn norm2_sq(f: &[f64; 5]) -> f64 {
    f.iter().map(|v| v * v).sum()
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NewtonOutcome {
    pub unknowns: Unknowns,
    pub iterations: usize,
    pub residual: f64,
}

/// Damped Newton iteration with Armijo backtracking. The result is sign
/// normalized so that `d ≥ 0`.
pub fn solve_newton(data: &CanonicalData, start: Unknowns) -> Result<NewtonOutcome> {
    let mut x = start;
    let mut f = residuals(&x, data);
    for iteration in 0..=MAX_NEWTON_ITERATIONS {
        let r = norm_inf(&f);
        if !r.is_finite() {
            break;
        }
        if r <= NEWTON_TOL {
            return Ok(NewtonOutcome {
                unknowns: x.sign_normalized(),
                iterations: iteration,
                residual: r,
            });
        }
        if iteration == MAX_NEWTON_ITERATIONS {
            break;
        }
        let j = jacobian(&x, data);
        let jm = Matrix5::from_fn(|r, c| j[r][c]);
        let rhs = -Vector5::from_column_slice(&f);
        let step = jm.lu().solve(&rhs).ok_or(Error::SingularJacobian)?;
        if step.iter().any(|v| !v.is_finite()) {
            return Err(Error::SingularJacobian);
        }
        let xa = x.to_array();
        let phi = norm2_sq(&f);
        let mut lambda = 1.0;
        loop {
            let trial = Unknowns::from_array(std::array::from_fn(|i| xa[i] + lambda * step[i]));
            let ft = residuals(&trial, data);
            if norm2_sq(&ft) <= (1.0 - 1e-4 * lambda) * phi {
                x = trial;
                f = ft;
                break;
            }
            lambda *= 0.5;
            if lambda < 1e-10 {
                return Err(Error::NoConvergence { iterations: iteration });
            }
        }
    }
    Err(Error::NoConvergence {
        iterations: MAX_NEWTON_ITERATIONS,
    })
}

/// Bookkeeping of a [`solve_all`] run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveDiagnostics {
    pub starts: usize,
    pub converged: usize,
    /// Smallest `‖F‖∞` reached by any start, converged or not.
    pub best_residual: f64,
}

/// Starts from the grid over `d` and offsets along the curvature lines.
pub fn grid_starts(data: &CanonicalData) -> Vec<Unknowns> {
    let HalfAngles { c0, s0, c1, s1 } = HalfAngles::of(data);
    let mut starts = Vec::with_capacity(GRID_D.len() * GRID_TAU.len() * GRID_TAU.len());
    for &d in &GRID_D {
        let d3 = d * d * d;
        // Points on 6 s0 u1 - 6 c0 v1 = -κ0 d³ and 6 c1 v2 - 6 s1 u2 = -κ1 d³.
        let (pu1, pv1) = (-data.k0 * d3 / 6.0 * s0, data.k0 * d3 / 6.0 * c0);
        let (pu2, pv2) = (data.k1 * d3 / 6.0 * s1, -data.k1 * d3 / 6.0 * c1);
        for &t1 in &GRID_TAU {
            for &t2 in &GRID_TAU {
                starts.push(Unknowns::new(
                    d,
                    pu1 + t1 * c0,
                    pv1 + t1 * s0,
                    pu2 + t2 * c1,
                    pv2 + t2 * s1,
                ));
            }
        }
    }
    starts
}

/// Continues every solution of the arc problem with the same half angle
/// to `data` along a straight line in data space.
fn homotopy_solutions(data: &CanonicalData) -> Vec<(Result<NewtonOutcome>, f64)> {
    let alpha = 0.5 * (data.theta0 - data.theta1);
    let Ok(set) = solve_arc(alpha) else {
        return Vec::new();
    };
    let anchor = set.data;
    set.iter()
        .map(|s| {
            let mut x = s.unknowns;
            let mut last = f64::INFINITY;
            for k in 1..=HOMOTOPY_STEPS {
                let step_data = anchor.lerp(data, k as f64 / HOMOTOPY_STEPS as f64);
                match solve_newton(&step_data, x) {
                    Ok(out) => {
                        x = out.unknowns;
                        last = out.residual;
                    }
                    Err(e) => {
                        return (Err(e), norm_inf(&residuals(&x, &step_data)));
                    }
                }
            }
            (
                Ok(NewtonOutcome {
                    unknowns: x,
                    iterations: 0,
                    residual: last,
                }),
                last,
            )
        })
        .collect()
}

/// All solutions found by homotopy and grid multistart, deduplicated and
/// sorted by `d`.
pub fn solve_all(data: &CanonicalData) -> SolutionSet {
    solve_all_with_diagnostics(data).0
}

pub fn solve_all_with_diagnostics(data: &CanonicalData) -> (SolutionSet, SolveDiagnostics) {
    let starts = grid_starts(data);
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .clamp(1, 8);
    let chunk = starts.len().div_ceil(workers);
    let mut outcomes: Vec<(Result<NewtonOutcome>, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = starts
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&x0| {
                            let out = solve_newton(data, x0);
                            let r = match &out {
                                Ok(o) => o.residual,
                                Err(_) => f64::INFINITY,
                            };
                            (out, r)
                        })
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("multistart worker panicked"))
            .collect()
    });
    let homotopy = homotopy_solutions(data);
    let n_starts = starts.len() + homotopy.len();
    outcomes.extend(homotopy);

    let best_residual = outcomes.iter().fold(f64::INFINITY, |m, o| m.min(o.1));
    let mut found: Vec<Unknowns> = outcomes
        .iter()
        .filter_map(|(o, _)| o.as_ref().ok())
        .map(|o| o.unknowns)
        .collect();
    let converged = found.len();
    found.retain(|x| x.d > MIN_D);
    found.sort_by(|a, b| a.to_array().partial_cmp(&b.to_array()).expect("finite unknowns"));

    let mut kept: Vec<CandidateSolution> = Vec::new();
    for x in found {
        if kept.iter().any(|k| k.unknowns.distance(&x) <= DEDUP_TOL) {
            continue;
        }
        let Ok(candidate) = CandidateSolution::new(x, data) else {
            continue;
        };
        if candidate.residual <= ACCEPT_RESIDUAL && candidate.curve.preimage().is_regular() {
            kept.push(candidate);
        }
    }
    (
        SolutionSet::new(*data, kept),
        SolveDiagnostics {
            starts: n_starts,
            converged,
            best_residual,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::arc_data;
    use crate::asymptotics::{d2_series, u12_series, v12_series};
    use crate::metrics::rotation_index_abs;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, PI};

    fn ex1() -> CanonicalData {
        CanonicalData::new(FRAC_PI_2, -FRAC_PI_4, -1.0, 2.0, 1.75).unwrap()
    }

    #[test]
    fn constant_terms() {
        let data = ex1();
        let r = residuals(&Unknowns::new(0.0, 0.0, 0.0, 0.0, 0.0), &data);
        assert_eq!(r, [-35.0 * 2.75, -35.0 * 0.75, 0.0, 0.0, 0.0]);
    }

    #[test]
    fn jacobian_matches_finite_differences() {
        let data = ex1();
        for x in [
            Unknowns::new(1.3, 0.4, -0.7, 1.1, 0.2),
            Unknowns::new(0.6, -1.2, 0.3, -0.5, 2.0),
        ] {
            let j = jacobian(&x, &data);
            let xa = x.to_array();
            let h = 1e-6;
            for col in 0..5 {
                let mut p = xa;
                let mut m = xa;
                p[col] += h;
                m[col] -= h;
                let fp = residuals(&Unknowns::from_array(p), &data);
                let fm = residuals(&Unknowns::from_array(m), &data);
                for row in 0..5 {
                    let fd = (fp[row] - fm[row]) / (2.0 * h);
                    assert!(
                        (fd - j[row][col]).abs() <= 1e-5 * (1.0 + fd.abs()),
                        "({row},{col}): {fd} vs {}",
                        j[row][col]
                    );
                }
            }
        }
        let j = jacobian(&Unknowns::new(1.0, 0.0, 0.0, 0.0, 0.0), &data);
        assert_eq!(j[2][1], 6.0 * (FRAC_PI_4).sin());
        assert_eq!(j[2][0], -3.0);
    }

    #[test]
    fn arc_solutions_are_zeros_and_fixed_points() {
        for &a in &[FRAC_PI_4, FRAC_PI_2, 2.0] {
            let data = arc_data(a).unwrap();
            for s in &solve_arc(a).unwrap() {
                assert!(norm_inf(&residuals(&s.unknowns, &data)) < 1e-9);
                let out = solve_newton(&data, s.unknowns).unwrap();
                assert!(out.unknowns.distance(&s.unknowns) < 1e-9);
            }
        }
    }

    #[test]
    fn exact_start_needs_no_iterations() {
        let data = arc_data(FRAC_PI_2).unwrap();
        let set = solve_arc(FRAC_PI_2).unwrap();
        let x = set.solutions()[1].unknowns;
        let polished = solve_newton(&data, x).unwrap().unknowns;
        assert_eq!(solve_newton(&data, polished).unwrap().iterations, 0);
    }

    #[test]
    fn asymptotic_seed_reaches_d2() {
        let a = FRAC_PI_2;
        let data = arc_data(a).unwrap();
        let (u, v) = (u12_series(a), v12_series(a));
        let start = Unknowns::new(d2_series(a), u, v, u, -v);
        let out = solve_newton(&data, start).unwrap();
        assert!((out.unknowns.d - 1.275557).abs() < 1e-5);
    }

    #[test]
    fn negated_start_gives_positive_d() {
        let data = arc_data(FRAC_PI_2).unwrap();
        let s = solve_arc(FRAC_PI_2).unwrap().solutions()[1].unknowns;
        let out = solve_newton(&data, s.negated()).unwrap();
        assert!(out.unknowns.d > 0.0);
        assert!(out.unknowns.distance(&s) < 1e-9);
    }

    #[test]
    fn example_one_has_two_solutions() {
        let set = solve_all(&ex1());
        assert_eq!(set.len(), 2);
        let d = set.d_values();
        assert!((d[0] - 1.4128763).abs() < 1e-6);
        assert!((d[1] - 1.70544979).abs() < 1e-6);
        let r: Vec<f64> = set.iter().map(|s| rotation_index_abs(&s.curve)).collect();
        assert!((r[0] - 3.01).abs() < 5e-3);
        assert!((r[1] - 10.43).abs() < 5e-3);
    }

    #[test]
    fn example_two_has_two_solutions() {
        let data = CanonicalData::new(FRAC_PI_3, FRAC_PI_3, -1.0, 2.0, 1.5).unwrap();
        let set = solve_all(&data);
        assert_eq!(set.len(), 2);
        for s in &set {
            assert!((s.unknowns.d - 1.72393764).abs() < 1e-6);
            assert!(s.residual <= ACCEPT_RESIDUAL);
        }
    }

    #[test]
    fn zero_curvature_counts() {
        let short = CanonicalData::new(FRAC_PI_2, -FRAC_PI_2, 0.0, 0.0, 9.0 / 8.0).unwrap();
        let (set, diag) = solve_all_with_diagnostics(&short);
        assert!(set.is_empty());
        assert!(diag.best_residual > 0.0);
        assert_eq!(diag.converged, 0);
        let long = CanonicalData::new(FRAC_PI_2, -FRAC_PI_2, 0.0, 0.0, 2.0).unwrap();
        let set = solve_all(&long);
        assert_eq!(set.len(), 2);
        assert_eq!(set.signed_count(), 4);
        let d = set.d_values();
        assert!((d[0] - 1.10469691).abs() < 1e-6);
        assert!((d[1] - 2.96304653).abs() < 1e-6);
    }

    #[test]
    fn ellipse_example_rotation_index() {
        let data = CanonicalData::new(FRAC_PI_2, -FRAC_PI_2, -8.0, -8.0, 1.21106).unwrap();
        let set = solve_all(&data);
        let best = crate::metrics::select_best(&set, crate::metrics::Criterion::RotationIndex)
            .unwrap();
        assert!((best.unknowns.d - 0.93330754).abs() < 1e-6);
        assert!((rotation_index_abs(&best.curve) - PI).abs() < 5e-3);
    }
}
