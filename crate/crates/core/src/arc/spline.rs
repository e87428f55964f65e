//! Closed G² splines approximating a full circle by rotated copies of one
//! arc interpolant.

use std::f64::consts::PI;

use super::{solve_arc, ArcProblem};
use crate::error::{Error, Result};
use crate::metrics::{select_best, Criterion};
use crate::ph::Ph7Curve;
use crate::Complex;

#[derive(Clone, Debug, PartialEq)]
pub struct JointMismatch {
    pub position: f64,
    pub tangent: f64,
    pub curvature: f64,
}

#[derive(Clone, Debug)]
pub struct CircleSpline {
    pub alpha: f64,
    pub center: Complex,
    pub pieces: Vec<Ph7Curve>,
    /// Mismatch at the end of piece `i` / start of piece `i + 1` (cyclic).
    pub joints: Vec<JointMismatch>,
}

impl CircleSpline {
    pub fn total_length(&self) -> f64 {
        self.pieces.iter().map(Ph7Curve::arc_length).sum()
    }

    pub fn max_joint(&self) -> JointMismatch {
        self.joints.iter().fold(
            JointMismatch {
                position: 0.0,
                tangent: 0.0,
                curvature: 0.0,
            },
            |acc, j| JointMismatch {
                position: acc.position.max(j.position),
                tangent: acc.tangent.max(j.tangent),
                curvature: acc.curvature.max(j.curvature),
            },
        )
    }
}

/// `m` copies of the best interpolant of the arc with `α = π/m`, each
/// rotated by `-2α` about the arc centre relative to its predecessor.
pub fn circle_spline(m: usize) -> Result<CircleSpline> {
    if m < 2 {
        return Err(Error::InvalidInput(format!("need at least 2 segments, got {m}")));
    }
    let alpha = PI / m as f64;
    let problem = ArcProblem::new(alpha)?;
    let set = solve_arc(alpha)?;
    let best = select_best(&set, Criterion::CurvatureL2)?;
    let center = problem.center();
    let pieces: Vec<Ph7Curve> = (0..m)
        .map(|j| {
            let rot = Complex::from_polar(1.0, -2.0 * alpha * j as f64);
            // z ↦ c + rot (z - c)
            best.curve.transformed(center - rot * center, rot)
        })
        .collect();
    let joints = (0..m)
        .map(|i| {
            let a = &pieces[i];
            let b = &pieces[(i + 1) % m];
            Ok(JointMismatch {
                position: (a.end() - b.start()).norm(),
                tangent: (a.unit_tangent(1.0)? - b.unit_tangent(0.0)?).norm(),
                curvature: (a.curvature(1.0)? - b.curvature(0.0)?).abs(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CircleSpline {
        alpha,
        center,
        pieces,
        joints,
    })
}
