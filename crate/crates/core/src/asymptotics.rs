//! Small-`α` expansions of the arc interpolants and the empirical
//! approximation-order study.

use std::f64::consts::PI;

use serde::Serialize;

use crate::arc::{q_simple_zeros, solve_arc};
use crate::error::{Error, Result};
use crate::metrics::radial_distance;

fn sqrt82() -> f64 {
    82f64.sqrt()
}

/// `(power, coefficient)` pairs of a truncated series in `α`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesCoefficients {
    pub d2: Vec<(i32, f64)>,
    pub u12: Vec<(i32, f64)>,
    pub v12: Vec<(i32, f64)>,
}

impl SeriesCoefficients {
    pub fn branch_two() -> Self {
        let r = sqrt82();
        SeriesCoefficients {
            d2: vec![
                (0, 1.0),
                (2, (r - 2.0) / 78.0),
                (4, (37966.0 + 10579.0 * r) / 19456632.0),
            ],
            u12: vec![
                (0, 1.0),
                (2, (73.0 - 4.0 * r) / 312.0),
                (4, -(3071515.0 - 636632.0 * r) / 311306112.0),
            ],
            v12: vec![
                (1, 1.0 / 6.0),
                (3, (371.0 - 36.0 * r) / 1872.0),
                (5, -(8660963.0 - 1179080.0 * r) / 1037687040.0),
            ],
        }
    }
}

fn eval_series(terms: &[(i32, f64)], alpha: f64) -> f64 {
    terms.iter().rev().map(|&(k, c)| c * alpha.powi(k)).sum()
}

/// `c_{2,2} = (√82 - 2)/39`, the `α²` coefficient of `z2 = d2²`.
pub fn c22() -> f64 {
    (sqrt82() - 2.0) / 39.0
}

/// `c_{1,2} = (-2 - √82)/39`, the other root of the same quadratic.
pub fn c12() -> f64 {
    (-2.0 - sqrt82()) / 39.0
}

/// `d2` through the `α⁴` term.
pub fn d2_series(alpha: f64) -> f64 {
    eval_series(&SeriesCoefficients::branch_two().d2, alpha)
}

/// `u_{1,2} = u_{2,2}` through the `α⁴` term.
pub fn u12_series(alpha: f64) -> f64 {
    eval_series(&SeriesCoefficients::branch_two().u12, alpha)
}

/// `v_{1,2} = -v_{2,2}` through the `α⁵` term.
pub fn v12_series(alpha: f64) -> f64 {
    eval_series(&SeriesCoefficients::branch_two().v12, alpha)
}

/// Starting values for the four zeros `z1 < z2 < z3 < z4` of `p`.
pub fn z_seeds(alpha: f64) -> [f64; 4] {
    let (x3, x4) = q_simple_zeros();
    let a2 = alpha * alpha;
    let d2 = d2_series(alpha);
    [1.0 + c12() * a2, d2 * d2, x3, x4]
}

/// Leading-order behaviour `c αᵏ` of `p` at the checkpoints
/// `0, 1, x3, x4, d_max²`.
pub const CHECKPOINT_LEADING: [(f64, i32); 5] = [
    (-3200.0, 6),
    (64.0, 10),
    (-52.3867, 8),
    (2292.89, 8),
    (-156800.0 / 729.0, 6),
];

pub fn checkpoint_leading(alpha: f64) -> [f64; 5] {
    CHECKPOINT_LEADING.map(|(c, k)| c * alpha.powi(k))
}

pub fn radial_constant_branch2() -> f64 {
    (47773.0 - 5264.0 * sqrt82()) / 318898944.0
}

pub fn radial_constant_branch1() -> f64 {
    (47773.0 + 5264.0 * sqrt82()) / 318898944.0
}

/// Leading term of the radial distance of branch `1..=4`.
pub fn predicted_radial(alpha: f64, branch: usize) -> Result<f64> {
    match branch {
        1 => Ok(radial_constant_branch1() * alpha.powi(7)),
        2 => Ok(radial_constant_branch2() * alpha.powi(7)),
        3 => Ok(0.0173 * alpha),
        4 => Ok(0.1246 * alpha),
        _ => Err(Error::InvalidInput(format!("branch must be 1..=4, got {branch}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderStudyRow {
    pub alpha: f64,
    pub e: f64,
    /// `log2(e_prev / e)`; absent in the first row.
    pub r: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OrderStudyBranch {
    pub branch: usize,
    pub rows: Vec<OrderStudyRow>,
}

/// Radial distances of the four branches for `α = π/2ⁿ`, `n = 1..=n_max`,
/// with successive order estimates.
pub fn order_study(n_max: usize) -> Result<Vec<OrderStudyBranch>> {
    if n_max < 2 {
        return Err(Error::InvalidInput(format!("n_max must be at least 2, got {n_max}")));
    }
    let per_alpha = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..=n_max)
            .map(|n| {
                scope.spawn(move || -> Result<(f64, Vec<f64>)> {
                    let alpha = PI / 2f64.powi(n as i32);
                    let set = solve_arc(alpha)?;
                    if set.len() != 4 {
                        return Err(Error::Assertion(format!(
                            "expected 4 solutions at alpha = {alpha}, got {}",
                            set.len()
                        )));
                    }
                    let e = set.iter().map(|s| radial_distance(&s.curve, alpha).0).collect();
                    Ok((alpha, e))
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("order study worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;

    Ok((0..4)
        .map(|b| {
            let mut rows: Vec<OrderStudyRow> = Vec::with_capacity(n_max);
            for (alpha, e) in &per_alpha {
                let e = e[b];
                let r = rows.last().map(|prev| (prev.e / e).log2());
                rows.push(OrderStudyRow { alpha: *alpha, e, r });
            }
            OrderStudyBranch { branch: b + 1, rows }
        })
        .collect())
}
