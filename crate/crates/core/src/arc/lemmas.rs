//! Numerical verification of the solvability lemmas for circular-arc data.
//!
//! None of this is needed to compute interpolants; it re-checks, for
//! concrete `α`, the inequalities that make the solver complete: the
//! nonsymmetric branch is empty, `d_max` is large enough, the checkpoint
//! signs of `p` alternate, and `p` has at most four real zeros.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::Serialize;

use super::{
    bracket_roots, d_max, poly_p_normalized, q_simple_zeros, solve_arc, BracketMethod,
};
use crate::error::{Error, Result};

/// `cos α (4α - 3 sin α) - 4 sin α + 3α`; `p(0) = -7200 f1²`.
pub fn f1(alpha: f64) -> f64 {
    let (s, c) = alpha.sin_cos();
    c * (4.0 * alpha - 3.0 * s) - 4.0 * s + 3.0 * alpha
}

/// `p(2) = -32 f2²`.
pub fn f2(alpha: f64) -> f64 {
    let (s, c) = alpha.sin_cos();
    45.0 * alpha - 2.0 * s * s * s - 66.0 * s + 60.0 * alpha * c + 6.0 * s * c * c
        - 45.0 * s * c
}

/// The only positive (double) zero of the resultant of the nonsymmetric
/// branch.
pub fn nonsymmetric_d1(alpha: f64) -> f64 {
    let (s, c) = alpha.sin_cos();
    let num = alpha * (3.0 - 4.0 * c) + (4.0 - 3.0 * c) * s;
    30f64.sqrt() / 4.0 * (num / (s * s * s)).sqrt()
}

/// Resultant (up to a positive factor) of the nonsymmetric pair with
/// respect to `u1`.
pub fn nonsymmetric_resultant(alpha: f64, d: f64) -> f64 {
    let (s, c) = alpha.sin_cos();
    let r = 16.0 * s * s * s * d * d + 30.0 * ((3.0 * c - 4.0) * s + alpha * (4.0 * c - 3.0));
    r * r
}

pub fn f_alpha(alpha: f64, d: f64) -> f64 {
    let d2 = d * d;
    960.0 * alpha - 8.0 * d2 * (d2 * d2 - 4.0 * d2 + 20.0) * alpha.sin()
        + d2 * (3.0 * d2 * d2 - 12.0 * d2 - 4.0) * (2.0 * alpha).sin()
}

/// Discriminant of the second nonsymmetric equation as a quadratic in `u1`.
pub fn nonsymmetric_discriminant(alpha: f64, d: f64) -> f64 {
    let h = 0.5 * alpha;
    504.0 * (2.0 * h.cos() + 6.0 * h.sin() * alpha.sin()) * h.sin() * f_alpha(alpha, d)
}

/// `g(α) = f_α(5/2)`.
pub fn g(alpha: f64) -> f64 {
    f_alpha(alpha, 2.5)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct NonsymmetricReport {
    pub alpha: f64,
    pub d1: f64,
    pub f_alpha_at_d1: f64,
    pub discriminant_at_d1: f64,
    /// Number of real nonsymmetric solutions with `d > 0` (always zero).
    pub solutions: usize,
}

/// Confirms that the branch `u2 = -u1 + d(d²-10) cos(α/2)/6` has no real
/// solutions for the given `α ∈ (0, π/2]`.
#[allow(clippy::neg_cmp_op_on_partial_ord)] // NaN must fail the checks
pub fn verify_nonsymmetric_empty(alpha: f64) -> Result<NonsymmetricReport> {
    if !(alpha > 0.0 && alpha <= FRAC_PI_2) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let d1 = nonsymmetric_d1(alpha);
    let fa = f_alpha(alpha, d1);
    let disc = nonsymmetric_discriminant(alpha, d1);
    if !(d1 > 2.5) {
        return Err(Error::Assertion(format!("d1 = {d1} <= 5/2 at alpha = {alpha}")));
    }
    if !(fa < 0.0) {
        return Err(Error::Assertion(format!("f_alpha(d1) = {fa} >= 0 at alpha = {alpha}")));
    }
    if !(disc < 0.0) {
        return Err(Error::Assertion(format!(
            "discriminant {disc} >= 0 at alpha = {alpha}"
        )));
    }
    Ok(NonsymmetricReport {
        alpha,
        d1,
        f_alpha_at_d1: fa,
        discriminant_at_d1: disc,
        solutions: 0,
    })
}

/// `α_k = kπ / (2n)`, `k = 1..n`.
pub fn default_grid(n: usize) -> Vec<f64> {
    (1..=n).map(|k| k as f64 * PI / (2 * n) as f64).collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub name: &'static str,
    pub alpha: f64,
    pub passed: bool,
    pub detail: String,
}

/// Outcome of all checks over an `α` grid.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LemmaSuite {
    pub checks: Vec<LemmaCheck>,
}

impl LemmaSuite {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &LemmaCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub const QUARTIC_SAMPLES: usize = 1024;

/// Runs every per-`α` check on `grid` plus the fixed spot values.
pub fn verify_lemmas(grid: &[f64]) -> LemmaSuite {
    let mut checks = Vec::new();
    let mut push = |name: &'static str, alpha: f64, passed: bool, detail: String| {
        checks.push(LemmaCheck {
            name,
            alpha,
            passed,
            detail,
        })
    };

    let g_half_pi = g(FRAC_PI_2);
    push(
        "g(pi/2) spot value",
        FRAC_PI_2,
        (g_half_pi - (-195.1605)).abs() < 5e-5,
        format!("g(pi/2) = {g_half_pi:.6}"),
    );
    let f2_half_pi = f2(FRAC_PI_2);
    push(
        "f2(pi/2) spot value",
        FRAC_PI_2,
        (f2_half_pi - (45.0 * PI - 136.0) / 2.0).abs() < 1e-12 && f2_half_pi > 0.0,
        format!("f2(pi/2) = {f2_half_pi:.12}"),
    );

    for &alpha in grid {
        match verify_nonsymmetric_empty(alpha) {
            Ok(r) => push(
                "nonsymmetric branch empty",
                alpha,
                true,
                format!(
                    "d1 = {:.6}, f_alpha(d1) = {:.6e}, disc = {:.6e}",
                    r.d1, r.f_alpha_at_d1, r.discriminant_at_d1
                ),
            ),
            Err(e) => push("nonsymmetric branch empty", alpha, false, e.to_string()),
        }

        let g_val = g(alpha);
        push("g(alpha) < 0", alpha, g_val < 0.0, format!("g = {g_val:.6e}"));

        let dm = d_max(alpha);
        push(
            "d_max > sqrt(10/3)",
            alpha,
            dm > (10.0f64 / 3.0).sqrt(),
            format!("d_max = {dm:.9}"),
        );

        let (f1v, f2v) = (f1(alpha), f2(alpha));
        push(
            "f1, f2 > 0 (zeros avoid x = 0, 2)",
            alpha,
            f1v > 0.0 && f2v > 0.0,
            format!("f1 = {f1v:.6e}, f2 = {f2v:.6e}"),
        );

        let p = poly_p_normalized(alpha);
        let p4 = p.derivative().derivative().derivative().derivative();
        let hi = 2.0 * dm * dm;
        let lo = -dm * dm;
        let max_p4 = (0..QUARTIC_SAMPLES)
            .map(|i| p4.eval(lo + (hi - lo) * i as f64 / (QUARTIC_SAMPLES - 1) as f64))
            .fold(f64::NEG_INFINITY, f64::max);
        push(
            "p'''' < 0 (at most four real zeros)",
            alpha,
            max_p4 < 0.0,
            format!("max p''''/sin^6 = {max_p4:.6e}"),
        );

        let brackets = bracket_roots(alpha);
        let (x3, _) = q_simple_zeros();
        let (passed, detail) = match brackets.method {
            BracketMethod::Checkpoints { y2 } if y2 == x3 => (true, "y2 = x3".to_string()),
            BracketMethod::Checkpoints { y2 } => (true, format!("y2 = {y2} (x3 fails)")),
            BracketMethod::Scan { .. } => (false, "checkpoint signs do not alternate".into()),
        };
        push("checkpoint signs alternate", alpha, passed, detail);

        match solve_arc(alpha) {
            Ok(set) => push(
                "four interpolants",
                alpha,
                set.len() == 4,
                format!("{} solutions, d = {:?}", set.len(), set.d_values()),
            ),
            Err(e) => push("four interpolants", alpha, false, e.to_string()),
        }
    }
    LemmaSuite { checks }
}
