//! Interpolation of data sampled from a circular arc.
//!
//! For an arc of inner angle `2α` in canonical position the general
//! five-equation system collapses to two equations in `(d, u1)` (the
//! symmetric branch `u2 = u1`, `v2 = -v1`; the other branch has no real
//! solutions, see [`lemmas`]). Eliminating `u1` leaves an even degree-12
//! polynomial in `d`, i.e. a degree-6 polynomial `p` in `x = d²`, whose
//! positive zeros are in one-to-one correspondence with the interpolants.
//! `u1` then follows from a linear equation.

pub mod lemmas;
pub mod spline;

use std::f64::consts::{FRAC_PI_2, PI};
use std::sync::OnceLock;

use crate::asymptotics;
use crate::canonical::CanonicalData;
use crate::error::{Error, Result};
use crate::poly::{sign_change_intervals, Polynomial};
use crate::solution::{CandidateSolution, SolutionSet, Unknowns};
use crate::Complex;

/// Largest `α` covered by the bracketing lemma.
pub const PROVEN_ALPHA_MAX: f64 = FRAC_PI_2;
/// Maximum primitive-condition violation accepted for a solution.
pub const RESIDUAL_TOL: f64 = 1e-9;
/// Sample count of the fallback sign scan on `(0, d_max²]`.
pub const SCAN_POINTS: usize = 4096;
/// Below this `α` the roots of `p` are seeded from the asymptotic series.
pub const SMALL_ALPHA: f64 = 1e-3;
/// Minimum separation of distinct `d` values in a solution set.
pub const MIN_D_GAP: f64 = 1e-8;

/// Circular-arc interpolation problem of half angle `α ∈ (0, π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ArcProblem {
    alpha: f64,
}

impl ArcProblem {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < PI) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// True for `α > π/2`, where root counts are observed but not proven.
    pub fn beyond_proven_region(&self) -> bool {
        self.alpha > PROVEN_ALPHA_MAX
    }

    pub fn data(&self) -> CanonicalData {
        let a = self.alpha;
        let kappa = -2.0 * a.sin();
        CanonicalData {
            theta0: a,
            theta1: -a,
            k0: kappa,
            k1: kappa,
            length: 1.0 + alpha_csc_minus_one(a),
        }
    }

    pub fn radius(&self) -> f64 {
        0.5 / self.alpha.sin()
    }

    pub fn center(&self) -> Complex {
        Complex::new(0.5, -0.5 / self.alpha.tan())
    }
}

/// Canonical data of the arc: `θ0 = -θ1 = α`, `κ0 = κ1 = -2 sin α`,
/// `L = α / sin α`.
pub fn arc_data(alpha: f64) -> Result<CanonicalData> {
    Ok(ArcProblem::new(alpha)?.data())
}

/// `α - sin α` without cancellation for small `α`.
pub fn alpha_minus_sin(alpha: f64) -> f64 {
    if alpha.abs() >= 0.5 {
        return alpha - alpha.sin();
    }
    let a2 = alpha * alpha;
    let mut term = alpha * a2 / 6.0;
    let mut sum: f64 = 0.0;
    let mut k = 3.0;
    while term.abs() > 1e-18 * sum.abs() {
        sum += term;
        term *= -a2 / ((k + 1.0) * (k + 2.0));
        k += 2.0;
    }
    sum
}

/// `α csc α - 1`, i.e. the relative excess of arc length over chord.
pub fn alpha_csc_minus_one(alpha: f64) -> f64 {
    alpha_minus_sin(alpha) / alpha.sin()
}

/// Half-width of the `d` range of the degree-6 curve in the `(d, u1)` plane.
pub fn d_max(alpha: f64) -> f64 {
    (5.0 * alpha_csc_minus_one(alpha)).sqrt() / (0.5 * alpha).sin()
}

/// The degree-6 polynomial `p(x) = p1(√x)` whose positive zeros are the
/// squares of admissible `d`.
pub fn poly_p(alpha: f64) -> Polynomial {
    let s = alpha.sin();
    let s3 = s * s * s;
    let s6 = s3 * s3;
    let c = alpha.cos();
    let sin2 = (2.0 * alpha).sin();
    let sin3 = (3.0 * alpha).sin();
    let csc_half2 = 1.0 / (0.5 * alpha).sin().powi(2);
    let root = 6.0 * alpha + 8.0 * alpha * c - 2.0 * s * (3.0 * c + 4.0);
    Polynomial::new(vec![
        -1800.0 * root * root,
        13440.0 * alpha_minus_sin(alpha) * s3 * s * s * csc_half2,
        96.0 * s3 * (-160.0 * alpha + 99.0 * s + 80.0 * sin2 + 7.0 * sin3 - 120.0 * alpha * c),
        -96.0 * s3 * (-40.0 * alpha + 9.0 * s + 20.0 * sin2 + 7.0 * sin3 - 30.0 * alpha * c),
        -1184.0 * s6,
        256.0 * s6,
        -32.0 * s6,
    ])
}

/// `p / sin⁶α`; same zeros, coefficients of order one for small `α`.
pub fn poly_p_normalized(alpha: f64) -> Polynomial {
    let s = alpha.sin();
    let s3 = s * s * s;
    let c = alpha.cos();
    let sin2 = (2.0 * alpha).sin();
    let sin3 = (3.0 * alpha).sin();
    let half = (0.5 * alpha).sin();
    let f1 = lemmas::f1(alpha);
    Polynomial::new(vec![
        -7200.0 * (f1 / s3) * (f1 / s3),
        13440.0 * alpha_minus_sin(alpha) / (s * half * half),
        96.0 * (-160.0 * alpha + 99.0 * s + 80.0 * sin2 + 7.0 * sin3 - 120.0 * alpha * c) / s3,
        -96.0 * (-40.0 * alpha + 9.0 * s + 20.0 * sin2 + 7.0 * sin3 - 30.0 * alpha * c) / s3,
        -1184.0,
        256.0,
        -32.0,
    ])
}

/// Leading small-`α` shape of `p`: `p(x) ≈ -32 α⁶ q(x)`.
pub fn limit_poly_q() -> Polynomial {
    Polynomial::from_descending(&[1.0, -8.0, 37.0, -134.0, 284.0, -280.0, 100.0])
}

/// The simple real zeros `x3 ≈ 2.1842` and `x4 ≈ 3.2872` of `q`
/// (`x1 = x2 = 1` is a double zero).
pub fn q_simple_zeros() -> (f64, f64) {
    static ZEROS: OnceLock<(f64, f64)> = OnceLock::new();
    *ZEROS.get_or_init(|| {
        let q = limit_poly_q();
        let x3 = q.refine_root(2.0, 2.5).expect("q changes sign on [2, 2.5]");
        let x4 = q.refine_root(3.0, 3.5).expect("q changes sign on [3, 3.5]");
        (x3, x4)
    })
}

#[derive(Clone, Debug, PartialEq)]
pub enum BracketMethod {
    /// Alternating signs at `0, 1, y2, x4, d_max²`.
    Checkpoints { y2: f64 },
    /// Uniform sign scan of `(0, d_max²]`.
    Scan { points: usize },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Brackets {
    pub method: BracketMethod,
    pub intervals: Vec<(f64, f64)>,
}

/// Checkpoints `y0..y4` with the given `y2`.
pub fn checkpoints(alpha: f64, y2: f64) -> [f64; 5] {
    let (_, x4) = q_simple_zeros();
    let dm = d_max(alpha);
    [0.0, 1.0, y2, x4, dm * dm]
}

/// Whether `p` alternates in sign over the checkpoints.
pub fn checkpoints_alternate(p: &Polynomial, ys: &[f64; 5]) -> bool {
    ys.windows(2).all(|w| {
        let a = p.eval(w[0]);
        let b = p.eval(w[1]);
        w[0] < w[1] && a * b < 0.0
    })
}

/// Sign-change intervals of `p` containing its positive zeros.
///
/// For `α ≤ π/2` the checkpoints `0, 1, x3, x4, d_max²` are tried first,
/// then the same set with `y2 = 2` (needed near `α = π/2`). If neither
/// alternates, or for `α > π/2`, a 4096-point sign scan of `(0, d_max²]`
/// is used instead.
pub fn bracket_roots(alpha: f64) -> Brackets {
    let p = poly_p_normalized(alpha);
    if alpha <= PROVEN_ALPHA_MAX {
        let (x3, _) = q_simple_zeros();
        for y2 in [x3, 2.0] {
            let ys = checkpoints(alpha, y2);
            if checkpoints_alternate(&p, &ys) {
                return Brackets {
                    method: BracketMethod::Checkpoints { y2 },
                    intervals: ys.windows(2).map(|w| (w[0], w[1])).collect(),
                };
            }
        }
    }
    let dm = d_max(alpha);
    let hi = dm * dm;
    let xs: Vec<f64> = (0..SCAN_POINTS)
        .map(|i| hi * i as f64 / (SCAN_POINTS - 1) as f64)
        .collect();
    Brackets {
        method: BracketMethod::Scan {
            points: SCAN_POINTS,
        },
        intervals: sign_change_intervals(&xs, |x| p.eval(x)),
    }
}

/// Solves the linear equation for `u1` at a zero `d` of `p1`.
pub fn u1_from_d(alpha: f64, d: f64) -> Result<f64> {
    let d2 = d * d;
    if d.abs() <= 1e-10 || (d2 - 2.0).abs() <= 1e-10 {
        return Err(Error::PoleInU1 { d2 });
    }
    let half = 0.5 * alpha;
    let sec = 1.0 / half.cos();
    let csc = 1.0 / half.sin();
    let m = alpha_csc_minus_one(alpha);
    let constant = 210.0 * csc * csc * m
        + sec * sec * (-30.0 * (2.0 + m) + 9.0 * d2 * alpha.cos() + 9.0 * d2)
        - 8.0 * d2 * d2 * d2
        + 48.0 * d2 * d2
        - 114.0 * d2;
    Ok(-constant / (24.0 * d * (d2 - 2.0) * sec))
}

/// `v1` from the curvature condition at `t = 0`.
pub fn v1_from(alpha: f64, d: f64, u1: f64) -> f64 {
    let half = 0.5 * alpha;
    half.tan() / 3.0 * (3.0 * u1 - 2.0 * d * d * d * half.cos())
}

/// Left-hand sides of the two-equation symmetric system in `(d, u1)`: an
/// ellipse and a degree-6 curve.
pub fn symmetric_residuals(alpha: f64, d: f64, u1: f64) -> [f64; 2] {
    let half = 0.5 * alpha;
    let (sh, ch) = half.sin_cos();
    let m = alpha_csc_minus_one(alpha);
    let d2 = d * d;
    let e1 = 3.0 * (1.0 + alpha.cos()) * d2 + 8.0 * ch * d * u1 + 6.0 * u1 * u1 - 10.0 * (2.0 + m);
    let e2 = 4.0 * d2 * d2 * d2 - 24.0 * d2 * d2 + 57.0 * d2 - 12.0 / ch * d * (d2 - 3.0) * u1
        + 9.0 / (ch * ch) * u1 * u1
        - 105.0 / (sh * sh) * m;
    [e1, e2]
}

fn symmetric_jacobian(alpha: f64, d: f64, u1: f64) -> [[f64; 2]; 2] {
    let ch = (0.5 * alpha).cos();
    let d2 = d * d;
    [
        [
            6.0 * (1.0 + alpha.cos()) * d + 8.0 * ch * u1,
            8.0 * ch * d + 12.0 * u1,
        ],
        [
            24.0 * d2 * d2 * d - 96.0 * d2 * d + 114.0 * d - 12.0 / ch * (3.0 * d2 - 3.0) * u1,
            -12.0 / ch * d * (d2 - 3.0) + 18.0 / (ch * ch) * u1,
        ],
    ]
}

/// Newton polish of `(d, u1)` on the symmetric system. Returns the iterate
/// with the smallest residual; never moves further than `max_move` away.
pub fn polish_symmetric(alpha: f64, d: f64, u1: f64, max_move: f64) -> (f64, f64) {
    let norm = |r: [f64; 2]| r[0].abs().max(r[1].abs());
    let (mut x, mut y) = (d, u1);
    let mut best = (x, y, norm(symmetric_residuals(alpha, x, y)));
    for _ in 0..12 {
        let r = symmetric_residuals(alpha, x, y);
        let j = symmetric_jacobian(alpha, x, y);
        let det = j[0][0] * j[1][1] - j[0][1] * j[1][0];
        if det == 0.0 || !det.is_finite() {
            break;
        }
        let dx = (r[0] * j[1][1] - r[1] * j[0][1]) / det;
        let dy = (j[0][0] * r[1] - j[1][0] * r[0]) / det;
        x -= dx;
        y -= dy;
        if (x - d).abs() > max_move || (y - u1).abs() > max_move {
            break;
        }
        let rn = norm(symmetric_residuals(alpha, x, y));
        if rn < best.2 {
            best = (x, y, rn);
        }
        if dx.abs() <= 1e-16 * x.abs() && dy.abs() <= 1e-16 * (1.0 + y.abs()) {
            break;
        }
    }
    (best.0, best.1)
}

/// Builds the symmetric interpolant for a root pair `(d, u1)` and checks
/// it against the primitive conditions.
#[allow(clippy::neg_cmp_op_on_partial_ord)]
pub fn assemble_solution(alpha: f64, d: f64, u1: f64) -> Result<CandidateSolution> {
    let problem = ArcProblem::new(alpha)?;
    let v1 = v1_from(alpha, d, u1);
    let unknowns = Unknowns::new(d, u1, v1, u1, -v1);
    let solution = CandidateSolution::new(unknowns, &problem.data())?;
    if !(solution.residual <= RESIDUAL_TOL) {
        return Err(Error::ResidualTooLarge(solution.residual));
    }
    Ok(solution)
}

/// Squared-`d` candidates: refined zeros of `p`, or series seeds for tiny `α`.
fn root_candidates(alpha: f64) -> Result<Vec<f64>> {
    if alpha < SMALL_ALPHA {
        return Ok(asymptotics::z_seeds(alpha).to_vec());
    }
    let p = poly_p_normalized(alpha);
    bracket_roots(alpha)
        .intervals
        .iter()
        .filter(|(_, hi)| *hi > 0.0)
        .map(|&(lo, hi)| p.refine_root(lo, hi))
        .collect()
}

/// All interpolants of the arc with half angle `α`, sorted by `d`.
pub fn solve_arc(alpha: f64) -> Result<SolutionSet> {
    let problem = ArcProblem::new(alpha)?;
    let mut solutions: Vec<CandidateSolution> = Vec::new();
    for z in root_candidates(alpha)? {
        if z <= 0.0 {
            continue;
        }
        let d0 = z.sqrt();
        let u0 = u1_from_d(alpha, d0)?;
        let (d, u1) = polish_symmetric(alpha, d0, u0, 1e-3 * (1.0 + d0.abs() + u0.abs()));
        let candidate = assemble_solution(alpha, d, u1)?;
        if solutions
            .iter()
            .all(|s| (s.unknowns.d - candidate.unknowns.d).abs() > MIN_D_GAP)
        {
            solutions.push(candidate);
        }
    }
    Ok(SolutionSet::new(problem.data(), solutions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, FRAC_PI_8};

    #[test]
    fn arc_data_examples() {
        let d = arc_data(FRAC_PI_2).unwrap();
        assert_eq!(d.theta0, FRAC_PI_2);
        assert_eq!(d.theta1, -FRAC_PI_2);
        assert!((d.k0 + 2.0).abs() < 1e-15 && (d.k1 + 2.0).abs() < 1e-15);
        assert!((d.length - FRAC_PI_2).abs() < 1e-15);
        let big = arc_data(5.0 * PI / 6.0).unwrap();
        assert!((big.k0 + 1.0).abs() < 1e-14);
        assert!((big.length - 5.0 * PI / 3.0).abs() < 1e-14);
        let tiny = arc_data(1e-4).unwrap();
        assert!(tiny.length > 1.0 && tiny.length - 1.0 < 2e-9);
        assert!(arc_data(0.0).is_err());
        assert!(arc_data(PI).is_err());
        assert!(arc_data(-0.1).is_err());
    }

    #[test]
    fn alpha_minus_sin_is_accurate() {
        for &a in &[1e-6, 1e-3, 0.1, 0.49, 0.51, 1.0] {
            let series_free = a - f64::sin(a);
            let v = alpha_minus_sin(a);
            if a > 0.1 {
                assert!((v - series_free).abs() < 1e-15);
            }
            if a > 0.6 {
                continue;
            }
            // a - sin a = a³/6 (1 - a²/20 + …)
            let approx = a.powi(3) / 6.0 * (1.0 - a * a / 20.0 + a.powi(4) / 840.0);
            assert!((v - approx).abs() <= 1e-6 * approx);
        }
        let a: f64 = 1e-6;
        assert!((alpha_minus_sin(a) - a.powi(3) / 6.0).abs() < 1e-30);
    }

    #[test]
    fn constant_term_two_forms() {
        for &a in &[0.2, FRAC_PI_4, 1.2, FRAC_PI_2] {
            let p0 = poly_p(a).eval(0.0);
            let inner = 6.0 * a + 8.0 * a * a.cos() - 2.0 * a.sin() * (3.0 * a.cos() + 4.0);
            assert!((p0 + 1800.0 * inner * inner).abs() <= 1e-12 * p0.abs());
            let f1 = lemmas::f1(a);
            assert!((p0 + 7200.0 * f1 * f1).abs() <= 1e-12 * p0.abs());
            assert!(p0 < 0.0);
        }
    }

    #[test]
    fn normalized_matches_raw() {
        for &a in &[0.1, 0.9, FRAC_PI_2, 2.5] {
            let raw = poly_p(a);
            let norm = poly_p_normalized(a);
            let s6 = a.sin().powi(6);
            for (r, n) in raw.coeffs().iter().zip(norm.coeffs()) {
                assert!((r / s6 - n).abs() <= 1e-11 * n.abs().max(1.0));
            }
        }
    }

    #[test]
    fn small_alpha_shape_is_q() {
        let a: f64 = 1e-3;
        let p = poly_p(a);
        let q = limit_poly_q();
        for &x in &[0.5, 1.5, 3.0] {
            let ratio = p.eval(x) / (-32.0 * a.powi(6));
            assert!((ratio - q.eval(x)).abs() <= 1e-3 * q.eval(x).abs());
        }
    }

    #[test]
    fn q_zeros() {
        let (x3, x4) = q_simple_zeros();
        assert!((x3 - 2.1842).abs() < 5e-5);
        assert!((x4 - 3.2872).abs() < 5e-5);
        let q = limit_poly_q();
        assert!(q.eval(1.0).abs() < 1e-12);
        assert!(q.derivative().eval(1.0).abs() < 1e-12);
    }

    #[test]
    fn quartic_derivative_closed_form() {
        for &a in &[0.3, 1.0, FRAC_PI_2, 2.8] {
            let p4 = poly_p(a).derivative().derivative().derivative().derivative();
            let s6 = a.sin().powi(6);
            for &x in &[-1.0, 0.0, 1.3, 4.0] {
                let expected = -768.0 * s6 * (15.0 * x * x - 40.0 * x + 37.0);
                assert!((p4.eval(x) - expected).abs() <= 1e-10 * expected.abs());
            }
        }
    }

    #[test]
    fn brackets_quarter_and_semicircle() {
        let b = bracket_roots(FRAC_PI_4);
        assert_eq!(b.intervals.len(), 4);
        assert!(matches!(b.method, BracketMethod::Checkpoints { y2 } if y2 > 2.1));
        let b = bracket_roots(FRAC_PI_2);
        assert_eq!(b.method, BracketMethod::Checkpoints { y2: 2.0 });
        assert_eq!(b.intervals.len(), 4);
        let b = bracket_roots(5.0 * PI / 6.0);
        assert!(matches!(b.method, BracketMethod::Scan { .. }));
        assert_eq!(b.intervals.len(), 2);
    }

    #[test]
    fn d_max_bound_at_semicircle() {
        let dm = d_max(FRAC_PI_2);
        let expected = 2f64.sqrt() * (5.0 * (FRAC_PI_2 - 1.0)).sqrt();
        assert!((dm - expected).abs() < 1e-14);
        assert!(dm > (10.0f64 / 3.0).sqrt());
    }

    #[test]
    fn u1_pole_is_reported() {
        assert!(matches!(
            u1_from_d(1.0, 2f64.sqrt()),
            Err(Error::PoleInU1 { .. })
        ));
        assert!(u1_from_d(1.0, 0.0).is_err());
    }

    #[test]
    fn semicircle_solutions() {
        let set = solve_arc(FRAC_PI_2).unwrap();
        assert_eq!(set.len(), 4);
        let d2 = set.get(1).unwrap().unknowns.d;
        assert!((d2 - 1.2756).abs() < 5e-4);
        for s in &set {
            assert!(s.curve.start().norm() < 1e-12);
            assert!((s.curve.end() - Complex::new(1.0, 0.0)).norm() < 1e-12);
            assert!((s.curve.curvature(0.0).unwrap() + 2.0).abs() < 1e-9);
            let g = s.curve.unit_tangent(0.0).unwrap();
            assert!((g - Complex::new(0.0, 1.0)).norm() < 1e-10);
            // mirror symmetry about Re z = 1/2
            let c = s.curve.control();
            for k in 0..8 {
                let mirrored = Complex::new(1.0 - c[7 - k].re, c[7 - k].im);
                assert!((c[k] - mirrored).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn counts_for_standard_angles() {
        for &a in &[FRAC_PI_2, PI / 3.0, FRAC_PI_4, FRAC_PI_8] {
            assert_eq!(solve_arc(a).unwrap().len(), 4, "alpha = {a}");
        }
        assert_eq!(solve_arc(5.0 * PI / 6.0).unwrap().len(), 2);
    }

    #[test]
    fn solutions_solve_symmetric_system() {
        for &a in &[0.3, 1.0, FRAC_PI_2, 2.6] {
            let set = solve_arc(a).unwrap();
            let dm = d_max(a);
            for s in &set {
                let r = symmetric_residuals(a, s.unknowns.d, s.unknowns.u1);
                assert!(r[0].abs() < 1e-9 && r[1].abs() < 1e-9);
                assert!(s.unknowns.d > 0.0 && s.unknowns.d < dm);
                assert_eq!(s.unknowns.u2, s.unknowns.u1);
                assert_eq!(s.unknowns.v2, -s.unknowns.v1);
            }
        }
    }

    #[test]
    fn tiny_alpha_uses_series_seeds() {
        let set = solve_arc(5e-4).unwrap();
        assert_eq!(set.len(), 4);
        let d = set.d_values();
        assert!(d.windows(2).all(|w| w[1] - w[0] > MIN_D_GAP));
    }
}
