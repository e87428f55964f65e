//! Dense real polynomials with bracketed root refinement.

use crate::error::{Error, Result};

pub const MAX_REFINE_ITERATIONS: usize = 200;

/// Real polynomial stored with ascending coefficients, `c[0] + c[1] x + …`.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial {
    coeffs: Vec<f64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self { coeffs }
    }

    /// Builds from coefficients listed highest degree first.
    pub fn from_descending(coeffs: &[f64]) -> Self {
        Self {
            coeffs: coeffs.iter().rev().copied().collect(),
        }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Value together with `Σ |c_k| |x|^k`, the natural rounding scale.
    pub fn eval_with_scale(&self, x: f64) -> (f64, f64) {
        let ax = x.abs();
        self.coeffs
            .iter()
            .rev()
            .fold((0.0, 0.0), |(v, s), &c| (v * x + c, s * ax + c.abs()))
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::new(vec![0.0]);
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| k as f64 * c)
                .collect(),
        )
    }

    pub fn scaled(&self, factor: f64) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Root inside a sign-change interval by safeguarded Newton iteration.
    ///
    /// Stops when `|p(x)| ≤ 1e-13 Σ|c_k||x|^k` or the bracket is narrower
    /// than `1e-14 (1 + |x|)`. Newton steps that leave the bracket or fail to
    /// halve the residual are replaced by bisection.
    pub fn refine_root(&self, lo: f64, hi: f64) -> Result<f64> {
        let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        let fa = self.eval(a);
        let fb = self.eval(b);
        if fa == 0.0 {
            return Ok(a);
        }
        if fb == 0.0 {
            return Ok(b);
        }
        if fa.signum() == fb.signum() {
            return Err(Error::NoSignChange { lo: a, hi: b });
        }
        let sign_a = fa.signum();
        let dp = self.derivative();
        let mut x = 0.5 * (a + b);
        let mut last_f = f64::INFINITY;
        for _ in 0..MAX_REFINE_ITERATIONS {
            let (f, scale) = self.eval_with_scale(x);
            if f.abs() <= 1e-13 * scale {
                return Ok(x);
            }
            if f.signum() == sign_a {
                a = x;
            } else {
                b = x;
            }
            if (b - a).abs() <= 1e-14 * (1.0 + x.abs()) {
                return Ok(0.5 * (a + b));
            }
            let df = dp.eval(x);
            let newton = x - f / df;
            let use_newton =
                newton.is_finite() && newton > a && newton < b && f.abs() < 0.5 * last_f;
            last_f = f.abs();
            x = if use_newton { newton } else { 0.5 * (a + b) };
        }
        Err(Error::NoConvergence {
            iterations: MAX_REFINE_ITERATIONS,
        })
    }

    /// Sign-change intervals of a uniform `n`-point scan of `[lo, hi]`.
    pub fn scan_sign_changes(&self, lo: f64, hi: f64, n: usize) -> Vec<(f64, f64)> {
        let n = n.max(2);
        let xs: Vec<f64> = (0..n)
            .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
            .collect();
        sign_change_intervals(&xs, |x| self.eval(x))
    }
}

/// Consecutive pairs of `points` on which `f` changes sign. An exact zero
/// at a sample is reported as a degenerate interval.
pub fn sign_change_intervals<F: Fn(f64) -> f64>(points: &[f64], f: F) -> Vec<(f64, f64)> {
    let values: Vec<f64> = points.iter().map(|&x| f(x)).collect();
    let mut out = Vec::new();
    for i in 0..points.len().saturating_sub(1) {
        let (fa, fb) = (values[i], values[i + 1]);
        if fa == 0.0 {
            out.push((points[i], points[i]));
        } else if fb != 0.0 && fa.signum() != fb.signum() {
            out.push((points[i], points[i + 1]));
        }
    }
    if let Some(&last) = values.last() {
        if last == 0.0 {
            let x = points[points.len() - 1];
            out.push((x, x));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_and_derivative() {
        let p = Polynomial::from_descending(&[1.0, -7.0, 10.0]); // (x-2)(x-5)
        assert_eq!(p.eval(2.0), 0.0);
        assert_eq!(p.eval(0.0), 10.0);
        assert_eq!(p.derivative().coeffs(), &[-7.0, 2.0]);
        assert_eq!(p.degree(), 2);
    }

    #[test]
    fn refine_simple_root() {
        let p = Polynomial::from_descending(&[1.0, -7.0, 10.0]);
        let r = p.refine_root(1.0, 3.0).unwrap();
        assert!((r - 2.0).abs() < 1e-14);
        let r = p.refine_root(6.0, 3.0).unwrap();
        assert!((r - 5.0).abs() < 1e-13);
    }

    #[test]
    fn refine_requires_sign_change() {
        let p = Polynomial::from_descending(&[1.0, -7.0, 10.0]);
        assert!(matches!(
            p.refine_root(2.5, 4.5),
            Err(Error::NoSignChange { .. })
        ));
    }

    #[test]
    fn refine_steep_and_flat() {
        // x^9 - 1e-9 has a root at 0.1 with tiny derivative nearby
        let mut c = vec![0.0; 10];
        c[0] = -1e-9;
        c[9] = 1.0;
        let p = Polynomial::new(c);
        let r = p.refine_root(0.0, 1.0).unwrap();
        assert!((r - 0.1).abs() < 1e-6);
        assert!(p.eval(r).abs() <= 1e-13 * p.eval_with_scale(r).1);
    }

    #[test]
    fn scan_finds_all_simple_roots() {
        let p = Polynomial::from_descending(&[1.0, -6.0, 11.0, -6.0]); // 1,2,3
        let iv = p.scan_sign_changes(0.5, 3.7, 100);
        assert_eq!(iv.len(), 3);
        let roots: Vec<f64> = iv.iter().map(|&(a, b)| p.refine_root(a, b).unwrap()).collect();
        for (r, e) in roots.iter().zip([1.0, 2.0, 3.0]) {
            assert!((r - e).abs() < 1e-13);
        }
    }
}
