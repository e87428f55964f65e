//! Bernstein / Bézier helpers shared by the curve and preimage code.

use std::ops::{Add, Mul};

/// Evaluates a Bézier polynomial by de Casteljau's algorithm.
pub fn de_casteljau<T>(coeffs: &[T], t: f64) -> T
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    assert!(!coeffs.is_empty());
    let mut work: Vec<T> = coeffs.to_vec();
    let s = 1.0 - t;
    for n in (1..work.len()).rev() {
        for k in 0..n {
            work[k] = work[k] * s + work[k + 1] * t;
        }
    }
    work[0]
}

pub fn binomial(n: u32, k: u32) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, i| acc * f64::from(n - i) / f64::from(i + 1))
}

/// `B_k^n(t)` evaluated directly.
pub fn basis(n: u32, k: u32, t: f64) -> f64 {
    binomial(n, k) * t.powi(k as i32) * (1.0 - t).powi((n - k) as i32)
}

/// Control points of the derivative of a Bézier polynomial.
pub fn derivative<T>(coeffs: &[T]) -> Vec<T>
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T>,
{
    let n = (coeffs.len() - 1) as f64;
    coeffs
        .windows(2)
        .map(|w| w[1] * n + w[0] * (-n))
        .collect()
}
