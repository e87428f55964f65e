use std::ops::Neg;


use crate::bernstein::{binomial, de_casteljau};
use crate::error::{Error, Result};
use crate::Complex;

/// Below this value of `σ(t)` tangent and curvature are undefined.
pub const DEGENERATE_SIGMA: f64 = 1e-14;
/// Number of uniform samples used by [`Preimage::is_regular`].
pub const REGULARITY_SAMPLES: usize = 257;
pub const REGULARITY_THRESHOLD: f64 = 1e-12;

/// Cubic complex polynomial `w` in Bernstein form, `w_k = u_k + i v_k`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Preimage {
    pub w: [Complex; 4],
}

impl Preimage {
    pub fn new(w0: Complex, w1: Complex, w2: Complex, w3: Complex) -> Self {
        Self {
            w: [w0, w1, w2, w3],
        }
    }

    /// Preimage of a constant hodograph `r e^{iφ}`, i.e. a straight line of
    /// length `r²` in direction `2φ`.
    pub fn constant(c: Complex) -> Self {
        Self { w: [c; 4] }
    }

    pub fn eval(&self, t: f64) -> Complex {
        de_casteljau(&self.w, t)
    }

    /// Bernstein coefficients of `w'`, a quadratic.
    pub fn derivative_coeffs(&self) -> [Complex; 3] {
        let w = &self.w;
        [
            (w[1] - w[0]) * 3.0,
            (w[2] - w[1]) * 3.0,
            (w[3] - w[2]) * 3.0,
        ]
    }

    pub fn eval_derivative(&self, t: f64) -> Complex {
        de_casteljau(&self.derivative_coeffs(), t)
    }

    /// Parametric speed `σ(t) = |w(t)|²`.
    pub fn sigma(&self, t: f64) -> f64 {
        self.eval(t).norm_sqr()
    }

    fn checked_sigma(&self, t: f64) -> Result<(Complex, f64)> {
        let w = self.eval(t);
        let sigma = w.norm_sqr();
        if sigma < DEGENERATE_SIGMA {
            return Err(Error::DegeneratePreimage { t, sigma });
        }
        Ok((w, sigma))
    }

    /// Unit tangent `w²/σ`.
    pub fn unit_tangent(&self, t: f64) -> Result<Complex> {
        let (w, sigma) = self.checked_sigma(t)?;
        Ok(w * w / sigma)
    }

    /// `Im(w̄ w')`, the numerator of the curvature up to a factor of two.
    pub fn turning_numerator(&self, t: f64) -> f64 {
        (self.eval(t).conj() * self.eval_derivative(t)).im
    }

    /// Signed curvature `2 Im(w̄ w') / σ²`.
    pub fn curvature(&self, t: f64) -> Result<f64> {
        let (w, sigma) = self.checked_sigma(t)?;
        Ok(2.0 * (w.conj() * self.eval_derivative(t)).im / (sigma * sigma))
    }

    /// Closed form of `κ(0)`.
    pub fn curvature_start(&self) -> Result<f64> {
        let [w0, w1, _, _] = self.w;
        let m = w0.norm_sqr();
        if m < DEGENERATE_SIGMA {
            return Err(Error::DegeneratePreimage { t: 0.0, sigma: m });
        }
        Ok(6.0 * (w0.conj() * w1).im / (m * m))
    }

    /// Closed form of `κ(1)`.
    pub fn curvature_end(&self) -> Result<f64> {
        let [_, _, w2, w3] = self.w;
        let m = w3.norm_sqr();
        if m < DEGENERATE_SIGMA {
            return Err(Error::DegeneratePreimage { t: 1.0, sigma: m });
        }
        Ok(-6.0 * (w3.conj() * w2).im / (m * m))
    }

    /// Degree-6 Bernstein coefficients of `σ = |w|²`.
    pub fn sigma_coeffs(&self) -> [f64; 7] {
        let mut c = [0.0; 7];
        for (j, cj) in c.iter_mut().enumerate() {
            let lo = j.saturating_sub(3);
            let hi = j.min(3);
            let mut acc = 0.0;
            for k in lo..=hi {
                let weight = binomial(3, k as u32) * binomial(3, (j - k) as u32);
                acc += weight * (self.w[k] * self.w[j - k].conj()).re;
            }
            *cj = acc / binomial(6, j as u32);
        }
        c
    }

    /// Exact total arc length `∫₀¹ σ = (1/7) Σ c_j` over the degree-6
    /// Bernstein coefficients `c_j` of `σ`.
    ///
    /// The textbook expansion of this integral as a sum of `Re(w_i w̄_j)`
    /// terms is easy to mistype, so it is integrated from `sigma_coeffs`.
    pub fn arc_length_total(&self) -> f64 {
        self.sigma_coeffs().iter().sum::<f64>() / 7.0
    }

    /// Degree-7 Bernstein coefficients of `s(t) = ∫₀ᵗ σ`.
    pub fn arc_length_coeffs(&self) -> [f64; 8] {
        let c = self.sigma_coeffs();
        let mut s = [0.0; 8];
        for k in 1..8 {
            s[k] = s[k - 1] + c[k - 1] / 7.0;
        }
        s
    }

    pub fn arc_length_partial(&self, t: f64) -> f64 {
        de_casteljau(&self.arc_length_coeffs(), t)
    }

    /// Minimum of `σ` over uniform samples of `[0, 1]`.
    pub fn min_sigma_sampled(&self, samples: usize) -> f64 {
        let n = samples.max(2) - 1;
        (0..=n)
            .map(|i| self.sigma(i as f64 / n as f64))
            .fold(f64::INFINITY, f64::min)
    }

    /// Sampled regularity test (`σ > 1e-12` at 257 points). Not a proof.
    pub fn is_regular(&self) -> bool {
        self.min_sigma_sampled(REGULARITY_SAMPLES) > REGULARITY_THRESHOLD
    }

    pub fn scaled(&self, factor: Complex) -> Self {
        Self {
            w: self.w.map(|wk| wk * factor),
        }
    }
}

impl Neg for Preimage {
    type Output = Preimage;

    fn neg(self) -> Self::Output {
        Self {
            w: self.w.map(|wk| -wk),
        }
    }
}
