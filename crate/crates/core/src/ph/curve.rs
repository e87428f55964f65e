use super::Preimage;
use crate::bernstein::{de_casteljau, derivative};
use crate::error::Result;
use crate::Complex;

/// PH curve of degree seven in Bézier form together with its preimage.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ph7Curve {
    control: [Complex; 8],
    preimage: Preimage,
}

impl Ph7Curve {
    /// Integrates `w²` with integration constant `p0`.
    pub fn build(preimage: Preimage, p0: Complex) -> Self {
        let [w0, w1, w2, w3] = preimage.w;
        let increments = [
            w0 * w0,
            w0 * w1,
            (w1 * w1 * 3.0 + w0 * w2 * 2.0) / 5.0,
            (w1 * w2 * 9.0 + w0 * w3) / 10.0,
            (w2 * w2 * 3.0 + w1 * w3 * 2.0) / 5.0,
            w2 * w3,
            w3 * w3,
        ];
        let mut control = [p0; 8];
        for (k, inc) in increments.iter().enumerate() {
            control[k + 1] = control[k] + inc / 7.0;
        }
        Self { control, preimage }
    }

    pub fn control(&self) -> &[Complex; 8] {
        &self.control
    }

    pub fn preimage(&self) -> &Preimage {
        &self.preimage
    }

    pub fn start(&self) -> Complex {
        self.control[0]
    }

    pub fn end(&self) -> Complex {
        self.control[7]
    }

    pub fn eval(&self, t: f64) -> Complex {
        de_casteljau(&self.control, t)
    }

    /// Degree-6 control points of `p'` (differences scaled by seven).
    pub fn hodograph_control(&self) -> Vec<Complex> {
        derivative(&self.control)
    }

    /// `p'(t)` from the Bézier control net.
    pub fn derivative(&self, t: f64) -> Complex {
        de_casteljau(&self.hodograph_control(), t)
    }

    pub fn unit_tangent(&self, t: f64) -> Result<Complex> {
        self.preimage.unit_tangent(t)
    }

    pub fn curvature(&self, t: f64) -> Result<f64> {
        self.preimage.curvature(t)
    }

    pub fn arc_length(&self) -> f64 {
        self.preimage.arc_length_total()
    }

    pub fn arc_length_at(&self, t: f64) -> f64 {
        self.preimage.arc_length_partial(t)
    }

    /// Applies `z ↦ shift + spin·z`. The preimage is multiplied by the
    /// principal square root of `spin`.
    pub fn transformed(&self, shift: Complex, spin: Complex) -> Self {
        Self {
            control: self.control.map(|p| shift + spin * p),
            preimage: self.preimage.scaled(spin.sqrt()),
        }
    }

    /// Uniform parameter samples, end points included.
    pub fn polyline(&self, samples: usize) -> Vec<Complex> {
        let n = samples.max(2) - 1;
        (0..=n).map(|i| self.eval(i as f64 / n as f64)).collect()
    }
}
