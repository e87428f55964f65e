//! Interpolation data and the canonical frame.
//!
//! Any planar G² + length problem is mapped by translation, rotation and
//! uniform scaling to end points `0` and `1`. Curvatures scale with the chord
//! length, the arc length scales inversely.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ph::Ph7Curve;
use crate::Complex;

/// Tangents further than this from unit length are rejected.
pub const TANGENT_NORMALIZE_TOL: f64 = 1e-6;
/// Tolerance used to recognise data sampled from a circular arc.
pub const ARC_DATA_TOL: f64 = 1e-9;

/// G² Hermite data with a prescribed arc length, in arbitrary position.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct G2LengthData {
    pub q0: Complex,
    pub q1: Complex,
    pub g0: Complex,
    pub g1: Complex,
    pub k0: f64,
    pub k1: f64,
    pub length: f64,
}

impl G2LengthData {
    /// Validates the data; tangents within `1e-6` of unit length are
    /// normalised, others rejected.
    pub fn new(
        q0: Complex,
        q1: Complex,
        g0: Complex,
        g1: Complex,
        k0: f64,
        k1: f64,
        length: f64,
    ) -> Result<Self> {
        let all_finite = [q0.re, q0.im, q1.re, q1.im, g0.re, g0.im, g1.re, g1.im, k0, k1, length]
            .iter()
            .all(|v| v.is_finite());
        if !all_finite {
            return Err(Error::InvalidInput("non-finite value in G2 data".into()));
        }
        let normalize = |g: Complex| -> Result<Complex> {
            let n = g.norm();
            if (n - 1.0).abs() > TANGENT_NORMALIZE_TOL {
                return Err(Error::NonUnitTangent(format!("{} + {}i", g.re, g.im)));
            }
            Ok(g / n)
        };
        let g0 = normalize(g0)?;
        let g1 = normalize(g1)?;
        let chord = (q1 - q0).norm();
        if chord == 0.0 {
            return Err(Error::CoincidentEndpoints);
        }
        if length <= chord {
            return Err(Error::LengthTooShort { length, chord });
        }
        Ok(Self {
            q0,
            q1,
            g0,
            g1,
            k0,
            k1,
            length,
        })
    }

    /// Largest violation of the interpolation conditions by `curve`.
    pub fn residual(&self, curve: &Ph7Curve) -> Result<f64> {
        let w = curve.preimage();
        let r = [
            (curve.start() - self.q0).norm(),
            (curve.end() - self.q1).norm(),
            (w.unit_tangent(0.0)? - self.g0).norm(),
            (w.unit_tangent(1.0)? - self.g1).norm(),
            (w.curvature_start()? - self.k0).abs(),
            (w.curvature_end()? - self.k1).abs(),
            (curve.arc_length() - self.length).abs(),
        ];
        Ok(r.into_iter().fold(0.0, f64::max))
    }
}

/// Data in the canonical frame: `q0 = 0`, `q1 = 1`, `g_i = e^{iθ_i}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CanonicalData {
    pub theta0: f64,
    pub theta1: f64,
    pub k0: f64,
    pub k1: f64,
    pub length: f64,
}

/// Reduces an angle to `(-π, π]`.
pub fn reduce_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    if t <= -PI {
        t += 2.0 * PI;
    }
    t
}

impl CanonicalData {
    pub fn new(theta0: f64, theta1: f64, k0: f64, k1: f64, length: f64) -> Result<Self> {
        if ![theta0, theta1, k0, k1, length].iter().all(|v| v.is_finite()) {
            return Err(Error::InvalidInput("non-finite value in canonical data".into()));
        }
        if length <= 1.0 {
            return Err(Error::LengthTooShort { length, chord: 1.0 });
        }
        Ok(Self {
            theta0: reduce_angle(theta0),
            theta1: reduce_angle(theta1),
            k0,
            k1,
            length,
        })
    }

    pub fn g0(&self) -> Complex {
        Complex::from_polar(1.0, self.theta0)
    }

    pub fn g1(&self) -> Complex {
        Complex::from_polar(1.0, self.theta1)
    }

    /// The half angle `α` if the data come from a circular arc
    /// (`θ0 = -θ1 = α`, `κ0 = κ1 = -2 sin α`, `L = α / sin α`).
    pub fn arc_alpha(&self) -> Option<f64> {
        let alpha = self.theta0;
        if !(alpha > 0.0 && alpha < PI) {
            return None;
        }
        let kappa = -2.0 * alpha.sin();
        let length = alpha / alpha.sin();
        let is_arc = (self.theta0 + self.theta1).abs() <= ARC_DATA_TOL
            && (self.k0 - kappa).abs() <= ARC_DATA_TOL
            && (self.k1 - kappa).abs() <= ARC_DATA_TOL
            && (self.length - length).abs() <= ARC_DATA_TOL * length;
        is_arc.then_some(alpha)
    }

    /// Componentwise linear interpolation; used for continuation paths.
    pub fn lerp(&self, other: &CanonicalData, s: f64) -> CanonicalData {
        let mix = |a: f64, b: f64| a + s * (b - a);
        CanonicalData {
            theta0: mix(self.theta0, other.theta0),
            theta1: mix(self.theta1, other.theta1),
            k0: mix(self.k0, other.k0),
            k1: mix(self.k1, other.k1),
            length: mix(self.length, other.length),
        }
    }

    /// Violations of the primitive interpolation conditions.
    pub fn primitive_residuals(&self, curve: &Ph7Curve) -> Result<PrimitiveResiduals> {
        let w = curve.preimage();
        Ok(PrimitiveResiduals {
            start: curve.start().norm(),
            end: (curve.end() - Complex::new(1.0, 0.0)).norm(),
            tangent0: (w.unit_tangent(0.0)? - self.g0()).norm(),
            tangent1: (w.unit_tangent(1.0)? - self.g1()).norm(),
            curvature0: (w.curvature_start()? - self.k0).abs(),
            curvature1: (w.curvature_end()? - self.k1).abs(),
            length: (curve.arc_length() - self.length).abs(),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PrimitiveResiduals {
    pub start: f64,
    pub end: f64,
    pub tangent0: f64,
    pub tangent1: f64,
    pub curvature0: f64,
    pub curvature1: f64,
    pub length: f64,
}

impl PrimitiveResiduals {
    pub fn max(&self) -> f64 {
        [
            self.start,
            self.end,
            self.tangent0,
            self.tangent1,
            self.curvature0,
            self.curvature1,
            self.length,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

/// `z ↦ shift + spin·z` maps the canonical frame back to the original one.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FrameTransform {
    pub shift: Complex,
    pub spin: Complex,
}

impl FrameTransform {
    pub fn identity() -> Self {
        Self {
            shift: Complex::new(0.0, 0.0),
            spin: Complex::new(1.0, 0.0),
        }
    }

    pub fn apply(&self, z: Complex) -> Complex {
        self.shift + self.spin * z
    }
}

pub fn to_canonical(data: &G2LengthData) -> Result<(CanonicalData, FrameTransform)> {
    let h = data.q1 - data.q0;
    let s = h.norm();
    if s == 0.0 {
        return Err(Error::CoincidentEndpoints);
    }
    if data.length <= s {
        return Err(Error::LengthTooShort {
            length: data.length,
            chord: s,
        });
    }
    let unrotate = h.conj() / s;
    let canonical = CanonicalData {
        theta0: reduce_angle((data.g0 * unrotate).arg()),
        theta1: reduce_angle((data.g1 * unrotate).arg()),
        k0: data.k0 * s,
        k1: data.k1 * s,
        length: data.length / s,
    };
    Ok((
        canonical,
        FrameTransform {
            shift: data.q0,
            spin: h,
        },
    ))
}

pub fn from_canonical(curve: &Ph7Curve, transform: &FrameTransform) -> Ph7Curve {
    curve.transformed(transform.shift, transform.spin)
}
