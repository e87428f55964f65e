//! Unknowns of the reduced system and the solution containers shared by the
//! circular-arc and general solvers.

use serde::{Deserialize, Serialize};

use crate::canonical::CanonicalData;
use crate::error::Result;
use crate::ph::{Ph7Curve, Preimage};
use crate::Complex;

/// `w0 = d e^{iθ0/2}`, `w1 = u1 + i v1`, `w2 = u2 + i v2`, `w3 = d e^{iθ1/2}`.
/// Equal `d` at both ends encodes the equal-tangent-length assumption.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Unknowns {
    pub d: f64,
    pub u1: f64,
    pub v1: f64,
    pub u2: f64,
    pub v2: f64,
}

impl Unknowns {
    pub fn new(d: f64, u1: f64, v1: f64, u2: f64, v2: f64) -> Self {
        Self { d, u1, v1, u2, v2 }
    }

    pub fn to_array(self) -> [f64; 5] {
        [self.d, self.u1, self.v1, self.u2, self.v2]
    }

    pub fn from_array(x: [f64; 5]) -> Self {
        Self::new(x[0], x[1], x[2], x[3], x[4])
    }

    pub fn negated(self) -> Self {
        Self::from_array(self.to_array().map(|v| -v))
    }

    /// Flips the sign of every unknown if `d < 0`; both describe one curve.
    pub fn sign_normalized(self) -> Self {
        if self.d < 0.0 {
            self.negated()
        } else {
            self
        }
    }

    pub fn distance(&self, other: &Unknowns) -> f64 {
        self.to_array()
            .iter()
            .zip(other.to_array())
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn preimage(&self, data: &CanonicalData) -> Preimage {
        Preimage::new(
            Complex::from_polar(self.d, 0.5 * data.theta0),
            Complex::new(self.u1, self.v1),
            Complex::new(self.u2, self.v2),
            Complex::from_polar(self.d, 0.5 * data.theta1),
        )
    }

    pub fn curve(&self, data: &CanonicalData) -> Ph7Curve {
        Ph7Curve::build(self.preimage(data), Complex::new(0.0, 0.0))
    }
}

/// One interpolant in the canonical frame.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidateSolution {
    pub unknowns: Unknowns,
    pub curve: Ph7Curve,
    /// Largest violation of the primitive interpolation conditions.
    pub residual: f64,
}

impl CandidateSolution {
    pub fn new(unknowns: Unknowns, data: &CanonicalData) -> Result<Self> {
        let curve = unknowns.curve(data);
        let residual = data.primitive_residuals(&curve)?.max();
        Ok(Self {
            unknowns,
            curve,
            residual,
        })
    }
}

/// Solutions with `d > 0`, ordered by `d` (ties broken by `u1`).
#[derive(Clone, Debug, PartialEq)]
pub struct SolutionSet {
    pub data: CanonicalData,
    solutions: Vec<CandidateSolution>,
}

impl SolutionSet {
    pub fn new(data: CanonicalData, mut solutions: Vec<CandidateSolution>) -> Self {
        solutions.sort_by(|a, b| {
            a.unknowns
                .d
                .total_cmp(&b.unknowns.d)
                .then(a.unknowns.u1.total_cmp(&b.unknowns.u1))
        });
        Self { data, solutions }
    }

    pub fn empty(data: CanonicalData) -> Self {
        Self {
            data,
            solutions: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CandidateSolution> {
        self.solutions.iter()
    }

    pub fn get(&self, i: usize) -> Option<&CandidateSolution> {
        self.solutions.get(i)
    }

    pub fn solutions(&self) -> &[CandidateSolution] {
        &self.solutions
    }

    /// Number of real solutions of the reduced system when `(d, u, v)` and
    /// `(-d, -u, -v)` are counted separately.
    pub fn signed_count(&self) -> usize {
        2 * self.solutions.len()
    }

    pub fn d_values(&self) -> Vec<f64> {
        self.solutions.iter().map(|s| s.unknowns.d).collect()
    }
}

impl<'a> IntoIterator for &'a SolutionSet {
    type Item = &'a CandidateSolution;
    type IntoIter = std::slice::Iter<'a, CandidateSolution>;

    fn into_iter(self) -> Self::IntoIter {
        self.solutions.iter()
    }
}
