use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};

use crate::arc::spline::JointMismatch;
use crate::canonical::{CanonicalData, FrameTransform, G2LengthData};
use crate::error::Result;
use crate::general::SolveDiagnostics;
use crate::metrics::{Criterion, MetricsReport};
use crate::ph::{Ph7Curve, Preimage};
use crate::solution::Unknowns;
use crate::Complex;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub re: f64,
    pub im: f64,
}

impl From<Complex> for Point {
    fn from(z: Complex) -> Self {
        Point { re: z.re, im: z.im }
    }
}

impl From<Point> for Complex {
    fn from(p: Point) -> Self {
        Complex::new(p.re, p.im)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PreimageDto {
    pub w0: Point,
    pub w1: Point,
    pub w2: Point,
    pub w3: Point,
}

impl From<&Preimage> for PreimageDto {
    fn from(p: &Preimage) -> Self {
        let [w0, w1, w2, w3] = p.w.map(Point::from);
        PreimageDto { w0, w1, w2, w3 }
    }
}

impl From<&PreimageDto> for Preimage {
    fn from(p: &PreimageDto) -> Self {
        Preimage::new(p.w0.into(), p.w1.into(), p.w2.into(), p.w3.into())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TransformDto {
    pub shift: Point,
    pub spin: Point,
}

impl From<&FrameTransform> for TransformDto {
    fn from(t: &FrameTransform) -> Self {
        TransformDto {
            shift: t.shift.into(),
            spin: t.spin.into(),
        }
    }
}

impl From<&TransformDto> for FrameTransform {
    fn from(t: &TransformDto) -> Self {
        FrameTransform {
            shift: t.shift.into(),
            spin: t.spin.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EndpointDto {
    pub q0: Point,
    pub q1: Point,
    pub g0: Point,
    pub g1: Point,
    pub k0: f64,
    pub k1: f64,
    pub length: f64,
}

impl From<&G2LengthData> for EndpointDto {
    fn from(d: &G2LengthData) -> Self {
        EndpointDto {
            q0: d.q0.into(),
            q1: d.q1.into(),
            g0: d.g0.into(),
            g1: d.g1.into(),
            k0: d.k0,
            k1: d.k1,
            length: d.length,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ProblemKind {
    Arc,
    G2,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Problem {
    pub kind: ProblemKind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<f64>,
    pub canonical: CanonicalData,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub endpoint: Option<EndpointDto>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionEntry {
    /// Position in the full `d`-sorted solution set.
    pub index: usize,
    /// Preimage and control points in the frame of the input data.
    pub preimage: PreimageDto,
    pub control: Vec<Point>,
    pub unknowns: Unknowns,
    pub residual: f64,
    pub metrics: MetricsReport,
    pub selected: bool,
}

impl SolutionEntry {
    pub fn new(
        index: usize,
        curve: &Ph7Curve,
        unknowns: Unknowns,
        residual: f64,
        metrics: MetricsReport,
        selected: bool,
    ) -> Self {
        SolutionEntry {
            index,
            preimage: curve.preimage().into(),
            control: curve.control().iter().map(|&z| z.into()).collect(),
            unknowns,
            residual,
            metrics,
            selected,
        }
    }

    pub fn curve(&self) -> Ph7Curve {
        let p0 = self.control.first().map(|&p| p.into()).unwrap_or_default();
        Ph7Curve::build((&self.preimage).into(), p0)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub generator: String,
    pub version: String,
    pub timestamp: u64,
}

impl Meta {
    pub fn now() -> Self {
        Meta {
            generator: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionDocument {
    pub problem: Problem,
    pub transform: TransformDto,
    pub criterion: Criterion,
    pub solutions: Vec<SolutionEntry>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub diagnostics: Option<SolveDiagnostics>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meta: Option<Meta>,
}

impl SolutionDocument {
    pub fn selected(&self) -> Option<&SolutionEntry> {
        self.solutions.iter().find(|s| s.selected)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplinePiece {
    pub preimage: PreimageDto,
    pub control: Vec<Point>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct JointDto {
    pub position: f64,
    pub tangent: f64,
    pub curvature: f64,
}

impl From<&JointMismatch> for JointDto {
    fn from(j: &JointMismatch) -> Self {
        JointDto {
            position: j.position,
            tangent: j.tangent,
            curvature: j.curvature,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplineDocument {
    pub segments: usize,
    pub alpha: f64,
    pub center: Point,
    pub radius: f64,
    pub total_length: f64,
    pub expected_length: f64,
    pub pieces: Vec<SplinePiece>,
    pub joints: Vec<JointDto>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub meta: Option<Meta>,
}

impl SplineDocument {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
