//! Degree-7 Pythagorean-hodograph (PH) curves that interpolate planar G² Hermite
//! data (end points, tangent directions, signed curvatures) together with a
//! prescribed arc length.
//!
//! The crate is organised bottom-up:
//!
//! * [`ph`]: the complex preimage representation, Bézier control points,
//!   differential geometry and exact arc length of PH curves of degree seven.
//! * [`canonical`]: reduction of arbitrary data to the canonical frame
//!   (`q0 = 0`, `q1 = 1`) and pullback of solutions.
//! * [`arc`]: the specialised solver for data sampled from a circular arc,
//!   driven by a degree-6 polynomial with guaranteed root brackets.
//! * [`general`]: damped Newton and continuation for arbitrary canonical data.
//! * [`metrics`]: rotation index, curvature deviation and radial distance used
//!   to choose among multiple solutions.
//! * [`asymptotics`]: small-angle series of the best solution and the
//!   convergence-order harness.
//! * [`io`]: JSON documents, SVG rendering and the command implementations
//!   behind the `ph7` binary.

pub mod arc;
pub mod asymptotics;
pub mod bernstein;
pub mod canonical;
pub mod error;
pub mod general;
pub mod io;
pub mod metrics;
pub mod ph;
pub mod poly;
pub mod quad;
pub mod solution;

pub use num_complex::Complex64 as Complex;

pub use arc::{arc_data, solve_arc, ArcProblem};
pub use canonical::{from_canonical, to_canonical, CanonicalData, FrameTransform, G2LengthData};
pub use error::{Error, Result};
pub use general::{solve_all, solve_newton};
pub use metrics::{select_best, Criterion, MetricsReport};
pub use ph::{Ph7Curve, Preimage};
pub use solution::{CandidateSolution, SolutionSet, Unknowns};
