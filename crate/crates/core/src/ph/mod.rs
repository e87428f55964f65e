//! Complex preimage representation of planar PH curves of degree seven.
//!
//! A cubic complex polynomial `w(t) = Σ B_k^3(t) w_k` generates the curve
//! `p(t) = p0 + ∫₀ᵗ w(τ)² dτ`. Speed is `σ = |w|²`, so arc length is a
//! polynomial and curvature is rational.

mod curve;
mod preimage;

pub use curve::Ph7Curve;
pub use preimage::{Preimage, DEGENERATE_SIGMA, REGULARITY_SAMPLES, REGULARITY_THRESHOLD};
