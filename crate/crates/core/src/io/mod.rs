//! JSON documents, SVG rendering and the command implementations behind the
//! `ph7` binary.

pub mod commands;
pub mod document;
pub mod svg;

pub use commands::{
    cmd_circle_spline, cmd_interpolate_arc, cmd_interpolate_g2, cmd_order_study,
    cmd_render, cmd_verify_lemmas, G2Input, SolveOptions,
};
pub use document::{Meta, Point, SolutionDocument, SolutionEntry, SplineDocument};
pub use svg::{render_curves, RenderOptions, RenderScene};
