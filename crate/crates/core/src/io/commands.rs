//! Command implementations behind the `ph7` binary; each returns data that
//! the binary only has to print or write.

use std::fmt::Write;

use crate::arc::lemmas::{default_grid, verify_lemmas};
use crate::arc::spline::{circle_spline, CircleSpline};
use crate::arc::{solve_arc, ArcProblem};
use crate::asymptotics::order_study;
use crate::canonical::{from_canonical, to_canonical, CanonicalData, FrameTransform, G2LengthData};
use crate::error::{Error, Result};
use crate::general::solve_all_with_diagnostics;
use crate::metrics::{select_best_index, Criterion, MetricsReport};
use crate::solution::SolutionSet;

use super::document::{
    EndpointDto, JointDto, Meta, Problem, ProblemKind, SolutionDocument, SolutionEntry,
    SplineDocument, SplinePiece,
};
use super::svg::{render_curves, Reference, RenderOptions, RenderScene};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SolveOptions {
    pub criterion: Criterion,
    /// Emit every solution instead of only the selected one.
    pub all: bool,
    pub meta: bool,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum G2Input {
    Canonical(CanonicalData),
    Endpoint(G2LengthData),
}

fn build_document(
    problem: Problem,
    set: &SolutionSet,
    transform: &FrameTransform,
    options: &SolveOptions,
) -> Result<SolutionDocument> {
    if options.criterion != Criterion::RotationIndex && set.data.arc_alpha().is_none() {
        return Err(Error::CriterionNeedsArc(options.criterion.name()));
    }
    let selected = if set.is_empty() {
        None
    } else {
        Some(select_best_index(set, options.criterion)?)
    };
    let solutions = set
        .iter()
        .enumerate()
        .filter(|(i, _)| options.all || Some(*i) == selected)
        .map(|(i, s)| {
            let metrics = MetricsReport::compute(&s.curve, &set.data);
            let world = from_canonical(&s.curve, transform);
            SolutionEntry::new(i, &world, s.unknowns, s.residual, metrics, Some(i) == selected)
        })
        .collect();
    Ok(SolutionDocument {
        problem,
        transform: transform.into(),
        criterion: options.criterion,
        solutions,
        diagnostics: None,
        meta: options.meta.then(Meta::now),
    })
}

/// All interpolants of the circular arc with half angle `alpha`.
pub fn cmd_interpolate_arc(alpha: f64, options: &SolveOptions) -> Result<SolutionDocument> {
    let problem = ArcProblem::new(alpha)?;
    let set = solve_arc(alpha)?;
    build_document(
        Problem {
            kind: ProblemKind::Arc,
            alpha: Some(problem.alpha()),
            canonical: problem.data(),
            endpoint: None,
        },
        &set,
        &FrameTransform::identity(),
        options,
    )
}

/// Solutions for general data. An empty solution list is not an error here;
/// the document then carries the solver diagnostics.
pub fn cmd_interpolate_g2(input: G2Input, options: &SolveOptions) -> Result<SolutionDocument> {
    let (canonical, transform, endpoint) = match input {
        G2Input::Canonical(c) => (c, FrameTransform::identity(), None),
        G2Input::Endpoint(d) => {
            let (c, t) = to_canonical(&d)?;
            (c, t, Some(EndpointDto::from(&d)))
        }
    };
    let (set, diagnostics) = solve_all_with_diagnostics(&canonical);
    let mut doc = build_document(
        Problem {
            kind: ProblemKind::G2,
            alpha: canonical.arc_alpha(),
            canonical,
            endpoint,
        },
        &set,
        &transform,
        options,
    )?;
    doc.diagnostics = Some(diagnostics);
    Ok(doc)
}

/// Radial distances and order estimates for `α = π/2ⁿ` as CSV, one row per
/// `n` with `e` and `r` columns for each branch.
pub fn cmd_order_study(n_max: usize) -> Result<String> {
    let study = order_study(n_max)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["n".to_string(), "alpha".to_string()];
    for b in &study {
        header.push(format!("e{}", b.branch));
        header.push(format!("r{}", b.branch));
    }
    writer.write_record(&header)?;
    for n in 0..n_max {
        let mut record = vec![(n + 1).to_string(), format!("{:.17e}", study[0].rows[n].alpha)];
        for b in &study {
            let row = &b.rows[n];
            record.push(format!("{:.6e}", row.e));
            record.push(row.r.map(|r| format!("{r:.4}")).unwrap_or_default());
        }
        writer.write_record(&record)?;
    }
    let bytes = writer.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
}

/// Human-readable report and overall verdict of the lemma checks on
/// `grid_size` equally spaced angles in `(0, π/2]`.
pub fn cmd_verify_lemmas(grid_size: usize) -> (String, bool) {
    let suite = verify_lemmas(&default_grid(grid_size));
    let mut out = String::new();
    for c in &suite.checks {
        let _ = writeln!(
            out,
            "{} {:<38} alpha={:.6} {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.alpha,
            c.detail
        );
    }
    let failed = suite.failures().count();
    let _ = writeln!(out, "{} checks, {} failed", suite.checks.len(), failed);
    (out, failed == 0)
}

pub fn cmd_circle_spline(m: usize, meta: bool) -> Result<(SplineDocument, CircleSpline)> {
    let spline = circle_spline(m)?;
    let alpha = spline.alpha;
    let doc = SplineDocument {
        segments: m,
        alpha,
        center: spline.center.into(),
        radius: 0.5 / alpha.sin(),
        total_length: spline.total_length(),
        expected_length: m as f64 * alpha / alpha.sin(),
        pieces: spline
            .pieces
            .iter()
            .map(|p| SplinePiece {
                preimage: p.preimage().into(),
                control: p.control().iter().map(|&z| z.into()).collect(),
            })
            .collect(),
        joints: spline.joints.iter().map(JointDto::from).collect(),
        meta: meta.then(Meta::now),
    };
    Ok((doc, spline))
}

pub fn spline_scene(spline: &CircleSpline) -> RenderScene {
    RenderScene {
        curves: spline.pieces.clone(),
        highlight: None,
        reference: Reference::Circle {
            center: spline.center,
            radius: 0.5 / spline.alpha.sin(),
        },
        kappa_ref: Some(-2.0 * spline.alpha.sin()),
    }
}

/// SVG of every solution in `doc`, with the reference arc when the data come
/// from one.
pub fn cmd_render(doc: &SolutionDocument, options: &RenderOptions) -> String {
    let transform = FrameTransform::from(&doc.transform);
    let alpha = doc.problem.alpha.or_else(|| doc.problem.canonical.arc_alpha());
    let scale = transform.spin.norm();
    let scene = RenderScene {
        curves: doc.solutions.iter().map(SolutionEntry::curve).collect(),
        highlight: doc.solutions.iter().position(|s| s.selected),
        reference: match alpha {
            Some(alpha) => Reference::Arc { alpha, transform },
            None => Reference::None,
        },
        kappa_ref: alpha.map(|a| -2.0 * a.sin() / scale),
    };
    render_curves(&scene, options)
}
