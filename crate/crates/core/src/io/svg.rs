//! Minimal SVG output: curves, reference arc, optional control polygons and
//! a curvature profile below the main plot.

use std::fmt::Write;

use crate::canonical::FrameTransform;
use crate::metrics::arc_samples;
use crate::ph::Ph7Curve;
use crate::Complex;

pub const CURVE_SAMPLES: usize = 512;
const MARGIN: f64 = 0.05;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"];

#[derive(Clone, Debug, PartialEq)]
pub enum Reference {
    None,
    /// Canonical arc with half angle `alpha`, mapped by `transform`.
    Arc { alpha: f64, transform: FrameTransform },
    Circle { center: Complex, radius: f64 },
}

#[derive(Clone, Debug)]
pub struct RenderScene {
    pub curves: Vec<Ph7Curve>,
    pub highlight: Option<usize>,
    pub reference: Reference,
    /// Constant reference curvature drawn in the profile plot.
    pub kappa_ref: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RenderOptions {
    pub samples: usize,
    pub control_polygon: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            samples: CURVE_SAMPLES,
            control_polygon: false,
        }
    }
}

struct Bounds {
    lo: Complex,
    hi: Complex,
}

impl Bounds {
    fn new() -> Self {
        Bounds {
            lo: Complex::new(f64::INFINITY, f64::INFINITY),
            hi: Complex::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        }
    }

    fn add(&mut self, z: Complex) {
        if z.re.is_finite() && z.im.is_finite() {
            self.lo = Complex::new(self.lo.re.min(z.re), self.lo.im.min(z.im));
            self.hi = Complex::new(self.hi.re.max(z.re), self.hi.im.max(z.im));
        }
    }

    fn is_empty(&self) -> bool {
        !(self.lo.re <= self.hi.re && self.lo.im <= self.hi.im)
    }
}

fn points_attr(points: impl Iterator<Item = (f64, f64)>) -> String {
    let mut s = String::new();
    for (x, y) in points {
        let _ = write!(s, "{:.6},{:.6} ", x, y);
    }
    s.trim_end().to_string()
}

fn reference_points(reference: &Reference, samples: usize) -> Vec<Complex> {
    match reference {
        Reference::None => Vec::new(),
        Reference::Arc { alpha, transform } => arc_samples(*alpha, samples)
            .into_iter()
            .map(|z| transform.apply(z))
            .collect(),
        Reference::Circle { center, radius } => (0..=samples)
            .map(|i| {
                let phi = 2.0 * std::f64::consts::PI * i as f64 / samples as f64;
                center + Complex::from_polar(*radius, phi)
            })
            .collect(),
    }
}

/// Renders `scene` as a standalone SVG document. Mathematical `y` points up.
pub fn render_curves(scene: &RenderScene, options: &RenderOptions) -> String {
    let samples = options.samples.max(2);
    let polylines: Vec<Vec<Complex>> = scene.curves.iter().map(|c| c.polyline(samples)).collect();
    let reference = reference_points(&scene.reference, samples);

    let mut bounds = Bounds::new();
    for p in polylines.iter().flatten().chain(reference.iter()) {
        bounds.add(*p);
    }
    if options.control_polygon {
        for c in &scene.curves {
            for &p in c.control() {
                bounds.add(p);
            }
        }
    }
    if bounds.is_empty() {
        bounds.add(Complex::new(0.0, -0.5));
        bounds.add(Complex::new(1.0, 0.5));
    }
    let width = (bounds.hi.re - bounds.lo.re).max(1e-9);
    let height = (bounds.hi.im - bounds.lo.im).max(1e-9);
    let size = width.max(height);
    let stroke = 0.004 * size;
    let margin = MARGIN * size;

    // Flip y: screen y = -math y.
    let top = -bounds.hi.im;
    let plot_bottom = -bounds.lo.im;
    let profile_gap = 0.1 * size;
    let profile_height = 0.4 * width;
    let profile_top = plot_bottom + profile_gap;
    let view_x = bounds.lo.re - margin;
    let view_y = top - margin;
    let view_w = width + 2.0 * margin;
    let view_h = (profile_top + profile_height - top) + 2.0 * margin;

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{view_x:.6} {view_y:.6} {view_w:.6} {view_h:.6}">"#
    );
    let _ = writeln!(
        svg,
        r##"<g class="axes" stroke="#999" stroke-width="{:.6}" fill="none">"##,
        0.5 * stroke
    );
    let _ = writeln!(
        svg,
        r#"<line x1="{:.6}" y1="0" x2="{:.6}" y2="0"/>"#,
        bounds.lo.re,
        bounds.hi.re
    );
    if bounds.lo.re <= 0.0 && bounds.hi.re >= 0.0 {
        let _ = writeln!(svg, r#"<line x1="0" y1="{top:.6}" x2="0" y2="{plot_bottom:.6}"/>"#);
    }
    let _ = writeln!(
        svg,
        r#"<rect x="{:.6}" y="{profile_top:.6}" width="{width:.6}" height="{profile_height:.6}"/>"#,
        bounds.lo.re
    );
    svg.push_str("</g>\n");

    if !reference.is_empty() {
        let _ = writeln!(
            svg,
            r##"<polyline class="reference" points="{}" fill="none" stroke="#555" stroke-dasharray="{:.6}" stroke-width="{:.6}"/>"##,
            points_attr(reference.iter().map(|z| (z.re, -z.im))),
            3.0 * stroke,
            stroke
        );
    }

    for (i, (curve, line)) in scene.curves.iter().zip(&polylines).enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let w = if scene.highlight == Some(i) { 2.0 * stroke } else { stroke };
        let _ = writeln!(svg, r#"<g class="solution" id="solution-{i}">"#);
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="{w:.6}"/>"#,
            points_attr(line.iter().map(|z| (z.re, -z.im)))
        );
        if options.control_polygon {
            let _ = writeln!(
                svg,
                r#"<polyline class="control" points="{}" fill="none" stroke="{color}" stroke-opacity="0.5" stroke-width="{:.6}"/>"#,
                points_attr(curve.control().iter().map(|z| (z.re, -z.im))),
                0.5 * stroke
            );
        }
        svg.push_str("</g>\n");
    }

    write_profile(&mut svg, scene, samples, bounds.lo.re, width, profile_top, profile_height, stroke);
    svg.push_str("</svg>\n");
    svg
}

#[allow(clippy::too_many_arguments)]
fn write_profile(
    svg: &mut String,
    scene: &RenderScene,
    samples: usize,
    x0: f64,
    width: f64,
    top: f64,
    height: f64,
    stroke: f64,
) {
    let profiles: Vec<Vec<f64>> = scene
        .curves
        .iter()
        .map(|c| {
            (0..samples)
                .map(|i| {
                    let t = i as f64 / (samples - 1) as f64;
                    c.curvature(t).unwrap_or(f64::NAN)
                })
                .collect()
        })
        .collect();
    let mut values: Vec<f64> = profiles.iter().flatten().copied().filter(|v| v.is_finite()).collect();
    values.extend(scene.kappa_ref);
    if values.is_empty() {
        return;
    }
    // Robust range: spikes near cusps would flatten everything else.
    values.sort_by(f64::total_cmp);
    let q = |p: f64| values[((values.len() - 1) as f64 * p).round() as usize];
    let (mut lo, mut hi) = (q(0.02), q(0.98));
    if let Some(k) = scene.kappa_ref {
        lo = lo.min(k);
        hi = hi.max(k);
    }
    let pad = 0.1 * (hi - lo).max(1e-9);
    let (lo, hi) = (lo - pad, hi + pad);
    let map = |t: f64, k: f64| (x0 + t * width, top + height * (hi - k.clamp(lo, hi)) / (hi - lo));

    let _ = writeln!(svg, r#"<g class="curvature">"#);
    if let Some(k) = scene.kappa_ref {
        let (xa, y) = map(0.0, k);
        let (xb, _) = map(1.0, k);
        let _ = writeln!(
            svg,
            r##"<line class="kappa-ref" x1="{xa:.6}" y1="{y:.6}" x2="{xb:.6}" y2="{y:.6}" stroke="#555" stroke-dasharray="{:.6}" stroke-width="{:.6}"/>"##,
            3.0 * stroke,
            stroke
        );
    }
    for (i, prof) in profiles.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let pts = prof.iter().enumerate().filter(|(_, k)| k.is_finite()).map(|(j, &k)| {
            map(j as f64 / (samples - 1) as f64, k)
        });
        let _ = writeln!(
            svg,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="{stroke:.6}"/>"#,
            points_attr(pts)
        );
    }
    svg.push_str("</g>\n");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::solve_arc;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn empty_scene_has_axes_only() {
        let scene = RenderScene {
            curves: Vec::new(),
            highlight: None,
            reference: Reference::None,
            kappa_ref: None,
        };
        let svg = render_curves(&scene, &RenderOptions::default());
        assert!(svg.starts_with("<svg"));
        assert!(svg.contains(r#"class="axes""#));
        assert!(!svg.contains(r#"class="solution""#));
    }

    #[test]
    fn semicircle_has_four_groups_and_flipped_y() {
        let set = solve_arc(FRAC_PI_2).unwrap();
        let scene = RenderScene {
            curves: set.iter().map(|s| s.curve).collect(),
            highlight: Some(1),
            reference: Reference::Arc {
                alpha: FRAC_PI_2,
                transform: FrameTransform::identity(),
            },
            kappa_ref: Some(-2.0),
        };
        let options = RenderOptions {
            control_polygon: true,
            ..RenderOptions::default()
        };
        let svg = render_curves(&scene, &options);
        assert_eq!(svg.matches(r#"class="solution""#).count(), 4);
        assert!(svg.contains(r#"class="kappa-ref""#));
        assert!(svg.contains(r#"class="control""#));
        // The arc lies above the chord, so its screen y is negative.
        let reference = svg.lines().find(|l| l.contains(r#"class="reference""#)).unwrap();
        let attr = reference.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
        let min_y = attr
            .split_whitespace()
            .map(|p| p.split(',').nth(1).unwrap().parse::<f64>().unwrap())
            .fold(f64::INFINITY, f64::min);
        assert!((-0.5..-0.49).contains(&min_y));
    }
}
