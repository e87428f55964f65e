//! Adaptive Simpson quadrature.

const MAX_DEPTH: u32 = 50;
pub const DEFAULT_PANELS: usize = 8;

/// `∫_a^b f` to absolute tolerance `tol`, starting from
/// [`DEFAULT_PANELS`] equal panels.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    adaptive_simpson_panels(f, a, b, tol, DEFAULT_PANELS)
}

pub fn adaptive_simpson_panels<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    panels: usize,
) -> f64 {
    let panels = panels.max(1);
    let h = (b - a) / panels as f64;
    let panel_tol = tol / panels as f64;
    (0..panels)
        .map(|i| {
            let lo = a + h * i as f64;
            let hi = if i + 1 == panels { b } else { lo + h };
            let (flo, fhi) = (f(lo), f(hi));
            let mid = 0.5 * (lo + hi);
            let fmid = f(mid);
            let whole = simpson(lo, hi, flo, fmid, fhi);
            recurse(&f, lo, hi, flo, fmid, fhi, whole, panel_tol, 0)
        })
        .sum()
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if depth >= MAX_DEPTH || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1)
        + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1)
}
