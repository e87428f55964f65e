//! C ABI over `ph7`.
//!
//! Solution sets are returned as opaque [`Ph7SolutionSet`] handles that must
//! be released with [`ph7_solution_set_free`]. Every fallible call returns a
//! [`Ph7Status`]; the message of the most recent failure on the calling
//! thread is available from [`ph7_last_error`].

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use ph7::canonical::{from_canonical, to_canonical, FrameTransform};
use ph7::metrics::{select_best_index, MetricsReport};
use ph7::{CanonicalData, Complex, Criterion, Error, G2LengthData, Ph7Curve, SolutionSet};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ph7Status {
    Ok = 0,
    NoSolutions = 2,
    InvalidInput = 3,
    Internal = 4,
    NullPointer = 5,
    IndexOutOfRange = 6,
    Panic = 7,
}

/// Values accepted by [`ph7_select_best`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ph7Criterion {
    RotationIndex = 0,
    CurvatureL2 = 1,
    Radial = 2,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Ph7Point {
    pub x: f64,
    pub y: f64,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Ph7Unknowns {
    pub d: f64,
    pub u1: f64,
    pub v1: f64,
    pub u2: f64,
    pub v2: f64,
}

/// `e_kappa`, `d_rad` and `argmax_t` are NaN unless `has_arc_metrics` is 1.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Ph7Metrics {
    pub r_abs: f64,
    pub e_kappa: f64,
    pub d_rad: f64,
    pub argmax_t: f64,
    pub has_arc_metrics: c_int,
}

/// Opaque solution set. Curves are stored in the frame of the input data.
pub struct Ph7SolutionSet {
    set: SolutionSet,
    world: Vec<Ph7Curve>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> Ph7Status {
    match e.exit_code() {
        2 => Ph7Status::NoSolutions,
        3 => Ph7Status::InvalidInput,
        _ => Ph7Status::Internal,
    }
}

fn guard<F: FnOnce() -> Result<(), (Ph7Status, String)>>(f: F) -> Ph7Status {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => Ph7Status::Ok,
        Ok(Err((status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("panic inside ph7");
            Ph7Status::Panic
        }
    }
}

fn fail(e: Error) -> (Ph7Status, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (Ph7Status, String) {
    (Ph7Status::NullPointer, "null pointer argument".into())
}

unsafe fn publish(out: *mut *mut Ph7SolutionSet, set: SolutionSet, transform: FrameTransform) {
    let world = set.iter().map(|s| from_canonical(&s.curve, &transform)).collect();
    *out = Box::into_raw(Box::new(Ph7SolutionSet { set, world }));
}

unsafe fn solution<'a>(
    handle: *const Ph7SolutionSet,
    index: usize,
) -> Result<(&'a Ph7SolutionSet, usize), (Ph7Status, String)> {
    let h = handle.as_ref().ok_or_else(null)?;
    if index >= h.set.len() {
        return Err((
            Ph7Status::IndexOutOfRange,
            format!("index {index} out of range for {} solutions", h.set.len()),
        ));
    }
    Ok((h, index))
}

fn point(z: Complex) -> Ph7Point {
    Ph7Point { x: z.re, y: z.im }
}

fn complex(p: Ph7Point) -> Complex {
    Complex::new(p.x, p.y)
}

/// Solves the circular-arc problem with half angle `alpha` in canonical
/// position. On success `*out` receives a new handle (possibly empty).
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ph7_solve_arc(alpha: f64, out: *mut *mut Ph7SolutionSet) -> Ph7Status {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let set = ph7::solve_arc(alpha).map_err(fail)?;
        publish(out, set, FrameTransform::identity());
        Ok(())
    })
}

/// Solves canonical data (`q0 = 0`, `q1 = 1`). An empty result is returned as
/// a valid handle with length zero and status `PH7_STATUS_NO_SOLUTIONS`.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn ph7_solve_g2(
    theta0: f64,
    theta1: f64,
    k0: f64,
    k1: f64,
    length: f64,
    out: *mut *mut Ph7SolutionSet,
) -> Ph7Status {
    let mut empty = false;
    let status = guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let data = CanonicalData::new(theta0, theta1, k0, k1, length).map_err(fail)?;
        let set = ph7::solve_all(&data);
        empty = set.is_empty();
        publish(out, set, FrameTransform::identity());
        Ok(())
    });
    if status == Ph7Status::Ok && empty {
        set_last_error("no solutions");
        return Ph7Status::NoSolutions;
    }
    status
}

/// Solves data in arbitrary position: end points `q0`, `q1`, unit tangents
/// `g0`, `g1`, curvatures and arc length.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
#[allow(clippy::too_many_arguments)]
pub unsafe extern "C" fn ph7_solve_g2_endpoints(
    q0: Ph7Point,
    q1: Ph7Point,
    g0: Ph7Point,
    g1: Ph7Point,
    k0: f64,
    k1: f64,
    length: f64,
    out: *mut *mut Ph7SolutionSet,
) -> Ph7Status {
    let mut empty = false;
    let status = guard(|| {
        if out.is_null() {
            return Err(null());
        }
        *out = ptr::null_mut();
        let data = G2LengthData::new(complex(q0), complex(q1), complex(g0), complex(g1), k0, k1, length)
            .map_err(fail)?;
        let (canonical, transform) = to_canonical(&data).map_err(fail)?;
        let set = ph7::solve_all(&canonical);
        empty = set.is_empty();
        publish(out, set, transform);
        Ok(())
    });
    if status == Ph7Status::Ok && empty {
        set_last_error("no solutions");
        return Ph7Status::NoSolutions;
    }
    status
}

/// Number of solutions; 0 for a null handle.
///
/// # Safety
/// `handle` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ph7_solution_set_len(handle: *const Ph7SolutionSet) -> usize {
    handle.as_ref().map_or(0, |h| h.set.len())
}

/// Unknowns of solution `index` (solutions are sorted by `d`).
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ph7_solution_unknowns(
    handle: *const Ph7SolutionSet,
    index: usize,
    out: *mut Ph7Unknowns,
) -> Ph7Status {
    guard(|| {
        let (h, i) = solution(handle, index)?;
        let out = out.as_mut().ok_or_else(null)?;
        let u = h.set.solutions()[i].unknowns;
        *out = Ph7Unknowns {
            d: u.d,
            u1: u.u1,
            v1: u.v1,
            u2: u.u2,
            v2: u.v2,
        };
        Ok(())
    })
}

/// Writes the eight Bézier control points of solution `index`.
///
/// # Safety
/// `handle` must be a live handle and `out` must point to 8 writable points.
#[no_mangle]
pub unsafe extern "C" fn ph7_solution_control_points(
    handle: *const Ph7SolutionSet,
    index: usize,
    out: *mut Ph7Point,
) -> Ph7Status {
    guard(|| {
        let (h, i) = solution(handle, index)?;
        if out.is_null() {
            return Err(null());
        }
        for (k, &z) in h.world[i].control().iter().enumerate() {
            *out.add(k) = point(z);
        }
        Ok(())
    })
}

/// Point of solution `index` at parameter `t ∈ [0, 1]`.
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ph7_solution_eval(
    handle: *const Ph7SolutionSet,
    index: usize,
    t: f64,
    out: *mut Ph7Point,
) -> Ph7Status {
    guard(|| {
        let (h, i) = solution(handle, index)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = point(h.world[i].eval(t));
        Ok(())
    })
}

/// Signed curvature of solution `index` at `t`.
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ph7_solution_curvature(
    handle: *const Ph7SolutionSet,
    index: usize,
    t: f64,
    out: *mut f64,
) -> Ph7Status {
    guard(|| {
        let (h, i) = solution(handle, index)?;
        let out = out.as_mut().ok_or_else(null)?;
        *out = h.world[i].curvature(t).map_err(fail)?;
        Ok(())
    })
}

/// Selection metrics of solution `index`, computed in the canonical frame.
///
/// # Safety
/// `handle` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ph7_solution_metrics(
    handle: *const Ph7SolutionSet,
    index: usize,
    out: *mut Ph7Metrics,
) -> Ph7Status {
    guard(|| {
        let (h, i) = solution(handle, index)?;
        let out = out.as_mut().ok_or_else(null)?;
        let m = MetricsReport::compute(&h.set.solutions()[i].curve, &h.set.data);
        *out = Ph7Metrics {
            r_abs: m.r_abs,
            e_kappa: m.e_kappa.unwrap_or(f64::NAN),
            d_rad: m.d_rad.unwrap_or(f64::NAN),
            argmax_t: m.argmax_t.unwrap_or(f64::NAN),
            has_arc_metrics: c_int::from(m.e_kappa.is_some()),
        };
        Ok(())
    })
}

/// Index of the best solution under `criterion` (a [`Ph7Criterion`] value).
///
/// # Safety
/// `handle` must be a live handle and `out_index` writable.
#[no_mangle]
pub unsafe extern "C" fn ph7_select_best(
    handle: *const Ph7SolutionSet,
    criterion: c_int,
    out_index: *mut usize,
) -> Ph7Status {
    guard(|| {
        let h = handle.as_ref().ok_or_else(null)?;
        let out = out_index.as_mut().ok_or_else(null)?;
        let criterion = match criterion {
            0 => Criterion::RotationIndex,
            1 => Criterion::CurvatureL2,
            2 => Criterion::Radial,
            other => {
                return Err((Ph7Status::InvalidInput, format!("unknown criterion {other}")));
            }
        };
        *out = select_best_index(&h.set, criterion).map_err(fail)?;
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `handle` must be null or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ph7_solution_set_free(handle: *mut Ph7SolutionSet) {
    if !handle.is_null() {
        drop(Box::from_raw(handle));
    }
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ph7_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn ph7_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
