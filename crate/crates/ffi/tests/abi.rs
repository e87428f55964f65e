use std::ffi::CStr;
use std::ptr;

use ph7_ffi::*;

fn last_error() -> String {
    unsafe { CStr::from_ptr(ph7_last_error()) }.to_string_lossy().into_owned()
}

#[test]
fn arc_round_trip() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(ph7_solve_arc(0.5, &mut h), Ph7Status::Ok);
        assert_eq!(ph7_solution_set_len(h), 4);
        let mut best = usize::MAX;
        assert_eq!(ph7_select_best(h, Ph7Criterion::CurvatureL2 as i32, &mut best), Ph7Status::Ok);
        let mut m = Ph7Metrics::default();
        assert_eq!(ph7_solution_metrics(h, best, &mut m), Ph7Status::Ok);
        assert_eq!(m.has_arc_metrics, 1);
        assert!(m.e_kappa < 1e-3, "{m:?}");

        let mut cp = [Ph7Point::default(); 8];
        assert_eq!(ph7_solution_control_points(h, best, cp.as_mut_ptr()), Ph7Status::Ok);
        let mut p = Ph7Point::default();
        ph7_solution_eval(h, best, 0.0, &mut p);
        assert!((p.x - cp[0].x).abs() < 1e-14 && (p.y - cp[0].y).abs() < 1e-14);
        ph7_solution_eval(h, best, 1.0, &mut p);
        assert!((p.x - cp[7].x).abs() < 1e-12 && (p.y - cp[7].y).abs() < 1e-12);

        // Arc of half angle 0.5 with chord 1 has radius 1/(2 sin 0.5).
        let mut k = 0.0;
        assert_eq!(ph7_solution_curvature(h, best, 0.5, &mut k), Ph7Status::Ok);
        assert!((k.abs() - 2.0 * 0.5f64.sin()).abs() < 1e-2);
        ph7_solution_set_free(h);
    }
}

#[test]
fn endpoints_are_honoured() {
    let mut h = ptr::null_mut();
    let (s, c) = (0.3f64.sin(), 0.3f64.cos());
    unsafe {
        // A circular arc of half angle 0.3 placed with chord from (2,1) to (2,3).
        let st = ph7_solve_g2_endpoints(
            Ph7Point { x: 2.0, y: 1.0 },
            Ph7Point { x: 2.0, y: 3.0 },
            Ph7Point { x: s, y: c },
            Ph7Point { x: -s, y: c },
            s,
            s,
            2.0 * 0.3 / s,
            &mut h,
        );
        assert_eq!(st, Ph7Status::Ok, "{}", last_error());
        assert!(ph7_solution_set_len(h) > 0);
        let mut cp = [Ph7Point::default(); 8];
        ph7_solution_control_points(h, 0, cp.as_mut_ptr());
        assert!((cp[0].x - 2.0).abs() < 1e-12 && (cp[0].y - 1.0).abs() < 1e-12);
        assert!((cp[7].x - 2.0).abs() < 1e-9 && (cp[7].y - 3.0).abs() < 1e-9);
        let mut u = Ph7Unknowns::default();
        assert_eq!(ph7_solution_unknowns(h, 0, &mut u), Ph7Status::Ok);
        assert!(u.d > 0.0);
        ph7_solution_set_free(h);
    }
}

#[test]
fn error_codes() {
    let mut h = ptr::null_mut();
    unsafe {
        assert_eq!(ph7_solve_g2(0.0, 0.0, 0.0, 0.0, 0.5, &mut h), Ph7Status::InvalidInput);
        assert!(h.is_null());
        assert!(!last_error().is_empty());
        assert_eq!(ph7_solve_arc(0.5, ptr::null_mut()), Ph7Status::NullPointer);

        assert_eq!(ph7_solve_arc(0.5, &mut h), Ph7Status::Ok);
        let mut p = Ph7Point::default();
        assert_eq!(ph7_solution_eval(h, 99, 0.0, &mut p), Ph7Status::IndexOutOfRange);
        let mut i = 0usize;
        assert_eq!(ph7_select_best(h, 42, &mut i), Ph7Status::InvalidInput);
        assert_eq!(ph7_solution_eval(h, 0, 0.0, ptr::null_mut()), Ph7Status::NullPointer);
        ph7_solution_set_free(h);
        ph7_solution_set_free(ptr::null_mut());
        assert_eq!(ph7_solution_set_len(ptr::null()), 0);
    }
}

#[test]
fn version_matches_crate() {
    let v = unsafe { CStr::from_ptr(ph7_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
