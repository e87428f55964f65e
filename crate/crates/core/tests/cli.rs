use std::process::{Command, Output};

use ph7::io::SolutionDocument;

fn ph7(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ph7"))
        .args(args)
        .output()
        .expect("failed to run ph7")
}

fn document(out: &Output) -> SolutionDocument {
    SolutionDocument::from_json(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn semicircle_all_solutions() {
    let out = ph7(&["interpolate-arc", "--alpha", "1.5707963", "--all", "--no-meta"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = document(&out);
    assert_eq!(doc.solutions.len(), 4);
    let sel = doc.selected().unwrap();
    assert!((sel.unknowns.d - 1.2756).abs() < 5e-4);
    assert!(doc.meta.is_none());
}

#[test]
fn big_arc_best_curvature_error() {
    let out = ph7(&["interpolate-arc", "--alpha", "2.6179939", "--all", "--no-meta"]);
    let doc = document(&out);
    assert_eq!(doc.solutions.len(), 2);
    let e = doc.selected().unwrap().metrics.e_kappa.unwrap();
    assert!((e - 9.0995e-6).abs() < 1e-2 * 9.0995e-6);
}

#[test]
fn degrees_and_radial_criterion() {
    let out = ph7(&["interpolate-arc", "--alpha", "45", "--degrees", "--criterion", "radial", "--no-meta"]);
    let doc = document(&out);
    assert_eq!(doc.solutions.len(), 1);
    assert_eq!(doc.solutions[0].index, 1);
    assert!((doc.solutions[0].metrics.d_rad.unwrap() - 6.8517e-8).abs() < 1e-11);
}

#[test]
fn invalid_input_exits_3() {
    assert_eq!(ph7(&["interpolate-arc", "--alpha", "0"]).status.code(), Some(3));
    assert_eq!(ph7(&["interpolate-arc", "--alpha", "abc"]).status.code(), Some(3));
    assert_eq!(ph7(&["no-such-command"]).status.code(), Some(3));
    let curvature_on_general = ph7(&[
        "interpolate-g2", "--theta0", "1", "--theta1", "0.2", "--k0", "0", "--k1", "0",
        "--length", "1.5", "--criterion", "curvature",
    ]);
    assert_eq!(curvature_on_general.status.code(), Some(3));
    let short = ph7(&[
        "interpolate-g2", "--theta0", "1", "--theta1", "0.2", "--k0", "0", "--k1", "0",
        "--length", "0.5",
    ]);
    assert_eq!(short.status.code(), Some(3));
}

#[test]
fn general_examples() {
    let out = ph7(&[
        "interpolate-g2", "--theta0", "90", "--theta1", "-45", "--degrees", "--k0", "-1",
        "--k1", "2", "--length", "1.75", "--all", "--no-meta",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc = document(&out);
    let r: Vec<f64> = doc.solutions.iter().map(|s| s.metrics.r_abs).collect();
    assert_eq!(r.len(), 2);
    assert!((r[0] - 3.01).abs() < 0.05 && (r[1] - 10.43).abs() < 0.05);
    assert_eq!(doc.selected().unwrap().index, 0);

    let out = ph7(&[
        "interpolate-g2", "--theta0", "1.5707963267948966", "--theta1", "-1.5707963267948966",
        "--k0", "-8", "--k1", "-8", "--length", "1.21106", "--all", "--no-meta",
    ]);
    let doc = document(&out);
    let r: Vec<f64> = doc.solutions.iter().map(|s| s.metrics.r_abs).collect();
    assert!((r[0] - std::f64::consts::PI).abs() < 0.05 && (r[1] - 5.77).abs() < 0.05);
}

#[test]
fn endpoint_form() {
    let out = ph7(&[
        "interpolate-g2", "--q0", "1,1", "--q1", "3,1", "--g0", "0,1", "--g1", "0.70710678118654752,-0.70710678118654752",
        "--k0", "-0.5", "--k1", "1", "--length", "3.5", "--all", "--no-meta",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let doc = document(&out);
    assert_eq!(doc.solutions.len(), 2);
    let c = &doc.solutions[0].control;
    assert!((c[0].re - 1.0).abs() < 1e-12 && (c[7].re - 3.0).abs() < 1e-9);
    assert!(doc.problem.endpoint.is_some());
}

#[test]
fn no_solution_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("empty.json");
    let svg = dir.path().join("empty.svg");
    let out = ph7(&[
        "interpolate-g2", "--theta0", "1.5707963267948966", "--theta1", "-1.5707963267948966",
        "--k0", "0", "--k1", "0", "--length", "1.125", "--no-meta",
        "--out", json.to_str().unwrap(), "--svg", svg.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no solutions"));
    let doc = SolutionDocument::from_json(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert!(doc.solutions.is_empty());
    assert!(doc.diagnostics.is_some());
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.contains(r#"class="axes""#) && !svg.contains(r#"class="solution""#));
}

#[test]
fn output_is_deterministic_without_meta() {
    let args = ["interpolate-arc", "--alpha", "0.9", "--all", "--no-meta"];
    assert_eq!(ph7(&args).stdout, ph7(&args).stdout);
    let with_meta = document(&ph7(&["interpolate-arc", "--alpha", "0.9"]));
    assert!(with_meta.meta.is_some());
}

#[test]
fn render_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("semi.json");
    let svg = dir.path().join("semi.svg");
    let out = ph7(&[
        "interpolate-arc", "--alpha", "1.5707963267948966", "--all", "--no-meta",
        "--out", json.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let out = ph7(&[
        "render", json.to_str().unwrap(), "--svg", svg.to_str().unwrap(), "--control-polygon",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert_eq!(svg.matches(r#"class="solution""#).count(), 4);
    assert!(svg.contains("kappa-ref"));
}

#[test]
fn order_study_csv() {
    let out = ph7(&["order-study", "--n-max", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    let row: Vec<&str> = lines[2].split(',').collect();
    let r2: f64 = row[5].parse().unwrap();
    assert!((r2 - 7.55).abs() < 0.05);
}

#[test]
fn verify_lemmas_passes() {
    let out = ph7(&["verify-lemmas", "--grid", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("g(pi/2)"));
    assert!(text.contains("0 failed"));
}

#[test]
fn circle_spline_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("circle.svg");
    let out = ph7(&["circle-spline", "--segments", "4", "--no-meta", "--svg", svg.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["pieces"].as_array().unwrap().len(), 4);
    let total = v["total_length"].as_f64().unwrap();
    let expected = v["expected_length"].as_f64().unwrap();
    assert!((total - expected).abs() < 1e-10 * expected);
    assert_eq!(std::fs::read_to_string(&svg).unwrap().matches(r#"class="solution""#).count(), 4);
    assert_eq!(ph7(&["circle-spline", "--segments", "1"]).status.code(), Some(3));
}
