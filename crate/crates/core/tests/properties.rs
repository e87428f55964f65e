use std::f64::consts::FRAC_PI_2;

use proptest::prelude::*;

use ph7::general::residuals;
use ph7::io::document::{PreimageDto, SolutionEntry};
use ph7::quad::adaptive_simpson;
use ph7::{
    from_canonical, solve_arc, to_canonical, Complex, G2LengthData, MetricsReport, Ph7Curve,
    Preimage, Unknowns,
};

fn complex() -> impl Strategy<Value = Complex> {
    (-3.0f64..3.0, -3.0f64..3.0).prop_map(|(re, im)| Complex::new(re, im))
}

fn preimage() -> impl Strategy<Value = Preimage> {
    (complex(), complex(), complex(), complex()).prop_map(|(a, b, c, d)| Preimage::new(a, b, c, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hodograph_is_preimage_squared(w in preimage(), p0 in complex(), t in 0.0f64..=1.0) {
        let c = Ph7Curve::build(w, p0);
        let z = w.eval(t);
        let err = (c.derivative(t) - z * z).norm();
        prop_assert!(err <= 1e-12 * (1.0 + z.norm_sqr()));
    }

    #[test]
    fn exact_length_matches_quadrature(w in preimage()) {
        let exact = w.arc_length_total();
        let quad = adaptive_simpson(|t| w.sigma(t), 0.0, 1.0, 1e-14);
        prop_assert!((exact - quad).abs() <= 1e-13 * (1.0 + exact));
    }

    #[test]
    fn negated_preimage_gives_the_same_curve(w in preimage(), p0 in complex()) {
        let a = Ph7Curve::build(w, p0);
        let b = Ph7Curve::build(-w, p0);
        prop_assert_eq!(a.control(), b.control());
    }

    #[test]
    fn arc_solutions_solve_both_formulations(alpha in 0.05f64..=FRAC_PI_2) {
        let set = solve_arc(alpha).unwrap();
        prop_assert_eq!(set.len(), 4);
        for s in &set {
            let r = residuals(&s.unknowns, &set.data);
            prop_assert!(r.iter().all(|v| v.abs() <= 1e-9));
            prop_assert!(s.residual <= 1e-9);
            let neg = residuals(&s.unknowns.negated(), &set.data);
            prop_assert!(neg.iter().all(|v| v.abs() <= 1e-9));
        }
    }

    #[test]
    fn similarity_pullback_interpolates_world_data(
        alpha in 0.2f64..=FRAC_PI_2,
        shift in complex(),
        angle in -3.0f64..3.0,
        scale in 0.1f64..10.0,
    ) {
        let spin = Complex::from_polar(scale, angle);
        let dir = spin / scale;
        let kappa = -2.0 * alpha.sin() / scale;
        let data = G2LengthData::new(
            shift,
            shift + spin,
            dir * Complex::from_polar(1.0, alpha),
            dir * Complex::from_polar(1.0, -alpha),
            kappa,
            kappa,
            scale * alpha / alpha.sin(),
        ).unwrap();
        let (canonical, transform) = to_canonical(&data).unwrap();
        prop_assert!((canonical.arc_alpha().unwrap() - alpha).abs() < 1e-9);
        let set = solve_arc(alpha).unwrap();
        for s in &set {
            let world = from_canonical(&s.curve, &transform);
            prop_assert!(data.residual(&world).unwrap() <= 1e-8 * (1.0 + scale));
        }
    }

    #[test]
    fn solution_entry_json_round_trip(
        w in preimage(),
        p0 in complex(),
        x in prop::array::uniform5(-10.0f64..10.0),
        r_abs in 0.0f64..100.0,
        e in prop::option::of(0.0f64..1e6),
    ) {
        let curve = Ph7Curve::build(w, p0);
        let metrics = MetricsReport { r_abs, e_kappa: e, d_rad: e, argmax_t: e.map(|_| 0.5) };
        let entry = SolutionEntry::new(3, &curve, Unknowns::from_array(x), 1e-15, metrics, true);
        let json = serde_json::to_string(&entry).unwrap();
        let back: SolutionEntry = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &entry);
        prop_assert_eq!(Preimage::from(&back.preimage), w);
        let dto = PreimageDto::from(&w);
        prop_assert_eq!(Preimage::from(&dto), w);
    }
}
