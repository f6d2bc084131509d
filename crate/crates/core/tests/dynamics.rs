use proptest::prelude::*;
use weyl_lie::fock_oracle::unitarity_defect;
use weyl_lie::wei_norman::{
    direct_propagator, factored_propagator, factored_propagator_with_phase, min_fidelity, residual_check, solve, Algebra,
    Control, ControlSpec,
};

fn sinusoid(max_amplitude: f64) -> impl Strategy<Value = Control> {
    (-max_amplitude..max_amplitude, 0.0..3.0f64, 0.0..6.3f64, -max_amplitude..max_amplitude).prop_map(
        |(amplitude, omega, phase, offset)| Control::Sinusoid {
            amplitude,
            omega,
            phase,
            offset,
        },
    )
}

fn spec(algebra: Algebra) -> impl Strategy<Value = ControlSpec> {
    let controls = match algebra {
        Algebra::Wh2 => (sinusoid(1.0), sinusoid(1.0), sinusoid(1.0)).prop_map(|(a, b, c)| vec![a, b, c]).boxed(),
        Algebra::Schrodinger => (sinusoid(1.0), sinusoid(1.0), sinusoid(1.0), sinusoid(0.2), sinusoid(0.2))
            .prop_map(|(a, b, c, d, e)| vec![a, b, c, d, e])
            .boxed(),
    };
    controls.prop_map(move |controls| ControlSpec {
        algebra,
        h: 0.01,
        n_steps: 100,
        controls,
    })
}

const DIM: usize = 40;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn propagators_are_unitary_on_the_interior(s in prop_oneof![spec(Algebra::Wh2), spec(Algebra::Schrodinger)]) {
        let sol = solve(&s).unwrap();
        let last = s.n_steps;
        for (u_name, u) in [
            ("factored", factored_propagator(&sol, last, DIM).unwrap()),
            ("phase", factored_propagator_with_phase(&sol, last, DIM).unwrap()),
            ("direct", direct_propagator(&s, DIM, last).unwrap()),
        ] {
            let d = unitarity_defect(&u, DIM - 4);
            prop_assert!(d < 1e-9, "defect {d} in {u_name}");
        }
    }

    #[test]
    fn global_phase_never_changes_fidelity(s in spec(Algebra::Schrodinger)) {
        let sol = solve(&s).unwrap();
        // factors are truncated one by one, so leave headroom for displacement and squeezing
        let dim = 64;
        let direct = direct_propagator(&s, dim, s.n_steps).unwrap();
        let without = min_fidelity(&factored_propagator(&sol, s.n_steps, dim).unwrap(), &direct);
        let with = min_fidelity(&factored_propagator_with_phase(&sol, s.n_steps, dim).unwrap(), &direct);
        prop_assert!((without - with).abs() < 1e-12);
        prop_assert!(with > 1.0 - 1e-6, "1 - fidelity {}", 1.0 - with);
    }

    #[test]
    fn schrodinger_without_squeezing_matches_wh2(s in spec(Algebra::Wh2)) {
        let mut full = s.clone();
        full.algebra = Algebra::Schrodinger;
        full.controls.extend([Control::Constant(0.0), Control::Constant(0.0)]);
        let (a, b) = (solve(&s).unwrap(), solve(&full).unwrap());
        for j in 0..3 {
            for k in 0..=s.n_steps {
                prop_assert!((a.f[j][k] - b.f[j][k]).abs() < 1e-8);
            }
        }
    }
}

#[test]
fn refinement_reduces_residual_at_fourth_order() {
    let controls = vec![
        Control::Sinusoid { amplitude: 0.8, omega: 1.3, phase: 0.2, offset: 0.5 },
        Control::Sinusoid { amplitude: 0.4, omega: 0.7, phase: 0.0, offset: 0.1 },
        Control::Constant(-0.3),
        Control::Sinusoid { amplitude: 0.1, omega: 2.0, phase: 1.0, offset: 0.0 },
        Control::Constant(0.05),
    ];
    let at = |h: f64| {
        let s = ControlSpec {
            algebra: Algebra::Schrodinger,
            h,
            n_steps: (2.0 / h).round() as usize,
            controls: controls.clone(),
        };
        residual_check(&s, &solve(&s).unwrap()).unwrap()
    };
    let (coarse, fine) = (at(0.04), at(0.02));
    assert!(coarse / fine >= 8.0, "{coarse} / {fine}");
}
