use deformed_dicke::decomp::{
    acin3, acin3_complex, apply_local, density, euler_unitary, schmidt2, schmidt2_complex, to_complex, Unitary2,
};
use deformed_dicke::golden::golden_table;
use deformed_dicke::hilbert::NumericState;
use deformed_dicke::reference::{acin_expected, schmidt_d_minus2, schmidt_m0, sign_singular, ACIN_STATES, H_VALUES};
use proptest::prelude::*;

fn state(n: usize, name: &str, h: f64) -> NumericState {
    golden_table(n).unwrap().get(name).unwrap().normalize_at(h).unwrap()
}

#[test]
fn schmidt_matches_closed_forms() {
    for h in H_VALUES {
        let r = schmidt2(&state(2, "D-2", h)).unwrap();
        for (x, y) in r.coefficients.iter().zip(schmidt_d_minus2(h)) {
            assert!((x - y).abs() < 1e-10, "D-2 h={h}");
        }
        let r = schmidt2(&state(2, "M0", h)).unwrap();
        for (x, y) in r.coefficients.iter().zip(schmidt_m0(h)) {
            assert!((x - y).abs() < 1e-10, "M0 h={h}");
        }
        assert_eq!(r.rank(1e-12), 2);
    }
}

#[test]
fn acin_matches_closed_forms() {
    for h in H_VALUES {
        assert!(!sign_singular(h));
        for name in ACIN_STATES {
            let (lambdas, phi) = acin_expected(name, h).unwrap();
            let r = acin3(&state(3, name, h)).unwrap();
            for (x, y) in r.lambdas.iter().zip(lambdas) {
                assert!((x - y).abs() < 1e-8, "{name} h={h}: {:?} vs {lambdas:?}", r.lambdas);
            }
            assert!((r.phi - phi).abs() < 1e-8, "{name} h={h}: φ={} expected {phi}", r.phi);
            let sum: f64 = r.lambdas.iter().map(|l| l * l).sum();
            assert!((sum - 1.0).abs() < 1e-12);
            assert!(r.residual < 1e-9);
        }
    }
}

#[test]
fn golden_states_give_valid_density_matrices() {
    for n in 2..=4 {
        for row in golden_table(n).unwrap().rows() {
            for h in H_VALUES {
                let rho = density(&row.state.normalize_at(h).unwrap()).unwrap();
                rho.validate().unwrap();
            }
        }
    }
}

proptest! {
    #[test]
    fn schmidt_is_local_unitary_invariant(
        h in 0.1f64..2.0,
        angles in proptest::array::uniform8(-3.2f64..3.2),
    ) {
        let psi = to_complex(&state(2, "M0", h));
        let u = euler_unitary(angles[0], angles[1], angles[2], angles[3]);
        let v = euler_unitary(angles[4], angles[5], angles[6], angles[7]);
        let moved = apply_local(&psi, [&u, &v]);
        let a = schmidt2_complex(&psi).unwrap();
        let b = schmidt2_complex(&moved).unwrap();
        for (x, y) in a.coefficients.iter().zip(b.coefficients) {
            prop_assert!((x - y).abs() < 1e-10);
        }
        prop_assert!(b.residual < 1e-10);
    }

    #[test]
    fn acin_spectrum_is_local_unitary_invariant(
        h in 0.1f64..2.0,
        which in 0usize..6,
        angles in proptest::array::uniform12(-3.2f64..3.2),
    ) {
        let psi = to_complex(&state(3, ACIN_STATES[which], h));
        let us: Vec<Unitary2> = angles.chunks(4).map(|a| euler_unitary(a[0], a[1], a[2], a[3])).collect();
        let moved = apply_local(&psi, [&us[0], &us[1], &us[2]]);
        let a = acin3_complex(&psi).unwrap();
        let b = acin3_complex(&moved).unwrap();
        for (x, y) in a.lambdas.iter().zip(b.lambdas) {
            prop_assert!((x - y).abs() < 1e-8, "{:?} vs {:?}", a.lambdas, b.lambdas);
        }
        prop_assert!(b.residual < 1e-8);
    }
}
