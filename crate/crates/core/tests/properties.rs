use deformed_dicke::dicke::check_sym_identity;
use deformed_dicke::export::StateExport;
use deformed_dicke::hilbert::{proportional, BasisState, Generator, LinearOperator, StateVector};
use deformed_dicke::scalar::{q_number, rational, sqrt_rational, HScalar, QValue, RadicalSum};
use deformed_dicke::selector::{resolve, Parameter, ResolvedState, Selector};
use proptest::prelude::*;

fn radical_sum() -> impl Strategy<Value = RadicalSum> {
    prop::collection::vec((-20i64..=20, 1i64..=9, 1u64..=50), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(RadicalSum::zero(), |acc, (n, d, r)| &acc + &RadicalSum::radical(rational(n, d), r).unwrap())
    })
}

fn hscalar() -> impl Strategy<Value = HScalar> {
    prop::collection::vec((radical_sum(), 0u32..=4), 0..4)
        .prop_map(|terms| terms.into_iter().fold(HScalar::zero(), |acc, (c, p)| &acc + &HScalar::monomial(c, p)))
}

fn basis_state() -> impl Strategy<Value = BasisState> {
    (1usize..=6).prop_flat_map(|n| (Just(n), 0u32..(1 << n))).prop_map(|(n, m)| BasisState::new(n, m).unwrap())
}

/// Sparse nonzero state on three sites.
fn state3() -> impl Strategy<Value = StateVector> {
    prop::collection::vec((0u32..8, hscalar()), 1..5)
        .prop_map(|entries| {
            StateVector::from_entries(3, entries.into_iter().map(|(m, a)| (BasisState::new(3, m).unwrap(), a))).unwrap()
        })
        .prop_filter("nonzero", |s| !s.is_zero())
}

proptest! {
    #[test]
    fn ring_axioms(a in hscalar(), b in hscalar(), c in hscalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn radical_ring_closes(a in radical_sum(), b in radical_sum()) {
        let p = &a * &b;
        prop_assert!((p.to_f64() - a.to_f64() * b.to_f64()).abs() <= 1e-9 * (1.0 + p.to_f64().abs()));
        prop_assert!(p.terms().all(|(_, c)| *c != rational(0, 1)));
    }

    #[test]
    fn square_roots_square_back(n in 0i64..=2000, d in 1i64..=60) {
        let r = rational(n, d);
        let s = sqrt_rational(&r).unwrap();
        prop_assert_eq!((&s * &s).as_rational(), Some(r));
    }

    #[test]
    fn evaluation_is_multiplicative(a in hscalar(), b in hscalar(), h in -2.0f64..2.0) {
        let (x, y) = (a.evaluate(h), b.evaluate(h));
        let p = (&a * &b).evaluate(h);
        prop_assert!((p - x * y).abs() <= 1e-12 * (1.0 + x.abs()) * (1.0 + y.abs()));
        prop_assert_eq!(a.evaluate(0.0), a.constant_term().to_f64());
    }

    #[test]
    fn scalar_text_round_trips(a in hscalar()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<HScalar>().unwrap(), a, "{}", text);
    }

    #[test]
    fn q_number_is_symmetric_in_q(n in -6.0f64..6.0, q in 0.05f64..20.0) {
        let q = QValue::new(q).unwrap();
        let (a, b) = (q_number(n, &q), q_number(n, &q.inverse()));
        prop_assert!((a - b).abs() <= 1e-12 * (1.0 + a.abs()));
    }

    #[test]
    fn kets_round_trip(b in basis_state()) {
        prop_assert_eq!(b.to_string().parse::<BasisState>().unwrap(), b);
        prop_assert_eq!(b.to_ascii().parse::<BasisState>().unwrap(), b);
        prop_assert_eq!(BasisState::from_dense_index(b.n_sites(), b.dense_index()), b);
    }

    #[test]
    fn proportionality_is_an_equivalence(a in state3(), s in hscalar(), t in hscalar()) {
        prop_assume!(!s.is_zero() && !t.is_zero());
        let b = a.scale(&s);
        let c = b.scale(&t);
        prop_assert!(proportional(&a, &a).unwrap().is_some());
        prop_assert!(proportional(&a, &b).unwrap().is_some());
        prop_assert!(proportional(&b, &a).unwrap().is_some());
        prop_assert!(proportional(&a, &c).unwrap().is_some());
    }

    #[test]
    fn normalization_gives_unit_vectors(a in state3(), h in -2.0f64..2.0) {
        if let Ok(v) = a.normalize_at(h) {
            prop_assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn exports_round_trip(a in state3(), h in prop::option::of(-2.0f64..2.0)) {
        let selector: Selector = "ket:uuu".parse().unwrap();
        let parameter = h.map_or(Parameter::None, Parameter::H);
        let state = ResolvedState::Exact(a.clone());
        let export = StateExport::new(&selector, parameter, &state).unwrap();
        let text = export.to_json().unwrap();
        let back = StateExport::from_json(&text).unwrap();
        prop_assert_eq!(back.exact_state().unwrap(), Some(a));
        prop_assert_eq!(back.to_json().unwrap(), text);
    }

    #[test]
    fn selectors_round_trip(n in 1usize..=8, k in 0usize..=8, label in prop::sample::select(vec!['D', 'M', 'V', 'T', 'R', 'Q'])) {
        let k = k.min(n);
        let twice_m = 2 * k as i32 - n as i32;
        for text in [format!("h:{n}:k={k}"), format!("q:{n}:{label}{twice_m}"), format!("none:{n}:W")] {
            let s: Selector = text.parse().unwrap();
            prop_assert_eq!(s.to_string(), text);
        }
    }

    #[test]
    fn symmetric_identity_holds(values in prop::collection::vec(-30i64..=30, 1..=8), r in 0usize..=8, i in 0usize..=8) {
        prop_assume!(i <= values.len() && r <= values.len() - i);
        prop_assert!(check_sym_identity(&values, r, i));
    }
}

#[test]
fn site_commutators() {
    for n in 1..=4 {
        for site in 1..=n {
            let op = |g| LinearOperator::site_op(g, site, n).unwrap();
            let (h, zp, zm) = (op(Generator::Hgen), op(Generator::Zplus), op(Generator::Zminus));
            let two = HScalar::from_integer(2);
            assert_eq!(zp.commutator(&zm).unwrap(), h);
            assert_eq!(h.commutator(&zp).unwrap(), zp.scale(&two));
            assert_eq!(h.commutator(&zm).unwrap(), zm.scale(&-two));
        }
    }
}

#[test]
fn ket_selectors_resolve_to_basis_states() {
    let ResolvedState::Exact(s) = resolve(&"ket:↑↓↑".parse().unwrap(), Parameter::None, 11).unwrap() else {
        panic!("kets are exact");
    };
    assert_eq!(s.support_len(), 1);
    assert!(s.amplitude(&"udu".parse().unwrap()).is_one());
}
