use std::collections::BTreeMap;
use std::sync::Arc;

use gspin_bessel::bessel::{bessel_value, s_delta};
use gspin_bessel::characters::{alternator_w, delta_gsp, delta_gsp_product, DominantWeight};
use gspin_bessel::evalcheck::{prob_equal, EvalConfig, Verdict};
use gspin_bessel::exactalg::{rat, ExponentVector};
use gspin_bessel::rankinselberg::{d_series, verify_a8_from, Comparison};
use gspin_bessel::rootdata::enumerate_weyl;
use gspin_bessel::{LaurentPoly, RationalFunction, SatakeSpec, Torus, VarTable, WeylElement};
use proptest::prelude::*;

fn poly_strategy(n: usize) -> impl Strategy<Value = LaurentPoly> {
    let vars = VarTable::standard(n);
    let width = vars.len();
    prop::collection::vec((-5i64..=5, prop::collection::vec(-2i32..=2, width)), 0..6).prop_map(move |terms| {
        LaurentPoly::from_terms(&vars, terms.into_iter().map(|(c, e)| (ExponentVector::from_vec(e), rat(c))))
    })
}

fn nonzero_poly(n: usize) -> impl Strategy<Value = LaurentPoly> {
    poly_strategy(n).prop_filter("nonzero", |p| !p.is_zero())
}

fn dominant(n: usize, max: i32) -> impl Strategy<Value = DominantWeight> {
    prop::collection::vec(0..=max, n).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        DominantWeight::new(v).unwrap()
    })
}

fn weyl(n: usize) -> impl Strategy<Value = WeylElement> {
    let all = enumerate_weyl(n);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(p in poly_strategy(1), q in poly_strategy(1), r in poly_strategy(1)) {
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn exact_division_inverts_product(p in poly_strategy(1), q in nonzero_poly(1)) {
        prop_assert_eq!((&p * &q).exact_div(&q).unwrap(), p);
    }

    #[test]
    fn json_round_trip(p in poly_strategy(2), q in nonzero_poly(2)) {
        let f = RationalFunction::new(p, q).unwrap();
        let text = serde_json::to_string(&f.to_json()).unwrap();
        let back = RationalFunction::from_json(&serde_json::from_str(&text).unwrap()).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn weyl_action_is_invertible(w in weyl(3), p in poly_strategy(3)) {
        prop_assert_eq!(w.inverse().act(&w.act(&p)), p);
    }

    #[test]
    fn weyl_action_composes(w in weyl(2), u in weyl(2), p in poly_strategy(2)) {
        prop_assert_eq!(w.compose(&u).act(&p), w.act(&u.act(&p)));
    }

    #[test]
    fn alternator_is_anti_invariant(w in weyl(2), p in poly_strategy(2)) {
        let a = alternator_w(&p);
        prop_assert_eq!(w.act(&a), a.scale(&rat(w.sign() as i64)));
    }

    #[test]
    fn bessel_symmetric_in_z(delta in dominant(2, 3)) {
        let split = SatakeSpec::split(2);
        let v = split.vars();
        let swap = BTreeMap::from([(v.b(), LaurentPoly::term(v, 1, &[(v.s0(), 2), (v.b(), -1)]))]);
        let b = bessel_value(&delta, &split).unwrap();
        prop_assert_eq!(b.substitute(&swap).unwrap(), b);

        let nonsplit = SatakeSpec::nonsplit(2);
        let v = nonsplit.vars();
        let swap = BTreeMap::from([(v.s0(), LaurentPoly::term(v, -1, &[(v.s0(), 1)]))]);
        let s = s_delta(&delta, &nonsplit).unwrap();
        prop_assert_eq!(s.substitute(&swap).unwrap(), s);
    }

    #[test]
    fn split_value_has_q_only_denominator(delta in dominant(3, 2)) {
        let spec = SatakeSpec::split(3);
        let b = bessel_value(&delta, &spec).unwrap();
        let v = spec.vars();
        prop_assert!((0..v.len()).filter(|&i| i != v.v()).all(|i| !b.den().uses_var(i)));
    }

    #[test]
    fn modular_testing_separates(p in poly_strategy(2), seed in any::<u64>()) {
        let vars = p.vars().clone();
        let cfg = EvalConfig { trials: 3, seed, ..EvalConfig::default() };
        let same = prob_equal(&p, &p.clone(), &cfg).unwrap();
        prop_assert!(same.is_equal());
        let bumped = &p + &LaurentPoly::term(&vars, 1, &[(vars.a(1), 7)]);
        let verdict = prob_equal(&p, &bumped, &cfg).unwrap();
        prop_assert!(matches!(verdict, Verdict::Unequal(_)));
        prop_assert_eq!(verdict, prob_equal(&p, &bumped, &cfg).unwrap());
    }
}

#[test]
fn weyl_denominator_fast_path() {
    let vars: Arc<VarTable> = VarTable::standard(3);
    let cfg = EvalConfig { trials: 5, ..EvalConfig::default() };
    assert!(prob_equal(&delta_gsp(&vars), &delta_gsp_product(&vars), &cfg).unwrap().is_equal());
}

#[test]
fn d_series_invariance() {
    let d = d_series(2, 3).unwrap();
    let vars = d.vars().clone();
    let swap_g = BTreeMap::from([
        (vars.g(1), LaurentPoly::var(&vars, vars.g(2))),
        (vars.g(2), LaurentPoly::var(&vars, vars.g(1))),
    ]);
    for k in 0..=3 {
        let c = d.coeff(k);
        for w in WeylElement::simple_reflections(2) {
            assert_eq!(&w.act(c), c);
        }
        assert_eq!(&c.substitute(&swap_g).unwrap(), c);
    }
}

#[test]
fn perturbed_s_delta_breaks_zeta_identity() {
    for torus in [Torus::Split, Torus::NonSplit] {
        let spec = SatakeSpec::new(2, torus).unwrap();
        let flipped = DominantWeight::new(vec![1, 0]).unwrap();
        let report = verify_a8_from(&spec, 3, &Comparison::Exact, "perturbed", |d| {
            let s = s_delta(d, &spec)?;
            Ok(if *d == flipped { s.neg() } else { s })
        })
        .unwrap();
        assert_eq!(report.first_failure(), Some(1), "{torus}");
    }
}
