use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;
use umbra_core::algebra::{poly_substitute, rat, Monomial, MultiPoly, Rational, Var};
use umbra_core::barnes::{bb_number_umbral, dual_transform, BarnesContext, DualSequence};
use umbra_core::identities::{check_palindromic_general, PalindromicWeights};
use umbra_core::umbral::{eval, StandardMoments, UmbralPoly, UmbralSymbol};
use umbra_core::TruncatedSeries;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    (1i64..=9, 1i64..=9, any::<bool>()).prop_map(|(p, q, neg)| rat(if neg { -p } else { p }, q))
}

fn var() -> impl Strategy<Value = Var> {
    prop_oneof![Just(Var::X), (1u32..=3).prop_map(Var::A)]
}

fn monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((var(), 0u32..=3), 0..=3).prop_map(Monomial::from_pairs)
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((monomial(), rational()), 0..=5).prop_map(MultiPoly::from_terms)
}

fn umbral_poly() -> impl Strategy<Value = UmbralPoly> {
    let sym = prop_oneof![
        (1u32..=2).prop_map(UmbralSymbol::bernoulli),
        (1u32..=2).prop_map(UmbralSymbol::uniform)
    ];
    prop::collection::vec((sym, 0u32..=4, poly()), 0..=3).prop_map(|parts| {
        parts
            .into_iter()
            .map(|(s, e, p)| UmbralPoly::symbol_power(s, e) * UmbralPoly::from_multi(&p))
            .sum()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
        prop_assert_eq!(&p * &MultiPoly::one(), p.clone());
    }

    #[test]
    fn no_zero_coefficients_survive(p in poly(), q in poly()) {
        for (_, c) in (&p * &q - &q * &p + p.clone()).terms() {
            prop_assert!(!c.is_zero());
        }
    }

    #[test]
    fn text_round_trip(p in poly()) {
        let text = p.to_string();
        let back: MultiPoly = text.parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn substitution_is_a_homomorphism(p in poly(), q in poly(), img in poly(), v in var()) {
        let b = BTreeMap::from([(v, img)]);
        prop_assert_eq!(
            poly_substitute(&(&p + &q), &b),
            &poly_substitute(&p, &b) + &poly_substitute(&q, &b)
        );
        prop_assert_eq!(
            poly_substitute(&(&p * &q), &b),
            &poly_substitute(&p, &b) * &poly_substitute(&q, &b)
        );
    }

    #[test]
    fn eval_is_linear(p in umbral_poly(), q in umbral_poly(), c in rational()) {
        let e = |u: &UmbralPoly| eval(u, &StandardMoments).unwrap();
        prop_assert_eq!(e(&(&p + &q)), &e(&p) + &e(&q));
        prop_assert_eq!(e(&p.scale(&c)), e(&p).scale(&c));
    }

    #[test]
    fn series_inverse(cs in prop::collection::vec(rational(), 1..=8), c0 in nonzero_rational()) {
        let order = cs.len();
        let mut coeffs = vec![c0];
        coeffs.extend(cs);
        let s = TruncatedSeries::from_rationals(order, coeffs);
        let prod = s.mul(&s.inv().unwrap()).unwrap();
        prop_assert_eq!(prod, TruncatedSeries::one(order));
    }

    #[test]
    fn dual_is_an_involution(v in prop::collection::vec(rational(), 0..=16)) {
        let s = DualSequence::from_rationals(v);
        prop_assert_eq!(dual_transform(&dual_transform(&s)), s);
    }

    #[test]
    fn barnes_numbers_are_symmetric(k in 0u32..=6, a in prop::collection::vec(nonzero_rational(), 1..=3)) {
        let forward = bb_number_umbral(k, &BarnesContext::numeric(a.clone()).unwrap());
        let mut rev = a;
        rev.reverse();
        prop_assert_eq!(forward, bb_number_umbral(k, &BarnesContext::numeric(rev).unwrap()));
    }

    #[test]
    fn barnes_numbers_scale(k in 0u32..=6, a in prop::collection::vec(nonzero_rational(), 1..=3), t in nonzero_rational()) {
        // B_k(t a) = t^{k-n} B_k(a)
        let n = a.len() as i32;
        let scaled: Vec<Rational> = a.iter().map(|v| v * &t).collect();
        let lhs = bb_number_umbral(k, &BarnesContext::numeric(scaled).unwrap());
        let rhs = bb_number_umbral(k, &BarnesContext::numeric(a).unwrap())
            .scale(&num_traits::pow::Pow::pow(t, k as i32 - n));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn random_palindromic_weights_vanish(
        half in prop::collection::vec(rational(), 1..=3),
        odd_len in any::<bool>(),
        m in prop_oneof![Just(1u32), Just(3), Just(5)],
    ) {
        let mut alpha = half.clone();
        if odd_len {
            alpha.extend(half.iter().rev().cloned());
        } else {
            alpha.extend(half.iter().rev().skip(1).cloned());
        }
        prop_assume!(alpha.len() >= 2 && alpha.len() <= 5);
        let w = PalindromicWeights::new(alpha).unwrap();
        let report = check_palindromic_general(w, m).unwrap();
        prop_assert!(report.all_passed(), "{}", report.label());
    }
}
