use std::cmp::Ordering;

use gordian_core::circle::{arcs_of_generator, generator_sign_at};
use gordian_core::laurent::torus_poly;
use gordian_core::signature::{
    eval_formal_signature, formal_signature_stepfun, isolate_circle_roots, signature_of_poly, sup_distance,
    RootInterval,
};
use gordian_core::{FormalKnot, IntLaurent, Sign, StepFun, TurnAngle};
use num_bigint::BigUint;
use num_rational::{BigRational, Rational64};
use num_traits::{One, ToPrimitive, Zero};
use proptest::prelude::*;

const LIMIT: u64 = 1000;

fn knot() -> impl Strategy<Value = FormalKnot> {
    let summand = (1u64..=22, any::<bool>()).prop_map(|(h, m)| FormalKnot::torus(2 * h + 1, m).unwrap());
    prop::collection::vec(summand, 0..5)
        .prop_map(|parts| parts.iter().fold(FormalKnot::unknot(), |acc, k| acc.connected_sum(k)))
}

fn stepfun(k: &FormalKnot) -> StepFun {
    formal_signature_stepfun(k, LIMIT).unwrap()
}

fn angle() -> impl Strategy<Value = TurnAngle> {
    (0i64..720).prop_map(|n| TurnAngle::from_ratio(n, 720))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn signature_is_additive(a in knot(), b in knot(), theta in angle()) {
        let sum = a.connected_sum(&b);
        prop_assert_eq!(stepfun(&sum), stepfun(&a).add(&stepfun(&b)));
        prop_assert_eq!(
            eval_formal_signature(&sum, &theta),
            eval_formal_signature(&a, &theta) + eval_formal_signature(&b, &theta)
        );
    }

    #[test]
    fn mirror_negates(a in knot(), theta in angle()) {
        prop_assert_eq!(stepfun(&a.mirror()), stepfun(&a).neg());
        prop_assert_eq!(eval_formal_signature(&a.mirror(), &theta), -eval_formal_signature(&a, &theta));
        prop_assert!(stepfun(&a.connected_sum(&a.mirror())).sup_norm() == 0);
    }

    #[test]
    fn stepfun_matches_pointwise_evaluation(a in knot(), theta in angle()) {
        let expected = Rational64::from_integer(eval_formal_signature(&a, &theta));
        prop_assert_eq!(stepfun(&a).value_at(&theta), expected);
    }

    #[test]
    fn sup_distance_is_a_pseudometric(a in knot(), b in knot(), c in knot()) {
        let (f, g, h) = (stepfun(&a), stepfun(&b), stepfun(&c));
        prop_assert_eq!(sup_distance(&f, &f), 0);
        prop_assert_eq!(sup_distance(&f, &g), sup_distance(&g, &f));
        prop_assert!(sup_distance(&f, &h) <= sup_distance(&f, &g) + sup_distance(&g, &h));
    }

    #[test]
    fn sup_norm_matches_sampling(a in knot()) {
        let f = stepfun(&a);
        let sampled = (0..400i64)
            .map(|n| eval_formal_signature(&a, &TurnAngle::from_ratio(2 * n + 1, 800)).unsigned_abs())
            .max()
            .unwrap();
        prop_assert!(sampled <= f.sup_norm());
        let bps: Vec<TurnAngle> = f.breakpoints().iter().map(|b| b.as_rational().unwrap().clone()).collect();
        let n = bps.len();
        let attained = (0..n.max(1))
            .map(|j| {
                if n == 0 {
                    return eval_formal_signature(&a, &TurnAngle::zero()).unsigned_abs();
                }
                let lo = bps[j].value().clone();
                let mut hi = bps[(j + 1) % n].value().clone();
                if hi <= lo {
                    hi += BigRational::one();
                }
                let mid = TurnAngle::new((lo + hi) / BigRational::from_integer(2.into()));
                eval_formal_signature(&a, &mid).unsigned_abs()
            })
            .max()
            .unwrap();
        prop_assert_eq!(attained, f.sup_norm());
    }

    #[test]
    fn product_signature_is_one_minus_product_of_signs(
        ps in prop::sample::subsequence(vec![3u64, 5, 7, 11, 13, 17, 19, 23], 1..4),
        theta in angle(),
    ) {
        let d = ps.iter().fold(IntLaurent::one(), |acc, &p| &acc * &torus_poly(p).unwrap());
        let f = signature_of_poly(&d).unwrap();
        let sign: i64 = ps.iter().map(|&p| generator_sign_at(&BigUint::from(p), &theta).to_i8() as i64).product();
        if sign != 0 {
            prop_assert_eq!(f.value_at(&theta), Rational64::from_integer(1 - sign));
        } else {
            prop_assert_eq!(f.value_at(&theta), Rational64::one());
        }
    }
}

#[test]
fn generator_signature_locus_is_the_negative_arcs() {
    for p in (3..=105u64).step_by(2) {
        let f = signature_of_poly(&torus_poly(p).unwrap()).unwrap();
        assert_eq!(f.locus(2).unwrap(), arcs_of_generator(p).unwrap(), "p = {p}");
        assert_eq!(f.locus(0).unwrap(), arcs_of_generator(p).unwrap().complement(), "p = {p}");
        assert_eq!(f.breakpoints().len() as u64, p - 1);
        assert_eq!(f, formal_signature_stepfun(&FormalKnot::torus(p, false).unwrap(), LIMIT).unwrap());
    }
}

#[test]
fn torus_roots_are_isolated() {
    for p in (3..=105u64).step_by(2) {
        let iso = isolate_circle_roots(&torus_poly(p).unwrap()).unwrap();
        assert_eq!(iso.circle_root_count() as u64, p - 1, "p = {p}");
        let q = iso.chebyshev();
        // roots of D_p on the upper half circle: θ = (2k+1)/(2p) < 1/2
        let mut expected: Vec<f64> = (0..(p - 1) / 2)
            .map(|k| 2.0 * (std::f64::consts::PI * (2 * k + 1) as f64 / p as f64).cos())
            .collect();
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let intervals = iso.intervals();
        assert_eq!(intervals.len(), expected.len(), "p = {p}");
        for (iv, x) in intervals.iter().zip(&expected) {
            let (lo, hi) = (iv.lo().to_f64().unwrap(), iv.hi().to_f64().unwrap());
            assert!(lo - 1e-12 <= *x && *x <= hi + 1e-12, "p = {p}: {x} not in [{lo}, {hi}]");
            match iv {
                RootInterval::Exact(r) => assert_eq!(q.sign_at(r), Ordering::Equal),
                RootInterval::Open { lo, hi } => {
                    let (a, b) = (q.sign_at(lo), q.sign_at(hi));
                    assert!(a != Ordering::Equal && b != Ordering::Equal && a != b, "p = {p}");
                }
            }
        }
    }
}

#[test]
fn general_polynomial_breakpoints_are_conjugate_pairs() {
    let d: IntLaurent = "-t^-2+3t^-1-3+3t-t^2".parse().unwrap();
    let f = signature_of_poly(&d).unwrap();
    assert_eq!(f.breakpoints().len(), 2);
    assert_eq!(f.breakpoints()[0].conjugate(), f.breakpoints()[1]);
    assert_eq!(f.value_at(&TurnAngle::zero()), Rational64::zero());
    assert_eq!(f.value_at(&TurnAngle::half()), Rational64::from_integer(2));
    // the root sits near θ = 0.2194 where d changes sign
    let d_at = |theta: f64| -> f64 {
        d.terms()
            .map(|(e, c)| c.to_f64().unwrap() * (2.0 * std::f64::consts::PI * e as f64 * theta).cos())
            .sum()
    };
    assert!(d_at(0.2190) > 0.0 && d_at(0.2198) < 0.0);
    assert!(generator_sign_at(&BigUint::from(3u32), &TurnAngle::half()) == Sign::Negative);
}
