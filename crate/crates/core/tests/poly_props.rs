use chebpsi::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-50i64..=50, 0..=9).prop_map(|c| IntPoly::from_i64s(&c))
}

fn nonzero_int_poly() -> impl Strategy<Value = IntPoly> {
    int_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rat() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn rat_poly() -> impl Strategy<Value = RatPoly> {
    prop::collection::vec(rat(), 0..=9).prop_map(RatPoly::new)
}

fn canonical<C: Zero>(c: &[C]) -> bool {
    c.last().is_none_or(|x| !x.is_zero())
}

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(1000)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn int_ring_axioms(p in int_poly(), q in int_poly(), r in int_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, IntPoly::zero());
        prop_assert_eq!(&p * &IntPoly::one(), p.clone());
        prop_assert_eq!(&p + &(-&p), IntPoly::zero());
    }

    #[test]
    fn rat_ring_axioms(p in rat_poly(), q in rat_poly(), r in rat_poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p - &p, RatPoly::zero());
    }

    #[test]
    fn results_are_canonical(p in int_poly(), q in int_poly(), a in rat_poly(), b in rat_poly()) {
        for x in [&p + &q, &p - &q, &p * &q, -&p] {
            prop_assert!(canonical(x.coeffs()));
        }
        for x in [&a + &b, &a - &b, &a * &b] {
            prop_assert!(canonical(x.coeffs()));
        }
    }

    #[test]
    fn product_degree_adds(p in nonzero_int_poly(), q in nonzero_int_poly()) {
        let pq = &p * &q;
        prop_assert_eq!(pq.degree(), Some(p.degree().unwrap() + q.degree().unwrap()));
    }

    #[test]
    fn div_exact_round_trip(p in int_poly(), q in nonzero_int_poly()) {
        let pq = &p * &q;
        prop_assert_eq!(pq.div_exact(&q).unwrap(), p);
    }

    #[test]
    fn div_exact_rejects_remainders(p in int_poly(), q in nonzero_int_poly(), c in 1i64..=50) {
        // p*q + c leaves remainder c when q has positive degree
        prop_assume!(q.degree().unwrap() > 0);
        let shifted = &(&p * &q) + &IntPoly::from_i64s(&[c]);
        prop_assert!(shifted.div_exact(&q).is_err());
    }

    #[test]
    fn eval_rat_is_homomorphism(p in int_poly(), q in int_poly(), t in rat()) {
        prop_assert_eq!((&p * &q).eval_rat(&t), p.eval_rat(&t) * q.eval_rat(&t));
        prop_assert_eq!((&p + &q).eval_rat(&t), p.eval_rat(&t) + q.eval_rat(&t));
    }

    #[test]
    fn eval_real_tracks_exact(p in int_poly(), n in -20i64..=20) {
        let t = n as f64 / 16.0;
        let exact = p.eval_rat(&BigRational::new(n.into(), 16.into()));
        let approx = num_traits::ToPrimitive::to_f64(&exact).unwrap();
        prop_assert!((p.eval_real(t) - approx).abs() <= 1e-9 * (1.0 + approx.abs()));
    }

    #[test]
    fn clear_denominators_scale_invariant(p in rat_poly(), a in rat()) {
        prop_assume!(!p.is_zero() && !a.is_zero());
        let base = p.clear_denominators().unwrap();
        prop_assert_eq!(p.scale(&a).clear_denominators().unwrap(), base.clone());
        prop_assert!(base.leading().unwrap().is_positive());
        prop_assert!(base.content().is_one());
    }
}

#[test]
fn clear_denominators_of_zero_is_error() {
    assert!(RatPoly::zero().clear_denominators().is_err());
}

#[test]
fn div_by_zero_is_error() {
    assert!(IntPoly::one().div_exact(&IntPoly::zero()).is_err());
}

#[test]
fn documented_examples() {
    let p = IntPoly::from_i64s;
    assert!((&p(&[0, 2]) + &p(&[0, -2])).coeffs().is_empty());
    assert_eq!(&p(&[1, 2]) + &p(&[-1, 2]), p(&[0, 4]));
    assert_eq!(&p(&[-2, 2]) * &p(&[2, 2]), p(&[-4, 0, 4]));
    assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
    assert_eq!(
        p(&[-1, 0, 0, 0, 0, 1]).div_exact(&p(&[-1, 1])).unwrap(),
        p(&[1, 1, 1, 1, 1])
    );
    let big: BigInt = BigInt::from(2).pow(200u32);
    let q = IntPoly::new(vec![big.clone(), BigInt::one()]);
    assert_eq!((&q * &q).div_exact(&q).unwrap(), q);
}
