mod common;

use chebpsi::cheb::{generate_int, recurrence_coefficient, u_sequence};
use chebpsi::{gen_g, gen_u, gen_v, gen_w, gen_xy, ChebKind, Error, GIndex, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};

use common::{poly, X_TABLE, Y_TABLE};

#[test]
fn u_square_identity_to_200() {
    let us = u_sequence(201);
    for n in 1..=200 {
        let lhs = &(&us[n] * &us[n]) - &IntPoly::one();
        assert_eq!(lhs, &us[n - 1] * &us[n + 1], "n = {n}");
    }
}

#[test]
fn small_values() {
    assert_eq!(gen_u(0), poly(&[1]));
    assert_eq!(gen_u(1), poly(&[0, 2]));
    assert_eq!(gen_u(3), poly(&[0, -4, 0, 8]));
    assert_eq!(gen_v(0), poly(&[1]));
    assert_eq!(gen_w(0), poly(&[1]));
    assert_eq!(gen_v(1), poly(&[-1, 2]));
    assert_eq!(gen_w(1), poly(&[1, 2]));
    assert_eq!(&gen_u(1) + &gen_u(0), gen_w(1));
}

#[test]
fn degree_and_leading_coefficient() {
    for n in 0..=120u64 {
        let lead = BigInt::from(2).pow(n as u32);
        for (name, p) in [("U", gen_u(n)), ("V", gen_v(n)), ("W", gen_w(n))] {
            assert_eq!(p.degree(), Some(n as usize), "{name}_{n}");
            assert_eq!(p.leading(), Some(&lead), "{name}_{n}");
        }
    }
}

#[test]
fn fifth_and_sixth_kind_tables() {
    for n in 0..=6u64 {
        assert_eq!(
            gen_xy(ChebKind::X, n).unwrap(),
            poly(X_TABLE[n as usize]),
            "X_{n}"
        );
        assert_eq!(
            gen_xy(ChebKind::Y, n).unwrap(),
            poly(Y_TABLE[n as usize]),
            "Y_{n}"
        );
    }
}

#[test]
fn monic_forms_scale_to_integer_forms() {
    assert_eq!(
        gen_g(GIndex::fifth(2))
            .unwrap()
            .clear_denominators()
            .unwrap(),
        poly(&[-3, 0, 4])
    );
    assert_eq!(
        gen_g(GIndex::sixth(6))
            .unwrap()
            .clear_denominators()
            .unwrap(),
        poly(&[-1, 0, 10, 0, -24, 0, 16])
    );
    assert_eq!(
        recurrence_coefficient(1, 3).unwrap(),
        BigRational::new((-3).into(), 4.into())
    );
}

#[test]
fn g_is_monic_of_degree_n() {
    for n in 0..=50 {
        for idx in [GIndex::fifth(n), GIndex::sixth(n)] {
            let g = gen_g(idx).unwrap();
            assert!(g.is_monic(), "{idx:?}");
            assert_eq!(g.degree(), Some(n as usize), "{idx:?}");
        }
    }
}

#[test]
fn xy_parity_structure() {
    for kind in [ChebKind::X, ChebKind::Y] {
        for n in 0..=50u64 {
            let p = generate_int(kind, n).unwrap();
            assert_eq!(p.degree(), Some(n as usize));
            for (i, c) in p.coeffs().iter().enumerate() {
                if (i as u64 + n) % 2 == 1 {
                    assert!(num_traits::Zero::is_zero(c), "{kind}_{n} has x^{i}");
                }
            }
        }
    }
}

#[test]
fn bad_g_parameter_is_reported() {
    assert!(matches!(
        gen_g(GIndex { n: 4, m: 1 }),
        Err(Error::DenominatorZero { k: 1, m: 1 })
    ));
}

#[test]
fn airfoil_trig_definitions() {
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    for _ in 0..2000 {
        let n = rng.gen_range(0..=30u64);
        let t: f64 = rng.gen_range(0.05..std::f64::consts::PI - 0.05);
        let x = t.cos();
        let half = n as f64 + 0.5;
        let v = (half * t).cos() / (t / 2.0).cos();
        let w = (half * t).sin() / (t / 2.0).sin();
        assert!((gen_v(n).eval_real(x) - v).abs() <= 1e-9, "V_{n}({t})");
        assert!((gen_w(n).eval_real(x) - w).abs() <= 1e-9, "W_{n}({t})");
        assert!((gen_u(n).eval_real(x) - common::u_trig(n, t)).abs() <= 1e-9);
    }
}
