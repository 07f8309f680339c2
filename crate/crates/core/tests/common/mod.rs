//! Reference values shared by the integration suites.
//!
//! Literal tables are transcribed from the published polynomial lists; the
//! floating-point reconstructions are independent of the library's algebra.
#![allow(dead_code)]

use chebpsi::IntPoly;

/// `X_0 .. X_6`, ascending coefficients.
pub const X_TABLE: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[-3, 0, 4],
    &[0, -5, 0, 6],
    &[5, 0, -20, 0, 16],
    &[0, 35, 0, -112, 0, 80],
    &[-7, 0, 56, 0, -112, 0, 64],
];

/// `Y_0 .. Y_6`, ascending coefficients.
pub const Y_TABLE: [&[i64]; 7] = [
    &[1],
    &[0, 1],
    &[-1, 0, 2],
    &[0, -5, 0, 8],
    &[3, 0, -16, 0, 16],
    &[0, 7, 0, -28, 0, 24],
    &[-1, 0, 10, 0, -24, 0, 16],
];

pub const PSI_11: &[i64] = &[1, 6, -12, -32, 16, 32];
pub const PSI_22: &[i64] = &[-1, 6, 12, -32, -16, 32];
pub const PSI_13: &[i64] = &[-1, 6, 24, -32, -80, 32, 64];
pub const PSI_26: &[i64] = &[-1, -6, 24, 32, -80, -32, 64];

/// Low-degree factors as printed next to the twelfth-degree examples.
pub const PSI_SMALL: [(u64, &[i64]); 6] = [
    (1, &[-2, 2]),
    (2, &[2, 2]),
    (3, &[1, 2]),
    (4, &[0, 2]),
    (6, &[-1, 2]),
    (12, &[-3, 0, 4]),
];

/// `(kind, n, sign, indices)` for the worked factorizations.
pub const GOLDEN: [(&str, u64, i8, &[u64]); 5] = [
    ("V", 12, 1, &[8, 24, 26]),
    ("V", 12, -1, &[1, 3, 4, 6, 12, 13]),
    ("W", 12, 1, &[8, 13, 24]),
    ("W", 12, -1, &[2, 3, 4, 6, 12, 26]),
    ("W", 11, 1, &[2, 3, 4, 6, 12, 22]),
];

pub fn poly(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// `prod 2 (x - cos(2 pi k / d))` over `1 <= k < d/2` coprime to `d`,
/// expanded in floating point and rounded. Reliable for small `d` only.
pub fn psi_from_roots(d: u64) -> IntPoly {
    let roots: Vec<f64> = match d {
        1 => vec![1.0],
        2 => vec![-1.0],
        _ => (1..d)
            .filter(|&k| 2 * k < d && gcd(k, d) == 1)
            .map(|k| (2.0 * std::f64::consts::PI * k as f64 / d as f64).cos())
            .collect(),
    };
    let mut c = vec![1.0f64];
    for r in roots {
        let mut next = vec![0.0; c.len() + 1];
        for (i, a) in c.iter().enumerate() {
            next[i + 1] += 2.0 * a;
            next[i] -= 2.0 * r * a;
        }
        c = next;
    }
    IntPoly::new(c.iter().map(|v| (v.round() as i64).into()).collect())
}

/// `U_n(cos t)` from the sine ratio.
pub fn u_trig(n: u64, t: f64) -> f64 {
    ((n as f64 + 1.0) * t).sin() / t.sin()
}
