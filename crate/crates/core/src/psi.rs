//! `Psi_d(x)`, the minimal polynomial of `cos(2*pi/d)` scaled by `2^(phi(d)/2)`,
//! plus the divisor and totient helpers the factorizations are indexed by.
//!
//! For `d > 2` the cyclotomic polynomial `Phi_d(z)` is palindromic of even
//! degree `2h`, so `Phi_d(z) = z^h * P(z + 1/z)` for a monic integer `P` of
//! degree `h`. Substituting `z + 1/z = 2x` gives `Psi_d(x) = P(2x)`, whose
//! roots are `cos(2*pi*k/d)` for `k` coprime to `d`, `1 <= k < d/2`.
//! `Psi_1 = 2(x - 1)` and `Psi_2 = 2(x + 1)` are fixed by definition.

use std::collections::HashMap;
use std::f64::consts::PI;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::IntPoly;

/// All positive divisors of `n`, ascending. `divisors(0)` is empty.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1u64;
    while i.saturating_mul(i) <= n {
        if n.is_multiple_of(i) {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient by trial-division factorization. `totient(0) = 0`.
pub fn totient(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut rest = n;
    let mut result = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest.is_multiple_of(p) {
            while rest.is_multiple_of(p) {
                rest /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if rest > 1 {
        result -= result / rest;
    }
    result
}

/// Degree of `Psi_d`: 1 for `d <= 2`, `phi(d)/2` otherwise.
pub fn psi_degree(d: u64) -> usize {
    if d <= 2 {
        1
    } else {
        (totient(d) / 2) as usize
    }
}

/// `Psi_d` tagged with its index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiPoly {
    pub d: u64,
    pub poly: IntPoly,
}

impl PsiPoly {
    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }
}

/// A root `cos(2*pi*k/d)` of `Psi_d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSpec {
    pub d: u64,
    pub k: u64,
}

impl RootSpec {
    pub fn theta(&self) -> f64 {
        2.0 * PI * self.k as f64 / self.d as f64
    }

    pub fn value(&self) -> f64 {
        self.theta().cos()
    }
}

/// Roots of `Psi_d`, by `k` ascending. For `d = 1, 2` the single root is
/// `theta = 2*pi` resp. `pi`.
pub fn psi_roots(d: u64) -> Vec<RootSpec> {
    match d {
        0 => Vec::new(),
        1 | 2 => vec![RootSpec { d, k: 1 }],
        _ => (1..d)
            .take_while(|k| 2 * k < d)
            .filter(|k| k.gcd(&d) == 1)
            .map(|k| RootSpec { d, k })
            .collect(),
    }
}

/// Checks the structural invariants of a claimed `Psi_d`: exact value for
/// `d <= 2`, otherwise degree `phi(d)/2` and leading coefficient
/// `2^(phi(d)/2)`.
pub fn check_psi_shape(d: u64, poly: &IntPoly) -> std::result::Result<(), String> {
    if d == 0 {
        return Err("index must be positive".into());
    }
    if d <= 2 {
        let expected = definition_psi(d);
        return if *poly == expected {
            Ok(())
        } else {
            Err(format!("Psi_{d} must equal {:?}", expected.coeffs()))
        };
    }
    let h = psi_degree(d);
    if poly.degree() != Some(h) {
        return Err(format!("degree {:?}, expected {h}", poly.degree()));
    }
    let lead = BigInt::one() << h;
    if poly.leading() != Some(&lead) {
        return Err(format!("leading coefficient must be 2^{h}"));
    }
    Ok(())
}

fn definition_psi(d: u64) -> IntPoly {
    match d {
        1 => IntPoly::from_i64s(&[-2, 2]),
        _ => IntPoly::from_i64s(&[2, 2]),
    }
}

/// Write-once memo tables for `Phi_d` and `Psi_d`.
///
/// Entries are never replaced once present, so concurrent callers always
/// observe the same value for a key.
#[derive(Debug, Default)]
pub struct PsiTable {
    cyclo: RwLock<HashMap<u64, Arc<IntPoly>>>,
    psi: RwLock<HashMap<u64, Arc<IntPoly>>>,
}

impl PsiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide table used by the free functions in this module.
    pub fn global() -> &'static PsiTable {
        static GLOBAL: OnceLock<PsiTable> = OnceLock::new();
        GLOBAL.get_or_init(PsiTable::new)
    }

    fn lookup(map: &RwLock<HashMap<u64, Arc<IntPoly>>>, d: u64) -> Option<Arc<IntPoly>> {
        map.read().expect("psi table poisoned").get(&d).cloned()
    }

    fn store(map: &RwLock<HashMap<u64, Arc<IntPoly>>>, d: u64, p: IntPoly) -> Arc<IntPoly> {
        map.write()
            .expect("psi table poisoned")
            .entry(d)
            .or_insert_with(|| Arc::new(p))
            .clone()
    }

    /// The `d`-th cyclotomic polynomial, `(x^d - 1) / prod_{e | d, e < d} Phi_e`.
    pub fn cyclotomic(&self, d: u64) -> Arc<IntPoly> {
        assert!(d >= 1, "cyclotomic index must be positive");
        if let Some(p) = Self::lookup(&self.cyclo, d) {
            return p;
        }
        let mut acc = &IntPoly::monomial(BigInt::one(), d as usize) - &IntPoly::one();
        for e in divisors(d) {
            if e == d {
                break;
            }
            acc = acc
                .div_exact(&self.cyclotomic(e))
                .expect("Phi_e divides x^d - 1 for e | d");
        }
        Self::store(&self.cyclo, d, acc)
    }

    /// `Psi_d` with its index.
    pub fn psi(&self, d: u64) -> Result<PsiPoly> {
        if d == 0 {
            return Err(Error::PreconditionViolation(
                "Psi index must be positive".into(),
            ));
        }
        if let Some(p) = Self::lookup(&self.psi, d) {
            return Ok(PsiPoly {
                d,
                poly: (*p).clone(),
            });
        }
        let poly = if d <= 2 {
            definition_psi(d)
        } else {
            fold_cyclotomic(d, &self.cyclotomic(d))?
        };
        let p = Self::store(&self.psi, d, poly);
        Ok(PsiPoly {
            d,
            poly: (*p).clone(),
        })
    }

    /// Seeds a `Psi_d` entry, e.g. from an on-disk cache. The entry must pass
    /// [`check_psi_shape`]; an existing entry is kept and must agree.
    pub fn seed_psi(&self, d: u64, poly: IntPoly) -> std::result::Result<(), String> {
        check_psi_shape(d, &poly)?;
        let stored = Self::store(&self.psi, d, poly.clone());
        if *stored != poly {
            return Err(format!(
                "Psi_{d} disagrees with the value already in memory"
            ));
        }
        Ok(())
    }

    /// Snapshot of every memoized `Psi_d`, ascending by `d`.
    pub fn psi_entries(&self) -> Vec<(u64, IntPoly)> {
        let map = self.psi.read().expect("psi table poisoned");
        let mut out: Vec<_> = map.iter().map(|(d, p)| (*d, (**p).clone())).collect();
        out.sort_by_key(|(d, _)| *d);
        out
    }
}

/// Folds palindromic `Phi_d` (degree `2h`) into `P` with
/// `Phi_d(z) = z^h P(z + 1/z)`, then returns `P(2x)`.
fn fold_cyclotomic(d: u64, phi: &IntPoly) -> Result<IntPoly> {
    let c = phi.coeffs();
    let inconsistent = |detail: String| Error::InternalInconsistency { d, detail };
    if c.len().is_multiple_of(2) {
        return Err(inconsistent(format!(
            "Phi_{d} has odd degree {}",
            c.len() - 1
        )));
    }
    let h = c.len() / 2;
    if let Some(j) = (1..=h).find(|&j| c[h - j] != c[h + j]) {
        return Err(inconsistent(format!("fold residue at z^{j} is nonzero")));
    }

    // B_0 = 2, B_1 = y, B_j = y B_{j-1} - B_{j-2}; B_j(z + 1/z) = z^j + z^-j.
    let y = IntPoly::x();
    let mut folded = IntPoly::constant(c[h].clone());
    let mut b_prev = IntPoly::constant(BigInt::from(2));
    let mut b_cur = y.clone();
    for j in 1..=h {
        folded = &folded + &b_cur.scale(&c[h + j]);
        let next = &(&y * &b_cur) - &b_prev;
        b_prev = std::mem::replace(&mut b_cur, next);
    }

    let mut pow2 = BigInt::one();
    let substituted = folded
        .coeffs()
        .iter()
        .map(|a| {
            let v = a * &pow2;
            pow2 <<= 1;
            v
        })
        .collect();
    let psi = IntPoly::new(substituted);
    check_psi_shape(d, &psi).map_err(inconsistent)?;
    Ok(psi)
}

/// `Phi_d` from the global table.
pub fn cyclotomic(d: u64) -> IntPoly {
    (*PsiTable::global().cyclotomic(d)).clone()
}

/// `Psi_d` from the global table.
pub fn psi(d: u64) -> Result<PsiPoly> {
    PsiTable::global().psi(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(24), vec![1, 2, 3, 4, 6, 8, 12, 24]);
        assert_eq!(divisors(26), vec![1, 2, 13, 26]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
        assert!(divisors(0).is_empty());
    }

    #[test]
    fn totients() {
        assert_eq!(totient(13), 12);
        assert_eq!(totient(11), 10);
        assert_eq!(totient(1), 1);
        assert_eq!(totient(36), 12);
        assert_eq!(totient(97 * 97), 97 * 96);
    }

    #[test]
    fn totient_matches_gcd_count() {
        for n in 1..300u64 {
            let count = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
            assert_eq!(totient(n), count, "n = {n}");
        }
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), ip(&[-1, 1]));
        assert_eq!(cyclotomic(5), ip(&[1, 1, 1, 1, 1]));
        assert_eq!(cyclotomic(12), ip(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn psi_small_values() {
        assert_eq!(psi(1).unwrap().poly, ip(&[-2, 2]));
        assert_eq!(psi(2).unwrap().poly, ip(&[2, 2]));
        assert_eq!(psi(3).unwrap().poly, ip(&[1, 2]));
        assert_eq!(psi(4).unwrap().poly, ip(&[0, 2]));
        assert_eq!(psi(12).unwrap().poly, ip(&[-3, 0, 4]));
        assert!(psi(0).is_err());
    }

    #[test]
    fn psi_degree_five() {
        assert_eq!(psi(11).unwrap().poly, ip(&[1, 6, -12, -32, 16, 32]));
        assert_eq!(psi(22).unwrap().poly, ip(&[-1, 6, 12, -32, -16, 32]));
    }

    #[test]
    fn fold_rejects_non_palindrome() {
        let err = fold_cyclotomic(7, &ip(&[1, 2, 1, 1, 1])).unwrap_err();
        assert!(matches!(err, Error::InternalInconsistency { d: 7, .. }));
        let err = fold_cyclotomic(7, &ip(&[1, 1])).unwrap_err();
        assert!(matches!(err, Error::InternalInconsistency { .. }));
    }

    #[test]
    fn roots() {
        let ks: Vec<u64> = psi_roots(12).iter().map(|r| r.k).collect();
        assert_eq!(ks, vec![1, 5]);
        assert_eq!(psi_roots(3), vec![RootSpec { d: 3, k: 1 }]);
        let r2 = psi_roots(2);
        assert_eq!(r2.len(), 1);
        assert!((r2[0].theta() - PI).abs() < 1e-15);
        assert!((r2[0].value() + 1.0).abs() < 1e-15);
        assert!((psi_roots(1)[0].value() - 1.0).abs() < 1e-15);
        for d in 3..60 {
            assert_eq!(psi_roots(d).len(), psi_degree(d));
        }
    }

    #[test]
    fn shape_check() {
        assert!(check_psi_shape(4, &ip(&[0, 2])).is_ok());
        assert!(check_psi_shape(4, &ip(&[0, 3])).is_err());
        assert!(check_psi_shape(5, &ip(&[0, 2])).is_err());
        assert!(check_psi_shape(1, &ip(&[-1, 1])).is_err());
        assert!(check_psi_shape(0, &ip(&[1])).is_err());
    }

    #[test]
    fn seeding() {
        let table = PsiTable::new();
        table.seed_psi(4, ip(&[0, 2])).unwrap();
        // consistent shape, wrong value than the stored one
        assert!(table.seed_psi(4, ip(&[1, 2])).is_err());
        assert_eq!(table.psi_entries(), vec![(4, ip(&[0, 2]))]);
    }
}
