//! Batch checks of the exact identities the factorizations rest on.

use std::collections::BTreeMap;

use crate::cheb::{u_sequence, AirfoilKind};
use crate::error::Result;
use crate::factor::{describe_mismatch, Factorization, Factorizer, Target, Variant};
use crate::poly::IntPoly;
use crate::psi::divisors;

/// Outcome of one identity family over `1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyResult {
    pub name: &'static str,
    pub checked: u64,
    /// Smallest failing `n` and what went wrong.
    pub first_failure: Option<(u64, String)>,
}

impl FamilyResult {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub n_max: u64,
    pub families: Vec<FamilyResult>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyResult::passed)
    }
}

pub const U_SQUARE: &str = "U_n^2 - 1 = U_{n-1} U_{n+1}";
pub const U_PRODUCT: &str = "U_{n-1} = prod_{d | 2n, d > 2} Psi_d";
pub const V_SQUARED: &str = "V_n^2 - 1 product";
pub const W_SQUARED: &str = "W_n^2 - 1 product";
pub const V_SPLIT: &str = "V_n +- 1 split";
pub const W_SPLIT: &str = "W_n +- 1 split";

/// Signature of a `K_n + sign` factorizer, so callers can substitute one.
pub type VariantFn<'f> = dyn Fn(AirfoilKind, u64, i8) -> Result<Factorization> + 'f;

fn family(
    name: &'static str,
    n_max: u64,
    mut check: impl FnMut(u64) -> std::result::Result<(), String>,
) -> FamilyResult {
    let first_failure = (1..=n_max).find_map(|n| check(n).err().map(|e| (n, e)));
    FamilyResult {
        name,
        checked: n_max,
        first_failure,
    }
}

/// Runs every family for `1 <= n <= n_max` with the standard factorizer.
pub fn verify_identities(n_max: u64) -> IdentityReport {
    let fz = Factorizer::default();
    verify_identities_with(n_max, &fz, &|k, n, s| fz.variant(k, n, s))
}

/// Same as [`verify_identities`], with the `+-1` factorizer supplied by the caller.
pub fn verify_identities_with(
    n_max: u64,
    fz: &Factorizer<'_>,
    variant: &VariantFn<'_>,
) -> IdentityReport {
    let us = u_sequence(n_max + 1);
    let mut families = Vec::new();

    families.push(family(U_SQUARE, n_max, |n| {
        let i = n as usize;
        let lhs = &(&us[i] * &us[i]) - &IntPoly::one();
        let rhs = &us[i - 1] * &us[i + 1];
        (lhs == rhs)
            .then_some(())
            .ok_or_else(|| describe_mismatch(&lhs, &rhs))
    }));

    families.push(family(U_PRODUCT, n_max, |n| {
        let psis = divisors(2 * n)
            .into_iter()
            .filter(|&d| d > 2)
            .map(|d| fz.table().psi(d).map(|p| p.poly))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| e.to_string())?;
        let prod = IntPoly::product(&psis);
        let want = &us[n as usize - 1];
        (prod == *want)
            .then_some(())
            .ok_or_else(|| describe_mismatch(&prod, want))
    }));

    for (name, kind) in [(V_SQUARED, AirfoilKind::V), (W_SQUARED, AirfoilKind::W)] {
        families.push(family(name, n_max, |n| {
            let f = fz.squared_minus_one(kind, n).map_err(|e| e.to_string())?;
            check_report(fz, &f, f.target)
        }));
    }

    for (name, kind) in [(V_SPLIT, AirfoilKind::V), (W_SPLIT, AirfoilKind::W)] {
        families.push(family(name, n_max, |n| {
            let plus = variant(kind, n, 1).map_err(|e| e.to_string())?;
            let minus = variant(kind, n, -1).map_err(|e| e.to_string())?;
            for (f, variant) in [(&plus, Variant::Plus), (&minus, Variant::Minus)] {
                check_report(fz, f, Target { kind, n, variant })?;
            }
            let squared = fz.squared_minus_one(kind, n).map_err(|e| e.to_string())?;
            let recombined = &plus.expanded * &minus.expanded;
            if recombined != squared.expanded {
                return Err(format!(
                    "(+1)(-1) product differs from the squared form: {}",
                    describe_mismatch(&recombined, &squared.expanded)
                ));
            }
            let mut split = index_counts(&plus);
            for (d, c) in index_counts(&minus) {
                *split.entry(d).or_default() += c;
            }
            if split != index_counts(&squared) || split.values().any(|&c| c != 1) {
                return Err(format!(
                    "index sets {:?} and {:?} do not partition {:?}",
                    plus.indices(),
                    minus.indices(),
                    squared.indices()
                ));
            }
            Ok(())
        }));
    }

    IdentityReport { n_max, families }
}

fn index_counts(f: &Factorization) -> BTreeMap<u64, u32> {
    let mut m = BTreeMap::new();
    for d in f.indices() {
        *m.entry(d).or_default() += 1;
    }
    m
}

fn check_report(
    fz: &Factorizer<'_>,
    f: &Factorization,
    target: Target,
) -> std::result::Result<(), String> {
    let report = fz.verify_against(f, target);
    if report.passed() {
        return Ok(());
    }
    let why: Vec<String> = report
        .failures()
        .map(|c| format!("{target}: {} ({})", c.name, c.detail))
        .collect();
    Err(why.join("; "))
}
