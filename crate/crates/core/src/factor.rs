//! Closed-form `Psi`-factorizations of `V_n^2 - 1`, `W_n^2 - 1`, `V_n +- 1`
//! and `W_n +- 1`, the root-sign rule behind them, and a divisor scan for
//! arbitrary integer polynomials.
//!
//! Every `d > 2` dividing `2n` or `2n + 2` contributes one `Psi_d` to
//! `K_n^2 - 1`. Which half (`+1` or `-1`) it lands in depends only on the
//! parity of the quotient `a = 2n/d` (or `b = (2n+2)/d`): at every root
//! `cos(2*pi*k/d)`, `ak` has the parity of `a`, so `V_n` takes the value
//! `(-1)^a` there. `W_n` behaves the same on divisors of `2n` and the
//! opposite way on divisors of `2n + 2`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::cheb::AirfoilKind;
use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::psi::{divisors, psi_degree, PsiPoly, PsiTable, RootSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    /// `d | 2n`
    Of2n,
    /// `d | 2n + 2`
    Of2nPlus2,
}

impl Source {
    pub fn modulus(self, n: u64) -> u64 {
        match self {
            Source::Of2n => 2 * n,
            Source::Of2nPlus2 => 2 * n + 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Source::Of2n => "2n",
            Source::Of2nPlus2 => "2n+2",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn of(q: u64) -> Self {
        if q.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

/// A divisor `d` of `2n` or `2n + 2` with its quotient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorTerm {
    pub d: u64,
    pub source: Source,
    pub quotient: u64,
    pub parity: Parity,
}

impl DivisorTerm {
    pub fn new(d: u64, source: Source, n: u64) -> Result<Self> {
        let m = source.modulus(n);
        if d == 0 || !m.is_multiple_of(d) {
            return Err(Error::PreconditionViolation(format!(
                "{d} does not divide {} = {m}",
                source.label()
            )));
        }
        let quotient = m / d;
        Ok(Self {
            d,
            source,
            quotient,
            parity: Parity::of(quotient),
        })
    }
}

/// How a factor entered a factorization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorOrigin {
    /// `Psi_1` or `Psi_2` taken as a fixed prefactor.
    Special,
    Divisor(DivisorTerm),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiFactor {
    pub psi: PsiPoly,
    pub origin: FactorOrigin,
}

impl PsiFactor {
    pub fn d(&self) -> u64 {
        self.psi.d
    }

    fn sort_key(&self) -> (u64, u8) {
        let src = match self.origin {
            FactorOrigin::Special => 0,
            FactorOrigin::Divisor(t) => match t.source {
                Source::Of2n => 1,
                Source::Of2nPlus2 => 2,
            },
        };
        (self.d(), src)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `K_n + 1`
    Plus,
    /// `K_n - 1`
    Minus,
    /// `K_n^2 - 1`
    SquaredMinusOne,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Plus => "plus",
            Variant::Minus => "minus",
            Variant::SquaredMinusOne => "square",
        }
    }

    /// `+1` for `Plus`, `-1` for `Minus`.
    pub fn sign(self) -> Option<i8> {
        match self {
            Variant::Plus => Some(1),
            Variant::Minus => Some(-1),
            Variant::SquaredMinusOne => None,
        }
    }

    pub fn from_sign(sign: i8) -> Result<Self> {
        match sign {
            1 => Ok(Variant::Plus),
            -1 => Ok(Variant::Minus),
            s => Err(Error::PreconditionViolation(format!(
                "sign must be +1 or -1, got {s}"
            ))),
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "plus" | "+1" | "+" => Ok(Variant::Plus),
            "minus" | "-1" | "-" => Ok(Variant::Minus),
            "square" | "squared" => Ok(Variant::SquaredMinusOne),
            _ => Err(format!(
                "unknown variant `{s}` (expected plus, minus or square)"
            )),
        }
    }
}

/// The identity a [`Factorization`] claims: which of `K_n + 1`, `K_n - 1`,
/// `K_n^2 - 1` it expands to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Target {
    pub kind: AirfoilKind,
    pub n: u64,
    pub variant: Variant,
}

impl Target {
    /// Regenerates the target polynomial from the recurrences.
    pub fn polynomial(&self) -> IntPoly {
        let base = self.kind.generate(self.n);
        match self.variant {
            Variant::Plus => &base + &IntPoly::one(),
            Variant::Minus => &base - &IntPoly::one(),
            Variant::SquaredMinusOne => &(&base * &base) - &IntPoly::one(),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.kind;
        let n = self.n;
        match self.variant {
            Variant::Plus => write!(f, "{k}_{n}(x) + 1"),
            Variant::Minus => write!(f, "{k}_{n}(x) - 1"),
            Variant::SquaredMinusOne => write!(f, "{k}_{n}(x)^2 - 1"),
        }
    }
}

/// An ordered product of `Psi` factors claimed to equal `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub target: Target,
    pub factors: Vec<PsiFactor>,
    pub expanded: IntPoly,
}

impl Factorization {
    fn assemble(target: Target, mut factors: Vec<PsiFactor>) -> Self {
        factors.sort_by_key(PsiFactor::sort_key);
        let expanded = IntPoly::product(factors.iter().map(|f| &f.psi.poly));
        Self {
            target,
            factors,
            expanded,
        }
    }

    pub fn indices(&self) -> Vec<u64> {
        self.factors.iter().map(PsiFactor::d).collect()
    }
}

/// Value of `K_n` at every root of `Psi_d` for a divisor term: `+1` or `-1`.
fn term_value(kind: AirfoilKind, term: &DivisorTerm) -> i8 {
    let alternating = match term.parity {
        Parity::Even => 1,
        Parity::Odd => -1,
    };
    match (kind, term.source) {
        (AirfoilKind::W, Source::Of2nPlus2) => -alternating,
        _ => alternating,
    }
}

fn special_index(kind: AirfoilKind) -> u64 {
    match kind {
        AirfoilKind::V => 1,
        AirfoilKind::W => 2,
    }
}

fn require_positive(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::PreconditionViolation("n must be at least 1".into()));
    }
    Ok(())
}

/// Builds factorizations against a [`PsiTable`].
#[derive(Debug, Clone, Copy)]
pub struct Factorizer<'a> {
    table: &'a PsiTable,
}

impl Default for Factorizer<'static> {
    fn default() -> Self {
        Self {
            table: PsiTable::global(),
        }
    }
}

impl<'a> Factorizer<'a> {
    pub fn new(table: &'a PsiTable) -> Self {
        Self { table }
    }

    pub fn table(&self) -> &'a PsiTable {
        self.table
    }

    fn terms(n: u64, source: Source, min_d: u64) -> impl Iterator<Item = DivisorTerm> {
        divisors(source.modulus(n))
            .into_iter()
            .filter(move |&d| d >= min_d)
            .map(move |d| DivisorTerm::new(d, source, n).expect("d is a divisor"))
    }

    fn factor_of(&self, term: DivisorTerm) -> Result<PsiFactor> {
        Ok(PsiFactor {
            psi: self.table.psi(term.d)?,
            origin: FactorOrigin::Divisor(term),
        })
    }

    fn special(&self, d: u64) -> Result<PsiFactor> {
        Ok(PsiFactor {
            psi: self.table.psi(d)?,
            origin: FactorOrigin::Special,
        })
    }

    /// `K_n^2 - 1 = Psi_s * prod_{d | 2n, d > 2} Psi_d * prod_{d | 2n+2, d > 2} Psi_d`
    /// with `s = 1` for `V` and `s = 2` for `W`.
    pub fn squared_minus_one(&self, kind: AirfoilKind, n: u64) -> Result<Factorization> {
        require_positive(n)?;
        let mut factors = vec![self.special(special_index(kind))?];
        for term in Self::terms(n, Source::Of2n, 3).chain(Self::terms(n, Source::Of2nPlus2, 3)) {
            factors.push(self.factor_of(term)?);
        }
        let target = Target {
            kind,
            n,
            variant: Variant::SquaredMinusOne,
        };
        Ok(Factorization::assemble(target, factors))
    }

    /// `K_n + sign` as a product of `Psi_d`, selected by quotient parity.
    pub fn variant(&self, kind: AirfoilKind, n: u64, sign: i8) -> Result<Factorization> {
        require_positive(n)?;
        let variant = Variant::from_sign(sign)?;
        // Psi_d divides K_n + sign exactly when K_n = -sign on its roots.
        let wanted = -sign;
        let mut factors = Vec::new();
        let min_of_2n = match kind {
            AirfoilKind::V => {
                if wanted == 1 {
                    factors.push(self.special(1)?);
                }
                3
            }
            AirfoilKind::W => 2,
        };
        for term in
            Self::terms(n, Source::Of2n, min_of_2n).chain(Self::terms(n, Source::Of2nPlus2, 3))
        {
            if term_value(kind, &term) == wanted {
                factors.push(self.factor_of(term)?);
            }
        }
        Ok(Factorization::assemble(
            Target { kind, n, variant },
            factors,
        ))
    }

    /// Re-derives a factorization's target from the recurrences and checks
    /// the claimed product against it.
    pub fn verify(&self, f: &Factorization) -> VerifyReport {
        self.verify_against(f, f.target)
    }

    /// Like [`verify`](Self::verify), but against `target` instead of the
    /// target the factorization claims.
    pub fn verify_against(&self, f: &Factorization, target: Target) -> VerifyReport {
        let mut checks = Vec::new();
        checks.push(Check::new(
            "claimed target",
            f.target == target,
            format!("factorization claims {}, expected {target}", f.target),
        ));
        let target = target.polynomial();

        let mut bad_psi = Vec::new();
        for factor in &f.factors {
            match self.table.psi(factor.psi.d) {
                Ok(fresh) if fresh.poly == factor.psi.poly => {}
                _ => bad_psi.push(factor.psi.d),
            }
            if let FactorOrigin::Divisor(t) = factor.origin {
                if t.d != factor.psi.d {
                    bad_psi.push(factor.psi.d);
                }
            }
        }
        checks.push(Check::new(
            "factor values",
            bad_psi.is_empty(),
            format!("factors not matching Psi_d: {bad_psi:?}"),
        ));

        let product = IntPoly::product(f.factors.iter().map(|x| &x.psi.poly));
        checks.push(Check::new(
            "expansion",
            product == f.expanded,
            describe_mismatch(&product, &f.expanded),
        ));
        checks.push(Check::new(
            "target",
            product == target,
            describe_mismatch(&product, &target),
        ));

        let degree_sum: usize = f.factors.iter().map(|x| x.psi.degree()).sum();
        let target_degree = target.degree().unwrap_or(0);
        checks.push(Check::new(
            "degree",
            degree_sum == target_degree,
            format!("factor degrees sum to {degree_sum}, target has degree {target_degree}"),
        ));

        let lead_product = f.factors.iter().fold(BigInt::one(), |acc, x| {
            acc * x.psi.poly.leading().cloned().unwrap_or_default()
        });
        checks.push(Check::new(
            "leading coefficient",
            target.leading() == Some(&lead_product),
            format!(
                "product of leads {lead_product}, target lead {:?}",
                target.leading()
            ),
        ));

        let idx = f.indices();
        let mut sorted = idx.clone();
        sorted.sort_unstable();
        sorted.dedup();
        checks.push(Check::new(
            "distinct indices",
            sorted.len() == idx.len(),
            format!("indices {idx:?}"),
        ));
        checks.push(Check::new(
            "canonical order",
            idx.windows(2).all(|w| w[0] <= w[1]),
            format!("indices {idx:?}"),
        ));

        VerifyReport { checks }
    }

    /// Every `Psi_d` dividing `p` in `Q[x]`, ascending by `d`.
    ///
    /// Divisibility over `Q` is tested as exact integer division by the
    /// primitive part of `Psi_d`, which is equivalent by Gauss's lemma.
    pub fn divisor_scan(&self, p: &IntPoly) -> Result<Vec<PsiPoly>> {
        Ok(self
            .split(p)?
            .divisors
            .into_iter()
            .map(|(psi, _)| psi)
            .collect())
    }

    /// Divides out every `Psi_d` (with multiplicity) from `p`.
    pub fn split(&self, p: &IntPoly) -> Result<PsiSplit> {
        let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
        let mut rest = p.clone();
        let mut found = Vec::new();
        let mut content_product = BigInt::one();
        for d in 1..=scan_bound(deg) {
            let rest_deg = rest.degree().unwrap_or(0);
            if rest_deg == 0 {
                break;
            }
            if psi_degree(d) > rest_deg {
                continue;
            }
            let psi = self.table.psi(d)?;
            let prim = psi.poly.primitive_part();
            let content = psi.poly.content();
            let mut mult = 0u32;
            while let Ok(q) = rest.div_exact(&prim) {
                rest = q;
                mult += 1;
                content_product *= &content;
            }
            if mult > 0 {
                found.push((psi, mult));
            }
        }
        let complete = rest.degree() == Some(0);
        let scalar = complete.then(|| BigRational::new(rest.coeff(0), content_product));
        Ok(PsiSplit {
            divisors: found,
            cofactor: rest,
            scalar,
        })
    }
}

/// Largest `d` whose `Psi_d` can have degree at most `deg`.
///
/// Uses `phi(d) >= sqrt(d/2)`, so `phi(d)/2 <= deg` forces `d <= 8 deg^2`.
pub fn scan_bound(deg: usize) -> u64 {
    let deg = deg as u64;
    (8 * deg * deg).max(2)
}

/// Result of dividing all `Psi_d` out of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiSplit {
    /// Divisors with multiplicity, ascending by `d`.
    pub divisors: Vec<(PsiPoly, u32)>,
    /// What is left after removing every primitive `Psi_d` factor.
    pub cofactor: IntPoly,
    /// When the cofactor is constant, `p = scalar * prod Psi_d^e`.
    pub scalar: Option<BigRational>,
}

impl PsiSplit {
    pub fn is_complete(&self) -> bool {
        self.scalar.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Explanation, meaningful when the check failed.
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            name,
            passed,
            detail,
        }
    }
}

/// Outcome of [`Factorizer::verify`]; failures are data, not errors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Human-readable description of where two polynomials differ.
pub fn describe_mismatch(got: &IntPoly, want: &IntPoly) -> String {
    if got == want {
        return "equal".into();
    }
    let len = got.coeffs().len().max(want.coeffs().len());
    let diffs: Vec<String> = (0..len)
        .filter(|&i| got.coeff(i) != want.coeff(i))
        .map(|i| format!("x^{i}: {} vs {}", got.coeff(i), want.coeff(i)))
        .collect();
    let shown = diffs.iter().take(8).cloned().collect::<Vec<_>>().join(", ");
    if diffs.len() > 8 {
        format!("{} coefficients differ: {shown}, ...", diffs.len())
    } else {
        format!("{} coefficients differ: {shown}", diffs.len())
    }
}

/// Value `K_n(cos theta)` at a root of `Psi_d`, by the quotient parity rule.
///
/// `source` says which of `2n`, `2n + 2` the root's `d` divides. For
/// `Of2n`, `V` accepts `d = 1` or `d > 2` and `W` accepts `d > 1`; `Of2nPlus2`
/// requires `d > 2` for both.
pub fn assign_root(kind: AirfoilKind, n: u64, root: RootSpec, source: Source) -> Result<i8> {
    require_positive(n)?;
    let RootSpec { d, k } = root;
    let admissible_d = match (kind, source) {
        (AirfoilKind::V, Source::Of2n) => d == 1 || d > 2,
        (AirfoilKind::W, Source::Of2n) => d > 1,
        (_, Source::Of2nPlus2) => d > 2,
    };
    if !admissible_d {
        return Err(Error::PreconditionViolation(format!(
            "d = {d} is not admissible for {kind} with d | {}",
            source.label()
        )));
    }
    let valid_k = if d <= 2 {
        k == 1
    } else {
        k >= 1 && 2 * k < d && k.gcd(&d) == 1
    };
    if !valid_k {
        return Err(Error::PreconditionViolation(format!(
            "k = {k} is not a root index of Psi_{d}"
        )));
    }
    let term = DivisorTerm::new(d, source, n)?;
    Ok(term_value(kind, &term))
}

/// [`Factorizer::squared_minus_one`] on the global table.
pub fn factor_squared_minus_one(kind: AirfoilKind, n: u64) -> Result<Factorization> {
    Factorizer::default().squared_minus_one(kind, n)
}

/// [`Factorizer::variant`] on the global table.
pub fn factor_variant(kind: AirfoilKind, n: u64, sign: i8) -> Result<Factorization> {
    Factorizer::default().variant(kind, n, sign)
}

/// [`Factorizer::divisor_scan`] on the global table, as `(d, Psi_d)` pairs.
pub fn psi_divisor_scan(p: &IntPoly) -> Result<Vec<(u64, PsiPoly)>> {
    Ok(Factorizer::default()
        .divisor_scan(p)?
        .into_iter()
        .map(|psi| (psi.d, psi))
        .collect())
}

/// [`Factorizer::verify`] on the global table.
pub fn verify(f: &Factorization) -> VerifyReport {
    Factorizer::default().verify(f)
}
