//! Chebyshev polynomials of the second through sixth kinds.
//!
//! `U_n` comes from the three-term recurrence, `V_n` and `W_n` from their
//! linear relations to `U`, and the fifth/sixth kinds from the monic
//! `G_{n,m}` recurrence (`m = 3` and `m = 5`), scaled to primitive integer
//! form. `U_{-1}` is taken to be zero, so `V_0 = W_0 = 1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ChebKind {
    U,
    V,
    W,
    X,
    Y,
    Xbar,
    Ybar,
}

impl ChebKind {
    pub const ALL: [ChebKind; 7] = [
        ChebKind::U,
        ChebKind::V,
        ChebKind::W,
        ChebKind::X,
        ChebKind::Y,
        ChebKind::Xbar,
        ChebKind::Ybar,
    ];

    /// Whether values of this kind have integer coefficients.
    pub fn is_integral(self) -> bool {
        !matches!(self, ChebKind::Xbar | ChebKind::Ybar)
    }

    pub fn name(self) -> &'static str {
        match self {
            ChebKind::U => "U",
            ChebKind::V => "V",
            ChebKind::W => "W",
            ChebKind::X => "X",
            ChebKind::Y => "Y",
            ChebKind::Xbar => "Xbar",
            ChebKind::Ybar => "Ybar",
        }
    }
}

impl fmt::Display for ChebKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ChebKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ChebKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown kind `{s}` (expected U, V, W, X, Y, Xbar or Ybar)"))
    }
}

/// Third and fourth kinds, the families with closed-form splittings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AirfoilKind {
    V,
    W,
}

impl AirfoilKind {
    pub fn generate(self, n: u64) -> IntPoly {
        match self {
            AirfoilKind::V => gen_v(n),
            AirfoilKind::W => gen_w(n),
        }
    }
}

impl From<AirfoilKind> for ChebKind {
    fn from(k: AirfoilKind) -> Self {
        match k {
            AirfoilKind::V => ChebKind::V,
            AirfoilKind::W => ChebKind::W,
        }
    }
}

impl TryFrom<ChebKind> for AirfoilKind {
    type Error = String;
    fn try_from(k: ChebKind) -> std::result::Result<Self, String> {
        match k {
            ChebKind::V => Ok(AirfoilKind::V),
            ChebKind::W => Ok(AirfoilKind::W),
            other => Err(format!(
                "kind {other} has no closed-form splitting (expected V or W)"
            )),
        }
    }
}

impl fmt::Display for AirfoilKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        ChebKind::from(*self).fmt(f)
    }
}

impl FromStr for AirfoilKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        ChebKind::from_str(s)?.try_into()
    }
}

/// A value produced by [`generate`]: integral kinds give `Int`, the monic
/// fifth/sixth kinds give `Rat`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Int(IntPoly),
    Rat(RatPoly),
}

impl Generated {
    pub fn to_rat(&self) -> RatPoly {
        match self {
            Generated::Int(p) => p.to_rat(),
            Generated::Rat(p) => p.clone(),
        }
    }
}

fn two_x() -> IntPoly {
    IntPoly::from_i64s(&[0, 2])
}

/// `U_0, ..., U_{n_max}`.
pub fn u_sequence(n_max: u64) -> Vec<IntPoly> {
    let len = usize::try_from(n_max).expect("degree fits in memory") + 1;
    let mut seq = Vec::with_capacity(len);
    seq.push(IntPoly::one());
    if len > 1 {
        seq.push(two_x());
    }
    let tx = two_x();
    for i in 2..len {
        let next = &(&tx * &seq[i - 1]) - &seq[i - 2];
        seq.push(next);
    }
    seq
}

/// Chebyshev polynomial of the second kind.
pub fn gen_u(n: u64) -> IntPoly {
    let mut prev = IntPoly::one();
    if n == 0 {
        return prev;
    }
    let tx = two_x();
    let mut cur = tx.clone();
    for _ in 1..n {
        let next = &(&tx * &cur) - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// `(U_{n-1}, U_n)` with `U_{-1} = 0`.
fn u_pair(n: u64) -> (IntPoly, IntPoly) {
    if n == 0 {
        return (IntPoly::zero(), IntPoly::one());
    }
    (gen_u(n - 1), gen_u(n))
}

/// Third kind: `V_n = U_n - U_{n-1}`.
pub fn gen_v(n: u64) -> IntPoly {
    let (prev, cur) = u_pair(n);
    &cur - &prev
}

/// Fourth kind: `W_n = U_n + U_{n-1}`.
pub fn gen_w(n: u64) -> IntPoly {
    let (prev, cur) = u_pair(n);
    &cur + &prev
}

/// Index of the monic `G_{n,m}` recurrence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GIndex {
    pub n: u64,
    pub m: i64,
}

impl GIndex {
    /// Monic fifth kind.
    pub fn fifth(n: u64) -> Self {
        Self { n, m: 3 }
    }

    /// Monic sixth kind.
    pub fn sixth(n: u64) -> Self {
        Self { n, m: 5 }
    }
}

/// `A_{k,m} = ((2k+m-2)(-1)^k + (2k-(m-2)) - km - k^2) / ((2k+m-1)(2k+m-3))`.
pub fn recurrence_coefficient(k: u64, m: i64) -> Result<BigRational> {
    let kk = BigInt::from(k);
    let mm = BigInt::from(m);
    let two_k = &kk * 2;
    let sign = if k.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    };
    let numer = (&two_k + &mm - 2) * sign + (&two_k - (&mm - 2)) - &kk * &mm - &kk * &kk;
    let denom: BigInt = (&two_k + &mm - 1) * (&two_k + &mm - 3);
    if denom.is_zero() {
        return Err(Error::DenominatorZero { k, m });
    }
    Ok(BigRational::new(numer, denom))
}

/// Monic `G_{n,m}`: `G_0 = 1`, `G_1 = x`, `G_n = x G_{n-1} + A_{n-1,m} G_{n-2}`.
pub fn gen_g(idx: GIndex) -> Result<RatPoly> {
    let mut prev = RatPoly::one();
    if idx.n == 0 {
        return Ok(prev);
    }
    let mut cur = RatPoly::x();
    for k in 1..idx.n {
        let a = recurrence_coefficient(k, idx.m)?;
        let next = &cur.shift(1) + &prev.scale(&a);
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Integer fifth (`X`) or sixth (`Y`) kind: the primitive, positive-leading
/// integer multiple of `G_{n,3}` or `G_{n,5}`.
pub fn gen_xy(kind: ChebKind, n: u64) -> Result<IntPoly> {
    let idx = match kind {
        ChebKind::X => GIndex::fifth(n),
        ChebKind::Y => GIndex::sixth(n),
        other => {
            return Err(Error::PreconditionViolation(format!(
                "gen_xy expects X or Y, got {other}"
            )))
        }
    };
    gen_g(idx)?.clear_denominators()
}

/// Any kind by name.
pub fn generate(kind: ChebKind, n: u64) -> Result<Generated> {
    Ok(match kind {
        ChebKind::U => Generated::Int(gen_u(n)),
        ChebKind::V => Generated::Int(gen_v(n)),
        ChebKind::W => Generated::Int(gen_w(n)),
        ChebKind::X | ChebKind::Y => Generated::Int(gen_xy(kind, n)?),
        ChebKind::Xbar => Generated::Rat(gen_g(GIndex::fifth(n))?),
        ChebKind::Ybar => Generated::Rat(gen_g(GIndex::sixth(n))?),
    })
}

/// Integral kinds only; errors for `Xbar`/`Ybar`.
pub fn generate_int(kind: ChebKind, n: u64) -> Result<IntPoly> {
    match generate(kind, n)? {
        Generated::Int(p) => Ok(p),
        Generated::Rat(_) => Err(Error::PreconditionViolation(format!(
            "kind {kind} has rational coefficients"
        ))),
    }
}
