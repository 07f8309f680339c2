//! Dense univariate polynomials with exact coefficients.
//!
//! Coefficients are stored in ascending order of degree: `coeffs[i]` is the
//! coefficient of `x^i`. The zero polynomial is the empty vector, and every
//! other value keeps a nonzero last coefficient. All constructors and
//! operations return this canonical form.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Coefficient ring for [`Poly`].
pub trait Coeff:
    Clone + PartialEq + fmt::Debug + Zero + One + Neg<Output = Self> + Send + Sync
{
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
}

macro_rules! impl_coeff {
    ($t:ty) => {
        impl Coeff for $t {
            fn add_ref(&self, rhs: &Self) -> Self {
                self + rhs
            }
            fn sub_ref(&self, rhs: &Self) -> Self {
                self - rhs
            }
            fn mul_ref(&self, rhs: &Self) -> Self {
                self * rhs
            }
        }
    };
}
impl_coeff!(BigInt);
impl_coeff!(BigRational);

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

/// Polynomial over the integers.
pub type IntPoly = Poly<BigInt>;
/// Polynomial over the rationals.
pub type RatPoly = Poly<BigRational>;

impl<C: Coeff> Poly<C> {
    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(coeffs: Vec<C>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `c * x^k`.
    pub fn monomial(c: C, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Self { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Horner evaluation in the coefficient ring.
    pub fn eval(&self, t: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc.mul_ref(t).add_ref(c))
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Product of an iterator of polynomials; the empty product is 1.
    pub fn product<'a, I>(factors: I) -> Self
    where
        I: IntoIterator<Item = &'a Self>,
        C: 'a,
    {
        factors.into_iter().fold(Self::one(), |acc, f| &acc * f)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = C::zero();
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).unwrap_or(&zero);
                let b = other.coeffs.get(i).unwrap_or(&zero);
                f(a, b)
            })
            .collect();
        Self::new(coeffs)
    }
}

impl<'a, C: Coeff> Add<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.zip_with(rhs, C::add_ref)
    }
}

impl<'a, C: Coeff> Sub<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &'a Poly<C>) -> Poly<C> {
        self.zip_with(rhs, C::sub_ref)
    }
}

impl<'a, C: Coeff> Mul<&'a Poly<C>> for &'a Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &'a Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = out[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Poly::new(out)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coeff> $tr<Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $m(self, rhs: Poly<C>) -> Poly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: fmt::Debug> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Poly").field(&self.coeffs).finish()
    }
}

impl IntPoly {
    /// Convenience constructor from machine integers, ascending order.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Exact quotient `self / divisor` over the integers.
    ///
    /// Fails with [`Error::NotDivisible`] when a leading-coefficient division
    /// is inexact or a nonzero remainder is left.
    pub fn div_exact(&self, divisor: &IntPoly) -> Result<IntPoly> {
        let dq = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = &divisor.coeffs[dq];
        let Some(dp) = self.degree() else {
            return Ok(IntPoly::zero());
        };
        if dp < dq {
            return Err(Error::NotDivisible);
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dp - dq + 1];
        for i in (0..=dp - dq).rev() {
            let top = &rem[i + dq];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible);
        }
        Ok(IntPoly::new(quot))
    }

    /// GCD of the coefficients, nonnegative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// `self / content`, with a positive leading coefficient.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut g = self.content();
        if self.leading().is_some_and(Signed::is_negative) {
            g = -g;
        }
        IntPoly::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Double-precision evaluation at `t`.
    ///
    /// Uses compensated Horner evaluation with coefficients split into
    /// double-double pairs, so the result is as accurate as if computed in
    /// twice the working precision and then rounded. Chebyshev-type
    /// polynomials near their roots suffer severe cancellation in plain
    /// Horner, which this keeps under control up to degree ~100.
    pub fn eval_real(&self, t: f64) -> f64 {
        let mut hi = 0.0f64;
        let mut err = 0.0f64;
        for c in self.coeffs.iter().rev() {
            let (c_hi, c_lo) = split_bigint(c);
            let (p, pe) = two_prod(hi, t);
            let (s, se) = two_sum(p, c_hi);
            hi = s;
            err = err * t + (pe + se + c_lo);
        }
        hi + err
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rat(&self, t: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| {
                acc * t + BigRational::from_integer(c.clone())
            })
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl RatPoly {
    /// Primitive integer multiple of `self` with positive leading coefficient.
    ///
    /// Multiplies by the LCM of the denominators, then divides by the GCD of
    /// the resulting numerators.
    pub fn clear_denominators(&self) -> Result<IntPoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        Ok(IntPoly::new(scaled).primitive_part())
    }
}

/// Exact hi/lo split of a big integer into two doubles.
fn split_bigint(c: &BigInt) -> (f64, f64) {
    let hi = c.to_f64().unwrap_or(f64::NAN);
    if !hi.is_finite() {
        return (hi, 0.0);
    }
    // hi is an integer-valued double, so it converts back exactly.
    let back = BigInt::from_f64(hi).unwrap_or_default();
    let lo = (c - back).to_f64().unwrap_or(0.0);
    (hi, lo)
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}
