//! Text renderings of polynomials: plain ASCII in descending degree, and LaTeX.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

use crate::poly::{Coeff, Poly};

/// Coefficients that know how to print their magnitude.
pub trait RenderCoeff: Coeff + Signed {
    /// Magnitude as a standalone term (constant position).
    fn plain(&self) -> String;
    /// Magnitude as a multiplier of a power of x.
    fn plain_multiplier(&self) -> String {
        self.plain()
    }
    fn latex(&self) -> String;
}

impl RenderCoeff for BigInt {
    fn plain(&self) -> String {
        self.to_string()
    }
    fn latex(&self) -> String {
        self.to_string()
    }
}

impl RenderCoeff for BigRational {
    fn plain(&self) -> String {
        self.to_string()
    }
    fn plain_multiplier(&self) -> String {
        if self.is_integer() {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
    fn latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            format!("\\frac{{{}}}{{{}}}", self.numer(), self.denom())
        }
    }
}

fn render<C: RenderCoeff>(p: &Poly<C>, term: impl Fn(&C, usize) -> String) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let body = term(&c.abs(), i);
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `64x^6 + 32x^5 - 80x^4 - 32x^3 + 24x^2 + 6x - 1`
pub fn plain<C: RenderCoeff>(p: &Poly<C>) -> String {
    render(p, |mag, i| {
        let coef = if i > 0 && mag.is_one() {
            String::new()
        } else if i > 0 {
            mag.plain_multiplier()
        } else {
            mag.plain()
        };
        match i {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{i}"),
        }
    })
}

/// `64 x^{6} + 32 x^{5} - \frac{3}{4}`
pub fn latex<C: RenderCoeff>(p: &Poly<C>) -> String {
    render(p, |mag, i| {
        let coef = if i > 0 && mag.is_one() {
            String::new()
        } else {
            mag.latex()
        };
        let sep = if coef.is_empty() { "" } else { " " };
        match i {
            0 => coef,
            1 => format!("{coef}{sep}x"),
            _ => format!("{coef}{sep}x^{{{i}}}"),
        }
    })
}

/// Coefficients as decimal strings, ascending degree.
pub fn coeff_strings<C: Coeff + ToString>(p: &Poly<C>) -> Vec<String> {
    p.coeffs().iter().map(ToString::to_string).collect()
}
