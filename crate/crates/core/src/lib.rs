//! Exact Chebyshev polynomials of the second through sixth kinds and their
//! factorizations into `Psi_d(x)`, the minimal polynomial of `cos(2*pi/d)`
//! scaled to have leading coefficient `2^(phi(d)/2)`.
//!
//! ```
//! use chebpsi::{factor_variant, AirfoilKind};
//!
//! let f = factor_variant(AirfoilKind::V, 12, 1).unwrap();
//! assert_eq!(f.indices(), vec![8, 24, 26]);
//! assert!(chebpsi::verify(&f).passed());
//! ```

pub mod cache;
pub mod cheb;
pub mod cli;
pub mod error;
pub mod factor;
pub mod identities;
pub mod poly;
pub mod psi;
pub mod render;

pub use cheb::{gen_g, gen_u, gen_v, gen_w, gen_xy, generate, AirfoilKind, ChebKind, GIndex};
pub use error::{Error, Result};
pub use factor::{
    assign_root, factor_squared_minus_one, factor_variant, psi_divisor_scan, verify, Factorization,
    Factorizer, Variant,
};
pub use poly::{IntPoly, RatPoly};
pub use psi::{cyclotomic, divisors, psi, psi_roots, totient, PsiPoly, PsiTable, RootSpec};
