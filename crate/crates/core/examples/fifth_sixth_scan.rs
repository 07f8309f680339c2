//! Searches `X_n +- 1` and `Y_n +- 1` for `Psi_d` divisors.
//!
//! `X_5 +- 1` and `Y_5 +- 1` have none, so no product formula of the airfoil
//! type can exist for these kinds in general. Some small even `n` still split.

use chebpsi::render::plain;
use chebpsi::{gen_xy, ChebKind, Factorizer, IntPoly};

fn main() -> chebpsi::Result<()> {
    let fz = Factorizer::default();
    for kind in [ChebKind::X, ChebKind::Y] {
        for n in 1..=12 {
            for c in [1i64, -1] {
                let p = &gen_xy(kind, n)? + &IntPoly::from_i64s(&[c]);
                let split = fz.split(&p)?;
                let found: Vec<String> = split
                    .divisors
                    .iter()
                    .map(|(psi, e)| match e {
                        1 => format!("Psi_{}", psi.d),
                        _ => format!("Psi_{}^{e}", psi.d),
                    })
                    .collect();
                let rest = if split.is_complete() {
                    format!("complete, scalar {}", split.scalar.unwrap())
                } else {
                    format!("cofactor {}", plain(&split.cofactor))
                };
                println!("{kind}_{n}(x) {c:+}: [{}] {rest}", found.join(", "));
            }
        }
    }
    Ok(())
}
