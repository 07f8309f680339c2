//! `V_n^2 - 1` and `W_n^2 - 1` as products over the divisors of `2n` and `2n + 2`,
//! and how the two halves recombine.

use chebpsi::{factor_squared_minus_one, factor_variant, AirfoilKind};

fn main() -> chebpsi::Result<()> {
    for kind in [AirfoilKind::V, AirfoilKind::W] {
        for n in [6, 11, 25] {
            let sq = factor_squared_minus_one(kind, n)?;
            let plus = factor_variant(kind, n, 1)?;
            let minus = factor_variant(kind, n, -1)?;
            let recombined = &plus.expanded * &minus.expanded;
            println!(
                "{}: {} factors {:?}",
                sq.target,
                sq.factors.len(),
                sq.indices()
            );
            println!("    +1 takes {:?}", plus.indices());
            println!("    -1 takes {:?}", minus.indices());
            println!(
                "    product of halves matches: {}",
                recombined == sq.expanded
            );
        }
    }
    Ok(())
}
