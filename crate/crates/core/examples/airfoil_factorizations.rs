//! Splits `V_n(x) +- 1` and `W_n(x) +- 1` into `Psi_d` factors and checks each
//! product against the recurrence.
//!
//! `cargo run --example airfoil_factorizations -- 12`

use chebpsi::factor::{FactorOrigin, Source};
use chebpsi::render::plain;
use chebpsi::{factor_variant, verify, AirfoilKind};

fn main() -> chebpsi::Result<()> {
    let n: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    for kind in [AirfoilKind::V, AirfoilKind::W] {
        for sign in [1, -1] {
            let f = factor_variant(kind, n, sign)?;
            let names: Vec<String> = f.indices().iter().map(|d| format!("Psi_{d}")).collect();
            println!("{} = {}", f.target, names.join(" * "));
            for factor in &f.factors {
                let why = match factor.origin {
                    FactorOrigin::Special => "special".to_owned(),
                    FactorOrigin::Divisor(t) => match t.source {
                        Source::Of2n => format!("2n/{} = {}", t.d, t.quotient),
                        Source::Of2nPlus2 => format!("(2n+2)/{} = {}", t.d, t.quotient),
                    },
                };
                println!(
                    "    Psi_{:<4} {:<14} {}",
                    factor.d(),
                    why,
                    plain(&factor.psi.poly)
                );
            }
            let report = verify(&f);
            println!("    verified: {}\n", report.passed());
        }
    }
    Ok(())
}
