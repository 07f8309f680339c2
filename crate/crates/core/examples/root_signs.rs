//! The quotient parity rule against floating-point evaluation: at every root
//! of `Psi_d`, `V_n` and `W_n` take the value `+1` or `-1` predicted from `2n/d`
//! or `(2n+2)/d`.

use chebpsi::factor::Source;
use chebpsi::{assign_root, divisors, psi_roots, AirfoilKind};

fn main() -> chebpsi::Result<()> {
    let n = 9;
    for kind in [AirfoilKind::V, AirfoilKind::W] {
        let poly = kind.generate(n);
        println!("{kind}_{n}:");
        for source in [Source::Of2n, Source::Of2nPlus2] {
            for d in divisors(source.modulus(n)).into_iter().filter(|&d| d > 2) {
                for root in psi_roots(d) {
                    let predicted = assign_root(kind, n, root, source)?;
                    let value = poly.eval_real(root.value());
                    println!(
                        "    d = {d:>2} | {:<4} k = {:>2}: predicted {predicted:+}, evaluated {value:+.12}",
                        source.label(),
                        root.k
                    );
                }
            }
        }
    }
    Ok(())
}
