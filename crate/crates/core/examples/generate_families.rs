//! Prints the first few polynomials of every supported kind.

use chebpsi::render::{latex, plain};
use chebpsi::{generate, ChebKind};

fn main() -> chebpsi::Result<()> {
    for kind in ChebKind::ALL {
        println!("{kind}:");
        for n in 0..=6 {
            let text = match generate(kind, n)? {
                chebpsi::cheb::Generated::Int(p) => plain(&p),
                chebpsi::cheb::Generated::Rat(p) => plain(&p),
            };
            println!("  {kind}_{n}(x) = {text}");
        }
    }
    let y6 = chebpsi::gen_xy(ChebKind::Y, 6)?;
    println!("\nLaTeX: Y_{{6}}(x) = {}", latex(&y6));
    Ok(())
}
