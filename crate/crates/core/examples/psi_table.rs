//! `Psi_d` for small `d`, with its roots and the cyclotomic polynomial it folds from.
//!
//! Run with an optional upper bound: `cargo run --example psi_table -- 30`.

use chebpsi::render::plain;
use chebpsi::{cyclotomic, psi, psi_roots, totient};

fn main() -> chebpsi::Result<()> {
    let d_max: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(16);
    for d in 1..=d_max {
        let p = psi(d)?;
        let roots: Vec<String> = psi_roots(d)
            .iter()
            .map(|r| format!("{:.6}", r.value()))
            .collect();
        println!("Psi_{d} = {}", plain(&p.poly));
        println!(
            "    phi = {}, Phi_{d} = {}, roots [{}]",
            totient(d),
            plain(&cyclotomic(d)),
            roots.join(", ")
        );
    }
    Ok(())
}
