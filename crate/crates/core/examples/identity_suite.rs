//! Runs every identity family up to a bound and prints a summary.
//!
//! `cargo run --release --example identity_suite -- 200`

use chebpsi::identities::verify_identities;

fn main() {
    let n_max: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(50);
    let start = std::time::Instant::now();
    let report = verify_identities(n_max);
    for f in &report.families {
        match &f.first_failure {
            None => println!("PASS  {}", f.name),
            Some((n, why)) => println!("FAIL  {}  at n = {n}: {why}", f.name),
        }
    }
    println!("n <= {n_max} in {:.2?}", start.elapsed());
}
