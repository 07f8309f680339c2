//! Drives the command-line interface without spawning a process.

use chebpsi::cli::run;

fn main() {
    for args in [
        &["chebpsi", "gen", "X", "4"][..],
        &["chebpsi", "psi", "13", "--format", "latex"],
        &["chebpsi", "factor", "W", "12", "minus"],
        &["chebpsi", "scan", "Y", "4", "6", "plus"],
        &["chebpsi", "--format", "json", "verify-identities", "5"],
        &["chebpsi", "factor", "X", "5", "plus"],
    ] {
        let out = run(args.iter().copied());
        println!("$ {}  (exit {})", args.join(" "), out.code);
        print!("{}", out.stdout);
        eprint!("{}", out.stderr);
        println!();
    }
}
