//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 corrupt cache file.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::cache::PsiCache;
use crate::cheb::{generate, generate_int, AirfoilKind, ChebKind, Generated};
use crate::factor::{FactorOrigin, Factorization, Factorizer, PsiSplit, Variant};
use crate::identities::{verify_identities_with, IdentityReport};
use crate::poly::IntPoly;
use crate::psi::PsiTable;
use crate::render::{coeff_strings, latex, plain};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CORRUPT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Json,
    Latex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ScanVariant {
    /// K_n(x) + 1
    Plus,
    /// K_n(x) - 1
    Minus,
    /// K_n(x)^2 - 1
    Square,
    /// K_n(x) itself
    Bare,
}

#[derive(Debug, Parser)]
#[command(
    name = "chebpsi",
    version,
    about = "Exact Chebyshev polynomials and their factorizations into minimal polynomials of cos(2*pi/d)"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "plain")]
    pub format: OutputFormat,
    /// JSON file used to read and store Psi_d values.
    #[arg(long, global = true, value_name = "PATH")]
    pub cache: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a Chebyshev polynomial (kinds U, V, W, X, Y, Xbar, Ybar).
    Gen {
        #[arg(value_parser = parse_kind)]
        kind: ChebKind,
        n: u64,
    },
    /// Print Psi_d, the scaled minimal polynomial of cos(2*pi/d).
    Psi {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        d: u64,
    },
    /// Factor V_n or W_n plus/minus 1 (or squared minus 1) into Psi_d and verify it.
    Factor {
        #[arg(value_parser = parse_airfoil)]
        kind: AirfoilKind,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = parse_variant)]
        variant: Variant,
    },
    /// Find every Psi_d dividing K_n(x) +- 1 for a range of n.
    Scan {
        #[arg(value_parser = parse_scan_kind)]
        kind: ChebKind,
        n_min: u64,
        n_max: u64,
        #[arg(value_enum, default_value = "plus")]
        variant: ScanVariant,
    },
    /// Check every identity family for 1 <= n <= N_MAX.
    VerifyIdentities {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
    },
}

fn parse_kind(s: &str) -> Result<ChebKind, String> {
    s.parse()
}

fn parse_airfoil(s: &str) -> Result<AirfoilKind, String> {
    s.parse()
}

fn parse_variant(s: &str) -> Result<Variant, String> {
    s.parse()
}

fn parse_scan_kind(s: &str) -> Result<ChebKind, String> {
    let k: ChebKind = s.parse()?;
    if k.is_integral() {
        Ok(k)
    } else {
        Err(format!(
            "scan needs an integral kind (U, V, W, X or Y), got {k}"
        ))
    }
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput::fail(EXIT_USAGE, text)
            } else {
                CliOutput::ok(text)
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> CliOutput {
    let table = PsiTable::new();
    let mut cache = None;
    if let Some(path) = &cli.cache {
        match PsiCache::load(path).and_then(|c| c.seed(&table).map(|()| c)) {
            Ok(c) => cache = Some(c),
            Err(e) => return CliOutput::fail(EXIT_CORRUPT, format!("error: {e}\n")),
        }
    }
    let fz = Factorizer::new(&table);
    let out = match &cli.command {
        Command::Gen { kind, n } => cmd_gen(*kind, *n, cli.format),
        Command::Psi { d } => cmd_psi(&fz, *d, cli.format),
        Command::Factor { kind, n, variant } => cmd_factor(&fz, *kind, *n, *variant, cli.format),
        Command::Scan {
            kind,
            n_min,
            n_max,
            variant,
        } => cmd_scan(&fz, *kind, *n_min, *n_max, *variant, cli.format),
        Command::VerifyIdentities { n_max } => {
            let report = verify_identities_with(*n_max, &fz, &|k, n, s| fz.variant(k, n, s));
            identities_output(&report, cli.format)
        }
    };
    if let (Some(path), Some(mut c)) = (&cli.cache, cache) {
        if c.absorb(&table) {
            if let Err(e) = c.save(path) {
                return CliOutput::fail(EXIT_CORRUPT, format!("error: {e}\n"));
            }
        }
    }
    out
}

fn usage(msg: impl std::fmt::Display) -> CliOutput {
    CliOutput::fail(EXIT_USAGE, format!("error: {msg}\n"))
}

#[derive(Serialize)]
struct GenJson<'a> {
    kind: &'a str,
    n: u64,
    coeffs: Vec<String>,
}

fn kind_latex(kind: ChebKind) -> &'static str {
    match kind {
        ChebKind::Xbar => "\\bar{X}",
        ChebKind::Ybar => "\\bar{Y}",
        other => other.name(),
    }
}

pub fn cmd_gen(kind: ChebKind, n: u64, format: OutputFormat) -> CliOutput {
    let g = match generate(kind, n) {
        Ok(g) => g,
        Err(e) => return usage(e),
    };
    let (text, tex, coeffs) = match &g {
        Generated::Int(p) => (plain(p), latex(p), coeff_strings(p)),
        Generated::Rat(p) => (plain(p), latex(p), coeff_strings(p)),
    };
    let body = match format {
        OutputFormat::Plain => text,
        OutputFormat::Latex => format!("{}_{{{n}}}(x) = {tex}", kind_latex(kind)),
        OutputFormat::Json => json(&GenJson {
            kind: kind.name(),
            n,
            coeffs,
        }),
    };
    CliOutput::ok(body + "\n")
}

#[derive(Serialize)]
struct PsiJson {
    d: u64,
    degree: usize,
    coeffs: Vec<String>,
}

pub fn cmd_psi(fz: &Factorizer<'_>, d: u64, format: OutputFormat) -> CliOutput {
    let psi = match fz.table().psi(d) {
        Ok(p) => p,
        Err(e) => return usage(e),
    };
    let body = match format {
        OutputFormat::Plain => plain(&psi.poly),
        OutputFormat::Latex => format!("\\Psi_{{{d}}}(x) = {}", latex(&psi.poly)),
        OutputFormat::Json => json(&PsiJson {
            d,
            degree: psi.degree(),
            coeffs: coeff_strings(&psi.poly),
        }),
    };
    CliOutput::ok(body + "\n")
}

#[derive(Serialize)]
struct FactorEntryJson {
    d: u64,
    origin: &'static str,
    quotient: Option<u64>,
    parity: Option<&'static str>,
    coeffs: Vec<String>,
}

#[derive(Serialize)]
struct FactorJson {
    kind: String,
    n: u64,
    variant: &'static str,
    factors: Vec<FactorEntryJson>,
    expanded: Vec<String>,
    verified: bool,
    failures: Vec<String>,
}

pub fn cmd_factor(
    fz: &Factorizer<'_>,
    kind: AirfoilKind,
    n: u64,
    variant: Variant,
    format: OutputFormat,
) -> CliOutput {
    let f = match variant.sign() {
        Some(s) => fz.variant(kind, n, s),
        None => fz.squared_minus_one(kind, n),
    };
    match f {
        Ok(f) => factor_output(fz, &f, format),
        Err(e) => usage(e),
    }
}

fn origin_note(origin: &FactorOrigin) -> String {
    match origin {
        FactorOrigin::Special => "fixed factor".into(),
        FactorOrigin::Divisor(t) => {
            let m = t.source.label();
            let q = if m == "2n" {
                "2n/d".to_owned()
            } else {
                format!("({m})/d")
            };
            format!("d | {m}, {q} = {} {}", t.quotient, t.parity.label())
        }
    }
}

/// Renders a factorization with its verification verdict; exit code 1 when
/// verification fails.
pub fn factor_output(fz: &Factorizer<'_>, f: &Factorization, format: OutputFormat) -> CliOutput {
    let report = fz.verify(f);
    let passed = report.passed();
    let failures: Vec<String> = report
        .failures()
        .map(|c| format!("{}: {}", c.name, c.detail))
        .collect();
    let mut s = String::new();
    match format {
        OutputFormat::Plain => {
            let names: Vec<String> = f.indices().iter().map(|d| format!("Psi_{d}")).collect();
            let _ = writeln!(s, "{} = {}", f.target, names.join(" * "));
            for factor in &f.factors {
                let _ = writeln!(
                    s,
                    "  Psi_{} = {}    [{}]",
                    factor.d(),
                    plain(&factor.psi.poly),
                    origin_note(&factor.origin)
                );
            }
        }
        OutputFormat::Latex => {
            let t = f.target;
            let lhs = match t.variant {
                Variant::Plus => format!("{}_{{{}}}(x) + 1", t.kind, t.n),
                Variant::Minus => format!("{}_{{{}}}(x) - 1", t.kind, t.n),
                Variant::SquaredMinusOne => format!("{}_{{{}}}(x)^2 - 1", t.kind, t.n),
            };
            let rhs: Vec<String> = f
                .indices()
                .iter()
                .map(|d| format!("\\Psi_{{{d}}}(x)"))
                .collect();
            let _ = writeln!(s, "{lhs} = {}", rhs.join(" "));
            for factor in &f.factors {
                let _ = writeln!(
                    s,
                    "\\Psi_{{{}}}(x) = {}",
                    factor.d(),
                    latex(&factor.psi.poly)
                );
            }
        }
        OutputFormat::Json => {
            let factors = f
                .factors
                .iter()
                .map(|x| {
                    let (origin, quotient, parity) = match x.origin {
                        FactorOrigin::Special => ("special", None, None),
                        FactorOrigin::Divisor(t) => {
                            (t.source.label(), Some(t.quotient), Some(t.parity.label()))
                        }
                    };
                    FactorEntryJson {
                        d: x.d(),
                        origin,
                        quotient,
                        parity,
                        coeffs: coeff_strings(&x.psi.poly),
                    }
                })
                .collect();
            let body = json(&FactorJson {
                kind: f.target.kind.to_string(),
                n: f.target.n,
                variant: f.target.variant.name(),
                factors,
                expanded: coeff_strings(&f.expanded),
                verified: passed,
                failures: failures.clone(),
            });
            let code = if passed { EXIT_OK } else { EXIT_VERIFY };
            return CliOutput {
                code,
                stdout: body + "\n",
                stderr: String::new(),
            };
        }
    }
    let comment = if format == OutputFormat::Latex {
        "% "
    } else {
        ""
    };
    if passed {
        let _ = writeln!(s, "{comment}verified: exact");
        CliOutput::ok(s)
    } else {
        let _ = writeln!(s, "{comment}verification FAILED");
        for line in &failures {
            let _ = writeln!(s, "{comment}  {line}");
        }
        CliOutput {
            code: EXIT_VERIFY,
            stdout: s,
            stderr: String::new(),
        }
    }
}

fn scan_target(kind: ChebKind, n: u64, variant: ScanVariant) -> (String, IntPoly) {
    let base = generate_int(kind, n).expect("integral kind");
    match variant {
        ScanVariant::Plus => (format!("{kind}_{n}(x) + 1"), &base + &IntPoly::one()),
        ScanVariant::Minus => (format!("{kind}_{n}(x) - 1"), &base - &IntPoly::one()),
        ScanVariant::Square => (
            format!("{kind}_{n}(x)^2 - 1"),
            &(&base * &base) - &IntPoly::one(),
        ),
        ScanVariant::Bare => (format!("{kind}_{n}(x)"), base),
    }
}

#[derive(Serialize)]
struct DivisorJson {
    d: u64,
    multiplicity: u32,
}

#[derive(Serialize)]
struct ScanRowJson {
    n: u64,
    zero: bool,
    divisors: Vec<DivisorJson>,
    complete: bool,
    scalar: Option<String>,
}

#[derive(Serialize)]
struct ScanJson<'a> {
    kind: &'a str,
    variant: &'a str,
    rows: Vec<ScanRowJson>,
}

fn divisor_list(split: &PsiSplit, latex_style: bool) -> String {
    if split.divisors.is_empty() {
        return "none".into();
    }
    split
        .divisors
        .iter()
        .map(|(p, e)| match (latex_style, *e) {
            (false, 1) => format!("Psi_{}", p.d),
            (false, e) => format!("Psi_{}^{e}", p.d),
            (true, 1) => format!("\\Psi_{{{}}}", p.d),
            (true, e) => format!("\\Psi_{{{}}}^{{{e}}}", p.d),
        })
        .collect::<Vec<_>>()
        .join(", ")
}

fn scalar_note(s: &BigRational) -> String {
    if s.is_one() {
        String::new()
    } else {
        format!(" (scalar {s})")
    }
}

pub fn cmd_scan(
    fz: &Factorizer<'_>,
    kind: ChebKind,
    n_min: u64,
    n_max: u64,
    variant: ScanVariant,
    format: OutputFormat,
) -> CliOutput {
    if !kind.is_integral() {
        return usage(format!("scan needs an integral kind, got {kind}"));
    }
    if n_min > n_max {
        return usage(format!("n_min ({n_min}) exceeds n_max ({n_max})"));
    }
    let variant_name = variant
        .to_possible_value()
        .map(|v| v.get_name().to_owned())
        .unwrap_or_default();
    let mut s = String::new();
    let mut rows = Vec::new();
    for n in n_min..=n_max {
        let (label, p) = scan_target(kind, n, variant);
        let split = if p.is_zero() {
            None
        } else {
            match fz.split(&p) {
                Ok(sp) => Some(sp),
                Err(e) => return usage(e),
            }
        };
        match format {
            OutputFormat::Plain => {
                let _ = match &split {
                    None => writeln!(s, "{label}: zero polynomial"),
                    Some(sp) => writeln!(
                        s,
                        "{label}: divisors: {}; complete: {}",
                        divisor_list(sp, false),
                        match &sp.scalar {
                            Some(c) => format!("yes{}", scalar_note(c)),
                            None => "no".into(),
                        }
                    ),
                };
            }
            OutputFormat::Latex => {
                let tex_label = label.replacen(&format!("_{n}"), &format!("_{{{n}}}"), 1);
                let _ = match &split {
                    None => writeln!(s, "{tex_label} & \\text{{zero}} & \\\\"),
                    Some(sp) => writeln!(
                        s,
                        "{tex_label} & {} & \\text{{{}}} \\\\",
                        divisor_list(sp, true),
                        if sp.is_complete() { "yes" } else { "no" }
                    ),
                };
            }
            OutputFormat::Json => rows.push(match &split {
                None => ScanRowJson {
                    n,
                    zero: true,
                    divisors: Vec::new(),
                    complete: false,
                    scalar: None,
                },
                Some(sp) => ScanRowJson {
                    n,
                    zero: false,
                    divisors: sp
                        .divisors
                        .iter()
                        .map(|(p, e)| DivisorJson {
                            d: p.d,
                            multiplicity: *e,
                        })
                        .collect(),
                    complete: sp.is_complete(),
                    scalar: sp.scalar.as_ref().map(ToString::to_string),
                },
            }),
        }
    }
    if format == OutputFormat::Json {
        s = json(&ScanJson {
            kind: kind.name(),
            variant: &variant_name,
            rows,
        }) + "\n";
    }
    CliOutput::ok(s)
}

#[derive(Serialize)]
struct FamilyJson<'a> {
    name: &'a str,
    passed: bool,
    first_failing_n: Option<u64>,
    detail: Option<&'a str>,
}

#[derive(Serialize)]
struct IdentitiesJson<'a> {
    n_max: u64,
    passed: bool,
    families: Vec<FamilyJson<'a>>,
}

/// Renders an identity report; exit code 1 when any family failed.
pub fn identities_output(report: &IdentityReport, format: OutputFormat) -> CliOutput {
    let mut s = String::new();
    match format {
        OutputFormat::Json => {
            let families = report
                .families
                .iter()
                .map(|f| FamilyJson {
                    name: f.name,
                    passed: f.passed(),
                    first_failing_n: f.first_failure.as_ref().map(|x| x.0),
                    detail: f.first_failure.as_ref().map(|x| x.1.as_str()),
                })
                .collect();
            s = json(&IdentitiesJson {
                n_max: report.n_max,
                passed: report.passed(),
                families,
            }) + "\n";
        }
        OutputFormat::Plain | OutputFormat::Latex => {
            let comment = if format == OutputFormat::Latex {
                "% "
            } else {
                ""
            };
            for f in &report.families {
                let _ = match &f.first_failure {
                    None => writeln!(s, "{comment}PASS  {}  (n = 1..{})", f.name, f.checked),
                    Some((n, why)) => {
                        writeln!(s, "{comment}FAIL  {}  first failing n = {n}: {why}", f.name)
                    }
                };
            }
            let verdict = if report.passed() {
                "all identities hold"
            } else {
                "some identities FAILED"
            };
            let _ = writeln!(s, "{comment}{verdict}");
        }
    }
    CliOutput {
        code: if report.passed() {
            EXIT_OK
        } else {
            EXIT_VERIFY
        },
        stdout: s,
        stderr: String::new(),
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}
