use std::path::Path;
use std::process::{Command, Output};

use chebpsi::cache::PsiCache;
use chebpsi::{psi, IntPoly};
use num_bigint::BigInt;
use serde_json::Value;

fn chebpsi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chebpsi"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn with_cache(cache: &Path, args: &[&str]) -> Output {
    let mut all = vec!["--cache", cache.to_str().unwrap()];
    all.extend_from_slice(args);
    chebpsi(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// One invocation per subcommand and output format.
const COMMANDS: &[&[&str]] = &[
    &["gen", "Y", "4"],
    &["gen", "Xbar", "5", "--format", "latex"],
    &["gen", "W", "9", "--format", "json"],
    &["psi", "26"],
    &["psi", "105", "--format", "json"],
    &["factor", "V", "12", "plus"],
    &["factor", "W", "12", "minus", "--format", "latex"],
    &["factor", "W", "25", "square", "--format", "json"],
    &["scan", "X", "1", "6", "plus"],
    &["scan", "Y", "4", "6", "minus", "--format", "json"],
    &["scan", "U", "0", "5", "bare"],
    &["verify-identities", "12"],
    &["verify-identities", "3", "--format", "json"],
];

#[test]
fn documented_outputs() {
    assert_eq!(stdout(&chebpsi(&["gen", "Y", "4"])), "16x^4 - 16x^2 + 3\n");
    assert_eq!(stdout(&chebpsi(&["gen", "U", "0"])), "1\n");
    assert_eq!(
        stdout(&chebpsi(&["gen", "X", "2", "--format", "json"])).trim(),
        r#"{"kind":"X","n":2,"coeffs":["-3","0","4"]}"#
    );
    let out = chebpsi(&["factor", "V", "12", "plus"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(
        text.starts_with("V_12(x) + 1 = Psi_8 * Psi_24 * Psi_26\n"),
        "{text}"
    );
    assert!(text.ends_with("verified: exact\n"));
    let text = stdout(&chebpsi(&["factor", "W", "11", "plus"]));
    assert!(text.contains("= Psi_2 * Psi_3 * Psi_4 * Psi_6 * Psi_12 * Psi_22\n"));
    let text = stdout(&chebpsi(&["factor", "V", "1", "minus"]));
    assert!(text.starts_with("V_1(x) - 1 = Psi_1\n"));
    assert_eq!(
        stdout(&chebpsi(&["scan", "Y", "5", "5", "minus"])),
        "Y_5(x) - 1: divisors: none; complete: no\n"
    );
    let text = stdout(&chebpsi(&["scan", "V", "1", "20", "plus"]));
    assert_eq!(text.lines().count(), 20);
    assert!(text.lines().all(|l| l.ends_with("complete: yes")), "{text}");
}

#[test]
fn exit_codes() {
    assert_eq!(chebpsi(&["verify-identities", "1"]).status.code(), Some(0));
    for bad in [
        &["gen", "Q", "3"][..],
        &["gen", "U", "-1"],
        &["psi", "0"],
        &["factor", "X", "3", "plus"],
        &["factor", "V", "0", "plus"],
        &["scan", "V", "5", "2"],
        &["scan", "Xbar", "1", "2"],
        &["verify-identities", "0"],
        &["--format", "yaml", "gen", "U", "1"],
        &[],
    ] {
        let out = chebpsi(bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn deterministic_output() {
    for args in COMMANDS {
        let a = chebpsi(args);
        let b = chebpsi(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("psi.json");
    for args in COMMANDS {
        let plain = chebpsi(args);
        let cold = with_cache(&cache, args);
        let warm = with_cache(&cache, args);
        assert_eq!(plain.stdout, cold.stdout, "{args:?}");
        assert_eq!(plain.stdout, warm.stdout, "{args:?}");
        assert_eq!(plain.status.code(), warm.status.code());
    }
    let text = std::fs::read_to_string(&cache).unwrap();
    let loaded = PsiCache::from_json(&text).unwrap();
    assert!(loaded.entries.len() > 20);
    for (d, p) in &loaded.entries {
        assert_eq!(*p, psi(*d).unwrap().poly);
    }
}

#[test]
fn corrupt_cache_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("garbage.json", "not json".to_owned()),
        ("version.json", r#"{"version":7,"entries":{}}"#.to_owned()),
        // leading coefficient right, constant term wrong
        (
            "value.json",
            r#"{"version":1,"entries":{"12":["-2","0","4"]}}"#.to_owned(),
        ),
        (
            "degree.json",
            r#"{"version":1,"entries":{"7":["1","2"]}}"#.to_owned(),
        ),
    ];
    for (name, body) in cases {
        let path = dir.path().join(name);
        std::fs::write(&path, &body).unwrap();
        let out = with_cache(&path, &["gen", "U", "2"]);
        assert_eq!(out.status.code(), Some(3), "{name}");
        assert!(out.stdout.is_empty());
        // the bad file is left alone
        assert_eq!(std::fs::read_to_string(&path).unwrap(), body);
    }
    let path = dir.path().join("value.json");
    let err = String::from_utf8(with_cache(&path, &["psi", "5"]).stderr).unwrap();
    assert!(err.contains("\"12\""), "{err}");
}

fn coeffs(v: &Value) -> IntPoly {
    IntPoly::new(
        v.as_array()
            .unwrap()
            .iter()
            .map(|c| c.as_str().unwrap().parse::<BigInt>().unwrap())
            .collect(),
    )
}

fn render(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| Value::String(c.to_string()))
            .collect(),
    )
}

#[test]
fn json_round_trips() {
    let v: Value =
        serde_json::from_slice(&chebpsi(&["gen", "U", "40", "--format", "json"]).stdout).unwrap();
    assert_eq!(render(&coeffs(&v["coeffs"])), v["coeffs"]);
    assert_eq!(coeffs(&v["coeffs"]), chebpsi::gen_u(40));

    let v: Value = serde_json::from_slice(
        &chebpsi(&["factor", "W", "30", "minus", "--format", "json"]).stdout,
    )
    .unwrap();
    assert_eq!(v["verified"], Value::Bool(true));
    let factors: Vec<IntPoly> = v["factors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| coeffs(&f["coeffs"]))
        .collect();
    let expanded = coeffs(&v["expanded"]);
    assert_eq!(IntPoly::product(&factors), expanded);
    assert_eq!(render(&expanded), v["expanded"]);
}
