// A push-forward engine with its sign flipped must be caught by every
// consistency surface: `pushforward --check`, `verify` and `tables`.

use gysin::algebra::SparsePoly;
use gysin::charclasses::CharPoly;
use gysin::cli::{run_with_engine, EXIT_INCONSISTENT};
use gysin::combinatorics::FlagType;
use gysin::gysin::dp_segre;

fn flipped(flag: &FlagType, ftilde: &SparsePoly, n: u32) -> gysin::Result<CharPoly> {
    let p = dp_segre(flag, ftilde, n)?;
    CharPoly::new(p.basis(), p.degree(), -p.poly().clone())
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with_engine(
        args.iter().map(|s| s.to_string()),
        &mut out,
        &mut err,
        flipped,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn verify_names_the_first_mismatch() {
    let (code, out, _) = run(&["verify", "--max-rank", "3", "--max-k", "2"]);
    assert_eq!(code, EXIT_INCONSISTENT);
    let first = out
        .lines()
        .find(|l| l.starts_with("FAIL"))
        .expect("a FAIL line");
    assert!(first.contains("oracle"), "{first}");
    assert!(first.contains("flag") && first.contains("k="), "{first}");
}

#[test]
fn verify_json_lists_failures() {
    let (code, out, _) = run(&[
        "verify",
        "--max-rank",
        "2",
        "--max-k",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(code, EXIT_INCONSISTENT);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], false);
    assert!(!v["failures"].as_array().unwrap().is_empty());
}

#[test]
fn tables_detect_the_flip() {
    let (code, out, _) = run(&["tables"]);
    assert_eq!(code, EXIT_INCONSISTENT);
    assert!(out.contains("MISMATCH"));
}

#[test]
fn pushforward_check_detects_the_flip() {
    let (code, out, err) = run(&[
        "pushforward",
        "--rank",
        "3",
        "--weight",
        "3,2,0",
        "--k",
        "3",
        "--check",
    ]);
    assert_eq!(code, EXIT_INCONSISTENT);
    assert!(out.is_empty());
    assert!(err.contains("oracle"), "{err}");
}
