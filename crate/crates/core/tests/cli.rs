use std::process::{Command, Output};

use gysin::algebra::{parse_poly_in, VarSet};

fn gysin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gysin"))
        .args(args)
        .env_remove("GYSIN_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn projective_bundle_in_segre_form() {
    let o = gysin(&[
        "pushforward",
        "--rank",
        "3",
        "--flag",
        "0,1,3",
        "--weight",
        "1,1,0",
        "--power",
        "5",
        "--basis",
        "segre",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let vs = VarSet::segre(3);
    let got = parse_poly_in(stdout(&o).trim(), &vs).unwrap();
    assert_eq!(got, parse_poly_in("s3 - 5*s1*s2", &vs).unwrap());
}

#[test]
fn schur_json_for_rank_three() {
    let o = gysin(&[
        "pushforward",
        "--rank",
        "3",
        "--flag",
        "0,1,2,3",
        "--weight",
        "3,2,0",
        "--k",
        "3",
        "--basis",
        "schur",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["positive"], true);
    assert_eq!(
        v["terms"],
        serde_json::json!([
            {"partition": [2, 1, 0], "coeff": "2700"},
            {"partition": [1, 1, 1], "coeff": "2340"},
        ])
    );
}

#[test]
fn tied_weight_prints_zero() {
    let o = gysin(&[
        "pushforward",
        "--rank",
        "3",
        "--flag",
        "0,1,2,3",
        "--weight",
        "2,2,0",
        "--k",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn check_flag_agrees_with_oracle() {
    let o = gysin(&[
        "pushforward",
        "--rank",
        "4",
        "--weight",
        "4,3,2,0",
        "--power",
        "9",
        "--check",
        "--basis",
        "all",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("positive: true"));
}

#[test]
fn latex_output() {
    let o = gysin(&[
        "pushforward",
        "--rank",
        "3",
        "--weight",
        "3,2,0",
        "--k",
        "3",
        "--basis",
        "schur",
        "--format",
        "latex",
    ]);
    assert_eq!(stdout(&o), "2700 S_{(2,1,0)} + 2340 S_{(1,1,1)}\n");
}

#[test]
fn bad_input_exits_two_with_diagnostic() {
    let o = gysin(&[
        "pushforward",
        "--flag",
        "0,2,3",
        "--weight",
        "2,1,0",
        "--k",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("block-constancy"), "{err}");

    let o = gysin(&[
        "pushforward",
        "--rank",
        "3",
        "--weight",
        "3,2,0",
        "--k",
        "3",
        "--n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8(o.stderr)
        .unwrap()
        .contains("degree out of range"));

    assert_eq!(
        gysin(&[
            "pushforward",
            "--flag",
            "0,3,2",
            "--weight",
            "1,1,1",
            "--k",
            "0"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(gysin(&["verify", "--max-rank", "x"]).status.code(), Some(2));
}

#[test]
fn verify_small_grid() {
    let o = gysin(&["verify", "--max-rank", "3", "--max-k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("all checks passed"), "{text}");
    for name in [
        "oracle",
        "grassmannian",
        "positivity",
        "vanishing",
        "split-bundle",
    ] {
        assert!(text.contains(name), "{name} missing from {text}");
    }
}

#[test]
fn verify_output_ignores_worker_count() {
    let run = |workers: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_gysin"))
            .args([
                "verify",
                "--max-rank",
                "3",
                "--max-k",
                "1",
                "--format",
                "json",
            ])
            .env("GYSIN_WORKERS", workers)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn tables_match_their_golden_values() {
    let o = gysin(&["tables"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("14*c1^3 - 14*c1*c2"));
    assert!(text.contains("90720*(-s1^3 - 2*s1*s2)"));
    assert!(text.contains("40320*(648*s1^2*s2 - 124*s1*s3 + 42*s2^2 + 13*s4)"));
    assert!(!text.contains("MISMATCH"));

    let o = gysin(&["tables", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn expand_command() {
    let o = gysin(&["expand", "--rank", "3", "--poly", "4*c1^3 - 3*c1*c2 - c3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("segre: -5*s1*s2 + s3"), "{text}");
    assert!(text.contains("positive: true"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = [
        "pushforward",
        "--rank",
        "4",
        "--weight",
        "3,2,1,0",
        "--power",
        "10",
        "--basis",
        "all",
        "--format",
        "json",
    ];
    let a = gysin(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_gysin"))
        .args(args)
        .env("GYSIN_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_full_grid() {
    let o = gysin(&["verify", "--max-rank", "4", "--max-k", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all checks passed"));
}
