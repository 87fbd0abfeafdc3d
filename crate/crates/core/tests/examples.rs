#[allow(dead_code)]
mod projective_bundle {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/projective_bundle.rs"
    ));
}

#[allow(dead_code)]
mod grassmannian_table {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/grassmannian_table.rs"
    ));
}

#[allow(dead_code)]
mod complete_flag_rank3 {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/complete_flag_rank3.rs"
    ));
}

#[allow(dead_code)]
mod complete_flag_rank4 {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/complete_flag_rank4.rs"
    ));
}

#[allow(dead_code)]
mod schur_positivity {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/schur_positivity.rs"
    ));
}

#[allow(dead_code)]
mod oracle_crosscheck {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/oracle_crosscheck.rs"
    ));
}

#[allow(dead_code)]
mod polynomial_basics {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/polynomial_basics.rs"
    ));
}

#[test]
fn projective_bundle_runs() {
    let lines = projective_bundle::run_example().unwrap();
    assert_eq!(
        lines[0],
        "rank 3, N=5: -5*s1*s2 + s3 = 4*c1^3 - 3*c1*c2 - c3  (Schur-positive: true)"
    );
    assert!(lines[1].starts_with("rank 4, N=6: -5*s1^3 - 6*s1*s2 + s3 = 10*c1^3 - 4*c1*c2 - c3"));
}

#[test]
fn grassmannian_table_runs() {
    let lines = grassmannian_table::run_example().unwrap();
    assert_eq!(lines.len(), 5);
    assert!(lines[3].contains("14*c1^3 - 14*c1*c2"), "{}", lines[3]);
}

#[test]
fn complete_flag_rank3_runs() {
    let lines = complete_flag_rank3::run_example().unwrap();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[3], "a=(3,2,0) k=3: 2700*S(2,1,0) + 2340*S(1,1,1)");
}

#[test]
fn complete_flag_rank4_runs() {
    let lines = complete_flag_rank4::run_example().unwrap();
    assert_eq!(lines[0], "a=(3,2,1,0) N=9: 90720*(-s1^3 - 2*s1*s2)");
    assert_eq!(
        lines[3],
        "a=(4,3,2,0) N=10: 40320*(648*s1^2*s2 - 124*s1*s3 + 42*s2^2 + 13*s4)"
    );
}

#[test]
fn schur_positivity_runs() {
    let lines = schur_positivity::run_example().unwrap();
    assert_eq!(lines.len(), 10);
    assert!(lines[8].ends_with("(positive: false)"), "{}", lines[8]);
}

#[test]
fn oracle_crosscheck_runs() {
    assert_eq!(oracle_crosscheck::run_example().unwrap().len(), 16);
}

#[test]
fn polynomial_basics_runs() {
    let lines = polynomial_basics::run_example().unwrap();
    assert_eq!(lines[0], "(c1 + c2)^2 - c1^2 = c2^2 + 2*c1*c2");
}
