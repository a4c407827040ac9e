//! End-to-end checks of the binary: output shapes and exit codes.

use std::process::{Command, Output};

fn wreathlr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wreathlr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn lr_coefficient_example() {
    let out = wreathlr(&["lr", "[2,1]", "[3,2]", "[4,3,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn lr_expansion_lists_terms() {
    let out = wreathlr(&["lr", "[1]", "[1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "1 x [2]\n1 x [1,1]");
}

#[test]
fn wreath_lr_json_round_trips() {
    let out = wreathlr(&["wreath-lr", "[[1],[1]]", "[[1],[]]", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let parsed = wreathlr::formats::decomposition_from_json(&value).unwrap();
    let direct = wreathlr_core::wreath_lr_expand(
        &wreathlr_core::text::parse_multipartition("[[1],[1]]").unwrap(),
        &wreathlr_core::text::parse_multipartition("[[1],[]]").unwrap(),
    )
    .unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn branch_up_matches_library() {
    let out = wreathlr(&["branch", "up", "[[1],[]]", "--dims", "1,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 x [[2],[]]"), "{text}");
    assert!(text.contains("1 x [[1,1],[]]"), "{text}");
    assert!(text.contains("1 x [[1],[1]]"), "{text}");
}

#[test]
fn quiver_trivial_case_json() {
    let out = wreathlr(&["quiver", "--n", "0", "--l", "1", "--json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    let data = wreathlr::formats::quiver_from_json(&value).unwrap();
    assert_eq!(data.vertices.len(), 1);
    assert!(data.arrows.is_empty());
}

#[test]
fn quiver_dot_and_components() {
    let out = wreathlr(&["quiver", "--n", "2", "--l", "3", "--dot", "--components"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("digraph quiver {"));
    assert!(text.contains("connected components: 8"));
}

#[test]
fn tableaux_lists_the_paper_pair() {
    let out = wreathlr(&["tableaux", "[4,3,1]", "[2,1]", "[3,2]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("2 tableaux"), "{text}");
    assert!(text.contains(". . 1 1 / . 2 2 / 1"), "{text}");
    assert!(text.contains(". . 1 1 / . 1 2 / 2"), "{text}");
}

#[test]
fn verify_passes_on_c2() {
    let out = wreathlr(&[
        "verify", "--group", "C2", "--mode", "lr", "--k", "1", "--r", "1",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("checks passed"), "{text}");
    assert!(!text.contains("FAIL"), "{text}");
}

#[test]
fn validation_errors_exit_with_one() {
    assert_eq!(wreathlr(&["lr", "[1,2]", "[1]"]).status.code(), Some(1));
    assert_eq!(wreathlr(&["lr", "nonsense", "[1]"]).status.code(), Some(1));
    assert_eq!(
        wreathlr(&["branch", "up", "[[1],[]]", "--dims", "2,1"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        wreathlr(&["verify", "--group", "Z9", "--mode", "lr", "--k", "1", "--r", "1"])
            .status
            .code(),
        Some(1)
    );
    // Budget exceeded is also an input problem, not a math mismatch.
    assert_eq!(
        wreathlr(&[
            "verify",
            "--group",
            "S3",
            "--mode",
            "orthonormality",
            "--n",
            "4",
            "--budget",
            "100",
        ])
        .status
        .code(),
        Some(1)
    );
}

#[test]
fn help_exits_cleanly_and_documents_the_grammar() {
    let out = wreathlr(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("Partition syntax"));
}
