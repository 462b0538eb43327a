//! End-to-end tests of the `ga` binary.

use std::path::Path;
use std::process::{Command, Output};

fn ga(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ga"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn ga_with_env(args: &[&str], key: &str, value: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ga"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn classify_reports_the_matrix_form() {
    let out = ga(&["classify", "4", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("M(4,C)"), "{text}");
    assert!(text.contains("d = 2"), "{text}");
    assert!(text.contains("root classes:     5"), "{text}");

    let out = ga(&["classify", "0", "3"]);
    let text = stdout(&out);
    assert!(text.contains("M(1,H^2)"), "{text}");
    assert!(text.contains("group components: 1"), "{text}");
    assert!(text.contains("root classes:     1"), "{text}");

    let out = ga(&["classify", "2", "1"]);
    let text = stdout(&out);
    assert!(text.contains("M(2,R^2)"), "{text}");
    assert!(text.contains("group components: 4"), "{text}");
}

#[test]
fn classify_rejects_small_algebras_with_exit_2() {
    let out = ga(&["classify", "1", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("dimension"), "{err}");
}

#[test]
fn classify_json_has_the_documented_keys() {
    let out = ga(&["classify", "4", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["p"], 4);
    assert_eq!(value["q"], 1);
    assert_eq!(value["ring"], "C");
    assert_eq!(value["matrix_form"], "M(4,C)");
    assert_eq!(value["class_count"], 5);
    assert_eq!(value["dim"], 32);
}

#[test]
fn roots_table_matches_the_smallest_complex_case() {
    let out = ga(&["roots", "3", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("3 conjugacy classes"), "{text}");
    let lines: Vec<&str> = text.lines().collect();
    assert!(
        lines
            .iter()
            .any(|l| l.starts_with("1 ") && l.ends_with("e123")),
        "{text}"
    );
    assert!(
        lines
            .iter()
            .any(|l| l.starts_with("0 ") && l.ends_with("e23")),
        "{text}"
    );
    assert!(
        lines
            .iter()
            .any(|l| l.starts_with("-1 ") && l.ends_with("-e123")),
        "{text}"
    );
}

#[test]
fn roots_handles_the_exceptional_classes_of_cl41() {
    let out = ga(&["roots", "4", "1", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = value.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert_eq!(rows[0]["k"], 2);
    assert_eq!(rows[0]["representative"], "e12345");
    assert_eq!(rows[0]["spec"], "1");
    assert_eq!(rows[1]["k"], 1);
    assert_eq!(rows[1]["spec"], "1/2");
    assert_eq!(rows[1]["char_poly"]["n1"], 3);
    assert_eq!(rows[1]["char_poly"]["n2"], 1);
    assert_eq!(rows[4]["k"], -2);
    assert_eq!(rows[4]["representative"], "-e12345");
}

#[test]
fn roots_single_class_outside_ring_c() {
    let out = ga(&["roots", "0", "3", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = value.as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["k"], 0);
    assert_eq!(rows[0]["ordinary"], true);
}

#[test]
fn verify_all_shipped_tables_passes() {
    let out = ga(&["verify", "--all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("verify: PASS (8 tables"), "{text}");
}

#[test]
fn verify_single_table() {
    let out = ga(&["verify", "4", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(
        stdout(&out).contains("verify: PASS (1 tables"),
        "{}",
        stdout(&out)
    );
}

#[test]
fn verify_locates_a_tampered_coefficient() {
    // flip one coefficient of the k = 1 row of the Cl(4,1) table
    let dir = tempfile::tempdir().unwrap();
    let good = include_str!("../../../golden/cl_4_1.txt");
    let bad = good.replace(
        "1 | 1/2*e23 + 1/2*e123 - 1/2*e2345 + 1/2*e12345 | 3 1",
        "1 | 1/2*e23 + 1/2*e123 - 1/3*e2345 + 1/2*e12345 | 3 1",
    );
    assert_ne!(good, bad, "tamper target must exist");
    let path = dir.path().join("tampered.txt");
    std::fs::write(&path, bad).unwrap();

    let out = ga(&["verify", "--golden", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("FAIL"), "{text}");
    assert!(text.contains("k =  1"), "{text}");
    assert!(text.contains("line  6"), "{text}");
    assert!(text.contains("verify: FAIL"), "{text}");
}

#[test]
fn verify_honors_the_golden_dir_override() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("cl_3_0.txt"),
        "signature 3 0\n1 | e123 | 2 0\n0 | e23 | 1 1\n-1 | -e123 | 0 2\n",
    )
    .unwrap();
    let out = ga_with_env(&["verify", "3", "0"], "GA_GOLDEN_DIR", dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    // the override directory has no Cl(4,1) file
    let out = ga_with_env(&["verify", "4", "1"], "GA_GOLDEN_DIR", dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn represent_prints_the_worksheet_matrices() {
    let out = ga(&["represent", "3", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("k-generator (complex unit): e23"), "{text}");
    assert!(
        text.contains("ideal basis: 1/2 + 1/2*e1, 1/2*e2 - 1/2*e12"),
        "{text}"
    );
    assert!(text.contains("[1   0]\n[0  -1]"), "{text}");
    assert!(text.contains("[0  1]\n[1  0]"), "{text}");
    assert!(text.contains("[0  -i]\n[i   0]"), "{text}");
}

#[test]
fn represent_rejects_non_complex_rings() {
    let out = ga(&["represent", "2", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("ring"), "{err}");
}

#[test]
fn centralizer_of_the_ordinary_cl30_root() {
    let out = ga(&["centralizer", "3", "0", "e23"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("dimension 4"), "{text}");
    let listed: Vec<&str> = text
        .lines()
        .skip(1)
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    assert_eq!(listed, vec!["1", "e1", "e23", "e123"]);
}

#[test]
fn centralizer_rejects_bad_expressions() {
    let out = ga(&["centralizer", "3, 0".split(',').next().unwrap(), "0", "e9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn conjugate_finds_and_refuses_correctly() {
    let out = ga(&["conjugate", "0", "2", "e2", "e1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("v = "), "{text}");
    assert!(text.contains("verified"), "{text}");

    let out = ga(&["conjugate", "3", "0", "e123", "-e123"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("not conjugate"));
}

#[test]
fn manifold_csv_contains_the_origin_rows() {
    let out = ga(&["manifold", "2", "0", "--grid", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "b1,b2,beta");
    assert!(lines.contains(&"0,0,1"), "{text}");
    assert!(lines.contains(&"0,0,-1"), "{text}");
    // Euclidean signature: every grid point contributes both branches
    assert_eq!(lines.len(), 1 + 2 * 25);

    // quaternion case: only the unit disk
    let out = ga(&["manifold", "0", "2", "--grid", "5"]);
    let text = stdout(&out);
    assert!(text.lines().count() < 1 + 2 * 25);
    assert!(text.lines().any(|l| l == "1,0,0"), "{text}");

    let out = ga(&["manifold", "3", "0", "--grid", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn split_maps_omega_to_minus_omega() {
    let out = ga(&["split", "2", "1", "e123"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("swap(A)         = -e123"), "{text}");
    assert!(text.contains("eps_plus        = 1/2 + 1/2*e123"), "{text}");

    let out = ga(&["split", "3", "0", "e123"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["roots", "4", "1"],
        vec!["roots", "7", "0", "--format", "json"],
        vec!["manifold", "1", "1", "--grid", "7"],
        vec!["conjugate", "4", "1", "e123", "e23", "--seed", "5"],
        vec!["verify", "3", "0", "--format", "csv"],
    ] {
        let first = ga(&args);
        let second = ga(&args);
        assert!(first.status.success(), "{args:?}");
        assert_eq!(first.stdout, second.stdout, "{args:?} not byte-identical");
    }
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = ga(&[
        "roots",
        "3",
        "0",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("p,q,k,spec,scal"), "{written}");
    assert!(
        written.contains("3,0,1,1,0,0,8,(t-i)^2,t-i,e123"),
        "{written}"
    );
}

#[test]
fn max_n_flag_gates_large_signatures() {
    let out = ga(&["classify", "7", "0", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ga(&["classify", "7", "0", "--max-n", "7"]);
    assert!(out.status.success());
}
