use std::path::PathBuf;
use std::process::{Command, Output};

fn spec(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradedring"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn cor_2_7_table_exits_zero() {
    let o = run(&["verify", "COR_2_7", "--range", "2..64"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("COR_2_7 on Cyclic(n), n = 2..64: PASS"), "{out}");
    assert!(out.contains("n =   64: strongly ideal exists, prime power"));
    assert!(out.contains("n =   63: no strongly ideal, not a prime power"));
}

#[test]
fn classify_cyclic9_three_is_strongly() {
    let o = run(&["ideal", "classify", spec("cyclic9.toml").to_str().unwrap(), "--ideal", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("graded_strongly_1abs_primary   true"));
}

#[test]
fn classify_cyclic6_three_separates() {
    let o = run(&["ideal", "classify", spec("cyclic6.toml").to_str().unwrap(), "--ideal", "three"]);
    let out = stdout(&o);
    assert!(out.contains("graded_prime                   true"));
    assert!(out.contains("graded_strongly_1abs_primary   false  witness (2, 2, 3)"));
}

#[test]
fn classify_json() {
    let o = run(&[
        "ideal",
        "classify",
        spec("cyclic6.toml").to_str().unwrap(),
        "--ideal",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["flags"]["graded_prime"], true);
    assert_eq!(v["witnesses"]["graded_strongly_1abs_primary"], "(2, 2, 3)");
}

#[test]
fn shipped_specs_describe() {
    for (file, needle) in [
        ("cyclic9.toml", "homogeneous elements nilpotent or unit  true"),
        ("gauss4-z2.toml", "Grad(0)          {0, 2, 2*i, 2+2*i}"),
        ("graded-field-f3.toml", "graded field     true"),
        ("cyclic6.toml", "graded local     false"),
    ] {
        let o = run(&["ring", "describe", spec(file).to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{file}");
        assert!(stdout(&o).contains(needle), "{file}: {}", stdout(&o));
    }
    let o = run(&["ring", "describe", spec("graded-field-f3.toml").to_str().unwrap()]);
    assert!(stdout(&o).contains("field            false"));
}

#[test]
fn verify_all_json_has_no_fail() {
    let o = run(&["verify", "all", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let summary = v["summary"].as_array().unwrap();
    assert_eq!(summary.len(), 23);
    assert!(summary.iter().all(|s| s["outcome"] == "PASS" || s["outcome"] == "VACUOUS"));
}

#[test]
fn output_is_deterministic() {
    let a = run(&["verify", "all"]);
    let b = run(&["verify", "all"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn search_finds_both_separations() {
    let o = run(&["search", "--hypothesis", "prime", "--conclusion", "strongly"]);
    assert!(stdout(&o).contains("Cyclic(6): ideal <3> is graded_prime but not graded_strongly_1abs_primary, witness (2, 2, 3)"));
    let o = run(&["search", "--hypothesis", "2abs", "--conclusion", "1abs"]);
    assert!(stdout(&o).contains("Cyclic(36): ideal <12> is graded_2abs_primary but not graded_1abs_primary, witness (2, 2, 3)"));
    let o = run(&["search", "--hypothesis", "strongly", "--conclusion", "1abs"]);
    assert!(stdout(&o).starts_with("0 separation(s)"));
}

#[test]
fn corpus_file_is_used() {
    let dir = std::env::temp_dir().join(format!("gradedring-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.toml");
    std::fs::write(&path, "[[ring]]\nring = { cyclic = 8 }\n").unwrap();
    let o = run(&["verify", "THM_2_6", "--corpus", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("THM_2_6 on Cyclic(8): PASS"), "{}", stdout(&o));
}

#[test]
fn usage_and_spec_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("gradedring-cli-err-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "ring = { cyclic = 4 }\ngroup = \"Z2\"\n[components]\n\"0\" = [\"1\"]\n\"1\" = [\"2\"]\n").unwrap();
    for args in [
        vec!["verify", "NOPE"],
        vec!["verify", "COR_2_7", "--range", "9..3"],
        vec!["search", "--hypothesis", "prime", "--conclusion", "happy"],
        vec!["ring", "describe", "/nonexistent.toml"],
        vec!["ring", "describe", bad.to_str().unwrap()],
        vec!["ideal", "classify", spec("cyclic6.toml").to_str().unwrap(), "--ideal", "1"],
        vec!["frobnicate"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
