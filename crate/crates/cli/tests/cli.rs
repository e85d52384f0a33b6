use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pointfree"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write_chain3(dir: &Path) -> std::path::PathBuf {
    // 0 < m < 1
    let path = dir.join("chain3.json");
    std::fs::write(
        &path,
        r#"{"elements": ["0", "m", "1"], "leq": [[0,1],[0,2],[1,2]]}"#,
    )
    .unwrap();
    path
}

#[test]
fn classify_chain() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_chain3(dir.path());
    let out = run(&["classify", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("extremally_disconnected: true"));
    assert!(text.contains("boolean: false"));
    assert!(text.contains("regular: false (witness: m)"));
}

#[test]
fn classify_structured() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_chain3(dir.path());
    let out = run(&["classify", path.to_str().unwrap(), "--format", "structured"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json
        .as_array()
        .unwrap()
        .iter()
        .any(|r| r["predicate"] == "p_frame" && r["holds"] == true));
}

#[test]
fn booleanize_chain_collapses_middle() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_chain3(dir.path());
    let out = run(&["booleanize", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["elements"].as_array().unwrap().len(), 2);
}

#[test]
fn spectrum_chain_is_sierpinski_like() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_chain3(dir.path());
    let out = run(&["spectrum", path.to_str().unwrap()]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["points"].as_array().unwrap().len(), 2);
    assert_eq!(json["opens"].as_array().unwrap().len(), 3);
}

#[test]
fn generate_is_deterministic_and_ingestable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = run(&[
            "generate",
            "--seed",
            "7",
            "--size",
            "3",
            "--out",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let text_a = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text_a, std::fs::read_to_string(&b).unwrap());
    // the generated frame feeds straight back into classify
    let out = run(&["classify", a.to_str().unwrap()]);
    assert!(out.status.success());
}

#[test]
fn verify_core_passes_and_is_deterministic() {
    let args = [
        "verify",
        "--suites",
        "core",
        "--samples",
        "10",
        "--max-size",
        "6",
    ];
    let first = run(&args);
    assert!(first.status.success(), "{}", stdout(&first));
    let text = stdout(&first);
    assert!(text.contains("PASS core/booleanize"));
    assert!(text.contains("overall: PASS"));
    assert_eq!(text, stdout(&run(&args)));
}

#[test]
fn verify_structured_report() {
    let out = run(&[
        "verify",
        "--suites",
        "rieszfd",
        "--samples",
        "5",
        "--format",
        "structured",
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["passed"], true);
    assert!(json["records"].as_array().unwrap().iter().all(|r| r["failures"] == 0));
}

#[test]
fn verify_custom_grid_and_seed() {
    let out = run(&[
        "verify",
        "--suites",
        "realfn",
        "--samples",
        "5",
        "--seed",
        "42",
        "--grid",
        "-1,0,1/2,1",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "not json").unwrap();
    assert_eq!(run(&["classify", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(
        run(&["classify", dir.path().join("missing.json").to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "--suites", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--grid", "1,zz"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--grid", "1,0"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--size", "9"]).status.code(), Some(2));
}
