use std::path::Path;
use std::process::{Command, Output};

fn curvkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvkit"))
        .args(args)
        .env_remove("CURVKIT_MAX_DIM")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

const ROUND_PLANE: &str = r#"{
  "gram": [["1", "0"], ["0", "1"]],
  "tensor": {"basis": "lex-bivector", "matrix": [["3"]]}
}
"#;

#[test]
fn verify_constant_curvature_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "c.json");
    let g = curvkit(&[
        "generate",
        "--kind",
        "constant",
        "--block",
        "constant:2,1:3/2",
        "-o",
        &file,
    ]);
    assert_eq!(code(&g), 0, "{}", String::from_utf8_lossy(&g.stderr));
    let v = curvkit(&["verify", &file]);
    assert_eq!(code(&v), 0);
    assert!(stdout(&v).contains("outcome: certified"));

    std::fs::write(dir.path().join("plane.json"), ROUND_PLANE).unwrap();
    let v = curvkit(&["--json", "verify", &path(dir.path(), "plane.json")]);
    assert_eq!(code(&v), 0);
    let r: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(r["outcome"], "certified");
    assert_eq!(r["semisymmetric"], true);
}

#[test]
fn verify_adversarial_exits_two_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let file = path(dir.path(), "a.json");
    let g = curvkit(&[
        "generate",
        "--kind",
        "adversarial",
        "--seed",
        "11",
        "--block",
        "constant:3,1:1",
        "--epsilon",
        "1/2",
        "--conjugate",
        "-o",
        &file,
    ]);
    assert_eq!(code(&g), 0, "{}", String::from_utf8_lossy(&g.stderr));
    let v = curvkit(&["--json", "verify", &file]);
    assert_eq!(code(&v), 2);
    let r: serde_json::Value = serde_json::from_str(&stdout(&v)).unwrap();
    assert_eq!(r["outcome"], "not_semisymmetric");
    let w = &r["semisymmetry_witness"];
    assert!(w.is_object());
    assert!(w["residual"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r.as_array().unwrap())
        .any(|x| x != "0"));

    let a = curvkit(&["analyze", &file]);
    assert_eq!(code(&a), 0);
    let j = curvkit(&["jacobi", &file]);
    assert_eq!(code(&j), 0);
    assert!(stdout(&j).contains("jacobi on h + V: fails"));
}

#[test]
fn suite_summary_is_byte_identical() {
    let a = curvkit(&["suite", "--seed", "7", "--count", "50"]);
    let b = curvkit(&["suite", "--seed", "7", "--count", "50"]);
    assert_eq!(code(&a), 0, "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("passed 50/50"));
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("d.json");
    std::fs::write(&file, ROUND_PLANE.replace("\"3\"", "\"0.5\"")).unwrap();
    let v = curvkit(&["verify", file.to_str().unwrap()]);
    assert_eq!(code(&v), 1);
    assert!(String::from_utf8_lossy(&v.stderr).contains("line 3"));

    let v = curvkit(&["verify", &path(dir.path(), "missing.json")]);
    assert_eq!(code(&v), 1);
    let v = curvkit(&["generate", "--kind", "constant", "--block", "constant:5,4:1"]);
    assert_eq!(code(&v), 1);
}

#[test]
fn max_dim_flag_overrides_environment() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("plane.json");
    std::fs::write(&file, ROUND_PLANE).unwrap();
    let f = file.to_str().unwrap();
    assert_eq!(code(&curvkit(&["--max-dim", "1", "verify", f])), 1);
    let run_env = |cap: &str, extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_curvkit"))
            .env("CURVKIT_MAX_DIM", cap)
            .args(extra)
            .args(["verify", f])
            .output()
            .unwrap()
    };
    assert_eq!(code(&run_env("1", &[])), 1);
    assert_eq!(code(&run_env("1", &["--max-dim", "2"])), 0);
}

#[test]
fn generate_from_spec_file_matches_flags() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("spec.json");
    std::fs::write(
        &spec,
        r#"{"seed": 5, "kind": "random_semisym", "blocks": [{"type": "isotropic", "positive": 2, "negative": 1}], "conjugate": true}"#,
    )
    .unwrap();
    let a = curvkit(&["generate", "--spec", spec.to_str().unwrap()]);
    let b = curvkit(&[
        "generate",
        "--kind",
        "random-semisym",
        "--seed",
        "5",
        "--block",
        "isotropic:2,1",
        "--conjugate",
    ]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
}
