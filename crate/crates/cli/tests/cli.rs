use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hrschur"))
        .args(args)
        .env_remove("HRSCHUR_SEED")
        .env_remove("HRSCHUR_WORKERS")
        .output()
        .expect("run hrschur")
}

fn json_of(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn config(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

const EXAMPLE_CONFIG: &str = r#"{
  "space": [2, 3],
  "bundles": {"E": {"lines": [[1, 0], [1, 0], [0, 1]]}},
  "partitions": {"col": [1, 1, 1]}
}"#;

#[test]
fn example_form_at_one_quarter() {
    let v = json_of(&run(&["form", "--two-factor-example", "--t", "1/4"]));
    assert_eq!(v["form"]["matrix"], json!([["1/4", "1/2"], ["1/2", "3/2"]]));
    assert_eq!(
        v["form"]["inertia"],
        json!({"n_plus": 2, "n_minus": 0, "n_zero": 0})
    );
    assert_eq!(v["form"]["hr"], json!(false));
    assert_eq!(v["form"]["weak_hr"], json!(false));
}

#[test]
fn schur_of_a_column_in_two_variables() {
    let v = json_of(&run(&["schur", "--lambda", "1,1", "--vars", "2"]));
    assert_eq!(v["polynomial"], json!("x1^2 + x1*x2 + x2^2"));

    let v = json_of(&run(&[
        "schur", "--lambda", "1,1", "--vars", "2", "--basis", "chern",
    ]));
    assert_eq!(v["polynomial"], json!("c1^2 - c2"));

    let v = json_of(&run(&[
        "schur",
        "--lambda",
        "1",
        "--vars",
        "2",
        "--derived",
        "1",
    ]));
    assert_eq!(v["polynomial"], json!("2"));
}

#[test]
fn config_bundles_and_partitions() {
    let cfg = config(EXAMPLE_CONFIG);
    let path = cfg.path().to_str().unwrap();
    let v = json_of(&run(&["--config", path, "chern", "--bundle", "E"]));
    assert_eq!(
        v["chern"],
        json!(["1", "2*t1 + t2", "t1^2 + 2*t1*t2", "t1^2*t2"])
    );
    assert_eq!(v["nef"], json!(true));

    let v = json_of(&run(&[
        "--config", path, "form", "--bundle", "E", "--lambda", "col",
    ]));
    assert_eq!(v["form"]["weak_hr"], json!(true));

    let inline = json_of(&run(&[
        "form",
        "--factors",
        "2,3",
        "--lines",
        "1,0;1,0;0,1",
        "--lambda",
        "1,1,1",
    ]));
    assert_eq!(inline["form"], v["form"]);
}

#[test]
fn sequences_render_as_csv() {
    let out = run(&["seq", "--lambda", "1", "--x", "1,1", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "i,value\n0,2/1\n1,2/1\n"
    );
}

#[test]
fn kt_sequence_from_config() {
    let cfg = config(EXAMPLE_CONFIG);
    let v = json_of(&run(&[
        "--config",
        cfg.path().to_str().unwrap(),
        "kt",
        "--e",
        "E",
        "--f",
        "E",
        "--lambda",
        "2,1",
        "--mu",
        "1,1",
    ]));
    assert_eq!(v["log_concave"], json!(true));
    assert!(!v["sequence"]["values"].as_array().unwrap().is_empty());
}

#[test]
fn polya_verdicts() {
    let v = json_of(&run(&["polya", "--mus", "1,3,3,1"]));
    assert_eq!(v["minors_nonneg"], json!(true));
    assert_eq!(v["real_rooted"], json!(true));

    let v = json_of(&run(&["polya", "--mus", "1,2,101/100"]));
    assert_eq!(v["minors_nonneg"], json!(false));
    assert_eq!(v["agree"], json!(true));
}

#[test]
fn lorentzian_and_bridges() {
    let v = json_of(&run(&["lorentzian", "--lambda", "2,1", "--vars", "3"]));
    assert_eq!(v["report"]["lorentzian"], json!(true));

    let v = json_of(&run(&[
        "bridge", "reversal", "--lambda", "2,1", "--vars", "2", "--alpha", "1,0",
    ]));
    assert_eq!(v["equal"], json!(true));

    let v = json_of(&run(&[
        "bridge", "hessian", "--lambda", "2,2", "--vars", "2", "--box", "3", "--alpha", "1,1",
    ]));
    assert_eq!(v["equal"], json!(true));
}

#[test]
fn usage_and_config_errors_exit_one() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(
        run(&["schur", "--lambda", "2,x", "--vars", "2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["form", "--two-factor-example", "--format", "csv"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["verify", "--criteria", "13"]).status.code(), Some(1));

    let cfg = config("{\n  \"space\": [2, 3],\n  \"bundels\": {}\n}");
    let out = run(&[
        "--config",
        cfg.path().to_str().unwrap(),
        "chern",
        "--bundle",
        "E",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let msg = String::from_utf8_lossy(&out.stderr);
    assert!(msg.contains("bundels") && msg.contains("line 3"), "{msg}");

    let cfg = config(r#"{"space": [2, 3], "bundles": {"E": {"lines": [[1, 0, 2]]}}}"#);
    let out = run(&[
        "--config",
        cfg.path().to_str().unwrap(),
        "chern",
        "--bundle",
        "E",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bundles.E"));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn violations_exit_two() {
    let out = run(&["polya", "--mus", "1,2,101/100", "--order", "30"]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["agree"], json!(false));
}

#[test]
fn verify_is_reproducible_and_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, workers) in [(&a, "1"), (&b, "3")] {
        let out = Command::new(env!("CARGO_BIN_EXE_hrschur"))
            .args([
                "verify",
                "--examples",
                "--output",
                path.to_str().unwrap(),
            ])
            .env("HRSCHUR_SEED", "7")
            .env("HRSCHUR_WORKERS", workers)
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        assert!(out.stdout.is_empty());
    }
    let first = std::fs::read(&a).unwrap();
    assert_eq!(first, std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&first).unwrap();
    assert_eq!(v["seed"], json!(7));
    assert_eq!(v["passed"], json!(true));

    let csv = run(&["verify", "--examples", "--format", "csv"]);
    assert_eq!(csv.status.code(), Some(0));
    assert!(
        String::from_utf8_lossy(&csv.stdout).starts_with("criterion,instance,lhs,rhs,ok,seed\n")
    );
}
