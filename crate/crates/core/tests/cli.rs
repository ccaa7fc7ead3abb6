//! End-to-end tests of the command-line interface: subcommands, exit
//! codes, JSON output, group file formats, and the enumeration-bound
//! environment variable.

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_admissible"))
}

fn write(dir: &Path, name: &str, content: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_group_human_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let a4 = write(
        dir.path(),
        "a4.json",
        r#"{"degree": 4, "generators": ["(0 1 2)", "(1 2 3)"]}"#,
    );
    let out = bin()
        .args(["check-group", "--input"])
        .arg(&a4)
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order 12 = 2^2 * 3"), "{text}");
    assert!(text.contains("verdict: true"), "{text}");

    let out = bin()
        .args(["check-group", "--json", "--input"])
        .arg(&a4)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], serde_json::Value::Bool(true));
    assert_eq!(v["order"], 12);
    assert_eq!(v["primes"][0]["q"], 2);

    // Metacyclic mode on Q8 passes while rank2 fails.
    let q8 = write(
        dir.path(),
        "q8.json",
        r#"{"degree": 8, "generators": ["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]}"#,
    );
    let out = bin()
        .args(["check-group", "--mode", "metacyclic", "--input"])
        .arg(&q8)
        .output()
        .unwrap();
    assert!(stdout(&out).contains("verdict: true"));
    let out = bin()
        .args(["check-group", "--input"])
        .arg(&q8)
        .output()
        .unwrap();
    assert!(stdout(&out).contains("verdict: false"));

    // Excluding the offending prime flips the verdict.
    let out = bin()
        .args(["check-group", "--exclude-prime", "2", "--input"])
        .arg(&q8)
        .output()
        .unwrap();
    assert!(stdout(&out).contains("verdict: true"));
}

#[test]
fn text_format_group_input() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = write(
        dir.path(),
        "s3.txt",
        "# S3\ndegree 3\ngen (0 1)\ngen (0 1 2)\n",
    );
    let out = bin()
        .args(["check-group", "--input"])
        .arg(&s3)
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(stdout(&out).contains("order 6"));
}

#[test]
fn witness_and_verify_roundtrip_with_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(
        dir.path(),
        "c6.json",
        r#"{"degree": 6, "generators": ["(0 1 2 3 4 5)"]}"#,
    );
    let cert = dir.path().join("c6-cert.json");
    let out = bin()
        .args(["witness", "--input"])
        .arg(&c6)
        .arg("--out")
        .arg(&cert)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(cert.exists());

    let out = bin()
        .args(["verify", "--cert"])
        .arg(&cert)
        .arg("--input")
        .arg(&c6)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("overall: pass"));

    // Tamper with the stored gcd: verification must fail with exit 3.
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = text.replace("\"sylow_index_gcd\": 1", "\"sylow_index_gcd\": 2");
    assert_ne!(text, tampered);
    let bad = write(dir.path(), "tampered.json", &tampered);
    let out = bin()
        .args(["verify", "--cert"])
        .arg(&bad)
        .arg("--input")
        .arg(&c6)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("overall: fail"));

    // JSON verification output.
    let out = bin()
        .args(["verify", "--json", "--cert"])
        .arg(&cert)
        .arg("--input")
        .arg(&c6)
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["pass"], serde_json::Value::Bool(true));
}

#[test]
fn witness_refuses_inadmissible_groups_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let q8 = write(
        dir.path(),
        "q8.json",
        r#"{"degree": 8, "generators": ["(0 1 2 3)(4 5 6 7)", "(0 4 2 6)(1 7 3 5)"]}"#,
    );
    let cert = dir.path().join("never.json");
    let out = bin()
        .args(["witness", "--input"])
        .arg(&q8)
        .arg("--out")
        .arg(&cert)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!cert.exists());
}

#[test]
fn symbol_subcommand() {
    let out = bin()
        .args([
            "symbol",
            "--n",
            "6",
            "--a",
            "f/(f - t)",
            "--b",
            "(f - t^2)/(f - t - t^2)",
        ])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("v(a) = (1, -1)"), "{text}");
    assert!(text.contains("v(b) = (0, 1)"), "{text}");
    assert!(text.contains("division algebra (value-group criterion): true"));
    assert!(text.contains("at f: residue = (1 + x)/x, order 6"));

    // JSON with a chosen prime.
    let out = bin()
        .args([
            "symbol", "--json", "--n", "4", "--a", "f", "--b", "t", "--prime", "f",
        ])
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["division"], serde_json::Value::Bool(true));
    assert_eq!(v["ramification"][0]["residue"], "1/x");
    assert_eq!(v["ramification"][0]["order"], 4);
}

#[test]
fn descriptor_subcommand() {
    let out = bin()
        .args(["descriptor", "--e", "3", "--m", "2", "--i", "2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("order 6"));
    assert!(text.contains("abelian: false"));

    // Invalid descriptor: nonzero exit with an error message.
    let out = bin()
        .args(["descriptor", "--e", "4", "--m", "2", "--i", "2"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid metacyclic descriptor"));
}

#[test]
fn enumeration_bound_env_var() {
    let dir = tempfile::tempdir().unwrap();
    let c6 = write(
        dir.path(),
        "c6.json",
        r#"{"degree": 6, "generators": ["(0 1 2 3 4 5)"]}"#,
    );
    let out = bin()
        .args(["check-group", "--input"])
        .arg(&c6)
        .env("ADMISSIBLE_MAX_GROUP_ORDER", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("group too large"));
}
