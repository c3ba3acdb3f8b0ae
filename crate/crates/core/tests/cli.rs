//! End-to-end runs of the `netcomm` binary, including schema validation.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn netcomm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_netcomm"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .unwrap()
}

fn stdout_of(args: &[&str]) -> String {
    let out = netcomm(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("netcomm-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn validate(schema_file: &str, doc: &Value) {
    let path = format!("{}/schema/{schema_file}", env!("CARGO_MANIFEST_DIR"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(doc)
        .map(|e| format!("{e} at {}", e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{schema_file}: {errors:#?}");
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).unwrap()
}

#[test]
fn karate_centrality_csv() {
    let csv = stdout_of(&["centrality", "--input", "data/karate.mtx"]);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("node_id,score,rank"));
    assert!(lines.next().unwrap().starts_with("34,"));
    assert!(lines.next().unwrap().starts_with("1,"));
    assert_eq!(csv.lines().count(), 35);
}

#[test]
fn csv_output_is_byte_identical_across_runs() {
    for args in [
        &[
            "centrality",
            "--generate",
            "pref:n=800,d=2",
            "--seeds",
            "11",
            "--method",
            "exp-subgraph",
        ][..],
        &[
            "compare",
            "--generate",
            "smallw:n=600,d=2,p=0.2",
            "--reps",
            "4",
        ][..],
        &[
            "report",
            "--generate",
            "pref:n=500,d=3",
            "--reps",
            "3",
            "--format",
            "csv",
        ][..],
    ] {
        assert_eq!(stdout_of(args), stdout_of(args), "{args:?}");
    }
}

#[test]
fn generate_writes_dump_and_sidecar() {
    let out = scratch("ring6.txt");
    stdout_of(&[
        "generate",
        "--generate",
        "ring:n=6",
        "--out",
        out.to_str().unwrap(),
    ]);
    let dump = std::fs::read_to_string(&out).unwrap();
    assert_eq!(dump, "0 1\n0 5\n1 2\n2 3\n3 4\n4 5\n");
    let sidecar: Value =
        serde_json::from_str(&std::fs::read_to_string(out.with_extension("txt.json")).unwrap())
            .unwrap();
    validate("generate.schema.json", &sidecar);
    assert_eq!(sidecar["m"], 6);

    let a = scratch("pref_a.txt");
    let b = scratch("pref_b.txt");
    for p in [&a, &b] {
        stdout_of(&[
            "generate",
            "--generate",
            "pref:n=1000,d=2",
            "--seed",
            "5",
            "--out",
            p.to_str().unwrap(),
        ]);
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let side: Value =
        serde_json::from_str(&std::fs::read_to_string(a.with_extension("txt.json")).unwrap())
            .unwrap();
    validate("generate.schema.json", &side);
    assert_eq!(side["seed"], 5);

    // The dump loads back as an edge list.
    let csv = stdout_of(&[
        "centrality",
        "--input",
        a.to_str().unwrap(),
        "--nodes",
        "1000",
    ]);
    assert_eq!(csv.lines().count(), 1001);
}

#[test]
fn json_outputs_match_schemas() {
    let c = json_of(&[
        "centrality",
        "--input",
        "data/karate.mtx",
        "--format",
        "json",
    ]);
    validate("centrality.schema.json", &c);
    assert_eq!(c["nodes"][0]["node_id"], 34);
    let c = json_of(&[
        "centrality",
        "--input",
        "data/karate.mtx",
        "--method",
        "res-subgraph",
        "--format",
        "json",
    ]);
    validate("centrality.schema.json", &c);
    let r = c["report"]["c_over_n"].as_f64().unwrap();
    assert!((r - 5.13).abs() < 0.01, "{r}");

    let cmp = json_of(&[
        "compare",
        "--generate",
        "pref:n=300,d=2",
        "--reps",
        "3",
        "--top-k",
        "2",
        "--curve",
        "--format",
        "json",
    ]);
    validate("compare.schema.json", &cmp);
    assert_eq!(cmp["instances"].as_array().unwrap().len(), 3);

    let rep = json_of(&[
        "report",
        "--generate",
        "smallw:n=400,d=1,p=0.1",
        "--seeds",
        "1,2",
    ]);
    validate("report.schema.json", &rep);
    let rep = json_of(&[
        "report",
        "--input",
        "data/karate.mtx",
        "--function",
        "resolvent",
    ]);
    validate("report.schema.json", &rep);

    let bench = json_of(&["bench", "--generate", "ring:n=5000", "--repetitions", "3"]);
    validate("bench.schema.json", &bench);
    let reps = bench["repetitions"].as_array().unwrap();
    assert_eq!(reps.len(), 3);
    for rep in reps {
        assert!(rep["total"].as_f64().unwrap() > 0.0);
        assert!(rep["kernel"].as_f64().unwrap() < 60.0);
    }
}

#[test]
fn identical_methods_compare_perfectly() {
    let cmp = json_of(&[
        "compare",
        "--input",
        "data/karate.mtx",
        "--method-a",
        "exp-total",
        "--method-b",
        "exp-total",
        "--format",
        "json",
    ]);
    assert_eq!(cmp["summary"]["cc_full"]["mean"], 1.0);
    assert_eq!(cmp["summary"]["isim_full"]["mean"], 0.0);
}

#[test]
fn undefined_top_correlation_prints_dashes() {
    let csv = stdout_of(&[
        "compare",
        "--input",
        "data/karate.mtx",
        "--ties",
        "higher-id",
    ]);
    let row: Vec<&str> = csv.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[4], "--");
    assert_eq!(row[5], "1.11111e-01");
}

#[test]
fn exit_codes_and_messages() {
    let out = netcomm(&["centrality", "--input", "does/not/exist.mtx"]);
    assert_eq!(out.status.code(), Some(1));
    let out = netcomm(&["centrality", "--generate", "pref:n=10"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing d"));
    let out = netcomm(&[
        "centrality",
        "--input",
        "data/karate.mtx",
        "--method",
        "res-total",
        "--alpha",
        "0.2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("0 < alpha < 1/lambda_1"));
    let out = netcomm(&[
        "centrality",
        "--generate",
        "pref:n=500,d=4",
        "--restart",
        "2",
        "--max-restarts",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = netcomm(&["report", "--generate", "ring:n=10", "--reps", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let out = netcomm(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn schemas_reject_malformed_documents() {
    let path = format!("{}/schema/bench.schema.json", env!("CARGO_MANIFEST_DIR"));
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut doc = json_of(&["bench", "--generate", "path:n=50", "--repetitions", "1"]);
    assert!(validator.is_valid(&doc));
    doc["repetitions"][0]["kernel"] = Value::from(-1.0);
    assert!(!validator.is_valid(&doc));
    doc["unexpected"] = Value::from(1);
    assert!(!validator.is_valid(&doc));
}
