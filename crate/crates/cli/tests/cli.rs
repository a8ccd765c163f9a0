use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn ringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(args)
        .env_remove("RINGLAB_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json output")
}

#[test]
fn analyze_z3() {
    let out = ringlab(&["analyze", "--ring", "zmod:3", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v = json(&out);
    assert_eq!(v["order"], 3);
    assert_eq!(v["predicates"]["uniquely_clean"], false);
    assert_eq!(v["predicates"]["uniquely_pi_clean"], true);
    assert_eq!(
        v["predicates"]["witnesses"]["uniquely_clean"],
        serde_json::json!([2])
    );
    assert_eq!(v["radicals"]["jacobson"], serde_json::json!([0]));
}

#[test]
fn analyze_text_shows_structured_witnesses() {
    let out = ringlab(&["analyze", "--ring", "matrix:zmod2:2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("uniquely_pi_clean          false"));
    assert!(
        text.contains("[[1,0],[0,0]]") || text.contains("[[0,0],[0,1]]"),
        "{text}"
    );
}

#[test]
fn analyze_gf4_example() {
    let out = ringlab(&["analyze", "--ring", "paper:gf4-example", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 64);
    assert_eq!(v["predicates"]["commutative"], false);
    assert_eq!(v["predicates"]["generalized_7_like"], true);
    assert_eq!(v["predicates"]["uniquely_pi_clean"], true);
}

#[test]
fn analyze_csv_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z4.csv");
    let out = ringlab(&[
        "analyze",
        "--ring",
        "zmod:4",
        "--format",
        "csv",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
    let csv = fs::read_to_string(&path).unwrap();
    let mut lines = csv.lines();
    assert!(lines
        .next()
        .unwrap()
        .starts_with("ring,clean,uniquely_clean,"));
    assert!(lines.next().unwrap().starts_with("zmod:4,true,true,true"));
}

fn write_corrupted_z6(dir: &Path) -> std::path::PathBuf {
    let out = ringlab(&["catalog", "dump", "--dir", dir.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let z6 = fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .find(|p| {
            p.file_name()
                .unwrap()
                .to_str()
                .unwrap()
                .ends_with("_zmod_6.json")
        })
        .expect("zmod:6 dumped");
    let mut v: Value = serde_json::from_str(&fs::read_to_string(&z6).unwrap()).unwrap();
    assert_eq!(v["mul"][2][3], 0);
    v["mul"][2][3] = 1.into();
    let bad = dir.join("bad.json");
    fs::write(&bad, v.to_string()).unwrap();
    bad
}

#[test]
fn corrupted_file_exits_2_and_names_the_axiom() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_corrupted_z6(dir.path());
    let src = format!("file:{}", bad.display());
    let out = ringlab(&["analyze", "--ring", &src]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert!(
        err.contains("associative") || err.contains("distributive"),
        "{err}"
    );
}

#[test]
fn syntax_errors_exit_2_and_missing_files_exit_5() {
    let out = ringlab(&["analyze", "--ring", "zmod:"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ringlab(&["analyze", "--ring", "file:/definitely/not/here.json"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn cap_exceeded_exits_3() {
    let out = ringlab(&["analyze", "--ring", "zmod:300"]);
    assert_eq!(out.status.code(), Some(3));
    let out = ringlab(&["analyze", "--ring", "matrix:zmod:3:2", "--order-cap", "50"]);
    assert_eq!(out.status.code(), Some(3));
    let out = Command::new(env!("CARGO_BIN_EXE_ringlab"))
        .args(["analyze", "--ring", "zmod:5"])
        .env("RINGLAB_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_t28_t210() {
    let out = ringlab(&["verify", "--theorems", "T2.8,T2.10", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let v = json(&out);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts.len(), 2);
    for verdict in verdicts {
        assert_eq!(verdict["overall"], true);
        assert!(verdict["rows"].as_array().unwrap().len() >= 40);
    }
}

#[test]
fn verify_extension_harness() {
    let out = ringlab(&["verify", "--theorems", "T4.1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let rows = v["verdicts"][0]["rows"].as_array().unwrap();
    assert!(rows.iter().any(|r| r["lhs"] == false && r["rhs"] == false));
    assert!(rows.iter().any(|r| r["lhs"] == true && r["rhs"] == true));
}

#[test]
fn verify_t33_prints_naming_note() {
    let out = ringlab(&["verify", "--theorems", "T3.3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("strongly π-clean"));
}

#[test]
fn verify_disagreement_exits_4_with_witness() {
    let out = ringlab(&["verify", "--theorems", "T4.7-3", "--jobs", "1"]);
    assert_eq!(out.status.code(), Some(4));
    let text = stdout(&out);
    assert!(
        text.contains("matrix:zmod:2:2: lhs=false rhs=true witness=[2 [["),
        "{text}"
    );
}

#[test]
fn verify_output_does_not_depend_on_jobs() {
    let one = ringlab(&[
        "verify",
        "--theorems",
        "T2.2,C2.12,L3.1",
        "--jobs",
        "1",
        "--format",
        "json",
    ]);
    let two = ringlab(&[
        "verify",
        "--theorems",
        "T2.2,C2.12,L3.1",
        "--jobs",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, two.stdout);
}

#[test]
fn verify_csv_rows() {
    let out = ringlab(&["verify", "--theorems", "COLLAPSE", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let csv = stdout(&out);
    assert!(csv.starts_with("theorem,ring,lhs,rhs,agree\n"));
    assert!(csv.contains("COLLAPSE,zmod:3,true,true,true"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = ringlab(&["verify", "--theorems", "T9.9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_list_has_forty_entries() {
    let out = ringlab(&["catalog", "list", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!(v.as_array().unwrap().len() >= 40);
}

#[test]
fn catalog_filter() {
    let out = ringlab(&[
        "catalog",
        "list",
        "--filter",
        "uniquely_pi_clean",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let labels: Vec<String> = json(&out)
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["label"].as_str().unwrap().to_string())
        .collect();
    for want in ["zmod:3", "zn-alpha:3", "paper:gf4-example"] {
        assert!(labels.iter().any(|l| l == want), "{want} missing");
    }
    assert!(!labels.iter().any(|l| l == "matrix:zmod:2:2"));

    let out = ringlab(&[
        "catalog", "list", "--filter", "!abelian", "--format", "json",
    ]);
    let labels = json(&out);
    assert!(labels
        .as_array()
        .unwrap()
        .iter()
        .any(|e| e["label"] == "matrix:zmod:2:2"));

    let out = ringlab(&["catalog", "list", "--filter", "shiny"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn catalog_dump_round_trips_byte_identically() {
    let dir = tempfile::tempdir().unwrap();
    let out = ringlab(&["catalog", "dump", "--dir", dir.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let manifest: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("manifest.json")).unwrap())
            .unwrap();
    let entries = manifest.as_array().unwrap();
    assert!(entries.len() >= 40);
    for e in entries {
        let path = dir.path().join(e["file"].as_str().unwrap());
        let bytes = fs::read_to_string(&path).unwrap();
        let tables = ringlab_core::RingTables::from_json(&bytes).unwrap();
        let ring = ringlab_core::validate_ring(&tables).unwrap();
        assert_eq!(ring.to_tables().to_json(), bytes, "{}", path.display());
        assert_eq!(ring.label(), e["label"].as_str().unwrap());
    }

    let again = tempfile::tempdir().unwrap();
    ringlab(&["catalog", "dump", "--dir", again.path().to_str().unwrap()]);
    for e in entries {
        let f = e["file"].as_str().unwrap();
        assert_eq!(
            fs::read(dir.path().join(f)).unwrap(),
            fs::read(again.path().join(f)).unwrap()
        );
    }
}

#[test]
fn dumped_file_loads_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    ringlab(&["catalog", "dump", "--dir", dir.path().to_str().unwrap()]);
    let src = format!("file:{}", dir.path().join("002_zmod_3.json").display());
    let out = ringlab(&["analyze", "--ring", &src, "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["label"], "zmod:3");
}

#[test]
fn dump_into_a_file_path_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("taken");
    fs::write(&blocker, "x").unwrap();
    let out = ringlab(&["catalog", "dump", "--dir", blocker.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn truncations_report() {
    let out = ringlab(&["truncations", "--max-p", "13", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert_eq!(rows[0]["modulus"], 3);
}

#[test]
fn suites_lists_every_id() {
    let out = ringlab(&["suites"]);
    assert_eq!(stdout(&out).lines().count(), 43);
}
