mod common;

use std::process::{Command, Output};

use common::golden_dir;

fn twoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twoint")).args(args).output().expect("run twoint")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn write_script(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn golden_path(name: &str) -> String {
    golden_dir().join(name).to_str().unwrap().to_owned()
}

#[test]
fn verify_definability_prints_four_passes() {
    let o = twoint(&["verify-definability"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), 4, "{out}");
    for name in ["snotI+", "snotI-", "snotE+", "snotE-"] {
        assert!(out.contains(name));
    }
}

#[test]
fn verify_definability_json() {
    let o = twoint(&["verify-definability", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["holds"], true);
    assert_eq!(v["cases"].as_array().unwrap().len(), 4);
}

#[test]
fn expand_strong_negation() {
    let o = twoint(&["expand", "~a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(a & (a -> (a -< a))) | ((a -> a) -< a)\n");
}

#[test]
fn golden_scripts_check_strictly() {
    for (file, ..) in common::GOLDEN {
        let o = twoint(&["check", "--strict", &golden_path(file)]);
        assert_eq!(o.status.code(), Some(0), "{file}: {}", stdout(&o));
    }
    let o = twoint(&["check", "--strict", &golden_path("composed.2int")]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn corrupted_rule_name_is_rejected_with_a_path() {
    let dir = tempfile::tempdir().unwrap();
    let text = std::fs::read_to_string(golden_dir().join("snot_intro_proof.2int")).unwrap();
    let path = write_script(&dir, "bad.2int", &text.replace("orI2+", "orI1+"));
    let o = twoint(&["check", "--json", &path]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["valid"], false);
    assert_eq!(v["violations"][0]["code"], "UnknownRuleShape");
    assert_eq!(v["violations"][0]["path"], serde_json::json!([]));
}

#[test]
fn unknown_rule_name_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_script(&dir, "bad.2int", "(rule orI3+ \"a | b\" (assume a))");
    let o = twoint(&["check", &path]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("unknown rule name `orI3+`"));
}

#[test]
fn missing_file_is_a_usage_error() {
    let o = twoint(&["check", "/nonexistent/x.2int"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn omitted_dashed_reading() {
    let dir = tempfile::tempdir().unwrap();
    // orE+ carries no reading; its branches are both dual.
    let agree = "(judgment (gamma \"a | b\" F) (delta) dual c)\n\
        (rule orE+ :label 1 c (assume \"a | b\")\n\
          (rule botE+ :dashed dual c (assume F))\n\
          (rule botE+ :dashed dual c (assume F)))";
    let o = twoint(&["check", &write_script(&dir, "agree.2int", agree)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    let mixed = agree.replacen(":dashed dual c (assume F))\n", ":dashed proof c (assume F))\n", 1);
    assert_ne!(mixed, agree);
    let o = twoint(&["check", "--json", &write_script(&dir, "mixed.2int", &mixed)]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let codes: Vec<&str> = v["violations"].as_array().unwrap().iter().map(|x| x["code"].as_str().unwrap()).collect();
    assert!(codes.contains(&"DashedNonUniform"), "{codes:?}");
}

#[test]
fn check_without_judgment_reports_open_hypotheses() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_script(&dir, "open.2int", "(rule andI+ \"a & b\" (assume a) (assume b))");
    let o = twoint(&["check", &path]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("inferred judgment: (judgment (gamma a b) (delta) proof \"a & b\")"), "{out}");
}

#[test]
fn elaborate_outputs_a_kernel_script() {
    let o = twoint(&["elaborate", &golden_path("composed.2int")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(!out.contains("snot"));
    let script = twoint::parse_script(&out).unwrap();
    let report = twoint_core::check(&script.tree, script.judgment.as_ref().unwrap());
    assert!(report.valid(), "{:?}", report.violations);
}

#[test]
fn search_prints_a_checkable_script() {
    let o = twoint(&["search", "(judgment (gamma) (delta a) proof \"~a\")", "--depth", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let script = twoint::parse_script(&stdout(&o)).unwrap();
    let report = twoint_core::check(&script.tree, script.judgment.as_ref().unwrap());
    assert!(report.valid(), "{:?}", report.violations);
    let o = twoint(&["search", "(judgment (gamma) (delta) proof b)", "--depth", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let o = twoint(&["search", "(judgment (gamma) proof b)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rules_table() {
    let o = twoint(&["rules"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 27);
}
