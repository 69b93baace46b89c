use std::process::Command;

use codegree::cli::run;

/// Keys appear in this order in the raw JSON text.
fn assert_key_order(text: &str, keys: &[&str]) {
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| text.find(&format!("\"{k}\":")).unwrap_or_else(|| panic!("{k} missing in {text}")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{keys:?} out of order in {text}");
}

fn run_args(args: &[&str]) -> (u8, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("codegree").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn analyze_f21_prints_codegree_line() {
    let (code, out, _) = run_args(&["analyze", "F(7,3)"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "codegrees: 3 3 7 7"), "{out}");
    assert!(out.contains("frobenius: kernel order 7, complement order 3"));
}

#[test]
fn analyze_reads_group_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("d10.grp");
    std::fs::write(&path, "# dihedral of order 10\nperm 5\n(1 2 3 4 5)\n(2 5)(3 4)\n").unwrap();
    let (code, out, _) = run_args(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("order: 10\n"));
    assert!(out.contains("codegrees: 2 5 5\n"));
}

#[test]
fn missing_file_exits_two() {
    let (code, _, err) = run_args(&["analyze", "missing.grp"]);
    assert_eq!(code, 2);
    assert!(err.contains("missing.grp: file not found"), "{err}");
}

#[test]
fn parse_errors_exit_two_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.grp");
    std::fs::write(&path, "perm 3\n(1 2\n").unwrap();
    let (code, _, err) = run_args(&["analyze", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2, column 1: unclosed cycle"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run_args(&[]).0, 2);
    assert_eq!(run_args(&["frobnicate"]).0, 2);
    assert_eq!(run_args(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(run_args(&["verify", "all", "--max-order", "0"]).0, 2);
    assert_eq!(run_args(&["export-dot", "S3", "--graph", "omega", "-o", "x.dot"]).0, 2);
    let (code, out, _) = run_args(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn verify_single_suite_without_corpus() {
    let (code, out, _) = run_args(&["verify", "diophantine"]);
    assert_eq!(code, 0);
    assert!(out.contains("power_of_four_equation"));
    let (code, out, _) = run_args(&["verify", "table"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn verify_report_schema_and_header() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let (code, out, _) = run_args(&["verify", "connectivity", "--max-order", "24", "--report", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    let header: serde_json::Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(header["corpus"]["max_order"], 24);
    assert!(header["corpus"]["limitations"].as_str().unwrap().contains("not covered"));
    let mut count = 0;
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v.as_object().unwrap().len(), 5);
        assert_key_order(line, &["check", "group", "verdict", "witness", "millis"]);
        assert!(v["millis"].is_null());
        count += 1;
    }
    assert!(count > 0);
    let s4 = text.lines().find(|l| l.contains("\"disconnected_iff_frobenius\"") && l.contains("\"group\":\"S4\"")).unwrap();
    assert!(s4.contains("\"verdict\":\"pass\""), "{s4}");
}

#[test]
fn timings_fill_millis() {
    let (code, out, _) = run_args(&["verify", "diophantine", "--timings", "--report", "-"]);
    assert_eq!(code, 0);
    let line = out.lines().nth(1).unwrap();
    let v: serde_json::Value = serde_json::from_str(line).unwrap();
    assert!(v["millis"].is_u64());
}

/// The prime-power suite reports S4 (codegrees 2, 3, 8, 8; neither a
/// p-group nor Frobenius), so a full run exits 1 with that single failure.
#[test]
fn verify_all_to_sixty_fails_only_on_s4() {
    let (code, out, _) = run_args(&["verify", "all", "--max-order", "60", "--report", "-"]);
    assert_eq!(code, 1);
    let failures: Vec<&str> = out.lines().filter(|l| l.contains("\"verdict\":\"fail\"")).collect();
    assert_eq!(failures.len(), 1, "{failures:?}");
    assert!(failures[0].starts_with("{\"check\":\"prime_power_codegrees\",\"group\":\"S4\""));
}

#[test]
fn catalog_list_and_manifest() {
    let (code, out, _) = run_args(&["catalog", "list", "--max-order", "8"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = out.lines().map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(names, ["C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D8", "Q8"]);

    let (code, out, _) = run_args(&["catalog", "list", "--max-order", "21", "--json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let f21 = v.as_array().unwrap().iter().find(|e| e["name"] == "F(7,3)").unwrap();
    assert_eq!(f21["order"], 21);
    assert_eq!(f21["recipe"], "frobenius 7 3 2");
    assert_eq!(f21.as_object().unwrap().len(), 3);
    assert_key_order(&out, &["name", "order", "recipe"]);
}

#[test]
fn export_dot_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.dot");
    let p = path.to_str().unwrap();
    assert_eq!(run_args(&["export-dot", "S4", "--graph", "gamma", "-o", p]).0, 0);
    let gamma = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        gamma,
        "graph gamma {\n  label=\"S4\";\n  v0 [label=\"2\"];\n  v1 [label=\"3\"];\n  v2 [label=\"8\"];\n  v3 [label=\"8\"];\n  v0 -- v2;\n  v0 -- v3;\n  v2 -- v3;\n}\n"
    );
    assert_eq!(run_args(&["export-dot", "C6", "--graph", "delta", "-o", p]).0, 0);
    let delta = std::fs::read_to_string(&path).unwrap();
    assert_eq!(delta, "graph delta {\n  label=\"C6\";\n  v0 [label=\"2\"];\n  v1 [label=\"3\"];\n  v0 -- v1;\n}\n");
}

#[test]
fn export_table_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a5.json");
    assert_eq!(run_args(&["export-table", "A5", "-o", path.to_str().unwrap()]).0, 0);
    let text = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["order"], 60);
    assert_eq!(v["conductor"], 30);
    let chars = v["characters"].as_array().unwrap();
    let degrees: Vec<u64> = chars.iter().map(|c| c["degree"].as_u64().unwrap()).collect();
    assert_eq!(degrees, [1, 3, 3, 4, 5]);
    for c in chars {
        for entry in c["values"].as_array().unwrap() {
            assert_eq!(entry.as_array().unwrap().len(), 30);
            assert!(entry.as_array().unwrap().iter().all(|x| x.is_string()));
        }
    }
    assert_key_order(&text, &["group", "order", "conductor", "classes", "characters"]);
    // Deterministic output.
    assert_eq!(run_args(&["export-table", "A5", "-o", path.to_str().unwrap()]).0, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), text);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_codegree");
    let status = Command::new(bin).args(["analyze", "S3"]).output().unwrap();
    assert_eq!(status.status.code(), Some(0));
    let status = Command::new(bin).args(["analyze", "missing.grp"]).output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&status.stderr).contains("file not found"));
    let status = Command::new(bin).args(["verify", "prime-powers", "--max-order", "24"]).output().unwrap();
    assert_eq!(status.status.code(), Some(1));
}
