use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn curvlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvlab")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn cycle_curvature_is_constant() {
    let v = stdout_json(&curvlab(&["curvature", "family:cycle(6)"]));
    let k = v["curvature"].as_array().unwrap();
    assert_eq!(k.len(), 6);
    assert!(k.iter().all(|c| c["exact"] == "2/3" && c["decimal"] == "0.6667"));
    assert_eq!(v["regime"], "maximin");
}

#[test]
fn handa_analysis() {
    let v = stdout_json(&curvlab(&["analyze", "family:handa"]));
    assert_eq!(v["bm_sharp"], true);
    assert_eq!(v["antipodal"], false);
    assert_eq!(v["self_centered"], false);
    assert_eq!(v["solution_space_dim"], 18);
    assert_eq!(v["min"]["exact"], "2/5");
}

#[test]
fn book_charpoly() {
    let out = curvlab(&["charpoly", "family:A(4)"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "x^6 - 33x^4 - 120x^3 - 168x^2 - 96x - 16\n");
}

#[test]
fn dot_and_table_formats() {
    let out = curvlab(&["curvature", "g6:Bw", "--format", "dot"]);
    let dot = String::from_utf8(out.stdout).unwrap();
    assert_eq!(dot.matches("label=\"1.5000\"").count(), 3);
    let out = curvlab(&["curvature", "family:path(3)", "--format", "table"]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("1\t0/1\t0.0000"));
}

#[test]
fn edge_list_and_graph6_files() {
    let dir = std::env::temp_dir().join(format!("curvlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let el = dir.join("c4.txt");
    std::fs::File::create(&el).unwrap().write_all(b"# square\n4 4\n0 1\n1 2\n2 3\n3 0\n").unwrap();
    let v = stdout_json(&curvlab(&["curvature", el.to_str().unwrap()]));
    assert!(v["curvature"].as_array().unwrap().iter().all(|c| c["exact"] == "1/1"));

    let g6 = dir.join("corpus.g6");
    std::fs::write(&g6, "Bw\nBg\nB_\n").unwrap();
    let v = stdout_json(&curvlab(&["scan", "--n-max", "3", "--predicate", "bm-sharp", "--graph6", g6.to_str().unwrap()]));
    assert_eq!(v["graphs_scanned"], 2);
    assert_eq!(v["skipped"], 1);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn predictions_match_solver() {
    let v = stdout_json(&curvlab(&["predict-leaf", "family:complete(3)", "0"]));
    assert_eq!(v["prediction"]["alpha"]["exact"], "16/21");
    assert_eq!(v["matches_solver"], true);
    let v = stdout_json(&curvlab(&["predict-bridge", "family:complete(2)", "1", "family:complete(2)", "0"]));
    assert_eq!(v["prediction"]["z"]["exact"], "16/1");
    assert_eq!(v["matches_solver"], true);
}

#[test]
fn scan_enumerated_json_and_csv() {
    let v = stdout_json(&curvlab(&["scan", "--n-max", "6", "--predicate", "zero-total", "--jobs", "1"]));
    assert_eq!(v["predicate"], "zero-total");
    assert_eq!(v["matches"].as_array().unwrap().len(), 2);
    let out = curvlab(&["scan", "--n-max", "5", "--predicate", "singular-D", "--format", "csv"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph6,n,regime"));
}

#[test]
fn min_leaves_and_probe() {
    let v = stdout_json(&curvlab(&["min-leaves", "family:path(5)", "--budget", "8"]));
    assert_eq!(v["minimum_leaves"], 7);
    let v = stdout_json(&curvlab(&["probe", "family:A(4)", "2", "3", "4"]));
    assert_eq!(v["steps"].as_array().unwrap().len(), 4);
    assert!(v["warning"].is_null());
}

#[test]
fn errors_are_json_on_stderr() {
    let cases: [(&[&str], &str, i32); 5] = [
        (&["curvature", "g6:A?"], "DisconnectedGraph", 1),
        (&["curvature", "g6:B"], "MalformedGraph6", 2),
        (&["predict-leaf", "family:path(3)", "1"], "ConditionViolated", 1),
        (&["scan", "--n-max", "12", "--predicate", "zero-total"], "CapExceeded", 1),
        (&["scan", "--n-max", "4", "--predicate", "bogus"], "UnknownPredicate", 2),
    ];
    for (args, name, code) in cases {
        let out = curvlab(args);
        assert_eq!(out.status.code(), Some(code), "{args:?}");
        assert!(out.stdout.is_empty());
        let err: Value = serde_json::from_slice(&out.stderr).unwrap();
        assert_eq!(err["error"], name, "{args:?}");
    }
    let out = curvlab(&["min-leaves", "family:path(5)", "--budget", "3"]);
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "NotFoundWithinBudget");
}
