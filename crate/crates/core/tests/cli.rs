use std::process::{Command, Output};

use isogame::cli::SolveRecord;

fn isogame(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_isogame"))
        .args(args)
        .env_remove("ISOGAME_MEMO_CAP")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn solve_plain() {
    let o = isogame(&[
        "solve",
        "--family",
        "cycle:6",
        "--forbidden",
        "K2",
        "--start",
        "D",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("value=3"));
    let o = isogame(&[
        "solve",
        "--family",
        "hgraph",
        "--forbidden",
        "K2",
        "--start",
        "S",
        "--marks",
        "v4",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("value=5"));
}

#[test]
fn solve_json_record() {
    let o = isogame(&[
        "solve",
        "--family",
        "path:7",
        "--forbidden",
        "K1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let rec: SolveRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec.value, 3);
    assert_eq!(rec.family, "K1");
    assert_eq!(rec.start, "D");
    assert_eq!(rec.principal_line.len(), 3);
    assert_eq!(rec.best_move, Some(rec.principal_line[0]));
}

#[test]
fn graph_file_and_output() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("in.g6");
    std::fs::write(&input, "C~\nEhc?\n\n").unwrap();
    let out = dir.path().join("out.jsonl");
    let o = isogame(&[
        "solve",
        "--graph-file",
        input.to_str().unwrap(),
        "--format",
        "json",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&out).unwrap();
    let recs: Vec<SolveRecord> = text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(recs.len(), 2);
    assert_eq!(recs[0].graph, "C~");
    assert_eq!(recs[0].value, 1);
}

#[test]
fn memo_cap_env_and_flag() {
    let o = Command::new(env!("CARGO_BIN_EXE_isogame"))
        .args(["solve", "--family", "path:12"])
        .env("ISOGAME_MEMO_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("memo cap 4"));
    let o = Command::new(env!("CARGO_BIN_EXE_isogame"))
        .args(["solve", "--family", "path:12", "--memo-cap", "100000"])
        .env("ISOGAME_MEMO_CAP", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_path_exact_csv() {
    let o = isogame(&[
        "verify",
        "--check",
        "path-exact",
        "--n-min",
        "6",
        "--n-max",
        "23",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    assert_eq!(&headers[0], "graph6");
    assert!(headers.iter().any(|h| h == "d_value"));
    let rows: Vec<_> = rdr.records().map(Result::unwrap).collect();
    assert!(!rows.is_empty());
}

#[test]
fn reproducible_json_is_byte_identical() {
    let args = [
        "verify",
        "--check",
        "continuation-principle",
        "--format",
        "json",
        "--reproducible",
        "--jobs",
        "2",
    ];
    let a = isogame(&args);
    let b = isogame(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["violations"].as_array().unwrap().len(), 0);
    assert!(v.get("wall_time_ms").is_none());
}

#[test]
fn verify_on_graph_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("g.g6");
    std::fs::write(&input, "Ehc?\nFhCGG\n").unwrap();
    let o = isogame(&[
        "verify",
        "--check",
        "sandwich",
        "--graph-file",
        input.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sandwich: PASS"));
}

#[test]
fn usage_errors() {
    for args in [
        &["solve"][..],
        &["solve", "--graph6", "C~", "--family", "path:3"],
        &["solve", "--graph6", "C\u{7f}"],
        &["verify", "--check", "no-such-check"],
        &["verify", "--check", "path-exact", "--n-max", "40"],
        &["enumerate", "--n", "12"],
        &["solve", "--family", "hgraph", "--marks", "v13"],
    ] {
        let o = isogame(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn enumerate_and_family_commands() {
    let o = isogame(&["enumerate", "--n", "5"]);
    assert_eq!(stdout(&o).lines().count(), 21);
    let o = isogame(&["family", "--family", "gh:1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["order"], 12);
}
