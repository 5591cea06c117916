use std::process::{Command, Output};

use nakarig::GenCogenSet;

fn nakarig(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakarig"))
        .args(args)
        .env_remove("NAKARIG_THREADS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn first_line(out: &Output) -> String {
    stdout(out).lines().next().unwrap_or_default().to_string()
}

#[test]
fn rigdim_prints_value_then_chain() {
    let out = nakarig(&["rigdim", "--n", "2", "--m", "3"]);
    assert!(out.status.success());
    assert_eq!(first_line(&out), "4");
    assert!(stdout(&out).contains("chain:"));
}

#[test]
fn gldim_of_a_small_generator() {
    let out = nakarig(&["gldim", "--n", "2", "--m", "3", "--members", "0:1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn rd_side_by_side() {
    let out = nakarig(&["rd", "--n", "3", "--m", "3", "--t", "1"]);
    assert_eq!(stdout(&out), "1 (closed) / 1 (direct)\n");
    // the region computation does not need m >= n
    let out = nakarig(&["rd", "--n", "4", "--m", "2", "--t", "1"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("n/a (closed) / "));
}

#[test]
fn ascii_render_matches_golden() {
    let golden = include_str!("golden/render_a23.txt");
    for _ in 0..2 {
        let out = nakarig(&[
            "render",
            "--n",
            "2",
            "--m",
            "3",
            "--members",
            "0:1",
            "--format",
            "ascii",
        ]);
        assert!(out.status.success());
        assert_eq!(stdout(&out), golden);
    }
}

#[test]
fn svg_render_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a34.svg");
    let out = nakarig(&[
        "render",
        "--n",
        "3",
        "--m",
        "4",
        "--members",
        "0:1,2:2",
        "--format",
        "svg",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let doc = std::fs::read_to_string(&path).unwrap();
    assert!(doc.starts_with("<svg") && doc.trim_end().ends_with("</svg>"));
}

#[test]
fn gldim_json_round_trips_the_set() {
    let out = nakarig(&[
        "gldim",
        "--n",
        "3",
        "--m",
        "4",
        "--members",
        "2:3,0:1,2:2",
        "--json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let set: GenCogenSet = serde_json::from_value(doc["set"].clone()).unwrap();
    assert_eq!(
        set.to_json(),
        r#"{"n":3,"m":4,"members":[[0,1],[2,2],[2,3]]}"#
    );
}

#[test]
fn infinity_serializes_as_string() {
    let out = nakarig(&["brute", "--n", "1", "--m", "1", "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["brute_value"], "inf");
    assert_eq!(doc["formula_value"], "inf");
}

#[test]
fn resolve_reports_the_chain() {
    let out = nakarig(&["resolve", "--n", "2", "--m", "3", "--members", "0:1"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["resolutions"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let mdims: Vec<u64> = rows.iter().map(|r| r["mdim"].as_u64().unwrap()).collect();
    assert_eq!(mdims, vec![1, 2, 2]);
}

#[test]
fn family_flags_build_sets() {
    let out = nakarig(&[
        "gldim", "--n", "3", "--m", "3", "--family", "S", "--t", "2", "--delta", "0",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "4\n");
}

#[test]
fn exit_codes() {
    // flag errors
    assert_eq!(nakarig(&["rigdim", "--n", "2"]).status.code(), Some(2));
    assert_eq!(
        nakarig(&["gldim", "--n", "2", "--m", "3", "--members", "0:9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        nakarig(&["rigdim", "--n", "3", "--m", "2"]).status.code(),
        Some(2)
    );
    // refused budget
    let out = nakarig(&["brute", "--n", "3", "--m", "5", "--max-bits", "8"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn witness_and_verify_pass() {
    assert!(nakarig(&["witness", "--n", "5", "--m", "8"])
        .status
        .success());
    let out = nakarig(&["verify", "--criterion", "10", "--criterion", "1"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out)
            .lines()
            .filter(|l| l.starts_with("[PASS]"))
            .count(),
        2
    );
}

#[test]
fn sweep_emits_tsv() {
    let out = nakarig(&["sweep", "--n", "2..3", "--m", "3..5", "--max-bits", "10"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "n\tm\tk_0\td\tformula\tbrute\twitness_rd\tsubsets\tmillis"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split('\t').collect()).collect();
    assert_eq!(rows.len(), 6);
    // (3,5) has 12 free vertices, past the budget: brute-force columns stay empty
    let last = rows.last().unwrap();
    assert_eq!((last[0], last[1], last[5]), ("3", "5", "-"));
    assert_eq!(rows[0][4], rows[0][5]);
}
