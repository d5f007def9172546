use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_superchar"));
    cmd.args(args);
    match cache {
        Some(dir) => cmd.env("SUPERCHAR_CACHE", dir),
        None => cmd.env_remove("SUPERCHAR_CACHE"),
    };
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn stdout_text(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap().trim().to_string()
}

#[test]
fn constituents_of_the_worked_example() {
    let out = run(&["kac-constituents", "2,3", "--latex"], None);
    assert!(out.status.success());
    assert_eq!(stdout_text(&out), "\\{(1,0), (3,1), (3,2)\\}");
}

#[test]
fn euler_decomposition_of_the_worked_example() {
    let out = run(&["euler-decompose", "-1", "--latex"], None);
    assert!(out.status.success());
    assert_eq!(
        stdout_text(&out),
        "-\\mathrm{ch}\\,L(-1,-2) - \\mathrm{ch}\\,L(0,-2) - \\mathrm{ch}\\,L(0,-1)"
    );
}

#[test]
fn pairing_methods_agree() {
    let out = run(&["pair", "--left", "kac:0,-1", "--right", "euler:-1"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["combinatorial"], -1);
    assert_eq!(v["oracle"]["value"], "-1");
    assert_eq!(v["agree"], true);

    let out = run(
        &["--m", "1", "--n", "1", "pair", "--left", "proj:0", "--right", "irr:0"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["combinatorial"], 1);
}

#[test]
fn oracle_only_pairs_any_laurent_polynomial() {
    let one = r#"laurent:{"m":1,"n":1,"terms":[{"x":[0],"y":[0],"c":"1"}]}"#;
    let out = run(
        &["--m", "1", "--n", "1", "pair", "--left", one, "--right", "euler:", "--method", "oracle"],
        None,
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert!(v.get("combinatorial").is_none());
    assert!(v["oracle"]["value"].is_string());
}

#[test]
fn errors_are_json_with_exit_code_one() {
    for args in [
        vec!["no-such-command"],
        vec!["pair", "--left", "euler:0", "--right", "kac:0,-1", "--method", "combinatorial"],
        vec!["kac-char", "0"],
        vec!["diagram", "show", "0,zz"],
        vec!["--window", "-1", "euler-decompose", "-1"],
    ] {
        let out = run(&args, None);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        let err: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
        assert!(err["error"].is_string() && err["message"].is_string(), "{args:?}");
    }
}

#[test]
fn help_exits_cleanly() {
    let out = run(&["--help"], None);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_text(&out).contains("pair"));
}

#[test]
fn rank_one_sets() {
    let out = run(&["p-set", "--atypicality", "2", "--bound", "1", "--window", "-4"], None);
    let sets: Vec<Vec<i64>> = serde_json::from_value(stdout_json(&out)["sets"].clone()).unwrap();
    let mut expect: Vec<Vec<i64>> = vec![vec![-1, -2], vec![0, -2], vec![0, -1]];
    expect.extend((-4..=-1).map(|a| vec![0, a]));
    expect.sort();
    expect.dedup();
    let mut sets = sets;
    sets.sort();
    assert_eq!(sets, expect);
}

#[test]
fn closed_form_matches_irr_char() {
    let closed = run(&["gl22-char", "-1", "-3"], None);
    let inverted = run(&["irr-char", "-1,-3"], None);
    assert_eq!(stdout_json(&closed)["combination"], stdout_json(&inverted)["euler"]);
}

#[test]
fn cache_is_reused_and_survives_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["irr-char", "0,-2"];
    let first = run(&args, Some(dir.path()));
    assert!(first.status.success());
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1, "one entry and no temporary files");
    let path = entries[0].as_ref().unwrap().path();

    // a hit is served from disk
    let planted = r#"{"exit":0,"json":{"planted":true},"latex":null}"#;
    std::fs::write(&path, planted).unwrap();
    assert_eq!(stdout_json(&run(&args, Some(dir.path())))["planted"], true);
    assert!(stdout_json(&run(&["--no-cache", "irr-char", "0,-2"], Some(dir.path())))
        .get("planted")
        .is_none());

    // a corrupt entry is a miss and gets rewritten
    std::fs::write(&path, "{ truncated").unwrap();
    let again = run(&args, Some(dir.path()));
    assert_eq!(again.stdout, first.stdout);
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(serde_json::from_str::<Value>(&text).is_ok());
}
