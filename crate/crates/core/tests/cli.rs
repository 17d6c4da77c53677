use std::process::{Command, Output};

fn cli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lucas-cubes"))
        .args(args)
        .env_remove(lucas_cubes::verify::TIME_GUARD_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn poly_lists() {
    assert_eq!(stdout(&["poly", "--kind", "cube", "--n", "5", "--method", "recurrence"]), "11 15 5\n");
    assert_eq!(stdout(&["poly", "--kind", "indegree", "--n", "4"]), "1 4 2\n");
    assert_eq!(stdout(&["poly", "--kind", "rank", "--n", "0"]), "1\n");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["poly", "--kind", "maximal", "--n", "4", "--format", "json"])).unwrap();
    assert_eq!(json["coeffs"], serde_json::json!(["0", "1", "2"]));
}

#[test]
fn lucas_triangle_table() {
    assert_eq!(
        stdout(&["table", "--kind", "lucas_triangle", "--rows", "6"]),
        "2\n1,2\n1,3,2\n1,4,5,2\n1,5,9,7,2\n1,6,14,16,9,2\n"
    );
    let seq = stdout(&["table", "--kind", "sequences", "--rows", "10"]);
    assert_eq!(seq.lines().next(), Some("n,F,L,J,p'"));
    assert_eq!(seq.lines().nth(10), Some("9,34,76,511,19"));
    let grid = stdout(&["table", "--kind", "spectrum_grid", "--rows", "8", "--kind-inner", "cube"]);
    assert_eq!(grid.lines().nth(5), Some("5,11,15,5"));
}

#[test]
fn constructions() {
    let dot = stdout(&["construct", "--family", "omega", "--n", "5", "--format", "dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains("label")).count(), 11);
    let fence: serde_json::Value = serde_json::from_str(&stdout(&["construct", "--family", "lfence", "--n", "4"])).unwrap();
    assert_eq!(fence["n"], 4);
    let chain: serde_json::Value =
        serde_json::from_str(&stdout(&["construct", "--family", "lucasene", "--n", "6", "--format", "json"])).unwrap();
    assert_eq!(chain["vertices"].as_array().unwrap().len(), 26);
}

#[test]
fn verify_suites() {
    let out = stdout(&["verify", "--suite", "identities", "--max-n", "20"]);
    assert!(out.ends_with("0 fail, 0 discrepancy-logged\n"), "{out}");
    let out = stdout(&["verify", "--suite", "resonance", "--max-n", "8"]);
    assert!(out.contains(" 0 fail"), "{out}");
    let out = stdout(&["verify", "--suite", "oracle_crosscheck", "--max-n", "8"]);
    assert!(out.ends_with("0 fail, 2 discrepancy-logged\n"), "{out}");
    let out = cli(&["verify", "--suite", "oracle_crosscheck", "--max-n", "9"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fail               oracle.disjoint "), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["poly", "--kind", "cube", "--n", "5", "--method", "bogus"][..],
        &["poly", "--kind", "nothing", "--n", "5"],
        &["construct", "--family", "omega", "--n", "3", "--format", "csv"],
        &["table", "--kind", "lucas_triangle", "--rows", "0"],
        &["verify", "--suite", "oracle_crosscheck", "--max-n", "99"],
        &["chain", "--code", "LXR"],
        &["frobnicate"],
    ] {
        assert_eq!(cli(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn outputs_are_deterministic() {
    for args in [
        &["construct", "--family", "gamma", "--n", "6", "--format", "json"][..],
        &["chain", "--code", "SLR", "--export", "z-digraph", "--format", "dot"],
        &["verify", "--suite", "structure", "--max-n", "7", "--format", "json"],
        &["verify", "--suite", "all", "--max-n", "6", "--format", "csv"],
    ] {
        assert_eq!(cli(args).stdout, cli(args).stdout, "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("lucas-cubes-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["poly", "--kind", "rank", "--n", "4", "--out", p]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "1 1 2 2 1\n");
    std::fs::remove_file(path).unwrap();
}
