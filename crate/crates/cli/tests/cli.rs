use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn signcolor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_signcolor"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(name: &str) -> String {
    fixture(name).to_str().unwrap().to_string()
}

#[test]
fn chromatic_unbalanced_c4() {
    let out = signcolor(&["chromatic", &path("unbalanced_c4.sg")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("chi_pm = 3\n"));
    for line in text.lines().skip(1) {
        let c: i64 = line.split_whitespace().nth(2).unwrap().parse().unwrap();
        assert!((-1..=1).contains(&c), "{line}");
    }
}

#[test]
fn json_and_text_agree() {
    let text = stdout(&signcolor(&["chromatic", &path("wheel5.sg")]));
    let json: serde_json::Value = serde_json::from_str(&stdout(&signcolor(&[
        "--format",
        "json",
        "chromatic",
        &path("wheel5.sg"),
    ])))
    .unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        format!("chi_pm = {}", json["chi_pm"])
    );
    let colors: Vec<i64> = text
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(2).unwrap().parse().unwrap())
        .collect();
    let from_json: Vec<i64> = json["coloring"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_i64().unwrap())
        .collect();
    assert_eq!(colors, from_json);
}

#[test]
fn choosable_certificate_for_positive_path() {
    let out = signcolor(&["choosable", &path("pos_path3.sg")]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("NOT degree-choosable\n"));
    assert!(text.contains("lists ({1},{1,2},{2})"));
}

#[test]
fn choosable_names_a_non_brick_block() {
    let text = stdout(&signcolor(&["choosable", &path("bowtie.sg")]));
    assert!(text.starts_with("degree-choosable\n"));
    assert!(text.contains("block [2, 3, 4] is not a brick"));
}

#[test]
fn listcolor_finds_a_coloring() {
    let text = stdout(&signcolor(&[
        "listcolor",
        &path("pos_path3.sg"),
        "--lists",
        &path("p3_lists.txt"),
    ]));
    assert_eq!(text, "colorable\nc 0 2\nc 1 1\nc 2 2\n");
}

#[test]
fn input_errors_exit_with_one() {
    let out = signcolor(&[
        "listcolor",
        &path("pos_path3.sg"),
        "--lists",
        &path("p3_missing.txt"),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertex 2 has no list"));
    let out = signcolor(&["analyze", &path("invalid/loop.sg")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2: loop at vertex 0"));
    assert_eq!(
        signcolor(&["analyze", &path("absent.sg")]).status.code(),
        Some(1)
    );
    assert_eq!(signcolor(&["verify", "S99"]).status.code(), Some(1));
}

#[test]
fn analyze_reports_blocks() {
    let text = stdout(&signcolor(&["analyze", &path("bowtie.sg")]));
    assert!(text.contains("cut vertices: [2]"));
    assert!(text.contains("block 0: vertices [0, 1, 2], balanced K_3"));
    assert!(text.contains("coloring number: 3"));
}

#[test]
fn linegraph_of_triangle() {
    let text = stdout(&signcolor(&["linegraph", &path("unbalanced_triangle.sg")]));
    assert_eq!(text, "n 3\ne 0 1 +\ne 0 2 -\ne 1 2 -\n");
}

#[test]
fn badlists_on_digon() {
    let text = stdout(&signcolor(&["badlists", &path("digon.sg")]));
    assert_eq!(text.lines().count(), 2);
    assert!(text.lines().all(|l| l.split_whitespace().count() == 4));
}

#[test]
fn verify_census_lists_four_graphs() {
    let out = signcolor(&["verify", "S6", "--max-n", "6", "--mu", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("result: pass"));
    assert!(text.contains("3-critical graphs found: 4"));
    for name in [
        "balanced C_3",
        "unbalanced C_4",
        "balanced C_5",
        "unbalanced C_6",
    ] {
        assert!(text.contains(name), "{name}");
    }
}

#[test]
fn verify_is_deterministic() {
    let args = ["--format", "json", "verify", "S2", "--max-n", "4"];
    let first = signcolor(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, signcolor(&args).stdout);
    let json: serde_json::Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(json["passed"], true);
    assert!(json.get("seconds").is_none());
    let timed: serde_json::Value =
        serde_json::from_slice(&signcolor(&[&args[..], &["--timing"]].concat()).stdout).unwrap();
    assert!(timed["seconds"].is_number());
}
