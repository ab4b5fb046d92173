use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn data(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name);
    p.to_str().unwrap().to_string()
}

fn run_with(args: &[&str], stdin: Option<&str>, no_color: bool) -> Run {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_aristotle"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    if no_color {
        cmd.env("NO_COLOR", "1");
    } else {
        cmd.env_remove("NO_COLOR");
    }
    let mut child = cmd.spawn().unwrap();
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    let out = child.wait_with_output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn run(args: &[&str]) -> Run {
    run_with(args, None, false)
}

#[test]
fn canonical_square_table() {
    let r = run(&["canonical-square"]);
    assert_eq!(r.code, 0);
    let rows: Vec<Vec<&str>> = r
        .stdout
        .lines()
        .skip(1)
        .map(|l| l.split('|').skip(1).map(str::trim).collect())
        .collect();
    assert_eq!(
        rows,
        vec![
            vec!["BI", "C", "LI", "CD"],
            vec!["C", "BI", "CD", "LI"],
            vec!["RI", "CD", "BI", "SC"],
            vec!["CD", "RI", "SC", "BI"],
        ]
    );
}

#[test]
fn single_element_fragment_is_bi() {
    let r = run(&["classify", &data("single.json"), "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["kinds"], serde_json::json!([["BI"]]));
}

#[test]
fn identity_relation_is_a_partial_order() {
    let r = run(&["ifrel-check", &data("identity.json")]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout.matches('✓').count(), 4);
    assert!(r.stdout.contains("perfectly antisymmetric ✓"));
}

#[test]
fn failed_property_exits_one() {
    let r = run(&["ifrel-check", &data("not-transitive.json")]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("transitive              ✗"));
    assert_eq!(
        run(&["lattice-check", &data("not-transitive.json")]).code,
        1
    );
}

#[test]
fn no_color_uses_plain_marks() {
    let r = run_with(&["ifrel-check", &data("identity.json")], None, true);
    assert!(!r.stdout.contains('✓'));
    assert!(r.stdout.contains("partial order           yes"));
}

#[test]
fn malformed_json_reports_position() {
    let r = run_with(
        &["classify", "-"],
        Some("{\n  \"algebra\": {\"atoms\": [\"p\"]},\n  \"fragment\": [[\"p\"],\n}"),
        false,
    );
    assert_eq!(r.code, 2);
    assert!(r.stderr.starts_with("error: -:4:1:"), "{}", r.stderr);
}

#[test]
fn unknown_field_is_rejected() {
    let r = run_with(
        &["classify", "-"],
        Some(r#"{"algebra": {"atoms": ["p"]}, "fragment": [["p"]], "colour": "red"}"#),
        false,
    );
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("unknown field `colour`"), "{}", r.stderr);
}

#[test]
fn invariant_violations_name_the_cell() {
    let r = run(&["ifrel-check", &data("bad-cell.json")]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("cell (0, 1)"), "{}", r.stderr);
    let v = run(&["validate", &data("bad-cell.json")]);
    assert_eq!(v.code, 1);
    assert!(v.stdout.contains("invalid relation"));
}

#[test]
fn validate_detects_every_kind() {
    for (file, kind) in [
        ("square.json", "diagram"),
        ("identity.json", "relation"),
        ("graded-powerset.json", "lattice"),
        ("half.json", "fuzzy-set"),
        ("fuzzy-square.json", "fuzzy-diagram"),
    ] {
        let r = run(&["validate", &data(file), "--format", "json"]);
        assert_eq!(r.code, 0, "{file}");
        let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
        assert_eq!(v["kind"], kind);
        assert_eq!(v["valid"], true);
    }
    let r = run_with(&["validate", "-"], Some(r#"{"atoms": ["p", "q"]}"#), false);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("valid algebra"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["canonical-square", "--bogus"]).code, 2);
    assert_eq!(run(&["no-such-command"]).code, 2);
    assert_eq!(
        run(&["ifrel-check", &data("identity.json"), "--format", "dot"]).code,
        2
    );
    assert_eq!(
        run(&["canonical-square", "--contradiction-nu", "3/4"]).code,
        2
    );
    assert_eq!(run(&["classify", "/nonexistent/file.json"]).code, 2);
    assert_eq!(run(&["--help"]).code, 0);
}

#[test]
fn contradiction_degrees() {
    let r = run(&["contradiction", &data("half.json"), &data("half.json")]);
    assert_eq!(r.code, 0);
    assert!(r
        .stdout
        .starts_with("contradiction degree 1/2 (kleene-dienes"));
    let r = run(&[
        "contradiction",
        &data("crisp-a.json"),
        &data("crisp-not-a.json"),
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["contradiction"]["scalar"], "1");
    // Lukasiewicz on 1/2 and 1/2: min(1, 1 - 1/2 + 1/2) = 1.
    let r = run(&[
        "contradiction",
        &data("half.json"),
        &data("half.json"),
        "--implication",
        "lukasiewicz",
    ]);
    assert!(r.stdout.starts_with("contradiction degree 1 "));
    assert_eq!(
        run(&[
            "contradiction",
            &data("half.json"),
            &data("half.json"),
            "--implication",
            "nope"
        ])
        .code,
        2
    );
}

#[test]
fn iso_and_info() {
    let sq = data("square.json");
    let r = run(&["iso", &sq, &sq, "--format", "json"]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(
        v["isomorphisms"],
        serde_json::json!([[0, 1, 2, 3], [1, 0, 3, 2]])
    );
    assert_eq!(run(&["iso", &sq, &sq, "--mapping", "1,0,3,2"]).code, 0);
    assert_eq!(run(&["iso", &sq, &sq, "--mapping", "0,2,1,3"]).code, 1);
    assert_eq!(run(&["iso", &sq, &sq, "--mapping", "0,0,1,2"]).code, 1);
    assert_eq!(run(&["iso", &sq, &sq, "--mapping", "0,1,2,9"]).code, 2);
    assert_eq!(run(&["iso", &sq, &data("single.json")]).code, 1);
    assert_eq!(run(&["info", &sq, &sq, "--mapping", "1,0,3,2"]).code, 0);
    let r = run(&["info", &sq, &data("single.json"), "--mapping", "0,0,0,0"]);
    assert_eq!(r.code, 1);
    assert!(r.stdout.contains("CD became BI"));
}

#[test]
fn lattice_check_certifies_graded_powerset() {
    let r = run(&[
        "lattice-check",
        &data("graded-powerset.json"),
        "--format",
        "json",
    ]);
    assert_eq!(r.code, 0);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["boolean_algebra"], true);
    assert_eq!(v["de_morgan"], true);
    // An algebra file certifies its crisp powerset order.
    let r = run_with(
        &["lattice-check", "-"],
        Some(r#"{"atoms": ["p", "q", "r"]}"#),
        false,
    );
    assert_eq!(r.code, 0);
}

#[test]
fn fuzzy_classify_reads_both_diagram_kinds() {
    let r = run(&["fuzzy-classify", &data("fuzzy-square.json")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("LI (1/2, 1/3)"));
    let r = run(&["fuzzy-classify", &data("square.json"), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["cells"][0][3]["kind"], "CD");
    let r = run(&[
        "fuzzy-classify",
        &data("square.json"),
        "--tolerance",
        "1",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["tolerance"], "1");
    assert_eq!(v["cells"][0][3]["bi_implication"], true);
    assert_eq!(
        run(&["fuzzy-classify", &data("square.json"), "--tolerance", "x"]).code,
        2
    );
}

#[test]
fn category_check_is_seeded() {
    let a = run(&["category-check", "--seed", "1", "--chains", "15"]);
    let b = run(&["category-check", "--seed", "1", "--chains", "15"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert!(a.stdout.starts_with("seed 1\nchains sampled: 15"));
}

#[test]
fn dot_output() {
    let r = run(&["dot", &data("square.json")]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.starts_with("digraph \"square\" {"));
    assert!(r.stdout.contains("style=dashed"));
    assert_eq!(
        r.stdout,
        run(&["classify", &data("square.json"), "--format", "dot"]).stdout
    );
    assert_eq!(run(&["dot", &data("identity.json")]).code, 2);
}
