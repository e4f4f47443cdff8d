use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn pproper(args: &[&str]) -> Run {
    let Output {
        status,
        stdout,
        stderr,
    } = Command::new(env!("CARGO_BIN_EXE_pproper"))
        .args(args)
        .output()
        .unwrap();
    Run {
        code: status.code().unwrap(),
        stdout: String::from_utf8(stdout).unwrap(),
        stderr: String::from_utf8(stderr).unwrap(),
    }
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const C4: &str = "0 1\n1 2\n2 3\n0 3\n";
const C3: &str = "0 1\n1 2\n0 2\n";
const PM_C4: &str = r#"{"0-1": [-1, 1], "1-2": [-1, 1], "2-3": [-1, 1], "0-3": [-1, 1]}"#;
const PM_C3: &str = r#"{"0-1": [-1, 1], "1-2": [-1, 1], "0-2": [-1, 1]}"#;

#[test]
fn solve_found_and_none() {
    let d = TempDir::new().unwrap();
    let g = write(&d, "c4.txt", C4);
    let l = write(&d, "c4.json", PM_C4);
    let out = d.path().join("lab.json");
    let r = pproper(&["solve", "--graph", s(&g), "--lists", s(&l), "--mode", "product", "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lab: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(lab.as_object().unwrap().len(), 4);
    let v = pproper(&["verify", "--graph", s(&g), "--lists", s(&l), "--labelling", s(&out)]);
    assert_eq!(v.code, 0);
    assert_eq!(v.stdout.trim(), "proper");

    let g3 = write(&d, "c3.txt", C3);
    let l3 = write(&d, "c3.json", PM_C3);
    let r = pproper(&["solve", "--graph", s(&g3), "--lists", s(&l3)]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("NONE"));
}

#[test]
fn garbage_graph_is_a_parse_error() {
    let d = TempDir::new().unwrap();
    let g = write(&d, "bad.txt", "0 1\nthree four\n");
    let l = write(&d, "l.json", "{}");
    let r = pproper(&["solve", "--graph", s(&g), "--lists", s(&l)]);
    assert_eq!(r.code, 4);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    let r = pproper(&["solve", "--graph", "/nonexistent/g.txt", "--lists", s(&l)]);
    assert_eq!(r.code, 4);
}

#[test]
fn verify_reports_conflicts_and_errors() {
    let d = TempDir::new().unwrap();
    let g = write(&d, "p2.txt", "0 1\n1 2\n");
    let l = write(&d, "l.json", r#"{"0-1": ["1", "2"], "1-2": ["3", "5"]}"#);
    let good = write(&d, "good.json", r#"{"0-1": "2", "1-2": "3"}"#);
    let bad = write(&d, "bad.json", r#"{"0-1": "1", "1-2": "5"}"#);
    let partial = write(&d, "partial.json", r#"{"0-1": "2"}"#);
    let foreign = write(&d, "foreign.json", r#"{"0-1": "7", "1-2": "3"}"#);
    let run = |lab: &Path| pproper(&["verify", "--graph", s(&g), "--lists", s(&l), "--labelling", s(lab)]);
    assert_eq!(run(&good).stdout.trim(), "proper");
    let r = run(&bad);
    assert_eq!(r.code, 1);
    assert_eq!(r.stdout.trim(), "conflict 1-2: 5 and 5");
    let r = run(&partial);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("1-2"), "{}", r.stderr);
    let r = run(&foreign);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("0-1"), "{}", r.stderr);
}

#[test]
fn construct_output_reverifies() {
    let d = TempDir::new().unwrap();
    let tree = write(&d, "tree.txt", "0 1\n1 2\n1 3\n3 4\n3 5\n5 6\n");
    let lists = write(
        &d,
        "tree.json",
        r#"{"0-1": ["2", "3", "1/2"], "1-2": ["-1", "2", "5"], "1-3": ["1", "2", "3"],
            "3-4": ["2", "3", "4"], "3-5": ["-2", "7/3", "1"], "5-6": ["1", "2", "-1"]}"#,
    );
    let out = d.path().join("tree_lab.json");
    let r = pproper(&["construct", "--graph", s(&tree), "--lists", s(&lists), "--algorithm", "tree", "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = pproper(&["verify", "--graph", s(&tree), "--lists", s(&lists), "--labelling", s(&out)]);
    assert_eq!(v.code, 0, "{}", v.stdout);

    let k4 = write(&d, "k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    let four = r#"["1", "2", "3", "-1"]"#;
    let keys = ["0-1", "0-2", "0-3", "1-2", "1-3", "2-3"];
    let text = format!(
        "{{{}}}",
        keys.iter().map(|k| format!("\"{k}\": {four}")).collect::<Vec<_>>().join(", ")
    );
    let l4 = write(&d, "k4.json", &text);
    let out = d.path().join("k4_lab.json");
    let r = pproper(&["construct", "--graph", s(&k4), "--lists", s(&l4), "--algorithm", "subcubic", "--out", s(&out)]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v = pproper(&["verify", "--graph", s(&k4), "--lists", s(&l4), "--labelling", s(&out)]);
    assert_eq!(v.code, 0);
}

#[test]
fn construct_preconditions() {
    let d = TempDir::new().unwrap();
    let c5 = write(&d, "c5.txt", "0 1\n1 2\n2 3\n3 4\n0 4\n");
    let l = write(
        &d,
        "c5.json",
        r#"{"0-1": [1, 2], "1-2": [1, 2], "2-3": [1, 2], "3-4": [1, 2], "0-4": [1, 2]}"#,
    );
    let r = pproper(&["construct", "--graph", s(&c5), "--lists", s(&l), "--algorithm", "cycle"]);
    assert_eq!(r.code, 2, "{}", r.stderr);
    let r = pproper(&["construct", "--graph", s(&c5), "--lists", s(&l), "--algorithm", "planar16"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("assume-planar"));
    let r = pproper(&[
        "construct", "--graph", s(&c5), "--lists", s(&l), "--algorithm", "planar16", "--assume-planar",
    ]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("girth 5"), "{}", r.stderr);
}

#[test]
fn certify_examples() {
    let d = TempDir::new().unwrap();
    let p2 = write(&d, "p2.txt", "0 1\n1 2\n");
    let r = pproper(&["certify", "--graph", s(&p2), "--mode", "product", "--k", "3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let c: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(c["exponents"], serde_json::json!([2, 2]));
    assert_eq!(c["coefficient"], "-1");
    let r = pproper(&["certify", "--graph", s(&p2), "--mode", "sum", "--k", "1"]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("ABSENT"));
    let long: String = (0..17).map(|i| format!("{i} {}\n", i + 1)).collect();
    let p17 = write(&d, "p17.txt", &long);
    let r = pproper(&["certify", "--graph", s(&p17), "--k", "4"]);
    assert_eq!(r.code, 3, "{}", r.stderr);
}

#[test]
fn adversary_commands() {
    let r = pproper(&["adversary", "--kind", "bad-tree8", "--a", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let w: Value = serde_json::from_str(&r.stdout).unwrap();
    assert!(w["claim"].as_str().unwrap().contains("T_8"));
    let r = pproper(&["adversary", "--kind", "bad-odd-cycle", "--n", "5", "--a", "1", "--b", "-2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let r = pproper(&["adversary", "--kind", "bad-odd-cycle", "--n", "8", "--a", "1", "--b", "2"]);
    assert_eq!(r.code, 1);
    let r = pproper(&["adversary", "--kind", "bad-path", "--n", "9", "--a", "2", "--b", "3"]);
    assert_eq!(r.code, 2);
    let r = pproper(&["adversary", "--kind", "all-ones"]);
    assert_eq!(r.code, 2);
}

#[test]
fn survey_tables() {
    let r = pproper(&["survey", "--family", "cycle", "--n-min", "3", "--n-max", "12", "--k", "2"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let feasible: Vec<usize> = r
        .stdout
        .lines()
        .filter(|l| l.contains("FEASIBLE") && !l.contains("INFEASIBLE"))
        .map(|l| l.split("n=").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(feasible, vec![4, 8, 12]);
    let r = pproper(&["survey", "--family", "path", "--n-min", "2", "--n-max", "9", "--k", "2"]);
    let feasible: Vec<usize> = r
        .stdout
        .lines()
        .filter(|l| !l.contains("INFEASIBLE"))
        .map(|l| l.split("n=").nth(1).unwrap().split(' ').next().unwrap().parse().unwrap())
        .collect();
    assert_eq!(feasible, vec![2, 3, 4, 6, 8]);
    let r = pproper(&["survey", "--family", "path", "--n-min", "5", "--n-max", "5", "--k", "3"]);
    assert!(r.stdout.contains("n=5 k=3: FEASIBLE"), "{}", r.stdout);
}

#[test]
fn bounds_table() {
    let r = pproper(&["bounds"]);
    assert_eq!(r.code, 0);
    assert!(r.stdout.contains("planar"));
    assert!(r.stdout.contains("13"));
}
