use std::process::{Command, Output};

use peterson_core::quantum::{Grassmannian, QClass};
use peterson_core::shapes::Partition;

fn peterson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_peterson")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = peterson(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn qprod_examples() {
    let both = stdout(&["qprod", "--m", "1", "--n", "3", "--lhs", "2", "--rhs", "2", "--route", "both"]);
    assert_eq!(both.trim(), "q*s[1]  MATCH");
    assert_eq!(stdout(&["qprod", "--m", "2", "--n", "4", "--lhs", "0", "--rhs", "2,1"]).trim(), "s[2,1]");
    assert_eq!(stdout(&["qprod", "--m", "2", "--n", "4", "--lhs", "2,2", "--rhs", "2,2"]).trim(), "q^2");
    let affine = stdout(&["qprod", "--m", "2", "--n", "4", "--lhs", "2,2", "--rhs", "2,2", "--route", "affine"]);
    assert_eq!(affine.trim(), "q^2");
}

#[test]
fn qprod_json_round_trips() {
    let g = Grassmannian::new(2, 5).unwrap();
    let text = stdout(&["qprod", "--m", "2", "--n", "5", "--lhs", "3,2", "--rhs", "2,1", "--format", "json"]);
    let parsed = QClass::from_json(g, text.trim()).unwrap();
    let direct = g.schubert_product(&Partition::parse("3,2").unwrap(), &Partition::parse("2,1").unwrap()).unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn qprod_trace_emits_json_lines() {
    let out = peterson(&["qprod", "--m", "1", "--n", "3", "--lhs", "2", "--rhs", "1", "--route", "affine", "--trace"]);
    assert!(out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    let stages: Vec<String> = err
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap()["stage"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(stages.first().map(String::as_str), Some("lift"));
    assert_eq!(stages.last().map(String::as_str), Some("result"));
}

#[test]
fn tables() {
    let gr13 = stdout(&["table", "--m", "1", "--n", "3"]);
    assert!(gr13.contains("s[1] * s[1] = s[2]"));
    assert!(gr13.contains("s[1] * s[2] = q"));
    assert!(gr13.contains("s[2] * s[2] = q*s[1]"));
    assert!(gr13.contains("1 * s[2] = s[2]"));
    let gr12 = stdout(&["table", "--m", "1", "--n", "2", "--format", "csv"]);
    assert_eq!(gr12, "lhs,rhs,shape,qdeg,coeff\n0,0,0,0,1\n0,1,1,0,1\n1,1,0,1,1\n");
}

#[test]
fn csv_rows_are_sorted() {
    let csv = stdout(&["table", "--m", "2", "--n", "5", "--format", "csv"]);
    let mut reader = csv::Reader::from_reader(csv.as_bytes());
    let parse = |s: &str| -> Vec<usize> {
        if s == "0" { vec![] } else { s.split(',').map(|x| x.parse().unwrap()).collect() }
    };
    let rows: Vec<(Vec<usize>, Vec<usize>, i64, Vec<usize>)> = reader
        .records()
        .map(|r| {
            let r = r.unwrap();
            (parse(&r[0]), parse(&r[1]), r[3].parse().unwrap(), parse(&r[2]))
        })
        .collect();
    let mut sorted = rows.clone();
    sorted.sort();
    assert_eq!(rows, sorted);
    assert!(!rows.is_empty());
}

#[test]
fn kschur_and_bijections() {
    assert_eq!(stdout(&["kschur", "--n", "5", "--shape", "4,3,1,1"]).trim(), "h4*h3*(h1^2 - h2)");
    let nc = stdout(&["kschur", "--n", "5", "--shape", "1,1", "--noncommutative"]);
    assert_eq!(nc.lines().nth(1).unwrap().matches("A_").count(), 10);
    for (from, value) in [("kbounded", "2,1,1"), ("core", "3,1,1"), ("word", "2,1,3,0")] {
        let out = stdout(&["bij", "--n", "4", "--from", from, "--value", value]);
        assert!(out.contains("kbounded: 2,1,1"), "{out}");
        assert!(out.contains("core: 3,1,1"), "{out}");
        assert!(out.contains("word: s_{2130}"), "{out}");
    }
}

#[test]
fn parabolic_membership() {
    assert_eq!(stdout(&["jp", "--m", "1", "--n", "3", "--word", "1,0"]).trim(), "NOT in S~_n^P");
    assert_eq!(stdout(&["jp", "--m", "1", "--n", "3", "--word", "1,2,0"]).trim(), "in S~_n^P");
    let window = stdout(&["jp", "--m", "1", "--n", "3", "--word", "[-2,2,6]"]);
    assert!(window.trim().ends_with("in S~_n^P"));
}

#[test]
fn dualities() {
    let sd = stdout(&["duality", "--m", "5", "--n", "9", "--shape", "3,2,2,1,1", "--map", "strange"]);
    assert_eq!(sd.trim(), "q^-2*s[4,3,1,1] in Gr(5,9)");
    let t = stdout(&["duality", "--m", "2", "--n", "5", "--shape", "3,1", "--map", "transpose"]);
    assert_eq!(t.trim(), "s[2,1,1] in Gr(3,5)");
}

#[test]
fn exit_codes() {
    assert_eq!(peterson(&["qprod", "--m", "1"]).status.code(), Some(1));
    assert_eq!(peterson(&["bogus"]).status.code(), Some(1));
    assert_eq!(peterson(&["--help"]).status.code(), Some(0));
    assert_eq!(peterson(&["qprod", "--m", "1", "--n", "3", "--lhs", "3", "--rhs", "0"]).status.code(), Some(1));
    assert_eq!(peterson(&["jp", "--m", "1", "--n", "3", "--word", "1,1"]).status.code(), Some(1));
}

#[test]
fn verify_small_depth() {
    let out = Command::new(env!("CARGO_BIN_EXE_peterson"))
        .args(["verify", "--max-n", "3"])
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 9, "{text}");
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn alcove_svg() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a.svg");
    let p = path.to_str().unwrap();
    stdout(&["alcoves", "--radius", "0", "--out", p]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches("<polygon").count(), 1);

    stdout(&["alcoves", "--radius", "6", "--m", "1", "--highlight", "jp", "--out", p]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="jp-grassmannian""#).count(), 7);
    for label in ["0", "20", "120", "0120", "20120", "120120"] {
        let line = svg.lines().find(|l| l.contains(&format!("<title>{label}</title>"))).unwrap();
        assert!(line.contains("jp-grassmannian"), "{label}");
    }
    let s10 = svg.lines().find(|l| l.contains("<title>10</title>")).unwrap();
    assert!(s10.contains(r#"class="outside""#));

    stdout(&["alcoves", "--radius", "6", "--m", "2", "--out", p]);
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="jp-grassmannian""#).count(), 7);
    assert_eq!(peterson(&["alcoves", "--n", "4", "--out", p]).status.code(), Some(1));
}
