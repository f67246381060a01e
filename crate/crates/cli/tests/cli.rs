use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn ipf(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ipf"))
        .args(args)
        .env_remove("IPF_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

/// Compare against tests/golden/<name>; UPDATE_GOLDEN=1 rewrites the file.
fn golden(name: &str, got: &str) {
    let path = root().join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, got).unwrap();
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing {}", path.display()));
    assert_eq!(got, want, "output differs from {name}");
}

const PETERSEN: &str = "IheA@GUAo\n";

#[test]
fn solve() {
    let (code, out, _) = ipf(&["solve", "--stable"], PETERSEN);
    assert_eq!(code, 0);
    golden("solve.txt", &out);
    let (code, out, _) = ipf(&["solve", "--json", "--stable"], PETERSEN);
    assert_eq!(code, 0);
    golden("solve.json", &out);
}

#[test]
fn solve_out_of_budget() {
    let (code, out, _) = ipf(&["solve", "--budget", "1", "--stable"], PETERSEN);
    assert_eq!(code, 3);
    assert!(out.contains("budget exhausted"));
    let (code, _, _) = ipf(&["solve", "--stable"], "");
    assert_eq!(code, 0);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ipf"))
        .args(["solve", "--stable", "--input", root().join("tests/golden/petersen.g6").to_str().unwrap()])
        .env("IPF_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn construct() {
    let (code, out, _) = ipf(&["construct", "--method", "cubic", "--stable"], PETERSEN);
    assert_eq!(code, 0);
    assert!(out.contains("paths    3\n"));
    golden("construct.txt", &out);
    let (code, out, _) = ipf(&["construct", "--json", "--stable"], PETERSEN);
    assert_eq!(code, 0);
    golden("construct.json", &out);
}

#[test]
fn construct_rejects_wrong_method() {
    // K4 minus an edge is not cubic
    let (code, _, err) = ipf(&["construct", "--method", "cubic"], "Cz\n");
    assert_eq!(code, 1);
    assert!(err.contains("cubic"));
}

#[test]
fn verify() {
    let chorded = std::fs::read_to_string(root().join("tests/golden/chorded.json")).unwrap();
    let (code, out, _) = ipf(&["verify"], &chorded);
    assert_eq!(code, 2);
    assert!(out.contains("chord 0-2"));
    golden("verify_chorded.txt", &out);
    let (code, out, _) = ipf(&["verify", "--json"], r#"{"graph6":"C~","edges":[[0,1],[2,3]]}"#);
    assert_eq!(code, 0);
    golden("verify_ok.json", &out);
}

#[test]
fn generate() {
    let (code, out, _) = ipf(&["generate", "--family", "fig1", "--params", "n=16", "--format", "adjlist"], "");
    assert_eq!(code, 0);
    golden("generate_fig1.txt", &out);
    let (code, out, _) = ipf(&["generate", "--family", "odd_k_glued_tree", "--params", "k=3,h=2", "--json"], "");
    assert_eq!(code, 0);
    golden("generate_glued.json", &out);
    let (code, _, _) = ipf(&["generate", "--family", "nonsense"], "");
    assert_eq!(code, 1);
}

#[test]
fn census() {
    let input = root().join("../../data/cubic/cubic_10.g6");
    let input = input.to_str().unwrap();
    let (code, out, _) = ipf(&["census", "--input", input, "--jobs", "3", "--stable"], "");
    assert_eq!(code, 0);
    golden("census.txt", &out);
    let (code, out, _) = ipf(&["census", "--input", input, "--jobs", "1", "--json", "--stable"], "");
    assert_eq!(code, 0);
    golden("census.json", &out);
    let (code, out, err) = ipf(&["census", "--json"], "C~\n!!\n");
    assert_eq!(code, 1);
    assert!(err.contains("line 2"));
    assert!(out.contains(r#""n_to_max_rho":{"4":2}"#));
}

#[test]
fn bounds() {
    let (code, out, _) = ipf(&["bounds", "--ck", "4"], "");
    assert_eq!((code, out.as_str()), (0, "3/7\n"));
    let (code, out, _) = ipf(&["bounds", "--ck", "5", "--tree", "4,1", "--json"], "");
    assert_eq!(code, 0);
    golden("bounds.json", &out);
    let fig1 = ipf(&["generate", "--family", "fig1", "--params", "n=16"], "").1;
    let (code, out, _) = ipf(&["bounds", "--glue"], &fig1);
    assert_eq!(code, 0);
    assert!(out.ends_with("rho >= 6\n"));
    let (code, _, _) = ipf(&["bounds"], "");
    assert_eq!(code, 1);
}

#[test]
fn usage_errors() {
    assert_eq!(ipf(&[], "").0, 1);
    assert_eq!(ipf(&["construct", "--method", "greedy"], "").0, 1);
    assert_eq!(ipf(&["solve"], "not graph6 at all\n").0, 1);
}

#[test]
fn construct_output_verifies() {
    let mut text = String::new();
    for n in [8, 10, 12] {
        text += &std::fs::read_to_string(root().join(format!("../../data/cubic/cubic_{n:02}.g6"))).unwrap();
    }
    let (code, certs, _) = ipf(&["construct", "--json", "--stable"], &text);
    assert_eq!(code, 0);
    let (code, out, _) = ipf(&["verify"], &certs);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), text.lines().count());
    assert!(out.lines().all(|l| l.contains(": valid")));
}
