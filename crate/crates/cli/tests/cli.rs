use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_copsrobber"));
    c.env_remove("COPSROBBER_STATE_BUDGET");
    c
}

fn run(dir: &Path, args: &[&str]) -> Output {
    bin().current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn gen(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", name]);
    let o = run(dir, &full);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    dir.join(name)
}

#[test]
fn gen_kinds() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let grid = std::fs::read_to_string(gen(d, "g.g", &["--kind", "grid", "--m", "3", "--n", "3"])).unwrap();
    assert!(grid.starts_with("9 12\n"));
    let tree = std::fs::read_to_string(gen(d, "t.g", &["--kind", "random-tree", "--n", "7", "--seed", "5"])).unwrap();
    assert!(tree.starts_with("7 6\n"));
    gen(d, "p4.g", &["--kind", "path", "--n", "4"]);
    gen(d, "p3.g", &["--kind", "path", "--n", "3"]);
    let prod = std::fs::read_to_string(gen(d, "x.g", &["--kind", "product", "--a", "p4.g", "--b", "p3.g"])).unwrap();
    assert!(prod.starts_with("12 17\n"));
    assert_eq!(run(d, &["gen", "--kind", "grid", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(d, &["gen", "--kind", "path", "--n", "1"]).status.code(), Some(2));
}

#[test]
fn solve_examples() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    gen(d, "grid.g", &["--kind", "grid", "--m", "3", "--n", "3"]);
    gen(d, "c4.g", &["--kind", "cycle", "--n", "4"]);
    gen(d, "p4.g", &["--kind", "path", "--n", "4"]);
    let o = run(d, &["solve", "--graph", "grid.g", "--cops", "2", "--dump", "table.txt"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("capt=2\n"));
    assert!(stdout(&o).contains("central "));
    let table = std::fs::read_to_string(d.join("table.txt")).unwrap();
    assert!(table.lines().all(|l| l.split(' ').count() == 4));
    assert!(stdout(&run(d, &["solve", "--graph", "c4.g", "--cops", "1"])).contains("ESCAPE\n"));
    let o = run(d, &["solve", "--graph", "p4.g", "--cops", "1", "--order", "cops-first"]);
    assert!(stdout(&o).contains("capt=2\ncentral 1\ncentral 2\n"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    gen(d, "grid.g", &["--kind", "grid", "--m", "3", "--n", "3"]);
    std::fs::write(d.join("bad.g"), "3 1\n0 7\n").unwrap();
    assert_eq!(run(d, &["solve", "--graph", "bad.g"]).status.code(), Some(2));
    assert_eq!(run(d, &["solve", "--graph", "missing.g"]).status.code(), Some(2));
    assert_eq!(run(d, &["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(d, &["solve", "--graph", "grid.g", "--cops", "2", "--budget", "10"]).status.code(), Some(3));
    let o = bin()
        .current_dir(d)
        .env("COPSROBBER_STATE_BUDGET", "10")
        .args(["solve", "--graph", "grid.g", "--cops", "2"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn simulate_examples() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    gen(d, "p4.g", &["--kind", "path", "--n", "4"]);
    gen(d, "p3.g", &["--kind", "path", "--n", "3"]);
    gen(d, "p5.g", &["--kind", "path", "--n", "5"]);
    let o = run(d, &["simulate", "--t1", "p4.g", "--t2", "p3.g", "--cops", "lemma2", "--robber", "optimal"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("CAPTURED 2\n"), "{}", stdout(&o));
    let o = run(d, &["simulate", "--graph", "p5.g", "--cops", "thm1", "--robber", "optimal", "--out", "t.trace"]);
    assert_eq!(stdout(&o), "CAPTURED 2\n");
    assert!(std::fs::read_to_string(d.join("t.trace")).unwrap().starts_with("#graph p5.g\n"));
    let args = ["simulate", "--graph", "p5.g", "--cops", "random", "--robber", "random", "--seed", "9"];
    assert_eq!(stdout(&run(d, &args)), stdout(&run(d, &args)));
    // strategy bound to a product, given a plain graph
    assert_eq!(run(d, &["simulate", "--graph", "p5.g", "--cops", "lemma2"]).status.code(), Some(2));
    assert_eq!(run(d, &["simulate", "--graph", "p5.g", "--cops", "thm1", "--k", "2"]).status.code(), Some(2));
}

#[test]
fn verify_suites_pass() {
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    for args in [
        vec!["--suite", "corollary-grid", "--max", "5"],
        vec!["--suite", "theorem2", "--seed", "42", "--count", "50", "--max-size", "7"],
        vec!["--suite", "move-order", "--seed", "1", "--count", "20"],
        vec!["--suite", "sandwich", "--count", "20"],
        vec!["--suite", "lemma3", "--count", "10", "--max", "4"],
        vec!["--suite", "three-trees"],
        vec!["--suite", "thm1", "--max-size", "6", "--count", "20"],
    ] {
        let mut full = vec!["verify"];
        full.extend(args.iter().copied());
        let o = run(d, &full);
        assert!(o.status.success(), "{args:?}: {}", stdout(&o));
        let out = stdout(&o);
        assert!(out.contains(" fail=0"), "{args:?}");
        assert!(out.lines().filter(|l| l.starts_with("CLAIM ")).all(|l| l.ends_with(" PASS") || l.ends_with(" VACUOUS")));
    }
}

#[test]
fn verify_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let args = ["verify", "--suite", "theorem2", "--seed", "7", "--count", "8"];
    assert_eq!(stdout(&run(dir.path(), &args)), stdout(&run(dir.path(), &args)));
}

#[test]
fn failures_leave_counterexamples() {
    // roles frozen at the first cop move: the known failing variant
    let dir = TempDir::new().unwrap();
    let d = dir.path();
    let o = run(d, &["verify", "--suite", "theorem2", "--count", "10", "--orientation", "fixed", "--out", "cx"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let line = out.lines().find(|l| l.starts_with("COUNTEREXAMPLE ")).expect("a counterexample is listed");
    let graph = line.rsplit(' ').next().unwrap();
    assert!(d.join(graph).exists());
    assert!(d.join(graph.replace(".g", ".trace")).exists());
    // the persisted graph and trace are usable input again
    let o = run(d, &["solve", "--graph", graph, "--cops", "2"]);
    assert!(o.status.success());
}
