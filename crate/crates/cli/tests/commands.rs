use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn startrans(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_startrans"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).to_string_lossy().into_owned()
}

fn write(dir: &TempDir, name: &str, contents: &str) -> String {
    let p = path(dir, name);
    fs::write(&p, contents).unwrap();
    p
}

#[test]
fn construct_writes_graph_and_generators() {
    let dir = TempDir::new().unwrap();
    let (graph, gens) = (path(&dir, "o4.txt"), path(&dir, "o4.gens"));
    let out = startrans(&["construct", "odd", "4", "-o", &graph, "--gens", &gens]);
    assert!(out.status.success());
    let text = fs::read_to_string(&graph).unwrap();
    assert!(text.lines().any(|l| l == "n 35"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 70);
    assert!(fs::read_to_string(&gens).unwrap().starts_with("d 35"));

    let out = startrans(&["construct", "cycle", "5"]);
    assert!(out.status.success());
    assert!(stdout(&out).lines().any(|l| l == "n 5"));
}

#[test]
fn construct_rejects_bad_input() {
    let out = startrans(&["construct", "pg", "5"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported q"));
    assert_eq!(startrans(&["construct", "moebius", "3"]).status.code(), Some(1));
    assert_eq!(startrans(&["construct", "cycle"]).status.code(), Some(1));
    assert_eq!(startrans(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(startrans(&["--help"]).status.code(), Some(0));
}

#[test]
fn analyze_petersen_json() {
    let dir = TempDir::new().unwrap();
    let (graph, gens) = (path(&dir, "p.txt"), path(&dir, "p.gens"));
    assert!(startrans(&["construct", "odd", "3", "-o", &graph, "--gens", &gens]).status.success());
    for extra in [vec![], vec!["--group", gens.as_str()]] {
        let mut args = vec!["analyze", graph.as_str(), "--report", "json"];
        args.extend(extra);
        let out = startrans(&args);
        assert_eq!(out.status.code(), Some(0));
        let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["group_order"], "120");
        assert_eq!(v["star_transitive"], true);
        assert_eq!(v["stedge_transitive"], true);
        assert_eq!(v["s_transitive"], 3);
        assert_eq!(v["theorem_case"]["kind"], "vertex-transitive");
        assert_eq!(v["theorem_case"]["case"], 1);
    }
}

#[test]
fn analyze_spider_text() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "t3.txt");
    assert!(startrans(&["construct", "spider", "3", "-o", &graph]).status.success());
    let out = startrans(&["analyze", &graph]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("star-transitive: false"));
    assert!(text.contains("edge-star-transitive: true"));
}

#[test]
fn analyze_rejects_non_automorphism() {
    let dir = TempDir::new().unwrap();
    let graph = write(&dir, "c5.txt", "n 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n");
    let gens = write(&dir, "bad.gens", "d 5\np 2 1 0 3 4\n");
    let out = startrans(&["analyze", &graph, "--group", &gens]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not an automorphism"));
    let broken = write(&dir, "broken.txt", "n 3\ne 0 7\n");
    assert_eq!(startrans(&["analyze", &broken]).status.code(), Some(1));
    let missing = dir.path().join("absent.txt");
    assert!(!Path::new(&missing).exists());
    assert_eq!(startrans(&["analyze", &missing.to_string_lossy()]).status.code(), Some(1));
}

#[test]
fn autgroup_prints_order_and_generators() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "h.txt");
    assert!(startrans(&["construct", "pg", "2", "-o", &graph]).status.success());
    let out = startrans(&["autgroup", &graph]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("# order 336"));
    assert!(text.lines().any(|l| l == "d 14"));
}

#[test]
fn sabidussi_coset_graph_is_k4() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "s4.gens", "d 4\np 1 0 2 3\np 1 2 3 0\n");
    let h = write(&dir, "s3.gens", "d 4\np 1 0 2 3\np 1 2 0 3\n");
    let out_path = path(&dir, "k4.txt");
    let out = startrans(&["cosetgraph", "sabidussi", "--group", &g, "--subgroup", &h, "--element", "0 1 3 2", "-o", &out_path]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = fs::read_to_string(&out_path).unwrap();
    assert!(text.lines().any(|l| l == "n 4"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 6);

    let bad = startrans(&["cosetgraph", "sabidussi", "--group", &g, "--subgroup", &h, "--element", "0 1 2"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn bipartite_coset_graph() {
    // S_3 with L = <(0 1)> and R = <(1 2)> gives a 6-cycle
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "s3.gens", "d 3\np 1 0 2\np 1 2 0\n");
    let l = write(&dir, "l.gens", "d 3\np 1 0 2\n");
    let r = write(&dir, "r.gens", "d 3\np 0 2 1\n");
    let out = startrans(&["cosetgraph", "bipartite", "--group", &g, "--left", &l, "--right", &r]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "n 6"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 6);
}

#[test]
fn verify_suites() {
    let out = startrans(&["verify", "small-valency"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(!text.contains("FAIL"));
    assert!(text.contains("PASS [small-valency] C_12"));

    let out = startrans(&["verify", "vertex-transitive"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("PASS").count(), 4);

    let out = startrans(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown suite"));
}

#[test]
fn output_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let graph = path(&dir, "gq.txt");
    assert!(startrans(&["construct", "gq", "-o", &graph]).status.success());
    let a = startrans(&["analyze", &graph, "--report", "json"]);
    let b = startrans(&["analyze", &graph, "--report", "json"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
