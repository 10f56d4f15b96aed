use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use domset::{
    bound_report, generate, parse_edgelist, run_sweep, solve_exact, CorpusSpec, Family,
    FamilyTemplate, ParamTriple, SolveOptions,
};
use serde_json::Value;
use tempfile::TempDir;

fn domset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_domset"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn write_graph(dir: &TempDir, name: &str, family: &[&str]) -> PathBuf {
    let path = dir.path().join(name);
    let mut args = vec!["gen"];
    args.extend_from_slice(family);
    args.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(code(&domset(&args)), 0);
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_is_canonical() {
    assert_eq!(
        stdout(&domset(&["gen", "cycle", "4"])),
        "4 4\n0 1\n0 3\n1 2\n2 3\n"
    );
    assert_eq!(
        stdout(&domset(&["gen", "complete", "3"])),
        "3 3\n0 1\n0 2\n1 2\n"
    );
}

#[test]
fn gen_random_is_reproducible() {
    let args = ["gen", "random_regular", "10", "3", "--seed", "7"];
    let a = domset(&args);
    let b = domset(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let g = parse_edgelist(&stdout(&a)).unwrap();
    assert_eq!(g.regularity(), Some(3));
    let direct = generate(&Family::RandomRegular { n: 10, d: 3 }, 7).unwrap();
    assert_eq!(g, direct);
}

#[test]
fn gen_rejects_infeasible_parameters() {
    let out = domset(&["gen", "random_regular", "5", "3"]);
    assert_eq!(code(&out), 2);
    assert!(!out.stderr.is_empty());
    assert_eq!(code(&domset(&["gen", "no_such_family", "4"])), 2);
}

#[test]
fn verify_examples() {
    let dir = TempDir::new().unwrap();
    let p4 = write_graph(&dir, "p4", &["path", "4"]);
    let c4 = write_graph(&dir, "c4", &["cycle", "4"]);

    let ok = domset(&[
        "verify",
        "--graph",
        p(&p4),
        "--set",
        "0,3",
        "--triple",
        "0,1,1",
    ]);
    assert_eq!(code(&ok), 0);

    let bad = domset(&[
        "verify",
        "--graph",
        p(&p4),
        "--set",
        "1",
        "--triple",
        "0,1,1",
    ]);
    assert_eq!(code(&bad), 1);
    let report: Value = serde_json::from_str(stdout(&bad).trim()).unwrap();
    assert_eq!(report["dominating"], false);
    let violations = report["violations"].as_array().unwrap();
    let vertices: Vec<u64> = violations
        .iter()
        .map(|v| v["vertex"].as_u64().unwrap())
        .collect();
    assert_eq!(vertices, vec![0, 3]);

    let empty = domset(&[
        "verify",
        "--graph",
        p(&c4),
        "--set",
        "",
        "--triple",
        "0,0,1",
    ]);
    assert_eq!(code(&empty), 0);

    let named = domset(&[
        "verify",
        "--graph",
        p(&p4),
        "--set",
        "0,3",
        "--triple",
        "restrained",
        "--json",
    ]);
    assert_eq!(code(&named), 0);
    let report: Value = serde_json::from_str(stdout(&named).trim()).unwrap();
    assert_eq!(report["dominating"], true);
}

#[test]
fn verify_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let p4 = write_graph(&dir, "p4", &["path", "4"]);
    assert_eq!(
        code(&domset(&[
            "verify",
            "--graph",
            p(&p4),
            "--set",
            "9",
            "--triple",
            "0,1,1"
        ])),
        2
    );
    assert_eq!(
        code(&domset(&[
            "verify",
            "--graph",
            p(&p4),
            "--set",
            "0",
            "--triple",
            "1,2"
        ])),
        2
    );
    let broken = dir.path().join("broken");
    std::fs::write(&broken, "3 2\n0 1\n").unwrap();
    assert_eq!(
        code(&domset(&[
            "verify",
            "--graph",
            p(&broken),
            "--set",
            "0",
            "--triple",
            "0,1,1"
        ])),
        2
    );
}

#[test]
fn bound_and_construct_on_k6() {
    let dir = TempDir::new().unwrap();
    let k6 = write_graph(&dir, "k6", &["complete", "6"]);

    let out = domset(&["bound", "--graph", p(&k6), "--triple", "1,2,1"]);
    assert_eq!(code(&out), 0);
    let report: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(report["lb_general"], 2);
    assert_eq!(report["ub_construct"], 2);
    let g = parse_edgelist(&std::fs::read_to_string(&k6).unwrap()).unwrap();
    let direct = bound_report(&g, ParamTriple::new(1, 2, 1)).to_json();
    assert_eq!(report, direct);

    let out = domset(&["construct", "--graph", p(&k6), "--triple", "1,2,1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap().split_whitespace().count(), 2);
    let c: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(c["part"], 1);
    assert_eq!(c["size"], 2);
    assert_eq!(c["valid"], true);
}

#[test]
fn construct_inapplicable_is_usage_error() {
    let dir = TempDir::new().unwrap();
    let c4 = write_graph(&dir, "c4", &["cycle", "4"]);
    assert_eq!(
        code(&domset(&[
            "construct",
            "--graph",
            p(&c4),
            "--triple",
            "1,2,1"
        ])),
        2
    );
    assert_eq!(
        code(&domset(&[
            "construct",
            "--graph",
            p(&c4),
            "--triple",
            "1,1,0"
        ])),
        2
    );
}

#[test]
fn solve_reports_infeasible_and_optimal() {
    let dir = TempDir::new().unwrap();
    let star = write_graph(&dir, "star", &["star", "4"]);
    let out = domset(&["solve", "--graph", p(&star), "--triple", "2,1,0"]);
    assert_eq!(code(&out), 0);
    let r: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(r["status"], "infeasible");
    assert_eq!(r["gamma"], Value::Null);

    let pet = write_graph(&dir, "pet", &["petersen"]);
    for extra in [&[][..], &["--no-bound-pruning"][..]] {
        let mut args = vec!["solve", "--graph", p(&pet), "--triple", "1,2,1"];
        args.extend_from_slice(extra);
        let out = domset(&args);
        assert_eq!(code(&out), 0);
        let r: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(r["status"], "optimal");
        let g = parse_edgelist(&std::fs::read_to_string(&pet).unwrap()).unwrap();
        let direct = solve_exact(&g, ParamTriple::new(1, 2, 1), SolveOptions::default());
        assert_eq!(r["gamma"], direct.gamma.unwrap());
        assert_eq!(
            r["witness"].as_array().unwrap().len(),
            direct.gamma.unwrap()
        );
    }
}

#[test]
fn solve_budget_exhaustion_exits_three() {
    let dir = TempDir::new().unwrap();
    let g = write_graph(&dir, "gnp", &["random_gnp", "40", "0.3", "--seed", "1"]);
    let out = domset(&[
        "solve",
        "--graph",
        p(&g),
        "--triple",
        "0,1,0",
        "--budget-nodes",
        "1",
        "--no-bound-pruning",
    ]);
    assert_eq!(code(&out), 3);
    let r: Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(r["status"], "budget_exceeded");
}

fn sweep_csv(args: &[&str], threads: &str) -> (i32, String) {
    let dir = TempDir::new().unwrap();
    let out_path = dir.path().join("out.csv");
    let mut full = vec!["sweep"];
    full.extend_from_slice(args);
    full.extend(["--out", p(&out_path)]);
    let out = Command::new(env!("CARGO_BIN_EXE_domset"))
        .args(&full)
        .env("DOMSET_THREADS", threads)
        .output()
        .unwrap();
    (code(&out), std::fs::read_to_string(out_path).unwrap())
}

fn column(csv: &str, name: &str) -> Vec<String> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = header.iter().position(|h| *h == name).unwrap();
    lines
        .map(|l| l.split(',').nth(idx).unwrap().to_string())
        .collect()
}

#[test]
fn sweep_cubic_matches_library() {
    let args = [
        "--families",
        "random_regular:3",
        "--sizes",
        "4,6,8,10",
        "--seeds",
        "0..3",
        "--triple",
        "1,2,1",
        "--triple",
        "0,1,1",
    ];
    let (status, csv) = sweep_csv(&args, "1");
    assert_eq!(status, 0);
    assert_eq!(csv.lines().count(), 1 + 4 * 3 * 2);
    assert!(column(&csv, "soundness_ok").iter().all(|v| v == "true"));
    assert!(column(&csv, "dominance_ok").iter().all(|v| v == "true"));
    assert_eq!(sweep_csv(&args, "4").1, csv);

    let spec = CorpusSpec {
        families: vec![FamilyTemplate::RandomRegular { d: 3 }],
        sizes: vec![4, 6, 8, 10],
        seeds: vec![0, 1, 2],
        triples: vec![ParamTriple::new(1, 2, 1), ParamTriple::new(0, 1, 1)],
        options: SolveOptions::default(),
    };
    assert_eq!(run_sweep(&spec, 1).to_csv(), csv);
}

#[test]
fn sweep_trees_and_complete() {
    let (status, csv) = sweep_csv(
        &[
            "--families",
            "random_tree",
            "--sizes",
            "2..=10",
            "--seeds",
            "0,1,2",
            "--triple",
            "1,1,1",
        ],
        "0",
    );
    assert_eq!(status, 0);
    assert_eq!(csv.lines().count(), 1 + 9 * 3);

    let (status, csv) = sweep_csv(
        &[
            "--families",
            "complete",
            "--sizes",
            "4..=9",
            "--triple",
            "1,2,1",
        ],
        "0",
    );
    assert_eq!(status, 0);
    assert!(column(&csv, "ub_tight").iter().all(|v| v == "true"));
    assert!(column(&csv, "lb_tight").iter().all(|v| v == "true"));
}

#[test]
fn sweep_rejects_bad_flags() {
    assert_eq!(
        code(&domset(&[
            "sweep",
            "--families",
            "dodecahedron",
            "--triple",
            "1,1,1"
        ])),
        2
    );
    assert_eq!(
        code(&domset(&[
            "sweep",
            "--families",
            "path",
            "--sizes",
            "a..b",
            "--triple",
            "1,1,1"
        ])),
        2
    );
    assert_eq!(
        code(&domset(&["sweep", "--families", "path", "--sizes", "4"])),
        2
    );
}
