use std::path::PathBuf;
use std::process::Command;

use homrel::cli::run_with;
use homrel::document::{DocKind, TreeDocument};
use homrel::{gen, io, oracle, relation};

const P4: &str = "4 3\n0 1\n1 2\n2 3\n";
const K: &str = "4\n0 1 2 3\n1 0 2 2\n1 1 0 2\n1 1 2 0\n";

fn write_input(name: &str, text: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("cli-golden");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut argv = vec!["homrel"];
    argv.extend_from_slice(args);
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_ok(args: &[&str]) -> String {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    out
}

#[test]
fn decompose_p4_golden() {
    let path = write_input("p4.txt", P4);
    let expected = "\
homrel-tree 1
algorithm good
input sha256:4e79e0ded6808ee2c255ac79e5c9cf93a61e5a86ab549a6e74911ef9ef114119
tree
prime
  leaf 0
  leaf 1
  leaf 2
  leaf 3
";
    assert_eq!(run_ok(&["decompose", &path, "--algo", "good"]), expected);
}

#[test]
fn decompose_uses_labels() {
    let path = write_input("p4-labels.txt", P4);
    let out = run_ok(&["decompose", &path, "--labels", "a,b,c,d", "--defensive"]);
    let doc = TreeDocument::parse(&out).unwrap();
    assert_eq!(doc.root.kind, DocKind::Prime);
    let leaves: Vec<DocKind> = doc.root.children.iter().map(|c| c.kind.clone()).collect();
    let names = ["a", "b", "c", "d"].map(|s| DocKind::Leaf(s.into()));
    assert_eq!(leaves, names);
}

#[test]
fn check_relation_k_golden() {
    let path = write_input("k.txt", K);
    let out = run_ok(&["check", &path, "--input", "relation", "--labels", "x,y,s,t"]);
    let expected = "\
weakly_graphic=true
weakly_digraphic=true
modular_quotient=false exact=true module=x,y members=x,y pair=s,t
local_congruence=3
";
    assert_eq!(out, expected);
}

#[test]
fn oracle_golden() {
    let path = write_input("p4-oracle.txt", P4);
    let out = run_ok(&["oracle", &path]);
    assert!(out.starts_with("modules=5\nstrong=5\nprime=true\nhomrel-tree 1\nalgorithm oracle\n"));
}

#[test]
fn splitters_golden() {
    let path = write_input("p4-split.txt", P4);
    let out = run_ok(&["splitters", &path, "--subset", "0,1"]);
    assert_eq!(out, "subset=0,1\nsplitters=2\ncount=1\nmodule=false\n");
    let out = run_ok(&["splitters", &path, "--subset", "1,2"]);
    assert_eq!(out, "subset=1,2\nsplitters=0,3\ncount=2\nmodule=false\n");
}

#[test]
fn factperm_with_oracle_order_matches_strong_enum() {
    for seed in 0..20 {
        let g = gen::random_digraph(8, 0.4, seed);
        let text = io::write_digraph(&g, false);
        let path = write_input(&format!("d{seed}.txt"), &text);
        let report = oracle::all_modules(&relation::from_digraph(&g)).unwrap();
        let perm: Vec<String> = report.tree.leaf_order().iter().map(|e| e.to_string()).collect();
        let perm = perm.join(",");
        let fp = run_ok(&["decompose", &path, "--input", "digraph", "--algo", "factperm", "--perm", &perm, "--defensive"]);
        let se = run_ok(&["decompose", &path, "--input", "digraph", "--algo", "strong-enum"]);
        let good = run_ok(&["decompose", &path, "--input", "digraph", "--algo", "good"]);
        let sets = |s: &str| TreeDocument::parse(s).unwrap().module_sets();
        assert_eq!(sets(&fp), sets(&se));
        assert_eq!(sets(&good), sets(&se));
    }
}

#[test]
fn tournaments_need_no_permutation() {
    let text = run_ok(&["gen", "tournament", "--n", "9", "--seed", "3"]);
    let path = write_input("t9.txt", &text);
    let fp = run_ok(&["decompose", &path, "--input", "tournament", "--algo", "factperm"]);
    let good = run_ok(&["decompose", &path, "--input", "tournament"]);
    assert_eq!(TreeDocument::parse(&fp).unwrap().module_sets(), TreeDocument::parse(&good).unwrap().module_sets());
    let (code, _, err) = run(&["decompose", &path, "--input", "digraph", "--algo", "factperm"]);
    assert_eq!(code, 2);
    assert!(err.contains("--perm"));
}

#[test]
fn recognize_writes_graph() {
    let g = gen::random_graph(7, 0.4, 11);
    let path = write_input("rel7.txt", &io::write_relation(&relation::from_digraph(&g)));
    let out_path = write_input("rel7-graph.txt", "");
    let out = run_ok(&["recognize", &path, "--input", "relation", "--output", &out_path]);
    assert_eq!(out, "graphic=true\ntournamental=false\n");
    let back = io::parse_digraph(&std::fs::read_to_string(&out_path).unwrap(), true).unwrap();
    assert_eq!(relation::from_digraph(&back), relation::from_digraph(&g));

    let k = write_input("k-rec.txt", K);
    assert_eq!(run_ok(&["recognize", &k, "--input", "relation"]), "graphic=false\ntournamental=false\n");
}

#[test]
fn output_is_deterministic() {
    let a = run_ok(&["gen", "two-structure", "--n", "7", "--colors", "2", "--seed", "5"]);
    assert_eq!(a, run_ok(&["gen", "two-structure", "--n", "7", "--colors", "2", "--seed", "5"]));
    let path = write_input("ts7.txt", &a);
    let first = run_ok(&["decompose", &path, "--input", "two-structure"]);
    assert_eq!(first, run_ok(&["decompose", &path, "--input", "two-structure"]));
}

#[test]
fn exit_codes() {
    let k = write_input("k-exit.txt", K);
    let bad = write_input("bad.txt", "3 1\n0 7\n");
    assert_eq!(run(&["decompose"]).0, 1);
    assert_eq!(run(&["decompose", &k, "--algo", "fastest"]).0, 1);
    let (code, _, err) = run(&["decompose", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"));
    assert_eq!(run(&["decompose", &k, "--input", "relation", "--defensive"]).0, 3);
    assert_eq!(run(&["decompose", &k, "--input", "relation", "--labels", "x,y"]).0, 2);
    let big = write_input("big.txt", &io::write_digraph(&gen::random_graph(20, 0.5, 1), true));
    let (code, _, err) = run(&["oracle", &big]);
    assert_eq!(code, 2);
    assert!(err.contains("cap"));
}

#[test]
fn binary_runs() {
    let path = write_input("p4-bin.txt", P4);
    let out = Command::new(env!("CARGO_BIN_EXE_homrel")).args(["decompose", &path]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("\nprime\n"));
    let out = Command::new(env!("CARGO_BIN_EXE_homrel")).arg("nonsense").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}
