//! End-to-end tests driving the compiled binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use stallings::io::write_subgroup;
use stallings::{
    gamma_base, kernel_of_finite_quotient, theorem_pair, Alphabet, Permutation, Subgroup, Word,
};
use tempfile::TempDir;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stallings"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn write_sg(dir: &Path, name: &str, h: &Subgroup) -> PathBuf {
    let path = dir.join(name);
    fs::write(&path, write_subgroup(h).expect("serializable")).expect("write file");
    path
}

fn ab() -> Alphabet {
    Alphabet::from_chars("ab").unwrap()
}

fn kernel(p: usize) -> Subgroup {
    kernel_of_finite_quotient(&ab(), &[Permutation::cycle(p), Permutation::cycle(p)]).unwrap()
}

fn cyclic(word: &str) -> Subgroup {
    let al = ab();
    let w = Word::parse(&al, word).unwrap();
    Subgroup::from_generators(al, &[w])
}

#[test]
fn rank_text_and_json() {
    let dir = TempDir::new().unwrap();
    let rose = write_sg(dir.path(), "rose.sg", &Subgroup::full(ab()));
    let rose = rose.to_str().unwrap();

    let out = run(&["rank", "--subgroup", rose]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "rank: 2\nreduced rank: 1\n");

    let out = run(&["rank", "--subgroup", rose, "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["rank"], 2);
    assert_eq!(v["reduced_rank"], 1);
}

#[test]
fn verify_theorem_reports_the_failed_inequality_and_exits_zero() {
    let out = run(&["verify-theorem"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("r1: 3"));
    assert!(text.contains("r2: 5"));
    assert!(text.contains("r_meet: 8"));
    assert!(text.contains("r_join: 2"));
    assert!(text.contains("16 > 15: inequality fails"));
    assert!(text.contains("double cosets: 1"));
    assert!(text.contains("degree-transfer certificate: holds (16 witnesses)"));
    assert!(text.contains("congruence certificate: holds (moduli 7 and 11)"));
}

#[test]
fn verify_theorem_json_schema_is_stable() {
    let out = run(&["verify-theorem", "--json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let obj = v.as_object().unwrap();
    let mut keys: Vec<&str> = obj.keys().map(|k| k.as_str()).collect();
    keys.sort_unstable();
    assert_eq!(
        keys,
        ["certificates", "holds", "lhs", "r1", "r2", "r_join", "r_meet", "rhs"]
    );
    assert_eq!(v["r1"], 3);
    assert_eq!(v["r2"], 5);
    assert_eq!(v["r_meet"], 8);
    assert_eq!(v["r_join"], 2);
    assert_eq!(v["lhs"], 16);
    assert_eq!(v["rhs"], 15);
    assert_eq!(v["holds"], false);
    assert_eq!(v["certificates"]["c1"]["holds"], true);
    assert_eq!(v["certificates"]["c1"]["witnesses"], 16);
    assert_eq!(v["certificates"]["c2"]["certified"], true);
    assert_eq!(v["certificates"]["c2"]["m1"], 7);
    assert_eq!(v["certificates"]["c2"]["m2"], 11);
}

#[test]
fn im_check_exit_code_tracks_the_verdict() {
    let dir = TempDir::new().unwrap();
    let (h1, h2) = theorem_pair();
    let f1 = write_sg(dir.path(), "h1.sg", &h1);
    let f2 = write_sg(dir.path(), "h2.sg", &h2);
    let out = run(&[
        "im-check",
        "--subgroup",
        f1.to_str().unwrap(),
        "--subgroup",
        f2.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout_of(&out).contains("16 > 15: inequality fails"));

    let a = write_sg(
        dir.path(),
        "a.sg",
        &cyclic("a"),
    );
    let b = write_sg(
        dir.path(),
        "b.sg",
        &cyclic("b"),
    );
    let out = run(&[
        "im-check",
        "--subgroup",
        a.to_str().unwrap(),
        "--subgroup",
        b.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout_of(&out).contains("0 <= 0: inequality holds"));
}

#[test]
fn index_with_one_and_two_files() {
    let dir = TempDir::new().unwrap();
    let rose = write_sg(dir.path(), "rose.sg", &Subgroup::full(ab()));
    let k2 = write_sg(dir.path(), "k2.sg", &kernel(2));

    let out = run(&["index", "--subgroup", k2.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "index: 2\n");

    let out = run(&[
        "index",
        "--subgroup",
        k2.to_str().unwrap(),
        "--subgroup",
        rose.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "index: 2\n");

    let a = write_sg(
        dir.path(),
        "a.sg",
        &cyclic("a"),
    );
    let out = run(&["index", "--subgroup", a.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "index: infinite\n");

    let b = write_sg(
        dir.path(),
        "b.sg",
        &cyclic("b"),
    );
    let out = run(&[
        "index",
        "--subgroup",
        a.to_str().unwrap(),
        "--subgroup",
        b.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr_of(&out).contains("not a subgroup"));
}

#[test]
fn cosets_lists_components_and_total() {
    let dir = TempDir::new().unwrap();
    let k2 = write_sg(dir.path(), "k2.sg", &kernel(2));
    let k2 = k2.to_str().unwrap();
    let out = run(&["cosets", "--subgroup", k2, "--subgroup", k2]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("double cosets with nontrivial intersection: 2"));
    assert!(text.contains("rep 1: reduced rank 2"));
    assert!(text.ends_with("total: 4\n"));

    let out = run(&["cosets", "--subgroup", k2, "--subgroup", k2, "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["total"], 4);
    assert_eq!(v["components"].as_array().unwrap().len(), 2);
    assert_eq!(v["components"][0]["representative"], "1");
}

#[test]
fn intersect_writes_a_loadable_subgroup_file() {
    let dir = TempDir::new().unwrap();
    let k2 = write_sg(dir.path(), "k2.sg", &kernel(2));
    let k3 = write_sg(dir.path(), "k3.sg", &kernel(3));
    let meet_path = dir.path().join("meet.sg");
    let out = run(&[
        "intersect",
        "--subgroup",
        k2.to_str().unwrap(),
        "--subgroup",
        k3.to_str().unwrap(),
        "--out",
        meet_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "");

    let out = run(&["rank", "--subgroup", meet_path.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "rank: 7\nreduced rank: 6\n");

    let out = run(&[
        "join",
        "--subgroup",
        k2.to_str().unwrap(),
        "--subgroup",
        k3.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["reduced_rank"], 1);
    assert_eq!(v["generators"].as_array().unwrap().len(), 2);
}

#[test]
fn export_dot_draws_every_edge_once() {
    let dir = TempDir::new().unwrap();
    let base = write_sg(dir.path(), "base.sg", &gamma_base());
    let out = run(&["export-dot", "--subgroup", base.to_str().unwrap()]);
    assert!(out.status.success());
    let dot = stdout_of(&out);
    assert_eq!(dot.matches(" -> ").count(), 5);
    assert!(dot.contains("doublecircle"));
    assert!(dot.ends_with("}\n"));
}

#[test]
fn search_problem_is_deterministic_and_honours_out() {
    let first = run(&["search-problem", "--seed", "42", "--trials", "60"]);
    assert!(first.status.success());
    let second = run(&["search-problem", "--seed", "42", "--trials", "60"]);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout_of(&first);
    assert!(text.starts_with("# seed=42 trials=60 alphabet=a b\n"));

    let dir = TempDir::new().unwrap();
    let log = dir.path().join("findings.tsv");
    let third = run(&[
        "search-problem",
        "--seed",
        "42",
        "--trials",
        "60",
        "--out",
        log.to_str().unwrap(),
    ]);
    assert!(third.status.success());
    assert_eq!(fs::read_to_string(&log).unwrap(), text);

    let different = run(&["search-problem", "--seed", "43", "--trials", "60"]);
    assert!(stdout_of(&different).starts_with("# seed=43 trials=60 alphabet=a b\n"));
}

#[test]
fn verify_example_reports_tightness() {
    let out = run(&["verify-example", "--k", "1"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("tight: true"));
    assert!(text.contains("6 <= 6: generalized inequality holds"));

    let out = run(&["verify-example", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("extended-join reduced rank: 3"));
    assert!(text.contains("tight: false"));

    let out = run(&["verify-example", "--k", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["r_meet"], 12);
    assert_eq!(v["rhs"], 15);
    assert_eq!(v["holds"], false);
}

#[test]
fn bad_inputs_exit_two_with_a_diagnostic() {
    let out = run(&["rank", "--subgroup", "/nonexistent/file.sg"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).starts_with("error: "));

    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.sg");
    fs::write(&bad, "alphabet: a b\ngen xyz\n").unwrap();
    let out = run(&["rank", "--subgroup", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line 2"));

    let good = dir.path().join("good.sg");
    fs::write(&good, "alphabet: a b\ngen ab\n").unwrap();
    let out = run(&["im-check", "--subgroup", good.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("exactly two"));

    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify-example"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["search-problem", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("at least one trial"));
}
