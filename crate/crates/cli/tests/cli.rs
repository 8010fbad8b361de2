//! End-to-end tests of the binary: exit codes, stream contracts, and
//! parse/emit round-trips.

use choosable::instances::{gen_lists, gen_named, gen_random_connected, NamedKind};
use choosable_cli::formats::{
    emit_coloring, emit_graph, emit_lists, parse_coloring, parse_graph, parse_lists,
};
use proptest::prelude::*;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_choosable"))
}

fn write(dir: &Path, name: &str, content: &str) -> std::path::PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn color_even_cycle_exits_zero_with_alternating_output() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", &emit_graph(&gen_named(NamedKind::Cycle(6)).unwrap()));
    let l = write(dir.path(), "l", "1 1 2\n2 1 2\n3 1 2\n4 1 2\n5 1 2\n6 1 2\n");
    let out = bin().arg("color").arg(&g).arg(&l).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert_eq!(stdout(&out), "1 1\n2 2\n3 1\n4 2\n5 1\n6 2\n");
}

#[test]
fn color_odd_cycle_exits_two_with_status_line() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", &emit_graph(&gen_named(NamedKind::Cycle(5)).unwrap()));
    let l = write(dir.path(), "l", "1 1 2\n2 1 2\n3 1 2\n4 1 2\n5 1 2\n");
    let out = bin().arg("color").arg(&g).arg(&l).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert_eq!(err.lines().next(), Some("status=infeasible"));
    // diagnostics use 1-based file ids
    assert!(err.contains("(1, 2, 3, 4, 5)"), "stderr: {err}");
}

#[test]
fn color_k4_exits_three_with_reason() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", &emit_graph(&gen_named(NamedKind::Complete(4)).unwrap()));
    let l = write(dir.path(), "l", "1 1 2 3\n2 1 2 3\n3 1 2 3\n4 1 2 3\n");
    let out = bin().arg("color").arg(&g).arg(&l).output().unwrap();
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert_eq!(err.lines().next(), Some("status=not-applicable"));
    assert!(err.contains("complete-component"), "stderr: {err}");
    assert!(err.contains("{1, 2, 3, 4}"), "stderr: {err}");
}

#[test]
fn parse_failures_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", "e 1 2\n");
    let l = write(dir.path(), "l", "1 1 2\n");
    let out = bin().arg("color").arg(&g).arg(&l).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out).lines().next(), Some("status=error"));
    assert!(stderr(&out).contains("line 1"));

    let out = bin().arg("color").arg("/nonexistent").arg(&l).output().unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = bin().arg("color").output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out).lines().next(), Some("status=error"));
}

#[test]
fn trace_prints_counters_to_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", &emit_graph(&gen_named(NamedKind::Petersen).unwrap()));
    let l = write(
        dir.path(),
        "l",
        &(1..=10).map(|i| format!("{i} 1 2 3\n")).collect::<String>(),
    );
    let out = bin().arg("color").arg(&g).arg(&l).arg("--trace").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let err = stderr(&out);
    assert!(err.contains("special_case=1"), "stderr: {err}");
    assert!(err.contains("eq1_case_b=1"), "stderr: {err}");
}

#[test]
fn verify_detects_planted_conflict() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", "p edge 2 1\ne 1 2\n");
    let l = write(dir.path(), "l", "1 1 2\n2 1 2\n");
    let good = write(dir.path(), "good", "1 1\n2 2\n");
    let bad = write(dir.path(), "bad", "1 1\n2 1\n");

    let out = bin().arg("verify").arg(&g).arg(&l).arg(&good).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());

    let out = bin().arg("verify").arg(&g).arg(&l).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr(&out).lines().next(), Some("status=violations"));
    assert_eq!(stdout(&out), "edge-conflict 1 2 1\n");
}

#[test]
fn verify_reports_partial_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", "p edge 2 0\n");
    let l = write(dir.path(), "l", "1 1\n2 1\n");
    let partial = write(dir.path(), "p", "2 1\n");
    let out = bin().arg("verify").arg(&g).arg(&l).arg(&partial).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out), "uncolored-vertex 1\n");
}

#[test]
fn oracle_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "g", &emit_graph(&gen_named(NamedKind::Cycle(5)).unwrap()));
    let l2 = write(dir.path(), "l", "1 1 2\n2 1 2\n3 1 2\n4 1 2\n5 1 2\n");
    let out = bin().arg("oracle").arg(&c5).arg(&l2).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr(&out).lines().next(), Some("status=infeasible"));

    let l3 = write(dir.path(), "l3", "1 1 2 3\n2 1 2 3\n3 1 2 3\n4 1 2 3\n5 1 2 3\n");
    let out = bin().arg("oracle").arg(&c5).arg(&l3).output().unwrap();
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));

    // starve the budget: complete graph with wide lists
    let k = write(dir.path(), "k", &emit_graph(&gen_named(NamedKind::Complete(8)).unwrap()));
    let lw = write(
        dir.path(),
        "lw",
        &(1..=8).map(|i| format!("{i} 1 2 3 4 5 6 7\n")).collect::<String>(),
    );
    let out = bin()
        .arg("oracle")
        .arg(&k)
        .arg(&lw)
        .args(["--node-limit", "5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(stderr(&out).lines().next(), Some("status=limit-exceeded"));
}

#[test]
fn oracle_output_is_verifier_clean() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g", &emit_graph(&gen_named(NamedKind::Petersen).unwrap()));
    let l = write(
        dir.path(),
        "l",
        &(1..=10).map(|i| format!("{i} 1 2 3\n")).collect::<String>(),
    );
    let colored = bin().arg("oracle").arg(&g).arg(&l).output().unwrap();
    assert_eq!(colored.status.code(), Some(0));
    let c = write(dir.path(), "c", &stdout(&colored));
    let out = bin().arg("verify").arg(&g).arg(&l).arg(&c).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn gen_graph_writes_canonical_dimacs() {
    let out = bin()
        .args(["gen", "graph", "--kind", "petersen", "--seed", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.starts_with("p edge 10 15\n"));
    let g = parse_graph(&text).unwrap();
    assert_eq!(g, gen_named(NamedKind::Petersen).unwrap());
}

#[test]
fn gen_graph_requires_kind_parameters() {
    let out = bin()
        .args(["gen", "graph", "--kind", "cycle", "--seed", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stderr(&out).lines().next(), Some("status=error"));

    // n*d odd is a generator-level usage error
    let out = bin()
        .args(["gen", "graph", "--kind", "regular", "--n", "5", "--d", "3", "--seed", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_is_reproducible_and_parseable() {
    let args = ["gen", "graph", "--kind", "connected", "--n", "25", "--dmax", "4", "--seed", "9"];
    let a = bin().args(args).output().unwrap();
    let b = bin().args(args).output().unwrap();
    assert_eq!(a.stdout, b.stdout);
    let g = parse_graph(&stdout(&a)).unwrap();
    assert_eq!(g.vertex_count(), 25);

    let dir = tempfile::tempdir().unwrap();
    let gpath = write(dir.path(), "g", &stdout(&a));
    let largs = ["gen", "lists", "--size", "4", "--palette", "8", "--seed", "3"];
    let la = bin().args(largs).arg("--graph").arg(&gpath).output().unwrap();
    let lb = bin().args(largs).arg("--graph").arg(&gpath).output().unwrap();
    assert_eq!(la.stdout, lb.stdout);
    let lists = parse_lists(&stdout(&la), 25).unwrap();
    assert!((0..25).all(|v| lists.list(v).len() == 4));
}

#[test]
fn fuzz_zero_trials_fails_coverage() {
    let out = bin()
        .args(["fuzz", "--trials", "0", "--seed", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stderr(&out).lines().next(), Some("status=internal-failure"));
}

#[test]
fn fuzz_short_healthy_run_reports_counters() {
    let out = bin()
        .args(["fuzz", "--trials", "400", "--seed", "3", "--nmax", "25"])
        .output()
        .unwrap();
    let text = stdout(&out);
    assert!(text.contains("trials=400"), "stdout: {text}");
    assert!(text.contains("peel="), "stdout: {text}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// parse(emit(x)) = x for generated graphs, lists and colorings.
    #[test]
    fn roundtrips_are_identities(seed in 0u64..10_000, n in 1usize..40, dmax in 2usize..6) {
        let g = gen_random_connected(n, dmax, seed).unwrap();
        prop_assert_eq!(&parse_graph(&emit_graph(&g)).unwrap(), &g);

        let lists = gen_lists(&g, 3, 7, seed).unwrap();
        prop_assert_eq!(&parse_lists(&emit_lists(&lists), n).unwrap(), &lists);

        use choosable::coloring::PartialColoring;
        let mut f = PartialColoring::new(n);
        for v in 0..n {
            if (seed >> (v % 48)) & 1 == 1 {
                f.set(v, (v % 5) as u32 + 1);
            }
        }
        prop_assert_eq!(&parse_coloring(&emit_coloring(&f), n).unwrap(), &f);
    }
}
