mod common;

use std::process::Command;

use afcount::cli::execute;
use afcount::pipeline::Task;
use afcount::{Error, SemanticsKind};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["afcount"];
    full.extend_from_slice(args);
    let code = execute(full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(name: &str) -> String {
    common::data(name).to_string_lossy().into_owned()
}

#[test]
fn documented_answers() {
    let surf = path("surfing.apx");
    let f1 = path("f1.apx");
    let cases: [(&[&str], &str); 5] = [
        (&["--input", &surf, "--semantics", "stable", "--task", "pcount", "--arg", "s", "--projection", "a,r"], "1\n"),
        (&["--input", &surf, "--semantics", "stable", "--task", "count"], "3\n"),
        (&["--input", &surf, "--semantics", "stable", "--task", "cred-count", "--arg", "s"], "2\n"),
        (&["--input", &f1, "--semantics", "stable", "--task", "count"], "0\n"),
        (&["--input", &f1, "--semantics", "admissible", "--task", "count"], "4\n"),
    ];
    for (args, expected) in cases {
        let (code, out, err) = run(args);
        assert_eq!((code, out.as_str()), (0, expected), "{args:?}: {err}");
    }
}

#[test]
fn decisions_and_enumeration() {
    let f1 = path("f1.apx");
    let ask = |sem: &str, task: &str, arg: &str| run(&["--input", &f1, "--semantics", sem, "--task", task, "--arg", arg]).1;
    assert_eq!(ask("preferred", "cred", "w"), "YES\n");
    assert_eq!(ask("admissible", "skep", "v"), "NO\n");
    assert_eq!(ask("preferred", "skep", "v"), "YES\n");
    assert_eq!(ask("stable", "skep", "z"), "YES\n");
    assert_eq!(ask("complete", "cred", "z"), "NO\n");
    let (code, out, _) = run(&["--input", &f1, "--semantics", "stage", "--task", "enumerate-oracle"]);
    assert_eq!((code, out.as_str()), (0, "{v,w}\n{v,x,y}\n"));
}

#[test]
fn tgf_input_and_stats_record() {
    let (code, out, _) = run(&["--input", &path("f1.tgf"), "--format", "tgf", "--semantics", "cf", "--task", "count", "--stats"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "10");
    let keys: Vec<&str> = lines[1].split(' ').map(|kv| kv.split('=').next().unwrap()).collect();
    assert_eq!(keys, ["width", "nodes", "max_table", "count", "ms_td", "ms_dp", "ms_purge", "ms_proj"]);
    assert!(lines[1].contains("count=10"));
}

#[test]
fn output_is_deterministic_under_seed_and_threads() {
    let surf = path("surfing.apx");
    for sem in SemanticsKind::ALL {
        let s = sem.name();
        let base = run(&["--input", &surf, "--semantics", s, "--task", "pcount", "--projection", "a,c,d", "--seed", "7"]);
        let again = run(&["--input", &surf, "--semantics", s, "--task", "pcount", "--projection", "a,c,d", "--seed", "7"]);
        let threaded = run(&["--input", &surf, "--semantics", s, "--task", "pcount", "--projection", "a,c,d", "--seed", "7", "--threads", "4"]);
        assert_eq!(base, again);
        assert_eq!(base, threaded);
    }
}

#[test]
fn oracle_verify_passes_on_the_corpus() {
    for file in ["surfing.apx", "f1.apx"] {
        let p = path(file);
        let af = common::fixture(file);
        for sem in SemanticsKind::ALL {
            for task in Task::ALL {
                for arg in af.names() {
                    let mut args = vec!["--input", &p, "--semantics", sem.name(), "--task", task.name(), "--oracle-verify"];
                    args.extend(["--arg", arg]);
                    if task == Task::PCount {
                        args.extend(["--projection", af.names()[0].as_str()]);
                    }
                    let (code, _, err) = run(&args);
                    assert_eq!(code, 0, "{file} {sem} {task} {arg}: {err}");
                }
            }
        }
    }
}

#[test]
fn exit_codes() {
    let f1 = path("f1.apx");
    assert_eq!(run(&["--input", &f1, "--semantics", "stable", "--task", "pcount"]).0, 1);
    assert_eq!(run(&["--input", &f1, "--semantics", "stable", "--task", "cred"]).0, 1);
    assert_eq!(run(&["--input", &f1, "--semantics", "stable", "--task", "cred", "--arg", "q"]).0, 1);
    assert_eq!(run(&["--input", &f1, "--semantics", "bogus", "--task", "count"]).0, 1);
    assert_eq!(run(&["--bogus"]).0, 1);
    assert_eq!(run(&["--help"]).0, 0);
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.apx");
    std::fs::write(&bad, "arg(a).\natt(a,b).\n").unwrap();
    let (code, _, err) = run(&["--input", bad.to_str().unwrap(), "--semantics", "stable", "--task", "count"]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(run(&["--input", "/nonexistent/x.apx", "--semantics", "stable", "--task", "count"]).0, 2);
    let mismatch = Error::OracleMismatch { task: "count".into(), solver: "1".into(), oracle: "2".into() };
    assert_eq!(mismatch.exit_code(), 4);
    assert_eq!(Error::Invariant("x".into()).exit_code(), 3);
}

#[test]
fn reduce_then_solve_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    let cnf = dir.path().join("f.cnf");
    std::fs::write(&cnf, "c ind 1 0\np cnf 3 2\n1 2 0\n-1 3 0\n").unwrap();
    let bin = env!("CARGO_BIN_EXE_afcount");
    let reduce = |construction: &str| {
        let o = Command::new(bin)
            .args(["reduce", "--input", cnf.to_str().unwrap(), "--construction", construction])
            .output()
            .unwrap();
        assert!(o.status.success());
        let file = dir.path().join(format!("{construction}.apx"));
        std::fs::write(&file, &o.stdout).unwrap();
        (file, String::from_utf8(o.stderr).unwrap())
    };
    let solve = |file: &std::path::Path, task: &str, sem: &str, extra: &[&str]| {
        let o = Command::new(bin)
            .args(["--input", file.to_str().unwrap(), "--semantics", sem, "--task", task, "--arg", "t", "--oracle-verify"])
            .args(extra)
            .output()
            .unwrap();
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        String::from_utf8(o.stdout).unwrap()
    };
    // (x1 ∨ x2) ∧ (¬x1 ∨ x3): 4 models, both values of x1 extend
    let (stable, info) = reduce("stable");
    assert_eq!(info, "target: t\n");
    assert_eq!(solve(&stable, "cred-count", "stable", &[]), "4\n");
    let (adm, _) = reduce("admissible");
    assert_eq!(solve(&adm, "cred-count", "admissible", &[]), "4\n");
    let (proj, info) = reduce("projected");
    assert!(info.contains("projection: x1,nx1"), "{info}");
    assert_eq!(solve(&proj, "pcount", "stable", &["--projection", "x1,nx1"]), "2\n");
    let status = Command::new(bin).args(["--input", "/nonexistent", "--semantics", "stable", "--task", "count"]).status().unwrap();
    assert_eq!(status.code(), Some(2));
}
