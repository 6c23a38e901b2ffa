use std::path::Path;
use std::process::{Command, Output};

fn orelab(corpus: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orelab")).env("ORELAB_CORPUS", corpus).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn key_of(corpus: &Path, name: &str) -> String {
    let out = stdout(&orelab(corpus, &["add", name]));
    out.split_whitespace().next().unwrap().to_string()
}

#[test]
fn gen_is_idempotent() {
    let dir = tempfile::tempdir().unwrap();
    let first = orelab(dir.path(), &["gen", "--max-n", "9"]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), "enumerated 3 classes, added 3\n");
    let second = orelab(dir.path(), &["gen", "--max-n", "9"]);
    assert_eq!(stdout(&second), "enumerated 3 classes, added 0\n");
    assert_eq!(std::fs::read_dir(dir.path().join("entries")).unwrap().count(), 3);
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    orelab(dir.path(), &["gen", "--max-n", "9"]);
    orelab(dir.path(), &["add", "c5_join_k2"]);
    let a = orelab(dir.path(), &["verify", "all", "--seed", "42"]);
    let b = orelab(dir.path(), &["verify", "all", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.contains("CHECK main-other "));
    assert!(text.lines().last().unwrap().ends_with("fail=0"));
    let ledger = std::fs::read_to_string(dir.path().join("ledger.log")).unwrap();
    assert_eq!(ledger.lines().count(), 2);
}

#[test]
fn empty_corpus_warns_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::create_dir(dir.path().join("entries")).unwrap();
    let o = orelab(dir.path(), &["verify", "main"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("is empty"));
    assert_eq!(stdout(&o), "SUMMARY checks=0 pass=0 fail=0\n");
}

#[test]
fn usage_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(orelab(dir.path(), &["verify", "everything"]).status.code(), Some(2));
    assert_eq!(orelab(dir.path().join("nope").as_path(), &["verify", "main"]).status.code(), Some(2));
    let k = key_of(dir.path(), "c5_join_k2");
    let o = orelab(dir.path(), &["extend", &k, "--r", "0,1,2,3,4,5,6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("proper subset"));
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n2 1\n").unwrap();
    let o = orelab(dir.path(), &["add", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn stale_entry_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let k = key_of(dir.path(), "k5");
    let path = dir.path().join("entries").join(format!("{k}.toml"));
    let text = std::fs::read_to_string(&path).unwrap().replace("mic = 4", "mic = 5");
    std::fs::write(&path, text).unwrap();
    let o = orelab(dir.path(), &["verify", "main"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains(&format!("CHECK invariants {k} FAIL")));
}

#[test]
fn extend_is_deterministic_and_double_k5_side_is_total() {
    let dir = tempfile::tempdir().unwrap();
    orelab(dir.path(), &["gen", "--max-n", "9"]);
    let list = stdout(&orelab(dir.path(), &["list"]));
    let nine: Vec<&str> = list.lines().filter(|l| l.contains(" n=9 ")).map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(nine.len(), 2);
    for k in nine {
        // Vertices 0..=4 are the edge-side K5 with one edge removed.
        let a = orelab(dir.path(), &["extend", k, "--r", "0,1,2,3,4", "--seed", "42"]);
        let b = orelab(dir.path(), &["extend", k, "--r", "0,1,2,3,4", "--seed", "42"]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
        let text = stdout(&a);
        assert!(text.contains("core 1\n") && text.contains("complete true\n") && text.contains("spanning true\n"), "{text}");
    }
}

#[test]
fn named_graphs_and_queries() {
    let dir = tempfile::tempdir().unwrap();
    let add = stdout(&orelab(dir.path(), &["add", "groetzsch"]));
    assert!(add.contains("n=11 m=20 added"));
    let k = key_of(dir.path(), "c5_join_k2");
    assert!(stdout(&orelab(dir.path(), &["potential", &k])).contains("p -30/21\ncase Other\nbound 57/21\n"));
    assert!(stdout(&orelab(dir.path(), &["t", &k])).contains("T 2\n"));
    let d = stdout(&orelab(dir.path(), &["discharge", &k]));
    assert!(d.contains("transfer 0 5 21/84\n"));
    let audit = stdout(&orelab(dir.path(), &["audit", &k]));
    assert_eq!(audit.lines().filter(|l| l.starts_with("audit ")).count(), 7);
}
