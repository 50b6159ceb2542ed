use std::path::PathBuf;
use std::process::{Command, Output};

use kahler_core::structured::{from_value, Structured};

fn corpus() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")
}

fn ring(name: &str) -> String {
    corpus().join(format!("{name}.ring")).display().to_string()
}

fn kahler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kahler"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn omega_cusp_with_explicit_basis() {
    let o = kahler(&["omega", "--ring", &ring("cusp"), "-q", "2", "--basis", "x^2,y^2,x*y,x,y"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("generators = [d2(x^2), d2(y^2), d2(x*y), d2(x), d2(y)];"), "{out}");
    assert!(out.contains("relations = ["));
}

#[test]
fn rank_of_jets_over_the_plane() {
    let o = kahler(&["rank", "--ring", &ring("poly2"), "-q", "2", "--module", "jets:omega"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), "30");
}

#[test]
fn missing_ring_is_an_input_error() {
    let o = kahler(&["omega", "--ring", "/nonexistent/file.ring"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("cannot read ring file"));
}

#[test]
fn malformed_ring_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.ring");
    std::fs::write(&path, "vars = [x, y;\n").unwrap();
    let o = kahler(&["omega", "--ring", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_basis_is_an_input_error() {
    let o = kahler(&["omega", "--ring", &ring("cusp"), "-q", "2", "--basis", "x,y"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["omega", "--ring", "CUSP", "-q", "2", "--format", "structured"],
        vec!["resolve", "--ring", "CUSP", "--module", "jets:omega", "--format", "structured"],
        vec!["symderiv", "--ring", "CUSP", "-q", "2"],
    ] {
        let cusp = ring("cusp");
        let args: Vec<&str> = args.iter().map(|a| if *a == "CUSP" { cusp.as_str() } else { a }).collect();
        let a = kahler(&args);
        let b = kahler(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn structured_output_reparses() {
    let cusp = ring("cusp");
    let cases: [(&[&str], &str); 3] = [
        (&["omega", "--ring", &cusp, "-q", "2", "--format", "structured"], "presentation"),
        (&["theta", "--ring", &cusp, "--format", "structured"], "map"),
        (&["resolve", "--ring", &cusp, "--format", "structured"], "resolution"),
    ];
    for (args, kind) in cases {
        let o = kahler(args);
        assert!(o.status.success(), "{}", stderr(&o));
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["seed"], 0);
        assert_eq!(v["result"]["kind"], kind);
        let parsed = from_value(&v["result"]).unwrap();
        match (kind, parsed) {
            ("presentation", Structured::Presentation(p)) => assert_eq!(p.ngens(), 5),
            ("map", Structured::Map(_)) => {}
            ("resolution", Structured::Resolution(r)) => assert_eq!(r.betti, vec![2, 1]),
            (k, other) => panic!("{k}: {other:?}"),
        }
    }
}

#[test]
fn split_over_the_plane_and_not_over_the_cusp() {
    let o = kahler(&["split", "--ring", &ring("poly2")]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("splits: true"));
    let o = kahler(&["split", "--ring", &ring("cusp")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_paper_passes_on_the_corpus() {
    let dir = corpus();
    let o = kahler(&["verify-paper", "--corpus", dir.to_str().unwrap(), "--cases", "50"]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.contains(" PASS ")).count(), 11);
}

#[test]
fn mutated_corpus_fails_with_entry_diff() {
    let dir = tempfile::tempdir().unwrap();
    for entry in std::fs::read_dir(corpus()).unwrap() {
        let p = entry.unwrap().path();
        std::fs::copy(&p, dir.path().join(p.file_name().unwrap())).unwrap();
    }
    let cusp = dir.path().join("cusp.ring");
    let text = std::fs::read_to_string(&cusp).unwrap().replace("y^2 - x^3", "y^2 - x^3 + x");
    std::fs::write(&cusp, text).unwrap();
    let o = kahler(&["verify-paper", "--corpus", dir.path().to_str().unwrap(), "--cases", "20"]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("relation matrix entry"), "{err}");
    assert!(err.contains("expected"), "{err}");
}

#[test]
fn empty_corpus_is_a_vacuous_pass() {
    let dir = tempfile::tempdir().unwrap();
    let o = kahler(&["verify-paper", "--corpus", dir.path().to_str().unwrap(), "--cases", "20"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("warning: corpus is empty"));
    assert!(stdout(&o).contains("SKIP"));
}

#[test]
fn missing_corpus_is_an_input_error() {
    let o = kahler(&["verify-paper", "--corpus", "/nonexistent/corpus"]);
    assert_eq!(o.status.code(), Some(2));
}
