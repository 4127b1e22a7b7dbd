//! End-to-end tests of the binary: exit-code contract, generator output,
//! report determinism across `--jobs`, and agreement with direct library
//! calls.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_facetdecomp"))
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_code_contract() {
    let four_cycle = corpus("four_cycle.txt");
    let tight = corpus("tight_5_2.txt");
    let paw = corpus("k4_minus_two_adjacent_edges.txt");

    assert_eq!(code(&run(&["check", "vd", four_cycle.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["check", "cm", tight.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["check", "matroid", paw.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["check", "frobnicate", paw.to_str().unwrap()])), 2);
    assert_eq!(code(&run(&["check", "vd", "/nonexistent/file.txt"])), 2);
    // out-of-budget verification refuses rather than guessing
    assert_eq!(code(&run(&["verify", "thm1.1", "30..31"])), 3);
    // a vd search with a starved node budget is undecided
    let big = corpus("sixteen_triangles.txt");
    let out = run(&["check", "vd", big.to_str().unwrap(), "--budget", "2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "n=4\n1 2\n1 zebra\n").unwrap();
    let out = run(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3"), "diagnostic lacks position: {err}");

    let empty = dir.path().join("empty.txt");
    std::fs::write(&empty, "").unwrap();
    assert_eq!(code(&run(&["analyze", empty.to_str().unwrap()])), 2);
}

#[test]
fn generators_produce_expected_shapes() {
    let out = run(&["gen", "tight", "5", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n=5");
    assert_eq!(lines.len() - 1, 6, "tight(5,2) has 6 facets");

    let out = run(&["gen", "skeleton", "6", "2"]);
    assert_eq!(stdout(&out).lines().count() - 1, 20, "full 2-skeleton on 6 vertices");

    // colex-initial 16 triangles on 6 vertices: the extremal (6,14,16) shape
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("colex.txt");
    assert_eq!(code(&run(&["gen", "colex", "16", "2", "6", "--out", file.to_str().unwrap()])), 0);
    let analyzed = run(&["analyze", file.to_str().unwrap(), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&analyzed)).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([6, 14, 16]));

    assert_eq!(code(&run(&["gen", "tight", "4", "3"])), 2, "invalid params");
    assert_eq!(code(&run(&["gen", "mystery", "1"])), 2, "unknown kind");
}

#[test]
fn analyze_reports_thresholds() {
    let out = run(&["analyze", corpus("tight_5_2.txt").to_str().unwrap(), "--json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["n"], 5);
    assert_eq!(v["facets"], 6);
    assert_eq!(v["antifacets"], 4);
    assert_eq!(v["vd_threshold"], 7);
    assert_eq!(v["meets_vd_threshold"], false);
    assert_eq!(v["pure"], true);

    let deep = run(&["analyze", corpus("sixteen_triangles.txt").to_str().unwrap(), "--deep", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&deep)).unwrap();
    assert_eq!(v["meets_vd_threshold"], true);
    assert_eq!(v["vertex_decomposable"], "true");
    assert_eq!(v["cohen_macaulay"], true);
    assert_eq!(v["extremal"], false);
    assert!(v["vd_certificate"].is_object());
}

#[test]
fn verify_reports_are_identical_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("jobs1.json");
    let b = dir.path().join("jobs4.json");
    for (jobs, path) in [("1", &a), ("4", &b)] {
        let out = run(&[
            "verify", "lemma4.5", "4..5", "--jobs", jobs, "--out", path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        "reports differ across --jobs"
    );
}

#[test]
fn certificates_round_trip_through_certify() {
    let dir = tempfile::tempdir().unwrap();
    let cert = dir.path().join("cert.json");
    let complex = corpus("four_cycle.txt");
    let out = run(&[
        "check", "vd", complex.to_str().unwrap(), "--certificate", cert.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&run(&["certify", complex.to_str().unwrap(), cert.to_str().unwrap()])), 0);

    // the same certificate must not verify against a different complex
    let other = corpus("complete_graph_4.txt");
    let replay = run(&["certify", other.to_str().unwrap(), cert.to_str().unwrap()]);
    assert_ne!(code(&replay), 0);
}

#[test]
fn dual_is_an_involution_through_the_cli() {
    let dir = tempfile::tempdir().unwrap();
    let once = dir.path().join("once.txt");
    let twice = dir.path().join("twice.txt");
    let original = corpus("sixteen_triangles.txt");
    assert_eq!(code(&run(&["dual", original.to_str().unwrap(), "--out", once.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["dual", once.to_str().unwrap(), "--out", twice.to_str().unwrap()])), 0);

    let a = facetdecomp::io::parse_complex(&std::fs::read_to_string(&original).unwrap()).unwrap();
    let b = facetdecomp::io::parse_complex(&std::fs::read_to_string(&twice).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn export_lists_minimal_nonfaces() {
    let out = run(&["export", corpus("tetrahedron_boundary_minus_facet.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("x1*x2*x3"), "missing generator in: {text}");
}

#[test]
fn cli_agrees_with_library_on_the_corpus() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus");
    let mut entries: Vec<_> = std::fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == "txt"))
        .collect();
    entries.sort();
    for path in entries {
        let complex =
            facetdecomp::io::parse_complex(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let want = facetdecomp::decomp::is_vertex_decomposable(&complex, None).is_yes();
        let got = code(&run(&["check", "vd", path.to_str().unwrap()]));
        assert_eq!(got, i32::from(!want), "{}", path.display());
    }
}
