//! End-to-end tests driving the vcq binary: every subcommand, every exit
//! code, and the round trip from generated graph to queried oracle.

use std::io::Write as _;
use std::path::Path;
use std::process::{Command, Output, Stdio};

use vcq_core::flow::check_k_connected;
use vcq_core::graph::parse_graph;

fn vcq(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vcq"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn vcq_stdin(dir: &Path, args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_vcq"))
        .current_dir(dir)
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().expect("binary exits")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn gen_emits_known_families() {
    let dir = tempfile::tempdir().unwrap();
    let out = vcq(dir.path(), &["gen", "cycle", "5"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");

    let out = vcq(dir.path(), &["gen", "bridged-cliques", "6", "3"]);
    let g = parse_graph(&stdout(&out)).unwrap();
    assert_eq!((g.n(), g.m()), (12, 33));

    let out = vcq(dir.path(), &["gen", "petersen"]);
    let g = parse_graph(&stdout(&out)).unwrap();
    assert_eq!((g.n(), g.m()), (10, 15));
}

#[test]
fn gen_rejects_bad_requests_as_usage() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["gen", "moebius", "5"][..],
        &["gen", "cycle", "2"],
        &["gen", "cycle"],
        &["gen", "cycle", "five"],
        &["gen", "cycle", "5", "--connectivity", "2"],
    ] {
        let out = vcq(dir.path(), args);
        assert_eq!(code(&out), 1, "{args:?}: {}", stderr(&out));
    }
}

#[test]
fn gen_retries_gnp_until_connected() {
    let dir = tempfile::tempdir().unwrap();
    let out = vcq(
        dir.path(),
        &["gen", "gnp", "14", "0.3", "1", "--connectivity", "2", "-o", "g.graph"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let g = parse_graph(&std::fs::read_to_string(dir.path().join("g.graph")).unwrap()).unwrap();
    assert!(check_k_connected(&g, 2).is_ok());

    // A dense threshold no 8-node sample will hit in two tries.
    let out = vcq(
        dir.path(),
        &["gen", "gnp", "8", "0.1", "1", "--connectivity", "7", "--tries", "2"],
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn build_query_round_trip_on_cycle() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&vcq(dir.path(), &["gen", "cycle", "5", "-o", "c5.graph"])), 0);
    let out = vcq(
        dir.path(),
        &["build", "c5.graph", "--mode", "kconn", "-k", "2", "-o", "c5.vcqo"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("cuts 5"), "{text}");
    assert!(text.contains("forests 0"), "{text}");

    let out = vcq(dir.path(), &["query", "c5.vcqo", "0", "2"]);
    assert_eq!(stdout(&out), "0 2 CUT 2 E(0,1) E(0,4)\n");

    // The pair can arrive through a file or stdin as well.
    std::fs::write(dir.path().join("pairs.txt"), "0 2\n1 3\n").unwrap();
    let out = vcq(dir.path(), &["query", "c5.vcqo", "--pairs-file", "pairs.txt"]);
    assert_eq!(
        stdout(&out),
        "0 2 CUT 2 E(0,1) E(0,4)\n1 3 CUT 2 E(0,1) E(1,2)\n"
    );
    let out = vcq_stdin(dir.path(), &["query", "c5.vcqo"], "0 2\n");
    assert_eq!(stdout(&out), "0 2 CUT 2 E(0,1) E(0,4)\n");
}

#[test]
fn connected_pairs_answer_con() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "complete", "5", "-o", "k5.graph"]);
    let out = vcq(
        dir.path(),
        &["build", "k5.graph", "--mode", "kconn", "-k", "3", "-o", "k5.vcqo"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = vcq(dir.path(), &["query", "k5.vcqo", "0", "4", "2", "3"]);
    assert_eq!(stdout(&out), "0 4 CON\n2 3 CON\n");
}

#[test]
fn build_rejects_underconnected_graphs() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "cycle", "5", "-o", "c5.graph"]);
    let out = vcq(
        dir.path(),
        &["build", "c5.graph", "--mode", "kconn", "-k", "4", "-o", "x.vcqo"],
    );
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("not 4-connected"), "{}", stderr(&out));
    assert!(!dir.path().join("x.vcqo").exists());
}

#[test]
fn query_rejects_bad_pair_data() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "cycle", "5", "-o", "c5.graph"]);
    vcq(
        dir.path(),
        &["build", "c5.graph", "--mode", "kconn", "-k", "2", "-o", "c5.vcqo"],
    );
    for pairs in [&["0"][..], &["0", "9"], &["0", "0"], &["zero", "2"]] {
        let mut args = vec!["query", "c5.vcqo"];
        args.extend_from_slice(pairs);
        let out = vcq(dir.path(), &args);
        assert_eq!(code(&out), 2, "{pairs:?}: {}", stderr(&out));
    }
}

#[test]
fn malformed_graph_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.graph"), "3 1\n0 nine\n").unwrap();
    let out = vcq(
        dir.path(),
        &["build", "bad.graph", "--mode", "kconn", "-k", "1", "-o", "x.vcqo"],
    );
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("bad.graph:2"), "{}", stderr(&out));
}

#[test]
fn stats_match_build_output() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "bridged-cliques", "6", "3", "-o", "b6.graph"]);
    let built = vcq(
        dir.path(),
        &["build", "b6.graph", "--mode", "general", "-k", "3", "-o", "b6.vcqo"],
    );
    assert_eq!(code(&built), 0);
    let stats = vcq(dir.path(), &["stats", "b6.vcqo"]);
    assert_eq!(code(&stats), 0);
    // Build prints the same accounting plus the file size line.
    assert!(stdout(&built).starts_with(&stdout(&stats)));
    assert!(stdout(&stats).contains("mode general"));
}

#[test]
fn verify_passes_on_faithful_oracles() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "bridged-cliques", "5", "2", "-o", "b.graph"]);
    for mode in ["kconn", "general"] {
        let out = vcq(
            dir.path(),
            &["build", "b.graph", "--mode", mode, "-k", "2", "-o", "b.vcqo"],
        );
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let out = vcq(dir.path(), &["verify", "b.vcqo", "b.graph"]);
        assert_eq!(code(&out), 0, "{}", stderr(&out));
        let text = stdout(&out);
        assert!(text.starts_with("shape\t-\tok\n"), "{text}");
        assert!(text.contains("verdict\t0-1\tok"), "{text}");
        assert!(!text.contains("fail"), "{text}");
    }
}

#[test]
fn verify_flags_a_wrong_oracle() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "cycle", "6", "-o", "c6.graph"]);
    // An honest oracle for the chorded cycle answers CON for (0, 3),
    // which is wrong for the plain cycle: a mismatch verify must flag.
    std::fs::write(
        dir.path().join("chord.graph"),
        "6 7\n0 1\n1 2\n2 3\n3 4\n4 5\n0 5\n0 3\n",
    )
    .unwrap();
    vcq(
        dir.path(),
        &["build", "chord.graph", "--mode", "general", "-k", "2", "-o", "chord.vcqo"],
    );
    let out = vcq(dir.path(), &["verify", "chord.vcqo", "c6.graph"]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).contains("verdict\t0-3\tfail"), "{}", stdout(&out));
    assert!(stderr(&out).contains("mismatch"), "{}", stderr(&out));
}

#[test]
fn verify_rejects_an_oracle_for_a_different_graph() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "cycle", "5", "-o", "c5.graph"]);
    vcq(dir.path(), &["gen", "cycle", "6", "-o", "c6.graph"]);
    vcq(
        dir.path(),
        &["build", "c5.graph", "--mode", "kconn", "-k", "2", "-o", "c5.vcqo"],
    );
    let out = vcq(dir.path(), &["verify", "c5.vcqo", "c6.graph"]);
    assert_eq!(code(&out), 4);
    assert!(stdout(&out).starts_with("shape\t-\tfail\n"), "{}", stdout(&out));
}

#[test]
fn corrupt_oracle_file_is_a_parse_error() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("junk.vcqo"), b"XXXX not an oracle").unwrap();
    let out = vcq(dir.path(), &["query", "junk.vcqo", "0", "1"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("not in VCQO format"), "{}", stderr(&out));
}

#[test]
fn bench_reports_latency() {
    let dir = tempfile::tempdir().unwrap();
    vcq(dir.path(), &["gen", "cycle", "8", "-o", "c8.graph"]);
    vcq(
        dir.path(),
        &["build", "c8.graph", "--mode", "kconn", "-k", "2", "-o", "c8.vcqo"],
    );
    let out = vcq(
        dir.path(),
        &["bench", "c8.vcqo", "--queries", "10000", "--seed", "7"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("queries 10000"), "{text}");
    assert!(text.contains("mean-ns"), "{text}");
    // Every distinct pair in a cycle at k = 2 answers with a cut.
    assert!(text.contains("cut-answers 10000"), "{text}");
}

#[test]
fn help_and_version_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&vcq(dir.path(), &["--help"])), 0);
    assert_eq!(code(&vcq(dir.path(), &["--version"])), 0);
    assert_eq!(code(&vcq(dir.path(), &["query", "--help"])), 0);
}
