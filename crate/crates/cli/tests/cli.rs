use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use propeller_cli::commands::{run_graph_command, Class, GraphCommand, Options, OracleQuery};
use propeller_cli::report::{Coloring, Outcome, Witness};
use propeller_cli::{parse_graph, Format, RunReport};
use propeller_core::recognition::{is_in_c0_prime, LeafClass};
use serde_json::Value;

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_propeller")).args(args).env_remove("PROPELLER_BUDGET").output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_propeller"))
        .args(args)
        .env_remove("PROPELLER_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> RunReport {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/run_report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn assert_schema_valid(json: &Value) {
    if let Err(e) = jsonschema::validate(&schema(), json) {
        panic!("{e} at {}: {json}", e.instance_path());
    }
}

#[test]
fn k4_is_not_in_c1_with_a_propeller_witness() {
    let out = run(&["recognize", "c1", "--witness", corpus("k4.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let r = report(&out);
    assert_eq!(r.outcome, Outcome::NonMember);
    let Some(Witness::Propeller { rim, center, .. }) = r.witness else { panic!("{:?}", r.witness) };
    assert_eq!(rim.len(), 3);
    assert!(!rim.contains(&center));
    let mut all: Vec<String> = rim.into_iter().chain([center]).collect();
    all.sort();
    assert_eq!(all, ["a", "b", "c", "d"]);
}

#[test]
fn c7_is_in_c2() {
    let out = run(&["recognize", "c2", corpus("c7.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out).verdict, Some(true));
}

#[test]
fn c4_with_chord_is_not_chordless() {
    let out = run(&["recognize", "chordless", "--witness", corpus("c4_chord.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let Some(Witness::Chord { chord, cycle }) = report(&out).witness else { panic!() };
    let mut chord = chord.to_vec();
    chord.sort();
    assert_eq!(chord, ["0", "2"]);
    assert!(cycle.contains(&chord[0]) && cycle.contains(&chord[1]));
}

#[test]
fn c5_vertex_coloring_uses_three_colors() {
    let out = run(&["color", "vertex", corpus("c5.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let Some(Coloring::Vertex { colors_used, assignment }) = report(&out).coloring else { panic!() };
    assert_eq!(colors_used, 3);
    let color = |l: &str| assignment.iter().find(|c| c.node == l).unwrap().color;
    for i in 0..5 {
        assert_ne!(color(&i.to_string()), color(&((i + 1) % 5).to_string()));
    }
}

/// Chromatic index 3, from the brute-force oracle.
#[test]
fn theta_edge_coloring_uses_three_colors() {
    let out = run(&["color", "edge", corpus("theta333.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let Some(Coloring::Edge { colors_used, assignment }) = report(&out).coloring else { panic!() };
    assert_eq!(colors_used, 3);
    assert_eq!(assignment.len(), 9);
    let oracle = run(&["oracle", "chromatic-index", corpus("theta333.txt").to_str().unwrap()]);
    assert_eq!(report(&oracle).value, Some(3));
}

#[test]
fn k4_edge_coloring_is_refused() {
    let out = run(&["color", "edge", corpus("k4.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let r = report(&out);
    assert_eq!(r.outcome, Outcome::Error);
    assert!(r.error.unwrap().contains("induced propeller"));
    // without the check the colorer still refuses a graph it cannot handle
    let unchecked = run(&["color", "edge", "--unchecked", corpus("k4.txt").to_str().unwrap()]);
    assert_eq!(code(&unchecked), 2);
}

#[test]
fn np_gadget_from_c6_writes_an_eleven_node_graph() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("gadget.txt");
    let out = run(&[
        "generate",
        "--kind",
        "np-gadget",
        corpus("c6.txt").to_str().unwrap(),
        "--pair",
        "0",
        "3",
        "--output",
        target.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let g = report(&out).graph.unwrap();
    assert_eq!((g.node_count, g.distinguished), (11, Some(10)));
    let written = parse_graph(&std::fs::read(&target).unwrap(), Format::EdgeList).unwrap();
    assert_eq!(written.graph.node_count(), 11);
    assert_eq!(written.graph.edge_count(), 6 + 4 + 4);
    let four = run(&["oracle", "four-propeller", target.to_str().unwrap()]);
    assert_eq!(report(&four).verdict, Some(true));
}

#[test]
fn generation_requires_a_seed_and_is_deterministic() {
    let missing = run(&["generate", "--kind", "c0"]);
    assert_eq!(code(&missing), 2);
    assert!(report(&missing).error.unwrap().contains("--seed"));
    for kind in ["c0", "glue-s2", "glue-i", "random"] {
        let a = report(&run(&["generate", "--kind", kind, "--seed", "5"])).graph.unwrap();
        let b = report(&run(&["generate", "--kind", kind, "--seed", "5"])).graph.unwrap();
        assert_eq!(a.edges, b.edges, "{kind}");
        assert!(a.node_count > 0, "{kind}");
    }
}

#[test]
fn decompose_chordless_leaves_are_c0_prime() {
    for name in ["c7.txt", "theta333.txt", "c6.txt"] {
        let out = run(&["decompose", "chordless", corpus(name).to_str().unwrap()]);
        assert_eq!(code(&out), 0);
        let tree = report(&out).tree.unwrap();
        assert!(tree.verdict);
        for leaf in tree.leaves() {
            assert!(is_in_c0_prime(&leaf.graph()), "{name}");
            assert!(matches!(leaf.leaf, Some(LeafClass::C0Prime | LeafClass::ChordlessCycle)));
        }
    }
    let out = run(&["decompose", "chordless", corpus("k4.txt").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

/// Recognizer and oracle verdicts agree on the whole corpus.
#[test]
fn corpus_recognizers_match_oracles() {
    let list = std::fs::read_to_string(corpus("all.list")).unwrap();
    let mut files = 0;
    for name in list.lines().filter(|l| !l.is_empty()) {
        let path = corpus(name);
        let format = Format::from_path(&path);
        let parsed = parse_graph(&std::fs::read(&path).unwrap(), format).unwrap();
        let opts = Options::default();
        let verdict = |cmd| run_graph_command(cmd, &parsed, name, format, &opts).verdict.unwrap();
        assert_eq!(
            verdict(GraphCommand::Recognize(Class::C1)),
            verdict(GraphCommand::Oracle(OracleQuery::C1)),
            "{name}"
        );
        assert_eq!(
            verdict(GraphCommand::Recognize(Class::C2)),
            verdict(GraphCommand::Oracle(OracleQuery::C2)),
            "{name}"
        );
        files += 1;
    }
    assert_eq!(files, 10);
}

#[test]
fn glued_corpus_graph_separates_the_classes() {
    let path = corpus("glued17.txt");
    assert_eq!(code(&run(&["recognize", "c1", path.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["recognize", "c2", path.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["oracle", "c2", path.to_str().unwrap()])), 0);
}

#[test]
fn batch_streams_reports_in_input_order() {
    let out = run(&["recognize", "c2", "--batch", corpus("all.list").to_str().unwrap()]);
    let lines: Vec<RunReport> =
        String::from_utf8(out.stdout.clone()).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let list = std::fs::read_to_string(corpus("all.list")).unwrap();
    let names: Vec<&str> = list.lines().filter(|l| !l.is_empty()).collect();
    assert_eq!(lines.len(), names.len());
    for (r, name) in lines.iter().zip(&names) {
        assert!(r.input.as_ref().unwrap().source.ends_with(name), "{name}");
    }
    // K4 is the worst outcome: a non-member
    assert_eq!(code(&out), 1);
}

#[test]
fn batch_exit_code_prefers_errors() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.txt"), "a a\n").unwrap();
    std::fs::copy(corpus("k4.txt"), dir.path().join("k4.txt")).unwrap();
    std::fs::write(dir.path().join("list"), "k4.txt\nbad.txt\nmissing.txt\n").unwrap();
    let out = run(&["recognize", "c1", "--batch", dir.path().join("list").to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    let outcomes: Vec<Outcome> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<RunReport>(l).unwrap().outcome)
        .collect();
    assert_eq!(outcomes, [Outcome::NonMember, Outcome::Error, Outcome::Error]);
}

#[test]
fn budget_caps_exit_with_three() {
    // a member, so the oracle has to enumerate every cycle
    let glued = corpus("glued17.txt");
    let out = run(&["oracle", "c2", "--budget", "max_cycles=2", glued.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(report(&out).cap.is_some());
    let petersen = corpus("petersen.g6");
    let env = Command::new(env!("CARGO_BIN_EXE_propeller"))
        .args(["oracle", "c2", petersen.to_str().unwrap()])
        .env("PROPELLER_BUDGET", "max_nodes=5")
        .output()
        .unwrap();
    assert_eq!(code(&env), 3);
    // the flag overrides the environment
    let both = Command::new(env!("CARGO_BIN_EXE_propeller"))
        .args(["oracle", "c2", "--budget", "max_nodes=64", petersen.to_str().unwrap()])
        .env("PROPELLER_BUDGET", "max_nodes=5")
        .output()
        .unwrap();
    assert_eq!(code(&both), 1);
    assert_eq!(code(&run(&["oracle", "c2", "--budget", "nonsense", petersen.to_str().unwrap()])), 2);
}

#[test]
fn stdin_and_format_flag() {
    let out = run_stdin(&["--format", "graph6", "recognize", "c1"], "D~{\n");
    assert_eq!(code(&out), 1);
    assert_eq!(report(&out).input.unwrap().node_count, 5);
    let parse_error = run_stdin(&["recognize", "c1"], "a b\nb a\n");
    assert_eq!(code(&parse_error), 2);
    assert!(report(&parse_error).error.unwrap().contains("line 2"));
    let dimacs = run(&["recognize", "c2", corpus("wheel5.dimacs").to_str().unwrap()]);
    assert_eq!(code(&dimacs), 1);
}

#[test]
fn reports_round_trip_and_match_the_schema() {
    let k4 = corpus("k4.txt");
    let theta = corpus("theta333.txt");
    let glued = corpus("glued17.txt");
    let chord = corpus("c4_chord.txt");
    let petersen = corpus("petersen.g6");
    let wheel = corpus("wheel5.dimacs");
    let runs: Vec<Vec<&str>> = vec![
        vec!["recognize", "c1", "--witness", "--tree", k4.to_str().unwrap()],
        vec!["recognize", "c2", "--witness", "--tree", k4.to_str().unwrap()],
        vec!["recognize", "c2", "--tree", glued.to_str().unwrap()],
        vec!["recognize", "chordless", "--witness", chord.to_str().unwrap()],
        vec!["color", "vertex", theta.to_str().unwrap()],
        vec!["color", "edge", theta.to_str().unwrap()],
        vec!["color", "edge", k4.to_str().unwrap()],
        vec!["oracle", "chromatic-number", petersen.to_str().unwrap()],
        vec!["oracle", "c2", "--budget", "max_cycles=2", glued.to_str().unwrap()],
        vec!["decompose", "c1", glued.to_str().unwrap()],
        vec!["decompose", "preprocess", wheel.to_str().unwrap()],
        vec!["decompose", "chordless", theta.to_str().unwrap()],
        vec!["generate", "--kind", "glue-i", "--seed", "3"],
        vec!["generate", "--kind", "random", "--seed", "3", "--output-format", "graph6"],
        vec!["recognize", "c1", "/nonexistent/graph.txt"],
    ];
    for args in runs {
        let out = run(&args);
        let json: Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_schema_valid(&json);
        let r: RunReport = serde_json::from_value(json.clone()).unwrap();
        assert_eq!(serde_json::to_value(&r).unwrap(), json, "{args:?}");
        let again: RunReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        assert_eq!(again, r, "{args:?}");
        assert_eq!(code(&out), r.exit_code(), "{args:?}");
    }
}

#[test]
fn schema_rejects_malformed_reports() {
    let out = run(&["recognize", "c1", corpus("k4.txt").to_str().unwrap()]);
    let mut json: Value = serde_json::from_slice(&out.stdout).unwrap();
    json["outcome"] = Value::from("maybe");
    assert!(jsonschema::validate(&schema(), &json).is_err());
    json["outcome"] = Value::from("member");
    json.as_object_mut().unwrap().remove("elapsed_us");
    assert!(jsonschema::validate(&schema(), &json).is_err());
}
