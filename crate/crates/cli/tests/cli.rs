use std::io::Write;
use std::process::{Command, Output, Stdio};

const RUNNING_EXAMPLE: &str = "0 1\n0 2\n1 2\n1 4\n2 4\n2 3\n3 4\n1 6\n4 6\n1 5\n5 6\n4 7\n6 7\n";

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pathgraph"))
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
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).expect("valid JSON")
}

fn hub() -> String {
    stdout(&run(&["gen", "--kind", "k4hub", "--n", "4"], ""))
}

#[test]
fn running_example_is_a_member() {
    let o = run(&["recognize", "-"], RUNNING_EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "path graph\n");
}

#[test]
fn hub_is_rejected_with_a_full_triangle() {
    let o = run(&["--json", "recognize", "-"], &hub());
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["path_graph"], false);
    let obstruction = &v["separators"][0]["obstruction"];
    assert_eq!(obstruction["kind"], "full_antipodal_triangle");
    assert_eq!(obstruction["witness"], 0);
}

#[test]
fn gplus_reports_an_induced_wheel() {
    let o = run(&["--gplus", "--json", "certify", "-"], &hub());
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["input"]["gplus"], true);
    assert_eq!(v["input"]["vertices"], 14);
    let induced = &v["separators"][0]["induced_obstruction"];
    assert_eq!(induced["kind"], "w0");
    assert_eq!(induced["order"], 1);
}

#[test]
fn certify_includes_realization_and_directed_flag() {
    let v = json(&run(&["--json", "certify", "-"], RUNNING_EXAMPLE));
    assert_eq!(v["directed_path_graph"], false);
    assert_eq!(v["separators"].as_array().unwrap().len(), 2);
    assert_eq!(v["separators"][0]["coloring"], serde_json::json!([1, 2, 3]));
    assert_eq!(
        v["realization"]["tree"]["cliques"]
            .as_array()
            .unwrap()
            .len(),
        6
    );
    assert_eq!(
        v["realization"]["host"]["paths"].as_array().unwrap().len(),
        8
    );
}

#[test]
fn atom_json_keys() {
    let v = json(&run(&["--json", "recognize", "-"], "0 1\n1 2\n0 2\n"));
    assert_eq!(v["chordal"], true);
    assert_eq!(v["path_graph"], true);
    assert_eq!(v["separators"], serde_json::json!([]));
}

#[test]
fn hole_is_reported() {
    let o = run(&["--json", "recognize", "-"], "0 1\n1 2\n2 3\n3 0\n");
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["hole"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = run(&["--json", "certify", "-"], RUNNING_EXAMPLE);
    let b = run(&["--json", "certify", "-"], RUNNING_EXAMPLE);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn input_errors_exit_with_two() {
    let o = run(&["recognize", "-"], "0 0\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1"));
    let o = run(&["recognize", "/nonexistent/graph.txt"], "");
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--format", "graph6", "recognize", "-"], "Bww\n");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_guard_exits_with_three() {
    let big = stdout(&run(
        &["gen", "--kind", "chordal", "--n", "30", "--seed", "1"],
        "",
    ));
    let o = run(&["oracle", "-"], &big);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn oracle_agrees_on_small_instances() {
    let o = run(&["oracle", "-"], RUNNING_EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["--json", "oracle", "-"], &hub());
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["trees_examined"], 16);
}

#[test]
fn quiet_prints_nothing() {
    let o = run(&["--quiet", "recognize", "-"], &hub());
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty() && o.stderr.is_empty());
}

#[test]
fn generated_graphs_round_trip_through_graph6() {
    let g6 = stdout(&run(
        &[
            "--format", "graph6", "gen", "--kind", "path", "--n", "9", "--seed", "5",
        ],
        "",
    ));
    let o = run(&["--format", "graph6", "recognize", "-"], &g6);
    assert_eq!(o.status.code(), Some(0));
    let a = stdout(&run(
        &["gen", "--kind", "chordal", "--n", "9", "--seed", "5"],
        "",
    ));
    let b = stdout(&run(
        &["gen", "--kind", "chordal", "--n", "9", "--seed", "5"],
        "",
    ));
    assert_eq!(a, b);
}

#[test]
fn realize_prints_tree_and_paths() {
    let o = run(&["realize", "-"], RUNNING_EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.matches("node ").count(), 6);
    let dot = stdout(&run(&["realize", "--dot", "-"], RUNNING_EXAMPLE));
    assert!(dot.starts_with("graph clique_tree {"));
    assert_eq!(dot.matches(" -- ").count(), 5);
    let o = run(&["realize", "-"], &hub());
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn attachedness_dot_at_first_separator() {
    let dot = stdout(&run(
        &["attachedness", "--separator", "0", "--dot", "-"],
        RUNNING_EXAMPLE,
    ));
    assert_eq!(dot.matches(" -- ").count(), 3);
    assert!(!dot.contains("dotted"));
    let o = run(&["attachedness", "--separator", "5", "-"], RUNNING_EXAMPLE);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn obstruction_patterns() {
    let dot = stdout(&run(
        &["obstruction", "--family", "w0", "--size", "1", "--dot"],
        "",
    ));
    assert_eq!(dot.matches("style=dotted").count(), 3);
    assert_eq!(dot.matches(" -- ").count(), 6);
    let v = json(&run(
        &["--json", "obstruction", "--family", "df", "--size", "2"],
        "",
    ));
    assert_eq!(v["vertices"], 5);
    let o = run(&["obstruction", "--family", "f", "--size", "1"], "");
    assert_eq!(o.status.code(), Some(2));
}
