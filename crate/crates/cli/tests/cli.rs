use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_seqlogic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("seqlogic-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn parse_prints_canonical_form() {
    let o = run(&["parse", "--sig", "cond", "T <| a |> (F <| b |> U)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "T <| a |> (F <| b |> U)");
}

#[test]
fn syntax_errors_exit_2() {
    let o = run(&["parse", "--sig", "seq", "a &&"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error"));
    assert_eq!(run(&["nf", "--congruence", "cl", "a <|"]).status.code(), Some(2));
}

#[test]
fn equiv_exit_code_follows_the_verdict() {
    let args = |c| ["equiv", "--congruence", c, "a && (b || c)", "(a && b) || (a && c)"];
    let o = run(&args("cl"));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "equivalent");
    let o = run(&["equiv", "--congruence", "mem", "a && b", "b && a"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not equivalent");
}

#[test]
fn nf_writes_a_dot_file() {
    let path = scratch("nf.dot");
    let o = run(&["nf", "--congruence", "mem", "--dot", path.to_str().unwrap(), "a && a"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "T <| a |> F");
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
}

#[test]
fn check_eq_shows_the_differing_forms() {
    let o = run(&["check-eq", "--congruence", "free", "?x && ?y = ?y && ?x"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "fails under (free,two)");
    assert_eq!(lines.len(), 3);
    assert_ne!(lines[1], lines[2]);
    let o = run(&["check-eq", "--congruence", "cl", "(?x && ?y) && ?z = ?x && (?y && ?z)"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn truth_table_is_tab_separated() {
    let o = run(&["truth-table", "--two", "a && b"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "a\tb\tvalue\nT\tT\tT\nT\tF\tF\nF\tT\tF\nF\tF\tF\n");
    assert_eq!(run(&["truth-table", "--two", "a && U"]).status.code(), Some(2));
}

#[test]
fn translate_and_dual() {
    let o = run(&["translate", "--dir", "seq2cond", "a && b"]);
    assert_eq!(stdout(&o).trim(), "b <| a |> F");
    let o = run(&["translate", "--dir", "cond2seq", "b <| a |> F"]);
    assert_eq!(stdout(&o).trim(), "a && b || !a && F");
    let o = run(&["dual", "T <| a |> U"]);
    assert_eq!(stdout(&o).trim(), "U <| a |> F");
}

#[test]
fn axioms_from_a_file() {
    let path = scratch("and.ax");
    std::fs::write(&path, "# conjunction\nassoc: (?x && ?y) && ?z = ?x && (?y && ?z)\nneg: !!?x = ?x\n").unwrap();
    let set = format!("@{}", path.display());
    let o = run(&["verify-axioms", "--set", &set, "--congruence", "free"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("2/2 hold"));

    let o = run(&["find-model", "--axioms", &set, "--goal", "?x && ?y = ?y && ?x", "--max-size", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("size 2\n"));

    std::fs::write(&path, "broken ?x = ?x\n").unwrap();
    assert_eq!(run(&["verify-axioms", "--set", &set, "--congruence", "free"]).status.code(), Some(2));
    let missing = format!("@{}", scratch("missing.ax").display());
    assert_eq!(run(&["verify-axioms", "--set", &missing, "--congruence", "free"]).status.code(), Some(2));
}

#[test]
fn find_model_reports_a_valid_goal() {
    let o = run(&["find-model", "--axioms", "EqCL", "--goal", "!!?x = ?x", "--max-size", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "no counter-model up to size 2");
    let o = run(&["find-model", "--axioms", "EqCL", "--goal", "?x = ?x", "--max-size", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_set_is_an_error() {
    assert_eq!(run(&["verify-axioms", "--set", "Nope", "--congruence", "cl"]).status.code(), Some(2));
}
