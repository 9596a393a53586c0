use std::io::Write;
use std::process::{Command, Output, Stdio};

fn domhg(args: &[&str], stdin: &str) -> Output {
    domhg_env(args, stdin, &[])
}

fn domhg_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domhg"))
        .args(args)
        .envs(env.iter().copied())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn domsets_of_two_disjoint_edges() {
    let o = domhg(&["domsets"], "ground: 1,2,3,4\n1-2\n3-4\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "ground: 1,2,3,4\n1,3\n2,3\n1,4\n2,4\n");

    let o = domhg(&["domsets", "--json"], "ground: 1,2,3,4\n1-2,3-4\n");
    assert_eq!(
        stdout(&o).trim(),
        r#"{"ground":["1","2","3","4"],"edges":[["1","3"],["2","3"],["1","4"],["2","4"]]}"#
    );
}

#[test]
fn neighborhoods_and_transversal() {
    let o = domhg(&["neighborhoods"], "ground: 1,2,3\n1-2\n");
    assert_eq!(stdout(&o), "ground: 1,2,3\n3\n1,2\n");
    let o = domhg(&["transversal"], "ground: 1\n1\n");
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "ground: 1\n1\n".to_string()));
}

#[test]
fn minimize_is_opt_in() {
    let o = domhg(&["transversal"], "ground: 1,2\n1\n1,2\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: NotAnAntichain"));
    let o = domhg(&["transversal", "--minimize"], "ground: 1,2\n1\n1,2\n");
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "ground: 1,2\n1\n".to_string()));
}

#[test]
fn meet_and_leq_read_blocks() {
    let input = "ground: 1,2,3\n1\n2,3\n---\nground: 1,2,3\n2\n1,3\n";
    let o = domhg(&["meet"], input);
    assert_eq!(stdout(&o), "ground: 1,2,3\n1,2\n1,3\n2,3\n");
    let o = domhg(&["leq"], "ground: 1,2,3\n1,2\n1,3\n2,3\n---\nground: 1,2,3\n1\n2,3\n");
    assert_eq!(stdout(&o), "true\n");
    let o = domhg(&["leq", "--json"], "ground: 1,2\n1\n---\nground: 1,2\n1,2\n");
    assert_eq!(stdout(&o), "{\"leq\":false}\n");
}

#[test]
fn recognize_reports_realizations() {
    let o = domhg(&["recognize", "--json"], "ground: 1,2,3,4\n1,3\n1,4\n2,3\n2,4\n");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["is_domination"], true);
    assert_eq!(v["rejected_by_necessary_condition"], false);
    assert_eq!(v["realizations"].as_array().unwrap().len(), 5);

    let o = domhg(&["recognize"], "ground: 1,2,3,4\n1,2,3\n1,2,4\n1,3,4\n2,3,4\n");
    assert!(stdout(&o).starts_with("domination: no\nrejected by necessary condition: true\n"));
}

#[test]
fn uniform_check_counts_matchings() {
    let o = domhg(&["uniform-check", "--r", "2", "--ground", "6", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["realizations"].as_array().unwrap().len(), 15);
}

#[test]
fn minimal_completions_of_rank_three_on_five_points() {
    let o = domhg(&["minimal-completions", "--r", "3", "--ground", "1,2,3,4,5", "--json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 22);
    assert!(items.iter().all(|i| !i["witnesses"].as_array().unwrap().is_empty()));

    let o = domhg(&["minimal-completions", "--r", "3", "--ground", "5", "--table"], "");
    assert_eq!(stdout(&o), "n=5 r=3 s=22 D=2 shapes=[C5:12 K2,3:10] closed-form\n");
}

#[test]
fn completions_and_decompose() {
    let o = domhg(&["completions", "--r", "2", "--ground", "3"], "");
    assert!(stdout(&o).starts_with("completions: 4\n"));
    let o = domhg(&["decompose", "--r", "2", "--ground", "1,2,3", "--json"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], 2);
    assert_eq!(v["exactness"], "exhaustive");
}

#[test]
fn star_forests_and_expansion() {
    let o = domhg(&["star-forests", "--ground", "8", "--count"], "");
    assert_eq!(stdout(&o), "5041\n");
    let o = domhg(&["expand-realizations"], "ground: 1,2,3,4,5,6,7,8\n1-2\n3-4\n5-6\n5-7\n5-8\n");
    assert!(stdout(&o).starts_with("realizations: 25\n"));
    let o = domhg(&["expand-realizations"], "ground: 1,2,3\n1-2\n2-3\n1-3\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: NotAStarForest"));
}

#[test]
fn exit_codes() {
    // Domain errors exit with 1 and name the error.
    let o = domhg(&["completions", "--r", "3", "--ground", "6"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: GroundTooLarge"));
    let o = domhg(&["uniform-check", "--r", "4", "--ground", "3"], "");
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).starts_with("error: RankOutOfRange"));

    // Parse errors exit with 2 and carry the line.
    let o = domhg(&["domsets"], "ground: 1,2\n1-3\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"));
    let o = domhg(&["transversal"], "ground: 1,1\n1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).starts_with("error: DuplicateLabel"));

    // Unknown flags are rejected.
    let o = domhg(&["domsets", "--bogus"], "");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn caps_can_be_raised_but_not_past_the_hard_cap() {
    let o = domhg(&["completions", "--r", "2", "--ground", "6", "--cap", "6"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = domhg_env(
        &["completions", "--r", "2", "--ground", "6", "--cap", "6"],
        "",
        &[("DOMHG_MAX_N", "5")],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cap 5"));
}

#[test]
fn verify_is_independent_of_workers() {
    let one = domhg(&["verify", "--workers", "1"], "");
    let three = domhg(&["verify", "--workers", "3"], "");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&three));
    assert_eq!(stdout(&one).lines().filter(|l| l.starts_with("PASS")).count(), 11);
}
