use domhg_web::{dominating_sets_json, expand_realizations_json, minimal_completions_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn dominating_sets_of_a_path() {
    let v = parse(&dominating_sets_json("ground: a,b,c\na-b\nb-c\n"));
    assert_eq!(v["dominating_sets"]["edges"], parse(r#"[["b"],["a","c"]]"#));
    assert_eq!(v["neighborhoods"]["edges"], parse(r#"[["a","b"],["b","c"]]"#));
}

#[test]
fn completions_summary() {
    let v = parse(&minimal_completions_json(3, 5));
    assert_eq!(v["summary"], "n=5 r=3 s=22 D=2 shapes=[C5:12 K2,3:10] closed-form");
    assert_eq!(v["minimal_completions"].as_array().unwrap().len(), 22);
    assert_eq!(v["decomposition_witness"].as_array().unwrap().len(), 2);
}

#[test]
fn errors_are_reported_in_band() {
    let v = parse(&minimal_completions_json(2, 9));
    assert!(v["error"].as_str().unwrap().starts_with("GroundTooLarge"));
    let v = parse(&dominating_sets_json("ground: 1,2\n1-3\n"));
    assert!(v["error"].as_str().unwrap().starts_with("ParseError"));
}

#[test]
fn expansion_of_a_star_forest() {
    let v = parse(&expand_realizations_json("ground: 1,2,3,4\n1-2\n3-4\n"));
    // 2K2 itself plus one extra edge between either end of each K2.
    assert_eq!(v["realizations"].as_array().unwrap().len(), 5);
}
