use gauss_spectra_cli::run;
use serde_json::Value;

fn call(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("gauss-spectra").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let (code, out, err) = call(&full);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn parse_relabels_canonically() {
    assert_eq!(
        call(&["parse", "7 3 7 3"]),
        (0, "1 2 1 2\n".into(), String::new())
    );
}

#[test]
fn count_methods_agree_on_figure_eight() {
    let value = json(&["count", "1 2 3 1 4 3 2 4", "oooo"]);
    let methods = value["methods"].as_object().unwrap();
    assert_eq!(methods.len(), 3);
    assert!(methods.values().all(|v| *v == value["count"]));
}

#[test]
fn count_skips_zlcp_when_chords_are_erased() {
    let value = json(&["count", "1 2 1 2", "ux"]);
    assert!(value["methods"].get("zlcp").is_none());
    assert_eq!(value["count"], 1);
}

#[test]
fn graph_json_lists_edges() {
    let value = json(&["graph", "1 2 3 1 4 3 2 4"]);
    assert_eq!(value["n"], 4);
    assert_eq!(value["edges"].as_array().unwrap().len(), 4);
}

#[test]
fn charpoly_json_has_coefficients() {
    let value = json(&["charpoly", "1 2 3 1 2 3"]);
    assert_eq!(value["coefficients"], serde_json::json!([0, 3, 0, 1]));
}

#[test]
fn pretzel_row_round_trips() {
    let (code, out, _) = call(&["pretzel", "3", "1", "1", "--m", "2", "--j", "0"]);
    assert_eq!(code, 0);
    let value: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["brute_force"], 7);
    assert_eq!(value["agrees"], true);
    let again: Value = serde_json::from_str(&value.to_string()).unwrap();
    assert_eq!(again, value);
}

#[test]
fn domain_errors_exit_one_with_a_named_message() {
    let (code, out, err) = call(&["parse", "1 2 1"]);
    assert_eq!(code, 1);
    assert!(out.is_empty());
    assert!(err.starts_with("MalformedCode:"), "{err}");

    let (code, _, err) = call(&["pretzel", "2", "4", "1", "--m", "1"]);
    assert_eq!(code, 1);
    assert!(err.starts_with("InvalidPretzel:"), "{err}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&["frobnicate"]).0, 2);
    assert_eq!(call(&["count", "1 1"]).0, 2);
    assert_eq!(call(&["--threads", "0", "parse", "1 1"]).0, 2);
    assert_eq!(
        call(&[
            "pretzel",
            "1",
            "1",
            "1",
            "--m",
            "1",
            "--closed-only",
            "--census-only"
        ])
        .0,
        2
    );
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = call(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("pretzel"));
}

#[test]
fn verify_passes_for_small_diagrams() {
    let (code, out, _) = call(&["verify", "--max-chords", "3"]);
    assert_eq!(code, 0);
    assert!(out.lines().all(|l| l.starts_with("PASS ")), "{out}");
}
