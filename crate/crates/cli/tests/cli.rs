use rescale_cli::{bundled_examples, run, EXIT_MATH, EXIT_SCHEMA};
use serde_json::Value;

fn call(args: &[&str], input: &str) -> (i32, Value, String) {
    let mut argv = vec!["rescale"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut input.as_bytes(), &mut out, &mut err);
    let out = String::from_utf8(out).unwrap();
    let v = serde_json::from_str(&out).unwrap_or(Value::Null);
    (code, v, out)
}

fn ints(v: &Value) -> Vec<i64> {
    v.as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect()
}

#[test]
fn every_bundled_example_succeeds() {
    for (name, _) in bundled_examples() {
        let (code, v, _) = call(&["--example", name], "");
        assert_eq!(code, 0, "{name}: {v}");
        assert_eq!(v["status"], "ok", "{name}");
        assert!(v["identities"].is_array(), "{name}");
    }
}

#[test]
fn bundled_example_equals_stdin_replay() {
    for (name, text) in bundled_examples() {
        let (_, _, a) = call(&["--example", name], "");
        let (_, _, b) = call(&[], text);
        assert_eq!(a, b, "{name}");
    }
}

#[test]
fn output_is_canonical_json() {
    for (name, _) in bundled_examples() {
        let (_, v, text) = call(&["--example", name], "");
        let again = serde_json::to_string_pretty(&v).unwrap() + "\n";
        assert_eq!(text, again, "{name}");
    }
}

#[test]
fn lcs_ranks_of_two_generator_free_group() {
    let (code, v, _) = call(&[], r#"{"command":"lcs-ranks","series":[1,2],"truncate":6}"#);
    assert_eq!(code, 0);
    assert_eq!(ints(&v["result"]["ranks"]["ranks"]), vec![2, 1, 2, 3, 6, 9]);
}

#[test]
fn non_integral_series_is_a_math_error() {
    let (code, v, _) = call(&[], r#"{"command":"lcs-ranks","series":[1,{"n":1,"d":2}],"truncate":4}"#);
    assert_eq!(code, EXIT_MATH);
    assert_eq!(v["status"], "error");
    assert_eq!(v["error"]["kind"], "NonIntegralRank");
}

#[test]
fn malformed_input_is_a_schema_error() {
    for input in [
        "not json",
        r#"{"command":"hilbert"}"#,
        r#"{"command":"no-such-command"}"#,
        r#"{"command":"hilbert","algebra":{"family":"wedge","n":2},"typo":1}"#,
        r#"{"command":"hilbert","algebra":{"family":"generic","n":2,"l":3}}"#,
    ] {
        let (code, v, _) = call(&[], input);
        assert_eq!(code, EXIT_SCHEMA, "{input}");
        assert_eq!(v["error"]["kind"], "SchemaError", "{input}");
    }
    let (code, _, _) = call(&["--no-such-flag"], "");
    assert_eq!(code, EXIT_SCHEMA);
}

#[test]
fn torus_passes_all_three_koszul_tests() {
    let input = r#"{"command":"koszul-test","algebra":{"family":"torus","n":2},"truncate":10}"#;
    let (code, v, _) = call(&[], input);
    assert_eq!(code, 0);
    for mode in ["series", "quillen", "ce"] {
        assert_eq!(v["result"][mode]["verdict"]["status"], "PASS", "{mode}");
    }
    assert_eq!(v["result"]["agree"], true);
}

#[test]
fn flags_override_problem_fields() {
    let input = r#"{"command":"homotopy-ranks","series":[1,2],"k":1,"truncate":6}"#;
    let (_, v, _) = call(&["--k", "2", "--truncate", "8"], input);
    assert_eq!(v["settings"]["k"], 2);
    // P = 1 + 2t, k = 2: ranks sit in degrees 4 and 8.
    assert_eq!(ints(&v["result"]["ranks"]["ranks"]), vec![0, 0, 0, 2, 0, 0, 0, 1]);
}

#[test]
fn mismatched_command_is_rejected() {
    let (code, _, _) = call(&["bch", "--example", "lcs-free-2"], "");
    assert_eq!(code, EXIT_SCHEMA);
}

#[test]
fn table_format_renders_series() {
    let argv = ["rescale", "--example", "wedge-n2-k1", "--format", "table"];
    let (mut out, mut err) = (Vec::new(), Vec::new());
    assert_eq!(run(argv, &mut "".as_bytes(), &mut out, &mut err), 0);
    let text = String::from_utf8(out).unwrap();
    assert!(text.contains("status: ok"), "{text}");
}
