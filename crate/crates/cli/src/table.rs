//! Plain-text rendering of reports.

use serde_json::Value;

use crate::json;

/// One `path: value` line per leaf. Series print as polynomials, rationals
/// as `p/q`, and short scalar arrays inline.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    walk(v, "", &mut out);
    out
}

fn walk(v: &Value, path: &str, out: &mut String) {
    if let Some(s) = json::parse_series(v) {
        out.push_str(&format!("{path}: {s} + O(t^{})\n", s.order() + 1));
        return;
    }
    if let Some(q) = json::parse_rational(v) {
        out.push_str(&format!("{path}: {q}\n"));
        return;
    }
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                if k == "display" {
                    continue;
                }
                let p = if path.is_empty() { k.clone() } else { format!("{path}.{k}") };
                walk(x, &p, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = xs.iter().map(scalar).collect();
            out.push_str(&format!("{path}: [{}]\n", items.join(", ")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                walk(x, &format!("{path}[{i}]"), out);
            }
        }
        other => out.push_str(&format!("{path}: {}\n", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn leaves_one_per_line() {
        let v = json!({
            "a": {"n": 1, "d": 2},
            "s": {"order": 1, "coefficients": [{"n": 1, "d": 1}, {"n": 2, "d": 1}], "display": "ignored"},
            "xs": [1, 2],
            "t": "ok",
        });
        assert_eq!(render(&v), "a: 1/2\ns: 1 + 2t + O(t^2)\nt: ok\nxs: [1, 2]\n");
    }
}
