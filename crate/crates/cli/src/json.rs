//! Canonical JSON encoding of exact values. Objects serialize with sorted
//! keys and rationals as `{"d": q, "n": p}`, so re-parsing and
//! re-serializing a report reproduces it byte for byte.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use rescale_core::algebra::Verdict;
use rescale_core::exact::{PowerSeries, Rational};
use rescale_core::lcs::{RankKind, RankTable};
use rescale_core::malcev::MalcevElement;
use rescale_core::tensor::{GradedLieDims, TensorElement};
use serde_json::{json, Map, Number, Value};

pub fn int(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("integer literal"))
}

pub fn rational(q: &Rational) -> Value {
    json!({ "n": int(q.numer()), "d": int(q.denom()) })
}

/// Parses `{"n": p, "d": q}` back into a rational.
pub fn parse_rational(v: &Value) -> Option<Rational> {
    let part = |k: &str| v.get(k).and_then(|x| BigInt::from_str(&x.to_string()).ok());
    let d = part("d").filter(|d| *d != BigInt::from(0))?;
    Some(Rational::new(part("n")?, d))
}

pub fn series(s: &PowerSeries) -> Value {
    json!({
        "order": s.order(),
        "coefficients": s.coeffs().iter().map(rational).collect::<Vec<_>>(),
        "display": s.to_string(),
    })
}

/// Reads the coefficients written by `series`.
pub fn parse_series(v: &Value) -> Option<PowerSeries> {
    let coeffs = v.get("coefficients")?.as_array()?;
    let cs = coeffs.iter().map(parse_rational).collect::<Option<Vec<_>>>()?;
    let order = cs.len().checked_sub(1)?;
    Some(PowerSeries::from_coeffs(cs, order))
}

/// Degree-indexed dimensions as `{"degree": dim}` for nonzero degrees.
pub fn dims(d: &GradedLieDims) -> Value {
    json!({
        "truncation": d.truncation(),
        "dims": d.iter().filter(|(_, v)| *v != 0).map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<_, _>>(),
    })
}

pub fn rank_table(t: &RankTable) -> Value {
    let kind = match t.kind {
        RankKind::LowerCentral => "lower-central",
        RankKind::Homotopy => "homotopy",
    };
    json!({
        "kind": kind,
        "truncation": t.truncation(),
        "first_degree": 1,
        "ranks": t.ranks().iter().map(int).collect::<Vec<_>>(),
    })
}

pub fn verdict(v: &Verdict) -> Value {
    let mut m = Map::new();
    m.insert("status".into(), json!(v.status()));
    m.insert("summary".into(), json!(v.to_string()));
    match v {
        Verdict::ConsistentUpTo { degree } => {
            m.insert("kind".into(), json!("consistent-up-to"));
            m.insert("degree".into(), json!(degree));
        }
        Verdict::TheoremBacked { reason } => {
            m.insert("kind".into(), json!("theorem-backed"));
            m.insert("reason".into(), json!(reason));
        }
        Verdict::Fail { degree, detail } => {
            m.insert("kind".into(), json!("fail"));
            m.insert("degree".into(), json!(degree));
            m.insert("detail".into(), json!(detail));
        }
    }
    Value::Object(m)
}

pub fn tensor(t: &TensorElement) -> Value {
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|(w, c)| {
            let word: Vec<&str> = w.letters().map(|l| t.gens().name(l)).collect();
            json!({ "word": word.join(" "), "coefficient": rational(c) })
        })
        .collect();
    json!({ "truncation": t.truncation(), "terms": terms, "display": t.to_string() })
}

pub fn malcev(x: &MalcevElement) -> Value {
    let mut v = tensor(x.lie().as_tensor());
    v["filtration_order"] = json!(x.filtration_order());
    v
}

pub fn bigraded(m: &BTreeMap<(usize, usize), u64>) -> Value {
    Value::Array(m.iter().filter(|(_, &d)| d != 0).map(|(&(a, b), &d)| json!([a, b, d])).collect())
}

/// Pretty canonical text of a value.
pub fn to_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable")
}
