//! Turning report documents into JSON, text or CSV.

use circan_core::exact::format as fmt_rational;
use circan_core::verify::VerificationRecord;
use circan_core::{IndexReport, IndexValue, Rational};
use serde_json::{json, Map, Value};

use crate::args::Format;

pub fn rational(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

/// Exact values as `"p/q"` strings, the rest as numbers.
pub fn index_value(v: &IndexValue) -> Value {
    match &v.exact {
        Some(r) => rational(r),
        None => json!(v.value),
    }
}

pub fn indices(report: &IndexReport) -> Value {
    let map: Map<String, Value> = report
        .entries()
        .map(|(i, v)| (i.name().to_string(), index_value(&v)))
        .collect();
    Value::Object(map)
}

/// Flattens nested objects into `a.b` keys; arrays of scalars become one
/// space-separated value.
fn flatten(prefix: &str, value: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match value {
        Value::Object(map) => map.iter().for_each(|(k, v)| flatten(&key(k), v, out)),
        Value::Array(items) if items.iter().all(|v| !v.is_object() && !v.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), parts.join(" ")));
        }
        Value::Array(items) => items
            .iter()
            .enumerate()
            .for_each(|(i, v)| flatten(&key(&i.to_string()), v, out)),
        _ => out.push((prefix.to_string(), scalar(value))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn csv_rows(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn document(doc: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("serializable") + "\n",
        Format::Text | Format::Csv => {
            let mut pairs = Vec::new();
            flatten("", doc, &mut pairs);
            if format == Format::Text {
                pairs.iter().map(|(k, v)| format!("{k}: {v}\n")).collect()
            } else {
                let rows: Vec<Vec<String>> = pairs.into_iter().map(|(k, v)| vec![k, v]).collect();
                csv_rows(&["field".into(), "value".into()], &rows)
            }
        }
    }
}

fn params(record: &VerificationRecord) -> Value {
    use circan_core::formulas::FamilyPoint::*;
    match record.point {
        DoubleLoopHalf { k } => json!({ "k": k }),
        DoubleLoopGen { n, a } => json!({ "n": n, "a": a }),
        C7Special { a } => json!({ "a": a }),
        Mc2h { h } => json!({ "m": 2, "h": h }),
        McGen { m, h } => json!({ "m": m, "h": h }),
        Mc23 => json!({ "m": 2, "h": 3 }),
    }
}

pub fn record(r: &VerificationRecord) -> Value {
    let checks: Vec<Value> = r
        .checks
        .iter()
        .map(|c| {
            json!({
                "field": c.field,
                "predicted": c.predicted,
                "computed": c.computed,
                "matched": c.matched,
                "tolerance": c.tolerance,
            })
        })
        .collect();
    json!({
        "family": r.family().name(),
        "params": params(r),
        "n": r.order,
        "domain_status": r.domain_status.name(),
        "matched": r.matched(),
        "failure": r.is_failure(),
        "checks": checks,
        "notes": r.notes,
    })
}

pub fn records(records: &[VerificationRecord], format: Format) -> String {
    match format {
        Format::Json => {
            let doc = Value::Array(records.iter().map(record).collect());
            serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
        }
        Format::Text => records.iter().map(record_text).collect::<String>() + &summary(records),
        Format::Csv => records_csv(records),
    }
}

fn record_text(r: &VerificationRecord) -> String {
    let verdict = if r.is_failure() {
        "FAIL"
    } else if r.matched() {
        "ok"
    } else {
        "mismatch (not asserted)"
    };
    let mut s = format!(
        "{} n={} {} {} ({} checks)\n",
        r.point,
        r.order.map_or("?".into(), |n| n.to_string()),
        r.domain_status,
        verdict,
        r.checks.len()
    );
    for c in r.mismatches() {
        s += &format!(
            "  {}: predicted {} computed {}\n",
            c.field, c.predicted, c.computed
        );
    }
    for n in &r.notes {
        s += &format!("  note: {n}\n");
    }
    s
}

fn summary(records: &[VerificationRecord]) -> String {
    let count = |f: &dyn Fn(&VerificationRecord) -> bool| records.iter().filter(|r| f(r)).count();
    use circan_core::formulas::DomainStatus::*;
    format!(
        "points {} in_domain {} known_exception {} out_of_domain {} failures {}\n",
        records.len(),
        count(&|r| r.domain_status == InDomain),
        count(&|r| r.domain_status == KnownException),
        count(&|r| r.domain_status == OutOfDomain),
        count(&|r| r.is_failure()),
    )
}

/// One row per point; for every field seen in any record, its predicted and
/// computed values and match flag.
fn records_csv(records: &[VerificationRecord]) -> String {
    let mut fields: Vec<&str> = Vec::new();
    for r in records {
        for c in &r.checks {
            if !fields.contains(&c.field.as_str()) {
                fields.push(&c.field);
            }
        }
    }
    let mut header: Vec<String> = ["family", "params", "n", "domain_status", "failure"]
        .map(String::from)
        .to_vec();
    for f in &fields {
        header.extend([
            format!("{f}.predicted"),
            format!("{f}.computed"),
            format!("{f}.matched"),
        ]);
    }
    let rows: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            let mut row = vec![
                r.family().name().to_string(),
                r.point.label(),
                r.order.map_or(String::new(), |n| n.to_string()),
                r.domain_status.name().to_string(),
                r.is_failure().to_string(),
            ];
            for f in &fields {
                match r.check(f) {
                    Some(c) => row.extend([
                        c.predicted.clone(),
                        c.computed.clone(),
                        c.matched.to_string(),
                    ]),
                    None => row.extend([String::new(), String::new(), String::new()]),
                }
            }
            row
        })
        .collect();
    csv_rows(&header, &rows)
}
