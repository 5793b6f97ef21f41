//! Plain-text rendering of JSON reports.
//!
//! Objects flatten to `a.b.c = value` lines. An array of flat objects that
//! share the same keys becomes a tab-separated table introduced by
//! `[path]` and closed by a blank line. Other arrays of small values go on
//! one line, items separated by spaces and their parts by commas.

use serde_json::Value;

pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    walk("", v, &mut out);
    out
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{}.{}", prefix, key)
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

/// A table cell: a scalar, a list of scalars, or a small flat object.
fn cell(v: &Value) -> Option<String> {
    if let Some(s) = scalar(v) {
        return Some(s);
    }
    match v {
        Value::Array(items) => items
            .iter()
            .map(cell)
            .collect::<Option<Vec<_>>>()
            .map(|c| c.join(",")),
        Value::Object(map) => map
            .values()
            .map(scalar)
            .collect::<Option<Vec<_>>>()
            .map(|c| c.join(":")),
        _ => None,
    }
}

fn table(items: &[Value]) -> Option<(Vec<String>, Vec<Vec<String>>)> {
    let first = items.first()?.as_object()?;
    let keys: Vec<String> = first.keys().cloned().collect();
    let mut rows = Vec::with_capacity(items.len());
    for it in items {
        let obj = it.as_object()?;
        if obj.len() != keys.len() {
            return None;
        }
        let row = keys
            .iter()
            .map(|k| obj.get(k).and_then(cell))
            .collect::<Option<Vec<_>>>()?;
        rows.push(row);
    }
    Some((keys, rows))
}

fn walk(prefix: &str, v: &Value, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                walk(&join(prefix, k), val, out);
            }
        }
        Value::Array(items) if items.is_empty() => out.push_str(&format!("{} = []\n", prefix)),
        Value::Array(items) => {
            if let Some(vals) = items.iter().map(scalar).collect::<Option<Vec<_>>>() {
                out.push_str(&format!("{} = {}\n", prefix, vals.join(" ")));
            } else if let Some((keys, rows)) = table(items) {
                out.push_str(&format!("[{}]\n{}\n", prefix, keys.join("\t")));
                for r in rows {
                    out.push_str(&r.join("\t"));
                    out.push('\n');
                }
                out.push('\n');
            } else if let Some(vals) = items.iter().map(cell).collect::<Option<Vec<_>>>() {
                out.push_str(&format!("{} = {}\n", prefix, vals.join(" ")));
            } else {
                for (i, it) in items.iter().enumerate() {
                    walk(&format!("{}[{}]", prefix, i), it, out);
                }
            }
        }
        _ => out.push_str(&format!("{} = {}\n", prefix, scalar(v).expect("scalar"))),
    }
}
