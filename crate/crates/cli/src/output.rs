use serde_json::Value;

use crate::commands::{Outcome, SEARCH_COLUMNS};
use crate::Format;

pub fn render(outcome: &Outcome, format: Format) -> anyhow::Result<String> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&outcome.record)? + "\n"),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            match &outcome.rows {
                Some(rows) => {
                    w.write_record(SEARCH_COLUMNS)?;
                    for r in rows {
                        w.write_record(r)?;
                    }
                }
                None => {
                    w.write_record(["key", "value"])?;
                    let mut flat = Vec::new();
                    flatten("", &outcome.record, &mut flat);
                    for (k, v) in flat {
                        w.write_record([k, v])?;
                    }
                }
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
    }
}

/// Dotted paths to every scalar, in document order.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) => a
            .iter()
            .enumerate()
            .for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        Value::Null => out.push((prefix.to_string(), String::new())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}
