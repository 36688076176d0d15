//! JSON report envelopes and their table rendering.

use std::fmt::Write;

use serde::Serialize;

use crate::limits::Limits;

#[derive(Clone, Debug, Serialize)]
pub struct ConfigView {
    pub max_size: usize,
    pub max_tuples: usize,
    pub max_m: Option<usize>,
    pub max_n: Option<usize>,
    pub oracle: bool,
}

impl ConfigView {
    pub fn new(limits: &Limits, max_m: Option<usize>, max_n: Option<usize>, oracle: bool) -> Self {
        ConfigView {
            max_size: limits.max_size,
            max_tuples: limits.max_tuples,
            max_m,
            max_n,
            oracle,
        }
    }
}

/// Which implementation produced a value.
#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub check: String,
    pub source: &'static str,
    pub outcome: String,
}

impl Provenance {
    pub fn engine(check: impl Into<String>, outcome: impl ToString) -> Self {
        Provenance {
            check: check.into(),
            source: "engine",
            outcome: outcome.to_string(),
        }
    }

    pub fn oracle(check: impl Into<String>, outcome: impl ToString) -> Self {
        Provenance {
            check: check.into(),
            source: "oracle",
            outcome: outcome.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report<T: Serialize> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'static str,
    pub config: ConfigView,
    pub provenance: Vec<Provenance>,
    pub result: T,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<serde_json::Value>,
}

impl<T: Serialize> Report<T> {
    pub fn new(command: &'static str, config: ConfigView, result: T) -> Self {
        Report {
            tool: "aritylab",
            version: env!("CARGO_PKG_VERSION"),
            command,
            config,
            provenance: Vec::new(),
            result,
            timings: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }
}

/// Renders a report as indented `key: value` lines, with arrays of flat
/// objects laid out as aligned tables.
pub fn render_table(value: &serde_json::Value) -> String {
    let mut out = String::new();
    render(value, 0, &mut out);
    out
}

fn scalar(v: &serde_json::Value) -> Option<String> {
    use serde_json::Value::*;
    match v {
        Null => Some("-".into()),
        Bool(b) => Some(b.to_string()),
        Number(n) => Some(n.to_string()),
        String(s) => Some(s.clone()),
        Array(items)
            if items
                .iter()
                .all(|i| !i.is_object() && !i.is_array() || is_flat_array(i)) =>
        {
            Some(format!(
                "[{}]",
                items
                    .iter()
                    .map(|i| scalar(i).unwrap_or_default())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn is_flat_array(v: &serde_json::Value) -> bool {
    matches!(v, serde_json::Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()))
}

fn render(value: &serde_json::Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match value {
        serde_json::Value::Object(map) => {
            for (k, v) in map {
                match scalar(v) {
                    Some(text) => {
                        let _ = writeln!(out, "{pad}{k}: {text}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(v, indent + 1, out);
                    }
                }
            }
        }
        serde_json::Value::Array(items) => {
            if let Some(table) = flat_table(items) {
                for line in table {
                    let _ = writeln!(out, "{pad}{line}");
                }
            } else {
                for (i, item) in items.iter().enumerate() {
                    let _ = writeln!(out, "{pad}- [{i}]");
                    render(item, indent + 1, out);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}

/// Aligned rows when every item is an object whose values all render as scalars.
fn flat_table(items: &[serde_json::Value]) -> Option<Vec<String>> {
    let first = items.first()?.as_object()?;
    let headers: Vec<&String> = first.keys().collect();
    let mut rows = vec![headers.iter().map(|h| h.to_string()).collect::<Vec<_>>()];
    for item in items {
        let obj = item.as_object()?;
        if obj.len() != headers.len() {
            return None;
        }
        let row = headers
            .iter()
            .map(|h| obj.get(*h).and_then(scalar))
            .collect::<Option<Vec<_>>>()?;
        rows.push(row);
    }
    let widths: Vec<usize> = (0..headers.len())
        .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    Some(
        rows.iter()
            .map(|r| {
                r.iter()
                    .zip(&widths)
                    .map(|(cell, w)| format!("{cell:<w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
                    .trim_end()
                    .to_string()
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn flat_arrays_become_tables() {
        let v = json!({"rows": [{"n": 1, "ok": true}, {"n": 10, "ok": false}], "name": "x"});
        let text = render_table(&v);
        assert!(text.contains("n   ok"));
        assert!(text.contains("10  false"));
        assert!(text.contains("name: x"));
    }
}
