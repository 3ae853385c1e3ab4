//! Plain-text table of certificates, in the order given.

use holonomy_core::certificate::Certificate;
use serde_json::Value;

const HEADER: [&str; 4] = ["KIND", "INPUTS", "VERDICT", "SUMMARY"];

fn inputs_text(v: &Value) -> String {
    match v {
        Value::Object(m) if m.is_empty() => "-".to_string(),
        Value::Object(m) => m
            .iter()
            .filter(|(_, v)| !v.is_null())
            .map(|(k, v)| match v {
                Value::String(s) => format!("{k}={s}"),
                other => format!("{k}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

fn find<'a>(c: &'a Certificate, key: &str) -> Option<&'a Value> {
    c.facts.iter().find_map(|f| f.exact_values.get(key))
}

fn summary(c: &Certificate) -> String {
    match c.kind.as_str() {
        "slope" | "positive_witness" => match find(c, "root_count_in_V") {
            Some(n) => format!("roots in V: {n}"),
            None => String::new(),
        },
        "threshold" => {
            let get = |k: &str| find(c, k).map(|v| v.as_str().map(str::to_string).unwrap_or_else(|| v.to_string())).unwrap_or_default();
            format!("N0={} q={} c5={} c6={}", get("N0"), get("q"), get("c5"), get("c6"))
        }
        _ => format!("{} facts", c.facts.len()),
    }
}

/// Fixed-width table with one row per certificate; an empty list gives the
/// header alone.
pub fn report(certs: &[Certificate]) -> String {
    let rows: Vec<[String; 4]> =
        certs.iter().map(|c| [c.kind.clone(), inputs_text(&c.inputs), c.verdict.clone(), summary(c)]).collect();
    let mut widths = HEADER.map(|h| h.chars().count());
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: [&str; 4]| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                s.push_str(&format!("{cell:<w$}  "));
            }
        }
        s.trim_end().to_string() + "\n"
    };
    let mut out = line(HEADER);
    for r in &rows {
        out.push_str(&line([&r[0], &r[1], &r[2], &r[3]]));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn empty_list_is_header_only() {
        let r = report(&[]);
        assert_eq!(r.lines().count(), 1);
        assert!(r.starts_with("KIND"));
    }

    #[test]
    fn threshold_summary_renders_constants() {
        let mut c = Certificate::new("threshold", json!({}));
        c.fact("N0", "exact", json!({"N0": 9, "q": "1737/2000", "c5": "3/5", "c6": "29/10"}));
        let r = report(&[c.with_verdict("VERIFIED")]);
        assert!(r.contains("N0=9 q=1737/2000 c5=3/5 c6=29/10"), "{r}");
    }
}
