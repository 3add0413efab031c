//! Plain-text rendering of a report. Scalars and short arrays become
//! `key  value` lines; arrays of objects become aligned tables.

use serde_json::Value;

pub fn render(doc: &Value) -> String {
    let mut lines = Vec::new();
    walk(doc, "", &mut lines);
    let width = lines
        .iter()
        .filter_map(|l| match l {
            Line::Pair(k, _) => Some(k.len()),
            Line::Block(_) => None,
        })
        .max()
        .unwrap_or(0);
    let mut out = String::new();
    for l in lines {
        match l {
            Line::Pair(k, v) => out.push_str(&format!("{k:<width$}  {v}\n")),
            Line::Block(b) => out.push_str(&b),
        }
    }
    out
}

enum Line {
    Pair(String, String),
    Block(String),
}

fn join(prefix: &str, key: &str) -> String {
    if prefix.is_empty() {
        key.to_string()
    } else {
        format!("{prefix}.{key}")
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => format!("[{}]", xs.iter().map(scalar).collect::<Vec<_>>().join(" ")),
        Value::Object(_) => v.to_string(),
        _ => v.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Object(_) => false,
        Value::Array(xs) => xs.iter().all(|x| !x.is_object()),
        _ => true,
    }
}

fn walk(v: &Value, prefix: &str, out: &mut Vec<Line>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                walk(x, &join(prefix, k), out);
            }
        }
        Value::Array(xs) if !xs.is_empty() && xs.iter().all(Value::is_object) => {
            out.push(Line::Block(object_table(prefix, xs)));
        }
        Value::Array(xs) if xs.len() > 1 && xs.iter().all(|x| x.is_array()) => {
            for (i, x) in xs.iter().enumerate() {
                out.push(Line::Pair(format!("{prefix}[{i}]"), scalar(x)));
            }
        }
        _ if is_flat(v) => out.push(Line::Pair(prefix.to_string(), scalar(v))),
        _ => out.push(Line::Pair(prefix.to_string(), v.to_string())),
    }
}

fn object_table(title: &str, rows: &[Value]) -> String {
    let mut headers: Vec<String> = Vec::new();
    for r in rows {
        for k in r.as_object().into_iter().flat_map(|m| m.keys()) {
            if !headers.contains(k) {
                headers.push(k.clone());
            }
        }
    }
    let cells: Vec<Vec<String>> = rows
        .iter()
        .map(|r| headers.iter().map(|h| scalar(r.get(h).unwrap_or(&Value::Null))).collect())
        .collect();
    let widths: Vec<usize> = headers
        .iter()
        .enumerate()
        .map(|(i, h)| cells.iter().map(|c| c[i].len()).chain([h.len()]).max().unwrap_or(0))
        .collect();
    let fmt_row = |row: &[String]| {
        let parts: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("  {}\n", parts.join("  ").trim_end())
    };
    let mut s = format!("{title}:\n");
    s.push_str(&fmt_row(&headers));
    for c in &cells {
        s.push_str(&fmt_row(c));
    }
    s
}
