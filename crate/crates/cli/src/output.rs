use clap::ValueEnum;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Human,
}

/// A command result: one JSON value, optionally with explicit table rows for CSV/human output.
pub struct Output {
    pub value: Value,
    pub rows: Option<Vec<Value>>,
}

impl Output {
    pub fn single(value: Value) -> Self {
        Output { value, rows: None }
    }
}

/// Float with 15 significant digits.
pub fn sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    format!("{x:.14e}")
}

fn is_float_key(key: &str) -> bool {
    let last = key.rsplit('.').next().unwrap_or(key);
    last == "float" || last.ends_with("_float")
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = a.iter().map(scalar).collect();
            out.push((prefix.to_string(), parts.join(",")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        Value::String(s) if is_float_key(prefix) => {
            let s = s.parse::<f64>().map(sig15).unwrap_or_else(|_| s.clone());
            out.push((prefix.to_string(), s));
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) if n.is_f64() => sig15(n.as_f64().unwrap_or(f64::NAN)),
        other => other.to_string(),
    }
}

fn table(out: &Output) -> (Vec<String>, Vec<Vec<String>>) {
    let rows: Vec<Value> = out.rows.clone().unwrap_or_else(|| vec![out.value.clone()]);
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            let mut f = Vec::new();
            flatten("", r, &mut f);
            f
        })
        .collect();
    let mut header: Vec<String> = Vec::new();
    for row in &flat {
        for (k, _) in row {
            if !header.contains(k) {
                header.push(k.clone());
            }
        }
    }
    let body = flat
        .iter()
        .map(|row| {
            header
                .iter()
                .map(|h| row.iter().find(|(k, _)| k == h).map(|(_, v)| v.clone()).unwrap_or_default())
                .collect()
        })
        .collect();
    (header, body)
}

pub fn render(out: &Output, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&out.value).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let (header, body) = table(out);
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&header).expect("in-memory write");
            for row in &body {
                w.write_record(row).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
        }
        Format::Human => {
            let (header, body) = table(out);
            let mut s = String::new();
            if body.len() == 1 && out.rows.is_none() {
                let width = header.iter().map(|h| h.chars().count()).max().unwrap_or(0);
                for (h, v) in header.iter().zip(&body[0]) {
                    s.push_str(&format!("{h:<width$}  {v}\n"));
                }
                return s;
            }
            let widths: Vec<usize> = (0..header.len())
                .map(|i| body.iter().map(|r| r[i].chars().count()).chain([header[i].chars().count()]).max().unwrap_or(0))
                .collect();
            let line = |cells: &[String]| {
                let parts: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
                parts.join("  ").trim_end().to_string() + "\n"
            };
            s.push_str(&line(&header));
            for r in &body {
                s.push_str(&line(r));
            }
            s
        }
    }
}
