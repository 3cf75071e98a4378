use serde_json::{json, Map, Value};

use twisted_dirac::{BigUint, FamilyIndex, Rational, Spectrum, SpectrumSource};

/// How results are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Table,
    Csv,
    Json,
}

/// Left-aligned columns separated by two spaces, with a header row.
pub(crate) fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut text = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            text.push_str(cell);
            let pad = widths[i] - cell.chars().count();
            text.extend(std::iter::repeat_n(' ', pad));
        }
        out.push_str(text.trim_end());
        out.push('\n');
    };
    line(&mut headers.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

pub(crate) fn csv(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(headers).expect("write to memory");
    for row in rows {
        writer.write_record(row).expect("write to memory");
    }
    String::from_utf8(writer.into_inner().expect("flush to memory")).expect("utf-8")
}

/// Pretty-printed JSON with sorted keys and a trailing newline.
pub(crate) fn json(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    text
}

pub(crate) fn big(v: &BigUint) -> Value {
    Value::String(v.to_string())
}

pub(crate) fn rational(v: &Rational) -> Value {
    Value::String(v.to_string())
}

fn opt(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn index_json(idx: &FamilyIndex) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("family".into(), json!(idx.family.number()));
    m.insert("r".into(), json!(idx.r));
    m.insert("s".into(), json!(idx.s));
    m.insert("epsilon".into(), json!(idx.epsilon));
    m.insert("l".into(), json!(idx.l));
    m
}

fn describe(source: &SpectrumSource) -> String {
    match source {
        SpectrumSource::LineBundle { d, m } => {
            format!("squared Dirac operator of CP^{d} twisted by gamma^{}", m.0)
        }
        SpectrumSource::NormalSpinor(p) => format!(
            "squared Dirac operator of CP^{} twisted by the normal spinor bundle in CP^{}",
            p.d(),
            p.n()
        ),
    }
}

pub(crate) fn spectrum(s: &Spectrum, format: OutputFormat) -> String {
    match format {
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> = s
                .entries()
                .iter()
                .map(|e| {
                    let parts: Vec<String> = e
                        .contributions
                        .iter()
                        .map(|c| format!("{} x{}", c.index, c.multiplicity))
                        .collect();
                    vec![e.eigenvalue.to_string(), e.multiplicity.to_string(), parts.join(", ")]
                })
                .collect();
            let mut out = format!("{}, eigenvalues <= {}\n", describe(&s.source), s.cutoff);
            if rows.is_empty() {
                out.push_str("no eigenvalues in range\n");
            } else {
                out.push_str(&table(&["eigenvalue", "multiplicity", "contributions"], &rows));
            }
            out
        }
        OutputFormat::Csv => {
            let mut rows = Vec::new();
            for e in s.entries() {
                for c in &e.contributions {
                    let i = &c.index;
                    rows.push(vec![
                        e.eigenvalue.to_string(),
                        c.multiplicity.to_string(),
                        i.family.number().to_string(),
                        opt(i.r),
                        opt(i.s),
                        opt(i.epsilon),
                        i.l.to_string(),
                    ]);
                }
                rows.push(vec![
                    e.eigenvalue.to_string(),
                    e.multiplicity.to_string(),
                    "TOTAL".into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    String::new(),
                ]);
            }
            csv(&["eigenvalue", "multiplicity", "family", "r", "s", "epsilon", "l"], &rows)
        }
        OutputFormat::Json => {
            let mut entries = Map::new();
            let mut contributions = Vec::new();
            for e in s.entries() {
                entries.insert(e.eigenvalue.to_string(), big(&e.multiplicity));
                for c in &e.contributions {
                    let mut m = index_json(&c.index);
                    m.insert("eigenvalue".into(), json!(e.eigenvalue));
                    m.insert("multiplicity".into(), big(&c.multiplicity));
                    m.insert("highest_weight".into(), json!(c.highest_weight.coords()));
                    contributions.push(Value::Object(m));
                }
            }
            let mut root = Map::new();
            match s.source {
                SpectrumSource::LineBundle { d, m } => {
                    root.insert("operator".into(), json!("line-bundle"));
                    root.insert("d".into(), json!(d));
                    root.insert("m".into(), json!(m.0));
                }
                SpectrumSource::NormalSpinor(p) => {
                    root.insert("operator".into(), json!("normal"));
                    root.insert("d".into(), json!(p.d()));
                    root.insert("n".into(), json!(p.n()));
                }
            }
            root.insert("max_eig".into(), json!(s.cutoff));
            root.insert("entries".into(), Value::Object(entries));
            root.insert("contributions".into(), Value::Array(contributions));
            json(&Value::Object(root))
        }
    }
}

/// Renders a flat list of `(key, value)` facts.
pub(crate) fn record(title: &str, fields: &[(&str, Value)], format: OutputFormat) -> String {
    let plain = |v: &Value| match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    };
    match format {
        OutputFormat::Table => {
            let rows: Vec<Vec<String>> =
                fields.iter().map(|(k, v)| vec![k.to_string(), plain(v)]).collect();
            format!("{title}\n{}", table(&["quantity", "value"], &rows))
        }
        OutputFormat::Csv => {
            let headers: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let row: Vec<String> = fields.iter().map(|(_, v)| plain(v)).collect();
            csv(&headers, &[row])
        }
        OutputFormat::Json => {
            let map: Map<String, Value> =
                fields.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
            json(&Value::Object(map))
        }
    }
}
