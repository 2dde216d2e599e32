//! Report assembly and rendering.
//!
//! Every report carries provenance metadata (tool version, the exact command
//! line, seed when one was used).  CSV renders metadata as `#`-prefixed
//! comment lines before the header row; JSON emits `{meta, rows}` objects
//! that validate against `report.schema.json` (schema_version 1).  Exact
//! rationals are serialized as `"p/q"` strings; floats use the shortest
//! decimal that round-trips a 64-bit value (Rust `Display` / serde_json).

use serde_json::{json, Map};

pub const SCHEMA_VERSION: u64 = 1;
pub const TOOL: &str = "bnspinor";

#[derive(Debug, Clone)]
pub struct Meta {
    pub command: String,
    pub seed: Option<u64>,
}

impl Meta {
    /// Provenance from the process arguments; argv[0] is normalised to the
    /// tool name so reports do not depend on the binary's path.
    pub fn from_env(seed: Option<u64>) -> Self {
        let args: Vec<String> = std::env::args().skip(1).collect();
        let command = if args.is_empty() {
            TOOL.to_string()
        } else {
            format!("{TOOL} {}", args.join(" "))
        };
        Meta { command, seed }
    }
}

/// One cell of a report row.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    UInt(u64),
    Float(f64),
    /// Exact rational, already rendered as "p/q".
    Rational(String),
    Text(String),
    Bool(bool),
}

impl Value {
    fn render_csv(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::UInt(v) => v.to_string(),
            Value::Float(v) => v.to_string(),
            Value::Rational(s) | Value::Text(s) => s.clone(),
            Value::Bool(b) => b.to_string(),
        }
    }

    fn render_json(&self) -> serde_json::Value {
        match self {
            Value::Int(v) => json!(v),
            Value::UInt(v) => json!(v),
            Value::Float(v) => json!(v),
            Value::Rational(s) | Value::Text(s) => json!(s),
            Value::Bool(b) => json!(b),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    pub meta: Meta,
    pub header: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Report {
    pub fn new(meta: Meta, header: Vec<String>, rows: Vec<Vec<Value>>) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == header.len()));
        Report { meta, header, rows }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# tool={TOOL} {}\n", env!("CARGO_PKG_VERSION")));
        out.push_str(&format!("# command={}\n", self.meta.command));
        if let Some(seed) = self.meta.seed {
            out.push_str(&format!("# seed={seed}\n"));
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Value::render_csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> String {
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (key, value) in self.header.iter().zip(row) {
                    obj.insert(key.to_string(), value.render_json());
                }
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = json!({
            "meta": meta_json(&self.meta),
            "rows": rows,
        });
        format!("{:#}\n", doc)
    }

    pub fn render(&self, format: crate::args::Format) -> String {
        match format {
            crate::args::Format::Csv => self.to_csv(),
            crate::args::Format::Json => self.to_json(),
        }
    }
}

fn meta_json(meta: &Meta) -> serde_json::Value {
    let mut obj = Map::new();
    obj.insert("schema_version".into(), json!(SCHEMA_VERSION));
    obj.insert("tool".into(), json!(TOOL));
    obj.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    obj.insert("command".into(), json!(meta.command));
    if let Some(seed) = meta.seed {
        obj.insert("seed".into(), json!(seed));
    }
    serde_json::Value::Object(obj)
}

/// Machine-readable failure object for JSON mode (exit code 4 paths).
pub fn error_json(meta: &Meta, code: &str, message: &str) -> String {
    let doc = json!({
        "meta": meta_json(meta),
        "error": { "code": code, "message": message },
    });
    format!("{:#}\n", doc)
}

/// Parsed CSV report: metadata lines kept verbatim, then header and rows.
/// Exists so tests (and downstream tooling) can round-trip the format.
#[derive(Debug, Clone, PartialEq)]
pub struct ParsedCsv {
    pub meta_lines: Vec<String>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl ParsedCsv {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut meta_lines = Vec::new();
        let mut header = None;
        let mut rows = Vec::new();
        for line in text.lines() {
            if line.starts_with('#') {
                if header.is_some() {
                    return Err("metadata after the header row".into());
                }
                meta_lines.push(line.to_string());
            } else if header.is_none() {
                header = Some(line.split(',').map(str::to_string).collect::<Vec<_>>());
            } else {
                rows.push(line.split(',').map(str::to_string).collect());
            }
        }
        let header = header.ok_or("missing header row")?;
        for (i, row) in rows.iter().enumerate() {
            if row.len() != header.len() {
                return Err(format!("row {i} has {} cells, header has {}", row.len(), header.len()));
            }
        }
        Ok(ParsedCsv {
            meta_lines,
            header,
            rows,
        })
    }

    pub fn serialize(&self) -> String {
        let mut out = String::new();
        for line in &self.meta_lines {
            out.push_str(line);
            out.push('\n');
        }
        out.push_str(&self.header.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_report() -> Report {
        Report::new(
            Meta {
                command: "bnspinor decompose --rank 1 --power 4".into(),
                seed: None,
            },
            vec!["a1".into(), "prob".into(), "prob_float".into()],
            vec![
                vec![
                    Value::Int(5),
                    Value::Rational("5/16".into()),
                    Value::Float(0.3125),
                ],
                vec![
                    Value::Int(3),
                    Value::Rational("9/16".into()),
                    Value::Float(0.5625),
                ],
            ],
        )
    }

    #[test]
    fn csv_round_trips_byte_identical() {
        let csv = sample_report().to_csv();
        let parsed = ParsedCsv::parse(&csv).unwrap();
        assert_eq!(parsed.serialize(), csv);
        assert_eq!(parsed.rows.len(), 2);
        assert_eq!(parsed.meta_lines.len(), 2);
    }

    #[test]
    fn json_shape() {
        let text = sample_report().to_json();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["meta"]["schema_version"], 1);
        assert_eq!(doc["meta"]["tool"], "bnspinor");
        assert_eq!(doc["rows"][0]["prob"], "5/16");
        assert_eq!(doc["rows"][0]["prob_float"], 0.3125);
        assert!(doc["meta"].get("seed").is_none());
    }

    #[test]
    fn float_rendering_round_trips() {
        for v in [0.1, 1.0, 6.835396e-5, 1.0 / 3.0, 1e-30, 123456.789] {
            let s = Value::Float(v).render_csv();
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }
}
