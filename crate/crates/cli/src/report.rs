use std::io::Write;

use clap::ValueEnum;
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    JsonLines,
    Svg,
}

pub type Record = Vec<(String, String)>;

pub fn record<K: Into<String>, V: ToString>(pairs: impl IntoIterator<Item = (K, V)>) -> Record {
    pairs
        .into_iter()
        .map(|(k, v)| (k.into(), v.to_string()))
        .collect()
}

/// Block records print one `key=value` per line with a blank line between
/// records; row records print each record on one line.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Layout {
    Block,
    Rows,
}

fn json_value(v: &str) -> Value {
    match v {
        "true" => Value::Bool(true),
        "false" => Value::Bool(false),
        _ => match v.parse::<i64>() {
            Ok(i) => Value::from(i),
            Err(_) => Value::String(v.to_string()),
        },
    }
}

pub fn to_json(rec: &Record) -> String {
    let mut obj = Map::new();
    for (k, v) in rec {
        obj.insert(k.clone(), json_value(v));
    }
    Value::Object(obj).to_string()
}

pub fn write_records(
    out: &mut impl Write,
    records: &[Record],
    layout: Layout,
    json: bool,
) -> std::io::Result<()> {
    for (i, rec) in records.iter().enumerate() {
        if json {
            writeln!(out, "{}", to_json(rec))?;
            continue;
        }
        match layout {
            Layout::Rows => {
                let line: Vec<String> = rec.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(out, "{}", line.join(" "))?;
            }
            Layout::Block => {
                if i > 0 {
                    writeln!(out)?;
                }
                for (k, v) in rec {
                    writeln!(out, "{k}={v}")?;
                }
            }
        }
    }
    Ok(())
}
