//! Time-series writers.
//!
//! CSV: one header row, then one row per record. `tick` is an integer and
//! every other column is written with 17 significant digits, which
//! round-trips an `f64` exactly.
//!
//! JSONL: a first line `{"schema_version":1,"config":{..}}` echoing the
//! run configuration, then one object per record keyed by column name.

use std::io::Write;

use serde_json::{json, Map, Value};

use crate::error::Result;
use crate::metrics::MetricsRecord;

use super::config::SimConfig;

pub const SCHEMA_VERSION: u32 = 1;

pub fn write_series<W: Write>(records: &[MetricsRecord], mut sink: W) -> Result<()> {
    writeln!(sink, "{}", MetricsRecord::columns().join(","))?;
    let mut line = String::with_capacity(400);
    for r in records {
        line.clear();
        line.push_str(&r.tick.to_string());
        for v in r.values() {
            line.push(',');
            line.push_str(&format!("{v:.16e}"));
        }
        writeln!(sink, "{line}")?;
    }
    sink.flush()?;
    Ok(())
}

pub fn write_jsonl<W: Write>(
    config: &SimConfig,
    records: &[MetricsRecord],
    mut sink: W,
) -> Result<()> {
    let head = json!({ "schema_version": SCHEMA_VERSION, "config": config });
    writeln!(sink, "{head}")?;
    let columns = MetricsRecord::columns();
    for r in records {
        let mut obj = Map::new();
        obj.insert(columns[0].clone(), Value::from(r.tick));
        for (name, v) in columns[1..].iter().zip(r.values()) {
            obj.insert(name.clone(), Value::from(v));
        }
        writeln!(sink, "{}", Value::Object(obj))?;
    }
    sink.flush()?;
    Ok(())
}
