use std::io::{self, Write};

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use demfusion::{LaurentCharacter, Status, Weight};

/// One line of output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub status: Status,
    pub data: Value,
    pub counterexample: Option<String>,
}

impl Report {
    pub fn new(command: &str, inputs: Value, data: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            status: Status::Pass,
            data,
            counterexample: None,
        }
    }

    pub fn with_status(mut self, status: Status, counterexample: Option<String>) -> Self {
        self.status = status;
        self.counterexample = counterexample;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

pub fn emit(reports: &[Report], format: Format) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in reports {
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"))?,
            Format::Table => write_table(&mut out, r)?,
        }
    }
    Ok(())
}

fn write_table(out: &mut impl Write, r: &Report) -> io::Result<()> {
    writeln!(out, "{} [{}]", r.command, status_word(r.status))?;
    if let Value::Object(inputs) = &r.inputs {
        for (k, v) in inputs {
            writeln!(out, "  {k:<16} {v}")?;
        }
    }
    match &r.data {
        Value::Object(data) => {
            for (k, v) in data {
                match v {
                    Value::Array(items) if items.len() > 1 => {
                        writeln!(out, "  {k}:")?;
                        for item in items {
                            writeln!(out, "    {item}")?;
                        }
                    }
                    _ => writeln!(out, "  {k:<16} {v}")?,
                }
            }
        }
        other => writeln!(out, "  {other}")?,
    }
    if let Some(c) = &r.counterexample {
        writeln!(out, "  counterexample   {c}")?;
    }
    writeln!(out)
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Experimental => "experimental",
    }
}

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
pub fn int(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}

pub fn uint(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::String(n.to_string()),
    }
}

/// `[[weight, multiplicity], …]` in weight order.
pub fn terms(chi: &LaurentCharacter) -> Value {
    Value::Array(chi.terms().map(|(w, c)| Value::Array(vec![weight(w), int(c)])).collect())
}

pub fn multiset(parts: &[(Weight, BigInt)]) -> Value {
    Value::Array(parts.iter().map(|(w, c)| Value::Array(vec![weight(w), int(c)])).collect())
}

pub fn weight(w: &Weight) -> Value {
    Value::from(w.0.clone())
}

/// Builds a JSON object from `(key, value)` pairs.
pub fn object<const N: usize>(pairs: [(&str, Value); N]) -> Value {
    let mut map = Map::new();
    for (k, v) in pairs {
        map.insert(k.to_string(), v);
    }
    Value::Object(map)
}
