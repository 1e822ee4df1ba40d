use std::fs::File;
use std::io::{self, Write};
use std::path::Path;

use serde_json::{Map, Value};

use crate::args::Format;
use crate::CliError;

/// One output record; field order is the column order.
#[derive(Debug, Default, Clone)]
pub struct Row(Map<String, Value>);

impl Row {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.0.insert(key.to_string(), value.into());
        self
    }

    /// Stores a float, or null when it is not finite (JSON has no infinity).
    pub fn set_f64(self, key: &str, value: f64) -> Self {
        let v = serde_json::Number::from_f64(value).map_or(Value::Null, Value::Number);
        self.set(key, v)
    }

    fn headers(&self) -> Vec<&str> {
        self.0.keys().map(String::as_str).collect()
    }

    fn cells(&self) -> Vec<String> {
        self.0.values().map(cell).collect()
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn write_rows(rows: &[Row], format: Format, path: Option<&Path>) -> Result<(), CliError> {
    let mut sink: Box<dyn Write> = match path {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut sink);
            if let Some(first) = rows.first() {
                w.write_record(first.headers()).map_err(csv_err)?;
            }
            for row in rows {
                w.write_record(row.cells()).map_err(csv_err)?;
            }
            w.flush()?;
        }
        Format::Json => {
            let array = Value::Array(rows.iter().map(|r| Value::Object(r.0.clone())).collect());
            serde_json::to_writer_pretty(&mut sink, &array).map_err(|e| CliError::Io(e.into()))?;
            writeln!(sink)?;
        }
    }
    sink.flush()?;
    Ok(())
}

fn csv_err(e: csv::Error) -> CliError {
    CliError::Io(io::Error::other(e))
}
