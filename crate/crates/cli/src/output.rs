//! CSV with `#` metadata lines.

use std::io::Write;

use anyhow::Result;

/// 17 significant digits, enough to reproduce any `f64` exactly.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

#[derive(Debug, Default)]
pub struct Table {
    pub meta: Vec<(String, String)>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    /// `#` lines after the body.
    pub trailer: Vec<String>,
    /// Diagnostics of failed rows, for standard error.
    pub failures: Vec<String>,
    pub warnings: Vec<String>,
}

impl Table {
    pub fn new(header: Vec<&'static str>) -> Self {
        Table { header, ..Default::default() }
    }

    pub fn meta(&mut self, key: &str, value: impl ToString) {
        self.meta.push((key.to_string(), value.to_string()));
    }

    pub fn write(&self, out: &mut dyn Write) -> Result<()> {
        for (key, value) in &self.meta {
            writeln!(out, "# {key}: {value}")?;
        }
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header)?;
        for row in &self.rows {
            w.write_record(row)?;
        }
        out.write_all(&w.into_inner().map_err(|e| e.into_error())?)?;
        for line in &self.trailer {
            writeln!(out, "# {line}")?;
        }
        Ok(())
    }
}
