use crate::opts::{Format, Mode};
use serde_json::{json, Value};
use std::io::Write;

/// Reproducibility manifest embedded in every report.
pub fn manifest(mode: Mode) -> Value {
    let mut m = json!({
        "mode": mode.name(),
        "library_version": cyclotomy::version(),
    });
    if mode == Mode::Fast {
        m["primes"] = json!(cyclotomy::linalg::fast_mode_primes());
    }
    m
}

pub struct Report {
    pub command: String,
    pub manifest: Value,
    /// one object per row/check, in deterministic order
    pub rows: Vec<Value>,
    /// column order for text/csv rendering
    pub columns: Vec<&'static str>,
    pub ok: bool,
}

impl Report {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let v = json!({
                    "command": self.command,
                    "manifest": self.manifest,
                    "ok": self.ok,
                    "rows": self.rows,
                });
                let mut s = serde_json::to_string_pretty(&v).expect("serializable");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut s = self.columns.join(",");
                s.push('\n');
                for row in &self.rows {
                    let line: Vec<String> = self
                        .columns
                        .iter()
                        .map(|c| cell_to_string(&row[*c]))
                        .collect();
                    s.push_str(&line.join(","));
                    s.push('\n');
                }
                s
            }
            Format::Text => {
                let header: Vec<String> = self.columns.iter().map(|c| c.to_string()).collect();
                let mut table: Vec<Vec<String>> = vec![header];
                for row in &self.rows {
                    table.push(
                        self.columns
                            .iter()
                            .map(|c| cell_to_string(&row[*c]))
                            .collect(),
                    );
                }
                let widths: Vec<usize> = (0..self.columns.len())
                    .map(|j| table.iter().map(|r| r[j].len()).max().unwrap_or(0))
                    .collect();
                let mut s = String::new();
                for (i, r) in table.iter().enumerate() {
                    let line: Vec<String> = r
                        .iter()
                        .zip(&widths)
                        .map(|(c, w)| format!("{c:<w$}"))
                        .collect();
                    s.push_str(line.join("  ").trim_end());
                    s.push('\n');
                    if i == 0 {
                        let total = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
                        s.push_str(&"-".repeat(total));
                        s.push('\n');
                    }
                }
                s.push_str(&format!(
                    "status: {}\n",
                    if self.ok { "ok" } else { "FAILED" }
                ));
                s
            }
        }
    }

    pub fn emit(&self, format: Format, out: &Option<std::path::PathBuf>) -> std::io::Result<()> {
        let rendered = self.render(format);
        match out {
            Some(path) => std::fs::write(path, rendered),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout.write_all(rendered.as_bytes())
            }
        }
    }
}

fn cell_to_string(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        Value::Array(a) => {
            let inner: Vec<String> = a.iter().map(cell_to_string).collect();
            format!("[{}]", inner.join(" "))
        }
        other => other.to_string(),
    }
}
