use std::fs;
use std::io::Write;

use serde::Serialize;

use crate::error::CliError;

/// Fixed 9-significant-digit scientific notation.
pub fn fmt_float(x: f64) -> String {
    if x == 0.0 {
        // folds -0.0 into 0.0
        return format!("{:.8e}", 0.0);
    }
    format!("{x:.8e}")
}

pub fn fmt_bool(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

/// Renders a header and rows as CSV text.
pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv output is utf-8")
}

pub fn json_text<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

/// Writes `text` to `path`, or stdout when `path` is `None`.
pub fn emit(text: &str, path: Option<&str>) -> Result<(), CliError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|source| CliError::Io {
            path: p.to_string(),
            source,
        }),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|source| CliError::Io {
                    path: "<stdout>".into(),
                    source,
                })
        }
    }
}
