use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use anyhow::{Context, Result};
use serde::Serialize;

use crate::config::Format;

/// A command result that can be printed in every output format.
pub trait Report: Serialize {
    fn text(&self) -> String;
    fn csv_header(&self) -> Vec<&'static str>;
    fn csv_rows(&self) -> Vec<Vec<String>>;
}

pub fn render<R: Report>(r: &R, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => {
            let mut out = serde_json::to_vec_pretty(r)?;
            out.push(b'\n');
            Ok(out)
        }
        Format::Csv => csv_bytes(&r.csv_header(), &r.csv_rows()),
        Format::Text => {
            let mut s = r.text();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            Ok(s.into_bytes())
        }
    }
}

pub fn csv_bytes(header: &[&str], rows: &[Vec<String>]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    Ok(w.into_inner()?)
}

/// Temporary files that must not outlive an interrupted run.
static PENDING: Mutex<Vec<PathBuf>> = Mutex::new(Vec::new());

/// Removes any half-written outputs; called from the Ctrl-C handler.
pub fn discard_pending() {
    if let Ok(mut list) = PENDING.lock() {
        for p in list.drain(..) {
            let _ = std::fs::remove_file(p);
        }
    }
}

/// Writes `bytes` to a sibling temp file, then renames it over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::Builder::new()
        .prefix(".eislag-")
        .tempfile_in(dir)
        .with_context(|| format!("creating a temporary file in {}", dir.display()))?;
    let tmp_path = tmp.path().to_path_buf();
    PENDING.lock().unwrap().push(tmp_path.clone());
    let res = tmp
        .write_all(bytes)
        .and_then(|_| tmp.as_file().sync_all())
        .map_err(anyhow::Error::from)
        .and_then(|_| tmp.persist(path).map(|_| ()).map_err(|e| e.error.into()));
    PENDING.lock().unwrap().retain(|p| p != &tmp_path);
    res.with_context(|| format!("writing {}", path.display()))
}

pub fn emit(bytes: &[u8], output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => write_atomic(p, bytes),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(bytes)?;
            out.flush()?;
            Ok(())
        }
    }
}
