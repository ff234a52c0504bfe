use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;
use std::time::Duration;

use anyhow::Context;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

/// JSON-lines sink. Failure records also go to standard error so that a
/// nonzero exit always leaves a machine-readable trace.
pub struct Reporter {
    out: Option<BufWriter<File>>,
    timings: bool,
}

impl Reporter {
    pub fn open(path: Option<&Path>, timings: bool) -> anyhow::Result<Self> {
        let out = match path {
            Some(p) => Some(BufWriter::new(
                File::create(p).with_context(|| format!("cannot create report {}", p.display()))?,
            )),
            None => None,
        };
        Ok(Reporter { out, timings })
    }

    pub fn emit<T: Serialize>(&mut self, record: &T) {
        if let Some(out) = &mut self.out {
            let line = serde_json::to_string(record).expect("records serialize");
            // Write errors surface in `finish`.
            let _ = writeln!(out, "{line}");
        }
    }

    pub fn failure(&mut self, kind: &str, message: &str) {
        let record = json!({ "record": "failure", "kind": kind, "message": message });
        eprintln!("{record}");
        self.emit(&record);
    }

    /// Milliseconds, or `None` unless timings were requested.
    pub fn elapsed(&self, d: Duration) -> Option<u64> {
        self.timings.then_some(d.as_millis() as u64)
    }

    pub fn finish(self) -> anyhow::Result<()> {
        if let Some(mut out) = self.out {
            out.flush().context("cannot write report")?;
        }
        Ok(())
    }
}

/// A fixture file read along with its SHA-256.
pub struct Fixture {
    pub bytes: Vec<u8>,
    pub sha256: String,
}

pub fn read_fixture(path: &Path) -> anyhow::Result<Fixture> {
    let bytes = std::fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    let sha256 = hex::encode(Sha256::digest(&bytes));
    Ok(Fixture { bytes, sha256 })
}

pub fn fixture_record(path: &Path, fixture: &Fixture) -> Value {
    json!({ "record": "fixture", "path": path.display().to_string(), "sha256": fixture.sha256 })
}
