//! Command-line front end: JSON inputs, command dispatch and reports.

pub mod axioms;
pub mod commands;
pub mod input;
pub mod report;

use std::path::Path;
use std::time::Instant;

use serde_json::Value;
use suppkit::{Error, Result};

use commands::{Command, Options};
use input::Input;
use report::{canonical_hash, elapsed, Report};

/// Run a command on an input file (a corpus directory for `axioms`).
/// The second value is false when the axiom suite found a failure.
pub fn run_path(cmd: Command, path: &Path, opts: &Options) -> Result<(Report, bool)> {
    let start = Instant::now();
    if cmd == Command::Axioms {
        let (suite, warnings) = axioms::run_suite(path, opts)?;
        let mut listing = Vec::new();
        for f in axioms::corpus_files(path)? {
            let text = std::fs::read_to_string(&f).map_err(|e| Error::Parse(format!("{}: {e}", f.display())))?;
            let v: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
            listing.push(Value::Array(vec![
                Value::String(f.file_name().unwrap_or_default().to_string_lossy().into_owned()),
                v,
            ]));
        }
        let ok = suite.all_pass;
        let results = serde_json::to_value(&suite).map_err(|e| Error::Invariant(e.to_string()))?;
        return Ok((
            Report {
                command: cmd.name().into(),
                input_hash: canonical_hash(&Value::Array(listing), opts),
                results,
                timing: elapsed(start),
                warnings,
            },
            ok,
        ));
    }
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let raw: Value = serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
    let input = Input::parse(&text)?;
    let out = commands::run(cmd, &input, opts)?;
    Ok((
        Report {
            command: cmd.name().into(),
            input_hash: canonical_hash(&raw, opts),
            results: out.results,
            timing: elapsed(start),
            warnings: out.warnings,
        },
        true,
    ))
}
