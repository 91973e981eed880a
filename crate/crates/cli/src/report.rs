use std::time::Instant;

use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use suppkit::Error;

use crate::commands::Options;

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub input_hash: String,
    pub results: Value,
    pub timing: Timing,
    pub warnings: Vec<String>,
}

/// sha256 of the input and options serialised with sorted keys.
pub fn canonical_hash(input: &Value, opts: &Options) -> String {
    let canonical = json!({"input": input, "options": opts});
    hex::encode(Sha256::digest(canonical.to_string().as_bytes()))
}

pub fn elapsed(start: Instant) -> Timing {
    Timing {
        elapsed_ms: start.elapsed().as_secs_f64() * 1000.0,
    }
}

/// 1 for unreadable input, 3 for broken internal invariants, 2 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 1,
        e if e.is_internal() => 3,
        _ => 2,
    }
}

pub fn error_json(command: &str, e: &Error) -> String {
    let kind = match exit_code(e) {
        1 => "parse",
        3 => "internal",
        _ => "precondition",
    };
    json!({"command": command, "error": e.to_string(), "kind": kind}).to_string()
}
