//! Command-line front end: argument parsing, configuration, report output
//! and the built-in verification suites.

pub mod commands;
pub mod config;
pub mod render;
pub mod suites;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::{Map, Value};

use commands::{execute, Cli};
use config::{Format, RunConfig, CAPS_ENV};

pub const SCHEMA_VERSION: u64 = 1;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_FAILED: i32 = 2;

/// What a run printed and how it ended.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dispatch {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Adds the schema tag to a JSON object report.
pub fn with_schema(report: Value) -> Value {
    let mut out = Map::new();
    out.insert("schema".into(), Value::from(SCHEMA_VERSION));
    match report {
        Value::Object(m) => out.extend(m),
        other => {
            out.insert("report".into(), other);
        }
    }
    Value::Object(out)
}

pub fn dispatch<I, T>(argv: I) -> Dispatch
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Dispatch { code: EXIT_OK, stdout: text, stderr: String::new() }
                }
                _ => Dispatch { code: EXIT_ERROR, stdout: String::new(), stderr: text },
            };
        }
    };
    let caps = std::env::var_os(CAPS_ENV).map(PathBuf::from);
    let fail = |msg: String| Dispatch { code: EXIT_ERROR, stdout: String::new(), stderr: format!("error: {msg}\n") };
    let cfg = match RunConfig::resolve(&cli.global.overrides(), caps.as_deref()) {
        Ok(c) => c,
        Err(e) => return fail(format!("{e:#}")),
    };
    let outcome = match execute(&cli.command, &cfg) {
        Ok(o) => o,
        Err(e) => return fail(format!("{e:#}")),
    };
    let report = with_schema(outcome.report);
    let text = match cfg.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
        Format::Text => render::text(&report),
    };
    let code = if outcome.passed { EXIT_OK } else { EXIT_FAILED };
    match &cli.global.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Dispatch { code, stdout: String::new(), stderr: String::new() },
            Err(e) => fail(format!("writing {}: {e}", path.display())),
        },
        None => Dispatch { code, stdout: text, stderr: String::new() },
    }
}
