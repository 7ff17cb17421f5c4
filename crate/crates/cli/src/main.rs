//! `mackey`: command-line access to the group, Burnside, representation and
//! Mackey functor computations, with JSON reports and the exit-code
//! contract 0 = pass, 1 = fail, 2 = error.

mod commands;
mod input;

use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use mackey_core::burnside::{BurnsideError, DEFAULT_SEED};
use mackey_core::group::GroupError;
use mackey_core::groupoid::GroupoidError;
use mackey_core::mackey1::MackeyError;
use mackey_core::replib::ReplibError;

/// Version of the JSON report layout.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    Burnside(#[from] BurnsideError),
    #[error(transparent)]
    Replib(#[from] ReplibError),
    #[error(transparent)]
    Mackey(#[from] MackeyError),
}

#[derive(Parser, Debug)]
#[command(
    name = "mackey",
    version,
    about = "Finite group, Burnside ring, representation and Mackey functor computations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// report format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// seed for randomized decomposition steps
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// add per-phase wall-clock milliseconds to the report
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Order, generators, classes and subgroup classes of a group
    Group(commands::GroupArgs),
    /// Isocomma skeleta against double-coset intersections
    Isocomma(commands::IsocommaArgs),
    /// Table of marks
    Tom(commands::GroupArgs),
    /// Crossed Burnside algebra, optionally with ρ^coh into Z(F_p G)
    Xburn(commands::XburnArgs),
    /// Blocks of F_p G
    Blocks(commands::BlocksArgs),
    /// Indecomposable summands of a module and their vertices
    Vertex(commands::ModuleArgs),
    /// Green correspondents of one module, or of every vertex-D summand of
    /// the permutation modules
    GreenCorr(commands::GreenArgs),
    /// Check the Mackey (and Green) functor axioms
    MackeyCheck(commands::MackeyArgs),
    /// Run the verification grid
    Verify(commands::VerifyArgs),
    /// Block of each indecomposable summand of a module
    BlocksOf(commands::ModuleArgs),
}

#[derive(Serialize, Clone, Copy, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

/// What a subcommand hands back.
pub struct Outcome {
    pub status: Status,
    pub reason: Option<String>,
    pub first_failure: Option<Value>,
    pub payload: Value,
}

impl Outcome {
    pub fn pass(payload: Value) -> Self {
        Outcome {
            status: Status::Pass,
            reason: None,
            first_failure: None,
            payload,
        }
    }

    /// Pass unless `failure` is set.
    pub fn check(payload: Value, failure: Option<(String, Value)>) -> Self {
        match failure {
            None => Self::pass(payload),
            Some((reason, first)) => Outcome {
                status: Status::Fail,
                reason: Some(reason),
                first_failure: Some(first),
                payload,
            },
        }
    }
}

/// Wall-clock time per named phase.
#[derive(Default)]
pub struct Phases {
    times: BTreeMap<String, f64>,
}

impl Phases {
    pub fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.times.entry(name.to_string()).or_default() += start.elapsed().as_secs_f64() * 1000.0;
        out
    }
}

#[derive(Serialize)]
struct Report<'a> {
    schema_version: u32,
    subcommand: &'a str,
    status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    first_failure: Option<Value>,
    payload: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<BTreeMap<String, f64>>,
}

fn render_text(r: &Report<'_>) -> String {
    let mut out = format!(
        "{}: {}\n",
        r.subcommand,
        serde_json::to_value(r.status).unwrap().as_str().unwrap()
    );
    if let Some(reason) = &r.reason {
        out += &format!("reason: {reason}\n");
    }
    if let Some(f) = &r.first_failure {
        out += &format!("first failure: {f}\n");
    }
    if let Value::Object(map) = &r.payload {
        for (k, v) in map {
            out += &format!("{k}: {v}\n");
        }
    }
    if let Some(t) = &r.timing_ms {
        for (k, v) in t {
            out += &format!("time {k}: {v:.3} ms\n");
        }
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut phases = Phases::default();
    let name = match &cli.command {
        Command::Group(_) => "group",
        Command::Isocomma(_) => "isocomma",
        Command::Tom(_) => "tom",
        Command::Xburn(_) => "xburn",
        Command::Blocks(_) => "blocks",
        Command::Vertex(_) => "vertex",
        Command::GreenCorr(_) => "green-corr",
        Command::MackeyCheck(_) => "mackey-check",
        Command::Verify(_) => "verify",
        Command::BlocksOf(_) => "blocks-of",
    };
    let c = &cli.common;
    let result = match &cli.command {
        Command::Group(a) => commands::group(a, &mut phases),
        Command::Isocomma(a) => commands::isocomma(a, &mut phases),
        Command::Tom(a) => commands::tom(a, &mut phases),
        Command::Xburn(a) => commands::xburn(a, &mut phases),
        Command::Blocks(a) => commands::blocks(a, c.seed, &mut phases),
        Command::Vertex(a) => commands::vertex(a, c.seed, &mut phases),
        Command::GreenCorr(a) => commands::green_corr(a, c.seed, &mut phases),
        Command::MackeyCheck(a) => commands::mackey_check(a, &mut phases),
        Command::Verify(a) => commands::verify(a, &mut phases),
        Command::BlocksOf(a) => commands::blocks_of(a, c.seed, &mut phases),
    };
    let outcome = result.unwrap_or_else(|e| Outcome {
        status: Status::Error,
        reason: Some(e.to_string()),
        first_failure: None,
        payload: Value::Null,
    });
    let report = Report {
        schema_version: SCHEMA_VERSION,
        subcommand: name,
        status: outcome.status,
        reason: outcome.reason,
        first_failure: outcome.first_failure,
        payload: outcome.payload,
        timing_ms: c.timing.then_some(phases.times),
    };
    let text = match c.format {
        Format::Json => serde_json::to_string_pretty(&report).expect("reports serialize") + "\n",
        Format::Text => render_text(&report),
    };
    let _ = std::io::stdout().write_all(text.as_bytes());
    ExitCode::from(match report.status {
        Status::Pass => 0,
        Status::Fail => 1,
        Status::Error => 2,
    })
}
