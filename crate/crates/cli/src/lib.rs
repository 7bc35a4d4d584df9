//! Command-line driver: reads JSON inputs, runs one computation and emits a
//! JSON report.

pub mod args;
mod crosscheck;
mod inputs;
mod reports;

use arrtwist_core::Error;
use serde_json::{json, Value};
use std::path::PathBuf;
use thiserror::Error as ThisError;

pub use crosscheck::crosscheck;

/// One invocation, flattened from the subcommand tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Lattice {
        arrangement: PathBuf,
    },
    Girth {
        arrangement: PathBuf,
    },
    Dense {
        arrangement: PathBuf,
    },
    Betti {
        arrangement: PathBuf,
    },
    Nonres {
        arrangement: PathBuf,
        weights: Option<String>,
        bound: i64,
    },
    HomologyKoszul {
        arrangement: PathBuf,
        weights: Option<String>,
        units: Option<String>,
        ring: Option<String>,
        full: bool,
    },
    HomologyFox {
        presentation: PathBuf,
        weights: Option<String>,
        units: Option<String>,
        ring: Option<String>,
    },
    HomologyTower {
        tower: PathBuf,
        weights: Option<String>,
        max_degree: Option<usize>,
        ring: Option<String>,
    },
    MilnorSpectrum {
        presentation: Option<PathBuf>,
        arrangement: Option<PathBuf>,
    },
    MilnorObstruct {
        n: Option<usize>,
        spectrum: String,
    },
    PiRank {
        arrangement: Option<PathBuf>,
        tower: Option<PathBuf>,
        weights: Option<String>,
        p: Option<usize>,
        ring: Option<String>,
    },
    ChainIso {
        a: PathBuf,
        b: PathBuf,
    },
    ChainHomology {
        complex: PathBuf,
    },
    Crosscheck {
        arrangement: Option<PathBuf>,
        presentation: Option<PathBuf>,
        tower: Option<PathBuf>,
        weights: Option<String>,
        samples: usize,
        seed: u64,
    },
}

impl Job {
    pub fn command(&self) -> &'static str {
        match self {
            Job::Lattice { .. } => "lattice",
            Job::Girth { .. } => "girth",
            Job::Dense { .. } => "dense",
            Job::Betti { .. } => "betti",
            Job::Nonres { .. } => "nonres",
            Job::HomologyKoszul { .. } => "homology-koszul",
            Job::HomologyFox { .. } => "homology-fox",
            Job::HomologyTower { .. } => "homology-tower",
            Job::MilnorSpectrum { .. } => "milnor-spectrum",
            Job::MilnorObstruct { .. } => "milnor-obstruct",
            Job::PiRank { .. } => "pi-rank",
            Job::ChainIso { .. } => "chain-iso",
            Job::ChainHomology { .. } => "chain-homology",
            Job::Crosscheck { .. } => "crosscheck",
        }
    }
}

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("malformed JSON in {path}: {source}")]
    Json { path: PathBuf, source: serde_json::Error },
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_refusal() => 2,
            _ => 1,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io { .. } => "Io",
            CliError::Json { .. } => "Json",
            CliError::Usage(_) => "Usage",
            CliError::Core(e) => e.kind(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.kind(), "message": self.to_string(), "exit_code": self.exit_code() })
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// A finished run: the report to print and the process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub exit_code: u8,
}

pub fn run(job: &Job) -> Outcome {
    match execute(job) {
        Ok(outcome) => outcome,
        Err(e) => Outcome { report: e.to_json(), exit_code: e.exit_code() },
    }
}

fn execute(job: &Job) -> CliResult<Outcome> {
    if let Job::Crosscheck { .. } = job {
        return crosscheck(job);
    }
    let mut report = reports::report(job)?;
    if let Value::Object(map) = &mut report {
        map.insert("command".into(), Value::String(job.command().into()));
    }
    Ok(Outcome { report, exit_code: 0 })
}
