use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::ingest::TimeWindow;
use crate::solver::SolverConfig;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
    pub bytes: u64,
}

impl InputDigest {
    pub fn of(path: &Path, contents: &[u8]) -> Self {
        Self {
            path: path.display().to_string(),
            sha256: hex::encode(Sha256::digest(contents)),
            bytes: contents.len() as u64,
        }
    }
}

/// Record of one command invocation, written even when the command fails.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunManifest {
    pub tool_version: String,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub window: Option<TimeWindow>,
    pub solver: SolverConfig,
    pub seed: Option<u64>,
    pub methods: Vec<String>,
    pub outputs: Vec<String>,
    pub status: String,
    pub error: Option<String>,
    pub iterations: Option<usize>,
    pub final_residual: Option<f64>,
    pub timestamp_unix: u64,
}

impl RunManifest {
    pub fn new(command: &str, solver: SolverConfig, seed: Option<u64>) -> Self {
        Self {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            inputs: Vec::new(),
            window: None,
            solver,
            seed,
            methods: Vec::new(),
            outputs: Vec::new(),
            status: "running".into(),
            error: None,
            iterations: None,
            final_residual: None,
            timestamp_unix: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map(|d| d.as_secs())
                .unwrap_or(0),
        }
    }

    pub fn file_name(command: &str) -> String {
        format!("manifest.{command}.json")
    }

    pub fn record_output(&mut self, path: &Path) {
        self.outputs.push(path.display().to_string());
    }

    pub fn path_in(&self, out_dir: &Path) -> PathBuf {
        out_dir.join(Self::file_name(&self.command))
    }
}
