use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{LabError, Result};

pub const REPORT_VERSION: u32 = 1;
pub const DEFAULT_PRECISION: u32 = 128;
pub const MIN_PRECISION: u32 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    /// Always present on failure.
    pub witness: Value,
    pub paper_ref: String,
    pub runtime_ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HarnessConfig {
    pub precision_bits: u32,
    pub filters: Vec<String>,
    /// λ samples for the numeric suites, in element text grammar.
    pub lambdas: Vec<String>,
    pub json_path: Option<PathBuf>,
    /// Record wall-clock runtimes; off gives byte-identical reports.
    pub timing: bool,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        HarnessConfig {
            precision_bits: DEFAULT_PRECISION,
            filters: vec![],
            lambdas: vec!["1".into(), "2".into(), "1/2".into()],
            json_path: None,
            timing: true,
        }
    }
}

impl HarnessConfig {
    pub fn validate(&self) -> Result<()> {
        if self.precision_bits < MIN_PRECISION {
            return Err(LabError::Config(format!("precision {} is below {MIN_PRECISION} bits", self.precision_bits)));
        }
        for l in &self.lambdas {
            crate::registry::parse_lambda(l)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub version: u32,
    pub config: HarnessConfig,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| r.status == Status::Fail).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    /// 0 iff no check failed.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.check_id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

pub fn report_json(report: &Report, path: &Path) -> Result<()> {
    std::fs::write(path, report.to_json()).map_err(|e| LabError::Io(path.display().to_string(), e))
}
