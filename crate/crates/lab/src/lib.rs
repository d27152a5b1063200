//! Verification harness for the Hesse pencil kernel: a registry of named checks,
//! a deterministic runner with JSON reports, and an SVG rendering of the pencil.

pub mod error;
pub mod plot;
pub mod registry;
pub mod report;
pub mod runner;

pub use error::{LabError, Result};
pub use plot::{plot_pencil, write_plot, PlotConfig};
pub use registry::{registry, Check};
pub use report::{report_json, CheckResult, HarnessConfig, Report, Status};
pub use runner::{run, select};
