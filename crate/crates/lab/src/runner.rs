use std::time::Instant;

use globset::{Glob, GlobMatcher};
use rayon::prelude::*;

use crate::error::{LabError, Result};
use crate::registry::{registry, Check};
use crate::report::{CheckResult, HarnessConfig, Report, REPORT_VERSION};

fn matchers(filters: &[String]) -> Result<Vec<(String, GlobMatcher)>> {
    filters
        .iter()
        .map(|f| {
            let g = Glob::new(f).map_err(|e| LabError::BadFilter(f.clone(), e.to_string()))?;
            Ok((f.clone(), g.compile_matcher()))
        })
        .collect()
}

/// Checks selected by the filters, in registry order. Every filter must match something.
pub fn select(config: &HarnessConfig) -> Result<Vec<Check>> {
    let all = registry(&config.lambdas);
    if config.filters.is_empty() {
        return Ok(all);
    }
    let ms = matchers(&config.filters)?;
    for (f, m) in &ms {
        if !all.iter().any(|c| m.is_match(&c.id)) {
            return Err(LabError::UnknownCheck(f.clone()));
        }
    }
    Ok(all.into_iter().filter(|c| ms.iter().any(|(_, m)| m.is_match(&c.id))).collect())
}

/// Runs the selected checks concurrently; results keep registry order.
pub fn run(config: &HarnessConfig) -> Result<Report> {
    config.validate()?;
    let checks = select(config)?;
    let prec = config.precision_bits;
    let results: Vec<CheckResult> = checks
        .par_iter()
        .map(|c| {
            let start = Instant::now();
            let (status, witness) = c.execute(prec);
            let ms = start.elapsed().as_millis() as u64;
            CheckResult { check_id: c.id.clone(), status, witness, paper_ref: c.paper_ref.clone(), runtime_ms: if config.timing { ms } else { 0 } }
        })
        .collect();
    Ok(Report { version: REPORT_VERSION, config: config.clone(), results })
}
