use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};
use crate::units::EffortPm;

/// One estimate of one project under one model configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorRow {
    pub project_id: u32,
    pub model: String,
    pub config: String,
    pub estimated_pm: f64,
    pub actual_pm: f64,
    pub signed_error_pct: f64,
    pub mre: f64,
}

impl ErrorRow {
    pub fn new(project_id: u32, model: &str, config: &str, estimated: EffortPm, actual: EffortPm) -> Result<Self> {
        Ok(Self {
            project_id,
            model: model.to_string(),
            config: config.to_string(),
            estimated_pm: estimated.value(),
            actual_pm: actual.value(),
            signed_error_pct: signed_error_pct(estimated, actual)?,
            mre: mre(estimated, actual)?,
        })
    }
}

/// `100 * (estimated - actual) / actual`.
pub fn signed_error_pct(estimated: EffortPm, actual: EffortPm) -> Result<f64> {
    let actual = require_positive("actual effort", actual.value())?;
    Ok(100.0 * (estimated.value() - actual) / actual)
}

/// Magnitude of relative error, `|estimated - actual| / actual`.
pub fn mre(estimated: EffortPm, actual: EffortPm) -> Result<f64> {
    let actual = require_positive("actual effort", actual.value())?;
    Ok((estimated.value() - actual).abs() / actual)
}

/// Mean MRE over `rows`.
pub fn mmre(rows: &[ErrorRow]) -> Result<f64> {
    if rows.is_empty() {
        return Err(Error::Validation("MMRE of an empty row set".into()));
    }
    Ok(rows.iter().map(|r| r.mre).sum::<f64>() / rows.len() as f64)
}
