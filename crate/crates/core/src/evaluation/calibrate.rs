//! Log-log least squares fit of `effort = a * size^b`.

use serde::{Deserialize, Serialize};

use crate::dataset::Corpus;
use crate::error::{require_positive, Error, Result};
use crate::units::{EffortPm, PowerLawConstants, SizeKloc};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CalibrationResult {
    pub constants: PowerLawConstants,
    /// Σ (ln effort − ln a − b ln size)² at the fitted constants.
    pub log_residual: f64,
    pub n: usize,
}

/// Sum of squared log-space residuals of `constants` over `points`.
pub fn log_residual(points: &[(SizeKloc, EffortPm)], constants: PowerLawConstants) -> Result<f64> {
    let ln_a = constants.a().ln();
    points.iter().try_fold(0.0, |acc, (s, e)| {
        let e = require_positive("effort", e.value())?;
        let r = e.ln() - ln_a - constants.b() * s.value().ln();
        Ok(acc + r * r)
    })
}

/// Ordinary least squares on `(ln size, ln effort)`: `b` is the slope and
/// `a = exp(intercept)`.
pub fn calibrate_power_law(points: &[(SizeKloc, EffortPm)]) -> Result<CalibrationResult> {
    let logs = points
        .iter()
        .map(|(s, e)| Ok((s.value().ln(), require_positive("effort", e.value())?.ln())))
        .collect::<Result<Vec<(f64, f64)>>>()?;
    if logs.len() < 2 {
        return Err(Error::DegenerateFit(format!(
            "need at least 2 points, got {}",
            logs.len()
        )));
    }
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mean_x).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let first = points[0].0;
    if points.iter().all(|(s, _)| *s == first) || sxx == 0.0 {
        return Err(Error::DegenerateFit("fewer than 2 distinct sizes".into()));
    }
    let slope = sxy / sxx;
    let intercept = mean_y - slope * mean_x;
    if slope <= 0.0 {
        return Err(Error::DegenerateFit(format!(
            "fitted exponent {slope} is not positive"
        )));
    }
    let constants = PowerLawConstants::new(intercept.exp(), slope)?;
    Ok(CalibrationResult {
        constants,
        log_residual: log_residual(points, constants)?,
        n: logs.len(),
    })
}

/// Fits the corpus's (size, actual effort) pairs.
pub fn calibrate_corpus(corpus: &Corpus) -> Result<CalibrationResult> {
    let points: Vec<_> = corpus
        .projects()
        .iter()
        .map(|p| (p.size_kloc, p.actual_effort_pm))
        .collect();
    calibrate_power_law(&points)
}
