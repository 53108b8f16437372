//! Error metrics, corpus evaluation, printed-table comparison and calibration.

mod calibrate;
mod metrics;
mod model;
pub mod paper;
mod report;

pub use calibrate::{calibrate_corpus, calibrate_power_law, log_residual, CalibrationResult};
pub use metrics::{mmre, mre, signed_error_pct, ErrorRow};
pub use model::{ModelConfig, MODEL_IDS};
pub use report::{evaluate, EvaluationReport, ModelSummary, REPORT_CSV_HEADER};
