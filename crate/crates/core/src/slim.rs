//! Putnam's SLIM relations.
//!
//! The software equation `S = E * effort^(1/3) * td^(4/3)` and the manpower
//! buildup `effort = D0 * td^3` are solved jointly for the power forms of
//! effort and delivery time. Effort is in person-years; `S` is in lines of code
//! and `td` in years.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Result};
use crate::units::EffortPm;

/// Documented range of the manpower-buildup parameter.
pub const BUILDUP_RANGE: (f64, f64) = (8.0, 27.0);

/// Size above which SLIM is customarily applied, in lines of code.
pub const LARGE_PROJECT_SLOC: f64 = 70_000.0;

/// Effort in person-years.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct EffortPy(f64);

impl EffortPy {
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn to_person_months(self) -> EffortPm {
        EffortPm::new(self.0 * 12.0).expect("non-negative effort")
    }
}

impl fmt::Display for EffortPy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.3} PY", self.0)
    }
}

/// Non-fatal conditions noted alongside an estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum SlimAdvisory {
    BuildupOutOfRange { d0: f64 },
    BelowLargeProjectSize { sloc: f64 },
}

impl fmt::Display for SlimAdvisory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SlimAdvisory::BuildupOutOfRange { d0 } => write!(
                f,
                "manpower buildup {d0} lies outside the usual range [{}, {}]",
                BUILDUP_RANGE.0, BUILDUP_RANGE.1
            ),
            SlimAdvisory::BelowLargeProjectSize { sloc } => write!(
                f,
                "size {sloc} LOC is below the {LARGE_PROJECT_SLOC} LOC where SLIM is usually applied"
            ),
        }
    }
}

pub fn effort_from_software_equation(size_loc: f64, environment: f64, td_years: f64) -> Result<EffortPy> {
    let s = require_positive("size (LOC)", size_loc)?;
    let e = require_positive("environment factor", environment)?;
    let td = require_positive("delivery time", td_years)?;
    Ok(EffortPy((s / (e * td.powf(4.0 / 3.0))).powi(3)))
}

/// The software equation in its forward direction: size delivered.
pub fn size_from_software_equation(environment: f64, effort: EffortPy, td_years: f64) -> Result<f64> {
    let e = require_positive("environment factor", environment)?;
    let td = require_positive("delivery time", td_years)?;
    Ok(e * effort.0.cbrt() * td.powf(4.0 / 3.0))
}

/// Solves the software equation for `E` given an observed project.
pub fn environment_factor(size_loc: f64, effort: EffortPy, td_years: f64) -> Result<f64> {
    let s = require_positive("size (LOC)", size_loc)?;
    let effort = require_positive("effort (PY)", effort.0)?;
    let td = require_positive("delivery time", td_years)?;
    Ok(s / (effort.cbrt() * td.powf(4.0 / 3.0)))
}

pub fn effort_from_buildup(d0: f64, td_years: f64) -> Result<EffortPy> {
    let d0 = require_positive("manpower buildup", d0)?;
    let td = require_positive("delivery time", td_years)?;
    Ok(EffortPy(d0 * td.powi(3)))
}

pub fn effort_power_form(d0: f64, environment: f64, size_loc: f64) -> Result<EffortPy> {
    let d0 = require_positive("manpower buildup", d0)?;
    let e = require_positive("environment factor", environment)?;
    let s = require_positive("size (LOC)", size_loc)?;
    Ok(EffortPy(
        d0.powf(4.0 / 7.0) * e.powf(-9.0 / 7.0) * s.powf(9.0 / 7.0),
    ))
}

/// Delivery time in years.
pub fn td_power_form(d0: f64, environment: f64, size_loc: f64) -> Result<f64> {
    let d0 = require_positive("manpower buildup", d0)?;
    let e = require_positive("environment factor", environment)?;
    let s = require_positive("size (LOC)", size_loc)?;
    Ok(d0.powf(-1.0 / 7.0) * e.powf(-3.0 / 7.0) * s.powf(3.0 / 7.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SlimParams {
    pub environment: f64,
    pub buildup: f64,
    pub size_loc: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SlimEstimate {
    pub effort: EffortPy,
    pub delivery_time_years: f64,
    pub advisories: Vec<SlimAdvisory>,
}

impl SlimParams {
    /// Effort and delivery time from the power forms, with advisories.
    pub fn estimate(&self) -> Result<SlimEstimate> {
        let effort = effort_power_form(self.buildup, self.environment, self.size_loc)?;
        let td = td_power_form(self.buildup, self.environment, self.size_loc)?;
        let mut advisories = Vec::new();
        if !(BUILDUP_RANGE.0..=BUILDUP_RANGE.1).contains(&self.buildup) {
            advisories.push(SlimAdvisory::BuildupOutOfRange { d0: self.buildup });
        }
        if self.size_loc < LARGE_PROJECT_SLOC {
            advisories.push(SlimAdvisory::BelowLargeProjectSize { sloc: self.size_loc });
        }
        Ok(SlimEstimate {
            effort,
            delivery_time_years: td,
            advisories,
        })
    }
}
