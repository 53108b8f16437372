//! Shared quantities and the single-variable power-law estimator.
//!
//! Every model in the crate speaks in [`SizeKloc`] and [`EffortPm`]. Values are
//! kept at full precision; [`table_round`] is applied only when a result is
//! compared against a printed integer table.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Error, Result};

/// Allowed absolute slack, in person-months, when matching a printed effort.
pub const EFFORT_TOLERANCE_PM: f64 = 2.0;

/// Allowed slack, in percentage points, when matching a printed error.
pub const ERROR_TOLERANCE_POINTS: f64 = 3.0;

/// Delivered size in thousands of lines of code.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct SizeKloc(f64);

impl SizeKloc {
    pub fn new(value: f64) -> Result<Self> {
        require_positive("size (KLOC)", value).map(Self)
    }

    /// Converts a raw line count.
    pub fn from_sloc(sloc: f64) -> Result<Self> {
        Self::new(sloc / 1000.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for SizeKloc {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl From<SizeKloc> for f64 {
    fn from(size: SizeKloc) -> f64 {
        size.0
    }
}

/// Effort in person-months.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct EffortPm(f64);

impl EffortPm {
    pub const ZERO: EffortPm = EffortPm(0.0);

    pub fn new(value: f64) -> Result<Self> {
        require_non_negative("effort (PM)", value).map(Self)
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Scales by a non-negative factor.
    pub fn scaled(self, factor: f64) -> Result<Self> {
        Self::new(self.0 * factor)
    }
}

impl TryFrom<f64> for EffortPm {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

impl From<EffortPm> for f64 {
    fn from(effort: EffortPm) -> f64 {
        effort.0
    }
}

impl fmt::Display for EffortPm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:.1} PM", self.0)
    }
}

/// COCOMO81 development mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Organic,
    Semidetached,
    Embedded,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Organic, Mode::Semidetached, Mode::Embedded];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Organic => "organic",
            Mode::Semidetached => "semidetached",
            Mode::Embedded => "embedded",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "organic" => Ok(Mode::Organic),
            "semidetached" => Ok(Mode::Semidetached),
            "embedded" => Ok(Mode::Embedded),
            _ => Err(Error::Validation(format!(
                "unknown mode `{s}` (expected organic, semidetached or embedded)"
            ))),
        }
    }
}

/// Multiplier `a` and exponent `b` of `effort = a * size^b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerLawConstants {
    a: f64,
    b: f64,
}

impl PowerLawConstants {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        require_positive("multiplier a", a)?;
        require_positive("exponent b", b)?;
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }
}

impl fmt::Display for PowerLawConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={}, b={}", self.a, self.b)
    }
}

/// `a * size^b`, unrounded.
pub fn power_law_effort(size: SizeKloc, constants: PowerLawConstants) -> EffortPm {
    EffortPm(constants.a * size.0.powf(constants.b))
}

/// Integer used when comparing against printed tables: truncation toward zero.
pub fn table_round(effort: EffortPm) -> u64 {
    effort.0.trunc() as u64
}
