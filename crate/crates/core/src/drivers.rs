//! Ordinal cost-driver ratings and effort-multiplier tables.
//!
//! A [`DriverSet`] is an ordered list of named drivers, each mapping the
//! ratings it defines to a multiplier. The effort adjustment factor of a
//! [`DriverProfile`] is the product of the looked-up multipliers.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Rating {
    ExtraLow,
    VeryLow,
    Low,
    Nominal,
    High,
    VeryHigh,
    ExtraHigh,
}

impl Rating {
    pub const ALL: [Rating; 7] = [
        Rating::ExtraLow,
        Rating::VeryLow,
        Rating::Low,
        Rating::Nominal,
        Rating::High,
        Rating::VeryHigh,
        Rating::ExtraHigh,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Rating::ExtraLow => "extra_low",
            Rating::VeryLow => "very_low",
            Rating::Low => "low",
            Rating::Nominal => "nominal",
            Rating::High => "high",
            Rating::VeryHigh => "very_high",
            Rating::ExtraHigh => "extra_high",
        }
    }
}

impl fmt::Display for Rating {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Rating {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace(['-', ' '], "_");
        let rating = match norm.as_str() {
            "xl" | "extra_low" => Rating::ExtraLow,
            "vl" | "very_low" => Rating::VeryLow,
            "l" | "low" => Rating::Low,
            "n" | "nominal" => Rating::Nominal,
            "h" | "high" => Rating::High,
            "vh" | "very_high" => Rating::VeryHigh,
            "xh" | "extra_high" => Rating::ExtraHigh,
            _ => return Err(Error::Validation(format!("unknown rating `{s}`"))),
        };
        Ok(rating)
    }
}

/// How a driver's multiplier moves as its rating rises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// Higher rating, higher cost (e.g. required reliability).
    Increasing,
    /// Higher rating, lower cost (e.g. analyst capability).
    Decreasing,
    /// Minimum at nominal, rising on both sides (schedule compression).
    Valley,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DriverTable {
    pub name: String,
    pub description: String,
    pub direction: Direction,
    pub multipliers: BTreeMap<Rating, f64>,
}

impl DriverTable {
    pub fn new(
        name: &str,
        description: &str,
        direction: Direction,
        entries: &[(Rating, f64)],
    ) -> Self {
        Self {
            name: name.to_string(),
            description: description.to_string(),
            direction,
            multipliers: entries.iter().copied().collect(),
        }
    }

    pub fn multiplier(&self, rating: Rating) -> Result<f64> {
        self.multipliers
            .get(&rating)
            .copied()
            .ok_or_else(|| Error::UndefinedRating {
                driver: self.name.clone(),
                rating: rating.to_string(),
            })
    }

    /// Checks positivity, a nominal entry of exactly 1.0, and that the
    /// multipliers follow the declared direction.
    pub fn validate(&self) -> Result<()> {
        for &m in self.multipliers.values() {
            require_positive("effort multiplier", m)?;
        }
        match self.multipliers.get(&Rating::Nominal) {
            Some(1.0) => {}
            _ => {
                return Err(Error::Validation(format!(
                    "driver {} must have nominal multiplier 1.0",
                    self.name
                )))
            }
        }
        let ordered: Vec<(Rating, f64)> = self.multipliers.iter().map(|(r, m)| (*r, *m)).collect();
        let ok = ordered.windows(2).all(|w| {
            let (r0, m0) = w[0];
            let (_, m1) = w[1];
            match self.direction {
                Direction::Increasing => m1 >= m0,
                Direction::Decreasing => m1 <= m0,
                Direction::Valley => {
                    if r0 < Rating::Nominal {
                        m1 <= m0
                    } else {
                        m1 >= m0
                    }
                }
            }
        });
        if ok {
            Ok(())
        } else {
            Err(Error::Validation(format!(
                "driver {} multipliers do not follow its {:?} direction",
                self.name, self.direction
            )))
        }
    }
}

/// An ordered collection of driver tables, e.g. the 15 COCOMO81 drivers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DriverSet {
    pub label: String,
    drivers: Vec<DriverTable>,
}

impl DriverSet {
    pub fn new(label: &str, drivers: Vec<DriverTable>) -> Self {
        Self {
            label: label.to_string(),
            drivers,
        }
    }

    pub fn drivers(&self) -> &[DriverTable] {
        &self.drivers
    }

    pub fn len(&self) -> usize {
        self.drivers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.drivers.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&DriverTable> {
        self.drivers.iter().find(|d| d.name.eq_ignore_ascii_case(name))
    }

    pub fn get_mut(&mut self, name: &str) -> Option<&mut DriverTable> {
        self.drivers.iter_mut().find(|d| d.name.eq_ignore_ascii_case(name))
    }

    pub fn validate(&self) -> Result<()> {
        self.drivers.iter().try_for_each(DriverTable::validate)
    }

    /// A profile rating every driver nominal.
    pub fn nominal_profile(&self) -> DriverProfile {
        DriverProfile {
            ratings: self
                .drivers
                .iter()
                .map(|d| (d.name.clone(), Rating::Nominal))
                .collect(),
        }
    }

    /// Product of the multipliers selected by `profile`.
    ///
    /// Every driver in the set must be rated, and the profile may not name
    /// drivers the set does not contain.
    pub fn eaf(&self, profile: &DriverProfile) -> Result<f64> {
        for name in profile.ratings.keys() {
            if self.get(name).is_none() {
                return Err(Error::UnknownDriver {
                    driver: name.clone(),
                    table: self.label.clone(),
                });
            }
        }
        let mut product = 1.0;
        for driver in &self.drivers {
            let rating = profile
                .rating(&driver.name)
                .ok_or_else(|| Error::MissingDriver {
                    driver: driver.name.clone(),
                })?;
            product *= driver.multiplier(rating)?;
        }
        Ok(product)
    }
}

/// Rating per driver, keyed by upper-case driver name.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DriverProfile {
    ratings: BTreeMap<String, Rating>,
}

impl DriverProfile {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, driver: &str, rating: Rating) -> Self {
        self.set(driver, rating);
        self
    }

    pub fn set(&mut self, driver: &str, rating: Rating) {
        self.ratings.insert(driver.to_ascii_uppercase(), rating);
    }

    pub fn rating(&self, driver: &str) -> Option<Rating> {
        self.ratings.get(&driver.to_ascii_uppercase()).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, Rating)> {
        self.ratings.iter().map(|(k, v)| (k.as_str(), *v))
    }

    /// Parses `NAME=rating` assignments such as `RELY=high`.
    pub fn apply_assignment(&mut self, assignment: &str) -> Result<()> {
        let (name, rating) = assignment.split_once('=').ok_or_else(|| {
            Error::Validation(format!("expected DRIVER=rating, got `{assignment}`"))
        })?;
        self.set(name.trim(), rating.trim().parse()?);
        Ok(())
    }
}
