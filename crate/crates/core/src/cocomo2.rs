//! COCOMO II sub-models: application composition, early design and post architecture.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::drivers::{Direction, DriverProfile, DriverSet, DriverTable, Rating};
use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::units::{power_law_effort, EffortPm, PowerLawConstants, SizeKloc};

/// Object-point sizing input for the application-composition model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ObjectPointInput {
    pub object_points: f64,
    pub reuse_percent: f64,
    /// New object points delivered per person-month.
    pub productivity_rate: f64,
}

impl ObjectPointInput {
    pub fn validate(&self) -> Result<()> {
        require_non_negative("object points", self.object_points)?;
        if !(0.0..=100.0).contains(&self.reuse_percent) {
            return Err(Error::Validation(format!(
                "reuse percent must lie in [0, 100], got {}",
                self.reuse_percent
            )));
        }
        Ok(())
    }
}

/// New object points after the reuse discount.
pub fn nop(input: &ObjectPointInput) -> Result<f64> {
    input.validate()?;
    Ok(input.object_points * (100.0 - input.reuse_percent) / 100.0)
}

pub fn effort_app_composition(input: &ObjectPointInput) -> Result<EffortPm> {
    let new_points = nop(input)?;
    let prod = require_positive("productivity rate", input.productivity_rate)?;
    EffortPm::new(new_points / prod)
}

/// The five exponent scale factors.
pub const SCALE_FACTORS: [&str; 5] = ["PREC", "FLEX", "RESL", "TEAM", "PMAT"];

/// Weight per scale factor; the exponent is `1.01 + 0.01 * Σw`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScaleFactorProfile {
    weights: BTreeMap<String, f64>,
}

impl ScaleFactorProfile {
    pub fn new(weights: [f64; 5]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (name, w) in SCALE_FACTORS.iter().zip(weights) {
            map.insert(name.to_string(), require_non_negative("scale factor weight", w)?);
        }
        Ok(Self { weights: map })
    }

    /// Spreads `sum` evenly over the five factors.
    pub fn uniform(sum: f64) -> Result<Self> {
        let w = require_non_negative("scale factor sum", sum)? / 5.0;
        Self::new([w; 5])
    }

    pub fn weight(&self, factor: &str) -> Option<f64> {
        self.weights.get(&factor.to_ascii_uppercase()).copied()
    }

    pub fn set(&mut self, factor: &str, weight: f64) -> Result<()> {
        let key = factor.to_ascii_uppercase();
        if !SCALE_FACTORS.contains(&key.as_str()) {
            return Err(Error::Validation(format!("unknown scale factor `{factor}`")));
        }
        self.weights
            .insert(key, require_non_negative("scale factor weight", weight)?);
        Ok(())
    }

    pub fn sum(&self) -> f64 {
        self.weights.values().sum()
    }
}

impl Default for ScaleFactorProfile {
    /// Σw = 14, fitted so that `2.55 * 50^b` reproduces the printed 229 PM.
    fn default() -> Self {
        Self::uniform(14.0).expect("positive sum")
    }
}

pub fn default_early_design_drivers() -> DriverSet {
    use Direction::*;
    use Rating::*;
    let t = DriverTable::new;
    DriverSet::new(
        "cocomo2-early",
        vec![
            t("RCPX", "product reliability and complexity", Increasing,
              &[(ExtraLow, 0.49), (VeryLow, 0.60), (Low, 0.83), (Nominal, 1.0), (High, 1.33), (VeryHigh, 1.91), (ExtraHigh, 2.72)]),
            t("RUSE", "developed for reusability", Increasing,
              &[(Low, 0.95), (Nominal, 1.0), (High, 1.07), (VeryHigh, 1.15), (ExtraHigh, 1.24)]),
            t("PDIF", "platform difficulty", Increasing,
              &[(Low, 0.87), (Nominal, 1.0), (High, 1.29), (VeryHigh, 1.81), (ExtraHigh, 2.61)]),
            t("PERS", "personnel capability", Decreasing,
              &[(ExtraLow, 2.12), (VeryLow, 1.62), (Low, 1.26), (Nominal, 1.0), (High, 0.83), (VeryHigh, 0.63), (ExtraHigh, 0.50)]),
            t("PREX", "personnel experience", Decreasing,
              &[(ExtraLow, 1.59), (VeryLow, 1.33), (Low, 1.22), (Nominal, 1.0), (High, 0.87), (VeryHigh, 0.74), (ExtraHigh, 0.62)]),
            t("FCIL", "facilities", Decreasing,
              &[(ExtraLow, 1.43), (VeryLow, 1.30), (Low, 1.10), (Nominal, 1.0), (High, 0.87), (VeryHigh, 0.73), (ExtraHigh, 0.62)]),
            t("SCED", "required development schedule", Valley,
              &[(VeryLow, 1.43), (Low, 1.14), (Nominal, 1.0), (High, 1.0), (VeryHigh, 1.0)]),
        ],
    )
}

pub fn default_post_architecture_drivers() -> DriverSet {
    use Direction::*;
    use Rating::*;
    let t = DriverTable::new;
    DriverSet::new(
        "cocomo2-post",
        vec![
            t("RELY", "required software reliability", Increasing,
              &[(VeryLow, 0.82), (Low, 0.92), (Nominal, 1.0), (High, 1.10), (VeryHigh, 1.26)]),
            t("DATA", "database size", Increasing,
              &[(Low, 0.90), (Nominal, 1.0), (High, 1.14), (VeryHigh, 1.28)]),
            t("CPLX", "product complexity", Increasing,
              &[(VeryLow, 0.73), (Low, 0.87), (Nominal, 1.0), (High, 1.17), (VeryHigh, 1.34), (ExtraHigh, 1.74)]),
            t("RUSE", "developed for reusability", Increasing,
              &[(Low, 0.95), (Nominal, 1.0), (High, 1.07), (VeryHigh, 1.15), (ExtraHigh, 1.24)]),
            t("DOCU", "documentation match to lifecycle needs", Increasing,
              &[(VeryLow, 0.81), (Low, 0.91), (Nominal, 1.0), (High, 1.11), (VeryHigh, 1.23)]),
            t("TIME", "execution time constraint", Increasing,
              &[(Nominal, 1.0), (High, 1.11), (VeryHigh, 1.29), (ExtraHigh, 1.63)]),
            t("STOR", "main storage constraint", Increasing,
              &[(Nominal, 1.0), (High, 1.05), (VeryHigh, 1.17), (ExtraHigh, 1.46)]),
            t("PVOL", "platform volatility", Increasing,
              &[(Low, 0.87), (Nominal, 1.0), (High, 1.15), (VeryHigh, 1.30)]),
            t("ACAP", "analyst capability", Decreasing,
              &[(VeryLow, 1.42), (Low, 1.19), (Nominal, 1.0), (High, 0.85), (VeryHigh, 0.71)]),
            t("PCAP", "programmer capability", Decreasing,
              &[(VeryLow, 1.34), (Low, 1.15), (Nominal, 1.0), (High, 0.88), (VeryHigh, 0.76)]),
            t("PCON", "personnel continuity", Decreasing,
              &[(VeryLow, 1.29), (Low, 1.12), (Nominal, 1.0), (High, 0.90), (VeryHigh, 0.81)]),
            t("APEX", "applications experience", Decreasing,
              &[(VeryLow, 1.22), (Low, 1.10), (Nominal, 1.0), (High, 0.88), (VeryHigh, 0.81)]),
            t("PLEX", "platform experience", Decreasing,
              &[(VeryLow, 1.19), (Low, 1.09), (Nominal, 1.0), (High, 0.91), (VeryHigh, 0.85)]),
            t("LTEX", "language and tool experience", Decreasing,
              &[(VeryLow, 1.20), (Low, 1.09), (Nominal, 1.0), (High, 0.91), (VeryHigh, 0.84)]),
            t("TOOL", "use of software tools", Decreasing,
              &[(VeryLow, 1.17), (Low, 1.09), (Nominal, 1.0), (High, 0.90), (VeryHigh, 0.78)]),
            t("SITE", "multisite development", Decreasing,
              &[(VeryLow, 1.22), (Low, 1.09), (Nominal, 1.0), (High, 0.93), (VeryHigh, 0.86), (ExtraHigh, 0.80)]),
            t("SCED", "required development schedule", Valley,
              &[(VeryLow, 1.43), (Low, 1.14), (Nominal, 1.0), (High, 1.0), (VeryHigh, 1.0)]),
        ],
    )
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cocomo2 {
    /// Linear multiplier of the early-design model.
    pub early_design_a: f64,
    pub post_architecture_a: f64,
    /// Exponent intercept; the slope on Σw is fixed at 0.01.
    pub exponent_base: f64,
    pub default_scale: ScaleFactorProfile,
    pub early_drivers: DriverSet,
    pub post_drivers: DriverSet,
}

impl Default for Cocomo2 {
    fn default() -> Self {
        Self {
            early_design_a: 2.45,
            post_architecture_a: 2.55,
            exponent_base: 1.01,
            default_scale: ScaleFactorProfile::default(),
            early_drivers: default_early_design_drivers(),
            post_drivers: default_post_architecture_drivers(),
        }
    }
}

impl Cocomo2 {
    /// `a * KLOC * EAF`; linear, not a power law.
    pub fn effort_early_design(&self, size: SizeKloc, eaf: f64) -> Result<EffortPm> {
        let eaf = require_positive("EAF", eaf)?;
        EffortPm::new(self.early_design_a * size.value() * eaf)
    }

    pub fn post_arch_exponent(&self, profile: &ScaleFactorProfile) -> f64 {
        self.exponent_base + 0.01 * profile.sum()
    }

    pub fn effort_post_architecture(
        &self,
        size: SizeKloc,
        profile: &ScaleFactorProfile,
        eaf: f64,
    ) -> Result<EffortPm> {
        let eaf = require_positive("EAF", eaf)?;
        let constants =
            PowerLawConstants::new(self.post_architecture_a, self.post_arch_exponent(profile))?;
        power_law_effort(size, constants).scaled(eaf)
    }

    pub fn eaf_early(&self, drivers: &DriverProfile) -> Result<f64> {
        self.early_drivers.eaf(drivers)
    }

    pub fn eaf_post(&self, drivers: &DriverProfile) -> Result<f64> {
        self.post_drivers.eaf(drivers)
    }
}
