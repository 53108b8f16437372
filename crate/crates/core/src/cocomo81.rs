//! COCOMO81: basic, intermediate and detailed variants.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::drivers::{Direction, DriverProfile, DriverSet, DriverTable, Rating};
use crate::error::{require_non_negative, require_positive, Error, Result};
use crate::units::{power_law_effort, EffortPm, Mode, PowerLawConstants, SizeKloc};

/// One value per development mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PerMode<T> {
    pub organic: T,
    pub semidetached: T,
    pub embedded: T,
}

impl<T> PerMode<T> {
    pub fn get(&self, mode: Mode) -> &T {
        match mode {
            Mode::Organic => &self.organic,
            Mode::Semidetached => &self.semidetached,
            Mode::Embedded => &self.embedded,
        }
    }

    pub fn get_mut(&mut self, mode: Mode) -> &mut T {
        match mode {
            Mode::Organic => &mut self.organic,
            Mode::Semidetached => &mut self.semidetached,
            Mode::Embedded => &mut self.embedded,
        }
    }
}

fn constants(a: f64, b: f64) -> PowerLawConstants {
    PowerLawConstants::new(a, b).expect("built-in constants are positive")
}

/// Basic and intermediate `(a, b)` pairs per mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Cocomo81ModeConstants {
    pub basic: PerMode<PowerLawConstants>,
    pub intermediate: PerMode<PowerLawConstants>,
}

impl Default for Cocomo81ModeConstants {
    fn default() -> Self {
        Self {
            basic: PerMode {
                organic: constants(2.4, 1.05),
                semidetached: constants(3.0, 1.12),
                embedded: constants(3.6, 1.20),
            },
            intermediate: PerMode {
                organic: constants(3.2, 1.05),
                semidetached: constants(3.0, 1.12),
                embedded: constants(2.8, 1.20),
            },
        }
    }
}

/// Lifecycle phases of the detailed model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    PlansAndProductDesign,
    DetailedDesign,
    CodeAndUnitTest,
    IntegrationAndTest,
}

impl Phase {
    pub const ALL: [Phase; 4] = [
        Phase::PlansAndProductDesign,
        Phase::DetailedDesign,
        Phase::CodeAndUnitTest,
        Phase::IntegrationAndTest,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Phase::PlansAndProductDesign => "plans_and_product_design",
            Phase::DetailedDesign => "detailed_design",
            Phase::CodeAndUnitTest => "code_and_unit_test",
            Phase::IntegrationAndTest => "integration_and_test",
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Phase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Phase::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::Validation(format!("unknown phase `{s}`")))
    }
}

/// Non-negative weight per lifecycle phase; the sum multiplies intermediate effort.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhaseWeights {
    weights: [f64; 4],
}

impl PhaseWeights {
    /// Weights in [`Phase::ALL`] order.
    pub fn new(weights: [f64; 4]) -> Result<Self> {
        for w in weights {
            require_non_negative("phase weight", w)?;
        }
        Ok(Self { weights })
    }

    /// A single weight carrying the whole sum, for callers that only know ΣW.
    pub fn from_sum(sum: f64) -> Result<Self> {
        let share = require_non_negative("phase weight sum", sum)? / 4.0;
        Self::new([share; 4])
    }

    pub fn weight(&self, phase: Phase) -> f64 {
        self.weights[phase as usize]
    }

    pub fn set(&mut self, phase: Phase, weight: f64) -> Result<()> {
        self.weights[phase as usize] = require_non_negative("phase weight", weight)?;
        Ok(())
    }

    pub fn sum(&self) -> f64 {
        self.weights.iter().sum()
    }
}

impl PerMode<PhaseWeights> {
    /// Approximate defaults from Boehm's medium-size phase distribution: the
    /// plans-and-requirements share (6/7/8 %) is added to the 100 % spread over
    /// design, code and integration, giving sums of 1.06, 1.07 and 1.08.
    pub fn default_phase_weights() -> Self {
        Self {
            organic: PhaseWeights { weights: [0.22, 0.24, 0.38, 0.22] },
            semidetached: PhaseWeights { weights: [0.24, 0.25, 0.33, 0.25] },
            embedded: PhaseWeights { weights: [0.26, 0.26, 0.28, 0.28] },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetailedEstimate {
    pub total: EffortPm,
    pub breakdown: Vec<(Phase, EffortPm)>,
    /// Set when every phase weight is zero, which forces a zero total.
    pub zero_weights: bool,
}

/// The 15 intermediate-model drivers with Boehm's 1981 multipliers.
pub fn default_drivers() -> DriverSet {
    use Direction::*;
    use Rating::*;
    let t = DriverTable::new;
    DriverSet::new(
        "cocomo81",
        vec![
            t("RELY", "required software reliability", Increasing,
              &[(VeryLow, 0.75), (Low, 0.88), (Nominal, 1.0), (High, 1.15), (VeryHigh, 1.40)]),
            t("DATA", "database size", Increasing,
              &[(Low, 0.94), (Nominal, 1.0), (High, 1.08), (VeryHigh, 1.16)]),
            t("CPLX", "product complexity", Increasing,
              &[(VeryLow, 0.70), (Low, 0.85), (Nominal, 1.0), (High, 1.15), (VeryHigh, 1.30), (ExtraHigh, 1.65)]),
            t("TIME", "execution time constraint", Increasing,
              &[(Nominal, 1.0), (High, 1.11), (VeryHigh, 1.30), (ExtraHigh, 1.66)]),
            t("STOR", "main storage constraint", Increasing,
              &[(Nominal, 1.0), (High, 1.06), (VeryHigh, 1.21), (ExtraHigh, 1.56)]),
            t("VIRT", "virtual machine volatility", Increasing,
              &[(Low, 0.87), (Nominal, 1.0), (High, 1.15), (VeryHigh, 1.30)]),
            t("TURN", "computer turnaround time", Increasing,
              &[(Low, 0.87), (Nominal, 1.0), (High, 1.07), (VeryHigh, 1.15)]),
            t("ACAP", "analyst capability", Decreasing,
              &[(VeryLow, 1.46), (Low, 1.19), (Nominal, 1.0), (High, 0.86), (VeryHigh, 0.71)]),
            t("AEXP", "applications experience", Decreasing,
              &[(VeryLow, 1.29), (Low, 1.13), (Nominal, 1.0), (High, 0.91), (VeryHigh, 0.82)]),
            t("PCAP", "programmer capability", Decreasing,
              &[(VeryLow, 1.42), (Low, 1.17), (Nominal, 1.0), (High, 0.86), (VeryHigh, 0.70)]),
            t("VEXP", "virtual machine experience", Decreasing,
              &[(VeryLow, 1.21), (Low, 1.10), (Nominal, 1.0), (High, 0.90)]),
            t("LEXP", "programming language experience", Decreasing,
              &[(VeryLow, 1.14), (Low, 1.07), (Nominal, 1.0), (High, 0.95)]),
            t("MODP", "use of modern programming practices", Decreasing,
              &[(VeryLow, 1.24), (Low, 1.10), (Nominal, 1.0), (High, 0.91), (VeryHigh, 0.82)]),
            t("TOOL", "use of software tools", Decreasing,
              &[(VeryLow, 1.24), (Low, 1.10), (Nominal, 1.0), (High, 0.91), (VeryHigh, 0.83)]),
            t("SCED", "required development schedule", Valley,
              &[(VeryLow, 1.23), (Low, 1.08), (Nominal, 1.0), (High, 1.04), (VeryHigh, 1.10)]),
        ],
    )
}

/// COCOMO81 constants, driver table and phase weights.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Cocomo81 {
    pub constants: Cocomo81ModeConstants,
    pub drivers: DriverSet,
    pub phase_weights: PerMode<PhaseWeights>,
}

impl Default for Cocomo81 {
    fn default() -> Self {
        Self {
            constants: Cocomo81ModeConstants::default(),
            drivers: default_drivers(),
            phase_weights: PerMode::default_phase_weights(),
        }
    }
}

impl Cocomo81 {
    pub fn effort_basic(&self, size: SizeKloc, mode: Mode) -> EffortPm {
        power_law_effort(size, *self.constants.basic.get(mode))
    }

    pub fn eaf(&self, profile: &DriverProfile) -> Result<f64> {
        self.drivers.eaf(profile)
    }

    pub fn effort_intermediate(&self, size: SizeKloc, mode: Mode, eaf: f64) -> Result<EffortPm> {
        let eaf = require_positive("EAF", eaf)?;
        power_law_effort(size, *self.constants.intermediate.get(mode)).scaled(eaf)
    }

    /// Detailed effort with explicit weights; `None` uses the mode's defaults.
    pub fn effort_detailed(
        &self,
        size: SizeKloc,
        mode: Mode,
        eaf: f64,
        weights: Option<&PhaseWeights>,
    ) -> Result<DetailedEstimate> {
        let weights = weights.unwrap_or_else(|| self.phase_weights.get(mode));
        let base = self.effort_intermediate(size, mode, eaf)?;
        let breakdown = Phase::ALL
            .iter()
            .map(|&p| Ok((p, base.scaled(weights.weight(p))?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(DetailedEstimate {
            total: base.scaled(weights.sum())?,
            breakdown,
            zero_weights: weights.sum() == 0.0,
        })
    }
}
