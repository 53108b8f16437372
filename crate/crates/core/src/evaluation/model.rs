use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cocomo2::ScaleFactorProfile;
use crate::cocomo81::PhaseWeights;
use crate::config::Registry;
use crate::error::{Error, Result};
use crate::units::{power_law_effort, EffortPm, Mode, PowerLawConstants, SizeKloc};

/// A size-driven model with every parameter fixed, ready to run over a corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "kebab-case")]
pub enum ModelConfig {
    Cocomo81Basic { mode: Mode },
    Cocomo81Intermediate { mode: Mode, eaf: f64 },
    /// `weights: None` uses the registry's per-mode phase weights.
    Cocomo81Detailed { mode: Mode, eaf: f64, weights: Option<PhaseWeights> },
    Cocomo2Early { eaf: f64 },
    /// `scale: None` uses the registry's default scale-factor profile.
    Cocomo2Post { scale: Option<ScaleFactorProfile>, eaf: f64 },
    PowerLaw { name: String, constants: PowerLawConstants },
}

/// Model identifiers accepted by [`ModelConfig::parse_selector`].
pub const MODEL_IDS: [&str; 5] = [
    "cocomo81-basic",
    "cocomo81-intermediate",
    "cocomo81-detailed",
    "cocomo2-early",
    "cocomo2-post",
];

impl ModelConfig {
    pub fn model_id(&self) -> &str {
        match self {
            ModelConfig::Cocomo81Basic { .. } => "cocomo81-basic",
            ModelConfig::Cocomo81Intermediate { .. } => "cocomo81-intermediate",
            ModelConfig::Cocomo81Detailed { .. } => "cocomo81-detailed",
            ModelConfig::Cocomo2Early { .. } => "cocomo2-early",
            ModelConfig::Cocomo2Post { .. } => "cocomo2-post",
            ModelConfig::PowerLaw { name, .. } => name,
        }
    }

    /// Parameterization label, e.g. `organic eaf=1`.
    pub fn label(&self) -> String {
        match self {
            ModelConfig::Cocomo81Basic { mode } => mode.to_string(),
            ModelConfig::Cocomo81Intermediate { mode, eaf } => format!("{mode} eaf={eaf}"),
            ModelConfig::Cocomo81Detailed { mode, eaf, weights } => match weights {
                Some(w) => format!("{mode} eaf={eaf} sumw={}", w.sum()),
                None => format!("{mode} eaf={eaf} sumw=default"),
            },
            ModelConfig::Cocomo2Early { eaf } => format!("eaf={eaf}"),
            ModelConfig::Cocomo2Post { scale, eaf } => match scale {
                Some(s) => format!("sumw={} eaf={eaf}", s.sum()),
                None => format!("sumw=default eaf={eaf}"),
            },
            ModelConfig::PowerLaw { constants, .. } => constants.to_string(),
        }
    }

    pub fn estimate(&self, registry: &Registry, size: SizeKloc) -> Result<EffortPm> {
        let c81 = &registry.cocomo81;
        let c2 = &registry.cocomo2;
        match self {
            ModelConfig::Cocomo81Basic { mode } => Ok(c81.effort_basic(size, *mode)),
            ModelConfig::Cocomo81Intermediate { mode, eaf } => c81.effort_intermediate(size, *mode, *eaf),
            ModelConfig::Cocomo81Detailed { mode, eaf, weights } => {
                Ok(c81.effort_detailed(size, *mode, *eaf, weights.as_ref())?.total)
            }
            ModelConfig::Cocomo2Early { eaf } => c2.effort_early_design(size, *eaf),
            ModelConfig::Cocomo2Post { scale, eaf } => {
                c2.effort_post_architecture(size, scale.as_ref().unwrap_or(&c2.default_scale), *eaf)
            }
            ModelConfig::PowerLaw { constants, .. } => Ok(power_law_effort(size, *constants)),
        }
    }

    /// Expands a selector into nominal configurations.
    ///
    /// `all`, a model id (every mode for COCOMO81), or a COCOMO81 id with a
    /// mode suffix such as `cocomo81-basic-organic`.
    pub fn parse_selector(selector: &str) -> Result<Vec<ModelConfig>> {
        let s = selector.trim().to_ascii_lowercase();
        if s == "all" {
            return Ok(MODEL_IDS
                .iter()
                .flat_map(|id| Self::nominal_for(id, None).expect("known id"))
                .collect());
        }
        if let Some(configs) = Self::nominal_for(&s, None) {
            return Ok(configs);
        }
        if let Some((id, mode)) = s.rsplit_once('-') {
            if id.starts_with("cocomo81-") {
                if let (Ok(mode), Some(_)) = (mode.parse::<Mode>(), Self::nominal_for(id, None)) {
                    return Ok(Self::nominal_for(id, Some(mode)).expect("known id"));
                }
            }
        }
        Err(Error::UnknownModel(selector.to_string()))
    }

    fn nominal_for(id: &str, mode: Option<Mode>) -> Option<Vec<ModelConfig>> {
        let modes: Vec<Mode> = mode.map(|m| vec![m]).unwrap_or_else(|| Mode::ALL.to_vec());
        let configs = match id {
            "cocomo81-basic" => modes.iter().map(|&mode| ModelConfig::Cocomo81Basic { mode }).collect(),
            "cocomo81-intermediate" => modes
                .iter()
                .map(|&mode| ModelConfig::Cocomo81Intermediate { mode, eaf: 1.0 })
                .collect(),
            "cocomo81-detailed" => modes
                .iter()
                .map(|&mode| ModelConfig::Cocomo81Detailed { mode, eaf: 1.0, weights: None })
                .collect(),
            "cocomo2-early" => vec![ModelConfig::Cocomo2Early { eaf: 1.0 }],
            "cocomo2-post" => vec![ModelConfig::Cocomo2Post { scale: None, eaf: 1.0 }],
            _ => return None,
        };
        Some(configs)
    }

    /// Parses a comma-separated list of selectors.
    pub fn parse_selectors(list: &str) -> Result<Vec<ModelConfig>> {
        let mut out = Vec::new();
        for s in list.split(',').filter(|s| !s.trim().is_empty()) {
            out.extend(Self::parse_selector(s)?);
        }
        Ok(out)
    }
}

impl fmt::Display for ModelConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.model_id(), self.label())
    }
}
