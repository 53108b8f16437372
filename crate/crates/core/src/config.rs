//! Overridable model constants and tables.
//!
//! The config format is plain text, one `key = value` per line; `#` starts a
//! comment. Every key overrides one built-in default:
//!
//! ```text
//! cocomo81.basic.<mode>.a            cocomo81.basic.<mode>.b
//! cocomo81.intermediate.<mode>.a     cocomo81.intermediate.<mode>.b
//! cocomo81.driver.<DRIVER>.<rating>  effort multiplier
//! cocomo81.phase.<mode>.<phase>      detailed-model phase weight
//! cocomo2.early.a                    cocomo2.post.a
//! cocomo2.post.exponent_base
//! cocomo2.scale.<FACTOR>             default scale-factor weight
//! cocomo2.early_driver.<DRIVER>.<rating>
//! cocomo2.post_driver.<DRIVER>.<rating>
//! fpa.weight.<type>.<complexity>
//! fpa.language.<name>                SLOC per function point
//! ```
//!
//! Modes are `organic|semidetached|embedded`; ratings are `extra_low` through
//! `extra_high`; phases are `plans_and_product_design`, `detailed_design`,
//! `code_and_unit_test`, `integration_and_test`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::cocomo2::{Cocomo2, SCALE_FACTORS};
use crate::cocomo81::{Cocomo81, Phase};
use crate::drivers::{DriverSet, Rating};
use crate::error::{Error, Result};
use crate::fpa::{Complexity, FpaTables, FunctionType, LanguageFactor};
use crate::units::{Mode, PowerLawConstants};

/// Environment variable naming a config file.
pub const CONFIG_ENV: &str = "PARAMCOST_CONFIG";

/// All model parameters; read-only once loaded.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Registry {
    pub cocomo81: Cocomo81,
    pub cocomo2: Cocomo2,
    pub fpa: FpaTables,
}

impl Registry {
    pub fn from_path(path: &Path) -> Result<Self> {
        Self::from_config_str(&std::fs::read_to_string(path)?)
    }

    /// Built-in defaults with the overrides in `text` applied.
    pub fn from_config_str(text: &str) -> Result<Self> {
        let mut registry = Self::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content.split_once('=').ok_or_else(|| Error::Config {
                line,
                message: format!("expected `key = value`, got `{content}`"),
            })?;
            let value: f64 = value.trim().parse().map_err(|_| Error::Config {
                line,
                message: format!("value `{}` is not a number", value.trim()),
            })?;
            registry.apply(key.trim(), value).map_err(|e| match e {
                Error::Config { .. } => e,
                other => Error::Config { line, message: other.to_string() },
            })?;
        }
        registry.validate()?;
        Ok(registry)
    }

    pub fn validate(&self) -> Result<()> {
        self.cocomo81.drivers.validate()?;
        self.cocomo2.early_drivers.validate()?;
        self.cocomo2.post_drivers.validate()
    }

    fn apply(&mut self, key: &str, value: f64) -> Result<()> {
        let parts: Vec<&str> = key.split('.').collect();
        let unknown = || Error::Validation(format!("unknown config key `{key}`"));
        match parts.as_slice() {
            ["cocomo81", variant @ ("basic" | "intermediate"), mode, coef @ ("a" | "b")] => {
                let mode: Mode = mode.parse()?;
                let table = if *variant == "basic" {
                    &mut self.cocomo81.constants.basic
                } else {
                    &mut self.cocomo81.constants.intermediate
                };
                let current = *table.get(mode);
                *table.get_mut(mode) = if *coef == "a" {
                    PowerLawConstants::new(value, current.b())?
                } else {
                    PowerLawConstants::new(current.a(), value)?
                };
            }
            ["cocomo81", "driver", name, rating] => {
                set_multiplier(&mut self.cocomo81.drivers, name, rating, value)?
            }
            ["cocomo81", "phase", mode, phase] => {
                let mode: Mode = mode.parse()?;
                self.cocomo81.phase_weights.get_mut(mode).set(phase.parse::<Phase>()?, value)?;
            }
            ["cocomo2", "early", "a"] => {
                self.cocomo2.early_design_a = crate::error::require_positive("early-design a", value)?
            }
            ["cocomo2", "post", "a"] => {
                self.cocomo2.post_architecture_a = crate::error::require_positive("post-architecture a", value)?
            }
            ["cocomo2", "post", "exponent_base"] => {
                self.cocomo2.exponent_base = crate::error::require_positive("exponent base", value)?
            }
            ["cocomo2", "scale", factor] => self.cocomo2.default_scale.set(factor, value)?,
            ["cocomo2", "early_driver", name, rating] => {
                set_multiplier(&mut self.cocomo2.early_drivers, name, rating, value)?
            }
            ["cocomo2", "post_driver", name, rating] => {
                set_multiplier(&mut self.cocomo2.post_drivers, name, rating, value)?
            }
            ["fpa", "weight", ty, cx] => {
                self.fpa
                    .weights
                    .set(ty.parse::<FunctionType>()?, cx.parse::<Complexity>()?, value)?
            }
            ["fpa", "language", name] => self.fpa.set_language(LanguageFactor::new(name, value)?),
            _ => return Err(unknown()),
        }
        Ok(())
    }

    /// Every parameter as config text; loading it back yields the same registry.
    pub fn to_config_string(&self) -> String {
        let mut out = String::new();
        let c81 = &self.cocomo81;
        out.push_str("# COCOMO81 mode constants\n");
        for (variant, table) in [("basic", &c81.constants.basic), ("intermediate", &c81.constants.intermediate)] {
            for mode in Mode::ALL {
                let k = table.get(mode);
                let _ = writeln!(out, "cocomo81.{variant}.{mode}.a = {}", k.a());
                let _ = writeln!(out, "cocomo81.{variant}.{mode}.b = {}", k.b());
            }
        }
        out.push_str("\n# COCOMO81 intermediate effort multipliers\n");
        write_drivers(&mut out, "cocomo81.driver", &c81.drivers);
        out.push_str("\n# COCOMO81 detailed phase weights (approximate)\n");
        for mode in Mode::ALL {
            for phase in Phase::ALL {
                let _ = writeln!(out, "cocomo81.phase.{mode}.{phase} = {}", c81.phase_weights.get(mode).weight(phase));
            }
        }
        let c2 = &self.cocomo2;
        out.push_str("\n# COCOMO II\n");
        let _ = writeln!(out, "cocomo2.early.a = {}", c2.early_design_a);
        let _ = writeln!(out, "cocomo2.post.a = {}", c2.post_architecture_a);
        let _ = writeln!(out, "cocomo2.post.exponent_base = {}", c2.exponent_base);
        for f in SCALE_FACTORS {
            let _ = writeln!(out, "cocomo2.scale.{f} = {}", c2.default_scale.weight(f).unwrap_or(0.0));
        }
        out.push('\n');
        write_drivers(&mut out, "cocomo2.early_driver", &c2.early_drivers);
        out.push('\n');
        write_drivers(&mut out, "cocomo2.post_driver", &c2.post_drivers);
        out.push_str("\n# Function point weights and language factors\n");
        for ty in FunctionType::ALL {
            for cx in Complexity::ALL {
                if let Some(w) = self.fpa.weights.get(ty, cx) {
                    let _ = writeln!(out, "fpa.weight.{ty}.{cx} = {w}");
                }
            }
        }
        for lf in &self.fpa.languages {
            let _ = writeln!(out, "fpa.language.{} = {}", lf.language, lf.sloc_per_fp);
        }
        out
    }
}

fn set_multiplier(set: &mut DriverSet, name: &str, rating: &str, value: f64) -> Result<()> {
    let label = set.label.clone();
    let driver = set.get_mut(name).ok_or_else(|| Error::UnknownDriver {
        driver: name.to_string(),
        table: label,
    })?;
    let value = crate::error::require_positive("effort multiplier", value)?;
    driver.multipliers.insert(rating.parse::<Rating>()?, value);
    Ok(())
}

fn write_drivers(out: &mut String, prefix: &str, set: &DriverSet) {
    for d in set.drivers() {
        for (r, m) in &d.multipliers {
            let _ = writeln!(out, "{prefix}.{}.{r} = {m}", d.name);
        }
    }
}
