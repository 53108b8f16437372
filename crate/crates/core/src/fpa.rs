//! Function Point Analysis.
//!
//! Counts of the five function types at three complexity levels are weighted
//! into unadjusted function points, scaled by the complexity adjustment
//! multiplier `0.65 + 0.01 * TCA`, and converted to source lines through a
//! per-language factor.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{require_non_negative, require_positive, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionType {
    Inputs,
    Outputs,
    Inquiries,
    MasterFiles,
    Interfaces,
}

impl FunctionType {
    pub const ALL: [FunctionType; 5] = [
        FunctionType::Inputs,
        FunctionType::Outputs,
        FunctionType::Inquiries,
        FunctionType::MasterFiles,
        FunctionType::Interfaces,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionType::Inputs => "inputs",
            FunctionType::Outputs => "outputs",
            FunctionType::Inquiries => "inquiries",
            FunctionType::MasterFiles => "master_files",
            FunctionType::Interfaces => "interfaces",
        }
    }
}

impl fmt::Display for FunctionType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionType::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::Validation(format!("unknown function type `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Complexity {
    Simple,
    Average,
    Complex,
}

impl Complexity {
    pub const ALL: [Complexity; 3] = [Complexity::Simple, Complexity::Average, Complexity::Complex];

    pub fn as_str(self) -> &'static str {
        match self {
            Complexity::Simple => "simple",
            Complexity::Average => "average",
            Complexity::Complex => "complex",
        }
    }
}

impl fmt::Display for Complexity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Complexity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Complexity::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::Validation(format!("unknown complexity `{s}`")))
    }
}

/// Count per (function type, complexity) cell; 15 cells.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionPointCounts {
    cells: [[u32; 3]; 5],
}

impl FunctionPointCounts {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, ty: FunctionType, cx: Complexity, count: u32) -> Self {
        self.set(ty, cx, count);
        self
    }

    pub fn set(&mut self, ty: FunctionType, cx: Complexity, count: u32) {
        self.cells[ty as usize][cx as usize] = count;
    }

    pub fn get(&self, ty: FunctionType, cx: Complexity) -> u32 {
        self.cells[ty as usize][cx as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (FunctionType, Complexity, u32)> + '_ {
        FunctionType::ALL.into_iter().flat_map(move |t| {
            Complexity::ALL.into_iter().map(move |c| (t, c, self.get(t, c)))
        })
    }

    /// Parses `type.complexity=count` assignments such as `inputs.simple=4`.
    pub fn apply_assignment(&mut self, assignment: &str) -> Result<()> {
        let bad = || Error::Validation(format!("expected type.complexity=count, got `{assignment}`"));
        let (cell, count) = assignment.split_once('=').ok_or_else(bad)?;
        let (ty, cx) = cell.trim().split_once('.').ok_or_else(bad)?;
        let count: u32 = count.trim().parse().map_err(|_| bad())?;
        self.set(ty.parse()?, cx.parse()?, count);
        Ok(())
    }
}

/// Weight per (function type, complexity).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightTable {
    weights: BTreeMap<(FunctionType, Complexity), f64>,
}

impl WeightTable {
    pub fn empty() -> Self {
        Self { weights: BTreeMap::new() }
    }

    pub fn set(&mut self, ty: FunctionType, cx: Complexity, weight: f64) -> Result<()> {
        self.weights
            .insert((ty, cx), require_non_negative("function point weight", weight)?);
        Ok(())
    }

    pub fn get(&self, ty: FunctionType, cx: Complexity) -> Option<f64> {
        self.weights.get(&(ty, cx)).copied()
    }
}

impl Default for WeightTable {
    /// Albrecht's standard weights from the FPA literature.
    fn default() -> Self {
        let rows = [
            (FunctionType::Inputs, [3.0, 4.0, 6.0]),
            (FunctionType::Outputs, [4.0, 5.0, 7.0]),
            (FunctionType::Inquiries, [3.0, 4.0, 6.0]),
            (FunctionType::MasterFiles, [7.0, 10.0, 15.0]),
            (FunctionType::Interfaces, [5.0, 7.0, 10.0]),
        ];
        let weights = rows
            .into_iter()
            .flat_map(|(t, ws)| Complexity::ALL.into_iter().zip(ws).map(move |(c, w)| ((t, c), w)))
            .collect();
        Self { weights }
    }
}

/// Unadjusted function points: Σ count · weight.
pub fn ufp(counts: &FunctionPointCounts, weights: &WeightTable) -> Result<f64> {
    counts.iter().try_fold(0.0, |acc, (t, c, n)| {
        let w = weights.get(t, c).ok_or_else(|| Error::Config {
            line: 0,
            message: format!("no function point weight for {t}.{c}"),
        })?;
        Ok(acc + f64::from(n) * w)
    })
}

/// The 14 general system characteristics, each rated 0–5.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityAdjustment {
    values: [u8; 14],
}

/// Conventional names of the 14 adjustment factors, by index.
pub const ADJUSTMENT_FACTOR_NAMES: [&str; 14] = [
    "data communications",
    "distributed data processing",
    "performance",
    "heavily used configuration",
    "transaction rate",
    "online data entry",
    "end-user efficiency",
    "online update",
    "complex processing",
    "reusability",
    "installation ease",
    "operational ease (backup and recovery)",
    "multiple sites",
    "facilitate change",
];

impl ComplexityAdjustment {
    pub fn new(values: [u8; 14]) -> Result<Self> {
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| **v > 5) {
            return Err(Error::Validation(format!(
                "complexity factor {} ({}) must be in 0..=5, got {v}",
                i + 1,
                ADJUSTMENT_FACTOR_NAMES[i]
            )));
        }
        Ok(Self { values })
    }

    /// Every factor set to the same value.
    pub fn uniform(value: u8) -> Result<Self> {
        Self::new([value; 14])
    }

    pub fn values(&self) -> &[u8; 14] {
        &self.values
    }

    /// Total complexity adjustment, in 0..=70.
    pub fn total(&self) -> u32 {
        self.values.iter().map(|&v| u32::from(v)).sum()
    }

    /// `0.65 + 0.01 * total`, in [0.65, 1.35].
    pub fn factor(&self) -> f64 {
        adjustment_factor(self.total())
    }
}

pub fn adjustment_factor(total: u32) -> f64 {
    0.65 + 0.01 * f64::from(total)
}

pub fn adjusted_fp(ufp: f64, adjustment: &ComplexityAdjustment) -> Result<f64> {
    Ok(require_non_negative("unadjusted function points", ufp)? * adjustment.factor())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LanguageFactor {
    pub language: String,
    pub sloc_per_fp: f64,
}

impl LanguageFactor {
    pub fn new(language: &str, sloc_per_fp: f64) -> Result<Self> {
        Ok(Self {
            language: language.to_string(),
            sloc_per_fp: require_positive("SLOC per function point", sloc_per_fp)?,
        })
    }
}

/// Default SLOC-per-FP factors (backfiring averages; approximate).
pub fn default_language_factors() -> Vec<LanguageFactor> {
    [
        ("assembly", 320.0),
        ("c", 128.0),
        ("cobol", 107.0),
        ("fortran", 107.0),
        ("pascal", 91.0),
        ("ada", 71.0),
        ("cpp", 53.0),
        ("java", 53.0),
        ("visual_basic", 32.0),
        ("sql", 13.0),
    ]
    .into_iter()
    .map(|(l, f)| LanguageFactor { language: l.to_string(), sloc_per_fp: f })
    .collect()
}

pub fn sloc_from_fp(fp: f64, language: &LanguageFactor) -> Result<f64> {
    Ok(require_non_negative("function points", fp)? * language.sloc_per_fp)
}

/// Weight table plus language factors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FpaTables {
    pub weights: WeightTable,
    pub languages: Vec<LanguageFactor>,
}

impl Default for FpaTables {
    fn default() -> Self {
        Self {
            weights: WeightTable::default(),
            languages: default_language_factors(),
        }
    }
}

impl FpaTables {
    pub fn language(&self, name: &str) -> Result<&LanguageFactor> {
        self.languages
            .iter()
            .find(|l| l.language.eq_ignore_ascii_case(name))
            .ok_or_else(|| Error::Validation(format!("no language factor for `{name}`")))
    }

    pub fn set_language(&mut self, factor: LanguageFactor) {
        match self.languages.iter_mut().find(|l| l.language == factor.language) {
            Some(existing) => *existing = factor,
            None => self.languages.push(factor),
        }
    }
}
