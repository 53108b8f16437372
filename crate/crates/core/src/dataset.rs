//! Historical project corpora.
//!
//! The embedded corpus holds the 30 projects (size, actual effort, source
//! group) benchmarked in the published COCOMO comparison tables. User corpora
//! are read from CSV with header `id,ref_group,size_kloc,actual_effort_pm`.

use std::collections::HashSet;
use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, RowError};
use crate::units::{EffortPm, SizeKloc};

pub const CSV_HEADER: [&str; 4] = ["id", "ref_group", "size_kloc", "actual_effort_pm"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Project {
    pub id: u32,
    /// Opaque source tag.
    pub ref_group: String,
    pub size_kloc: SizeKloc,
    pub actual_effort_pm: EffortPm,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    projects: Vec<Project>,
    pub provenance: String,
}

impl Corpus {
    /// Validates non-emptiness, unique ids and positive efforts.
    pub fn new(projects: Vec<Project>, provenance: &str) -> Result<Self> {
        if projects.is_empty() {
            return Err(Error::Validation("corpus is empty".into()));
        }
        let mut seen = HashSet::new();
        for p in &projects {
            if p.actual_effort_pm.value() <= 0.0 {
                return Err(Error::Validation(format!(
                    "project {} has non-positive actual effort",
                    p.id
                )));
            }
            if !seen.insert(p.id) {
                return Err(Error::Validation(format!("duplicate project id {}", p.id)));
            }
        }
        Ok(Self {
            projects,
            provenance: provenance.to_string(),
        })
    }

    pub fn projects(&self) -> &[Project] {
        &self.projects
    }

    pub fn len(&self) -> usize {
        self.projects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.projects.is_empty()
    }

    pub fn get(&self, id: u32) -> Option<&Project> {
        self.projects.iter().find(|p| p.id == id)
    }

    /// Writes the canonical CSV form.
    pub fn export<W: Write>(&self, sink: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(sink);
        writer.write_record(CSV_HEADER)?;
        for p in &self.projects {
            writer.write_record([
                p.id.to_string(),
                p.ref_group.clone(),
                p.size_kloc.value().to_string(),
                p.actual_effort_pm.value().to_string(),
            ])?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.export(&mut buf)?;
        Ok(String::from_utf8(buf).expect("csv writer emits UTF-8"))
    }
}

#[derive(Debug, Deserialize)]
struct RawRow {
    id: String,
    ref_group: String,
    size_kloc: String,
    actual_effort_pm: String,
}

fn parse_positive(field: &str, raw: &str) -> std::result::Result<f64, String> {
    let v: f64 = raw
        .parse()
        .map_err(|_| format!("{field} `{raw}` is not a number"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("{field} must be > 0, got {raw}"))
    }
}

fn parse_row(raw: &RawRow) -> std::result::Result<Project, String> {
    let id: u32 = raw
        .id
        .parse()
        .map_err(|_| format!("id `{}` is not a non-negative integer", raw.id))?;
    let size = parse_positive("size_kloc", &raw.size_kloc)?;
    let effort = parse_positive("actual_effort_pm", &raw.actual_effort_pm)?;
    Ok(Project {
        id,
        ref_group: raw.ref_group.clone(),
        size_kloc: SizeKloc::new(size).map_err(|e| e.to_string())?,
        actual_effort_pm: EffortPm::new(effort).map_err(|e| e.to_string())?,
    })
}

/// Reads and validates a corpus, reporting every offending row at once.
pub fn load_corpus<R: Read>(source: R) -> Result<Corpus> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(source);
    let header = reader.headers()?.clone();
    if header.iter().collect::<Vec<_>>() != CSV_HEADER {
        return Err(Error::Rows(vec![RowError {
            line: 1,
            message: format!(
                "expected header `{}`, got `{}`",
                CSV_HEADER.join(","),
                header.iter().collect::<Vec<_>>().join(",")
            ),
        }]));
    }

    let mut projects = Vec::new();
    let mut errors = Vec::new();
    let mut seen = HashSet::new();
    for (i, record) in reader.deserialize::<RawRow>().enumerate() {
        let line = i + 2;
        let parsed = record
            .map_err(|e| e.to_string())
            .and_then(|raw| parse_row(&raw));
        match parsed {
            Ok(p) if !seen.insert(p.id) => errors.push(RowError {
                line,
                message: format!("duplicate project id {}", p.id),
            }),
            Ok(p) => projects.push(p),
            Err(message) => errors.push(RowError { line, message }),
        }
    }
    if !errors.is_empty() {
        return Err(Error::Rows(errors));
    }
    Corpus::new(projects, "loaded from CSV")
}

const EMBEDDED_ROWS: [(u32, &str, f64, f64); 30] = [
    (1, "*", 50.0, 47.0),
    (2, "*", 40.0, 66.0),
    (3, "*", 22.0, 66.0),
    (4, "*", 13.0, 159.0),
    (5, "*", 12.0, 218.0),
    (6, "*", 34.0, 723.0),
    (7, "*", 6.2, 775.0),
    (8, "*", 2.5, 312.0),
    (9, "*", 5.3, 883.0),
    (10, "*", 19.5, 433.0),
    (11, "*", 28.0, 337.0),
    (12, "*", 30.0, 345.0),
    (13, "*", 32.0, 302.0),
    (14, "*", 57.0, 452.0),
    (15, "**", 30.8, 143.7),
    (16, "**", 34.8, 161.3),
    (17, "**", 38.8, 178.6),
    (18, "***", 39.0, 542.0),
    (19, "****", 128.6, 557.0),
    (20, "****", 15.4, 400.0),
    (21, "****", 11.3, 240.0),
    (22, "****", 12.3, 95.0),
    (23, "****", 13.3, 87.0),
    (24, "****", 13.0, 18.0),
    (25, "****", 12.4, 63.0),
    (26, "****", 13.6, 45.0),
    (27, "****", 14.0, 13.0),
    (28, "****", 12.7, 16.0),
    (29, "****", 12.8, 16.0),
    (30, "****", 12.2, 34.0),
];

pub const EMBEDDED_PROVENANCE: &str = "30 historical projects from the published COCOMO81/COCOMO II \
comparison tables; ref_group tags mark the four source groups. Project 18 is tagged *** as in the \
COCOMO II tables (the COCOMO81 tables print ** for the same row).";

pub fn embedded_corpus() -> Corpus {
    let projects = EMBEDDED_ROWS
        .iter()
        .map(|&(id, group, size, effort)| Project {
            id,
            ref_group: group.to_string(),
            size_kloc: SizeKloc::new(size).expect("embedded size"),
            actual_effort_pm: EffortPm::new(effort).expect("embedded effort"),
        })
        .collect();
    Corpus::new(projects, EMBEDDED_PROVENANCE).expect("embedded corpus is valid")
}
