use std::collections::HashMap;
use std::fmt::Write as _;
use std::io::Read;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::metrics::{mmre, ErrorRow};
use super::model::ModelConfig;
use crate::config::Registry;
use crate::dataset::Corpus;
use crate::error::{Error, Result, RowError};

/// Aggregate error of one configuration over a corpus.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub model: String,
    pub config: String,
    pub n: usize,
    pub mmre: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub rows: Vec<ErrorRow>,
    pub summaries: Vec<ModelSummary>,
}

pub const REPORT_CSV_HEADER: [&str; 7] = [
    "project_id",
    "model",
    "config",
    "estimated_pm",
    "actual_pm",
    "signed_error_pct",
    "mre",
];

/// Runs every configuration over every project.
///
/// Projects are evaluated in parallel; rows come back ordered by project id,
/// then by position in `configs`.
pub fn evaluate(corpus: &Corpus, configs: &[ModelConfig], registry: &Registry) -> Result<EvaluationReport> {
    let mut projects: Vec<_> = corpus.projects().iter().collect();
    projects.sort_by_key(|p| p.id);
    let per_project = projects
        .par_iter()
        .map(|p| {
            configs
                .iter()
                .map(|c| {
                    let estimate = c.estimate(registry, p.size_kloc)?;
                    ErrorRow::new(p.id, c.model_id(), &c.label(), estimate, p.actual_effort_pm)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let rows: Vec<ErrorRow> = per_project.into_iter().flatten().collect();
    let summaries = summarize(&rows)?;
    Ok(EvaluationReport { rows, summaries })
}

/// One summary per (model, config), in order of first appearance.
fn summarize(rows: &[ErrorRow]) -> Result<Vec<ModelSummary>> {
    let mut order: Vec<(String, String)> = Vec::new();
    let mut groups: HashMap<(String, String), Vec<ErrorRow>> = HashMap::new();
    for r in rows {
        let key = (r.model.clone(), r.config.clone());
        if !groups.contains_key(&key) {
            order.push(key.clone());
        }
        groups.entry(key).or_default().push(r.clone());
    }
    order
        .into_iter()
        .map(|key| {
            let group = &groups[&key];
            Ok(ModelSummary {
                model: key.0,
                config: key.1,
                n: group.len(),
                mmre: mmre(group)?,
            })
        })
        .collect()
}

impl EvaluationReport {
    pub fn summary(&self, model: &str, config: &str) -> Option<&ModelSummary> {
        self.summaries.iter().find(|s| s.model == model && s.config == config)
    }

    pub fn rows_for<'a>(&'a self, model: &'a str, config: &'a str) -> impl Iterator<Item = &'a ErrorRow> + 'a {
        self.rows.iter().filter(move |r| r.model == model && r.config == config)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(REPORT_CSV_HEADER)?;
        for r in &self.rows {
            w.write_record([
                r.project_id.to_string(),
                r.model.clone(),
                r.config.clone(),
                r.estimated_pm.to_string(),
                r.actual_pm.to_string(),
                r.signed_error_pct.to_string(),
                r.mre.to_string(),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv writer emits UTF-8"))
    }

    /// Parses the CSV form, checking the row-level identities.
    pub fn from_csv<R: Read>(source: R) -> Result<Self> {
        let mut reader = csv::Reader::from_reader(source);
        let mut rows = Vec::new();
        let mut errors = Vec::new();
        for (i, rec) in reader.deserialize::<ErrorRow>().enumerate() {
            let line = i + 2;
            match rec {
                Ok(r) => {
                    let expected = 100.0 * (r.estimated_pm - r.actual_pm) / r.actual_pm;
                    if r.actual_pm <= 0.0 || (expected - r.signed_error_pct).abs() > 1e-9 * expected.abs().max(1.0) {
                        errors.push(RowError { line, message: "signed_error_pct inconsistent with efforts".into() });
                    } else {
                        rows.push(r);
                    }
                }
                Err(e) => errors.push(RowError { line, message: e.to_string() }),
            }
        }
        if !errors.is_empty() {
            return Err(Error::Rows(errors));
        }
        let summaries = summarize(&rows)?;
        Ok(Self { rows, summaries })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    /// Aligned text with effort and signed error interleaved per configuration.
    pub fn to_table(&self, corpus: &Corpus) -> String {
        let columns: Vec<(&str, &str)> = self
            .summaries
            .iter()
            .map(|s| (s.model.as_str(), s.config.as_str()))
            .collect();
        let mut cells: HashMap<(u32, &str, &str), &ErrorRow> = HashMap::new();
        for r in &self.rows {
            cells.insert((r.project_id, r.model.as_str(), r.config.as_str()), r);
        }
        let mut out = String::new();
        let _ = write!(out, "{:>4} {:<5} {:>8} {:>9}", "id", "ref", "kloc", "actual");
        for (i, _) in columns.iter().enumerate() {
            let _ = write!(out, " | {:>9} {:>7}", format!("effort#{}", i + 1), "err%");
        }
        out.push('\n');
        let mut projects: Vec<_> = corpus.projects().iter().collect();
        projects.sort_by_key(|p| p.id);
        for p in projects {
            let _ = write!(
                out,
                "{:>4} {:<5} {:>8} {:>9}",
                p.id,
                p.ref_group,
                p.size_kloc.value(),
                p.actual_effort_pm.value()
            );
            for &(m, c) in &columns {
                match cells.get(&(p.id, m, c)) {
                    Some(r) => {
                        let _ = write!(out, " | {:>9.1} {:>7.0}", r.estimated_pm, r.signed_error_pct);
                    }
                    None => {
                        let _ = write!(out, " | {:>9} {:>7}", "-", "-");
                    }
                }
            }
            out.push('\n');
        }
        out.push('\n');
        for (i, s) in self.summaries.iter().enumerate() {
            let _ = writeln!(out, "#{:<3} {} [{}]  n={}  MMRE={:.4}", i + 1, s.model, s.config, s.n, s.mmre);
        }
        out
    }

    /// Per-configuration (index, estimated, actual) series for external plotting.
    pub fn to_plot_data(&self, corpus: &Corpus) -> Result<String> {
        let index: HashMap<u32, usize> = corpus
            .projects()
            .iter()
            .enumerate()
            .map(|(i, p)| (p.id, i + 1))
            .collect();
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["model", "config", "project_index", "project_id", "estimated_pm", "actual_pm"])?;
        for s in &self.summaries {
            for r in self.rows_for(&s.model, &s.config) {
                w.write_record([
                    r.model.clone(),
                    r.config.clone(),
                    index.get(&r.project_id).copied().unwrap_or(0).to_string(),
                    r.project_id.to_string(),
                    r.estimated_pm.to_string(),
                    r.actual_pm.to_string(),
                ])?;
            }
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv writer emits UTF-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::embedded_corpus;
    use crate::units::Mode;

    #[test]
    fn empty_configuration_list() {
        let r = evaluate(&embedded_corpus(), &[], &Registry::default()).unwrap();
        assert!(r.rows.is_empty());
        assert!(r.summaries.is_empty());
    }

    #[test]
    fn row_count_and_ordering() {
        let configs = ModelConfig::parse_selector("cocomo81-basic").unwrap();
        let r = evaluate(&embedded_corpus(), &configs, &Registry::default()).unwrap();
        assert_eq!(r.rows.len(), 90);
        assert_eq!(r.rows[0].project_id, 1);
        assert_eq!(r.rows[0].config, "organic");
        assert_eq!(r.rows[1].config, "semidetached");
        assert_eq!(r.rows[3].project_id, 2);
        assert_eq!(r.summaries.len(), 3);
    }

    #[test]
    fn mmre_recomputable_from_rows() {
        let configs = ModelConfig::parse_selector("all").unwrap();
        let r = evaluate(&embedded_corpus(), &configs, &Registry::default()).unwrap();
        for s in &r.summaries {
            let rows: Vec<ErrorRow> = r.rows_for(&s.model, &s.config).cloned().collect();
            assert_eq!(rows.len(), 30);
            assert_eq!(mmre(&rows).unwrap(), s.mmre);
        }
    }

    #[test]
    fn csv_round_trip() {
        let configs = ModelConfig::parse_selector("all").unwrap();
        let r = evaluate(&embedded_corpus(), &configs, &Registry::default()).unwrap();
        let text = r.to_csv().unwrap();
        let back = EvaluationReport::from_csv(text.as_bytes()).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_csv().unwrap(), text);
    }

    #[test]
    fn table_and_plot_shapes() {
        let corpus = embedded_corpus();
        let configs = vec![ModelConfig::Cocomo81Basic { mode: Mode::Organic }];
        let r = evaluate(&corpus, &configs, &Registry::default()).unwrap();
        let table = r.to_table(&corpus);
        assert!(table.lines().nth(1).unwrap().contains("145.9"));
        assert!(table.contains("MMRE="));
        let plot = r.to_plot_data(&corpus).unwrap();
        assert_eq!(plot.lines().count(), 31);
        assert!(plot.lines().nth(1).unwrap().starts_with("cocomo81-basic,organic,1,1,"));
    }
}
