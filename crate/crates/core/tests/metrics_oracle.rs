use paramcost::config::Registry;
use paramcost::dataset::{embedded_corpus, Corpus, Project};
use paramcost::evaluation::{evaluate, mmre, mre, signed_error_pct, EvaluationReport, ModelConfig};
use paramcost::{EffortPm, SizeKloc};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn oracle_mmre(report: &EvaluationReport, model: &str, config: &str) -> f64 {
    let mut sum = 0.0;
    let mut n = 0usize;
    for r in report.rows.iter().filter(|r| r.model == model && r.config == config) {
        sum += (r.estimated_pm - r.actual_pm).abs() / r.actual_pm;
        n += 1;
    }
    sum / n as f64
}

fn check(report: &EvaluationReport) {
    for r in &report.rows {
        assert!((r.signed_error_pct.abs() - 100.0 * r.mre).abs() <= 1e-9 * r.signed_error_pct.abs().max(1.0));
        let expect = 100.0 * (r.estimated_pm - r.actual_pm) / r.actual_pm;
        assert!((r.signed_error_pct - expect).abs() <= 1e-9 * expect.abs().max(1.0));
    }
    for s in &report.summaries {
        let o = oracle_mmre(report, &s.model, &s.config);
        assert!((s.mmre - o).abs() <= 1e-12 * o.max(1.0), "{} {}: {} vs {o}", s.model, s.config, s.mmre);
    }
}

#[test]
fn embedded_corpus_all_models() {
    let configs = ModelConfig::parse_selector("all").unwrap();
    let report = evaluate(&embedded_corpus(), &configs, &Registry::default()).unwrap();
    assert_eq!(report.rows.len(), 30 * configs.len());
    assert_eq!(report.summaries.len(), configs.len());
    check(&report);
}

#[test]
fn random_corpora() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let configs = ModelConfig::parse_selector("all").unwrap();
    for _ in 0..20 {
        let n = rng.gen_range(1..60);
        let projects = (1..=n)
            .map(|id| Project {
                id,
                ref_group: String::new(),
                size_kloc: SizeKloc::new(rng.gen_range(0.5..2000.0)).unwrap(),
                actual_effort_pm: EffortPm::new(rng.gen_range(1.0..20000.0)).unwrap(),
            })
            .collect();
        let corpus = Corpus::new(projects, "random").unwrap();
        check(&evaluate(&corpus, &configs, &Registry::default()).unwrap());
    }
}

#[test]
fn metric_edge_cases() {
    let pm = |v| EffortPm::new(v).unwrap();
    assert_eq!(signed_error_pct(pm(150.0), pm(100.0)).unwrap(), 50.0);
    assert_eq!(mre(pm(50.0), pm(100.0)).unwrap(), 0.5);
    assert!(signed_error_pct(pm(1.0), pm(0.0)).is_err());
    assert!(mmre(&[]).is_err());
}
