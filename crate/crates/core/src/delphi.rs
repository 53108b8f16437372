//! Expert-judgment aggregation: `(least + 4 * avg + highest) / 6`.

use std::collections::BTreeMap;
use std::io::Read;

use serde::{Deserialize, Serialize};

use crate::error::{require_positive, Error, Result, RowError};
use crate::units::EffortPm;

/// One round of expert estimates, in person-months.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExpertRound {
    estimates: Vec<f64>,
}

impl ExpertRound {
    pub fn new(estimates: Vec<f64>) -> Result<Self> {
        if estimates.is_empty() {
            return Err(Error::Validation("a Delphi round needs at least one estimate".into()));
        }
        for &e in &estimates {
            require_positive("expert estimate", e)?;
        }
        Ok(Self { estimates })
    }

    pub fn estimates(&self) -> &[f64] {
        &self.estimates
    }

    pub fn least(&self) -> f64 {
        self.estimates.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn highest(&self) -> f64 {
        self.estimates.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }

    /// Mean of every estimate, extremes included.
    pub fn avg(&self) -> f64 {
        self.estimates.iter().sum::<f64>() / self.estimates.len() as f64
    }
}

pub fn delphi_estimate(round: &ExpertRound) -> EffortPm {
    let (lo, hi) = (round.least(), round.highest());
    // Clamp guards the convex-combination bound against summation rounding.
    let value = ((lo + 4.0 * round.avg() + hi) / 6.0).clamp(lo, hi);
    EffortPm::new(value).expect("positive estimates")
}

#[derive(Debug, Deserialize)]
struct RoundRow {
    round: u32,
    expert: String,
    estimate_pm: f64,
}

/// Reads rounds from CSV with header `round,expert,estimate_pm`, one row per
/// expert per round. Rounds are returned in ascending round number.
pub fn load_rounds<R: Read>(source: R) -> Result<Vec<(u32, ExpertRound)>> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(source);
    let mut grouped: BTreeMap<u32, Vec<f64>> = BTreeMap::new();
    let mut errors = Vec::new();
    for (i, row) in reader.deserialize::<RoundRow>().enumerate() {
        let line = i + 2;
        match row {
            Ok(r) if r.estimate_pm.is_finite() && r.estimate_pm > 0.0 => {
                grouped.entry(r.round).or_default().push(r.estimate_pm)
            }
            Ok(r) => errors.push(RowError {
                line,
                message: format!("expert {} estimate must be > 0, got {}", r.expert, r.estimate_pm),
            }),
            Err(e) => errors.push(RowError { line, message: e.to_string() }),
        }
    }
    if !errors.is_empty() {
        return Err(Error::Rows(errors));
    }
    if grouped.is_empty() {
        return Err(Error::Validation("no Delphi estimates found".into()));
    }
    grouped
        .into_iter()
        .map(|(n, est)| Ok((n, ExpertRound::new(est)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn round(v: &[f64]) -> ExpertRound {
        ExpertRound::new(v.to_vec()).unwrap()
    }

    #[test]
    fn equal_estimates() {
        assert_eq!(delphi_estimate(&round(&[9.5, 9.5, 9.5])).value(), 9.5);
    }

    #[test]
    fn least_avg_highest_substitution() {
        // least 4, highest 14, mean 6.
        let r = round(&[4.0, 4.0, 4.0, 4.0, 14.0, 6.0]);
        assert_eq!((r.least(), r.avg(), r.highest()), (4.0, 6.0, 14.0));
        assert!((delphi_estimate(&r).value() - 7.0).abs() < 1e-12);
    }

    #[test]
    fn three_experts() {
        assert!((delphi_estimate(&round(&[2.0, 4.0, 6.0])).value() - 4.0).abs() < 1e-12);
    }

    #[test]
    fn five_experts() {
        let r = round(&[4.0, 5.0, 6.0, 7.0, 14.0]);
        assert!((r.avg() - 7.2).abs() < 1e-12);
        assert!((delphi_estimate(&r).value() - 7.8).abs() < 1e-12);
    }

    #[test]
    fn empty_round_rejected() {
        assert!(matches!(ExpertRound::new(vec![]), Err(Error::Validation(_))));
        assert!(ExpertRound::new(vec![1.0, -2.0]).is_err());
    }

    #[test]
    fn csv_rounds() {
        let text = "round,expert,estimate_pm\n1,ann,10\n1,bob,20\n2,ann,14\n2,bob,16\n1,cy,12\n";
        let rounds = load_rounds(text.as_bytes()).unwrap();
        assert_eq!(rounds.len(), 2);
        assert_eq!(rounds[0].1.estimates(), &[10.0, 20.0, 12.0]);
        assert_eq!(rounds[1].0, 2);
    }

    #[test]
    fn csv_bad_rows_listed() {
        let text = "round,expert,estimate_pm\n1,ann,0\n1,bob,abc\n";
        match load_rounds(text.as_bytes()) {
            Err(Error::Rows(rows)) => {
                assert_eq!(rows.iter().map(|r| r.line).collect::<Vec<_>>(), vec![2, 3]);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn estimates() -> impl Strategy<Value = Vec<f64>> {
            proptest::collection::vec(0.01f64..1e4, 1..20)
        }

        proptest! {
            #[test]
            fn convex(v in estimates()) {
                let r = round(&v);
                let e = delphi_estimate(&r).value();
                prop_assert!(r.least() <= e && e <= r.highest());
            }

            #[test]
            fn permutation_invariant(v in estimates(), seed in any::<u64>()) {
                let mut shuffled = v.clone();
                let n = shuffled.len();
                let mut s = seed;
                for i in (1..n).rev() {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    shuffled.swap(i, (s >> 33) as usize % (i + 1));
                }
                let a = delphi_estimate(&round(&v)).value();
                let b = delphi_estimate(&round(&shuffled)).value();
                prop_assert!((a - b).abs() <= 1e-9 * a);
            }

            #[test]
            fn scale_equivariant(v in estimates(), k in 0.01f64..100.0) {
                let scaled: Vec<f64> = v.iter().map(|x| x * k).collect();
                let a = delphi_estimate(&round(&v)).value();
                let b = delphi_estimate(&round(&scaled)).value();
                prop_assert!((b - k * a).abs() <= 1e-9 * k * a);
            }
        }
    }
}
