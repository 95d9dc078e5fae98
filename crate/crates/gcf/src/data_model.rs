//! Dataset representation, validation, and overlap diagnostics.
//!
//! Every estimator in this crate consumes a [`Dataset`]: a covariate matrix,
//! one integer treatment label per unit, and one real outcome per unit.
//! Treatment labels are stored internally as `1..=J` regardless of how the
//! data arrived; [`validate_dataset`] performs the re-encoding and keeps the
//! original spellings so reports can show them.
//!
//! Identification requires overlap: every arm must have conditional
//! probability bounded away from 0 and 1. [`positivity_diagnostic`] checks
//! fitted propensities against that requirement and flags units whose
//! estimated probabilities escape the `[xi, 1 - xi]` band.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::error::{GcfError, Result};

/// An observational dataset with `J >= 2` treatment arms.
///
/// Immutable after construction; all operations in this crate treat it as
/// shared read-only state, so it can be handed to parallel workers freely.
#[derive(Debug, Clone)]
pub struct Dataset {
    /// Covariate matrix, one row per unit, one column per covariate.
    pub covariates: DMatrix<f64>,
    /// Treatment labels, each in `1..=n_arms`.
    pub treatments: Vec<usize>,
    /// Observed outcomes.
    pub outcomes: Vec<f64>,
    /// Number of treatment arms `J`.
    pub n_arms: usize,
    /// Original label for each arm: `arm_labels[j - 1]` decodes arm `j`.
    pub arm_labels: Vec<String>,
}

impl Dataset {
    /// Builds and validates a dataset from already-encoded treatment labels.
    ///
    /// Checks lengths, label range, and finiteness. Empty arms are allowed
    /// here (diagnostics must still run on degenerate data); estimators
    /// reject them at the point of use.
    pub fn new(
        covariates: DMatrix<f64>,
        treatments: Vec<usize>,
        outcomes: Vec<f64>,
        n_arms: usize,
    ) -> Result<Self> {
        if n_arms < 2 {
            return Err(GcfError::TooFewArms(n_arms));
        }
        let n = outcomes.len();
        if covariates.nrows() != n || treatments.len() != n {
            return Err(GcfError::LengthMismatch {
                covariates: covariates.nrows(),
                treatments: treatments.len(),
                outcomes: n,
            });
        }
        if n == 0 {
            return Err(GcfError::EmptyDataset);
        }
        for (i, &z) in treatments.iter().enumerate() {
            if z < 1 || z > n_arms {
                return Err(GcfError::LabelOutOfRange {
                    label: z,
                    unit: i,
                    n_arms,
                });
            }
        }
        for (i, &y) in outcomes.iter().enumerate() {
            if !y.is_finite() {
                return Err(GcfError::NonFinite {
                    what: "outcome",
                    unit: i,
                });
            }
        }
        for i in 0..n {
            if covariates.row(i).iter().any(|v| !v.is_finite()) {
                return Err(GcfError::NonFinite {
                    what: "covariate",
                    unit: i,
                });
            }
        }
        let arm_labels = (1..=n_arms).map(|j| j.to_string()).collect();
        Ok(Dataset {
            covariates,
            treatments,
            outcomes,
            n_arms,
            arm_labels,
        })
    }

    /// Number of units.
    pub fn n(&self) -> usize {
        self.outcomes.len()
    }

    /// Number of covariates.
    pub fn p(&self) -> usize {
        self.covariates.ncols()
    }
}

/// A canonical arm pair `(j, j')` with `j < j'`.
///
/// Effects for the reversed pair are recovered by antisymmetry, so only
/// canonical pairs are ever enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PairIndex {
    /// First arm of the contrast.
    pub j: usize,
    /// Second arm of the contrast; always greater than `j`.
    pub j_prime: usize,
}

impl PairIndex {
    /// Builds a pair, requiring `1 <= j < j'`.
    pub fn new(j: usize, j_prime: usize) -> Result<Self> {
        if j < 1 || j_prime <= j {
            return Err(GcfError::InvalidPair { j, j_prime });
        }
        Ok(PairIndex { j, j_prime })
    }

    /// All `J * (J - 1) / 2` canonical pairs in lexicographic order.
    pub fn all(n_arms: usize) -> Vec<PairIndex> {
        let mut pairs = Vec::with_capacity(n_arms * (n_arms.saturating_sub(1)) / 2);
        for j in 1..=n_arms {
            for j_prime in (j + 1)..=n_arms {
                pairs.push(PairIndex { j, j_prime });
            }
        }
        pairs
    }

    /// Position of this pair in [`PairIndex::all`] order.
    pub fn flat_index(&self, n_arms: usize) -> usize {
        let j = self.j;
        (j - 1) * n_arms - j * (j - 1) / 2 + (self.j_prime - j - 1)
    }
}

impl std::fmt::Display for PairIndex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.j, self.j_prime)
    }
}

/// Per-arm unit counts and outcome means.
#[derive(Debug, Clone, Serialize)]
pub struct ArmSummary {
    /// `counts[j - 1]` is the number of units in arm `j`; sums to `n`.
    pub counts: Vec<usize>,
    /// `means[j - 1]` is the mean outcome in arm `j`, `None` when empty.
    pub means: Vec<Option<f64>>,
}

/// Counts units and averages outcomes per arm.
///
/// Empty arms yield `None` means rather than an error so the summary can
/// describe degenerate data.
pub fn arm_counts(d: &Dataset) -> ArmSummary {
    let mut counts = vec![0usize; d.n_arms];
    let mut sums = vec![0.0f64; d.n_arms];
    for (&z, &y) in d.treatments.iter().zip(&d.outcomes) {
        counts[z - 1] += 1;
        sums[z - 1] += y;
    }
    let means = counts
        .iter()
        .zip(&sums)
        .map(|(&c, &s)| if c > 0 { Some(s / c as f64) } else { None })
        .collect();
    ArmSummary { counts, means }
}

/// Summary of how close fitted propensities come to the overlap boundary.
#[derive(Debug, Clone, Serialize)]
pub struct PositivityReport {
    /// Threshold the propensities were checked against.
    pub xi: f64,
    /// Smallest fitted propensity per arm.
    pub per_arm_min: Vec<f64>,
    /// Largest fitted propensity per arm.
    pub per_arm_max: Vec<f64>,
    /// Units with any propensity below `xi` or above `1 - xi`.
    pub n_violations: usize,
    /// True when any unit violates the band.
    pub overlap_concern: bool,
}

/// Checks fitted propensities against the overlap band `[xi, 1 - xi]`.
///
/// `e_hat` has one row per unit and one column per arm. Run this on raw
/// fitted values: after clipping, every entry sits inside the band by
/// construction and the report is vacuous.
pub fn positivity_diagnostic(e_hat: &DMatrix<f64>, xi: f64) -> Result<PositivityReport> {
    if !(xi > 0.0 && xi < 0.5) {
        return Err(GcfError::InvalidXi(xi));
    }
    let n_arms = e_hat.ncols();
    let mut per_arm_min = vec![f64::NAN; n_arms];
    let mut per_arm_max = vec![f64::NAN; n_arms];
    for j in 0..n_arms {
        let col = e_hat.column(j);
        per_arm_min[j] = col.iter().copied().fold(f64::INFINITY, f64::min);
        per_arm_max[j] = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    }
    let n_violations = (0..e_hat.nrows())
        .filter(|&i| e_hat.row(i).iter().any(|&e| e < xi || e > 1.0 - xi))
        .count();
    Ok(PositivityReport {
        xi,
        per_arm_min,
        per_arm_max,
        n_violations,
        overlap_concern: n_violations > 0,
    })
}

/// Rows as read from an external table, before validation.
#[derive(Debug, Clone, Default)]
pub struct RawRecords {
    /// Covariate rows; all must have the same length.
    pub covariates: Vec<Vec<f64>>,
    /// Treatment labels as they appeared in the source.
    pub treatments: Vec<String>,
    /// Outcomes.
    pub outcomes: Vec<f64>,
}

/// Validates raw records and re-encodes treatment labels to `1..=J`.
///
/// When `n_arms` is given, labels must already be the canonical integers
/// `1..=n_arms` (arms may be empty). When it is `None`, the distinct labels
/// are sorted (numerically when every label parses as a number, otherwise
/// lexicographically) and assigned codes `1..=J` in that order; the returned
/// dataset's `arm_labels` retains the original spellings, so the re-encoding
/// is a bijection.
pub fn validate_dataset(raw: &RawRecords, n_arms: Option<usize>) -> Result<Dataset> {
    let n = raw.outcomes.len();
    if raw.covariates.len() != n || raw.treatments.len() != n {
        return Err(GcfError::LengthMismatch {
            covariates: raw.covariates.len(),
            treatments: raw.treatments.len(),
            outcomes: n,
        });
    }
    if n == 0 {
        return Err(GcfError::EmptyDataset);
    }
    let p = raw.covariates[0].len();
    for (i, row) in raw.covariates.iter().enumerate() {
        if row.len() != p {
            return Err(GcfError::RaggedRow {
                unit: i,
                got: row.len(),
                expected: p,
            });
        }
    }
    let covariates = DMatrix::from_row_iterator(n, p, raw.covariates.iter().flatten().copied());

    // Canonical integer labels: every spelling must round-trip exactly, so
    // that decoding through the label dictionary reproduces the input.
    let canonical: Option<Vec<usize>> = raw
        .treatments
        .iter()
        .map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&v| v >= 1 && v.to_string() == *s)
        })
        .collect();

    let (codes, labels, j) = match (n_arms, canonical) {
        (Some(j), Some(codes)) => {
            if j < 2 {
                return Err(GcfError::TooFewArms(j));
            }
            for (i, &z) in codes.iter().enumerate() {
                if z > j {
                    return Err(GcfError::LabelOutOfRange {
                        label: z,
                        unit: i,
                        n_arms: j,
                    });
                }
            }
            let labels = (1..=j).map(|a| a.to_string()).collect::<Vec<_>>();
            (codes, labels, j)
        }
        (declared, _) => {
            let mut labels: Vec<String> = raw.treatments.clone();
            labels.sort_by(|a, b| match (a.parse::<f64>(), b.parse::<f64>()) {
                (Ok(x), Ok(y)) => x.partial_cmp(&y).unwrap_or(std::cmp::Ordering::Equal),
                _ => a.cmp(b),
            });
            labels.dedup();
            let j = labels.len();
            if let Some(declared) = declared {
                if declared != j {
                    return Err(GcfError::Config(format!(
                        "found {j} distinct treatment labels, expected {declared}"
                    )));
                }
            }
            if j < 2 {
                return Err(GcfError::TooFewArms(j));
            }
            let codes = raw
                .treatments
                .iter()
                .map(|s| labels.iter().position(|l| l == s).unwrap() + 1)
                .collect();
            (codes, labels, j)
        }
    };

    let mut d = Dataset::new(covariates, codes, raw.outcomes.clone(), j)?;
    d.arm_labels = labels;
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn raw(labels: &[&str], outcomes: &[f64]) -> RawRecords {
        RawRecords {
            covariates: outcomes.iter().map(|_| vec![0.0]).collect(),
            treatments: labels.iter().map(|s| s.to_string()).collect(),
            outcomes: outcomes.to_vec(),
        }
    }

    fn toy(treatments: &[usize], outcomes: &[f64], n_arms: usize) -> Dataset {
        let n = outcomes.len();
        Dataset::new(
            DMatrix::zeros(n, 1),
            treatments.to_vec(),
            outcomes.to_vec(),
            n_arms,
        )
        .unwrap()
    }

    #[test]
    fn three_rows_two_arms() {
        let d = validate_dataset(&raw(&["1", "2", "2"], &[0.0, 0.0, 0.0]), Some(2)).unwrap();
        assert_eq!(d.n(), 3);
        assert_eq!(arm_counts(&d).counts, vec![1, 2]);
    }

    #[test]
    fn nan_outcome_rejected() {
        let err = validate_dataset(&raw(&["1", "2"], &[0.0, f64::NAN]), Some(2)).unwrap_err();
        assert!(err.to_string().contains("non-finite outcome"));
    }

    #[test]
    fn non_finite_covariate_rejected() {
        let mut r = raw(&["1", "2"], &[0.0, 1.0]);
        r.covariates[1][0] = f64::INFINITY;
        let err = validate_dataset(&r, Some(2)).unwrap_err();
        assert!(err.to_string().contains("non-finite covariate"));
    }

    #[test]
    fn single_arm_rejected() {
        let err = validate_dataset(&raw(&["1", "1"], &[0.0, 0.0]), Some(1)).unwrap_err();
        assert!(err.to_string().contains("at least two arms"));
    }

    #[test]
    fn label_out_of_range_rejected() {
        let err = validate_dataset(&raw(&["1", "3"], &[0.0, 0.0]), Some(2)).unwrap_err();
        assert!(matches!(err, GcfError::LabelOutOfRange { label: 3, .. }));
    }

    #[test]
    fn length_mismatch_rejected() {
        let mut r = raw(&["1", "2"], &[0.0, 0.0]);
        r.outcomes.push(1.0);
        assert!(matches!(
            validate_dataset(&r, Some(2)),
            Err(GcfError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn ragged_row_rejected() {
        let mut r = raw(&["1", "2"], &[0.0, 0.0]);
        r.covariates[1] = vec![0.0, 1.0];
        assert!(matches!(
            validate_dataset(&r, Some(2)),
            Err(GcfError::RaggedRow { unit: 1, .. })
        ));
    }

    #[test]
    fn string_labels_reencoded_in_sorted_order() {
        let d =
            validate_dataset(&raw(&["drug", "control", "drug"], &[1.0, 2.0, 3.0]), None).unwrap();
        assert_eq!(d.arm_labels, vec!["control", "drug"]);
        assert_eq!(d.treatments, vec![2, 1, 2]);
    }

    #[test]
    fn numeric_string_labels_sort_numerically() {
        let d = validate_dataset(&raw(&["10", "2", "10"], &[0.0; 3]), None).unwrap();
        assert_eq!(d.arm_labels, vec!["2", "10"]);
        assert_eq!(d.treatments, vec![2, 1, 2]);
    }

    #[test]
    fn arm_counts_and_means() {
        let s = arm_counts(&toy(&[1, 1, 2], &[1.0, 3.0, 5.0], 2));
        assert_eq!(s.counts, vec![2, 1]);
        assert_eq!(s.means, vec![Some(2.0), Some(5.0)]);
    }

    #[test]
    fn arm_counts_with_empty_arms() {
        let s = arm_counts(&toy(&[1, 1, 1], &[1.0, 2.0, 3.0], 3));
        assert_eq!(s.counts, vec![3, 0, 0]);
        assert_eq!(s.means, vec![Some(2.0), None, None]);
    }

    #[test]
    fn arm_counts_zero_outcomes() {
        let s = arm_counts(&toy(&[1, 2, 3], &[0.0, 0.0, 0.0], 3));
        assert_eq!(s.means, vec![Some(0.0), Some(0.0), Some(0.0)]);
    }

    #[test]
    fn uniform_propensities_have_no_violations() {
        let e = DMatrix::from_element(5, 3, 1.0 / 3.0);
        let r = positivity_diagnostic(&e, 0.05).unwrap();
        assert_eq!(r.n_violations, 0);
        assert!(!r.overlap_concern);
    }

    #[test]
    fn small_propensity_flagged() {
        let mut e = DMatrix::from_element(4, 3, 1.0 / 3.0);
        e[(2, 0)] = 0.0001;
        e[(2, 1)] = 0.9999 / 2.0;
        e[(2, 2)] = 0.9999 / 2.0;
        let r = positivity_diagnostic(&e, 0.001).unwrap();
        assert_eq!(r.n_violations, 1);
        assert!(r.overlap_concern);
        assert_eq!(r.per_arm_min[0], 0.0001);
    }

    #[test]
    fn xi_outside_range_rejected() {
        let e = DMatrix::from_element(2, 2, 0.5);
        let err = positivity_diagnostic(&e, 0.6).unwrap_err();
        assert!(err.to_string().contains("xi must lie in (0, 0.5)"));
    }

    #[test]
    fn pair_enumeration_and_flat_index() {
        let pairs = PairIndex::all(4);
        assert_eq!(pairs.len(), 6);
        assert_eq!(pairs[0], PairIndex::new(1, 2).unwrap());
        assert_eq!(pairs[5], PairIndex::new(3, 4).unwrap());
        for (k, pair) in pairs.iter().enumerate() {
            assert_eq!(pair.flat_index(4), k);
        }
        assert!(PairIndex::new(2, 2).is_err());
        assert!(PairIndex::new(0, 1).is_err());
    }

    proptest! {
        #[test]
        fn counts_sum_to_n(
            labels in proptest::collection::vec(1usize..=4, 1..50),
        ) {
            let outcomes = vec![0.5; labels.len()];
            let d = toy(&labels, &outcomes, 4);
            let s = arm_counts(&d);
            prop_assert_eq!(s.counts.iter().sum::<usize>(), d.n());
        }

        #[test]
        fn label_reencoding_is_bijective(
            picks in proptest::collection::vec(0usize..3, 2..40),
        ) {
            // Ensure at least two distinct labels appear.
            let names = ["a", "b", "10"];
            let mut picks = picks;
            picks[0] = 0;
            let last = picks.len() - 1;
            picks[last] = 1;
            let labels: Vec<&str> = picks.iter().map(|&k| names[k]).collect();
            let outcomes = vec![0.0; labels.len()];
            let d = validate_dataset(&raw(&labels, &outcomes), None).unwrap();
            for (i, &code) in d.treatments.iter().enumerate() {
                prop_assert_eq!(d.arm_labels[code - 1].as_str(), labels[i]);
            }
        }
    }
}
