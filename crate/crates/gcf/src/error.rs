//! Error taxonomy shared by the library and the command-line front-end.
//!
//! Errors fall into two broad groups that the CLI maps onto distinct exit
//! codes: data/configuration validation problems (bad labels, mismatched
//! lengths, out-of-range options) and numerical failures (singular systems,
//! degenerate training folds, a Monte Carlo run with no surviving
//! replications).

use thiserror::Error;

/// All failure modes surfaced by this crate.
#[derive(Debug, Error)]
pub enum GcfError {
    /// Covariates, treatments, and outcomes must have one row per unit.
    #[error("length mismatch: covariates have {covariates} rows, treatments {treatments}, outcomes {outcomes}")]
    LengthMismatch {
        covariates: usize,
        treatments: usize,
        outcomes: usize,
    },

    /// A covariate or outcome was NaN or infinite.
    #[error("non-finite {what} for unit {unit}")]
    NonFinite { what: &'static str, unit: usize },

    /// A treatment label fell outside `1..=n_arms`.
    #[error("treatment label {label} for unit {unit} outside 1..={n_arms}")]
    LabelOutOfRange {
        label: usize,
        unit: usize,
        n_arms: usize,
    },

    /// A covariate row had the wrong number of columns.
    #[error("covariate row {unit} has {got} columns, expected {expected}")]
    RaggedRow {
        unit: usize,
        got: usize,
        expected: usize,
    },

    /// Pairwise contrasts need at least two arms.
    #[error("at least two arms required, got {0}")]
    TooFewArms(usize),

    /// An arm pair must satisfy `1 <= j < j'`.
    #[error("invalid pair ({j}, {j_prime}): arms must satisfy 1 <= j < j'")]
    InvalidPair { j: usize, j_prime: usize },

    /// A dataset with zero units cannot be validated.
    #[error("dataset is empty")]
    EmptyDataset,

    /// Estimation requires every arm to contain at least one unit.
    #[error("arm {arm} has no units")]
    EmptyArm { arm: usize },

    /// Variance estimation needs at least two observations.
    #[error("at least two observations required, got {0}")]
    TooFewObservations(usize),

    /// A cross-fitting training complement was missing an arm entirely.
    #[error("empty arm in training fold: fold {fold} complement has no units in arm {arm}")]
    EmptyArmInFold { fold: usize, arm: usize },

    /// Least squares on a rank-deficient design with no ridge penalty.
    #[error("singular system; set ridge > 0")]
    SingularSystem,

    /// Propensity clipping threshold outside its valid open interval.
    #[error("xi must lie in (0, 0.5), got {0}")]
    InvalidXi(f64),

    /// Clipping cannot produce a probability vector when `J * xi > 1`.
    #[error("xi = {xi} too large for {n_arms} arms: no simplex vector has every entry >= xi")]
    InfeasibleXi { xi: f64, n_arms: usize },

    /// Confidence level complement outside (0, 1).
    #[error("alpha must lie in (0, 1), got {0}")]
    InvalidAlpha(f64),

    /// Fold count outside `2..=n` (or an arm too small for stratification).
    #[error("invalid fold count K={k} for n={n}: {reason}")]
    InvalidFoldCount { k: usize, n: usize, reason: String },

    /// Unit index outside `0..n`.
    #[error("unit index {index} out of range for n={n}")]
    IndexOutOfRange { index: usize, n: usize },

    /// A supplied propensity row did not lie on the probability simplex.
    #[error("propensity row {unit} is not a probability vector (sum {sum})")]
    SimplexViolation { unit: usize, sum: f64 },

    /// A simulation design failed its structural invariants.
    #[error("invalid simulation design: {0}")]
    InvalidDesign(String),

    /// Every Monte Carlo replication failed; no metrics can be reported.
    #[error("all {0} replications failed")]
    AllReplicationsFailed(usize),

    /// Problems reading or interpreting an input CSV.
    #[error("csv input: {0}")]
    CsvInput(String),

    /// Problems in a config or design file.
    #[error("config: {0}")]
    Config(String),

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, GcfError>;

impl GcfError {
    /// True for errors that indicate numerical failure rather than invalid
    /// input; the CLI reports these with a distinct exit code.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            GcfError::SingularSystem
                | GcfError::EmptyArmInFold { .. }
                | GcfError::AllReplicationsFailed(_)
        )
    }
}
