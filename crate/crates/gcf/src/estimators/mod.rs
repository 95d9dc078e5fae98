//! Pairwise treatment-effect estimators and their confidence intervals.
//!
//! All three estimators report, for every arm pair `(j, j')`, an estimate of
//! `E[Y(j) - Y(j')]`:
//!
//! * [`dif_estimate`] contrasts raw arm means. It is unbiased only under
//!   randomization and serves as the naive baseline.
//! * [`gaipw_estimate`] averages the augmented inverse propensity weighted
//!   pseudo-outcome built from full-sample nuisance fits.
//! * [`gcf_estimate`] averages the same pseudo-outcome built from
//!   cross-fitted (out-of-fold) nuisance predictions.
//!
//! The pseudo-outcome for unit `i` and pair `(j, j')` is
//!
//! ```text
//! S_i = mu_j(X_i) - mu_j'(X_i)
//!     + 1{Z_i = j}  (Y_i - mu_j(X_i))  / e_j(X_i)
//!     - 1{Z_i = j'} (Y_i - mu_j'(X_i)) / e_j'(X_i)
//! ```
//!
//! Its empirical variance estimates the asymptotic variance, and each CI is
//! a Wald interval with a Bonferroni correction across all
//! `C(J, 2)` pairs, so the whole family covers jointly at level
//! `1 - alpha`. [`oracle_gaipw`] plugs in true nuisance values instead of
//! fits; it is infeasible outside simulations and exists as the reference
//! the other estimators are tested against.

pub mod normal;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::crossfit::{FoldPlan, NuisancePredictions};
use crate::data_model::{arm_counts, Dataset, PairIndex};
use crate::error::{GcfError, Result};
use crate::nuisance::{OutcomeModel, PropensityModel};
use normal::inverse_normal_cdf;

/// Which estimator produced an [`AteEstimate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Method {
    /// Difference in arm means.
    #[serde(alias = "dif")]
    Dif,
    /// Augmented inverse propensity weighting, full-sample fits.
    #[serde(alias = "gaipw")]
    Gaipw,
    /// Cross-fitted doubly robust estimator.
    #[serde(alias = "gcf")]
    Gcf,
    /// True-nuisance reference estimator.
    #[serde(alias = "oracle")]
    Oracle,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Dif => "DIF",
            Method::Gaipw => "GAIPW",
            Method::Gcf => "GCF",
            Method::Oracle => "ORACLE",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Method {
    type Err = GcfError;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dif" => Ok(Method::Dif),
            "gaipw" => Ok(Method::Gaipw),
            "gcf" => Ok(Method::Gcf),
            "oracle" => Ok(Method::Oracle),
            other => Err(GcfError::Config(format!(
                "unknown estimator '{other}'; expected dif, gaipw, gcf, or oracle"
            ))),
        }
    }
}

/// Denominator used for the second arm's residual term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DenominatorStyle {
    /// Divide the `j'` residual by `e_j'(X)`. This is the form that stays
    /// consistent for any number of arms; always the default.
    ArmSpecific,
    /// Divide the `j'` residual by `1 - e_j'(X)`, the shape binary-treatment
    /// AIPW formulas are often written in. Provided for audits; it does not
    /// estimate the pairwise effect when `J > 2`.
    BinaryComplement,
}

/// Pairwise effect estimates with variances and simultaneous CIs.
#[derive(Debug, Clone, Serialize)]
pub struct AteEstimate {
    /// Estimator that produced this result.
    pub method: Method,
    /// Number of arms `J`.
    pub n_arms: usize,
    /// Number of units the estimate used.
    pub n_used: usize,
    /// Simultaneous confidence level complement.
    pub alpha: f64,
    /// `J x J` matrix with entry `(j, j')` equal to the estimated effect of
    /// arm `j` versus arm `j'`; antisymmetric with a zero diagonal.
    #[serde(serialize_with = "crate::serde_util::matrix_rows::serialize")]
    pub estimates: DMatrix<f64>,
    /// Asymptotic-scale variance per canonical pair, in
    /// [`PairIndex::all`] order.
    pub variance: Vec<f64>,
    /// Lower simultaneous CI bounds per canonical pair.
    pub ci_lower: Vec<f64>,
    /// Upper simultaneous CI bounds per canonical pair.
    pub ci_upper: Vec<f64>,
}

/// One canonical pair's slice of an [`AteEstimate`].
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PairSummary {
    /// The arm pair.
    pub pair: PairIndex,
    /// Point estimate for arm `j` versus arm `j'`.
    pub estimate: f64,
    /// Asymptotic-scale variance estimate.
    pub variance: f64,
    /// Standard error, `sqrt(variance / n)`.
    pub std_error: f64,
    /// Lower simultaneous CI bound.
    pub ci_lower: f64,
    /// Upper simultaneous CI bound.
    pub ci_upper: f64,
}

impl AteEstimate {
    /// The estimate for any ordered pair, using antisymmetry.
    pub fn estimate(&self, j: usize, j_prime: usize) -> f64 {
        self.estimates[(j - 1, j_prime - 1)]
    }

    /// Summary for one canonical pair.
    pub fn pair(&self, pair: PairIndex) -> PairSummary {
        let k = pair.flat_index(self.n_arms);
        PairSummary {
            pair,
            estimate: self.estimates[(pair.j - 1, pair.j_prime - 1)],
            variance: self.variance[k],
            std_error: (self.variance[k] / self.n_used as f64).sqrt(),
            ci_lower: self.ci_lower[k],
            ci_upper: self.ci_upper[k],
        }
    }

    /// Summaries for all canonical pairs in order.
    pub fn pairs(&self) -> Vec<PairSummary> {
        PairIndex::all(self.n_arms)
            .into_iter()
            .map(|pair| self.pair(pair))
            .collect()
    }
}

/// Empirical variance of the pseudo-outcome around the point estimate:
/// the centered sum of squares divided by `n - 1`.
pub fn variance_estimate(s: &[f64], tau_hat: f64) -> Result<f64> {
    if s.len() < 2 {
        return Err(GcfError::TooFewObservations(s.len()));
    }
    let ss: f64 = s.iter().map(|&v| (v - tau_hat).powi(2)).sum();
    Ok(ss / (s.len() - 1) as f64)
}

/// Wald interval with Bonferroni correction across all `C(J, 2)` pairs.
///
/// The half-width is `q * sqrt(v_hat / n)` with
/// `q = inverse_normal_cdf(1 - alpha / (2 * C(J, 2)))`, so the family of
/// all pairwise intervals covers jointly at level `1 - alpha`.
pub fn simultaneous_ci(
    tau_hat: f64,
    v_hat: f64,
    n: usize,
    n_arms: usize,
    alpha: f64,
) -> Result<(f64, f64)> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(GcfError::InvalidAlpha(alpha));
    }
    if n_arms < 2 {
        return Err(GcfError::TooFewArms(n_arms));
    }
    if v_hat < 0.0 {
        return Err(GcfError::Config(format!(
            "variance must be nonnegative, got {v_hat}"
        )));
    }
    let pairs = (n_arms * (n_arms - 1) / 2) as f64;
    let q = inverse_normal_cdf(1.0 - alpha / (2.0 * pairs));
    let half = q * (v_hat / n as f64).sqrt();
    Ok((tau_hat - half, tau_hat + half))
}

/// Difference in arm means with a rescaled two-sample variance.
///
/// The variance reported for each pair is `n * (s2_j / n_j + s2_j' / n_j')`
/// so it lives on the same asymptotic scale as the pseudo-outcome variance
/// and the shared CI routine applies unchanged. Arms with a single unit
/// yield NaN variances (no within-arm spread is observable).
pub fn dif_estimate(d: &Dataset, alpha: f64) -> Result<AteEstimate> {
    let summary = arm_counts(d);
    if let Some(arm) = summary.counts.iter().position(|&c| c == 0) {
        return Err(GcfError::EmptyArm { arm: arm + 1 });
    }
    let n = d.n();
    let means: Vec<f64> = summary.means.iter().map(|m| m.unwrap()).collect();
    let mut sample_var = vec![0.0f64; d.n_arms];
    for (&z, &y) in d.treatments.iter().zip(&d.outcomes) {
        sample_var[z - 1] += (y - means[z - 1]).powi(2);
    }
    for (v, &c) in sample_var.iter_mut().zip(&summary.counts) {
        *v /= (c - 1) as f64;
    }

    let pairs = PairIndex::all(d.n_arms);
    let mut estimates = DMatrix::zeros(d.n_arms, d.n_arms);
    let mut variance = Vec::with_capacity(pairs.len());
    let mut ci_lower = Vec::with_capacity(pairs.len());
    let mut ci_upper = Vec::with_capacity(pairs.len());
    for pair in &pairs {
        let (j, j2) = (pair.j - 1, pair.j_prime - 1);
        let tau = means[j] - means[j2];
        let v = n as f64
            * (sample_var[j] / summary.counts[j] as f64
                + sample_var[j2] / summary.counts[j2] as f64);
        let (lo, hi) = simultaneous_ci(tau, v, n, d.n_arms, alpha)?;
        estimates[(j, j2)] = tau;
        estimates[(j2, j)] = -tau;
        variance.push(v);
        ci_lower.push(lo);
        ci_upper.push(hi);
    }
    Ok(AteEstimate {
        method: Method::Dif,
        n_arms: d.n_arms,
        n_used: n,
        alpha,
        estimates,
        variance,
        ci_lower,
        ci_upper,
    })
}

fn check_prediction_shapes(d: &Dataset, mu: &DMatrix<f64>, e: &DMatrix<f64>) -> Result<()> {
    let (n, j) = (d.n(), d.n_arms);
    if mu.nrows() != n || mu.ncols() != j || e.nrows() != n || e.ncols() != j {
        return Err(GcfError::Config(format!(
            "prediction shapes ({}x{}, {}x{}) do not match dataset ({n} units, {j} arms)",
            mu.nrows(),
            mu.ncols(),
            e.nrows(),
            e.ncols()
        )));
    }
    Ok(())
}

/// Per-arm pseudo-outcome columns: `G[(i, j-1)]` is arm `j`'s contribution
/// `mu_j(X_i) + 1{Z_i = j} (Y_i - mu_j(X_i)) / e_j(X_i)`. The pair
/// pseudo-outcome is the difference of two columns, so all `C(J, 2)` pairs
/// share one `O(nJ)` pass.
fn arm_columns(
    d: &Dataset,
    mu: &DMatrix<f64>,
    e: &DMatrix<f64>,
    complement_denominator: bool,
) -> DMatrix<f64> {
    let (n, j) = (d.n(), d.n_arms);
    let mut g = DMatrix::zeros(n, j);
    for i in 0..n {
        let z = d.treatments[i];
        for a in 0..j {
            let mut value = mu[(i, a)];
            if z == a + 1 {
                let denom = if complement_denominator {
                    1.0 - e[(i, a)]
                } else {
                    e[(i, a)]
                };
                assert!(
                    denom > 0.0,
                    "zero propensity denominator for unit {i}, arm {}; clip propensities first",
                    a + 1
                );
                value += (d.outcomes[i] - mu[(i, a)]) / denom;
            }
            g[(i, a)] = value;
        }
    }
    g
}

/// Pseudo-outcome vector for one pair from out-of-fold predictions.
pub fn pseudo_outcome(d: &Dataset, np: &NuisancePredictions, pair: PairIndex) -> Result<Vec<f64>> {
    pseudo_outcome_with(d, np, pair, DenominatorStyle::ArmSpecific)
}

/// Pseudo-outcome vector with an explicit denominator convention.
pub fn pseudo_outcome_with(
    d: &Dataset,
    np: &NuisancePredictions,
    pair: PairIndex,
    style: DenominatorStyle,
) -> Result<Vec<f64>> {
    check_prediction_shapes(d, &np.mu_hat, &np.e_hat)?;
    if pair.j_prime > d.n_arms {
        return Err(GcfError::Config(format!(
            "pair {pair} exceeds the {} arms in the dataset",
            d.n_arms
        )));
    }
    let g = arm_columns(d, &np.mu_hat, &np.e_hat, false);
    let g2 = match style {
        DenominatorStyle::ArmSpecific => None,
        DenominatorStyle::BinaryComplement => Some(arm_columns(d, &np.mu_hat, &np.e_hat, true)),
    };
    let second = g2.as_ref().unwrap_or(&g);
    Ok((0..d.n())
        .map(|i| g[(i, pair.j - 1)] - second[(i, pair.j_prime - 1)])
        .collect())
}

/// Shared estimator core: averages pseudo-outcomes built from the given
/// prediction matrices for every canonical pair.
///
/// `plan` is only consulted for the internal consistency check that the
/// fold-size-weighted fold means reproduce the pooled mean.
pub fn aipw_from_predictions(
    d: &Dataset,
    mu_hat: &DMatrix<f64>,
    e_hat: &DMatrix<f64>,
    alpha: f64,
    style: DenominatorStyle,
    method: Method,
    plan: Option<&FoldPlan>,
) -> Result<AteEstimate> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(GcfError::InvalidAlpha(alpha));
    }
    check_prediction_shapes(d, mu_hat, e_hat)?;
    let n = d.n();
    if n < 2 {
        return Err(GcfError::TooFewObservations(n));
    }
    let summary = arm_counts(d);
    if let Some(arm) = summary.counts.iter().position(|&c| c == 0) {
        return Err(GcfError::EmptyArm { arm: arm + 1 });
    }

    let g = arm_columns(d, mu_hat, e_hat, false);
    let g2 = match style {
        DenominatorStyle::ArmSpecific => None,
        DenominatorStyle::BinaryComplement => Some(arm_columns(d, mu_hat, e_hat, true)),
    };
    let second = g2.as_ref().unwrap_or(&g);

    let pairs = PairIndex::all(d.n_arms);
    let mut estimates = DMatrix::zeros(d.n_arms, d.n_arms);
    let mut variance = Vec::with_capacity(pairs.len());
    let mut ci_lower = Vec::with_capacity(pairs.len());
    let mut ci_upper = Vec::with_capacity(pairs.len());
    let mut s = vec![0.0f64; n];
    for pair in &pairs {
        let (j, j2) = (pair.j - 1, pair.j_prime - 1);
        for i in 0..n {
            s[i] = g[(i, j)] - second[(i, j2)];
        }
        let tau = s.iter().sum::<f64>() / n as f64;
        if let Some(plan) = plan {
            debug_assert!(fold_weighted_mean_matches(plan, &s, tau));
        }
        let v = variance_estimate(&s, tau)?;
        let (lo, hi) = simultaneous_ci(tau, v, n, d.n_arms, alpha)?;
        estimates[(j, j2)] = tau;
        estimates[(j2, j)] = -tau;
        variance.push(v);
        ci_lower.push(lo);
        ci_upper.push(hi);
    }
    Ok(AteEstimate {
        method,
        n_arms: d.n_arms,
        n_used: n,
        alpha,
        estimates,
        variance,
        ci_lower,
        ci_upper,
    })
}

fn fold_weighted_mean_matches(plan: &FoldPlan, s: &[f64], pooled: f64) -> bool {
    let n = s.len();
    if plan.n() != n {
        return false;
    }
    let mut sums = vec![0.0f64; plan.k];
    let mut counts = vec![0usize; plan.k];
    for (i, &v) in s.iter().enumerate() {
        sums[plan.assignment[i] - 1] += v;
        counts[plan.assignment[i] - 1] += 1;
    }
    let weighted: f64 = sums
        .iter()
        .zip(&counts)
        .filter(|&(_, &c)| c > 0)
        .map(|(&sum, &c)| (c as f64 / n as f64) * (sum / c as f64))
        .sum();
    (weighted - pooled).abs() <= 1e-12 * (1.0 + pooled.abs())
}

/// Cross-fitted doubly robust estimate from out-of-fold predictions.
///
/// The estimate for each pair is the fold-size-weighted average of per-fold
/// pseudo-outcome means, which equals the pooled mean because the weights
/// are proportional to fold sizes; both routes are computed and checked
/// against each other in debug builds.
pub fn gcf_estimate(
    d: &Dataset,
    plan: &FoldPlan,
    np: &NuisancePredictions,
    alpha: f64,
) -> Result<AteEstimate> {
    gcf_estimate_with(d, plan, np, alpha, DenominatorStyle::ArmSpecific)
}

/// [`gcf_estimate`] with an explicit denominator convention.
pub fn gcf_estimate_with(
    d: &Dataset,
    plan: &FoldPlan,
    np: &NuisancePredictions,
    alpha: f64,
    style: DenominatorStyle,
) -> Result<AteEstimate> {
    if plan.n() != d.n() {
        return Err(GcfError::Config(format!(
            "fold plan covers {} units, dataset has {}",
            plan.n(),
            d.n()
        )));
    }
    aipw_from_predictions(
        d,
        &np.mu_hat,
        &np.e_hat,
        alpha,
        style,
        Method::Gcf,
        Some(plan),
    )
}

/// Augmented IPW estimate from full-sample nuisance fits.
///
/// Fitted propensities are clipped into `[xi, 1 - xi]` before weighting.
pub fn gaipw_estimate(
    d: &Dataset,
    om: &OutcomeModel,
    pm: &PropensityModel,
    alpha: f64,
    xi: f64,
) -> Result<AteEstimate> {
    let rows: Vec<usize> = (0..d.n()).collect();
    let mu_hat = om.predict_matrix(&d.covariates, &rows);
    let mut e_hat = pm.predict_matrix(&d.covariates, &rows);
    for i in 0..e_hat.nrows() {
        let mut row: Vec<f64> = e_hat.row(i).iter().copied().collect();
        crate::nuisance::clip_in_place(&mut row, xi)?;
        for (a, v) in row.iter().enumerate() {
            e_hat[(i, a)] = *v;
        }
    }
    aipw_from_predictions(
        d,
        &mu_hat,
        &e_hat,
        alpha,
        DenominatorStyle::ArmSpecific,
        Method::Gaipw,
        None,
    )
}

/// Reference estimator with true nuisance values plugged in.
///
/// True propensities are used as supplied, never clipped; rows must lie on
/// the probability simplex.
pub fn oracle_gaipw(
    d: &Dataset,
    true_mu: &DMatrix<f64>,
    true_e: &DMatrix<f64>,
    alpha: f64,
) -> Result<AteEstimate> {
    check_prediction_shapes(d, true_mu, true_e)?;
    for i in 0..true_e.nrows() {
        let sum: f64 = true_e.row(i).iter().sum();
        if (sum - 1.0).abs() > 1e-8 || true_e.row(i).iter().any(|&v| v <= 0.0) {
            return Err(GcfError::SimplexViolation { unit: i, sum });
        }
    }
    aipw_from_predictions(
        d,
        true_mu,
        true_e,
        alpha,
        DenominatorStyle::ArmSpecific,
        Method::Oracle,
        None,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossfit::{fit_out_of_fold, make_folds};
    use crate::nuisance::{fit_outcome_model, fit_propensity_model, NuisanceSpec};
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

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

    /// The worked four-unit table used across the GCF and GAIPW hand tests.
    ///
    /// Hand evaluation of the pseudo-outcome, term by term:
    ///   unit 0: 0.5 + (2 - 1)/0.4            =  3.0
    ///   unit 1: 0.6 - (1 - 0.2)/0.5          = -1.0
    ///   unit 2: -2.0 + (-1 + 0.5)/0.25       = -4.0
    ///   unit 3: -0.5 - (3 - 2.5)/0.2         = -3.0
    /// mean = -1.25; fold means (1.0, -3.5) with weights (1/2, 1/2) agree;
    /// centered sum of squares 28.75 gives variance 28.75/3.
    fn hand_table() -> (Dataset, DMatrix<f64>, DMatrix<f64>, FoldPlan) {
        let d = toy(&[1, 2, 1, 2], &[2.0, 1.0, -1.0, 3.0], 2);
        let mu = DMatrix::from_row_slice(4, 2, &[1.0, 0.5, 0.8, 0.2, -0.5, 1.5, 2.0, 2.5]);
        let e = DMatrix::from_row_slice(4, 2, &[0.4, 0.6, 0.5, 0.5, 0.25, 0.75, 0.8, 0.2]);
        let plan = FoldPlan {
            k: 2,
            assignment: vec![1, 1, 2, 2],
            seed: 0,
        };
        (d, mu, e, plan)
    }

    #[test]
    fn dif_two_small_arms() {
        let d = toy(&[1, 1, 2], &[1.0, 1.0, 3.0], 2);
        let est = dif_estimate(&d, 0.05).unwrap();
        assert_eq!(est.estimate(1, 2), -2.0);
        assert_eq!(est.estimate(2, 1), 2.0);
    }

    #[test]
    fn dif_identical_arms_is_zero() {
        let d = toy(&[1, 2, 1, 2], &[4.0, 4.0, 6.0, 6.0], 2);
        let est = dif_estimate(&d, 0.05).unwrap();
        assert_eq!(est.estimate(1, 2), 0.0);
    }

    #[test]
    fn dif_three_arms_antisymmetric() {
        let d = toy(&[1, 2, 3, 1, 2, 3], &[2.0, 5.0, 1.0, 2.0, 5.0, 1.0], 3);
        let est = dif_estimate(&d, 0.05).unwrap();
        assert_eq!(est.estimate(2, 3), 4.0);
        for j in 1..=3 {
            for j2 in 1..=3 {
                assert_eq!(est.estimate(j, j2), -est.estimate(j2, j));
            }
        }
    }

    #[test]
    fn dif_variance_hand_table() {
        // Arm 1 outcomes (0, 2): mean 1, sample variance 2. Arm 2 outcomes
        // (1, 4): mean 2.5, sample variance 4.5. With n = 4:
        // V = 4 * (2/2 + 4.5/2) = 13.
        let d = toy(&[1, 1, 2, 2], &[0.0, 2.0, 1.0, 4.0], 2);
        let est = dif_estimate(&d, 0.05).unwrap();
        assert_abs_diff_eq!(est.estimate(1, 2), -1.5, epsilon = 1e-12);
        assert_abs_diff_eq!(est.variance[0], 13.0, epsilon = 1e-12);
        let s = est.pair(PairIndex::new(1, 2).unwrap());
        assert!(s.ci_lower < s.estimate && s.estimate < s.ci_upper);
    }

    #[test]
    fn dif_empty_arm_is_error() {
        let d = toy(&[1, 1, 1], &[0.0, 0.0, 0.0], 2);
        assert!(matches!(
            dif_estimate(&d, 0.05),
            Err(GcfError::EmptyArm { arm: 2 })
        ));
    }

    #[test]
    fn pseudo_outcome_bystander_units() {
        // Unit in arm 3 contributes only the regression contrast for the
        // pair (1, 2).
        let d = toy(&[3, 1, 2], &[9.0, 1.0, 1.0], 3);
        let mu = DMatrix::from_row_slice(3, 3, &[2.0, 0.5, 7.0, 1.0, 1.0, 7.0, 1.0, 1.0, 7.0]);
        let e = DMatrix::from_element(3, 3, 1.0 / 3.0);
        let np = NuisancePredictions::from_matrices(mu, e, 1e-6).unwrap();
        let s = pseudo_outcome(&d, &np, PairIndex::new(1, 2).unwrap()).unwrap();
        assert_abs_diff_eq!(s[0], 1.5, epsilon = 1e-15);
    }

    #[test]
    fn pseudo_outcome_zero_residuals() {
        // Outcomes equal the own-arm predictions, so every unit's value is
        // the plain regression contrast.
        let d = toy(&[1, 2], &[4.0, -2.0], 2);
        let mu = DMatrix::from_row_slice(2, 2, &[4.0, 1.0, 3.0, -2.0]);
        let e = DMatrix::from_element(2, 2, 0.5);
        let np = NuisancePredictions::from_matrices(mu, e, 1e-6).unwrap();
        let s = pseudo_outcome(&d, &np, PairIndex::new(1, 2).unwrap()).unwrap();
        assert_eq!(s, vec![3.0, 5.0]);
    }

    #[test]
    fn pseudo_outcome_single_unit_hand_value() {
        // mu_1 = 1, mu_2 = 0, Z = 1, Y = 2, e_1 = 0.5:
        // S = 1 + (2 - 1)/0.5 = 3.
        let d = toy(&[1, 2], &[2.0, 0.0], 2);
        let mu = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, 0.0]);
        let e = DMatrix::from_element(2, 2, 0.5);
        let np = NuisancePredictions::from_matrices(mu, e, 1e-6).unwrap();
        let s = pseudo_outcome(&d, &np, PairIndex::new(1, 2).unwrap()).unwrap();
        assert_abs_diff_eq!(s[0], 3.0, epsilon = 1e-15);
    }

    #[test]
    fn gcf_zero_data_gives_zero() {
        let d = toy(&[1, 2, 1, 2], &[0.0; 4], 2);
        let plan = make_folds(&d, 2, 0, true).unwrap();
        let mu = DMatrix::zeros(4, 2);
        let e = DMatrix::from_element(4, 2, 0.5);
        let np = NuisancePredictions::from_matrices(mu, e, 1e-6).unwrap();
        let est = gcf_estimate(&d, &plan, &np, 0.05).unwrap();
        assert_eq!(est.estimate(1, 2), 0.0);
        assert_eq!(est.variance[0], 0.0);
        assert_eq!(est.ci_lower[0], 0.0);
        assert_eq!(est.ci_upper[0], 0.0);
    }

    #[test]
    fn gcf_hand_table() {
        let (d, mu, e, plan) = hand_table();
        let np = NuisancePredictions::from_matrices(mu, e, 1e-6).unwrap();
        let est = gcf_estimate(&d, &plan, &np, 0.05).unwrap();
        assert_abs_diff_eq!(est.estimate(1, 2), -1.25, epsilon = 1e-12);
        assert_abs_diff_eq!(est.variance[0], 28.75 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn gcf_hand_table_binary_complement_denominator() {
        // Same table, but the arm-2 residual is divided by 1 - e_2. Only
        // units 1 and 3 change:
        //   unit 1: 0.6 - 0.8/(1 - 0.5)  = -1.0 (unchanged; e_1 = e_2)
        //   unit 3: -0.5 - 0.5/(1 - 0.2) = -1.125
        // mean = (3 - 1 - 4 - 1.125)/4 = -0.78125.
        let (d, mu, e, plan) = hand_table();
        let np = NuisancePredictions::from_matrices(mu, e, 1e-6).unwrap();
        let est =
            gcf_estimate_with(&d, &plan, &np, 0.05, DenominatorStyle::BinaryComplement).unwrap();
        assert_abs_diff_eq!(est.estimate(1, 2), -0.78125, epsilon = 1e-12);
    }

    #[test]
    fn gaipw_hand_table() {
        let (d, mu, e, _) = hand_table();
        let est = aipw_from_predictions(
            &d,
            &mu,
            &e,
            0.05,
            DenominatorStyle::ArmSpecific,
            Method::Gaipw,
            None,
        )
        .unwrap();
        assert_abs_diff_eq!(est.estimate(1, 2), -1.25, epsilon = 1e-12);
        assert_abs_diff_eq!(est.variance[0], 28.75 / 3.0, epsilon = 1e-12);
    }

    #[test]
    fn gaipw_two_unit_example() {
        let d = toy(&[1, 2], &[1.0, 0.0], 2);
        let mu = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 1.0, 0.0]);
        let e = DMatrix::from_element(2, 2, 0.5);
        let est = aipw_from_predictions(
            &d,
            &mu,
            &e,
            0.05,
            DenominatorStyle::ArmSpecific,
            Method::Gaipw,
            None,
        )
        .unwrap();
        assert_abs_diff_eq!(est.estimate(1, 2), 1.0, epsilon = 1e-15);
        assert_eq!(est.variance[0], 0.0);
    }

    #[test]
    fn gaipw_zero_residuals_reduce_to_regression_contrast() {
        let d = toy(&[1, 2, 1], &[2.0, -1.0, 4.0], 2);
        let mu = DMatrix::from_row_slice(3, 2, &[2.0, 0.0, 1.0, -1.0, 4.0, 3.0]);
        let e = DMatrix::from_element(3, 2, 0.5);
        let est = aipw_from_predictions(
            &d,
            &mu,
            &e,
            0.05,
            DenominatorStyle::ArmSpecific,
            Method::Gaipw,
            None,
        )
        .unwrap();
        let expected = ((2.0 - 0.0) + (1.0 - (-1.0)) + (4.0 - 3.0)) / 3.0;
        assert_abs_diff_eq!(est.estimate(1, 2), expected, epsilon = 1e-15);
    }

    #[test]
    fn gaipw_from_fitted_models_matches_prediction_route() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        let n = 60;
        let covariates = DMatrix::from_fn(n, 2, |_, _| rng.gen::<f64>() * 2.0 - 1.0);
        let treatments: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let outcomes: Vec<f64> = (0..n)
            .map(|i| covariates[(i, 0)] + rng.gen::<f64>())
            .collect();
        let d = Dataset::new(covariates, treatments, outcomes, 3).unwrap();
        let rows: Vec<usize> = (0..n).collect();
        let spec = NuisanceSpec::default();
        let om = fit_outcome_model(&d, &rows, &spec.outcome).unwrap();
        let pm = fit_propensity_model(&d, &rows, &spec.propensity).unwrap();
        let est = gaipw_estimate(&d, &om, &pm, 0.05, 1e-3).unwrap();

        let mu = om.predict_matrix(&d.covariates, &rows);
        let mut e = pm.predict_matrix(&d.covariates, &rows);
        for i in 0..n {
            let mut row: Vec<f64> = e.row(i).iter().copied().collect();
            crate::nuisance::clip_in_place(&mut row, 1e-3).unwrap();
            for (a, v) in row.iter().enumerate() {
                e[(i, a)] = *v;
            }
        }
        let reference = aipw_from_predictions(
            &d,
            &mu,
            &e,
            0.05,
            DenominatorStyle::ArmSpecific,
            Method::Gaipw,
            None,
        )
        .unwrap();
        assert_eq!(est.estimates, reference.estimates);
        assert_eq!(est.variance, reference.variance);
    }

    #[test]
    fn oracle_zero_noise_recovers_sample_contrast() {
        // Outcomes equal the true conditional means, so the oracle returns
        // the exact average contrast of those means.
        let n = 10;
        let covariates = DMatrix::from_fn(n, 1, |i, _| i as f64);
        let treatments: Vec<usize> = (0..n).map(|i| i % 2 + 1).collect();
        let true_mu = DMatrix::from_fn(n, 2, |i, a| {
            if a == 0 {
                2.0 * i as f64
            } else {
                i as f64 - 1.0
            }
        });
        let outcomes: Vec<f64> = (0..n).map(|i| true_mu[(i, treatments[i] - 1)]).collect();
        let d = Dataset::new(covariates, treatments, outcomes, 2).unwrap();
        let true_e = DMatrix::from_element(n, 2, 0.5);
        let est = oracle_gaipw(&d, &true_mu, &true_e, 0.05).unwrap();
        let expected: f64 = (0..n)
            .map(|i| true_mu[(i, 0)] - true_mu[(i, 1)])
            .sum::<f64>()
            / n as f64;
        assert_abs_diff_eq!(est.estimate(1, 2), expected, epsilon = 1e-12);
    }

    #[test]
    fn oracle_identical_arms_centers_on_zero() {
        // Both arms share the same conditional mean; the oracle estimates
        // over 200 seeded draws must center on zero.
        let n = 80;
        let mut taus = Vec::with_capacity(200);
        for seed in 0..200u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let covariates = DMatrix::from_fn(n, 1, |_, _| rng.gen::<f64>());
            let treatments: Vec<usize> = (0..n)
                .map(|_| if rng.gen::<f64>() < 0.5 { 1 } else { 2 })
                .collect();
            let true_mu = DMatrix::from_fn(n, 2, |i, _| 1.0 + covariates[(i, 0)]);
            let outcomes: Vec<f64> = (0..n)
                .map(|i| true_mu[(i, 0)] + rng.gen::<f64>() - 0.5)
                .collect();
            let d = Dataset::new(covariates, treatments, outcomes, 2).unwrap();
            let true_e = DMatrix::from_element(n, 2, 0.5);
            let est = oracle_gaipw(&d, &true_mu, &true_e, 0.05).unwrap();
            taus.push(est.estimate(1, 2));
        }
        let mean = taus.iter().sum::<f64>() / taus.len() as f64;
        let sd =
            (taus.iter().map(|t| (t - mean).powi(2)).sum::<f64>() / (taus.len() - 1) as f64).sqrt();
        assert!(
            mean.abs() < 4.0 * sd / (taus.len() as f64).sqrt(),
            "mean {mean} too far from zero (sd {sd})"
        );
    }

    #[test]
    fn oracle_rejects_off_simplex_rows() {
        let d = toy(&[1, 2], &[1.0, 2.0], 2);
        let mu = DMatrix::zeros(2, 2);
        let e = DMatrix::from_row_slice(2, 2, &[0.9, 0.9, 0.5, 0.5]);
        assert!(matches!(
            oracle_gaipw(&d, &mu, &e, 0.05),
            Err(GcfError::SimplexViolation { unit: 0, .. })
        ));
    }

    #[test]
    fn variance_constant_vector_is_zero() {
        assert_eq!(variance_estimate(&[3.0, 3.0, 3.0], 3.0).unwrap(), 0.0);
    }

    #[test]
    fn variance_two_point_hand_value() {
        assert_abs_diff_eq!(
            variance_estimate(&[0.0, 2.0], 1.0).unwrap(),
            2.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn variance_matches_two_pass_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        let s: Vec<f64> = (0..100).map(|_| rng.gen::<f64>() * 10.0 - 5.0).collect();
        let tau = s.iter().sum::<f64>() / 100.0;
        let ours = variance_estimate(&s, tau).unwrap();
        let oracle: f64 = s.iter().map(|v| (v - tau) * (v - tau)).sum::<f64>() / 99.0;
        assert_abs_diff_eq!(ours, oracle, epsilon = 1e-10);
    }

    #[test]
    fn variance_needs_two_observations() {
        assert!(matches!(
            variance_estimate(&[1.0], 1.0),
            Err(GcfError::TooFewObservations(1))
        ));
    }

    #[test]
    fn ci_zero_variance_collapses_to_point() {
        let (lo, hi) = simultaneous_ci(1.5, 0.0, 100, 3, 0.05).unwrap();
        assert_eq!((lo, hi), (1.5, 1.5));
    }

    #[test]
    fn ci_multipliers_match_quantile_oracle() {
        // J = 2: plain 97.5% quantile. J = 3: Bonferroni over three pairs.
        let (lo, hi) = simultaneous_ci(0.0, 1.0, 1, 2, 0.05).unwrap();
        assert_abs_diff_eq!(hi, 1.959963984540054, epsilon = 1e-9);
        assert_abs_diff_eq!(lo, -1.959963984540054, epsilon = 1e-9);
        let (_, hi3) = simultaneous_ci(0.0, 1.0, 1, 3, 0.05).unwrap();
        assert_abs_diff_eq!(hi3, 2.394, epsilon = 5e-4);
    }

    #[test]
    fn ci_rejects_bad_alpha() {
        assert!(matches!(
            simultaneous_ci(0.0, 1.0, 10, 2, 0.0),
            Err(GcfError::InvalidAlpha(_))
        ));
        assert!(simultaneous_ci(0.0, 1.0, 10, 2, 1.0).is_err());
    }

    #[test]
    fn cross_fitted_pipeline_matches_oracle_under_true_nuisances() {
        // Supplying the true nuisances as "predictions" must make the
        // cross-fitted estimator coincide with the oracle.
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let n = 40;
        let covariates = DMatrix::from_fn(n, 1, |_, _| rng.gen::<f64>());
        let treatments: Vec<usize> = (0..n).map(|i| i % 2 + 1).collect();
        let true_mu = DMatrix::from_fn(n, 2, |i, a| covariates[(i, 0)] * (a as f64 + 1.0));
        let outcomes: Vec<f64> = (0..n)
            .map(|i| true_mu[(i, treatments[i] - 1)] + rng.gen::<f64>())
            .collect();
        let d = Dataset::new(covariates, treatments, outcomes, 2).unwrap();
        let true_e = DMatrix::from_element(n, 2, 0.5);
        let plan = make_folds(&d, 4, 13, true).unwrap();
        let np = NuisancePredictions {
            mu_hat: true_mu.clone(),
            e_hat: true_e.clone(),
            clipped: vec![false; n],
            positivity: crate::data_model::positivity_diagnostic(&true_e, 1e-3).unwrap(),
        };
        let gcf = gcf_estimate(&d, &plan, &np, 0.05).unwrap();
        let oracle = oracle_gaipw(&d, &true_mu, &true_e, 0.05).unwrap();
        assert!((gcf.estimate(1, 2) - oracle.estimate(1, 2)).abs() <= 1e-12);
        assert!((gcf.variance[0] - oracle.variance[0]).abs() <= 1e-12);
    }

    #[test]
    fn end_to_end_antisymmetry_and_decomposition() {
        // Fit the full pipeline on a random three-arm dataset, then check
        // the estimate matrix is exactly antisymmetric and each pair equals
        // the difference of independently computed per-arm functionals.
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let n = 120;
        let covariates = DMatrix::from_fn(n, 2, |_, _| rng.gen::<f64>() * 2.0 - 1.0);
        let treatments: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
        let outcomes: Vec<f64> = (0..n)
            .map(|i| covariates[(i, 0)] - covariates[(i, 1)] + rng.gen::<f64>())
            .collect();
        let d = Dataset::new(covariates, treatments, outcomes, 3).unwrap();
        let plan = make_folds(&d, 3, 5, true).unwrap();
        let np = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), 1e-3).unwrap();
        let est = gcf_estimate(&d, &plan, &np, 0.05).unwrap();

        for j in 1..=3 {
            assert_eq!(est.estimate(j, j), 0.0);
            for j2 in 1..=3 {
                assert_eq!(est.estimate(j, j2), -est.estimate(j2, j));
            }
        }

        // Per-arm functionals computed from scratch.
        let mut arm_mean = [0.0f64; 3];
        for a in 0..3 {
            let mut sum = 0.0;
            for i in 0..n {
                let mut g = np.mu_hat[(i, a)];
                if d.treatments[i] == a + 1 {
                    g += (d.outcomes[i] - np.mu_hat[(i, a)]) / np.e_hat[(i, a)];
                }
                sum += g;
            }
            arm_mean[a] = sum / n as f64;
        }
        for pair in PairIndex::all(3) {
            let decomposed = arm_mean[pair.j - 1] - arm_mean[pair.j_prime - 1];
            assert!(
                (est.estimates[(pair.j - 1, pair.j_prime - 1)] - decomposed).abs() <= 1e-12,
                "pair {pair}"
            );
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;
        use rand::Rng;

        proptest! {
            #[test]
            fn fold_weighted_means_match_pooled(
                values in proptest::collection::vec(-100.0f64..100.0, 4..80),
                k in 2usize..5,
                seed in 0u64..1000,
            ) {
                prop_assume!(values.len() >= k);
                let n = values.len();
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let assignment: Vec<usize> =
                    (0..n).map(|i| if i < k { i + 1 } else { rng.gen_range(1..=k) }).collect();
                let plan = FoldPlan { k, assignment, seed };
                let pooled = values.iter().sum::<f64>() / n as f64;
                prop_assert!(fold_weighted_mean_matches(&plan, &values, pooled));
            }

            #[test]
            fn estimates_are_antisymmetric_for_random_predictions(
                seed in 0u64..500,
            ) {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let n = 30;
                let n_arms = 3;
                let treatments: Vec<usize> = (0..n).map(|i| i % n_arms + 1).collect();
                let outcomes: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() * 6.0 - 3.0).collect();
                let d = Dataset::new(DMatrix::zeros(n, 1), treatments, outcomes, n_arms).unwrap();
                let mu = DMatrix::from_fn(n, n_arms, |_, _| rng.gen::<f64>() * 4.0 - 2.0);
                let mut e = DMatrix::zeros(n, n_arms);
                for i in 0..n {
                    let mut row: Vec<f64> = (0..n_arms).map(|_| rng.gen::<f64>() + 0.05).collect();
                    let total: f64 = row.iter().sum();
                    for v in row.iter_mut() { *v /= total; }
                    for (a, v) in row.iter().enumerate() { e[(i, a)] = *v; }
                }
                let est = aipw_from_predictions(
                    &d, &mu, &e, 0.05, DenominatorStyle::ArmSpecific, Method::Gaipw, None,
                ).unwrap();
                for j in 1..=n_arms {
                    for j2 in 1..=n_arms {
                        prop_assert_eq!(est.estimate(j, j2), -est.estimate(j2, j));
                    }
                }
            }
        }
    }
}
