//! Nuisance learners: per-arm outcome regressions and the propensity model.
//!
//! The estimators need two fitted functions. The outcome regression
//! `mu_j(x) = E[Y | Z = j, X = x]` is fit separately per arm by least
//! squares on that arm's units. The propensity vector
//! `e_j(x) = P(Z = j | X = x)` is fit jointly by multinomial logistic
//! regression with arm `J` as the reference category, which makes the
//! maximum likelihood problem identifiable; predicted probabilities do not
//! depend on the choice of reference.
//!
//! Both learners are deterministic functions of their inputs. Estimated
//! propensities are clipped into `[xi, 1 - xi]` before anything divides by
//! them; see [`clip_propensity`].

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::data_model::Dataset;
use crate::error::{GcfError, Result};

/// Which learner fits a nuisance function.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LearnerKind {
    /// Linear regression with an intercept, optional ridge on the slopes.
    ParametricLinear,
    /// Multinomial logistic regression, reference-category coding.
    ParametricMultinomialLogit,
    /// Identifier for an externally supplied learner (not shipped; fitting
    /// with this kind is rejected at runtime).
    External(String),
}

/// Hyperparameters for one nuisance learner.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LearnerSpec {
    /// Learner family.
    pub kind: LearnerKind,
    /// Ridge penalty on slope coefficients; intercepts are never penalized.
    pub ridge: f64,
    /// Iteration cap for iterative fits.
    pub max_iters: usize,
    /// Convergence tolerance on the gradient max-norm.
    pub tol: f64,
}

impl LearnerSpec {
    /// Linear outcome learner: no ridge unless the caller asks for one.
    pub fn linear() -> Self {
        LearnerSpec {
            kind: LearnerKind::ParametricLinear,
            ridge: 0.0,
            max_iters: 1,
            tol: 1e-8,
        }
    }

    /// Multinomial-logit propensity learner. The tiny default ridge keeps
    /// near-separable training folds solvable without visibly moving the
    /// estimates.
    pub fn multinomial_logit() -> Self {
        LearnerSpec {
            kind: LearnerKind::ParametricMultinomialLogit,
            ridge: 1e-8,
            max_iters: 100,
            tol: 1e-8,
        }
    }

    /// Checks the hyperparameter ranges.
    pub fn validate(&self) -> Result<()> {
        if !(self.ridge >= 0.0) || !self.ridge.is_finite() {
            return Err(GcfError::Config(format!(
                "ridge must be finite and >= 0, got {}",
                self.ridge
            )));
        }
        if self.max_iters < 1 {
            return Err(GcfError::Config("max_iters must be >= 1".into()));
        }
        if !(self.tol > 0.0) {
            return Err(GcfError::Config(format!(
                "tolerance must be > 0, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

/// The pair of learner specifications used whenever both nuisances are fit
/// together.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NuisanceSpec {
    /// Learner for the per-arm outcome regressions.
    pub outcome: LearnerSpec,
    /// Learner for the propensity model.
    pub propensity: LearnerSpec,
}

impl Default for NuisanceSpec {
    fn default() -> Self {
        NuisanceSpec {
            outcome: LearnerSpec::linear(),
            propensity: LearnerSpec::multinomial_logit(),
        }
    }
}

/// Fitted per-arm outcome regressions.
#[derive(Debug, Clone, Serialize)]
pub struct OutcomeModel {
    /// One coefficient vector per arm, intercept first, length `p + 1`.
    pub coefficients: Vec<Vec<f64>>,
    /// Residual variance per arm, a fit diagnostic
    /// (denominator `max(m_j - p - 1, 1)`).
    pub residual_variance: Vec<f64>,
}

impl OutcomeModel {
    /// Predicted outcome for covariate row `i` under arm `arm`.
    pub fn predict_row(&self, covariates: &DMatrix<f64>, i: usize, arm: usize) -> f64 {
        let coef = &self.coefficients[arm - 1];
        let mut y = coef[0];
        for a in 0..covariates.ncols() {
            y += coef[a + 1] * covariates[(i, a)];
        }
        y
    }

    /// Predictions for the selected rows, one column per arm.
    pub fn predict_matrix(&self, covariates: &DMatrix<f64>, rows: &[usize]) -> DMatrix<f64> {
        let n_arms = self.coefficients.len();
        let mut out = DMatrix::zeros(rows.len(), n_arms);
        for (r, &i) in rows.iter().enumerate() {
            for arm in 1..=n_arms {
                out[(r, arm - 1)] = self.predict_row(covariates, i, arm);
            }
        }
        out
    }
}

/// Fitted multinomial-logit propensity model.
#[derive(Debug, Clone, Serialize)]
pub struct PropensityModel {
    /// Coefficient matrix, `(J - 1) x (p + 1)`, intercept first; the
    /// reference arm `J` has implicit zero coefficients.
    #[serde(serialize_with = "crate::serde_util::matrix_rows::serialize")]
    pub coefficients: DMatrix<f64>,
    /// Number of arms `J`.
    pub n_arms: usize,
    /// Newton steps taken.
    pub iterations: usize,
    /// Gradient max-norm at the final iterate.
    pub final_grad_norm: f64,
    /// False when the iteration cap was reached before the tolerance; a
    /// warning, not an error.
    pub converged: bool,
}

impl PropensityModel {
    /// Predicted propensity vectors for the selected rows, one column per
    /// arm. Rows sum to 1 up to floating-point roundoff.
    pub fn predict_matrix(&self, covariates: &DMatrix<f64>, rows: &[usize]) -> DMatrix<f64> {
        let p = covariates.ncols();
        let mut out = DMatrix::zeros(rows.len(), self.n_arms);
        for (r, &i) in rows.iter().enumerate() {
            for c in 0..self.n_arms - 1 {
                let mut s = self.coefficients[(c, 0)];
                for a in 0..p {
                    s += self.coefficients[(c, a + 1)] * covariates[(i, a)];
                }
                out[(r, c)] = s;
            }
            out[(r, self.n_arms - 1)] = 0.0;
            let mut row: Vec<f64> = out.row(r).iter().copied().collect();
            softmax_in_place(&mut row);
            for (j, v) in row.iter().enumerate() {
                out[(r, j)] = *v;
            }
        }
        out
    }
}

/// Softmax over raw scores, computed with max-subtraction so large scores
/// cannot overflow.
pub(crate) fn softmax_in_place(scores: &mut [f64]) {
    let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mut sum = 0.0;
    for s in scores.iter_mut() {
        *s = (*s - max).exp();
        sum += *s;
    }
    for s in scores.iter_mut() {
        *s /= sum;
    }
}

/// Predicted propensity vector for a single covariate vector.
pub fn predict_propensity(model: &PropensityModel, x: &[f64]) -> Vec<f64> {
    let mut scores = vec![0.0; model.n_arms];
    for c in 0..model.n_arms - 1 {
        let mut s = model.coefficients[(c, 0)];
        for (a, &v) in x.iter().enumerate() {
            s += model.coefficients[(c, a + 1)] * v;
        }
        scores[c] = s;
    }
    softmax_in_place(&mut scores);
    scores
}

/// Least squares of `targets` on `features` with an intercept.
///
/// Returns the coefficient vector `(intercept, slopes...)` of length
/// `p + 1`. A positive `ridge` penalizes the squared norm of the slopes
/// (never the intercept), implemented by row augmentation so one stable
/// factorization covers both cases. Rank deficiency with `ridge = 0` is an
/// error rather than a silent minimum-norm solution.
pub fn fit_ols(
    features: &DMatrix<f64>,
    targets: &DVector<f64>,
    ridge: f64,
) -> Result<DVector<f64>> {
    let m = features.nrows();
    let p = features.ncols();
    let q = p + 1;
    if m == 0 {
        return Err(GcfError::EmptyDataset);
    }
    debug_assert_eq!(m, targets.len());
    if !(ridge >= 0.0) || !ridge.is_finite() {
        return Err(GcfError::Config(format!(
            "ridge must be finite and >= 0, got {ridge}"
        )));
    }
    let extra = if ridge > 0.0 { p } else { 0 };
    let mut a = DMatrix::zeros(m + extra, q);
    for i in 0..m {
        a[(i, 0)] = 1.0;
        for k in 0..p {
            a[(i, k + 1)] = features[(i, k)];
        }
    }
    if ridge > 0.0 {
        let s = ridge.sqrt();
        for k in 0..p {
            a[(m + k, k + 1)] = s;
        }
    }
    let mut b = DVector::zeros(m + extra);
    b.rows_mut(0, m).copy_from(targets);

    let svd = a.svd(true, true);
    let max_sv = svd.singular_values.iter().copied().fold(0.0, f64::max);
    let eps = max_sv * (m + extra).max(q) as f64 * f64::EPSILON;
    if svd.rank(eps) < q {
        return Err(GcfError::SingularSystem);
    }
    svd.solve(&b, eps).map_err(|_| GcfError::SingularSystem)
}

/// Fits one outcome regression per arm on the selected training rows.
///
/// Every arm must appear among the training rows: downstream estimators
/// need predictions for all arms.
pub fn fit_outcome_model(d: &Dataset, rows: &[usize], spec: &LearnerSpec) -> Result<OutcomeModel> {
    spec.validate()?;
    match spec.kind {
        LearnerKind::ParametricLinear => {}
        _ => {
            return Err(GcfError::Config(
                "outcome learner must be parametric-linear; external learners are not shipped"
                    .into(),
            ))
        }
    }
    let p = d.p();
    let mut coefficients = Vec::with_capacity(d.n_arms);
    let mut residual_variance = Vec::with_capacity(d.n_arms);
    for arm in 1..=d.n_arms {
        let idx: Vec<usize> = rows
            .iter()
            .copied()
            .filter(|&i| d.treatments[i] == arm)
            .collect();
        if idx.is_empty() {
            return Err(GcfError::EmptyArm { arm });
        }
        let m = idx.len();
        let features = DMatrix::from_fn(m, p, |r, c| d.covariates[(idx[r], c)]);
        let targets = DVector::from_fn(m, |r, _| d.outcomes[idx[r]]);
        let coef = fit_ols(&features, &targets, spec.ridge)?;
        let mut ssr = 0.0;
        for r in 0..m {
            let mut pred = coef[0];
            for c in 0..p {
                pred += coef[c + 1] * features[(r, c)];
            }
            ssr += (targets[r] - pred).powi(2);
        }
        let dof = m.saturating_sub(p + 1).max(1);
        residual_variance.push(ssr / dof as f64);
        coefficients.push(coef.iter().copied().collect());
    }
    Ok(OutcomeModel {
        coefficients,
        residual_variance,
    })
}

/// Fits a multinomial logistic regression by penalized Newton steps.
///
/// `labels` take values in `1..=n_arms` and every arm must be present. The
/// reference arm `n_arms` has zero coefficients. Each accepted step cannot
/// decrease the penalized log-likelihood (step halving guarantees it);
/// failure to reach the gradient tolerance within `spec.max_iters` is
/// recorded in the returned metadata rather than raised.
pub fn fit_multinomial_logit(
    features: &DMatrix<f64>,
    labels: &[usize],
    n_arms: usize,
    spec: &LearnerSpec,
) -> Result<PropensityModel> {
    spec.validate()?;
    match spec.kind {
        LearnerKind::ParametricMultinomialLogit => {}
        _ => {
            return Err(GcfError::Config(
                "propensity learner must be parametric-multinomial-logit; external learners are not shipped"
                    .into(),
            ))
        }
    }
    if n_arms < 2 {
        return Err(GcfError::TooFewArms(n_arms));
    }
    let m = features.nrows();
    if m == 0 {
        return Err(GcfError::EmptyDataset);
    }
    debug_assert_eq!(m, labels.len());
    let mut seen = vec![false; n_arms];
    for &z in labels {
        debug_assert!(z >= 1 && z <= n_arms);
        seen[z - 1] = true;
    }
    if let Some(arm) = seen.iter().position(|s| !s) {
        return Err(GcfError::EmptyArm { arm: arm + 1 });
    }

    let p = features.ncols();
    let q = p + 1;
    let classes = n_arms - 1;
    let dim = classes * q;
    let lambda = spec.ridge;

    // Design with intercept.
    let mut w = DMatrix::zeros(m, q);
    for i in 0..m {
        w[(i, 0)] = 1.0;
        for a in 0..p {
            w[(i, a + 1)] = features[(i, a)];
        }
    }

    // Penalized log-likelihood at the given coefficients.
    let pen_ll = |theta: &DMatrix<f64>| -> f64 {
        let scores = &w * theta.transpose();
        let mut ll = 0.0;
        for i in 0..m {
            let mut max = 0.0f64;
            for c in 0..classes {
                max = max.max(scores[(i, c)]);
            }
            let mut lse = (-max).exp();
            for c in 0..classes {
                lse += (scores[(i, c)] - max).exp();
            }
            let own = if labels[i] == n_arms {
                0.0
            } else {
                scores[(i, labels[i] - 1)]
            };
            ll += own - max - lse.ln();
        }
        let mut penalty = 0.0;
        for c in 0..classes {
            for a in 1..q {
                penalty += theta[(c, a)].powi(2);
            }
        }
        ll - 0.5 * lambda * penalty
    };

    let mut theta = DMatrix::zeros(classes, q);
    let mut ll = pen_ll(&theta);
    let mut iterations = 0;
    let mut final_grad_norm = f64::INFINITY;
    let mut converged = false;

    for _ in 0..spec.max_iters {
        // Probabilities at the current iterate.
        let scores = &w * theta.transpose();
        let mut probs = DMatrix::zeros(m, n_arms);
        for i in 0..m {
            let mut row = vec![0.0; n_arms];
            for c in 0..classes {
                row[c] = scores[(i, c)];
            }
            softmax_in_place(&mut row);
            for j in 0..n_arms {
                probs[(i, j)] = row[j];
            }
        }

        // Gradient of the penalized log-likelihood.
        let mut grad = DVector::zeros(dim);
        for c in 0..classes {
            let resid = DVector::from_fn(m, |i, _| {
                (if labels[i] == c + 1 { 1.0 } else { 0.0 }) - probs[(i, c)]
            });
            let g = w.transpose() * resid;
            for a in 0..q {
                let pen = if a >= 1 { lambda * theta[(c, a)] } else { 0.0 };
                grad[c * q + a] = g[a] - pen;
            }
        }
        final_grad_norm = grad.amax();
        if final_grad_norm < spec.tol {
            converged = true;
            break;
        }

        // Negated Hessian, block (c, c') = W' diag(p_c (delta - p_c')) W,
        // plus the ridge on slope diagonals; positive semidefinite.
        let mut neg_hess = DMatrix::zeros(dim, dim);
        for c in 0..classes {
            for c2 in c..classes {
                let mut ws = w.clone();
                for i in 0..m {
                    let delta = if c == c2 { 1.0 } else { 0.0 };
                    let d = probs[(i, c)] * (delta - probs[(i, c2)]);
                    ws.row_mut(i).scale_mut(d);
                }
                let block = w.transpose() * ws;
                for a in 0..q {
                    for b in 0..q {
                        neg_hess[(c * q + a, c2 * q + b)] = block[(a, b)];
                        neg_hess[(c2 * q + b, c * q + a)] = block[(a, b)];
                    }
                }
            }
            for a in 1..q {
                neg_hess[(c * q + a, c * q + a)] += lambda;
            }
        }

        let step = match nalgebra::Cholesky::new(neg_hess.clone()) {
            Some(chol) => chol.solve(&grad),
            None => match neg_hess.lu().solve(&grad) {
                Some(s) => s,
                None => break,
            },
        };

        // Step halving: accept the largest step in {1, 1/2, ...} that does
        // not decrease the penalized log-likelihood.
        let mut t = 1.0;
        let mut accepted = None;
        while t > 1e-12 {
            let mut cand = theta.clone();
            for c in 0..classes {
                for a in 0..q {
                    cand[(c, a)] += t * step[c * q + a];
                }
            }
            let cand_ll = pen_ll(&cand);
            if cand_ll.is_finite() && cand_ll >= ll - 1e-12 * (1.0 + ll.abs()) {
                accepted = Some((cand, cand_ll));
                break;
            }
            t *= 0.5;
        }
        match accepted {
            Some((cand, cand_ll)) => {
                debug_assert!(cand_ll >= ll - 1e-9 * (1.0 + ll.abs()));
                theta = cand;
                ll = cand_ll;
                iterations += 1;
            }
            None => break,
        }
    }

    Ok(PropensityModel {
        coefficients: theta,
        n_arms,
        iterations,
        final_grad_norm,
        converged,
    })
}

/// Fits the propensity model on the selected training rows of a dataset.
pub fn fit_propensity_model(
    d: &Dataset,
    rows: &[usize],
    spec: &LearnerSpec,
) -> Result<PropensityModel> {
    let p = d.p();
    let features = DMatrix::from_fn(rows.len(), p, |r, c| d.covariates[(rows[r], c)]);
    let labels: Vec<usize> = rows.iter().map(|&i| d.treatments[i]).collect();
    fit_multinomial_logit(&features, &labels, d.n_arms, spec)
}

/// Clips a probability vector into `[xi, 1 - xi]` componentwise.
///
/// Entries outside the band are pinned to the violated bound and the
/// remaining free entries are rescaled to absorb the difference, repeating
/// until nothing new escapes. Vectors already inside the band are returned
/// bitwise unchanged, which makes the operation exactly idempotent.
pub fn clip_propensity(e: &[f64], xi: f64) -> Result<Vec<f64>> {
    let mut v = e.to_vec();
    clip_in_place(&mut v, xi)?;
    Ok(v)
}

/// In-place clipping; returns true when anything changed.
pub(crate) fn clip_in_place(v: &mut [f64], xi: f64) -> Result<bool> {
    if !(xi > 0.0 && xi < 0.5) {
        return Err(GcfError::InvalidXi(xi));
    }
    let j = v.len();
    if j as f64 * xi > 1.0 {
        return Err(GcfError::InfeasibleXi { xi, n_arms: j });
    }
    assert!(j <= 64, "clipping supports at most 64 arms");
    let lo = xi;
    let hi = 1.0 - xi;
    let mut pinned: u64 = 0;
    let mut changed = false;
    for _ in 0..j {
        for (i, value) in v.iter_mut().enumerate() {
            if pinned & (1 << i) != 0 {
                continue;
            }
            if *value < lo {
                *value = lo;
                pinned |= 1 << i;
            } else if *value > hi {
                *value = hi;
                pinned |= 1 << i;
            }
        }
        if pinned == 0 {
            return Ok(false);
        }
        changed = true;
        let mut pinned_sum = 0.0;
        let mut free_sum = 0.0;
        let mut free_count = 0usize;
        for (i, value) in v.iter().enumerate() {
            if pinned & (1 << i) != 0 {
                pinned_sum += value;
            } else {
                free_sum += value;
                free_count += 1;
            }
        }
        if free_count == 0 {
            break;
        }
        let target = 1.0 - pinned_sum;
        if !(target > 0.0) || !(free_sum > 0.0) {
            break;
        }
        let scale = target / free_sum;
        let mut escaped = false;
        for (i, value) in v.iter_mut().enumerate() {
            if pinned & (1 << i) == 0 {
                *value *= scale;
                if *value < lo || *value > hi {
                    escaped = true;
                }
            }
        }
        if !escaped {
            break;
        }
    }
    Ok(changed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ols_exact_interpolation() {
        let x = DMatrix::from_column_slice(3, 1, &[0.0, 1.0, 2.0]);
        let y = DVector::from_column_slice(&[3.0, 5.0, 7.0]);
        let coef = fit_ols(&x, &y, 0.0).unwrap();
        assert_abs_diff_eq!(coef[0], 3.0, epsilon = 1e-10);
        assert_abs_diff_eq!(coef[1], 2.0, epsilon = 1e-10);
        for i in 0..3 {
            let pred = coef[0] + coef[1] * x[(i, 0)];
            assert_abs_diff_eq!(pred, y[i], epsilon = 1e-10);
        }
    }

    #[test]
    fn ols_constant_targets() {
        let x = DMatrix::from_column_slice(4, 1, &[0.0, 1.0, 2.0, 5.0]);
        let y = DVector::from_element(4, 7.5);
        let coef = fit_ols(&x, &y, 0.0).unwrap();
        assert_abs_diff_eq!(coef[0], 7.5, epsilon = 1e-10);
        assert_abs_diff_eq!(coef[1], 0.0, epsilon = 1e-10);
    }

    #[test]
    fn ols_ridge_matches_closed_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        let x = DMatrix::from_fn(50, 3, |_, _| rng.gen::<f64>() * 2.0 - 1.0);
        let y = DVector::from_fn(50, |i, _| {
            1.0 + 2.0 * x[(i, 0)] - x[(i, 1)] + 0.5 * x[(i, 2)] + rng.gen::<f64>()
        });
        let lambda = 0.1;
        let coef = fit_ols(&x, &y, lambda).unwrap();

        // Independent closed form: (A'A + lambda * D)^-1 A'y with D zeroing
        // the intercept entry.
        let a = DMatrix::from_fn(50, 4, |i, c| if c == 0 { 1.0 } else { x[(i, c - 1)] });
        let mut penalty = DMatrix::zeros(4, 4);
        for k in 1..4 {
            penalty[(k, k)] = lambda;
        }
        let closed = (a.transpose() * &a + penalty).try_inverse().unwrap() * a.transpose() * &y;
        for k in 0..4 {
            assert_abs_diff_eq!(coef[k], closed[k], epsilon = 1e-8);
        }
    }

    #[test]
    fn ols_normal_equations_oracle_without_ridge() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let x = DMatrix::from_fn(30, 2, |_, _| rng.gen::<f64>());
        let y = DVector::from_fn(30, |i, _| x[(i, 0)] - 3.0 * x[(i, 1)] + rng.gen::<f64>());
        let coef = fit_ols(&x, &y, 0.0).unwrap();
        let a = DMatrix::from_fn(30, 3, |i, c| if c == 0 { 1.0 } else { x[(i, c - 1)] });
        let closed = (a.transpose() * &a).try_inverse().unwrap() * a.transpose() * &y;
        for k in 0..3 {
            assert_abs_diff_eq!(coef[k], closed[k], epsilon = 1e-8);
        }
    }

    #[test]
    fn ols_singular_without_ridge() {
        // Second column duplicates the first.
        let x = DMatrix::from_fn(10, 2, |i, _| i as f64);
        let y = DVector::from_fn(10, |i, _| i as f64);
        let err = fit_ols(&x, &y, 0.0).unwrap_err();
        assert_eq!(err.to_string(), "singular system; set ridge > 0");
        assert!(fit_ols(&x, &y, 1e-6).is_ok());
    }

    #[test]
    fn logit_intercept_only_recovers_frequencies() {
        let features = DMatrix::zeros(10, 0);
        let labels = vec![1, 1, 1, 1, 1, 2, 2, 2, 3, 3];
        let model = fit_multinomial_logit(&features, &labels, 3, &LearnerSpec::multinomial_logit())
            .unwrap();
        assert!(model.converged);
        let probs = predict_propensity(&model, &[]);
        assert_abs_diff_eq!(probs[0], 0.5, epsilon = 1e-6);
        assert_abs_diff_eq!(probs[1], 0.3, epsilon = 1e-6);
        assert_abs_diff_eq!(probs[2], 0.2, epsilon = 1e-6);
    }

    #[test]
    fn logit_two_arms_matches_binary_logistic_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let m = 400;
        let x = DMatrix::from_fn(m, 1, |_, _| rng.gen::<f64>() * 4.0 - 2.0);
        let labels: Vec<usize> = (0..m)
            .map(|i| {
                let p1 = 1.0 / (1.0 + (-(0.5 + 1.5 * x[(i, 0)])).exp());
                if rng.gen::<f64>() < p1 {
                    1
                } else {
                    2
                }
            })
            .collect();
        let mut spec = LearnerSpec::multinomial_logit();
        spec.ridge = 0.0;
        let model = fit_multinomial_logit(&x, &labels, 2, &spec).unwrap();

        // Independent binary-logit Newton iteration in the scalar
        // sigmoid parameterization.
        let mut beta = [0.0f64; 2];
        for _ in 0..50 {
            let mut g = [0.0f64; 2];
            let mut h = [[0.0f64; 2]; 2];
            for i in 0..m {
                let w = [1.0, x[(i, 0)]];
                let eta = beta[0] * w[0] + beta[1] * w[1];
                let p = 1.0 / (1.0 + (-eta).exp());
                let y = if labels[i] == 1 { 1.0 } else { 0.0 };
                for a in 0..2 {
                    g[a] += (y - p) * w[a];
                    for b in 0..2 {
                        h[a][b] += p * (1.0 - p) * w[a] * w[b];
                    }
                }
            }
            let det = h[0][0] * h[1][1] - h[0][1] * h[1][0];
            let d0 = (h[1][1] * g[0] - h[0][1] * g[1]) / det;
            let d1 = (h[0][0] * g[1] - h[1][0] * g[0]) / det;
            beta[0] += d0;
            beta[1] += d1;
            if g[0].abs().max(g[1].abs()) < 1e-12 {
                break;
            }
        }
        assert_abs_diff_eq!(model.coefficients[(0, 0)], beta[0], epsilon = 1e-6);
        assert_abs_diff_eq!(model.coefficients[(0, 1)], beta[1], epsilon = 1e-6);
    }

    #[test]
    fn logit_recovers_known_coefficients_within_three_ses() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m = 50_000;
        let truth = [[0.4, -0.8, 1.2], [-0.3, 0.6, -0.5]];
        let x = DMatrix::from_fn(m, 2, |_, _| rng.gen::<f64>() * 2.0 - 1.0);
        let labels: Vec<usize> = (0..m)
            .map(|i| {
                let w = [1.0, x[(i, 0)], x[(i, 1)]];
                let mut scores = [0.0f64; 3];
                for c in 0..2 {
                    scores[c] = truth[c].iter().zip(&w).map(|(t, v)| t * v).sum();
                }
                let mut row = scores.to_vec();
                softmax_in_place(&mut row);
                let u: f64 = rng.gen();
                let mut acc = 0.0;
                let mut z = 3;
                for (j, pj) in row.iter().enumerate() {
                    acc += pj;
                    if u < acc {
                        z = j + 1;
                        break;
                    }
                }
                z
            })
            .collect();
        let model =
            fit_multinomial_logit(&x, &labels, 3, &LearnerSpec::multinomial_logit()).unwrap();
        assert!(model.converged);

        // Standard errors from the observed information at the fit,
        // assembled independently with plain loops.
        let q = 3;
        let dim = 2 * q;
        let mut info: DMatrix<f64> = DMatrix::zeros(dim, dim);
        for i in 0..m {
            let w = [1.0, x[(i, 0)], x[(i, 1)]];
            let mut row = vec![0.0; 3];
            for c in 0..2 {
                for a in 0..q {
                    row[c] += model.coefficients[(c, a)] * w[a];
                }
            }
            softmax_in_place(&mut row);
            for c in 0..2 {
                for c2 in 0..2 {
                    let delta = if c == c2 { 1.0 } else { 0.0 };
                    let d = row[c] * (delta - row[c2]);
                    for a in 0..q {
                        for b in 0..q {
                            info[(c * q + a, c2 * q + b)] += d * w[a] * w[b];
                        }
                    }
                }
            }
        }
        let cov = info.try_inverse().unwrap();
        for c in 0..2 {
            for a in 0..q {
                let se = cov[(c * q + a, c * q + a)].sqrt();
                let err = (model.coefficients[(c, a)] - truth[c][a]).abs();
                assert!(
                    err <= 3.0 * se,
                    "coefficient ({c},{a}): error {err} exceeds 3 se {se}"
                );
            }
        }
    }

    #[test]
    fn logit_missing_arm_is_error() {
        let x = DMatrix::zeros(4, 1);
        let err = fit_multinomial_logit(&x, &[1, 1, 3, 3], 3, &LearnerSpec::multinomial_logit())
            .unwrap_err();
        assert!(matches!(err, GcfError::EmptyArm { arm: 2 }));
    }

    #[test]
    fn logit_iteration_cap_flags_nonconvergence() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let x = DMatrix::from_fn(60, 1, |_, _| rng.gen::<f64>() * 2.0 - 1.0);
        let labels: Vec<usize> = (0..60)
            .map(|i| {
                if x[(i, 0)] + 0.3 * (rng.gen::<f64>() - 0.5) > 0.0 {
                    1
                } else {
                    2
                }
            })
            .collect();
        let mut spec = LearnerSpec::multinomial_logit();
        spec.max_iters = 1;
        let model = fit_multinomial_logit(&x, &labels, 2, &spec).unwrap();
        assert!(!model.converged);
        assert_eq!(model.iterations, 1);
    }

    #[test]
    fn predict_zero_coefficients_is_uniform() {
        let model = PropensityModel {
            coefficients: DMatrix::zeros(3, 3),
            n_arms: 4,
            iterations: 0,
            final_grad_norm: 0.0,
            converged: true,
        };
        let probs = predict_propensity(&model, &[1.5, -2.0]);
        for p in probs {
            assert_abs_diff_eq!(p, 0.25, epsilon = 1e-15);
        }
    }

    #[test]
    fn predict_hand_softmax() {
        // Scores (1, 0): probabilities (e/(1+e), 1/(1+e)).
        let mut coefficients = DMatrix::zeros(1, 1);
        coefficients[(0, 0)] = 1.0;
        let model = PropensityModel {
            coefficients,
            n_arms: 2,
            iterations: 0,
            final_grad_norm: 0.0,
            converged: true,
        };
        let probs = predict_propensity(&model, &[]);
        assert_abs_diff_eq!(probs[0], 0.7310585786300049, epsilon = 1e-9);
        assert_abs_diff_eq!(probs[1], 0.2689414213699951, epsilon = 1e-9);
    }

    #[test]
    fn clip_boundary_example() {
        let v = clip_propensity(&[0.0005, 0.9995], 0.001).unwrap();
        assert_abs_diff_eq!(v[0], 0.001, epsilon = 1e-15);
        assert_abs_diff_eq!(v[1], 0.999, epsilon = 1e-15);
    }

    #[test]
    fn clip_interior_is_identity() {
        let e = [0.3, 0.7];
        let v = clip_propensity(&e, 0.01).unwrap();
        assert_eq!(v, e.to_vec());
    }

    #[test]
    fn clip_rescales_free_entries() {
        let v = clip_propensity(&[0.0, 0.5, 0.5], 0.01).unwrap();
        assert_abs_diff_eq!(v[0], 0.01, epsilon = 1e-15);
        assert_abs_diff_eq!(v[1], 0.495, epsilon = 1e-15);
        assert_abs_diff_eq!(v[2], 0.495, epsilon = 1e-15);
    }

    #[test]
    fn clip_infeasible_threshold_rejected() {
        let err = clip_propensity(&[0.25; 4], 0.3).unwrap_err();
        assert!(matches!(err, GcfError::InfeasibleXi { .. }));
        assert!(clip_propensity(&[0.5, 0.5], 0.6).is_err());
    }

    #[test]
    fn residual_variance_near_zero_on_noiseless_fit() {
        use crate::data_model::Dataset;
        let x = DMatrix::from_column_slice(6, 1, &[0.0, 1.0, 2.0, 3.0, 4.0, 5.0]);
        let y: Vec<f64> = (0..6).map(|i| 1.0 + 2.0 * i as f64).collect();
        let d = Dataset::new(x, vec![1, 2, 1, 2, 1, 2], y, 2).unwrap();
        let rows: Vec<usize> = (0..6).collect();
        let om = fit_outcome_model(&d, &rows, &LearnerSpec::linear()).unwrap();
        assert!(om.residual_variance[0] < 1e-18);
        assert!(om.residual_variance[1] < 1e-18);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn predictions_are_probability_vectors(
                coefs in proptest::collection::vec(-50.0f64..50.0, 6),
                x in proptest::collection::vec(-20.0f64..20.0, 2),
            ) {
                let model = PropensityModel {
                    coefficients: DMatrix::from_row_slice(2, 3, &coefs),
                    n_arms: 3,
                    iterations: 0,
                    final_grad_norm: 0.0,
                    converged: true,
                };
                let probs = predict_propensity(&model, &x);
                let sum: f64 = probs.iter().sum();
                prop_assert!((sum - 1.0).abs() < 1e-12);
                for p in probs {
                    prop_assert!((0.0..=1.0).contains(&p));
                }
            }

            #[test]
            fn clipping_is_idempotent(
                raw in proptest::collection::vec(0.0f64..1.0, 2..6),
                xi in 1e-4f64..0.15,
            ) {
                let total: f64 = raw.iter().sum();
                prop_assume!(total > 1e-6);
                let e: Vec<f64> = raw.iter().map(|v| v / total).collect();
                let once = clip_propensity(&e, xi).unwrap();
                let twice = clip_propensity(&once, xi).unwrap();
                prop_assert_eq!(once, twice);
            }

            #[test]
            fn clipped_entries_stay_in_band(
                raw in proptest::collection::vec(0.0f64..1.0, 2..6),
                xi in 1e-4f64..0.15,
            ) {
                let total: f64 = raw.iter().sum();
                prop_assume!(total > 1e-6);
                let e: Vec<f64> = raw.iter().map(|v| v / total).collect();
                let v = clip_propensity(&e, xi).unwrap();
                for value in v {
                    prop_assert!(value >= xi && value <= 1.0 - xi);
                }
            }
        }
    }
}
