//! K-fold partitions and out-of-fold nuisance predictions.
//!
//! Cross-fitting splits the sample into `K` disjoint folds. For each fold
//! `k`, both nuisance models are fit on the complement and evaluated only on
//! the held-out units, so a unit's predictions never depend on its own row.
//! That exclusion is what lets flexible learners be plugged in without
//! empirical-process conditions; the fitted objects otherwise behave like
//! fixed functions.
//!
//! Folds are stratified by arm by default: each arm's units are spread
//! evenly across folds, so every training complement contains every arm even
//! when an arm is small.

use nalgebra::DMatrix;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::data_model::{positivity_diagnostic, Dataset, PositivityReport};
use crate::error::{GcfError, Result};
use crate::nuisance::{clip_in_place, fit_outcome_model, fit_propensity_model, NuisanceSpec};

/// A partition of unit indices into `K` folds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoldPlan {
    /// Number of folds.
    pub k: usize,
    /// `assignment[i]` is the fold of unit `i`, in `1..=k`.
    pub assignment: Vec<usize>,
    /// Seed the partition was drawn with.
    pub seed: u64,
}

impl FoldPlan {
    /// Number of units covered by the plan.
    pub fn n(&self) -> usize {
        self.assignment.len()
    }

    /// Unit indices in fold `fold`.
    pub fn fold_indices(&self, fold: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.assignment[i] == fold)
            .collect()
    }

    /// Unit indices outside fold `fold`: the training set for that fold.
    pub fn complement_indices(&self, fold: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&i| self.assignment[i] != fold)
            .collect()
    }

    /// Fold sizes, indexed by fold minus one.
    pub fn fold_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &f in &self.assignment {
            sizes[f - 1] += 1;
        }
        sizes
    }
}

/// Fold of unit `i` under the plan.
pub fn fold_of(plan: &FoldPlan, i: usize) -> Result<usize> {
    plan.assignment
        .get(i)
        .copied()
        .ok_or(GcfError::IndexOutOfRange {
            index: i,
            n: plan.n(),
        })
}

/// Randomly partitions the dataset into `k` near-equal folds.
///
/// With `stratified` set, the split is performed within each arm and
/// merged, so every training complement contains every arm; this requires
/// each arm to hold at least `k` units. Deterministic given `seed`.
pub fn make_folds(d: &Dataset, k: usize, seed: u64, stratified: bool) -> Result<FoldPlan> {
    let n = d.n();
    if k < 2 || k > n {
        return Err(GcfError::InvalidFoldCount {
            k,
            n,
            reason: "need 2 <= K <= n".into(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignment = vec![0usize; n];
    if stratified {
        let counts = crate::data_model::arm_counts(d).counts;
        for (arm_idx, &c) in counts.iter().enumerate() {
            if c < k {
                return Err(GcfError::InvalidFoldCount {
                    k,
                    n,
                    reason: format!("arm {} has {c} units, fewer than K", arm_idx + 1),
                });
            }
        }
        // A single round-robin counter runs across arms, keeping both the
        // within-arm and the overall fold sizes within one of each other.
        let mut counter = 0usize;
        for arm in 1..=d.n_arms {
            let mut members: Vec<usize> = (0..n).filter(|&i| d.treatments[i] == arm).collect();
            members.shuffle(&mut rng);
            for i in members {
                assignment[i] = counter % k + 1;
                counter += 1;
            }
        }
    } else {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        for (pos, &i) in order.iter().enumerate() {
            assignment[i] = pos % k + 1;
        }
    }
    Ok(FoldPlan {
        k,
        assignment,
        seed,
    })
}

/// Out-of-fold nuisance predictions for every unit.
#[derive(Debug, Clone)]
pub struct NuisancePredictions {
    /// `mu_hat[(i, j - 1)]` is the outcome prediction for unit `i` under arm
    /// `j`, from the models fit without unit `i`'s fold.
    pub mu_hat: DMatrix<f64>,
    /// Out-of-fold propensity vectors, clipped into `[xi, 1 - xi]`.
    pub e_hat: DMatrix<f64>,
    /// Per-unit flag: true when clipping changed the propensity row.
    pub clipped: Vec<bool>,
    /// Overlap diagnostic computed on the raw (pre-clipping) propensities.
    pub positivity: PositivityReport,
}

impl NuisancePredictions {
    /// Wraps externally supplied prediction matrices, validating shapes and
    /// the simplex constraint, then clipping with `xi`.
    pub fn from_matrices(mu_hat: DMatrix<f64>, e_hat: DMatrix<f64>, xi: f64) -> Result<Self> {
        if mu_hat.nrows() != e_hat.nrows() || mu_hat.ncols() != e_hat.ncols() {
            return Err(GcfError::Config(format!(
                "prediction shapes differ: mu {}x{}, e {}x{}",
                mu_hat.nrows(),
                mu_hat.ncols(),
                e_hat.nrows(),
                e_hat.ncols()
            )));
        }
        for i in 0..e_hat.nrows() {
            let sum: f64 = e_hat.row(i).iter().sum();
            if (sum - 1.0).abs() > 1e-8 || e_hat.row(i).iter().any(|&v| v < 0.0) {
                return Err(GcfError::SimplexViolation { unit: i, sum });
            }
        }
        let positivity = positivity_diagnostic(&e_hat, xi)?;
        let mut e_hat = e_hat;
        let mut clipped = vec![false; e_hat.nrows()];
        for i in 0..e_hat.nrows() {
            let mut row: Vec<f64> = e_hat.row(i).iter().copied().collect();
            clipped[i] = clip_in_place(&mut row, xi)?;
            for (j, v) in row.iter().enumerate() {
                e_hat[(i, j)] = *v;
            }
        }
        Ok(NuisancePredictions {
            mu_hat,
            e_hat,
            clipped,
            positivity,
        })
    }
}

/// Fits both nuisance models once per fold and assembles held-out
/// predictions for every unit.
///
/// The per-fold fits are independent and run in parallel; results are
/// merged in fold order, so the output is identical for any worker count.
pub fn fit_out_of_fold(
    d: &Dataset,
    plan: &FoldPlan,
    spec: &NuisanceSpec,
    xi: f64,
) -> Result<NuisancePredictions> {
    if plan.n() != d.n() {
        return Err(GcfError::Config(format!(
            "fold plan covers {} units, dataset has {}",
            plan.n(),
            d.n()
        )));
    }
    // Held-out rows plus their outcome and propensity predictions.
    type FoldBlock = (Vec<usize>, DMatrix<f64>, DMatrix<f64>);
    let per_fold: Vec<Result<FoldBlock>> = (1..=plan.k)
        .into_par_iter()
        .map(|fold| {
            let train = plan.complement_indices(fold);
            let test = plan.fold_indices(fold);
            let map_empty = |e: GcfError| match e {
                GcfError::EmptyArm { arm } => GcfError::EmptyArmInFold { fold, arm },
                other => other,
            };
            let om = fit_outcome_model(d, &train, &spec.outcome).map_err(map_empty)?;
            let pm = fit_propensity_model(d, &train, &spec.propensity).map_err(map_empty)?;
            let mu = om.predict_matrix(&d.covariates, &test);
            let e = pm.predict_matrix(&d.covariates, &test);
            Ok((test, mu, e))
        })
        .collect();

    let n = d.n();
    let j = d.n_arms;
    let mut mu_hat = DMatrix::zeros(n, j);
    let mut e_hat = DMatrix::zeros(n, j);
    for block in per_fold {
        let (test, mu, e) = block?;
        for (r, &i) in test.iter().enumerate() {
            for a in 0..j {
                mu_hat[(i, a)] = mu[(r, a)];
                e_hat[(i, a)] = e[(r, a)];
            }
            debug_assert!((e.row(r).iter().sum::<f64>() - 1.0).abs() < 1e-10);
        }
    }

    let positivity = positivity_diagnostic(&e_hat, xi)?;
    let mut clipped = vec![false; n];
    for i in 0..n {
        let mut row: Vec<f64> = e_hat.row(i).iter().copied().collect();
        clipped[i] = clip_in_place(&mut row, xi)?;
        for (a, v) in row.iter().enumerate() {
            e_hat[(i, a)] = *v;
        }
    }

    Ok(NuisancePredictions {
        mu_hat,
        e_hat,
        clipped,
        positivity,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use nalgebra::DMatrix;

    fn toy(n: usize, n_arms: usize) -> Dataset {
        let treatments: Vec<usize> = (0..n).map(|i| i % n_arms + 1).collect();
        let outcomes: Vec<f64> = (0..n).map(|i| i as f64).collect();
        let covariates = DMatrix::from_fn(n, 1, |i, _| i as f64);
        Dataset::new(covariates, treatments, outcomes, n_arms).unwrap()
    }

    #[test]
    fn folds_partition_evenly() {
        let d = toy(6, 2);
        let plan = make_folds(&d, 3, 1, false).unwrap();
        let sizes = plan.fold_sizes();
        assert_eq!(sizes, [2, 2, 2]);
        let mut seen = [false; 6];
        for fold in 1..=3 {
            for i in plan.fold_indices(fold) {
                assert!(!seen[i]);
                seen[i] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn fold_sizes_differ_by_at_most_one() {
        let d = toy(7, 2);
        let plan = make_folds(&d, 3, 5, false).unwrap();
        let mut sizes = plan.fold_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 3]);
    }

    #[test]
    fn same_seed_reproduces_plan() {
        let d = toy(40, 3);
        let a = make_folds(&d, 4, 99, true).unwrap();
        let b = make_folds(&d, 4, 99, true).unwrap();
        assert_eq!(a, b);
        let c = make_folds(&d, 4, 100, true).unwrap();
        assert_ne!(a.assignment, c.assignment);
    }

    #[test]
    fn stratified_folds_cover_every_arm() {
        let d = toy(31, 3);
        let plan = make_folds(&d, 4, 2, true).unwrap();
        let mut sizes = plan.fold_sizes();
        sizes.sort_unstable();
        assert!(sizes[3] - sizes[0] <= 1);
        for fold in 1..=4 {
            let train = plan.complement_indices(fold);
            for arm in 1..=3 {
                assert!(
                    train.iter().any(|&i| d.treatments[i] == arm),
                    "fold {fold} complement missing arm {arm}"
                );
            }
        }
    }

    #[test]
    fn stratified_rejects_small_arm() {
        let mut d = toy(9, 3);
        // Shrink arm 3 to two units.
        d.treatments = vec![1, 1, 1, 2, 2, 2, 2, 3, 3];
        let err = make_folds(&d, 3, 0, true).unwrap_err();
        assert!(err.to_string().contains("fewer than K"));
    }

    #[test]
    fn fold_count_bounds_checked() {
        let d = toy(5, 2);
        assert!(make_folds(&d, 1, 0, false).is_err());
        assert!(make_folds(&d, 6, 0, false).is_err());
        assert!(make_folds(&d, 5, 0, false).is_ok());
    }

    #[test]
    fn fold_of_looks_up_assignment() {
        let d = toy(6, 2);
        let plan = make_folds(&d, 3, 1, false).unwrap();
        for i in 0..6 {
            let f = fold_of(&plan, i).unwrap();
            assert!(plan.fold_indices(f).contains(&i));
        }
        assert!(matches!(
            fold_of(&plan, 6),
            Err(GcfError::IndexOutOfRange { index: 6, n: 6 })
        ));
    }

    #[test]
    fn constant_learner_baseline() {
        // With one covariate equal across units and equal outcomes within
        // each arm, the fits are constants and the propensities equal the
        // training frequencies.
        let n = 12;
        let treatments: Vec<usize> = (0..n).map(|i| i % 2 + 1).collect();
        let outcomes: Vec<f64> = treatments.iter().map(|&z| z as f64 * 10.0).collect();
        let covariates = DMatrix::zeros(n, 0);
        let d = Dataset::new(covariates, treatments, outcomes, 2).unwrap();
        let plan = make_folds(&d, 2, 7, true).unwrap();
        let np = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), 1e-3).unwrap();
        for i in 0..n {
            assert!((np.mu_hat[(i, 0)] - 10.0).abs() < 1e-8);
            assert!((np.mu_hat[(i, 1)] - 20.0).abs() < 1e-8);
            assert!((np.e_hat[(i, 0)] - 0.5).abs() < 1e-6);
            assert!((np.e_hat[(i, 1)] - 0.5).abs() < 1e-6);
        }
        assert_eq!(np.positivity.n_violations, 0);
    }

    #[test]
    fn noiseless_linear_model_recovered_out_of_fold() {
        // Nine units, one covariate, y = 2x + 1 in both arms, no noise:
        // each training complement has six points, enough to recover the
        // line exactly, so held-out predictions match observed outcomes.
        let n = 9;
        let treatments: Vec<usize> = (0..n).map(|i| i % 2 + 1).collect();
        let covariates = DMatrix::from_fn(n, 1, |i, _| i as f64);
        let outcomes: Vec<f64> = (0..n).map(|i| 2.0 * i as f64 + 1.0).collect();
        let d = Dataset::new(covariates, treatments, outcomes, 2).unwrap();
        let plan = make_folds(&d, 3, 3, true).unwrap();
        let np = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), 1e-3).unwrap();
        for i in 0..n {
            let z = d.treatments[i];
            assert!(
                (np.mu_hat[(i, z - 1)] - d.outcomes[i]).abs() < 1e-6,
                "unit {i}: predicted {} observed {}",
                np.mu_hat[(i, z - 1)],
                d.outcomes[i]
            );
        }
    }

    #[test]
    fn predictions_ignore_own_fold_outcomes() {
        let n = 30;
        let treatments: Vec<usize> = (0..n).map(|i| i % 3 + 1).collect();
        let covariates = DMatrix::from_fn(n, 2, |i, c| ((i * (c + 2)) % 7) as f64);
        let outcomes: Vec<f64> = (0..n).map(|i| (i as f64).sin() * 3.0).collect();
        let d = Dataset::new(covariates, treatments, outcomes, 3).unwrap();
        let plan = make_folds(&d, 3, 11, true).unwrap();
        let np = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), 1e-3).unwrap();

        // Perturb the outcome of one unit in fold 1; predictions for every
        // fold-1 unit must be bitwise unchanged.
        let fold1 = plan.fold_indices(1);
        let mut d2 = d.clone();
        d2.outcomes[fold1[0]] += 100.0;
        let np2 = fit_out_of_fold(&d2, &plan, &NuisanceSpec::default(), 1e-3).unwrap();
        for &i in &fold1 {
            for a in 0..3 {
                assert_eq!(np.mu_hat[(i, a)], np2.mu_hat[(i, a)]);
                assert_eq!(np.e_hat[(i, a)], np2.e_hat[(i, a)]);
            }
        }
        // Other folds trained on the perturbed unit, so their outcome
        // predictions move.
        let fold2 = plan.fold_indices(2);
        assert!(fold2
            .iter()
            .any(|&i| (0..3).any(|a| np.mu_hat[(i, a)] != np2.mu_hat[(i, a)])));
    }

    #[test]
    fn refit_is_bit_reproducible() {
        let d = toy(24, 3);
        let plan = make_folds(&d, 3, 17, true).unwrap();
        let a = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), 1e-3).unwrap();
        let b = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), 1e-3).unwrap();
        assert_eq!(a.mu_hat, b.mu_hat);
        assert_eq!(a.e_hat, b.e_hat);
        assert_eq!(a.clipped, b.clipped);
    }

    #[test]
    fn missing_arm_in_complement_names_fold_and_arm() {
        // Arm 3 sits entirely inside fold 1, so fold 1's training
        // complement has no arm-3 units.
        let n = 9;
        let treatments = vec![3, 3, 3, 1, 2, 1, 2, 1, 2];
        let covariates = DMatrix::from_fn(n, 1, |i, _| i as f64);
        let outcomes = vec![0.0; n];
        let d = Dataset::new(covariates, treatments, outcomes, 3).unwrap();
        let plan = FoldPlan {
            k: 3,
            assignment: vec![1, 1, 1, 2, 2, 2, 3, 3, 3],
            seed: 0,
        };
        let err = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), 1e-3).unwrap_err();
        match err {
            GcfError::EmptyArmInFold { fold, arm } => {
                assert_eq!((fold, arm), (1, 3));
            }
            other => panic!("unexpected error {other}"),
        }
        assert!(GcfError::EmptyArmInFold { fold: 1, arm: 3 }
            .to_string()
            .contains("empty arm in training fold"));
    }
}
