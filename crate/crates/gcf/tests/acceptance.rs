//! Statistical acceptance suite. Every test here runs a full-scale Monte
//! Carlo study or an exact algebraic check against reference values fixed in
//! advance, and prints one `PASS`/`FAIL` line per clause so `cargo test
//! -- --nocapture` reads as a scoreboard. A test panics when any of its
//! clauses fail.
//!
//! The reference RMSE, coverage, and bias values encode how the estimators
//! are expected to behave on the built-in designs at the pinned seed. They
//! are tolerance bands, not bit-exact snapshots: a correct implementation
//! lands inside them from any machine.

use std::sync::OnceLock;

use nalgebra::{DMatrix, DVector};
use rayon::prelude::*;
use statrs::distribution::{ContinuousCDF, Normal};

use gcf::crossfit::{fit_out_of_fold, make_folds, NuisancePredictions};
use gcf::data_model::{positivity_diagnostic, Dataset, PairIndex};
use gcf::estimators::normal::inverse_normal_cdf;
use gcf::estimators::{
    aipw_from_predictions, dif_estimate, gcf_estimate, gcf_estimate_with, oracle_gaipw,
    pseudo_outcome, variance_estimate, DenominatorStyle, Method,
};
use gcf::nuisance::{fit_ols, NuisanceSpec};
use gcf::simulation::{
    generate_dataset, run_monte_carlo, run_replication, splitmix64, true_ate, MetricsReport,
    MetricsRow, SimulationDesign,
};

/// Prints one scoreboard line and passes the verdict through.
fn clause(ok: bool, label: &str) -> bool {
    println!("{} {label}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn row(report: &MetricsReport, method: Method, j: usize, j_prime: usize) -> &MetricsRow {
    report
        .rows
        .iter()
        .find(|r| r.method == method && r.pair.j == j && r.pair.j_prime == j_prime)
        .expect("metrics row missing")
}

/// The reference study: the adequate-overlap design exactly as shipped
/// (N = 1500, K = 3, R = 500, seed 1). Shared by the calibration test and
/// the large-sample comparison, so it runs once per test binary.
fn reference_study() -> &'static MetricsReport {
    static REPORT: OnceLock<MetricsReport> = OnceLock::new();
    REPORT.get_or_init(|| {
        let design = SimulationDesign::adequate_overlap();
        run_monte_carlo(&design).expect("reference study failed")
    })
}

const PAIRS3: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];

/// Moderate-sample calibration of the cross-fitted estimator on the
/// adequate-overlap design: near-zero bias, RMSE at the reference level,
/// marginal coverage near nominal, and the naive baseline's known bias.
#[test]
fn adequate_overlap_calibration_at_n1500() {
    let gcf_rmse_reference = [0.1286, 0.1528, 0.1970];
    let report = reference_study();
    let mut ok = true;

    for (q, &(j, jp)) in PAIRS3.iter().enumerate() {
        let r = row(report, Method::Gcf, j, jp);
        ok &= clause(
            r.bias.abs() <= 0.02,
            &format!("GCF bias tau_{j}{jp} within +/-0.02 (got {:+.4})", r.bias),
        );
        let (lo, hi) = (0.8 * gcf_rmse_reference[q], 1.2 * gcf_rmse_reference[q]);
        ok &= clause(
            r.rmse >= lo && r.rmse <= hi,
            &format!(
                "GCF rmse tau_{j}{jp} in [{lo:.4}, {hi:.4}] (got {:.4})",
                r.rmse
            ),
        );
        ok &= clause(
            r.coverage >= 0.925 && r.coverage <= 0.965,
            &format!(
                "GCF coverage tau_{j}{jp} in [92.5%, 96.5%] (got {:.1}%)",
                100.0 * r.coverage
            ),
        );
    }

    let dif = row(report, Method::Dif, 1, 2);
    ok &= clause(
        (dif.bias - 0.9018).abs() <= 0.05,
        &format!("DIF bias tau_12 = 0.9018 +/- 0.05 (got {:+.4})", dif.bias),
    );
    ok &= clause(
        report.wall_clock_seconds < 300.0,
        &format!(
            "study finished under 5 minutes (took {:.1}s)",
            report.wall_clock_seconds
        ),
    );
    assert!(ok, "calibration clauses failed; see scoreboard above");
}

/// Quadrupling the sample size must shrink the cross-fitted RMSE at the
/// root-n rate: the N = 6000 value sits near the reference level and
/// strictly below the N = 1500 value.
#[test]
fn adequate_overlap_rmse_shrinks_with_n() {
    let mut design = SimulationDesign::adequate_overlap();
    design.n = 6000;
    design.replications = 300;
    design.estimators = vec![Method::Gcf];
    let report = run_monte_carlo(&design).expect("study failed");

    let large = row(&report, Method::Gcf, 1, 2).rmse;
    let small = row(reference_study(), Method::Gcf, 1, 2).rmse;
    let mut ok = clause(
        (0.8 * 0.0621..=1.2 * 0.0621).contains(&large),
        &format!(
            "GCF rmse tau_12 at N=6000 in [{:.4}, {:.4}] (got {large:.4})",
            0.8 * 0.0621,
            1.2 * 0.0621
        ),
    );
    ok &= clause(
        large < small,
        &format!("rmse shrinks with n (N=6000: {large:.4} < N=1500: {small:.4})"),
    );
    assert!(ok, "shrinkage clauses failed; see scoreboard above");
}

/// When overlap fails, inverse propensity weights explode and nominal
/// interval calibration is lost: every cross-fitted pair drops below 90%
/// coverage, and the naive baseline collapses below 5%.
#[test]
fn lack_of_overlap_degrades_coverage() {
    let mut design = SimulationDesign::lack_of_overlap();
    design.replications = 300;
    let report = run_monte_carlo(&design).expect("study failed");
    let mut ok = true;

    for &(j, jp) in &PAIRS3 {
        let r = row(&report, Method::Gcf, j, jp);
        ok &= clause(
            r.coverage < 0.90,
            &format!(
                "GCF coverage tau_{j}{jp} below 90% (got {:.1}%)",
                100.0 * r.coverage
            ),
        );
    }
    for &(j, jp) in &PAIRS3 {
        let r = row(&report, Method::Dif, j, jp);
        ok &= clause(
            r.coverage < 0.05,
            &format!(
                "DIF coverage tau_{j}{jp} below 5% (got {:.1}%)",
                100.0 * r.coverage
            ),
        );
    }
    assert!(ok, "degradation clauses failed; see scoreboard above");
}

/// Feeding all three estimators the true nuisance functions collapses them
/// onto the same statistic: with no fitting left to do, the cross-fitted
/// route, the full-sample route, and the oracle route evaluate the same
/// pseudo-outcome mean.
#[test]
fn true_nuisances_collapse_the_estimators() {
    let alpha = 0.05;
    let deviations: Vec<f64> = (0..100u64)
        .into_par_iter()
        .map(|t| {
            let mut design = SimulationDesign::adequate_overlap();
            design.n = 150 + (t as usize % 8) * 50;
            let seed = splitmix64(0xACCE_5500 ^ t);
            let (d, true_mu, true_e) = generate_dataset(&design, seed).expect("dataset");
            let plan = make_folds(&d, 3, splitmix64(seed ^ 1), true).expect("folds");
            let np = NuisancePredictions {
                mu_hat: true_mu.clone(),
                e_hat: true_e.clone(),
                clipped: vec![false; d.n()],
                positivity: positivity_diagnostic(&true_e, 1e-3).expect("diagnostic"),
            };

            let gcf = gcf_estimate(&d, &plan, &np, alpha).expect("gcf");
            let gaipw = aipw_from_predictions(
                &d,
                &true_mu,
                &true_e,
                alpha,
                DenominatorStyle::ArmSpecific,
                Method::Gaipw,
                None,
            )
            .expect("gaipw");
            let oracle = oracle_gaipw(&d, &true_mu, &true_e, alpha).expect("oracle");

            let mut dev = 0.0f64;
            for a in [&gaipw, &oracle] {
                dev = dev.max((&gcf.estimates - &a.estimates).abs().max());
                for (va, vb) in gcf.variance.iter().zip(&a.variance) {
                    dev = dev.max((va - vb).abs());
                }
            }
            dev
        })
        .collect();

    let worst = deviations.into_iter().fold(0.0f64, f64::max);
    let ok = clause(
        worst <= 1e-12,
        &format!("GCF, GAIPW, ORACLE agree pairwise on 100 datasets (max |diff| {worst:.2e})"),
    );
    assert!(ok, "estimators diverged under true nuisances");
}

/// Mean cross-fitted bias per pair when one nuisance is corrupted and the
/// other keeps its ordinary out-of-fold fit.
fn corrupted_bias(corrupt_outcome: bool) -> [f64; 3] {
    let mut design = SimulationDesign::adequate_overlap();
    design.n = 2000;
    let replications = 200u64;
    let truth = true_ate(&design).expect("truth");

    let sums: Vec<[f64; 3]> = (0..replications)
        .into_par_iter()
        .map(|rep| {
            let s0 = splitmix64(splitmix64(1) ^ rep);
            let (d, _, _) = generate_dataset(&design, splitmix64(s0 ^ 1)).expect("dataset");
            let plan = make_folds(&d, design.k, splitmix64(s0 ^ 2), true).expect("folds");
            let np = fit_out_of_fold(&d, &plan, &NuisanceSpec::default(), design.xi).expect("fits");
            let j = design.n_arms as f64;
            let np = if corrupt_outcome {
                NuisancePredictions {
                    mu_hat: np.mu_hat.map(|v| v + 5.0),
                    ..np
                }
            } else {
                NuisancePredictions {
                    e_hat: np.e_hat.map(|v| 0.5 * v + 0.5 / j),
                    ..np
                }
            };
            let est = gcf_estimate(&d, &plan, &np, design.alpha).expect("estimate");
            let mut errors = [0.0f64; 3];
            for (q, &(a, b)) in PAIRS3.iter().enumerate() {
                errors[q] = est.estimate(a, b) - truth[(a - 1, b - 1)];
            }
            errors
        })
        .collect();

    let mut bias = [0.0f64; 3];
    for errors in &sums {
        for q in 0..3 {
            bias[q] += errors[q] / replications as f64;
        }
    }
    bias
}

/// Double robustness: wrecking one nuisance while the other keeps an
/// honest fit must leave the mean effect estimate near the truth. One arm
/// shifts every outcome prediction by +5; the other mixes the fitted
/// propensities halfway toward uniform.
#[test]
fn single_nuisance_corruption_keeps_bias_small() {
    let mut ok = true;
    for (corrupt_outcome, label) in [(true, "outcome +5"), (false, "propensity mixed 50%")] {
        let bias = corrupted_bias(corrupt_outcome);
        for (q, &(j, jp)) in PAIRS3.iter().enumerate() {
            ok &= clause(
                bias[q].abs() <= 0.1,
                &format!(
                    "{label}: |GCF bias| tau_{j}{jp} at most 0.1 (got {:+.4})",
                    bias[q]
                ),
            );
        }
    }
    assert!(ok, "double-robustness clauses failed; see scoreboard above");
}

/// The variance estimator targets the population quantity
/// `E[sigma^2/e_j + sigma^2/e_j' + (mu_j - mu_j' - tau)^2]`. A million-draw
/// Monte Carlo of that expectation pins the target; the mean estimate over
/// 200 studies at N = 4500 must land within 5%.
#[test]
fn variance_estimator_matches_population_value() {
    let mut mc_design = SimulationDesign::adequate_overlap();
    mc_design.n = 1_000_000;
    let truth = true_ate(&mc_design).expect("truth");
    let (_, true_mu, true_e) = generate_dataset(&mc_design, 0xEC10).expect("draws");
    let mut target = [0.0f64; 3];
    for (q, &(j, jp)) in PAIRS3.iter().enumerate() {
        let tau = truth[(j - 1, jp - 1)];
        let mut sum = 0.0;
        for i in 0..mc_design.n {
            let gap = true_mu[(i, j - 1)] - true_mu[(i, jp - 1)] - tau;
            sum += 1.0 / true_e[(i, j - 1)] + 1.0 / true_e[(i, jp - 1)] + gap * gap;
        }
        target[q] = sum / mc_design.n as f64;
    }

    let mut design = SimulationDesign::adequate_overlap();
    design.n = 4500;
    design.replications = 200;
    design.estimators = vec![Method::Gcf];
    let report = run_monte_carlo(&design).expect("study failed");

    let mut ok = true;
    for (q, &(j, jp)) in PAIRS3.iter().enumerate() {
        let mean = row(&report, Method::Gcf, j, jp).mean_variance;
        let rel = (mean - target[q]) / target[q];
        ok &= clause(
            rel.abs() <= 0.05,
            &format!(
                "mean variance estimate tau_{j}{jp} within 5% of {:.2} (got {:.2}, {:+.1}%)",
                target[q],
                mean,
                100.0 * rel
            ),
        );
    }
    assert!(ok, "variance clauses failed; see scoreboard above");
}

/// Root-n standardized estimates are asymptotically standard normal; a
/// Kolmogorov-Smirnov check at N = 4500 over 500 studies must accept at
/// the 1% level (critical value 1.62762).
#[test]
fn standardized_estimates_are_normal() {
    let mut design = SimulationDesign::adequate_overlap();
    design.n = 4500;
    design.replications = 500;
    design.estimators = vec![Method::Gcf];
    let tau = true_ate(&design).expect("truth")[(0, 1)];

    let mut t: Vec<f64> = (0..design.replications)
        .into_par_iter()
        .map(|rep| {
            let result = run_replication(&design, rep).expect("replication");
            let summary = result.estimates[0].pair(PairIndex::new(1, 2).unwrap());
            (design.n as f64).sqrt() * (summary.estimate - tau) / summary.variance.sqrt()
        })
        .collect();
    t.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let phi = Normal::new(0.0, 1.0).unwrap();
    let r = t.len() as f64;
    let mut d_stat = 0.0f64;
    for (i, &x) in t.iter().enumerate() {
        let f = phi.cdf(x);
        d_stat = d_stat.max(((i + 1) as f64 / r - f).max(f - i as f64 / r));
    }
    let ks = r.sqrt() * d_stat;
    let ok = clause(
        ks < 1.62762,
        &format!("KS statistic sqrt(R) * D below 1.62762 at the 1% level (got {ks:.4})"),
    );
    assert!(ok, "standardized estimates rejected normality");
}

/// Six arms mean fifteen contrasts sharing one set of per-arm fits; bias
/// and coverage must hold across all of them at once.
#[test]
fn six_arm_bias_and_coverage() {
    let mut design = SimulationDesign::six_arms();
    design.n = 6000;
    design.replications = 200;
    design.estimators = vec![Method::Gcf];
    let report = run_monte_carlo(&design).expect("study failed");

    let mut ok = true;
    let mut worst_bias = 0.0f64;
    let mut worst_coverage = 1.0f64;
    for pair in PairIndex::all(design.n_arms) {
        let r = row(&report, Method::Gcf, pair.j, pair.j_prime);
        worst_bias = worst_bias.max(r.bias.abs());
        worst_coverage = worst_coverage.min(r.coverage);
        ok &= r.bias.abs() <= 0.05 && r.coverage >= 0.85;
    }
    ok = clause(
        ok,
        &format!(
            "all 15 pairs: |bias| at most 0.05 and coverage at least 85% \
             (worst bias {worst_bias:.4}, worst coverage {:.1}%)",
            100.0 * worst_coverage
        ),
    );
    assert!(ok, "six-arm clauses failed");
}

/// Frozen-value oracles: small examples whose answers were computed by an
/// independent route (hand arithmetic, the normal-equations closed form, a
/// high-precision quantile reference, the closed-form covariate means)
/// before the implementation existed.
#[test]
fn frozen_value_oracles() {
    let mut ok = true;

    // Four-unit two-arm table, worked by hand. Pseudo-outcomes:
    //   unit 1 (z=1, y=2):  0.5 + (2 - 1)/0.4      = 3.0
    //   unit 2 (z=2, y=1):  0.6 - (1 - 0.2)/0.5    = -1.0
    //   unit 3 (z=1, y=-1): -2.0 + (-1 + 0.5)/0.25 = -4.0
    //   unit 4 (z=2, y=3):  -0.5 - (3 - 2.5)/0.2   = -3.0
    // Mean -1.25; sample variance around it 28.75/3.
    let d = Dataset::new(
        DMatrix::zeros(4, 1),
        vec![1, 2, 1, 2],
        vec![2.0, 1.0, -1.0, 3.0],
        2,
    )
    .unwrap();
    let mu = DMatrix::from_row_slice(4, 2, &[1.0, 0.5, 0.8, 0.2, -0.5, 1.5, 2.0, 2.5]);
    let e = DMatrix::from_row_slice(4, 2, &[0.4, 0.6, 0.5, 0.5, 0.25, 0.75, 0.8, 0.2]);
    let np = NuisancePredictions {
        mu_hat: mu.clone(),
        e_hat: e.clone(),
        clipped: vec![false; 4],
        positivity: positivity_diagnostic(&e, 1e-3).unwrap(),
    };
    let s = pseudo_outcome(&d, &np, PairIndex::new(1, 2).unwrap()).unwrap();
    ok &= clause(
        s == vec![3.0, -1.0, -4.0, -3.0],
        "hand pseudo-outcomes reproduced exactly",
    );
    let plan = gcf::crossfit::FoldPlan {
        k: 2,
        assignment: vec![1, 1, 2, 2],
        seed: 0,
    };
    let est = gcf_estimate(&d, &plan, &np, 0.05).unwrap();
    ok &= clause(
        (est.estimate(1, 2) + 1.25).abs() <= 1e-12,
        &format!("hand table estimate -1.25 (got {})", est.estimate(1, 2)),
    );
    ok &= clause(
        (est.variance[0] - 28.75 / 3.0).abs() <= 1e-12,
        &format!("hand table variance 28.75/3 (got {})", est.variance[0]),
    );
    ok &= clause(
        (variance_estimate(&s, -1.25).unwrap() - 28.75 / 3.0).abs() <= 1e-12,
        "direct variance of the hand pseudo-outcomes",
    );

    // Same table under the two-arm complement denominator: unit 3's
    // correction divides by 1 - e_2 = 0.25 either way, but units 2 and 4
    // divide by 1 - e_1 instead of e_2, giving mean -0.78125.
    let est2 = gcf_estimate_with(&d, &plan, &np, 0.05, DenominatorStyle::BinaryComplement).unwrap();
    ok &= clause(
        (est2.estimate(1, 2) + 0.78125).abs() <= 1e-12,
        &format!(
            "complement-denominator estimate -0.78125 (got {})",
            est2.estimate(1, 2)
        ),
    );

    // Difference in means on outcomes (0, 2) vs (1, 4): means 1 and 2.5,
    // sample variances 2 and 4.5, so tau = -1.5 and the asymptotic-scale
    // variance is 4 * (2/2 + 4.5/2) = 13.
    let d2 = Dataset::new(
        DMatrix::zeros(4, 1),
        vec![1, 2, 1, 2],
        vec![0.0, 1.0, 2.0, 4.0],
        2,
    )
    .unwrap();
    let dif = dif_estimate(&d2, 0.05).unwrap();
    ok &= clause(
        (dif.estimate(1, 2) + 1.5).abs() <= 1e-12 && (dif.variance[0] - 13.0).abs() <= 1e-12,
        &format!(
            "difference-in-means hand table (tau {}, variance {})",
            dif.estimate(1, 2),
            dif.variance[0]
        ),
    );

    // Ridge fit versus the normal-equations closed form, an independent
    // solver route.
    let x = DMatrix::from_row_slice(5, 2, &[0.0, 1.0, 1.0, 0.0, 2.0, 1.0, 3.0, -1.0, 4.0, 2.0]);
    let y = DVector::from_row_slice(&[1.0, 0.0, 3.0, 2.0, 7.0]);
    let lambda = 0.3;
    let coef = fit_ols(&x, &y, lambda).unwrap();
    let a = DMatrix::from_fn(5, 3, |i, c| if c == 0 { 1.0 } else { x[(i, c - 1)] });
    let mut penalty = DMatrix::zeros(3, 3);
    penalty[(1, 1)] = lambda;
    penalty[(2, 2)] = lambda;
    let closed = (a.transpose() * &a + penalty).try_inverse().unwrap() * a.transpose() * &y;
    let ridge_dev = (0..3)
        .map(|k| (coef[k] - closed[k]).abs())
        .fold(0.0, f64::max);
    ok &= clause(
        ridge_dev <= 1e-8,
        &format!("ridge fit matches the normal-equations closed form (max |diff| {ridge_dev:.2e})"),
    );

    // Quantiles against high-precision reference values.
    ok &= clause(
        (inverse_normal_cdf(0.975) - 1.959964).abs() <= 1e-6,
        "marginal 95% quantile 1.959964",
    );
    ok &= clause(
        (inverse_normal_cdf(1.0 - 0.05 / 6.0) - 2.394).abs() <= 5e-4,
        "three-pair simultaneous 95% quantile 2.394",
    );

    // Closed-form effects of the adequate-overlap design from the covariate
    // means (1, 2, 1, 1, 0, 1, 1/2).
    let truth = true_ate(&SimulationDesign::adequate_overlap()).unwrap();
    ok &= clause(
        (truth[(0, 1)] + 5.0).abs() <= 1e-12
            && (truth[(0, 2)] + 5.5).abs() <= 1e-12
            && (truth[(1, 2)] + 0.5).abs() <= 1e-12,
        &format!(
            "true effects (-5.0, -5.5, -0.5) (got {}, {}, {})",
            truth[(0, 1)],
            truth[(0, 2)],
            truth[(1, 2)]
        ),
    );

    assert!(ok, "frozen-value clauses failed; see scoreboard above");
}
