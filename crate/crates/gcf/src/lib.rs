//! Cross-fitted doubly robust estimation of pairwise average treatment
//! effects when the treatment takes more than two values.
//!
//! Observational data with `J` treatment arms admit `J * (J - 1) / 2`
//! pairwise contrasts. For each pair this crate forms an augmented inverse
//! propensity weighted pseudo-outcome from fitted outcome regressions and
//! fitted propensity scores, then averages it. Three estimators share that
//! pseudo-outcome:
//!
//! * [`estimators::gcf_estimate`] fits the nuisance models by K-fold
//!   cross-fitting, so every unit is scored with models trained on folds
//!   that exclude it. This is the recommended estimator: it attains the
//!   semiparametric efficiency bound under mild rate conditions on the
//!   nuisance fits and needs no Donsker-style restriction on the learners.
//! * [`estimators::gaipw_estimate`] fits the nuisance models once on the
//!   full sample. Valid for parametric learners, but own-observation reuse
//!   biases it when the learners are adaptive.
//! * [`estimators::dif_estimate`] is the difference in arm means, a
//!   deliberately naive baseline that ignores confounding.
//!
//! Standard errors come from the empirical variance of the pseudo-outcome,
//! and simultaneous confidence intervals apply a Bonferroni correction
//! across all pairs.
//!
//! The [`simulation`] module generates multi-arm observational designs with
//! known effects and runs Monte Carlo studies comparing the estimators. The
//! `gcf` binary exposes both estimation on CSV data and the simulation
//! harness; see the guide chapters under [`guide`] for worked examples.
//!
//! # Quick start
//!
//! ```
//! use gcf::crossfit::{fit_out_of_fold, make_folds};
//! use gcf::estimators::gcf_estimate;
//! use gcf::nuisance::NuisanceSpec;
//! use gcf::simulation::{generate_dataset, SimulationDesign};
//!
//! // Simulate a small three-arm dataset with known effects.
//! let mut design = SimulationDesign::adequate_overlap();
//! design.n = 600;
//! let (data, _true_mu, _true_e) = generate_dataset(&design, 7)?;
//!
//! // Cross-fit the nuisance models, then estimate every pairwise effect.
//! let plan = make_folds(&data, 3, 7, true)?;
//! let predictions = fit_out_of_fold(&data, &plan, &NuisanceSpec::default(), 1e-3)?;
//! let estimate = gcf_estimate(&data, &plan, &predictions, 0.05)?;
//!
//! // One estimate per pair (j, j') with j < j'.
//! assert_eq!(estimate.pairs().len(), 3);
//! # Ok::<(), gcf::GcfError>(())
//! ```

// Indexed loops couple several arrays in the numeric kernels, and the
// negated-comparison guards reject NaN along with out-of-range values.
#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod crossfit;
pub mod data_model;
pub mod error;
pub mod estimators;
pub mod guide;
pub mod nuisance;
mod serde_util;
pub mod simulation;

#[doc(hidden)]
pub mod cli;

pub use error::{GcfError, Result};
