//! Command-line front-end: estimation on CSV data and the Monte Carlo
//! harness.
//!
//! Exit codes: 0 success, 2 usage errors (bad flags), 3 invalid data or
//! configuration, 4 numerical failure during estimation.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::crossfit::{fit_out_of_fold, make_folds};
use crate::data_model::{validate_dataset, Dataset, PositivityReport, RawRecords};
use crate::error::{GcfError, Result};
use crate::estimators::{dif_estimate, gaipw_estimate, gcf_estimate, AteEstimate, Method};
use crate::nuisance::{fit_outcome_model, fit_propensity_model, NuisanceSpec};
use crate::simulation::{run_monte_carlo, MetricsReport, SimulationDesign};

const SCHEMA_VERSION: &str = "1";

#[derive(Parser)]
#[command(
    name = "gcf",
    version,
    about = "Doubly robust pairwise treatment-effect estimation for multi-arm data"
)]
struct Cli {
    /// TOML file supplying defaults for any option; explicit flags win.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,

    /// Cap the worker thread count (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Estimate pairwise treatment effects from a CSV file.
    Estimate(EstimateArgs),
    /// Run a Monte Carlo study on a built-in or custom design.
    Simulate(SimulateArgs),
}

#[derive(Args)]
struct EstimateArgs {
    /// Input CSV with a header row.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,

    /// Name of the treatment column.
    #[arg(long, value_name = "COLUMN")]
    treatment: Option<String>,

    /// Name of the outcome column.
    #[arg(long, value_name = "COLUMN")]
    outcome: Option<String>,

    /// Covariate columns, comma separated (default: all other columns).
    #[arg(long, value_delimiter = ',', value_name = "COLUMNS")]
    covariates: Option<Vec<String>>,

    /// Expected number of arms; treatment labels must then be 1..=J.
    #[arg(long, value_name = "J")]
    arms: Option<usize>,

    /// Estimators to run: any of dif, gaipw, gcf.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    estimators: Option<Vec<String>>,

    /// Cross-fitting folds.
    #[arg(long, value_name = "K")]
    k: Option<usize>,

    /// Propensity clipping threshold.
    #[arg(long, value_name = "XI")]
    xi: Option<f64>,

    /// Simultaneous confidence level complement.
    #[arg(long, value_name = "ALPHA")]
    alpha: Option<f64>,

    /// Seed for the fold split.
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,

    /// Split folds without stratifying by arm.
    #[arg(long)]
    no_stratify: bool,

    /// Write the JSON document here.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Write the text table here as well as to stdout.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
}

#[derive(Args)]
struct SimulateArgs {
    /// Built-in design name: design1-adequate, design2-lack, design3-j6.
    #[arg(value_name = "DESIGN")]
    design: Option<String>,

    /// TOML file describing a custom design (alternative to DESIGN).
    #[arg(long, value_name = "FILE")]
    design_file: Option<PathBuf>,

    /// Override the sample size per replication.
    #[arg(long, value_name = "N")]
    n: Option<usize>,

    /// Override the replication count.
    #[arg(long, value_name = "R")]
    reps: Option<usize>,

    /// Override the base seed.
    #[arg(long, value_name = "SEED")]
    seed: Option<u64>,

    /// Override the cross-fitting fold count.
    #[arg(long, value_name = "K")]
    k: Option<usize>,

    /// Override the estimator set: any of dif, gaipw, gcf, oracle.
    #[arg(long, value_delimiter = ',', value_name = "LIST")]
    estimators: Option<Vec<String>>,

    /// Override the propensity clipping threshold.
    #[arg(long, value_name = "XI")]
    xi: Option<f64>,

    /// Override the confidence level complement.
    #[arg(long, value_name = "ALPHA")]
    alpha: Option<f64>,

    /// Write metric rows as CSV here.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Write the full JSON report here.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,

    /// Write the text table here as well as to stdout.
    #[arg(long, value_name = "FILE")]
    table: Option<PathBuf>,
}

/// Config-file mirror of the command line. Every flag has an equivalent
/// key; explicit flags override file values.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    threads: Option<usize>,
    estimate: Option<EstimateFileConfig>,
    simulate: Option<SimulateFileConfig>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct EstimateFileConfig {
    input: Option<PathBuf>,
    treatment: Option<String>,
    outcome: Option<String>,
    covariates: Option<Vec<String>>,
    arms: Option<usize>,
    estimators: Option<Vec<String>>,
    k: Option<usize>,
    xi: Option<f64>,
    alpha: Option<f64>,
    seed: Option<u64>,
    stratify: Option<bool>,
    output: Option<PathBuf>,
    table: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct SimulateFileConfig {
    design: Option<String>,
    design_file: Option<PathBuf>,
    n: Option<usize>,
    reps: Option<usize>,
    seed: Option<u64>,
    k: Option<usize>,
    estimators: Option<Vec<String>>,
    xi: Option<f64>,
    alpha: Option<f64>,
    output: Option<PathBuf>,
    json: Option<PathBuf>,
    table: Option<PathBuf>,
}

/// Fully resolved estimate invocation, echoed into artifacts.
#[derive(Debug, Serialize)]
struct EstimateConfig {
    input: PathBuf,
    treatment: String,
    outcome: String,
    covariates: Option<Vec<String>>,
    arms: Option<usize>,
    estimators: Vec<Method>,
    k: usize,
    xi: f64,
    alpha: f64,
    seed: u64,
    stratify: bool,
}

/// Runs the CLI and returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            if err.is_numerical() {
                4
            } else {
                3
            }
        }
    }
}

fn dispatch(cli: Cli) -> Result<()> {
    let file: FileConfig = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            toml::from_str(&text)
                .map_err(|e| GcfError::Config(format!("{}: {e}", path.display())))?
        }
        None => FileConfig::default(),
    };
    if let Some(threads) = cli.threads.or(file.threads) {
        if threads == 0 {
            return Err(GcfError::Config("threads must be at least 1".to_string()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| GcfError::Config(format!("thread pool: {e}")))?;
    }
    match cli.command {
        Command::Estimate(args) => cmd_estimate(args, file.estimate.unwrap_or_default()),
        Command::Simulate(args) => cmd_simulate(args, file.simulate.unwrap_or_default()),
    }
}

fn parse_methods(tokens: &[String], allow_oracle: bool) -> Result<Vec<Method>> {
    let mut methods = Vec::with_capacity(tokens.len());
    for token in tokens {
        let method: Method = token.parse()?;
        if method == Method::Oracle && !allow_oracle {
            return Err(GcfError::Config(
                "the oracle estimator needs true nuisance values and is only \
                 available in simulation"
                    .to_string(),
            ));
        }
        if !methods.contains(&method) {
            methods.push(method);
        }
    }
    Ok(methods)
}

fn required<T>(cli: Option<T>, file: Option<T>, flag: &str) -> Result<T> {
    cli.or(file)
        .ok_or_else(|| GcfError::Config(format!("--{flag} is required (flag or config file)")))
}

fn cmd_estimate(args: EstimateArgs, file: EstimateFileConfig) -> Result<()> {
    let config = EstimateConfig {
        input: required(args.input, file.input, "input")?,
        treatment: required(args.treatment, file.treatment, "treatment")?,
        outcome: required(args.outcome, file.outcome, "outcome")?,
        covariates: args.covariates.or(file.covariates),
        arms: args.arms.or(file.arms),
        estimators: parse_methods(
            &args
                .estimators
                .or(file.estimators)
                .unwrap_or_else(|| vec!["gcf".to_string()]),
            false,
        )?,
        k: args.k.or(file.k).unwrap_or(3),
        xi: args.xi.or(file.xi).unwrap_or(1e-3),
        alpha: args.alpha.or(file.alpha).unwrap_or(0.05),
        seed: args.seed.or(file.seed).unwrap_or(1),
        stratify: if args.no_stratify {
            false
        } else {
            file.stratify.unwrap_or(true)
        },
    };
    if !(2..=10).contains(&config.k) {
        return Err(GcfError::Config(format!(
            "k must lie in 2..=10, got {}",
            config.k
        )));
    }

    let raw = read_csv(
        &config.input,
        &config.treatment,
        &config.outcome,
        &config.covariates,
    )?;
    let d = validate_dataset(&raw, config.arms)?;
    let spec = NuisanceSpec::default();

    let mut positivity: Option<PositivityReport> = None;
    let mut estimates = Vec::with_capacity(config.estimators.len());
    for &method in &config.estimators {
        let estimate = match method {
            Method::Dif => dif_estimate(&d, config.alpha)?,
            Method::Gaipw => {
                let rows: Vec<usize> = (0..d.n()).collect();
                let om = fit_outcome_model(&d, &rows, &spec.outcome)?;
                let pm = fit_propensity_model(&d, &rows, &spec.propensity)?;
                if positivity.is_none() {
                    let e = pm.predict_matrix(&d.covariates, &rows);
                    positivity = Some(crate::data_model::positivity_diagnostic(&e, config.xi)?);
                }
                gaipw_estimate(&d, &om, &pm, config.alpha, config.xi)?
            }
            Method::Gcf => {
                let plan = make_folds(&d, config.k, config.seed, config.stratify)?;
                let np = fit_out_of_fold(&d, &plan, &spec, config.xi)?;
                positivity = Some(np.positivity.clone());
                gcf_estimate(&d, &plan, &np, config.alpha)?
            }
            Method::Oracle => unreachable!("rejected during parsing"),
        };
        estimates.push(estimate);
    }

    let table = estimate_table(&d, &config, &estimates, positivity.as_ref());
    print!("{table}");
    if let Some(path) = &args.table.or(file.table) {
        std::fs::write(path, &table)?;
    }
    if let Some(path) = &args.output.or(file.output) {
        #[derive(Serialize)]
        struct Document<'a> {
            schema_version: &'a str,
            config: &'a EstimateConfig,
            positivity: Option<&'a PositivityReport>,
            estimates: &'a [AteEstimate],
        }
        let doc = Document {
            schema_version: SCHEMA_VERSION,
            config: &config,
            positivity: positivity.as_ref(),
            estimates: &estimates,
        };
        write_json(path, &doc)?;
    }
    Ok(())
}

fn read_csv(
    path: &Path,
    treatment: &str,
    outcome: &str,
    covariates: &Option<Vec<String>>,
) -> Result<RawRecords> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .map_err(|e| GcfError::CsvInput(format!("{}: {e}", path.display())))?;
    let headers: Vec<String> = reader
        .headers()
        .map_err(|e| GcfError::CsvInput(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();

    let column = |name: &str| -> Result<usize> {
        headers.iter().position(|h| h == name).ok_or_else(|| {
            GcfError::CsvInput(format!(
                "column '{name}' not found; available: {}",
                headers.join(", ")
            ))
        })
    };
    let treatment_idx = column(treatment)?;
    let outcome_idx = column(outcome)?;
    let covariate_idx: Vec<(usize, String)> = match covariates {
        Some(names) => {
            let mut idx = Vec::with_capacity(names.len());
            for name in names {
                if name == treatment || name == outcome {
                    return Err(GcfError::CsvInput(format!(
                        "column '{name}' already designated as treatment or outcome"
                    )));
                }
                idx.push((column(name)?, name.clone()));
            }
            idx
        }
        None => headers
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != treatment_idx && *i != outcome_idx)
            .map(|(i, h)| (i, h.clone()))
            .collect(),
    };
    if covariate_idx.is_empty() {
        return Err(GcfError::CsvInput(
            "no covariate columns left after removing treatment and outcome".to_string(),
        ));
    }

    let mut raw = RawRecords {
        covariates: Vec::new(),
        treatments: Vec::new(),
        outcomes: Vec::new(),
    };
    for record in reader.records() {
        let record = record.map_err(|e| GcfError::CsvInput(e.to_string()))?;
        let line = record
            .position()
            .map(|p| p.line().to_string())
            .unwrap_or_else(|| "?".to_string());
        let cell = |idx: usize, name: &str| -> Result<&str> {
            record.get(idx).ok_or_else(|| {
                GcfError::CsvInput(format!("line {line}: missing value for column '{name}'"))
            })
        };
        let parse_number = |idx: usize, name: &str| -> Result<f64> {
            let text = cell(idx, name)?;
            text.parse::<f64>().map_err(|_| {
                GcfError::CsvInput(format!(
                    "line {line}: column '{name}' has non-numeric value '{text}'"
                ))
            })
        };
        let mut row = Vec::with_capacity(covariate_idx.len());
        for (idx, name) in &covariate_idx {
            row.push(parse_number(*idx, name)?);
        }
        raw.covariates.push(row);
        raw.treatments
            .push(cell(treatment_idx, treatment)?.to_string());
        raw.outcomes.push(parse_number(outcome_idx, outcome)?);
    }
    Ok(raw)
}

fn estimate_table(
    d: &Dataset,
    config: &EstimateConfig,
    estimates: &[AteEstimate],
    positivity: Option<&PositivityReport>,
) -> String {
    let mut out = String::new();
    let level = 100.0 * (1.0 - config.alpha);
    out.push_str(&format!(
        "n={} arms={} k={} xi={} alpha={} seed={}\n",
        d.n(),
        d.n_arms,
        config.k,
        config.xi,
        config.alpha,
        config.seed
    ));
    if let Some(report) = positivity {
        let min = report
            .per_arm_min
            .iter()
            .map(|v| format!("{v:.4}"))
            .collect::<Vec<_>>()
            .join(" ");
        let max = report
            .per_arm_max
            .iter()
            .map(|v| format!("{v:.4}"))
            .collect::<Vec<_>>()
            .join(" ");
        out.push_str(&format!(
            "positivity: min per arm [{min}], max per arm [{max}], \
             {} value(s) outside [xi, 1-xi], overlap concern: {}\n",
            report.n_violations,
            if report.overlap_concern { "yes" } else { "no" }
        ));
    } else {
        out.push_str("positivity: not assessed (no propensity model requested)\n");
    }
    out.push_str(&format!(
        "{:<10} {:<10} {:>12} {:>12} {:>28}\n",
        "estimator",
        "pair",
        "estimate",
        "std.error",
        format!("{level:.0}% simultaneous CI")
    ));
    for estimate in estimates {
        for pair in estimate.pairs() {
            let arm_a = &d.arm_labels[pair.pair.j - 1];
            let arm_b = &d.arm_labels[pair.pair.j_prime - 1];
            out.push_str(&format!(
                "{:<10} {:<10} {:>12.6} {:>12.6} {:>28}\n",
                estimate.method.to_string(),
                format!("{arm_a} vs {arm_b}"),
                pair.estimate,
                pair.std_error,
                format!("[{:.6}, {:.6}]", pair.ci_lower, pair.ci_upper),
            ));
        }
    }
    out
}

fn cmd_simulate(args: SimulateArgs, file: SimulateFileConfig) -> Result<()> {
    let name = args.design.or(file.design);
    let design_file = args.design_file.or(file.design_file);
    let mut design = match (&name, &design_file) {
        (Some(_), Some(_)) => {
            return Err(GcfError::Config(
                "give either a design name or --design-file, not both".to_string(),
            ))
        }
        (Some(name), None) => SimulationDesign::by_name(name).ok_or_else(|| {
            GcfError::Config(format!(
                "unknown design '{name}'; valid names: {}",
                SimulationDesign::builtin_names().join(", ")
            ))
        })?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            toml::from_str::<SimulationDesign>(&text)
                .map_err(|e| GcfError::Config(format!("{}: {e}", path.display())))?
        }
        (None, None) => {
            return Err(GcfError::Config(format!(
                "no design given; valid names: {}",
                SimulationDesign::builtin_names().join(", ")
            )))
        }
    };

    if let Some(n) = args.n.or(file.n) {
        design.n = n;
    }
    if let Some(reps) = args.reps.or(file.reps) {
        design.replications = reps;
    }
    if let Some(seed) = args.seed.or(file.seed) {
        design.base_seed = seed;
    }
    if let Some(k) = args.k.or(file.k) {
        if !(2..=10).contains(&k) {
            return Err(GcfError::Config(format!("k must lie in 2..=10, got {k}")));
        }
        design.k = k;
    }
    if let Some(tokens) = args.estimators.or(file.estimators) {
        design.estimators = parse_methods(&tokens, true)?;
    }
    if let Some(xi) = args.xi.or(file.xi) {
        design.xi = xi;
    }
    if let Some(alpha) = args.alpha.or(file.alpha) {
        design.alpha = alpha;
    }
    design.validate()?;

    let report = run_monte_carlo(&design)?;

    let table = metrics_table(&design, &report);
    print!("{table}");
    if let Some(path) = &args.table.or(file.table) {
        std::fs::write(path, &table)?;
    }
    if let Some(path) = &args.output.or(file.output) {
        write_metrics_csv(path, &report)?;
    }
    if let Some(path) = &args.json.or(file.json) {
        #[derive(Serialize)]
        struct Document<'a> {
            schema_version: &'a str,
            config: &'a SimulationDesign,
            report: &'a MetricsReport,
        }
        write_json(
            path,
            &Document {
                schema_version: SCHEMA_VERSION,
                config: &design,
                report: &report,
            },
        )?;
    }
    Ok(())
}

fn metrics_table(design: &SimulationDesign, report: &MetricsReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "design {}  n={} arms={} k={} xi={} alpha={} seed={}\n",
        report.design_name,
        report.n,
        report.n_arms,
        design.k,
        design.xi,
        design.alpha,
        design.base_seed
    ));
    out.push_str(&format!(
        "replications: {} requested, {} used, {} failed; wall clock {:.1}s\n",
        report.replications_requested,
        report.replications_used,
        report.failures,
        report.wall_clock_seconds
    ));
    out.push_str(&format!(
        "{:<8} {:<8} {:>10} {:>10} {:>10} {:>10} {:>12}\n",
        "method", "pair", "true", "bias", "rmse", "coverage", "mean width"
    ));
    for row in &report.rows {
        out.push_str(&format!(
            "{:<8} {:<8} {:>10.4} {:>10.4} {:>10.4} {:>10.4} {:>12.4}\n",
            row.method.to_string(),
            format!("({},{})", row.pair.j, row.pair.j_prime),
            row.true_ate,
            row.bias,
            row.rmse,
            row.coverage,
            row.mean_ci_width,
        ));
    }
    out
}

fn write_metrics_csv(path: &Path, report: &MetricsReport) -> Result<()> {
    let mut writer =
        csv::Writer::from_path(path).map_err(|e| GcfError::Io(std::io::Error::other(e)))?;
    writer
        .write_record([
            "method",
            "j",
            "j_prime",
            "true_ate",
            "bias",
            "rmse",
            "coverage",
            "mean_ci_width",
            "mean_variance",
        ])
        .map_err(|e| GcfError::Io(std::io::Error::other(e)))?;
    for row in &report.rows {
        writer
            .write_record([
                row.method.to_string(),
                row.pair.j.to_string(),
                row.pair.j_prime.to_string(),
                row.true_ate.to_string(),
                row.bias.to_string(),
                row.rmse.to_string(),
                row.coverage.to_string(),
                row.mean_ci_width.to_string(),
                row.mean_variance.to_string(),
            ])
            .map_err(|e| GcfError::Io(std::io::Error::other(e)))?;
    }
    writer
        .flush()
        .map_err(|e| GcfError::Io(std::io::Error::other(e)))?;
    Ok(())
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut file = std::fs::File::create(path)?;
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| GcfError::Config(format!("serializing output: {e}")))?;
    file.write_all(text.as_bytes())?;
    file.write_all(b"\n")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn method_tokens_parse_case_insensitively() {
        let methods = parse_methods(&["DIF".to_string(), "gcf".to_string()], false).unwrap();
        assert_eq!(methods, vec![Method::Dif, Method::Gcf]);
    }

    #[test]
    fn duplicate_method_tokens_collapse() {
        let methods = parse_methods(&["gcf".to_string(), "gcf".to_string()], false).unwrap();
        assert_eq!(methods, vec![Method::Gcf]);
    }

    #[test]
    fn oracle_is_rejected_where_not_allowed() {
        assert!(parse_methods(&["oracle".to_string()], false).is_err());
        assert!(parse_methods(&["oracle".to_string()], true).is_ok());
    }

    #[test]
    fn unknown_method_is_a_config_error() {
        let err = parse_methods(&["tmle".to_string()], true).unwrap_err();
        assert!(matches!(err, GcfError::Config(_)));
    }

    #[test]
    fn cli_structure_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
