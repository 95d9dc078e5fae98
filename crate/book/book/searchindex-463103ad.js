window.search = Object.assign(window.search, JSON.parse('{"doc_urls":["introduction.html#introduction","introduction.html#sixty-seconds-of-code","introduction.html#what-is-in-the-box","introduction.html#assumptions-stated-up-front","estimators.html#the-estimators","estimators.html#the-pseudo-outcome","estimators.html#variance-and-simultaneous-intervals","estimators.html#three-estimators-one-interface","estimators.html#the-oracle-and-a-denominator-variant","cross-fitting.html#cross-fitting","cross-fitting.html#building-a-plan","cross-fitting.html#out-of-fold-predictions","cross-fitting.html#a-checkable-identity","nuisance-models.html#nuisance-models","nuisance-models.html#the-outcome-learner","nuisance-models.html#the-propensity-learner","nuisance-models.html#clipping-and-the-positivity-report","simulation-studies.html#simulation-studies","simulation-studies.html#designs","simulation-studies.html#running-a-study","simulation-studies.html#reproducibility","simulation-studies.html#custom-designs","cli.html#the-command-line","cli.html#estimating-from-a-csv-file","cli.html#running-simulation-studies","cli.html#config-files-and-exit-codes"],"index":{"documentStore":{"docInfo":{"0":{"body":99,"breadcrumbs":2,"title":1},"1":{"body":82,"breadcrumbs":4,"title":3},"10":{"body":102,"breadcrumbs":4,"title":2},"11":{"body":119,"breadcrumbs":5,"title":3},"12":{"body":38,"breadcrumbs":4,"title":2},"13":{"body":64,"breadcrumbs":4,"title":2},"14":{"body":94,"breadcrumbs":4,"title":2},"15":{"body":102,"breadcrumbs":4,"title":2},"16":{"body":107,"breadcrumbs":5,"title":3},"17":{"body":29,"breadcrumbs":4,"title":2},"18":{"body":118,"breadcrumbs":3,"title":1},"19":{"body":122,"breadcrumbs":4,"title":2},"2":{"body":84,"breadcrumbs":2,"title":1},"20":{"body":53,"breadcrumbs":3,"title":1},"21":{"body":117,"breadcrumbs":4,"title":2},"22":{"body":29,"breadcrumbs":4,"title":2},"23":{"body":194,"breadcrumbs":5,"title":3},"24":{"body":152,"breadcrumbs":5,"title":3},"25":{"body":83,"breadcrumbs":6,"title":4},"3":{"body":47,"breadcrumbs":5,"title":4},"4":{"body":46,"breadcrumbs":2,"title":1},"5":{"body":125,"breadcrumbs":3,"title":2},"6":{"body":49,"breadcrumbs":4,"title":3},"7":{"body":204,"breadcrumbs":5,"title":4},"8":{"body":59,"breadcrumbs":4,"title":3},"9":{"body":81,"breadcrumbs":4,"title":2}},"docs":{"0":{"body":"gcf estimates average treatment effects between every pair of treatment\\narms when the treatment takes more than two values and assignment was not\\nrandomized. Think of an observational study comparing three medications:\\npatients were not assigned at random, so the raw difference in outcomes\\nbetween any two arms mixes the treatment effect with whatever drove the\\nprescription choice. With J arms there are J * (J - 1) / 2 such pairwise\\ncontrasts, and the library estimates all of them from one set of fitted\\nmodels, with confidence intervals that hold jointly across the whole family. The workhorse is a doubly robust estimator: it combines an outcome\\nregression per arm with a propensity model for arm assignment, in a form\\nthat stays consistent when either one of the two is misspecified. Fitting\\nthose models by K-fold cross-fitting (each unit is scored by models trained\\non folds that exclude it) removes the bias that comes from fitting and\\nevaluating on the same observations.","breadcrumbs":"Introduction » Introduction","id":"0","title":"Introduction"},"1":{"body":"#![allow(unused)] fn main() {\\nuse gcf::crossfit::{fit_out_of_fold, make_folds};\\nuse gcf::estimators::gcf_estimate;\\nuse gcf::nuisance::NuisanceSpec;\\nuse gcf::simulation::{generate_dataset, SimulationDesign}; // A three-arm observational design with known effects, for demonstration.\\nlet mut design = SimulationDesign::adequate_overlap();\\ndesign.n = 600;\\nlet (data, _, _) = generate_dataset(&design, 42)?; // Split into 3 folds, fit both nuisance models out of fold, estimate.\\nlet plan = make_folds(&data, 3, 42, true)?;\\nlet fits = fit_out_of_fold(&data, &plan, &NuisanceSpec::default(), 1e-3)?;\\nlet estimate = gcf_estimate(&data, &plan, &fits, 0.05)?; for pair in estimate.pairs() { println!( \\"arm {} vs arm {}: {:.2} in [{:.2}, {:.2}]\\", pair.pair.j, pair.pair.j_prime, pair.estimate, pair.ci_lower, pair.ci_upper );\\n} Ok::<(), gcf::GcfError>(()) } Every code block in this guide compiles and runs as a test of the crate, so\\nthe examples cannot drift from the library.","breadcrumbs":"Introduction » Sixty seconds of code","id":"1","title":"Sixty seconds of code"},"10":{"body":"#![allow(unused)] fn main() {\\nuse gcf::crossfit::make_folds;\\nuse gcf::simulation::{generate_dataset, SimulationDesign}; let mut design = SimulationDesign::adequate_overlap();\\ndesign.n = 300;\\nlet (data, _, _) = generate_dataset(&design, 9)?; // 3 folds, stratified by arm, reproducible from the seed.\\nlet plan = make_folds(&data, 3, 9, true)?;\\nassert_eq!(plan.k, 3);\\nassert_eq!(plan.fold_sizes().iter().sum::<usize>(), 300); // Stratification keeps each arm spread across folds, so no training\\n// complement loses an arm entirely.\\nlet arm_one_per_fold: Vec<usize> = (1..=3) .map(|f| { plan.fold_indices(f) .iter() .filter(|&&i| data.treatments[i] == 1) .count() }) .collect();\\nlet spread = arm_one_per_fold.iter().max().unwrap() - arm_one_per_fold.iter().min().unwrap();\\nassert!(spread <= 1); Ok::<(), gcf::GcfError>(()) } make_folds shuffles within each arm (or across the whole sample with stratified = false) using the supplied seed, so a FoldPlan is fully\\nreproducible. The plan is plain data: assignment[i] is the fold of unit i, in 1..=k. Stratification is the default worth keeping: with a rare\\narm and an unlucky split, an unstratified training complement can lose that\\narm completely, and the fold’s outcome model for it cannot be fit at all.","breadcrumbs":"Cross-Fitting » Building a plan","id":"10","title":"Building a plan"},"11":{"body":"#![allow(unused)] fn main() {\\nuse gcf::crossfit::{fit_out_of_fold, make_folds};\\nuse gcf::nuisance::NuisanceSpec;\\nuse gcf::simulation::{generate_dataset, SimulationDesign}; let mut design = SimulationDesign::adequate_overlap();\\ndesign.n = 300;\\nlet (data, _, _) = generate_dataset(&design, 9)?;\\nlet plan = make_folds(&data, 3, 9, true)?; let fits = fit_out_of_fold(&data, &plan, &NuisanceSpec::default(), 1e-3)?; // One outcome prediction per unit and arm, one propensity row per unit.\\nassert_eq!((fits.mu_hat.nrows(), fits.mu_hat.ncols()), (300, 3));\\nfor i in 0..data.n() { let total: f64 = fits.e_hat.row(i).iter().sum(); assert!((total - 1.0).abs() < 1e-12);\\n} // The diagnostic is computed on the raw fits, before clipping.\\nprintln!( \\"smallest fitted propensity per arm: {:?}, units clipped: {}\\", fits.positivity.per_arm_min, fits.clipped.iter().filter(|&&c| c).count()\\n); Ok::<(), gcf::GcfError>(()) } fit_out_of_fold fits, per fold, one linear regression per arm and one\\nmultinomial logit, then fills each held-out row of mu_hat and e_hat.\\nFitted propensities are clipped into [xi, 1 - xi] and renormalized, which\\nbounds the correction weights; clipped records which rows moved, and positivity summarizes how close the raw fits came to the boundary (the nuisance chapter discusses reading that report).","breadcrumbs":"Cross-Fitting » Out-of-fold predictions","id":"11","title":"Out-of-fold predictions"},"12":{"body":"Because the pooled estimate is a mean over units and every unit belongs to\\nexactly one fold, the estimate equals the fold-size-weighted average of\\nper-fold means. The estimator re-checks that identity on every run in debug\\nbuilds; it is the kind of invariant that catches indexing mistakes (a row\\nscored by the wrong fold’s model) the moment they are introduced.","breadcrumbs":"Cross-Fitting » A checkable identity","id":"12","title":"A checkable identity"},"13":{"body":"Both nuisance functions ship with a parametric learner, configured through LearnerSpec and bundled into a NuisanceSpec: the outcome regressions use ordinary least squares with an intercept,\\nfit separately per arm on that arm’s units ( LearnerSpec::linear()), and the propensities use multinomial logistic regression with\\nreference-category coding, fit by iteratively reweighted least squares\\n( LearnerSpec::multinomial_logit()). NuisanceSpec::default() is exactly that pair. These are deliberately\\nsimple models: fast, convex, and deterministic, which keeps full simulation\\nstudies cheap and results bit-reproducible. The LearnerKind::External\\nvariant marks where a caller-supplied learner would plug in; fitting with\\nit is rejected at runtime.","breadcrumbs":"Nuisance Models » Nuisance Models","id":"13","title":"Nuisance Models"},"14":{"body":"Each arm’s regression is fit on the units observed in that arm and then\\npredicts a counterfactual outcome for every unit, giving the n x J matrix mu_hat. An optional ridge penalty on the slopes (never the intercept)\\nhandles collinear covariates; without it, a singular design is reported as\\nan error rather than silently pseudo-inverted: #![allow(unused)] fn main() {\\nuse nalgebra::{DMatrix, DVector};\\nuse gcf::nuisance::fit_ols; // The second column duplicates the first, so the unpenalized normal\\n// equations are singular.\\nlet x = DMatrix::from_fn(12, 2, |i, _| i as f64);\\nlet y = DVector::from_fn(12, |i, _| 3.0 + 2.0 * i as f64);\\nassert_eq!( fit_ols(&x, &y, 0.0).unwrap_err().to_string(), \\"singular system; set ridge > 0\\"\\n); // A small ridge splits the shared slope between the twin columns.\\nlet coef = fit_ols(&x, &y, 1e-6)?;\\nassert!((coef[0] - 3.0).abs() < 1e-3);\\nassert!((coef[1] + coef[2] - 2.0).abs() < 1e-3); Ok::<(), gcf::GcfError>(()) }","breadcrumbs":"Nuisance Models » The outcome learner","id":"14","title":"The outcome learner"},"15":{"body":"The multinomial logit holds arm 1’s coefficients at zero and fits the\\nrest by Newton steps on the log-likelihood, stopping when the gradient\\nmax-norm drops under tol or after max_iters iterations. The default\\nspec carries a tiny ridge ( 1e-8): on a near-separable training fold the\\nunpenalized likelihood has no maximizer and coefficients would diverge,\\nwhile a ridge this small keeps the solve well posed without visibly moving\\nany prediction. #![allow(unused)] fn main() {\\nuse gcf::nuisance::{fit_outcome_model, fit_propensity_model, NuisanceSpec};\\nuse gcf::simulation::{generate_dataset, SimulationDesign}; let mut design = SimulationDesign::adequate_overlap();\\ndesign.n = 400;\\nlet (data, _, _) = generate_dataset(&design, 3)?;\\nlet rows: Vec<usize> = (0..data.n()).collect(); let spec = NuisanceSpec::default();\\nlet outcome = fit_outcome_model(&data, &rows, &spec.outcome)?;\\nlet propensity = fit_propensity_model(&data, &rows, &spec.propensity)?;\\nassert!(propensity.converged); let mu = outcome.predict_matrix(&data.covariates, &rows);\\nlet e = propensity.predict_matrix(&data.covariates, &rows);\\nassert_eq!((mu.nrows(), mu.ncols()), (400, 3));\\nfor i in 0..400 { let total: f64 = e.row(i).iter().sum(); assert!((total - 1.0).abs() < 1e-12);\\n} Ok::<(), gcf::GcfError>(()) }","breadcrumbs":"Nuisance Models » The propensity learner","id":"15","title":"The propensity learner"},"16":{"body":"A fitted propensity near zero turns one residual into a giant correction\\nterm, so before weighting, each propensity row is clipped into [xi, 1 - xi] and renormalized back onto the simplex. The threshold xi\\nis a stability floor, not a dial to tune: the default 1e-3 only engages\\non units whose arm probabilities were nearly degenerate to begin with. Clipping treats a symptom. The condition worth diagnosing is failing\\noverlap: units whose covariates all but determine their arm. That is what\\nthe PositivityReport measures, on the raw fits before clipping: per_arm_min and per_arm_max give the range of fitted propensities per\\narm, n_violations counts units with any propensity outside [xi, 1 - xi], and overlap_concern flags when that count is nonzero. A\\nhandful of violations among thousands of units is routine; violations in\\nthe hundreds mean some contrasts are extrapolations dressed as estimates,\\nand the lack-of-overlap design shows how the\\nestimators degrade there. The report travels with the predictions\\n( fits.positivity) and appears in both outputs of the command-line tool.","breadcrumbs":"Nuisance Models » Clipping and the positivity report","id":"16","title":"Clipping and the positivity report"},"17":{"body":"Estimators of causal effects cannot be validated on real observational\\ndata, because the truth is unobservable there. The simulation module\\nturns that around: it draws datasets from designs whose true effects are\\nknown in closed form, runs the estimators on many replications, and reports\\nhow close they came.","breadcrumbs":"Simulation Studies » Simulation Studies","id":"17","title":"Simulation Studies"},"18":{"body":"A SimulationDesign fixes the covariate law and lets the design choose the\\nrest. Six covariates are drawn per unit: three jointly normal with given\\nmeans and correlations, one uniform, one chi-squared, one binary. With the\\naugmented vector X~ = (1, X1..X6), arm j receives propensity softmax_j(X~\' beta_j) and mean outcome X~\' alpha_j, plus normal noise.\\nEverything a study needs (sample size, arm count, the coefficient matrices,\\nreplication count, folds, clipping, seed) is one serializable struct. Three designs are built in: SimulationDesign::adequate_overlap() ( design1-adequate): three arms,\\nstrong confounding, but propensities comfortably inside the simplex.\\nThe happy path. SimulationDesign::lack_of_overlap() ( design2-lack): the same plan\\nwith the second arm’s coefficients scaled up threefold, pushing fitted\\npropensities against the boundary. The stress test. SimulationDesign::six_arms() ( design3-j6): six arms and fifteen\\nsimultaneous contrasts. True effects come from true_ate, which evaluates E[X~]\' (alpha_j - alpha_j\') using the closed-form covariate means; nothing is estimated\\nthere.","breadcrumbs":"Simulation Studies » Designs","id":"18","title":"Designs"},"19":{"body":"#![allow(unused)] fn main() {\\nuse gcf::estimators::Method;\\nuse gcf::simulation::{run_monte_carlo, SimulationDesign}; let mut design = SimulationDesign::adequate_overlap();\\ndesign.n = 300;\\ndesign.replications = 4;\\ndesign.estimators = vec![Method::Dif, Method::Gcf]; let report = run_monte_carlo(&design)?;\\nassert_eq!(report.replications_used, 4);\\nassert_eq!(report.rows.len(), 6); // 2 estimators x 3 pairs for row in &report.rows { println!( \\"{} {}: bias {:+.3}, rmse {:.3}, coverage {:.0}%\\", row.method, row.pair, row.bias, row.rmse, 100.0 * row.coverage );\\n} Ok::<(), gcf::GcfError>(()) } Each MetricsRow aggregates one estimator on one pair across the\\nreplications: mean error ( bias), root mean squared error ( rmse), the\\nfraction of replications whose interval contained the truth ( coverage),\\nplus mean interval width and mean variance estimate. Coverage and width use\\nthe per-pair marginal Wald interval at level 1 - alpha, the convention\\nunder which a well-calibrated estimator shows coverage near the nominal\\nlevel pair by pair; the simultaneous intervals of an AteEstimate are\\ndeliberately wider than that. A replication can fail legitimately (at small n, a training complement\\ncan lose an arm). Failed replications are dropped and counted in report.failures; only a study in which every replication fails is an\\nerror.","breadcrumbs":"Simulation Studies » Running a study","id":"19","title":"Running a study"},"2":{"body":"Three estimators sharing one interface: the cross-fitted doubly robust\\nestimator ( gcf), its full-sample-fit variant ( gaipw), and the naive\\ndifference in arm means ( dif) as a baseline. The Estimators\\ncovers when each is valid. K-fold cross-fitting with arm-stratified splits and out-of-fold\\nprediction, described in Cross-Fitting. Parametric nuisance learners: per-arm linear regression and multinomial\\nlogistic regression, with ridge options and propensity clipping. See Nuisance Models. A Monte Carlo harness with three built-in designs and support for custom\\nones, measuring bias, RMSE, and coverage. See Simulation Studies. A gcf binary that runs both estimation on CSV files and simulation\\nstudies. See The Command Line.","breadcrumbs":"Introduction » What is in the box","id":"2","title":"What is in the box"},"20":{"body":"A study is a pure function of its design. Each replication derives its\\ndata seed and its fold seed from base_seed and the replication index\\nthrough a SplitMix64 hash, so results do not depend on thread scheduling,\\nand --threads 1 yields bit-identical reports to a 32-core run. The hash\\nalso decorrelates studies: nearby base seeds (1, 2, 3…) produce unrelated\\nreplication streams, so seed sensitivity can be probed by stepping the seed\\nwithout worrying about overlap between the streams.","breadcrumbs":"Simulation Studies » Reproducibility","id":"20","title":"Reproducibility"},"21":{"body":"Any design serializes to TOML, and the command-line tool accepts such files\\ndirectly (see The Command Line). The schema is the struct itself: name = \\"two-arm-smoke\\"\\nn_arms = 2\\nn = 200\\nalphas = [ [0.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0], [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0],\\n]\\nbetas = [ [0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0], [0.2, 0.1, 0.0, 0.0, 0.0, 0.0, 0.0],\\n]\\nnoise_sd = 1.0\\nreplications = 50\\nk = 3\\nestimators = [\\"dif\\", \\"gcf\\"]\\nbase_seed = 3\\nxi = 0.001\\nalpha = 0.05 Coefficient rows are (intercept, X1..X6), one row per arm. An all-zero betas row is the softmax reference arm. Estimator names are accepted in\\neither case ( \\"gcf\\" or \\"GCF\\"). The same struct round-trips through serde, so a design can be built in code, written to disk, and shared: #![allow(unused)] fn main() {\\nuse gcf::simulation::SimulationDesign; let design = SimulationDesign::lack_of_overlap();\\nlet text = toml::to_string(&design).unwrap();\\nlet back: SimulationDesign = toml::from_str(&text).unwrap();\\nassert_eq!(back.name, design.name);\\nassert_eq!(back.betas, design.betas); }","breadcrumbs":"Simulation Studies » Custom designs","id":"21","title":"Custom designs"},"22":{"body":"The gcf binary wraps the library behind two subcommands: estimate, for\\npairwise effects from a CSV file, and simulate, for Monte Carlo studies.\\nRun it from this repository with cargo run --release -p gcf --, or\\ninstall it once with cargo install --path crates/gcf.","breadcrumbs":"The Command Line » The Command Line","id":"22","title":"The Command Line"},"23":{"body":"The input is a CSV file with a header row: one treatment column with arm\\nlabels, one numeric outcome column, and numeric covariate columns. $ gcf estimate --input study.csv --treatment arm --outcome y\\nn=2000 arms=3 k=3 xi=0.001 alpha=0.05 seed=1\\npositivity: min per arm [0.0015 0.1191 0.0123], max per arm [0.4529 0.9836 0.5143], 0 value(s) outside [xi, 1-xi], overlap concern: no\\nestimator pair estimate std.error 95% simultaneous CI\\nGCF 1 vs 2 -5.095233 0.140470 [-5.431514, -4.758951]\\nGCF 1 vs 3 -5.492042 0.163867 [-5.884336, -5.099747]\\nGCF 2 vs 3 -0.396809 0.173753 [-0.812770, 0.019152] By default every column other than the treatment and the outcome is a\\ncovariate; --covariates x1,x2,x3 restricts the set. Arm labels may be any\\nstrings; they are mapped to 1..=J in sorted order unless they already are 1..=J, and the table prints the original labels. --arms J asserts the\\nexpected arm count up front. Flags mirror the library defaults: --estimators dif,gaipw,gcf selects\\nestimators (default gcf alone; the oracle needs true nuisance values and\\nis rejected here), --k sets the fold count, --xi the clipping\\nthreshold, --alpha the simultaneous level complement, --seed the fold\\nseed, and --no-stratify disables arm-stratified folds. The positivity\\nline comes from the raw propensity fits, as described in Nuisance Models. --output results.json writes a versioned JSON document containing the\\neffective configuration, the positivity report, and every estimate\\n(including the full effect matrix and simultaneous intervals), suitable for\\ndownstream tooling; --table results.txt duplicates the text table to a\\nfile. Reruns of the same command produce byte-identical output.","breadcrumbs":"The Command Line » Estimating from a CSV file","id":"23","title":"Estimating from a CSV file"},"24":{"body":"$ gcf simulate design1-adequate --reps 500 --estimators dif,gcf\\ndesign design1-adequate n=1500 arms=3 k=3 xi=0.001 alpha=0.05 seed=1\\nreplications: 500 requested, 500 used, 0 failed; wall clock 1.7s\\nmethod pair true bias rmse coverage mean width\\nDIF (1,2) -5.0000 -0.7012 0.7609 0.3660 1.1771\\nDIF (1,3) -5.5000 0.6365 0.7005 0.4420 1.2205\\nDIF (2,3) -0.5000 1.3377 1.3775 0.0180 1.2719\\nGCF (1,2) -5.0000 -0.0012 0.1534 0.9600 0.5926\\nGCF (1,3) -5.5000 -0.0100 0.1970 0.9480 0.7244\\nGCF (2,3) -0.5000 -0.0088 0.1957 0.9460 0.7810 The positional argument names a built-in design ( design1-adequate, design2-lack, design3-j6); --design-file my_design.toml runs a custom\\none instead (the schema is in Simulation Studies). --n, --reps, --seed, --k, --estimators, --xi, and --alpha override the corresponding\\ndesign fields, so sample-size sweeps need no edited files. The oracle\\nestimator is available here, where true nuisances exist. Three output sinks can be combined: --output metrics.csv writes one\\nmetric row per estimator and pair, --json report.json the full report,\\nand --table study.txt the text table. The CSV columns are method,j,j_prime,true_ate,bias,rmse,coverage,mean_ci_width,mean_variance,\\nwith full-precision floats that round-trip exactly.","breadcrumbs":"The Command Line » Running simulation studies","id":"24","title":"Running simulation studies"},"25":{"body":"--config run.toml supplies defaults for either subcommand; explicit flags\\nalways win. The file has optional [estimate] and [simulate] sections\\nplus a top-level threads cap, and unknown keys are rejected rather than\\nignored, so typos surface instead of silently using defaults: threads = 8 [estimate]\\ninput = \\"study.csv\\"\\ntreatment = \\"arm\\"\\noutcome = \\"y\\"\\nk = 5 [simulate]\\ndesign = \\"design2-lack\\"\\nreps = 1000 The process exit code distinguishes failure kinds: 0 on success, 2 for\\ncommand-line usage errors, 3 for configuration and input problems (a\\nmissing column, an unknown design name, a malformed file), and 4 for\\nnumerical failures during estimation. Error messages name the offending\\nfile, column, or CSV line.","breadcrumbs":"The Command Line » Config files and exit codes","id":"25","title":"Config files and exit codes"},"3":{"body":"The causal reading of the estimates needs the usual two conditions: every\\nunit must have positive probability of landing in each arm given its\\ncovariates (positivity), and conditional on the recorded covariates, arm\\nassignment must carry no further information about potential outcomes (no\\nunmeasured confounding). The library measures how close fitted propensities\\ncome to violating the first, and the simulation chapters show what failure\\nlooks like, but no software can check the second; that one is a judgment\\nabout the data.","breadcrumbs":"Introduction » Assumptions, stated up front","id":"3","title":"Assumptions, stated up front"},"4":{"body":"Write Y for the outcome, Z in 1..=J for the treatment arm, and X for\\nthe covariates. Two functions of the covariates carry all the information\\nthe estimators need: the outcome regressions mu_j(x) = E[Y | Z = j, X = x], one per arm, and the propensities e_j(x) = P(Z = j | X = x), a vector on the probability\\nsimplex. Neither is known; both are fit from data. The library calls them the\\nnuisance functions: they must be estimated, but they are not what the\\nanalysis is after.","breadcrumbs":"The Estimators » The Estimators","id":"4","title":"The Estimators"},"5":{"body":"For a pair of arms (j, j\'), each unit contributes S_i = mu_j(X_i) - mu_j\'(X_i) + 1{Z_i = j} (Y_i - mu_j(X_i)) / e_j(X_i) - 1{Z_i = j\'} (Y_i - mu_j\'(X_i)) / e_j\'(X_i) and the effect estimate is the plain mean of S over all units, whichever\\narm each unit actually occupied. The first line is the regression contrast:\\nwhat the outcome models predict the effect to be for this unit’s\\ncovariates. The two correction terms re-weight each observed residual by\\nthe inverse probability of landing in the arm where it was observed, so\\nsystematic errors in the outcome models are repaired exactly where data\\nexists to repair them. That construction is doubly robust: the mean of S stays consistent for E[Y(j) - Y(j\')] if the outcome regressions are correct (the corrections\\nthen average to zero) or if the propensities are correct (the corrections\\nthen undo any regression error). Only when both models are wrong does the\\nestimate drift. Internally all pairs are estimated in one pass. Each unit gets one per-arm\\nscore G_ij = mu_j(X_i) + 1{Z_i = j} (Y_i - mu_j(X_i)) / e_j(X_i), and the\\npair (j, j\') pseudo-outcome is the difference G_ij - G_ij\'. With six\\narms, the fifteen contrasts cost no more than one.","breadcrumbs":"The Estimators » The pseudo-outcome","id":"5","title":"The pseudo-outcome"},"6":{"body":"The estimator’s asymptotic variance is estimated by the sample variance of\\nthe pseudo-outcomes, V_hat. Each pair’s standard error is sqrt(V_hat / n), and the reported confidence intervals are Wald intervals\\nwith a Bonferroni correction: with C(J, 2) pairs and overall level 1 - alpha, each interval uses the normal quantile at 1 - alpha / (2 * C(J, 2)). All intervals then hold jointly, which is the\\nguarantee a reader of a table of all pairwise effects actually needs.","breadcrumbs":"The Estimators » Variance and simultaneous intervals","id":"6","title":"Variance and simultaneous intervals"},"7":{"body":"Function Nuisance fits Use when dif_estimate none assignment was randomized, or as a baseline gaipw_estimate once, on the full sample learners are simple and parametric gcf_estimate out of fold, via cross-fitting always valid; the recommended default dif_estimate contrasts raw arm means. Under confounding it answers a\\ndifferent question (who gets the treatment and how they fare) and can miss\\nthe causal effect by a wide margin, which makes it the honest baseline to\\nshow next to the adjusted estimates. gaipw_estimate fits both nuisance models on the full sample and evaluates\\nthem on the same units. With fixed-dimension parametric learners this is\\nfine. The moment the learners become adaptive, reusing each observation in\\nits own fit couples the residuals to the fitted values and biases the\\ncorrections; that is the problem cross-fitting removes, as the next chapter shows. gcf_estimate consumes out-of-fold predictions and is the estimator to\\nreach for by default: #![allow(unused)] fn main() {\\nuse gcf::crossfit::{fit_out_of_fold, make_folds};\\nuse gcf::estimators::{dif_estimate, gcf_estimate};\\nuse gcf::nuisance::NuisanceSpec;\\nuse gcf::simulation::{generate_dataset, true_ate, SimulationDesign}; // Simulated data with confounding: covariates drive both the arm choice\\n// and the outcome, and the true effects are known exactly.\\nlet mut design = SimulationDesign::adequate_overlap();\\ndesign.n = 2000;\\nlet (data, _, _) = generate_dataset(&design, 8)?;\\nlet truth = true_ate(&design)?[(0, 1)]; let naive = dif_estimate(&data, 0.05)?;\\nlet plan = make_folds(&data, 3, 8, true)?;\\nlet fits = fit_out_of_fold(&data, &plan, &NuisanceSpec::default(), 1e-3)?;\\nlet adjusted = gcf_estimate(&data, &plan, &fits, 0.05)?; let naive_error = (naive.estimate(1, 2) - truth).abs();\\nlet adjusted_error = (adjusted.estimate(1, 2) - truth).abs();\\nassert!(adjusted_error < naive_error); Ok::<(), gcf::GcfError>(()) } Every estimator returns the same AteEstimate: a J x J antisymmetric\\nmatrix of effects (entry (j, j\') estimates E[Y(j) - Y(j\')], so the\\ntranspose entry is its negation), plus per-pair variances and simultaneous\\ninterval bounds in canonical pair order. estimate.pair(p) slices out one\\npair’s summary; estimate.pairs() lists them all.","breadcrumbs":"The Estimators » Three estimators, one interface","id":"7","title":"Three estimators, one interface"},"8":{"body":"Two more entry points exist for testing rather than analysis. oracle_gaipw plugs true nuisance functions into the same pseudo-outcome;\\nit is infeasible outside simulations and serves as the reference the\\nfeasible estimators are compared against. And gcf_estimate_with accepts a DenominatorStyle: the default ArmSpecific divides the j\' correction by e_j\'(X), which is the form that stays consistent for any number of arms,\\nwhile BinaryComplement divides by 1 - e_j\'(X), the shape two-arm\\nformulas are often written in. The variant exists so the two conventions\\ncan be compared on real data; it does not estimate the pairwise effect when J > 2.","breadcrumbs":"The Estimators » The oracle, and a denominator variant","id":"8","title":"The oracle, and a denominator variant"},"9":{"body":"The corrections in the doubly robust pseudo-outcome divide each unit’s\\nresidual Y_i - mu_j(X_i) by a fitted propensity. If the models behind\\nthose quantities were trained on a sample that included unit i, the\\nresidual and the fit are correlated by construction: the model has already\\nleaned toward this very observation. For rigid parametric models the effect\\nis second order, but for anything adaptive it becomes a first-order bias\\nthat no amount of data removes. Cross-fitting breaks the correlation mechanically. Split the sample into K folds; for each fold, fit both nuisance models on the other K - 1\\nfolds and predict only on the held-out fold. Every unit is then scored by\\nmodels that never saw it, and the pooled mean of the pseudo-outcomes\\nbehaves as if the nuisances had been known in advance.","breadcrumbs":"Cross-Fitting » Cross-Fitting","id":"9","title":"Cross-Fitting"}},"length":26,"save":true},"fields":["title","body","breadcrumbs"],"index":{"body":{"root":{"0":{".":{".":{"4":{"0":{"0":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"d":{"a":{"df":0,"docs":{},"t":{"a":{".":{"df":0,"docs":{},"n":{"(":{")":{")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"0":{"1":{"2":{"df":1,"docs":{"24":{"tf":1.0}}},"5":{"df":1,"docs":{"23":{"tf":1.0}}},"df":1,"docs":{"21":{"tf":1.0}}},"8":{"8":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"1":{"0":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"2":{"3":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"8":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"9":{"1":{"5":{"2":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"df":3,"docs":{"1":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"df":1,"docs":{"21":{"tf":4.795831523312719}}},"1":{"1":{"9":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"0":{"4":{"7":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"3":{"4":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"3":{"8":{"6":{"7":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{"3":{"7":{"5":{"3":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"5":{"7":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"7":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}}},"2":{"df":1,"docs":{"21":{"tf":1.0}}},"3":{"6":{"6":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"6":{"8":{"0":{"9":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"4":{"2":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"2":{"9":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"0":{"0":{"0":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"1":{"4":{"3":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"2":{"6":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"3":{"6":{"5":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{"0":{"0":{"5":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"1":{"2":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"4":{"4":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"0":{"9":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{"1":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{"1":{"2":{"7":{"7":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"4":{"6":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"8":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"6":{"0":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{"3":{"6":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}},"1":{",":{"2":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"3":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"df":0,"docs":{}},".":{".":{"=":{"3":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{},"j":{"df":2,"docs":{"23":{"tf":1.4142135623730951},"4":{"tf":1.0}}},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"0":{")":{".":{"a":{"b":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":2.0}}},"1":{"7":{"7":{"1":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"2":{"0":{"5":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{"1":{"9":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"3":{"3":{"7":{"7":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{"7":{"5":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"7":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{".":{"0":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}},"0":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}},"df":12,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.4142135623730951},"23":{"tf":1.7320508075688772},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}},"e":{"df":6,"docs":{"1":{"tf":1.0},"11":{"tf":1.4142135623730951},"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"7":{"tf":1.0}}},"{":{"df":0,"docs":{},"z":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}},"’":{"df":1,"docs":{"15":{"tf":1.0}}}},"2":{",":{"3":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"df":0,"docs":{}},".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}},"df":11,"docs":{"0":{"tf":1.0},"1":{"tf":1.7320508075688772},"14":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"6":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"3":{".":{"0":{")":{".":{"a":{"b":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"0":{"0":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"19":{"tf":1.0}}},"df":0,"docs":{}},"2":{"df":1,"docs":{"20":{"tf":1.0}}},"df":12,"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"16":{"tf":1.0},"19":{"tf":1.7320508075688772},"20":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"25":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"4":{".":{"7":{"5":{"8":{"9":{"5":{"1":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"2":{"df":1,"docs":{"1":{"tf":1.4142135623730951}}},"df":2,"docs":{"19":{"tf":1.4142135623730951},"25":{"tf":1.0}}},"5":{".":{"0":{"0":{"0":{"0":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"5":{"2":{"3":{"3":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"7":{"4":{"7":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"4":{"3":{"1":{"5":{"1":{"4":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"9":{"2":{"0":{"4":{"2":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"5":{"0":{"0":{"0":{"df":1,"docs":{"24":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"8":{"8":{"4":{"3":{"3":{"6":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"0":{"0":{"df":1,"docs":{"24":{"tf":1.7320508075688772}}},"df":1,"docs":{"21":{"tf":1.0}}},"df":1,"docs":{"25":{"tf":1.0}}},"6":{"0":{"0":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}},"df":2,"docs":{"14":{"tf":1.0},"19":{"tf":1.0}}},"8":{"df":3,"docs":{"15":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"9":{"5":{"df":1,"docs":{"23":{"tf":1.0}}},"df":2,"docs":{"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951}}},"_":{"df":6,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}}},"a":{"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"21":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"5":{"tf":1.0},"6":{"tf":1.0}}}},"df":0,"docs":{}}}},"d":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"df":2,"docs":{"18":{"tf":1.0},"24":{"tf":1.7320508075688772}}}}},"j":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.4142135623730951}},"e":{"d":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"1":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"v":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":8,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}},"p":{"df":0,"docs":{},"h":{"a":{"=":{"0":{".":{"0":{"5":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"j":{"df":1,"docs":{"18":{"tf":1.7320508075688772}}}},"df":5,"docs":{"19":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.4142135623730951}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"i":{"df":2,"docs":{"23":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"w":{"a":{"df":0,"docs":{},"y":{"df":2,"docs":{"25":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"9":{"tf":1.0}}}}}}},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"y":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":2,"docs":{"4":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}}},"m":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"(":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"(":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":19,"docs":{"0":{"tf":2.23606797749979},"1":{"tf":1.7320508075688772},"10":{"tf":2.449489742783178},"11":{"tf":1.7320508075688772},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"18":{"tf":2.0},"19":{"tf":1.0},"2":{"tf":1.7320508075688772},"21":{"tf":1.7320508075688772},"23":{"tf":2.8284271247461903},"25":{"tf":1.0},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":2.23606797749979},"7":{"tf":1.4142135623730951},"8":{"tf":1.4142135623730951}},"s":{"=":{"3":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}}},"’":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"18":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"17":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"!":{"(":{"(":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"[":{"0":{"df":1,"docs":{"14":{"tf":1.0}}},"1":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}}}},"a":{"d":{"df":0,"docs":{},"j":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"d":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"!":{"(":{"(":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"_":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"u":{".":{"df":0,"docs":{},"n":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"b":{"a":{"c":{"df":0,"docs":{},"k":{".":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"(":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{":":{":":{"<":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"k":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"_":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"s":{".":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}}}},"df":1,"docs":{"23":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.7320508075688772},"3":{"tf":1.0},"7":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"[":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":2,"docs":{"19":{"tf":1.0},"7":{"tf":1.0}}}}}}}}},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"v":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":3,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"b":{"a":{"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"16":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"20":{"tf":1.0},"21":{"tf":1.0}}}}},"df":1,"docs":{"20":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"7":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"16":{"tf":1.4142135623730951}}}}},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"v":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"22":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"t":{"a":{"_":{"df":0,"docs":{},"j":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":1,"docs":{"21":{"tf":1.4142135623730951}}},"df":0,"docs":{},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":3,"docs":{"0":{"tf":1.4142135623730951},"14":{"tf":1.0},"20":{"tf":1.0}}}}}}}},"i":{"a":{"df":5,"docs":{"0":{"tf":1.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0},"9":{"tf":1.0}},"s":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"22":{"tf":1.0}}},"y":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"13":{"tf":1.0},"20":{"tf":1.0}}}},"l":{"df":0,"docs":{},"o":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"6":{"tf":1.0}}}}}}}}}},"t":{"df":0,"docs":{},"h":{"df":8,"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"11":{"tf":1.0},"18":{"tf":1.0}}}}},"df":2,"docs":{"11":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":4,"docs":{"18":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}}}}},"n":{"d":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"c":{"(":{"df":0,"docs":{},"j":{"df":1,"docs":{"6":{"tf":1.4142135623730951}}}},")":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":1,"docs":{"4":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"17":{"tf":1.0}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}},"p":{"df":1,"docs":{"25":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":1,"docs":{"22":{"tf":1.4142135623730951}}}},"l":{"df":0,"docs":{},"o":{"df":2,"docs":{"2":{"tf":1.0},"22":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":3,"docs":{"15":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}},"t":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"g":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"u":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"17":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"11":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}},"c":{"df":0,"docs":{},"k":{"df":2,"docs":{"12":{"tf":1.0},"3":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":1,"docs":{"18":{"tf":1.0}}},"o":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"0":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"i":{"df":1,"docs":{"23":{"tf":1.0}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":5,"docs":{"11":{"tf":2.0},"16":{"tf":1.7320508075688772},"18":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0}}}},"o":{"c":{"df":0,"docs":{},"k":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":4,"docs":{"11":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"3":{"tf":1.0}}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":4,"docs":{"1":{"tf":1.0},"13":{"tf":1.0},"21":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"[":{"2":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}},"f":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":3,"docs":{"15":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"21":{"tf":1.0}}}},"df":0,"docs":{}}}}},"l":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"n":{"df":4,"docs":{"14":{"tf":1.4142135623730951},"23":{"tf":2.0},"24":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}}},"m":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"0":{"tf":1.0},"24":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0}}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":5,"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"p":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"0":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"19":{"tf":1.0},"23":{"tf":1.0}}}}}},"t":{"df":1,"docs":{"10":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.0},"3":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"d":{"df":2,"docs":{"0":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"d":{"df":3,"docs":{"18":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"5":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.0}}}}},"t":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"23":{"tf":1.0}}}}},"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}}},"df":0,"docs":{}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"19":{"tf":1.0},"8":{"tf":1.0}}}},"x":{"df":1,"docs":{"13":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":7,"docs":{"11":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":2.23606797749979},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{},"l":{"df":2,"docs":{"18":{"tf":1.0},"9":{"tf":1.4142135623730951}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}}}}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"10":{"tf":1.0},"16":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"23":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"u":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"7":{"tf":1.0}}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":8,"docs":{"14":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.7320508075688772},"23":{"tf":1.7320508075688772},"3":{"tf":1.4142135623730951},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":3,"docs":{"19":{"tf":2.0},"2":{"tf":1.0},"24":{"tf":1.0}}}},"df":1,"docs":{"2":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"1":{"tf":1.0}},"s":{"/":{"df":0,"docs":{},"g":{"c":{"df":0,"docs":{},"f":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":5,"docs":{"2":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"2":{"tf":1.0},"24":{"tf":1.0}}}}}}}},"d":{"a":{"df":0,"docs":{},"t":{"a":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"s":{"[":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}}},"df":12,"docs":{"1":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"15":{"tf":1.0},"17":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.0}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":1,"docs":{"17":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":1,"docs":{"12":{"tf":1.0}}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}}}}}},"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":7,"docs":{"10":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}},"df":0,"docs":{}},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"r":{"a":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"19":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}}}}}}}},"df":0,"docs":{}}}}}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"20":{"tf":1.0}}}}},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"b":{"df":2,"docs":{"2":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{".":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"n":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":6,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"1":{"df":2,"docs":{"18":{"tf":1.0},"24":{"tf":1.7320508075688772}}},"2":{"df":3,"docs":{"18":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}},"3":{"df":2,"docs":{"18":{"tf":1.0},"24":{"tf":1.0}}},"df":15,"docs":{"1":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.7320508075688772},"24":{"tf":2.0},"25":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}}}}},"i":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}},"l":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{},"f":{",":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"w":{",":{"df":0,"docs":{},"g":{"c":{"df":0,"docs":{},"f":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"f":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}}},"df":3,"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.7320508075688772}},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"df":0,"docs":{}}},"s":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{},"k":{"df":1,"docs":{"21":{"tf":1.0}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"25":{"tf":1.0}}}}}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}}}}},"i":{"d":{"df":2,"docs":{"8":{"tf":1.4142135623730951},"9":{"tf":1.0}}},"df":0,"docs":{}}}},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"n":{"(":{"1":{"2":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"o":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{},"u":{"b":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}},"df":0,"docs":{}},"w":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}}}}}},"r":{"a":{"df":0,"docs":{},"w":{"df":1,"docs":{"17":{"tf":1.0}},"n":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"16":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":2,"docs":{"1":{"tf":1.0},"5":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"p":{"df":2,"docs":{"15":{"tf":1.0},"19":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"c":{"df":2,"docs":{"14":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"25":{"tf":1.0}}}}},"v":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"n":{"(":{"1":{"2":{"df":1,"docs":{"14":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"i":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"[":{"df":0,"docs":{},"i":{"df":1,"docs":{"4":{"tf":1.0}}},"x":{"df":1,"docs":{"18":{"tf":1.0}}},"y":{"(":{"df":0,"docs":{},"j":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}},"j":{"\'":{"(":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":1,"docs":{"8":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"(":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}},"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"a":{"c":{"df":0,"docs":{},"h":{"df":13,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":2.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":1,"docs":{"15":{"tf":1.0}},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":11,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0},"7":{"tf":1.7320508075688772},"8":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"10":{"tf":1.0}}}},"r":{"df":0,"docs":{},"i":{"df":2,"docs":{"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}},"t":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":5,"docs":{"14":{"tf":1.0},"19":{"tf":1.7320508075688772},"25":{"tf":1.4142135623730951},"5":{"tf":1.4142135623730951},"6":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{".":{"df":0,"docs":{},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"p":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"’":{"df":1,"docs":{"6":{"tf":1.0}}}}}}},"df":19,"docs":{"0":{"tf":1.7320508075688772},"1":{"tf":1.4142135623730951},"12":{"tf":1.7320508075688772},"16":{"tf":1.4142135623730951},"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":2.0},"2":{"tf":2.0},"21":{"tf":1.4142135623730951},"22":{"tf":1.0},"23":{"tf":2.449489742783178},"24":{"tf":2.0},"25":{"tf":1.7320508075688772},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":2.0},"8":{"tf":1.4142135623730951}}}}}},"v":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"7":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"y":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.0}}}}}}}},"x":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":5,"docs":{"12":{"tf":1.0},"13":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"24":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.4142135623730951}}}},"t":{"df":1,"docs":{"25":{"tf":1.0}}}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}}}},"f":{"6":{"4":{"df":3,"docs":{"11":{"tf":1.0},"14":{"tf":1.4142135623730951},"15":{"tf":1.0}}},"df":0,"docs":{}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":3,"docs":{"16":{"tf":1.0},"19":{"tf":1.7320508075688772},"24":{"tf":1.0}},"u":{"df":0,"docs":{},"r":{"df":2,"docs":{"25":{"tf":1.4142135623730951},"3":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"s":{"df":1,"docs":{"10":{"tf":1.0}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}},"f":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"18":{"tf":1.0},"5":{"tf":1.0}}}}}}},"l":{"df":0,"docs":{},"e":{"df":6,"docs":{"2":{"tf":1.0},"21":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"25":{"tf":1.7320508075688772}}},"l":{"df":1,"docs":{"11":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"|":{"&":{"&":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}},"r":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"14":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}},"t":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"s":{"(":{"&":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"u":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":3,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":1,"docs":{"15":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}}}}}}},"df":15,"docs":{"0":{"tf":2.0},"1":{"tf":1.7320508075688772},"10":{"tf":1.0},"11":{"tf":2.449489742783178},"13":{"tf":1.7320508075688772},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.7320508075688772},"18":{"tf":1.0},"2":{"tf":2.0},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":2.8284271247461903},"9":{"tf":2.0}},"s":{".":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"d":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{"df":0,"docs":{},"|":{"&":{"&":{"c":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"(":{"df":0,"docs":{},"i":{")":{".":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"(":{")":{".":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"u":{"_":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"11":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"_":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"11":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}}}}}},"df":0,"docs":{}}},"x":{"df":2,"docs":{"18":{"tf":1.0},"7":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"g":{"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"o":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"n":{"df":8,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}}},"o":{"df":0,"docs":{},"l":{"d":{"df":12,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.4142135623730951},"10":{"tf":1.7320508075688772},"11":{"tf":1.0},"12":{"tf":1.7320508075688772},"15":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.7320508075688772},"7":{"tf":1.4142135623730951},"9":{"tf":2.0}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}},"’":{"df":2,"docs":{"10":{"tf":1.0},"12":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"df":4,"docs":{"0":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}},"u":{"df":0,"docs":{},"l":{"a":{"df":1,"docs":{"8":{"tf":1.0}}},"df":0,"docs":{}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":5,"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951}},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}},"n":{"c":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":5,"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"4":{"tf":1.4142135623730951},"7":{"tf":1.0},"8":{"tf":1.0}}}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}},"g":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"j":{"df":1,"docs":{"5":{"tf":1.7320508075688772}}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"w":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}}},"df":1,"docs":{"2":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"f":{":":{":":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{":":{":":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"{":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{":":{":":{"df":0,"docs":{},"g":{"c":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"1":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}}}},"{":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"g":{"c":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":7,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"14":{"tf":1.0}}}}},"df":0,"docs":{}}}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{"df":3,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"{":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{":":{":":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}},"{":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"c":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":2,"docs":{"1":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"df":0,"docs":{}}}},"df":1,"docs":{"7":{"tf":1.7320508075688772}}}}}}}},"df":6,"docs":{"0":{"tf":1.0},"2":{"tf":1.4142135623730951},"21":{"tf":1.7320508075688772},"22":{"tf":1.4142135623730951},"23":{"tf":2.23606797749979},"24":{"tf":2.0}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"t":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}}},"i":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"14":{"tf":1.0},"16":{"tf":1.0}},"n":{"df":2,"docs":{"18":{"tf":1.0},"3":{"tf":1.0}}}}}},"r":{"a":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"a":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"6":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}},"h":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"16":{"tf":1.0}},"l":{"df":1,"docs":{"14":{"tf":1.0}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"18":{"tf":1.0}}}}},"r":{"df":1,"docs":{"2":{"tf":1.0}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"11":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"e":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":3,"docs":{"0":{"tf":1.0},"15":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"r":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":3,"docs":{"12":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"n":{"c":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"d":{"df":2,"docs":{"23":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":2,"docs":{"12":{"tf":1.0},"20":{"tf":1.0}}}}},"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"3":{"tf":1.0},"4":{"tf":1.0}}}}}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":2,"docs":{"23":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}},"t":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"22":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"e":{"a":{"d":{"df":2,"docs":{"24":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"14":{"tf":1.0},"21":{"tf":1.0}}}}}},"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"2":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"n":{"df":1,"docs":{"5":{"tf":1.0}}},"v":{"df":5,"docs":{"0":{"tf":1.0},"19":{"tf":2.0},"23":{"tf":1.0},"6":{"tf":2.0},"7":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"12":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"12":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}},"t":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"f":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"j":{"6":{"df":2,"docs":{"18":{"tf":1.0},"24":{"tf":1.0}}},"df":8,"docs":{"0":{"tf":1.7320508075688772},"14":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":2.6457513110645907},"7":{"tf":2.0},"8":{"tf":1.4142135623730951}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":3,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"6":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}}}}},"u":{"d":{"df":0,"docs":{},"g":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"k":{"=":{"3":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"df":7,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0},"15":{"tf":1.0}}}},"y":{"df":1,"docs":{"25":{"tf":1.0}}}},"i":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"12":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":5,"docs":{"1":{"tf":1.0},"17":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}}}},"l":{"a":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.7320508075688772}}}}},"c":{"df":0,"docs":{},"k":{"df":4,"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"3":{"tf":1.0},"5":{"tf":1.0}}},"df":0,"docs":{}},"w":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"2":{"tf":1.0},"7":{"tf":1.7320508075688772}},"k":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{":":{":":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"13":{"tf":1.0}}}},"df":0,"docs":{}}}}},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}}}}}}},"df":0,"docs":{}},"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}}}}}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"t":{"df":1,"docs":{"18":{"tf":1.0}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":4,"docs":{"19":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0}}}}}},"i":{"b":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":6,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"22":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"15":{"tf":1.4142135623730951}}},"df":0,"docs":{}}}}}}}},"n":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"11":{"tf":1.0},"2":{"tf":1.0}}}},"df":6,"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.4142135623730951},"23":{"tf":1.0},"25":{"tf":1.4142135623730951},"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"g":{"df":1,"docs":{"15":{"tf":1.0}},"i":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"2":{"tf":1.0}}}},"t":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"k":{"df":1,"docs":{"3":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"19":{"tf":1.0}}}}}},"m":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":8,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}}}},"k":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":4,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.0}},"s":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{"df":4,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":1,"docs":{"7":{"tf":1.0}}}},"l":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"17":{"tf":1.0}}}},"p":{"(":{"df":0,"docs":{},"|":{"df":0,"docs":{},"f":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":1,"docs":{"23":{"tf":1.0}}},"r":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"7":{"tf":1.0}}}}},"k":{"df":1,"docs":{"13":{"tf":1.0}}}},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{},"x":{"df":3,"docs":{"14":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}}}}},"x":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":2,"docs":{"15":{"tf":1.0},"23":{"tf":1.0}},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"df":9,"docs":{"12":{"tf":1.4142135623730951},"16":{"tf":1.0},"18":{"tf":1.7320508075688772},"19":{"tf":2.0},"2":{"tf":1.0},"24":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}}},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":3,"docs":{"16":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"9":{"tf":1.0}}}},"df":0,"docs":{}}},"d":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"0":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"d":{",":{"df":0,"docs":{},"j":{",":{"df":0,"docs":{},"j":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{",":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"_":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{",":{"b":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"s":{",":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{",":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{",":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"c":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"w":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{",":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"n":{"_":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},":":{":":{"df":0,"docs":{},"g":{"c":{"df":0,"docs":{},"f":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"i":{"c":{"df":1,"docs":{"24":{"tf":1.0}},"s":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"s":{"df":2,"docs":{"25":{"tf":1.0},"7":{"tf":1.0}},"p":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"t":{"a":{"df":0,"docs":{},"k":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}}},"x":{"df":1,"docs":{"0":{"tf":1.0}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":10,"docs":{"0":{"tf":2.0},"1":{"tf":1.0},"10":{"tf":1.0},"12":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.0},"23":{"tf":1.0},"5":{"tf":1.7320508075688772},"7":{"tf":1.0},"9":{"tf":2.23606797749979}}}},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"17":{"tf":1.0}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"12":{"tf":1.0},"7":{"tf":1.0}}}}}},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"2":{"tf":1.0},"22":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}},"v":{"df":0,"docs":{},"e":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}}},"u":{".":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}},"_":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"11":{"tf":1.0},"14":{"tf":1.0}}}},"df":0,"docs":{}},"j":{"\'":{"(":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"(":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"i":{"df":2,"docs":{"5":{"tf":2.0},"9":{"tf":1.0}}}},"df":1,"docs":{"4":{"tf":1.0}}}},"df":0,"docs":{}}},"df":1,"docs":{"15":{"tf":1.0}},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":4,"docs":{"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"2":{"tf":1.0}}}}}}}}},"t":{"df":6,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}}},"y":{"_":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"n":{"=":{"1":{"5":{"0":{"0":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"2":{"0":{"0":{"0":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"_":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}}},"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":2,"docs":{"2":{"tf":1.0},"7":{"tf":1.0}},"e":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"(":{"1":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}}}},"_":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}}}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"g":{"df":0,"docs":{},"e":{"b":{"df":0,"docs":{},"r":{"a":{":":{":":{"df":0,"docs":{},"{":{"d":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"df":1,"docs":{"14":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"e":{"df":3,"docs":{"21":{"tf":1.4142135623730951},"24":{"tf":1.0},"25":{"tf":1.4142135623730951}}}}},"df":5,"docs":{"14":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}},"e":{"a":{"df":0,"docs":{},"r":{"b":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}},"df":3,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"19":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"d":{"df":6,"docs":{"18":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{}},"g":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"9":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"15":{"tf":1.0}}}}}},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"18":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"s":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"l":{"df":3,"docs":{"14":{"tf":1.0},"18":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"df":1,"docs":{"15":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"c":{"df":10,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"2":{"tf":1.4142135623730951},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"c":{":":{":":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"15":{"tf":1.0},"7":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"m":{"b":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"23":{"tf":1.4142135623730951},"25":{"tf":1.0}}}}}}},"o":{"b":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":7,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"14":{"tf":1.0},"17":{"tf":1.0},"5":{"tf":1.4142135623730951},"7":{"tf":1.0},"9":{"tf":1.0}}}}}}},"c":{"c":{"df":0,"docs":{},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}}}}},"k":{"df":7,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}},"n":{"c":{"df":2,"docs":{"22":{"tf":1.0},"7":{"tf":1.0}}},"df":14,"docs":{"0":{"tf":1.4142135623730951},"11":{"tf":2.0},"12":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":2.0},"19":{"tf":1.4142135623730951},"2":{"tf":1.4142135623730951},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.7320508075688772},"7":{"tf":1.0}},"t":{"df":0,"docs":{},"o":{"df":1,"docs":{"16":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"25":{"tf":1.0}}}}}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}},"e":{"_":{"df":0,"docs":{},"g":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"w":{"df":1,"docs":{"8":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"23":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"i":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":16,"docs":{"0":{"tf":1.4142135623730951},"10":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":2.0},"6":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}},"e":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"df":5,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.7320508075688772},"9":{"tf":1.0}},"p":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.4142135623730951}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"16":{"tf":1.0},"23":{"tf":1.0},"8":{"tf":1.0}}},"df":0,"docs":{}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":2,"docs":{"12":{"tf":1.0},"5":{"tf":1.0}},"l":{"a":{"df":0,"docs":{},"p":{"_":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":3,"docs":{"16":{"tf":1.4142135623730951},"20":{"tf":1.0},"23":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"24":{"tf":1.0}}},"df":0,"docs":{}}}}}}},"p":{"(":{"df":0,"docs":{},"z":{"df":1,"docs":{"4":{"tf":1.0}}}},"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{".":{"c":{"df":0,"docs":{},"i":{"_":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"1":{"tf":1.0}}}}},"u":{"df":0,"docs":{},"p":{"df":0,"docs":{},"p":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{".":{"df":0,"docs":{},"j":{"_":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"1":{"tf":1.0}}}}}}},"df":1,"docs":{"1":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":9,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"13":{"tf":1.0},"19":{"tf":2.23606797749979},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"5":{"tf":1.7320508075688772},"6":{"tf":1.0},"7":{"tf":1.4142135623730951}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":4,"docs":{"0":{"tf":1.0},"22":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0}}}}},"’":{"df":2,"docs":{"6":{"tf":1.0},"7":{"tf":1.0}}}}},"r":{"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":4,"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.0}}}}}}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"5":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"18":{"tf":1.0},"22":{"tf":1.0}}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}}},"df":1,"docs":{"22":{"tf":1.0}},"e":{"df":0,"docs":{},"n":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"14":{"tf":1.0}}}}}},"df":0,"docs":{}},"r":{"_":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"df":1,"docs":{"16":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":14,"docs":{"0":{"tf":1.0},"11":{"tf":2.23606797749979},"12":{"tf":1.0},"13":{"tf":1.0},"16":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.4142135623730951},"24":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0}}}},"l":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":2,"docs":{"10":{"tf":1.0},"5":{"tf":1.0}}}},"n":{".":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"_":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"(":{"df":0,"docs":{},"f":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":5,"docs":{"1":{"tf":1.7320508075688772},"10":{"tf":1.4142135623730951},"11":{"tf":1.4142135623730951},"18":{"tf":1.0},"7":{"tf":1.7320508075688772}}}},"df":0,"docs":{},"u":{"df":4,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"25":{"tf":1.0},"7":{"tf":1.0}},"g":{"df":2,"docs":{"13":{"tf":1.0},"8":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":2,"docs":{"12":{"tf":1.0},"9":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":1,"docs":{"15":{"tf":1.0}}},"i":{"df":0,"docs":{},"t":{"df":4,"docs":{"11":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0},"3":{"tf":1.4142135623730951}},"i":{"df":0,"docs":{},"v":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}}}}}}}}}}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}},"r":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"df":1,"docs":{"24":{"tf":1.0}}}}},"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":8,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{},"s":{"c":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"df":0,"docs":{}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}},"l":{"df":0,"docs":{},"n":{"df":3,"docs":{"1":{"tf":1.0},"11":{"tf":1.0},"19":{"tf":1.0}}}}}}},"o":{"b":{"a":{"b":{"df":0,"docs":{},"l":{"df":4,"docs":{"16":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"df":2,"docs":{"25":{"tf":1.0},"7":{"tf":1.0}}}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"20":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":12,"docs":{"0":{"tf":1.0},"11":{"tf":1.7320508075688772},"13":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":2.0},"18":{"tf":1.7320508075688772},"2":{"tf":1.0},"23":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"y":{".":{"df":0,"docs":{},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"_":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"(":{"&":{"d":{"a":{"df":0,"docs":{},"t":{"a":{".":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"o":{"df":5,"docs":{"14":{"tf":1.0},"5":{"tf":1.0},"6":{"tf":1.0},"8":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"20":{"tf":1.0}}}},"s":{"df":0,"docs":{},"h":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"6":{"tf":1.0}}},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}}}}}},"r":{"a":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"0":{"tf":1.4142135623730951},"7":{"tf":1.0}}}}},"df":0,"docs":{},"g":{"df":1,"docs":{"16":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":1,"docs":{"10":{"tf":1.0}}}},"w":{"df":5,"docs":{"0":{"tf":1.0},"11":{"tf":1.4142135623730951},"16":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{},"e":{"a":{"c":{"df":0,"docs":{},"h":{"df":1,"docs":{"7":{"tf":1.0}}}},"d":{"df":2,"docs":{"11":{"tf":1.0},"3":{"tf":1.0}},"e":{"df":0,"docs":{},"r":{"df":1,"docs":{"6":{"tf":1.0}}}}},"df":0,"docs":{},"l":{"df":2,"docs":{"17":{"tf":1.0},"8":{"tf":1.0}}}},"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"v":{"df":1,"docs":{"18":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}}}}},"r":{"d":{"df":2,"docs":{"11":{"tf":1.0},"3":{"tf":1.0}}},"df":0,"docs":{}}}},"df":2,"docs":{"12":{"tf":1.0},"5":{"tf":1.0}},"f":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.0},"21":{"tf":1.0},"8":{"tf":1.0}}}}},"g":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":7,"docs":{"0":{"tf":1.0},"11":{"tf":1.0},"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"2":{"tf":1.4142135623730951},"4":{"tf":1.0},"5":{"tf":1.7320508075688772}}}}}}},"j":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"23":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":3,"docs":{"0":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.0}}}}},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"11":{"tf":1.0},"16":{"tf":1.0}}}}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"5":{"tf":1.4142135623730951}}}}},"df":2,"docs":{"24":{"tf":1.4142135623730951},"25":{"tf":1.0}},"l":{"df":0,"docs":{},"i":{"c":{"df":6,"docs":{"17":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":2.23606797749979},"20":{"tf":1.7320508075688772},"21":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{".":{"df":0,"docs":{},"f":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}}}},"df":0,"docs":{}},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":9,"docs":{"11":{"tf":1.0},"14":{"tf":1.0},"16":{"tf":1.0},"17":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"22":{"tf":1.0}}}}}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":2,"docs":{"10":{"tf":1.4142135623730951},"13":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"u":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"i":{"d":{"df":0,"docs":{},"u":{"df":4,"docs":{"16":{"tf":1.0},"5":{"tf":1.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"df":0,"docs":{}},"t":{"df":2,"docs":{"15":{"tf":1.0},"18":{"tf":1.0}},"r":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}}},"u":{"df":0,"docs":{},"l":{"df":0,"docs":{},"t":{"df":2,"docs":{"13":{"tf":1.0},"20":{"tf":1.0}},"s":{".":{"df":0,"docs":{},"j":{"df":0,"docs":{},"s":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"t":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}}},"df":0,"docs":{}}}}}},"t":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}}},"i":{"d":{"df":0,"docs":{},"g":{"df":3,"docs":{"14":{"tf":1.7320508075688772},"15":{"tf":1.4142135623730951},"2":{"tf":1.0}}}},"df":0,"docs":{},"g":{"df":0,"docs":{},"i":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}}},"m":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"19":{"tf":1.4142135623730951},"2":{"tf":1.0},"24":{"tf":1.0}}}}},"o":{"b":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.0},"2":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"t":{"df":1,"docs":{"19":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"21":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"w":{".":{"b":{"df":0,"docs":{},"i":{"a":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}},"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"19":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"d":{"df":1,"docs":{"19":{"tf":1.0}}},"df":0,"docs":{}}}}}},"p":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"r":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"r":{"df":0,"docs":{},"m":{"df":0,"docs":{},"s":{"df":1,"docs":{"19":{"tf":1.0}}}}}},"df":8,"docs":{"11":{"tf":1.7320508075688772},"12":{"tf":1.0},"15":{"tf":2.23606797749979},"16":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.7320508075688772},"23":{"tf":1.0},"24":{"tf":1.0}}}},"u":{"df":0,"docs":{},"n":{".":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"l":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"_":{"df":0,"docs":{},"m":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"c":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"df":0,"docs":{},"o":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":1,"docs":{"19":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":7,"docs":{"1":{"tf":1.0},"12":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.0},"20":{"tf":1.0},"22":{"tf":1.4142135623730951},"24":{"tf":1.0}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":1,"docs":{"13":{"tf":1.0}}}}}}}},"s":{"_":{"df":0,"docs":{},"i":{"df":1,"docs":{"5":{"tf":1.0}}}},"a":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":6,"docs":{"0":{"tf":1.0},"18":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"p":{"df":0,"docs":{},"l":{"df":7,"docs":{"10":{"tf":1.0},"18":{"tf":1.0},"2":{"tf":1.0},"24":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"9":{"tf":1.4142135623730951}}}}},"w":{"df":1,"docs":{"9":{"tf":1.0}}}},"c":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}}},"df":0,"docs":{},"m":{"a":{"df":2,"docs":{"21":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":4,"docs":{"0":{"tf":1.0},"12":{"tf":1.0},"5":{"tf":1.0},"9":{"tf":1.0}}}}}},"df":1,"docs":{"5":{"tf":1.4142135623730951}},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"14":{"tf":1.0},"18":{"tf":1.0},"3":{"tf":1.0},"9":{"tf":1.0}}},"df":0,"docs":{}}},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"df":0,"docs":{},"e":{"d":{"=":{"1":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"df":5,"docs":{"10":{"tf":1.4142135623730951},"18":{"tf":1.0},"20":{"tf":2.23606797749979},"23":{"tf":1.4142135623730951},"24":{"tf":1.0}}},"df":2,"docs":{"2":{"tf":1.7320508075688772},"21":{"tf":1.0}}},"l":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"20":{"tf":1.0}}}}}},"p":{"a":{"df":0,"docs":{},"r":{"df":2,"docs":{"13":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}},"r":{"d":{"df":1,"docs":{"21":{"tf":1.0}}},"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"21":{"tf":1.0}},"i":{"df":0,"docs":{},"z":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"df":0,"docs":{}},"v":{"df":1,"docs":{"8":{"tf":1.0}}}},"t":{"df":3,"docs":{"0":{"tf":1.0},"14":{"tf":1.0},"23":{"tf":1.4142135623730951}}}},"h":{"a":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"8":{"tf":1.0}}}},"r":{"df":0,"docs":{},"e":{"df":3,"docs":{"14":{"tf":1.0},"2":{"tf":1.0},"21":{"tf":1.0}}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"13":{"tf":1.0}}}},"o":{"df":0,"docs":{},"w":{"df":4,"docs":{"16":{"tf":1.0},"19":{"tf":1.0},"3":{"tf":1.0},"7":{"tf":1.4142135623730951}}}},"u":{"df":0,"docs":{},"f":{"df":0,"docs":{},"f":{"df":0,"docs":{},"l":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":2,"docs":{"14":{"tf":1.0},"25":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":2,"docs":{"13":{"tf":1.0},"7":{"tf":1.0}},"e":{"df":0,"docs":{},"x":{"df":3,"docs":{"16":{"tf":1.0},"18":{"tf":1.0},"4":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{":":{":":{"a":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"q":{"df":0,"docs":{},"u":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":7,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":0,"docs":{},"l":{"a":{"c":{"df":0,"docs":{},"k":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"f":{"_":{"df":0,"docs":{},"o":{"df":0,"docs":{},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"p":{"df":2,"docs":{"18":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"_":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"18":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"df":8,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"15":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"21":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}}}}}},"df":9,"docs":{"13":{"tf":1.0},"17":{"tf":1.0},"2":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951},"3":{"tf":1.0},"7":{"tf":1.0},"8":{"tf":1.0}},"t":{"a":{"df":0,"docs":{},"n":{"df":4,"docs":{"18":{"tf":1.0},"19":{"tf":1.0},"23":{"tf":1.7320508075688772},"7":{"tf":1.0}}}},"df":0,"docs":{}}}}},"n":{"df":0,"docs":{},"g":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"14":{"tf":1.7320508075688772}}}},"df":0,"docs":{}}}},"k":{"df":1,"docs":{"24":{"tf":1.0}}}},"x":{"df":2,"docs":{"18":{"tf":1.4142135623730951},"5":{"tf":1.0}}},"z":{"df":0,"docs":{},"e":{"df":3,"docs":{"12":{"tf":1.0},"18":{"tf":1.0},"24":{"tf":1.0}}}}},"l":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":1,"docs":{"14":{"tf":1.4142135623730951}}}}}},"m":{"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"l":{"df":3,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"19":{"tf":1.0}},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}}}}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"21":{"tf":1.0}}}}}},"o":{"df":0,"docs":{},"f":{"df":0,"docs":{},"t":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"x":{"_":{"df":0,"docs":{},"j":{"(":{"df":0,"docs":{},"x":{"df":1,"docs":{"18":{"tf":1.0}}}},"df":0,"docs":{}}},"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}},"w":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}},"l":{"df":0,"docs":{},"v":{"df":1,"docs":{"15":{"tf":1.0}}}},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"23":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"e":{"c":{".":{"df":0,"docs":{},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"15":{"tf":1.0}}}}},"df":0,"docs":{}}}},"p":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}}}},"df":1,"docs":{"15":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":5,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"14":{"tf":1.0},"2":{"tf":1.0},"9":{"tf":1.0}},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"x":{"6":{"4":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":1,"docs":{"10":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"q":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"(":{"df":0,"docs":{},"v":{"_":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"u":{"a":{"df":0,"docs":{},"r":{"df":3,"docs":{"13":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0}}}},"df":0,"docs":{}}},"t":{"a":{"b":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"d":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"y":{"df":3,"docs":{"0":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.0}}}},"d":{".":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":2,"docs":{"15":{"tf":1.0},"20":{"tf":1.0}}}},"o":{"df":0,"docs":{},"p":{"df":1,"docs":{"15":{"tf":1.0}}}},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"10":{"tf":1.4142135623730951}},"i":{"df":3,"docs":{"10":{"tf":1.4142135623730951},"2":{"tf":1.0},"23":{"tf":1.4142135623730951}}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"m":{"df":1,"docs":{"20":{"tf":1.4142135623730951}}}},"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"18":{"tf":1.0}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"23":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":1,"docs":{"18":{"tf":1.0}}}}},"u":{"c":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"21":{"tf":1.4142135623730951}}}},"df":0,"docs":{}}},"u":{"d":{"df":0,"docs":{},"i":{"df":8,"docs":{"0":{"tf":1.0},"13":{"tf":1.0},"18":{"tf":1.0},"19":{"tf":1.0},"2":{"tf":1.4142135623730951},"20":{"tf":1.4142135623730951},"22":{"tf":1.0},"24":{"tf":1.0}}},"y":{".":{"c":{"df":0,"docs":{},"s":{"df":0,"docs":{},"v":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"u":{"b":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":2,"docs":{"22":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"df":0,"docs":{}},"c":{"c":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"df":0,"docs":{},"h":{"df":2,"docs":{"0":{"tf":1.0},"21":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"23":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"r":{"df":1,"docs":{"11":{"tf":1.0}},"i":{"df":1,"docs":{"7":{"tf":1.0}}}}},"df":0,"docs":{}}},"p":{"df":0,"docs":{},"p":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"df":3,"docs":{"10":{"tf":1.0},"13":{"tf":1.0},"25":{"tf":1.0}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"2":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"25":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}}}},"w":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":1,"docs":{"24":{"tf":1.0}}}}}},"y":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"16":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":1,"docs":{"14":{"tf":1.0}}}}}}}},"t":{"a":{"b":{"df":0,"docs":{},"l":{"df":3,"docs":{"23":{"tf":1.7320508075688772},"24":{"tf":1.4142135623730951},"6":{"tf":1.0}}}},"df":0,"docs":{},"k":{"df":0,"docs":{},"e":{"df":1,"docs":{"0":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":2,"docs":{"16":{"tf":1.0},"5":{"tf":1.0}}}},"s":{"df":0,"docs":{},"t":{"df":3,"docs":{"1":{"tf":1.0},"18":{"tf":1.0},"8":{"tf":1.0}}}},"x":{"df":0,"docs":{},"t":{"df":3,"docs":{"21":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.0}}}}},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"k":{"df":1,"docs":{"0":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"9":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"16":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"e":{"a":{"d":{"df":2,"docs":{"20":{"tf":1.4142135623730951},"25":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{},"e":{"df":5,"docs":{"0":{"tf":1.0},"1":{"tf":1.0},"18":{"tf":1.7320508075688772},"2":{"tf":1.4142135623730951},"24":{"tf":1.0}},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"18":{"tf":1.0}}},"df":0,"docs":{}}}}},"s":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"16":{"tf":1.0},"23":{"tf":1.0}}},"df":0,"docs":{}}}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":3,"docs":{"13":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0}}}}}}}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"i":{"df":1,"docs":{"15":{"tf":1.0}}}}},"o":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}},"m":{"df":0,"docs":{},"l":{":":{":":{"df":0,"docs":{},"f":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"(":{"&":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"x":{"df":0,"docs":{},"t":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}},"df":0,"docs":{}}}}},"t":{"df":0,"docs":{},"o":{"_":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{")":{".":{"df":0,"docs":{},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"w":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"21":{"tf":1.0}}}},"df":0,"docs":{}}}}}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":1,"docs":{"21":{"tf":1.0}}}},"o":{"df":0,"docs":{},"l":{"df":3,"docs":{"16":{"tf":1.0},"21":{"tf":1.0},"23":{"tf":1.0}}}},"p":{"df":1,"docs":{"25":{"tf":1.0}}},"t":{"a":{"df":0,"docs":{},"l":{"df":2,"docs":{"11":{"tf":1.0},"15":{"tf":1.0}}}},"df":0,"docs":{}},"w":{"a":{"df":0,"docs":{},"r":{"d":{"df":1,"docs":{"9":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"r":{"a":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":5,"docs":{"0":{"tf":1.0},"10":{"tf":1.4142135623730951},"15":{"tf":1.0},"19":{"tf":1.0},"9":{"tf":1.0}}}},"n":{"df":0,"docs":{},"s":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"v":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":5,"docs":{"0":{"tf":2.0},"23":{"tf":1.7320508075688772},"25":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"p":{"df":2,"docs":{"21":{"tf":1.0},"24":{"tf":1.0}}}},"u":{"df":0,"docs":{},"e":{"_":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"18":{"tf":1.0},"7":{"tf":1.0}},"e":{"(":{"&":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{")":{"?":{"[":{"(":{"0":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}},"df":0,"docs":{}},"df":9,"docs":{"1":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.0},"17":{"tf":1.0},"18":{"tf":1.0},"23":{"tf":1.0},"24":{"tf":1.4142135623730951},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{")":{".":{"a":{"b":{"df":1,"docs":{"7":{"tf":1.4142135623730951}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":3,"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"16":{"tf":1.0}}}},"r":{"df":0,"docs":{},"n":{"df":2,"docs":{"16":{"tf":1.0},"17":{"tf":1.0}}}}},"w":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"14":{"tf":1.0}}}},"o":{"df":7,"docs":{"0":{"tf":1.7320508075688772},"21":{"tf":1.0},"22":{"tf":1.0},"3":{"tf":1.0},"4":{"tf":1.0},"5":{"tf":1.0},"8":{"tf":1.7320508075688772}}}},"y":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"u":{"df":0,"docs":{},"n":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":3,"docs":{"15":{"tf":1.0},"19":{"tf":1.0},"7":{"tf":1.0}}}},"o":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"m":{"df":1,"docs":{"18":{"tf":1.0}}}}}},"t":{"df":12,"docs":{"0":{"tf":1.0},"10":{"tf":1.0},"11":{"tf":1.7320508075688772},"12":{"tf":1.4142135623730951},"13":{"tf":1.0},"14":{"tf":1.4142135623730951},"16":{"tf":2.0},"18":{"tf":1.0},"3":{"tf":1.0},"5":{"tf":2.0},"7":{"tf":1.0},"9":{"tf":1.4142135623730951}},"’":{"df":2,"docs":{"5":{"tf":1.0},"9":{"tf":1.0}}}}},"k":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"w":{"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.4142135623730951}}}}}}},"l":{"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"23":{"tf":1.0}}}}},"u":{"c":{"df":0,"docs":{},"k":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}},"df":0,"docs":{}}},"m":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"r":{"df":1,"docs":{"3":{"tf":1.0}}}}}},"df":0,"docs":{}}},"o":{"b":{"df":0,"docs":{},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"v":{"df":1,"docs":{"17":{"tf":1.0}}}}}}},"df":0,"docs":{}},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"20":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"r":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":1,"docs":{"10":{"tf":1.0}}}}}}},"df":0,"docs":{}}}}},"p":{"df":2,"docs":{"18":{"tf":1.0},"23":{"tf":1.0}}},"s":{"a":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}},"df":13,"docs":{"1":{"tf":2.0},"10":{"tf":1.7320508075688772},"11":{"tf":1.7320508075688772},"13":{"tf":1.4142135623730951},"14":{"tf":1.4142135623730951},"15":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.7320508075688772},"21":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":2.23606797749979}},"u":{"a":{"df":0,"docs":{},"l":{"df":1,"docs":{"3":{"tf":1.0}}}},"df":0,"docs":{}}}},"v":{"_":{"df":0,"docs":{},"h":{"a":{"df":0,"docs":{},"t":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}},"a":{"df":0,"docs":{},"l":{"df":0,"docs":{},"i":{"d":{"df":3,"docs":{"17":{"tf":1.0},"2":{"tf":1.0},"7":{"tf":1.0}}},"df":0,"docs":{}},"u":{"df":3,"docs":{"0":{"tf":1.0},"23":{"tf":1.0},"7":{"tf":1.0}},"e":{"(":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}}},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"c":{"df":3,"docs":{"19":{"tf":1.0},"6":{"tf":1.4142135623730951},"7":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":3,"docs":{"13":{"tf":1.0},"2":{"tf":1.0},"8":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{},"e":{"c":{"!":{"[":{"df":0,"docs":{},"m":{"df":0,"docs":{},"e":{"df":0,"docs":{},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"d":{":":{":":{"d":{"df":0,"docs":{},"i":{"df":0,"docs":{},"f":{"df":1,"docs":{"19":{"tf":1.0}}}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}}}}}}},"df":0,"docs":{}},"<":{"df":0,"docs":{},"u":{"df":0,"docs":{},"s":{"df":2,"docs":{"10":{"tf":1.0},"15":{"tf":1.0}}}}},"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":2,"docs":{"18":{"tf":1.0},"4":{"tf":1.0}}}}}},"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"9":{"tf":1.0}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"23":{"tf":1.0}}}}}}}},"i":{"a":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{},"o":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"t":{"df":2,"docs":{"16":{"tf":1.4142135623730951},"3":{"tf":1.0}}}},"df":0,"docs":{}}},"s":{"df":0,"docs":{},"i":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"15":{"tf":1.0}}}},"df":0,"docs":{}}}},"s":{"df":2,"docs":{"1":{"tf":1.0},"23":{"tf":1.7320508075688772}}}},"w":{"a":{"df":0,"docs":{},"l":{"d":{"df":2,"docs":{"19":{"tf":1.0},"6":{"tf":1.0}}},"df":0,"docs":{},"l":{"df":1,"docs":{"24":{"tf":1.0}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"h":{"df":0,"docs":{},"t":{"df":4,"docs":{"11":{"tf":1.0},"12":{"tf":1.0},"16":{"tf":1.0},"5":{"tf":1.0}}}}}},"l":{"df":0,"docs":{},"l":{"df":2,"docs":{"15":{"tf":1.0},"19":{"tf":1.0}}}}},"h":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"0":{"tf":1.0}}}}}},"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"df":0,"docs":{},"v":{"df":1,"docs":{"5":{"tf":1.0}}}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"0":{"tf":1.0},"10":{"tf":1.0}}}},"s":{"df":0,"docs":{},"e":{"df":3,"docs":{"16":{"tf":1.4142135623730951},"17":{"tf":1.0},"19":{"tf":1.0}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}},"r":{"df":1,"docs":{"19":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"19":{"tf":1.4142135623730951},"24":{"tf":1.0}}}}},"df":0,"docs":{},"n":{"df":1,"docs":{"25":{"tf":1.0}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"o":{"df":0,"docs":{},"u":{"df":0,"docs":{},"t":{"df":3,"docs":{"14":{"tf":1.0},"15":{"tf":1.0},"20":{"tf":1.0}}}}}}}},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"k":{"df":0,"docs":{},"h":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"s":{"df":1,"docs":{"0":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"i":{"df":1,"docs":{"20":{"tf":1.0}}}},"t":{"df":0,"docs":{},"h":{"df":2,"docs":{"10":{"tf":1.0},"16":{"tf":1.0}}}}}},"r":{"a":{"df":0,"docs":{},"p":{"df":1,"docs":{"22":{"tf":1.0}}}},"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":3,"docs":{"23":{"tf":1.0},"24":{"tf":1.0},"4":{"tf":1.0}}},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":2,"docs":{"21":{"tf":1.0},"8":{"tf":1.0}}}}}}},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"g":{"df":2,"docs":{"12":{"tf":1.0},"5":{"tf":1.0}}}}}}},"x":{"1":{",":{"df":0,"docs":{},"x":{"2":{",":{"df":0,"docs":{},"x":{"3":{"df":1,"docs":{"23":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}}},".":{".":{"df":0,"docs":{},"x":{"6":{"df":2,"docs":{"18":{"tf":1.0},"21":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"14":{"tf":1.4142135623730951},"18":{"tf":1.4142135623730951},"19":{"tf":1.0},"4":{"tf":2.23606797749979},"7":{"tf":1.0}},"i":{"=":{"0":{".":{"0":{"0":{"1":{"df":2,"docs":{"23":{"tf":1.0},"24":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":0,"docs":{}},"df":5,"docs":{"11":{"tf":1.4142135623730951},"16":{"tf":2.23606797749979},"21":{"tf":1.0},"23":{"tf":1.7320508075688772},"24":{"tf":1.0}}}},"y":{"(":{"df":0,"docs":{},"j":{"df":2,"docs":{"5":{"tf":1.0},"7":{"tf":1.0}}}},"_":{"df":0,"docs":{},"i":{"df":2,"docs":{"5":{"tf":1.7320508075688772},"9":{"tf":1.0}}}},"df":4,"docs":{"14":{"tf":1.7320508075688772},"23":{"tf":1.0},"25":{"tf":1.0},"4":{"tf":1.0}},"i":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}}}},"z":{"df":1,"docs":{"4":{"tf":1.4142135623730951}},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"o":{"df":4,"docs":{"15":{"tf":1.0},"16":{"tf":1.0},"21":{"tf":1.0},"5":{"tf":1.0}}}}}}}},"breadcrumbs":{"root":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"x":{"df":1,"docs":{"2":{"tf":1.0}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":2,"docs":{"1":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":4,"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.4142135623730951}}}}}},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":2,"docs":{"18":{"tf":1.0},"21":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":6,"docs":{"23":{"tf":1.0},"4":{"tf":1.4142135623730951},"5":{"tf":1.0},"6":{"tf":1.0},"7":{"tf":1.4142135623730951},"8":{"tf":1.0}}}}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}}}},"t":{"df":4,"docs":{"10":{"tf":1.0},"11":{"tf":1.0},"12":{"tf":1.0},"9":{"tf":1.4142135623730951}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"v":{"df":1,"docs":{"6":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":4,"docs":{"0":{"tf":1.4142135623730951},"1":{"tf":1.0},"2":{"tf":1.0},"3":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":4,"docs":{"22":{"tf":1.4142135623730951},"23":{"tf":1.0},"24":{"tf":1.0},"25":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":4,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"c":{"df":4,"docs":{"13":{"tf":1.4142135623730951},"14":{"tf":1.0},"15":{"tf":1.0},"16":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"14":{"tf":1.0},"5":{"tf":1.0}}}}},"df":1,"docs":{"11":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"o":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"24":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":6,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.0},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}},"t":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"i":{"df":6,"docs":{"17":{"tf":1.4142135623730951},"18":{"tf":1.0},"19":{"tf":1.4142135623730951},"20":{"tf":1.0},"21":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"3":{"tf":1.0}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}},"title":{"root":{"a":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":0,"docs":{},"u":{"df":0,"docs":{},"m":{"df":0,"docs":{},"p":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}}}},"b":{"df":0,"docs":{},"o":{"df":0,"docs":{},"x":{"df":1,"docs":{"2":{"tf":1.0}}}},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"10":{"tf":1.0}}},"df":0,"docs":{}}}}},"c":{"df":0,"docs":{},"h":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"k":{"a":{"b":{"df":0,"docs":{},"l":{"df":1,"docs":{"12":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}}},"df":0,"docs":{}}},"l":{"df":0,"docs":{},"i":{"df":0,"docs":{},"p":{"df":1,"docs":{"16":{"tf":1.0}}}}},"o":{"d":{"df":0,"docs":{},"e":{"df":2,"docs":{"1":{"tf":1.0},"25":{"tf":1.0}}}},"df":0,"docs":{},"m":{"df":0,"docs":{},"m":{"a":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"22":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":1,"docs":{"25":{"tf":1.0}}}}}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"s":{"df":1,"docs":{"9":{"tf":1.0}}}}}},"s":{"df":0,"docs":{},"v":{"df":1,"docs":{"23":{"tf":1.0}}}},"u":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":1,"docs":{"21":{"tf":1.0}}}}}}}},"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":0,"docs":{},"i":{"df":0,"docs":{},"n":{"df":1,"docs":{"8":{"tf":1.0}}}}}}},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"g":{"df":0,"docs":{},"n":{"df":2,"docs":{"18":{"tf":1.0},"21":{"tf":1.0}}}}}}}},"df":0,"docs":{},"e":{"df":0,"docs":{},"s":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":0,"docs":{},"m":{"df":3,"docs":{"23":{"tf":1.0},"4":{"tf":1.0},"7":{"tf":1.0}}}}}},"x":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"25":{"tf":1.0}}}}}},"f":{"df":0,"docs":{},"i":{"df":0,"docs":{},"l":{"df":0,"docs":{},"e":{"df":2,"docs":{"23":{"tf":1.0},"25":{"tf":1.0}}}},"t":{"df":1,"docs":{"9":{"tf":1.0}}}},"o":{"df":0,"docs":{},"l":{"d":{"df":1,"docs":{"11":{"tf":1.0}}},"df":0,"docs":{}}},"r":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"3":{"tf":1.0}}}}}}},"i":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":1,"docs":{"12":{"tf":1.0}}}}}},"df":0,"docs":{},"n":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":0,"docs":{},"f":{"a":{"c":{"df":1,"docs":{"7":{"tf":1.0}}},"df":0,"docs":{}},"df":0,"docs":{}},"v":{"df":1,"docs":{"6":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"0":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}}},"l":{"df":0,"docs":{},"e":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":0,"docs":{},"r":{"df":2,"docs":{"14":{"tf":1.0},"15":{"tf":1.0}}}}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"n":{"df":0,"docs":{},"e":{"df":1,"docs":{"22":{"tf":1.0}}}}}},"m":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"e":{"df":0,"docs":{},"l":{"df":1,"docs":{"13":{"tf":1.0}}}}},"df":0,"docs":{}}},"n":{"df":0,"docs":{},"u":{"df":0,"docs":{},"i":{"df":0,"docs":{},"s":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"13":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"o":{"df":0,"docs":{},"n":{"df":1,"docs":{"7":{"tf":1.0}}},"r":{"a":{"c":{"df":0,"docs":{},"l":{"df":1,"docs":{"8":{"tf":1.0}}}},"df":0,"docs":{}},"df":0,"docs":{}},"u":{"df":0,"docs":{},"t":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"m":{"df":2,"docs":{"14":{"tf":1.0},"5":{"tf":1.0}}}}},"df":1,"docs":{"11":{"tf":1.0}}}}},"p":{"df":0,"docs":{},"l":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"10":{"tf":1.0}}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"s":{"df":0,"docs":{},"i":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}}},"r":{"df":0,"docs":{},"e":{"d":{"df":0,"docs":{},"i":{"c":{"df":0,"docs":{},"t":{"df":1,"docs":{"11":{"tf":1.0}}}},"df":0,"docs":{}}},"df":0,"docs":{}},"o":{"df":0,"docs":{},"p":{"df":0,"docs":{},"e":{"df":0,"docs":{},"n":{"df":0,"docs":{},"s":{"df":1,"docs":{"15":{"tf":1.0}}}}}}}},"s":{"df":0,"docs":{},"e":{"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"o":{"df":1,"docs":{"5":{"tf":1.0}}}},"df":0,"docs":{}}}}},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"p":{"df":0,"docs":{},"o":{"df":0,"docs":{},"r":{"df":0,"docs":{},"t":{"df":1,"docs":{"16":{"tf":1.0}}}}},"r":{"df":0,"docs":{},"o":{"d":{"df":0,"docs":{},"u":{"c":{"df":1,"docs":{"20":{"tf":1.0}}},"df":0,"docs":{}}},"df":0,"docs":{}}}}},"u":{"df":0,"docs":{},"n":{"df":2,"docs":{"19":{"tf":1.0},"24":{"tf":1.0}}}}},"s":{"df":0,"docs":{},"e":{"c":{"df":0,"docs":{},"o":{"df":0,"docs":{},"n":{"d":{"df":1,"docs":{"1":{"tf":1.0}}},"df":0,"docs":{}}}},"df":0,"docs":{}},"i":{"df":0,"docs":{},"m":{"df":0,"docs":{},"u":{"df":0,"docs":{},"l":{"df":2,"docs":{"17":{"tf":1.0},"24":{"tf":1.0}},"t":{"a":{"df":0,"docs":{},"n":{"df":1,"docs":{"6":{"tf":1.0}}}},"df":0,"docs":{}}}}},"x":{"df":0,"docs":{},"t":{"df":0,"docs":{},"i":{"df":1,"docs":{"1":{"tf":1.0}}}}}},"t":{"a":{"df":0,"docs":{},"t":{"df":0,"docs":{},"e":{"df":1,"docs":{"3":{"tf":1.0}}}}},"df":0,"docs":{},"u":{"d":{"df":0,"docs":{},"i":{"df":3,"docs":{"17":{"tf":1.0},"19":{"tf":1.0},"24":{"tf":1.0}}}},"df":0,"docs":{}}}},"t":{"df":0,"docs":{},"h":{"df":0,"docs":{},"r":{"df":0,"docs":{},"e":{"df":0,"docs":{},"e":{"df":1,"docs":{"7":{"tf":1.0}}}}}}},"u":{"df":0,"docs":{},"p":{"df":1,"docs":{"3":{"tf":1.0}}}},"v":{"a":{"df":0,"docs":{},"r":{"df":0,"docs":{},"i":{"a":{"df":0,"docs":{},"n":{"c":{"df":1,"docs":{"6":{"tf":1.0}}},"df":0,"docs":{},"t":{"df":1,"docs":{"8":{"tf":1.0}}}}},"df":0,"docs":{}}}},"df":0,"docs":{}}}}},"lang":"English","pipeline":["trimmer","stopWordFilter","stemmer"],"ref":"id","version":"0.9.5"},"results_options":{"limit_results":30,"teaser_word_count":30},"search_options":{"bool":"OR","expand":true,"fields":{"body":{"boost":1},"breadcrumbs":{"boost":1},"title":{"boost":2}}}}'));