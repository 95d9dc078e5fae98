//! Built-in simulation designs.
//!
//! All three share the same covariate law and outcome noise and differ only
//! in the arm count and the outcome/propensity coefficient tables. Arm 1's
//! propensity coefficients are identically zero, so its row acts as the
//! softmax reference.

use nalgebra::DMatrix;

use super::SimulationDesign;
use crate::estimators::Method;

const DEFAULT_ESTIMATORS: [Method; 3] = [Method::Dif, Method::Gaipw, Method::Gcf];

fn design(
    name: &str,
    n_arms: usize,
    alphas: DMatrix<f64>,
    betas: DMatrix<f64>,
) -> SimulationDesign {
    SimulationDesign {
        name: name.to_string(),
        n_arms,
        n: 1500,
        alphas,
        betas,
        noise_sd: 1.0,
        replications: 500,
        k: 3,
        estimators: DEFAULT_ESTIMATORS.to_vec(),
        base_seed: 1,
        xi: 1e-3,
        alpha: 0.05,
    }
}

fn scaled(scale: f64, row: [f64; 7]) -> [f64; 7] {
    row.map(|v| scale * v)
}

impl SimulationDesign {
    /// Three arms with moderate propensity coefficients, so every arm keeps
    /// substantial probability over the whole covariate support.
    ///
    /// True effects: `tau_12 = -5.0`, `tau_13 = -5.5`, `tau_23 = -0.5`.
    pub fn adequate_overlap() -> SimulationDesign {
        let alphas = DMatrix::from_row_slice(
            3,
            7,
            &[
                -1.5, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, //
                -2.0, 2.0, 3.0, 1.0, 2.0, 2.0, 2.0, //
                2.0, 3.0, 1.0, 2.0, -1.0, -1.0, -1.0,
            ],
        );
        let mut rows = vec![[0.0; 7]];
        rows.push(scaled(0.3, [0.0, 1.0, 1.0, 1.0, -1.0, 1.0, 1.0]));
        rows.push(scaled(0.1, [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]));
        let betas = DMatrix::from_row_slice(3, 7, &rows.concat());
        design("design1-adequate", 3, alphas, betas)
    }

    /// The same outcome surfaces as [`adequate_overlap`](Self::adequate_overlap)
    /// but with arm 2's propensity coefficients tripled, pushing fitted
    /// propensities toward 0 and 1 and stressing the overlap assumption.
    pub fn lack_of_overlap() -> SimulationDesign {
        let mut d = SimulationDesign::adequate_overlap();
        d.name = "design2-lack".to_string();
        let row2 = scaled(0.9, [0.0, 1.0, 1.0, 1.0, -1.0, 1.0, 1.0]);
        for (c, v) in row2.iter().enumerate() {
            d.betas[(1, c)] = *v;
        }
        d
    }

    /// Six arms, fifteen pairwise contrasts, adequate overlap.
    pub fn six_arms() -> SimulationDesign {
        let alphas = DMatrix::from_row_slice(
            6,
            7,
            &[
                -1.5, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, //
                -3.0, 2.0, 3.0, 1.0, 2.0, 2.0, 2.0, //
                3.0, 3.0, 1.0, 2.0, -1.0, -1.0, 4.0, //
                2.5, 4.0, 1.0, 2.0, -1.0, -1.0, -3.0, //
                2.0, 5.0, 1.0, 2.0, -1.0, -1.0, -2.0, //
                1.5, 6.0, 1.0, 2.0, -1.0, -1.0, -1.0,
            ],
        );
        let rows = [
            [0.0; 7],
            scaled(0.2, [0.0, 1.0, 1.0, 2.0, 1.0, 1.0, 1.0]),
            scaled(0.3, [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, -5.0]),
            scaled(0.4, [0.0, 1.0, 1.0, 1.0, 1.0, 1.0, 5.0]),
            scaled(0.5, [0.0, 1.0, 1.0, 1.0, -2.0, 1.0, 1.0]),
            scaled(0.6, [0.0, 1.0, 1.0, 1.0, -2.0, -1.0, 1.0]),
        ];
        let betas = DMatrix::from_row_slice(6, 7, &rows.concat());
        design("design3-j6", 6, alphas, betas)
    }

    /// A design with caller-supplied coefficient tables and the shared
    /// covariate law. Remaining fields start at the same defaults as the
    /// built-ins and can be adjusted before use.
    pub fn custom(
        name: &str,
        n_arms: usize,
        alphas: DMatrix<f64>,
        betas: DMatrix<f64>,
    ) -> SimulationDesign {
        design(name, n_arms, alphas, betas)
    }

    /// The built-in design registered under `name`, if any.
    pub fn by_name(name: &str) -> Option<SimulationDesign> {
        match name {
            "design1-adequate" => Some(SimulationDesign::adequate_overlap()),
            "design2-lack" => Some(SimulationDesign::lack_of_overlap()),
            "design3-j6" => Some(SimulationDesign::six_arms()),
            _ => None,
        }
    }

    /// Names accepted by [`by_name`](Self::by_name).
    pub fn builtin_names() -> &'static [&'static str] {
        &["design1-adequate", "design2-lack", "design3-j6"]
    }
}
