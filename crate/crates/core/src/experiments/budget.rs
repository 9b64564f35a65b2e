use serde::{Deserialize, Serialize};

use super::ExperimentError;
use crate::estimator::{full_non_adaptive_edge, EstimatorParams, SampleSizes};
use crate::graph::{gen_named, Shape};
use crate::oracle::QueryLedger;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BudgetRow {
    pub n: usize,
    pub epsilon: f64,
    pub sizes: SampleSizes,
    /// `|S| + |T| + R·t_col + s`, from the parameters alone.
    pub planned_total: u64,
    /// What the oracle actually charged.
    pub measured: QueryLedger,
    /// `measured.total() / (√n · ln n · ε^-2.5)`
    pub ratio: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BudgetTable {
    pub rows: Vec<BudgetRow>,
    pub ratio_bound: f64,
    pub within_bound: bool,
    pub exact: bool,
}

/// Upper bound on `total / (√n ln n ε^-2.5)` valid for every `n >= 2` and
/// `ε <= 1`, obtained by bounding each ceiling by its argument plus one:
/// with `D = √n ln n ε^-2.5 >= √2 ln 2`, each rounding adds at most
/// `1/(√2 ln 2) < 1.03` to the ratio, `t_col <= (√2 + 1/√2)√n` and
/// `R <= (c_R + 1/ln 2) ln n`.
pub fn budget_ratio_bound(params: &EstimatorParams) -> f64 {
    let per_ceiling = 1.0 / (2f64.sqrt() * 2f64.ln());
    let batch = 2f64.sqrt() + 1.0 / 2f64.sqrt();
    let reps = params.c_r + 1.0 / 2f64.ln();
    let batches = params.collision_batches as f64;
    params.c_s + params.c_t + batches * params.c_f + (2.0 + batches) * per_ceiling + batch * reps
}

pub fn run_query_budget_check(
    ns: &[usize],
    epsilons: &[f64],
    base: &EstimatorParams,
) -> Result<BudgetTable, ExperimentError> {
    let bound = budget_ratio_bound(base);
    let mut rows = Vec::new();
    for &n in ns {
        let graph = gen_named(Shape::Path, n, 0)?;
        for &epsilon in epsilons {
            let params = EstimatorParams {
                epsilon,
                gamma: epsilon / 10.0,
                ..*base
            };
            params.validate()?;
            let sizes = params.sizes(n);
            let report = full_non_adaptive_edge(&graph, &params)?;
            let nf = n as f64;
            let scale = nf.sqrt() * nf.ln() * epsilon.powf(-2.5);
            rows.push(BudgetRow {
                n,
                epsilon,
                sizes,
                planned_total: sizes.total() as u64,
                measured: report.queries,
                ratio: report.queries.total() as f64 / scale,
            });
        }
    }
    Ok(BudgetTable {
        within_bound: rows.iter().all(|r| r.ratio <= bound),
        exact: rows.iter().all(|r| r.measured.total() == r.planned_total),
        rows,
        ratio_bound: bound,
    })
}
