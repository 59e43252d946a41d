//! Knee selection: improvement-percentage algebra, equivalence classes and the
//! three equivalent selectors (minimum Manhattan distance, weighted sum with
//! spread-reciprocal weights, divide-and-conquer tournament).

mod classes;
mod decision;
mod select;
mod verify;

use thiserror::Error;

use crate::front::NormalizedFront;

pub use classes::{build_classes, EquivalenceClass, EquivalenceClasses};
pub use decision::{format_number, ComparisonRecord, Decision, Method, Score};
pub use select::{rank, select, select_dnc, select_mmd, select_ws, RankedClass};
pub use verify::{verify_equivalence, EquivalenceReport, OFFSET_TOLERANCE};

/// Relative tolerance under which two normalized sums are treated as equal.
pub const DEFAULT_EPSILON: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum McdmError {
    #[error("unknown solution id `{0}`")]
    UnknownId(String),
    #[error("objective {0} does not exist")]
    UnknownDimension(usize),
    #[error("objective {0} has zero spread")]
    DegenerateDimension(usize),
    #[error("every objective has zero spread")]
    AllDimensionsDegenerate,
    #[error("epsilon must be finite and non-negative, got {0}")]
    InvalidEpsilon(f64),
    #[error("{first} selected {first_winner:?} but {second} selected {second_winner:?}")]
    EquivalenceViolation {
        first: Method,
        first_winner: Vec<String>,
        second: Method,
        second_winner: Vec<String>,
    },
}

fn row(nf: &NormalizedFront<'_>, id: &str) -> Result<usize, McdmError> {
    nf.row_of(id)
        .ok_or_else(|| McdmError::UnknownId(id.to_string()))
}

/// Improvement percentage of the transition `i -> j` in objective `dim`:
/// `100 (f_dim(i) - f_dim(j)) / L_dim`.
pub fn improvement_percentage(
    nf: &NormalizedFront<'_>,
    i: &str,
    j: &str,
    dim: usize,
) -> Result<f64, McdmError> {
    let (ri, rj) = (row(nf, i)?, row(nf, j)?);
    if dim >= nf.dims() {
        return Err(McdmError::UnknownDimension(dim));
    }
    if nf.is_degenerate(dim) {
        return Err(McdmError::DegenerateDimension(dim));
    }
    Ok(100.0 * (nf.deviation(ri)[dim] - nf.deviation(rj)[dim]))
}

/// Net improvement percentage of the transition `i -> j`, summed over all
/// non-degenerate objectives. Positive means `j` is preferred.
///
/// Evaluated as a difference of two per-solution sums, so it is exactly
/// antisymmetric and exactly zero for `i == j`.
pub fn net_improvement(nf: &NormalizedFront<'_>, i: &str, j: &str) -> Result<f64, McdmError> {
    let (ri, rj) = (row(nf, i)?, row(nf, j)?);
    Ok(100.0 * (manhattan_distance(nf, ri) - manhattan_distance(nf, rj)))
}

/// `||y(x) - y_opt||_1` for the solution at `row`. Every deviation is
/// non-negative, so this is the plain sum `1^T (y(x) - y_opt)`.
pub fn manhattan_distance(nf: &NormalizedFront<'_>, row: usize) -> f64 {
    nf.deviation(row).iter().sum()
}

/// Weighted-sum weights `w_n = 1 / L_n`; zero on degenerate objectives.
pub fn spread_weights(nf: &NormalizedFront<'_>) -> Vec<f64> {
    nf.spread()
        .iter()
        .map(|&l| if l > 0.0 { 1.0 / l } else { 0.0 })
        .collect()
}

/// `sum_n w_n f_n(x)` with spread-reciprocal weights.
pub fn weighted_sum(nf: &NormalizedFront<'_>, weights: &[f64], row: usize) -> f64 {
    nf.front().solutions()[row]
        .f
        .iter()
        .zip(weights)
        .map(|(f, w)| f * w)
        .sum()
}
