use crate::front::NormalizedFront;

use super::{select_dnc, select_mmd, select_ws, Decision, McdmError};

/// Relative tolerance on `c_min_ws - c_min_mmd = sum_n l_n / L_n`, scaled by
/// `max(1, |c_min_ws|)`.
pub const OFFSET_TOLERANCE: f64 = 1e-9;

/// Outcome of a cross-method agreement check.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceReport {
    /// Winner ids shared by every selector, sorted.
    pub winner: Vec<String>,
    pub c_min_mmd: f64,
    pub c_min_ws: f64,
    /// `sum_n l_n / L_n` over non-degenerate objectives.
    pub ideal_offset: f64,
    /// `|c_min_ws - c_min_mmd - ideal_offset|`.
    pub offset_error: f64,
    pub seeds: Vec<u64>,
    pub passed: bool,
    pub details: Vec<String>,
}

/// Runs all three selectors (the tournament once per seed) and checks that
/// they agree on the winner class and that the weighted-sum and Manhattan
/// minima differ by exactly the ideal offset.
///
/// Disagreeing winners are an [`McdmError::EquivalenceViolation`]; an offset
/// outside tolerance yields a failed report.
pub fn verify_equivalence(
    nf: &NormalizedFront<'_>,
    epsilon: f64,
    seeds: &[u64],
) -> Result<EquivalenceReport, McdmError> {
    let mmd = select_mmd(nf, epsilon)?;
    let mut others = vec![select_ws(nf, epsilon)?];
    for &seed in seeds {
        others.push(select_dnc(nf, epsilon, seed)?);
    }
    let winner = mmd.winner_set();
    for other in &others {
        agree(&mmd, &winner, other)?;
    }

    let ideal_offset = nf.ideal_offset();
    let offset_error = (mmd.c_min_ws - mmd.c_min_mmd - ideal_offset).abs();
    let limit = OFFSET_TOLERANCE * mmd.c_min_ws.abs().max(1.0);
    let mut details = Vec::new();
    if offset_error > limit {
        details.push(format!(
            "c_min_ws - c_min_mmd = {} but sum of l_n/L_n = {} (error {offset_error:e} > {limit:e})",
            mmd.c_min_ws - mmd.c_min_mmd,
            ideal_offset
        ));
    }
    Ok(EquivalenceReport {
        winner,
        c_min_mmd: mmd.c_min_mmd,
        c_min_ws: mmd.c_min_ws,
        ideal_offset,
        offset_error,
        seeds: seeds.to_vec(),
        passed: details.is_empty(),
        details,
    })
}

fn agree(reference: &Decision, winner: &[String], other: &Decision) -> Result<(), McdmError> {
    let theirs = other.winner_set();
    if theirs == winner {
        return Ok(());
    }
    Err(McdmError::EquivalenceViolation {
        first: reference.method,
        first_winner: winner.to_vec(),
        second: other.method,
        second_winner: theirs,
    })
}
