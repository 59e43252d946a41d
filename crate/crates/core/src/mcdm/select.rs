use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::front::NormalizedFront;

use super::classes::{build_classes, by_sum_then_id, join_threshold, EquivalenceClass};
use super::{
    manhattan_distance, spread_weights, weighted_sum, ComparisonRecord, Decision, McdmError,
    Method, Score,
};

fn check(nf: &NormalizedFront<'_>, epsilon: f64) -> Result<(), McdmError> {
    if !(epsilon >= 0.0 && epsilon.is_finite()) {
        return Err(McdmError::InvalidEpsilon(epsilon));
    }
    if nf.len() > 1 && nf.active_dims() == 0 {
        return Err(McdmError::AllDimensionsDegenerate);
    }
    Ok(())
}

/// Both scores for every row: Manhattan distance to the ideal vector and
/// spread-weighted sum.
fn score_table(nf: &NormalizedFront<'_>) -> (Vec<f64>, Vec<f64>) {
    let weights = spread_weights(nf);
    let mmd = (0..nf.len()).map(|r| manhattan_distance(nf, r)).collect();
    let ws = (0..nf.len())
        .map(|r| weighted_sum(nf, &weights, r))
        .collect();
    (mmd, ws)
}

fn argmin(nf: &NormalizedFront<'_>, values: &[f64]) -> usize {
    let cmp = by_sum_then_id(nf, values);
    (0..values.len())
        .min_by(|a, b| cmp(a, b))
        .expect("fronts are never empty")
}

fn decision(
    nf: &NormalizedFront<'_>,
    method: Method,
    winner_rows: &[usize],
    mmd: Vec<f64>,
    ws: Vec<f64>,
    trace: Option<Vec<ComparisonRecord>>,
) -> Decision {
    let sols = nf.front().solutions();
    let min = |v: &[f64]| v.iter().copied().fold(f64::INFINITY, f64::min);
    Decision {
        method,
        winner: winner_rows.iter().map(|&r| sols[r].id.clone()).collect(),
        knee: winner_rows.iter().map(|&r| sols[r].f.clone()).collect(),
        c_min_mmd: min(&mmd),
        c_min_ws: min(&ws),
        scores: sols
            .iter()
            .zip(mmd.iter().zip(&ws))
            .map(|(s, (&mmd, &ws))| Score {
                id: s.id.clone(),
                mmd,
                ws,
            })
            .collect(),
        trace,
    }
}

/// Minimum Manhattan distance selection.
///
/// Every solution is scored by `1^T (y(x) - y_opt)`; the winner is the class
/// of solutions within the class tolerance of the smallest distance. Runs in
/// `O(MN)` without building the full partition.
pub fn select_mmd(nf: &NormalizedFront<'_>, epsilon: f64) -> Result<Decision, McdmError> {
    check(nf, epsilon)?;
    let (mmd, ws) = score_table(nf);
    let best = mmd[argmin(nf, &mmd)];
    let limit = join_threshold(best, epsilon);
    let mut winners: Vec<usize> = (0..nf.len()).filter(|&r| mmd[r] - best <= limit).collect();
    winners.sort_by(by_sum_then_id(nf, &mmd));
    Ok(decision(nf, Method::Mmd, &winners, mmd, ws, None))
}

/// Weighted-sum selection with weights `w_n = 1 / L_n`.
///
/// The winner is the equivalence class holding the solution of least
/// weighted sum.
pub fn select_ws(nf: &NormalizedFront<'_>, epsilon: f64) -> Result<Decision, McdmError> {
    check(nf, epsilon)?;
    let (mmd, ws) = score_table(nf);
    let best = argmin(nf, &ws);
    let classes = build_classes(nf, epsilon);
    let class = classes
        .class_of_row(best)
        .expect("classes partition every row");
    let winners = classes.classes[class].rows.clone();
    Ok(decision(nf, Method::Ws, &winners, mmd, ws, None))
}

/// Knockout tournament over equivalence classes.
///
/// Each round shuffles the surviving classes with a generator seeded by
/// `pairing_seed`, pairs them off and keeps the preferred class of every
/// pair: the right class wins when the net improvement percentage of moving
/// from left to right is positive. An unpaired class gets a bye. The winner
/// does not depend on the seed; the trace does.
pub fn select_dnc(
    nf: &NormalizedFront<'_>,
    epsilon: f64,
    pairing_seed: u64,
) -> Result<Decision, McdmError> {
    check(nf, epsilon)?;
    let (mmd, ws) = score_table(nf);
    let classes = build_classes(nf, epsilon);
    let (champion, trace) = tournament(&classes.classes, pairing_seed);
    let winners = classes.classes[champion].rows.clone();
    Ok(decision(nf, Method::Dnc, &winners, mmd, ws, Some(trace)))
}

fn tournament(classes: &[EquivalenceClass], seed: u64) -> (usize, Vec<ComparisonRecord>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut alive: Vec<usize> = (0..classes.len()).collect();
    let mut trace = Vec::with_capacity(classes.len().saturating_sub(1));
    let mut round = 0;
    while alive.len() > 1 {
        round += 1;
        alive.shuffle(&mut rng);
        let mut next = Vec::with_capacity(alive.len().div_ceil(2));
        for pair in alive.chunks(2) {
            match *pair {
                [left, right] => {
                    let ip = 100.0 * (classes[left].sum - classes[right].sum);
                    // Distinct classes are separated by more than the join threshold.
                    assert!(ip != 0.0, "classes {left} and {right} are tied");
                    let winner = if ip > 0.0 { right } else { left };
                    trace.push(ComparisonRecord {
                        round,
                        left,
                        right,
                        ip,
                        winner,
                    });
                    next.push(winner);
                }
                [bye] => next.push(bye),
                _ => unreachable!(),
            }
        }
        alive = next;
    }
    (alive[0], trace)
}

/// Dispatches to the selector for `method`. `seed` only matters for
/// [`Method::Dnc`].
pub fn select(
    nf: &NormalizedFront<'_>,
    method: Method,
    epsilon: f64,
    seed: u64,
) -> Result<Decision, McdmError> {
    match method {
        Method::Mmd => select_mmd(nf, epsilon),
        Method::Ws => select_ws(nf, epsilon),
        Method::Dnc => select_dnc(nf, epsilon, seed),
    }
}

/// One entry of a ranking.
#[derive(Debug, Clone, PartialEq)]
pub struct RankedClass {
    /// 1-based position.
    pub rank: usize,
    pub members: Vec<String>,
    /// Manhattan distance of the class representative to the ideal vector.
    pub mmd: f64,
}

/// All equivalence classes, ascending by Manhattan distance to the ideal vector.
pub fn rank(nf: &NormalizedFront<'_>, epsilon: f64) -> Result<Vec<RankedClass>, McdmError> {
    check(nf, epsilon)?;
    Ok(build_classes(nf, epsilon)
        .classes
        .into_iter()
        .enumerate()
        .map(|(i, c)| RankedClass {
            rank: i + 1,
            members: c.members,
            mmd: c.sum,
        })
        .collect())
}
