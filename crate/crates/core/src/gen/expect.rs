use std::collections::BTreeSet;

use crate::front::Front;
use crate::mcdm::Decision;

use super::{Family, GenError};

/// What the winner class must look like for a front family.
#[derive(Debug, Clone, PartialEq)]
pub enum Expectation {
    /// A single solution that is extreme in no objective (the knee region).
    InteriorSingleton,
    /// Exactly the solutions that attain the maximum of some objective.
    ExtremeSamples,
    /// Every solution, as one class.
    AllSolutions,
    /// Exactly these ids.
    Winner(Vec<String>),
    /// Weighted sums nearly indistinguishable, Manhattan distances well spread,
    /// and an interior winner.
    WsIndistinguishable {
        /// Upper bound on `(max ws - min ws) / c_min_ws`.
        max_ws_spread: f64,
        /// Lower bound on `max mmd - min mmd`.
        min_mmd_span: f64,
    },
}

/// The selection outcome a family is known to produce.
///
/// `disconnected2d` has none; its winner is characterized by which side of
/// the chord between the two extreme samples it lies on.
pub fn expected_selection(family: Family) -> Result<Expectation, GenError> {
    match family {
        Family::Convex2d => Ok(Expectation::InteriorSingleton),
        Family::Concave2d | Family::Sphere3d => Ok(Expectation::ExtremeSamples),
        Family::Line2d | Family::Plane3d => Ok(Expectation::AllSolutions),
        Family::Table1 => Ok(Expectation::Winner(vec!["x6".into()])),
        Family::Table2Like => Ok(Expectation::WsIndistinguishable {
            max_ws_spread: 1e-6,
            min_mmd_span: 0.5,
        }),
        Family::Disconnected2d => Err(GenError::NoExpectation(family)),
    }
}

/// Ids of solutions attaining the maximum of at least one objective.
fn extreme_ids(front: &Front) -> BTreeSet<String> {
    let mut ids = BTreeSet::new();
    for n in 0..front.dims() {
        let max = front
            .solutions()
            .iter()
            .map(|s| s.f[n])
            .fold(f64::NEG_INFINITY, f64::max);
        ids.extend(
            front
                .solutions()
                .iter()
                .filter(|s| s.f[n] == max)
                .map(|s| s.id.clone()),
        );
    }
    ids
}

fn is_interior_singleton(front: &Front, decision: &Decision) -> Result<(), String> {
    let [winner] = decision.winner.as_slice() else {
        return Err(format!("expected one winner, got {:?}", decision.winner));
    };
    let sol = front
        .get(winner)
        .ok_or_else(|| format!("unknown winner {winner}"))?;
    for n in 0..front.dims() {
        let col = front.solutions().iter().map(|s| s.f[n]);
        let (lo, hi) = col.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
            (lo.min(v), hi.max(v))
        });
        if sol.f[n] == lo || sol.f[n] == hi {
            return Err(format!("winner {winner} is extreme in objective {}", n + 1));
        }
    }
    Ok(())
}

impl Expectation {
    /// Checks `decision`, made on `front`, against the expectation.
    pub fn check(&self, front: &Front, decision: &Decision) -> Result<(), String> {
        let winner: BTreeSet<String> = decision.winner.iter().cloned().collect();
        match self {
            Expectation::InteriorSingleton => is_interior_singleton(front, decision),
            Expectation::ExtremeSamples => {
                let want = extreme_ids(front);
                if winner == want {
                    Ok(())
                } else {
                    Err(format!("winner {winner:?}, extreme samples {want:?}"))
                }
            }
            Expectation::AllSolutions => {
                if winner.len() == front.len() {
                    Ok(())
                } else {
                    Err(format!(
                        "winner class has {} of {} solutions",
                        winner.len(),
                        front.len()
                    ))
                }
            }
            Expectation::Winner(ids) => {
                let want: BTreeSet<String> = ids.iter().cloned().collect();
                if winner == want {
                    Ok(())
                } else {
                    Err(format!("winner {winner:?}, expected {want:?}"))
                }
            }
            Expectation::WsIndistinguishable {
                max_ws_spread,
                min_mmd_span,
            } => {
                let span = |f: fn(&crate::mcdm::Score) -> f64| {
                    let (lo, hi) = decision
                        .scores
                        .iter()
                        .map(f)
                        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                            (lo.min(v), hi.max(v))
                        });
                    hi - lo
                };
                let ws_spread = span(|s| s.ws) / decision.c_min_ws.abs();
                let mmd_span = span(|s| s.mmd);
                if ws_spread >= *max_ws_spread {
                    return Err(format!("relative weighted-sum spread {ws_spread:e}"));
                }
                if mmd_span < *min_mmd_span {
                    return Err(format!("Manhattan distance span {mmd_span}"));
                }
                is_interior_singleton(front, decision)
            }
        }
    }
}
