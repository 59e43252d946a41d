//! Knee selection on approximate Pareto fronts.
//!
//! A front is normalized by the spread of each objective. Three selectors then
//! pick the same winner class: the solutions closest to the normalized ideal
//! vector in Manhattan distance ([`select_mmd`]), the minimizers of a weighted
//! sum with weights `1 / L_n` ([`select_ws`]), and the champion of a knockout
//! tournament over classes of zero net improvement percentage
//! ([`select_dnc`]).
//!
//! ```
//! use knee_mcdm::{gen, normalize, select_mmd, DEFAULT_EPSILON};
//!
//! let front = gen::table1_front();
//! let nf = normalize(&front).unwrap();
//! let decision = select_mmd(&nf, DEFAULT_EPSILON).unwrap();
//! assert_eq!(decision.winner, ["x6"]);
//! ```

pub mod front;
pub mod gen;
pub mod mcdm;

pub use front::{
    dominance_filter, dominates, load_front, normalize, write_front, Format, Front, FrontError,
    NormalizedFront, Sense, Solution,
};
pub use mcdm::{
    build_classes, format_number, improvement_percentage, manhattan_distance, net_improvement,
    rank, select, select_dnc, select_mmd, select_ws, spread_weights, verify_equivalence,
    weighted_sum, ComparisonRecord, Decision, EquivalenceClass, EquivalenceClasses,
    EquivalenceReport, McdmError, Method, RankedClass, Score, DEFAULT_EPSILON, OFFSET_TOLERANCE,
};
