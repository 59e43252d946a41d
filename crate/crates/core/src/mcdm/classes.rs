use std::cmp::Ordering;

use crate::front::NormalizedFront;

use super::manhattan_distance;

/// Solutions whose net improvement percentage between each other is zero
/// (up to the grouping tolerance).
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceClass {
    /// Member ids, ascending by normalized sum then id.
    pub members: Vec<String>,
    /// Rows of the members in the source front, aligned with `members`.
    pub rows: Vec<usize>,
    /// Normalized sum of the class representative (its first member),
    /// measured from the ideal vector.
    pub sum: f64,
}

impl EquivalenceClass {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, id: &str) -> bool {
        self.members.iter().any(|m| m == id)
    }
}

/// Partition of a front into equivalence classes, ascending by normalized sum.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivalenceClasses {
    pub classes: Vec<EquivalenceClass>,
    pub epsilon: f64,
}

impl EquivalenceClasses {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Index of the class holding the solution at `row`.
    pub fn class_of_row(&self, row: usize) -> Option<usize> {
        self.classes.iter().position(|c| c.rows.contains(&row))
    }

    pub fn class_of(&self, id: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.contains(id))
    }
}

/// Largest gap from a representative sum `rep` that still joins its class.
pub(crate) fn join_threshold(rep: f64, epsilon: f64) -> f64 {
    epsilon * rep.abs().max(1.0)
}

/// Sorts by (sum, id): deterministic under any permutation of input rows.
pub(crate) fn by_sum_then_id<'a: 's, 's>(
    nf: &NormalizedFront<'a>,
    sums: &'s [f64],
) -> impl Fn(&usize, &usize) -> Ordering + 's {
    let sols = nf.front().solutions();
    move |&a, &b| {
        sums[a]
            .total_cmp(&sums[b])
            .then_with(|| sols[a].id.cmp(&sols[b].id))
    }
}

/// Groups solutions by equal normalized sum.
///
/// Sums are measured from the ideal vector, `sum_n (y_n - y_opt_n)`, which
/// differs from `sum_n y_n` by a constant and therefore induces the same
/// relation. Solutions are visited in ascending order; each one joins the
/// current class when it lies within `epsilon * max(1, |s|)` of the class
/// representative `s` (the class's first member), otherwise it opens a new
/// class.
///
/// # Panics
///
/// If `epsilon` is negative or NaN.
pub fn build_classes(nf: &NormalizedFront<'_>, epsilon: f64) -> EquivalenceClasses {
    assert!(
        epsilon >= 0.0,
        "epsilon must be non-negative, got {epsilon}"
    );
    let sums: Vec<f64> = (0..nf.len()).map(|r| manhattan_distance(nf, r)).collect();
    let mut order: Vec<usize> = (0..nf.len()).collect();
    order.sort_by(by_sum_then_id(nf, &sums));

    let sols = nf.front().solutions();
    let mut classes: Vec<EquivalenceClass> = Vec::new();
    for row in order {
        let s = sums[row];
        match classes.last_mut() {
            Some(class) if s - class.sum <= join_threshold(class.sum, epsilon) => {
                class.members.push(sols[row].id.clone());
                class.rows.push(row);
            }
            _ => classes.push(EquivalenceClass {
                members: vec![sols[row].id.clone()],
                rows: vec![row],
                sum: s,
            }),
        }
    }
    EquivalenceClasses { classes, epsilon }
}
