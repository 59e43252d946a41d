use super::Front;

/// `a` dominates `b`: no worse in every objective and strictly better in at least one.
pub fn dominates(a: &[f64], b: &[f64]) -> bool {
    let mut strictly_better = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Keeps the nondominated solutions of `front`, in their original order.
///
/// Solutions with identical objective vectors do not dominate each other and
/// are all kept. Returns the filtered front and the ids that were removed,
/// in input order.
pub fn dominance_filter(front: &Front) -> (Front, Vec<String>) {
    let sols = front.solutions();
    let mut kept = Vec::with_capacity(sols.len());
    let mut removed = Vec::new();
    for (i, candidate) in sols.iter().enumerate() {
        let dominated = sols
            .iter()
            .enumerate()
            .any(|(j, other)| j != i && dominates(&other.f, &candidate.f));
        if dominated {
            removed.push(candidate.id.clone());
        } else {
            kept.push(i);
        }
    }
    (front.subset(&kept), removed)
}
