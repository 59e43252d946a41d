use super::{Front, FrontError};

/// A front scaled by its per-objective spreads.
///
/// For every objective `n` with spread `L_n = max f_n - min f_n > 0`:
/// `y_n = f_n / L_n` and the ideal vector is `y_opt_n = min f_n / L_n`.
/// Objectives with zero spread are degenerate: their `y` entries, `y_opt`
/// entry and ideal deviation are all zero.
///
/// The deviation from the ideal vector, `y - y_opt`, is stored separately and
/// computed as `(f_n - min f_n) / L_n`. It lies in `[0, 1]` and stays exact
/// when objective values carry a large common offset.
#[derive(Debug, Clone)]
pub struct NormalizedFront<'a> {
    front: &'a Front,
    spread: Vec<f64>,
    minima: Vec<f64>,
    y: Vec<f64>,
    deviation: Vec<f64>,
    y_opt: Vec<f64>,
    degenerate: Vec<usize>,
}

/// Computes spreads, minima, the normalized matrix and the normalized ideal vector.
///
/// Fails with [`FrontError::AllDimensionsDegenerate`] when two or more
/// solutions coincide in every objective. A single-solution front is accepted;
/// every dimension is then degenerate and every score is zero.
pub fn normalize(front: &Front) -> Result<NormalizedFront<'_>, FrontError> {
    let m = front.len();
    let n = front.dims();
    let mut minima = vec![f64::INFINITY; n];
    let mut maxima = vec![f64::NEG_INFINITY; n];
    for sol in front.solutions() {
        for (k, &v) in sol.f.iter().enumerate() {
            minima[k] = minima[k].min(v);
            maxima[k] = maxima[k].max(v);
        }
    }
    let spread: Vec<f64> = maxima.iter().zip(&minima).map(|(hi, lo)| hi - lo).collect();
    let degenerate: Vec<usize> = (0..n).filter(|&k| spread[k] == 0.0).collect();
    if m > 1 && degenerate.len() == n {
        return Err(FrontError::AllDimensionsDegenerate);
    }

    let y_opt: Vec<f64> = (0..n)
        .map(|k| {
            if spread[k] > 0.0 {
                minima[k] / spread[k]
            } else {
                0.0
            }
        })
        .collect();
    let mut y = Vec::with_capacity(m * n);
    let mut deviation = Vec::with_capacity(m * n);
    for sol in front.solutions() {
        for (k, &v) in sol.f.iter().enumerate() {
            if spread[k] > 0.0 {
                y.push(v / spread[k]);
                deviation.push((v - minima[k]) / spread[k]);
            } else {
                y.push(0.0);
                deviation.push(0.0);
            }
        }
    }

    Ok(NormalizedFront {
        front,
        spread,
        minima,
        y,
        deviation,
        y_opt,
        degenerate,
    })
}

impl<'a> NormalizedFront<'a> {
    pub fn front(&self) -> &'a Front {
        self.front
    }

    pub fn len(&self) -> usize {
        self.front.len()
    }

    pub fn is_empty(&self) -> bool {
        self.front.is_empty()
    }

    pub fn dims(&self) -> usize {
        self.spread.len()
    }

    /// Maximum spread `L_n` per objective, in problem units.
    pub fn spread(&self) -> &[f64] {
        &self.spread
    }

    /// Per-objective minima `l_n`, in problem units.
    pub fn minima(&self) -> &[f64] {
        &self.minima
    }

    /// Normalized ideal vector `l_n / L_n`.
    pub fn y_opt(&self) -> &[f64] {
        &self.y_opt
    }

    /// Normalized objective vector of the solution at `row`.
    pub fn y(&self, row: usize) -> &[f64] {
        let n = self.dims();
        &self.y[row * n..(row + 1) * n]
    }

    /// `y(row) - y_opt`, componentwise in `[0, 1]`.
    pub fn deviation(&self, row: usize) -> &[f64] {
        let n = self.dims();
        &self.deviation[row * n..(row + 1) * n]
    }

    pub fn degenerate_dims(&self) -> &[usize] {
        &self.degenerate
    }

    pub fn is_degenerate(&self, dim: usize) -> bool {
        self.spread[dim] == 0.0
    }

    /// Number of objectives with nonzero spread.
    pub fn active_dims(&self) -> usize {
        self.dims() - self.degenerate.len()
    }

    /// `sum_n l_n / L_n` over non-degenerate objectives: the constant separating
    /// weighted sums from Manhattan distances to the ideal vector.
    pub fn ideal_offset(&self) -> f64 {
        self.y_opt.iter().sum()
    }

    pub fn row_of(&self, id: &str) -> Option<usize> {
        self.front.position(id)
    }
}
