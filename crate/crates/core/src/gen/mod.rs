//! Analytic sample fronts: convex, concave, linear, planar, spherical and
//! disconnected shapes, plus two fixed 16-point fixtures.

mod expect;

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::front::{Front, Sense, Solution};

pub use expect::{expected_selection, Expectation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `f2 = 1 - sqrt(f1)`, `f1` in `[0, 1]`.
    Convex2d,
    /// `f2 = 1 - f1^2`.
    Concave2d,
    /// `f1 + f2 = 1`.
    Line2d,
    /// Simplex `f1 + f2 + f3 = 0.5`.
    Plane3d,
    /// Positive octant of the unit sphere.
    Sphere3d,
    /// `f2 = 1 - sqrt(f1) - f1 sin(10 pi f1)` on its five nondominated pieces.
    Disconnected2d,
    /// Fixed 16-solution, 5-objective front.
    Table1,
    /// Fixed 16-solution front whose first objective has a huge offset
    /// relative to its spread.
    Table2Like,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Convex2d,
        Family::Concave2d,
        Family::Line2d,
        Family::Plane3d,
        Family::Sphere3d,
        Family::Disconnected2d,
        Family::Table1,
        Family::Table2Like,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::Convex2d => "convex2d",
            Family::Concave2d => "concave2d",
            Family::Line2d => "line2d",
            Family::Plane3d => "plane3d",
            Family::Sphere3d => "sphere3d",
            Family::Disconnected2d => "disconnected2d",
            Family::Table1 => "table1",
            Family::Table2Like => "table2like",
        }
    }

    /// Sample count of the fixed fixtures; `None` for sampled families.
    pub fn fixed_size(self) -> Option<usize> {
        match self {
            Family::Table1 | Family::Table2Like => Some(16),
            _ => None,
        }
    }

    fn min_samples(self) -> usize {
        match self {
            Family::Plane3d | Family::Sphere3d => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| GenError::InvalidSpec(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid front spec: {0}")]
    InvalidSpec(String),
    #[error("no selection expectation is defined for {0}")]
    NoExpectation(Family),
}

/// Parameters of a generated front.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrontSpec {
    pub family: Family,
    pub samples: usize,
    pub seed: u64,
    /// Half-width of uniform noise added to every objective value; 0 = exact.
    pub noise: f64,
}

impl FrontSpec {
    pub fn new(family: Family, samples: usize, seed: u64) -> Self {
        Self {
            family,
            samples,
            seed,
            noise: 0.0,
        }
    }

    /// The fixed fixture for `Table1` / `Table2Like`.
    pub fn fixture(family: Family) -> Self {
        Self::new(family, family.fixed_size().unwrap_or(2), 0)
    }

    pub fn validate(&self) -> Result<(), GenError> {
        let invalid = |msg: String| Err(GenError::InvalidSpec(msg));
        if !(self.noise >= 0.0 && self.noise.is_finite()) {
            return invalid(format!(
                "noise must be finite and non-negative, got {}",
                self.noise
            ));
        }
        if let Some(size) = self.family.fixed_size() {
            if self.samples != size {
                return invalid(format!("{} always has {size} samples", self.family));
            }
        }
        if self.samples < self.family.min_samples() {
            return invalid(format!(
                "{} needs at least {} samples, got {}",
                self.family,
                self.family.min_samples(),
                self.samples
            ));
        }
        Ok(())
    }
}

/// Builds the front described by `spec`. Identical specs give identical fronts.
///
/// Sampled 2-D families always include both end points of the curve;
/// `plane3d` and `sphere3d` start with their three vertices.
pub fn generate(spec: &FrontSpec) -> Result<Front, GenError> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let m = spec.samples;
    let (rows, ids): (Vec<Vec<f64>>, Vec<String>) = match spec.family {
        Family::Convex2d => with_ids(stratified(m, &mut rng).map(|t| vec![t, 1.0 - t.sqrt()])),
        Family::Concave2d => with_ids(stratified(m, &mut rng).map(|t| vec![t, 1.0 - t * t])),
        Family::Line2d => with_ids(stratified(m, &mut rng).map(|t| vec![t, 1.0 - t])),
        Family::Plane3d => with_ids(plane(m, &mut rng).into_iter()),
        Family::Sphere3d => with_ids(sphere(m, &mut rng).into_iter()),
        Family::Disconnected2d => with_ids(disconnected(m, &mut rng).into_iter()),
        Family::Table1 => table_ids(TABLE1.iter().map(|r| r.to_vec())),
        Family::Table2Like => table_ids((0..16).map(|k| {
            let t = k as f64 / 15.0;
            vec![4e10 + 3.0 * t, 2.0 * (1.0 - t).powi(6)]
        })),
    };
    let n = rows[0].len();
    let solutions = rows
        .into_iter()
        .zip(ids)
        .map(|(mut f, id)| {
            if spec.noise > 0.0 {
                for v in &mut f {
                    *v += rng.gen_range(-spec.noise..=spec.noise);
                }
            }
            Solution { id, f, x: None }
        })
        .collect();
    Front::new(
        (1..=n).map(|i| format!("f{i}")).collect(),
        vec![Sense::Minimize; n],
        solutions,
    )
    .map_err(|e| GenError::InvalidSpec(e.to_string()))
}

/// The fixed 5-objective fixture, ids `x1..x16`.
pub fn table1_front() -> Front {
    generate(&FrontSpec::fixture(Family::Table1)).expect("fixture is valid")
}

fn with_ids(rows: impl Iterator<Item = Vec<f64>>) -> (Vec<Vec<f64>>, Vec<String>) {
    rows.enumerate().map(|(k, r)| (r, format!("p{k}"))).unzip()
}

fn table_ids(rows: impl Iterator<Item = Vec<f64>>) -> (Vec<Vec<f64>>, Vec<String>) {
    rows.enumerate()
        .map(|(k, r)| (r, format!("x{}", k + 1)))
        .unzip()
}

/// `m` increasing points in `[0, 1]`: both ends plus one jittered point per
/// interior grid cell, kept at least 0.1 cell away from its neighbours' cells.
fn stratified(m: usize, rng: &mut ChaCha8Rng) -> impl Iterator<Item = f64> {
    let last = (m - 1) as f64;
    let ts: Vec<f64> = (0..m)
        .map(|k| {
            if k == 0 {
                0.0
            } else if k == m - 1 {
                1.0
            } else {
                (k as f64 + 0.8 * (rng.gen::<f64>() - 0.5)) / last
            }
        })
        .collect();
    ts.into_iter()
}

fn plane(m: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut rows = vec![
        vec![0.5, 0.0, 0.0],
        vec![0.0, 0.5, 0.0],
        vec![0.0, 0.0, 0.5],
    ];
    while rows.len() < m {
        let (a, b): (f64, f64) = (rng.gen(), rng.gen());
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        rows.push(vec![0.5 * lo, 0.5 * (hi - lo), 0.5 * (1.0 - hi)]);
    }
    rows
}

/// Interior sphere samples keep every coordinate at least this large.
const SPHERE_MARGIN: f64 = 0.05;

fn sphere(m: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let mut rows = vec![
        vec![1.0, 0.0, 0.0],
        vec![0.0, 1.0, 0.0],
        vec![0.0, 0.0, 1.0],
    ];
    while rows.len() < m {
        // Uniform on the octant surface: z uniform, azimuth uniform.
        let z: f64 = rng.gen();
        let phi = FRAC_PI_2 * rng.gen::<f64>();
        let r = (1.0 - z * z).sqrt();
        let p = vec![r * phi.cos(), r * phi.sin(), z];
        if p.iter().all(|&c| c >= SPHERE_MARGIN) {
            rows.push(p);
        }
    }
    rows
}

/// Nondominated `f1` ranges of the disconnected curve.
const DISCONNECTED_PIECES: [(f64, f64); 5] = [
    (0.0, 0.0830015349),
    (0.1822287280, 0.2577623634),
    (0.4093136748, 0.4538821041),
    (0.6183967944, 0.6525117038),
    (0.8233317983, 0.8518328654),
];

/// Each piece after the first starts level with the previous piece's minimum;
/// starting slightly inside keeps its first sample strictly nondominated.
const PIECE_MARGIN: f64 = 1e-4;

fn disconnected(m: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<f64>> {
    let pieces: Vec<(f64, f64)> = DISCONNECTED_PIECES
        .iter()
        .enumerate()
        .map(|(k, &(a, b))| {
            if k == 0 {
                (a, b)
            } else {
                (a + PIECE_MARGIN, b)
            }
        })
        .collect();
    let total: f64 = pieces.iter().map(|(a, b)| b - a).sum();
    stratified(m, rng)
        .map(|t| {
            // Walk the concatenated pieces to the arc-length position `t * total`.
            let mut rest = t * total;
            let mut x = pieces[pieces.len() - 1].1;
            for &(a, b) in &pieces {
                if rest <= b - a {
                    x = a + rest;
                    break;
                }
                rest -= b - a;
            }
            vec![x, 1.0 - x.sqrt() - x * (10.0 * PI * x).sin()]
        })
        .collect()
}

/// Normalized DTLZ1 samples; the column spreads are 1 up to the fourth decimal.
const TABLE1: [[f64; 5]; 16] = [
    [0.0074, 0.0026, 0.0152, 0.1500, 1.0080],
    [0.0084, 0.0281, 0.0476, 0.0830, 0.7508],
    [0.0397, 0.0009, 0.2390, 0.5895, 0.3838],
    [0.0786, 0.1104, 0.9212, 0.3954, 0.3643],
    [0.1045, 0.2175, 0.2645, 0.8646, 0.2316],
    [0.1075, 0.1562, 0.0634, 0.0403, 0.5492],
    [0.1081, 0.0656, 0.4108, 1.0403, 0.2550],
    [0.1494, 0.2953, 0.1129, 0.4294, 0.0080],
    [0.1845, 1.0010, 0.0744, 0.3853, 0.2971],
    [0.1915, 0.2743, 1.0152, 0.1228, 0.3714],
    [0.3801, 0.1362, 0.0425, 0.7685, 0.0800],
    [0.4236, 0.1452, 0.5504, 0.5501, 0.1205],
    [0.5124, 0.7438, 0.0866, 0.0797, 0.0101],
    [0.6835, 0.2687, 0.1543, 0.2769, 0.1571],
    [0.8185, 0.4825, 0.3371, 0.2555, 0.1091],
    [1.0074, 0.3698, 0.1104, 0.2089, 0.0911],
];
