//! Approximate Pareto fronts: data model, ingestion, dominance filtering and
//! spread normalization.

mod dominance;
mod io;
mod normalize;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use dominance::{dominance_filter, dominates};
pub use io::{load_front, write_front, Format};
pub use normalize::{normalize, NormalizedFront};

/// Optimization direction of an objective column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "min")]
    Minimize,
    #[serde(rename = "max")]
    Maximize,
}

impl Sense {
    pub fn as_str(self) -> &'static str {
        match self {
            Sense::Minimize => "min",
            Sense::Maximize => "max",
        }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Sense {
    type Err = FrontError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "min" | "minimize" => Ok(Sense::Minimize),
            "max" | "maximize" => Ok(Sense::Maximize),
            other => Err(FrontError::Parse {
                line: None,
                message: format!("unknown sense `{other}` (expected min or max)"),
            }),
        }
    }
}

/// One member of the approximate Pareto set together with its image.
#[derive(Debug, Clone, PartialEq)]
pub struct Solution {
    pub id: String,
    /// Objective values, already converted to minimization.
    pub f: Vec<f64>,
    /// Optional decision-variable payload. Never evaluated.
    pub x: Option<Vec<f64>>,
}

impl Solution {
    pub fn new(id: impl Into<String>, f: Vec<f64>) -> Self {
        Self {
            id: id.into(),
            f,
            x: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrontError {
    #[error("parse error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse {
        line: Option<usize>,
        message: String,
    },
    #[error("non-finite value for solution `{id}` in column `{col}`")]
    NonFiniteValue { id: String, col: String },
    #[error("duplicate solution id `{0}`")]
    DuplicateId(String),
    #[error("front contains no solutions")]
    EmptyFront,
    #[error("a front needs at least two objectives, got {0}")]
    TooFewObjectives(usize),
    #[error("solution `{id}` has {got} objective values, expected {expected}")]
    Arity {
        id: String,
        got: usize,
        expected: usize,
    },
    #[error("unknown objective column `{0}`")]
    UnknownColumn(String),
    #[error("every objective has zero spread; all solutions coincide in objective space")]
    AllDimensionsDegenerate,
}

/// An approximate Pareto front: `M` solutions over `N` minimized objectives.
///
/// Immutable once built; [`Front::new`] enforces the shape invariants.
#[derive(Debug, Clone)]
pub struct Front {
    objective_names: Vec<String>,
    senses: Vec<Sense>,
    solutions: Vec<Solution>,
    index: HashMap<String, usize>,
}

impl PartialEq for Front {
    fn eq(&self, other: &Self) -> bool {
        self.objective_names == other.objective_names
            && self.senses == other.senses
            && self.solutions == other.solutions
    }
}

impl Front {
    /// Builds a front from values that are already in minimization form.
    pub fn new(
        objective_names: Vec<String>,
        senses: Vec<Sense>,
        solutions: Vec<Solution>,
    ) -> Result<Self, FrontError> {
        let n = objective_names.len();
        if n < 2 {
            return Err(FrontError::TooFewObjectives(n));
        }
        if senses.len() != n {
            return Err(FrontError::Parse {
                line: None,
                message: format!("{} senses given for {n} objectives", senses.len()),
            });
        }
        if solutions.is_empty() {
            return Err(FrontError::EmptyFront);
        }
        let mut index = HashMap::with_capacity(solutions.len());
        for (row, sol) in solutions.iter().enumerate() {
            if sol.f.len() != n {
                return Err(FrontError::Arity {
                    id: sol.id.clone(),
                    got: sol.f.len(),
                    expected: n,
                });
            }
            if let Some(col) = sol.f.iter().position(|v| !v.is_finite()) {
                return Err(FrontError::NonFiniteValue {
                    id: sol.id.clone(),
                    col: objective_names[col].clone(),
                });
            }
            if index.insert(sol.id.clone(), row).is_some() {
                return Err(FrontError::DuplicateId(sol.id.clone()));
            }
        }
        Ok(Self {
            objective_names,
            senses,
            solutions,
            index,
        })
    }

    /// All-minimize front with objectives named `f1..fN`.
    pub fn from_rows<I, S>(rows: I) -> Result<Self, FrontError>
    where
        I: IntoIterator<Item = (S, Vec<f64>)>,
        S: Into<String>,
    {
        let solutions: Vec<Solution> = rows
            .into_iter()
            .map(|(id, f)| Solution::new(id, f))
            .collect();
        let n = solutions.first().map(|s| s.f.len()).unwrap_or(2);
        Self::new(
            (1..=n).map(|i| format!("f{i}")).collect(),
            vec![Sense::Minimize; n],
            solutions,
        )
    }

    pub fn objective_names(&self) -> &[String] {
        &self.objective_names
    }

    pub fn senses(&self) -> &[Sense] {
        &self.senses
    }

    pub fn solutions(&self) -> &[Solution] {
        &self.solutions
    }

    /// Number of solutions `M`.
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    /// Number of objectives `N`.
    pub fn dims(&self) -> usize {
        self.objective_names.len()
    }

    pub fn position(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn get(&self, id: &str) -> Option<&Solution> {
        self.position(id).map(|i| &self.solutions[i])
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.solutions.iter().map(|s| s.id.as_str())
    }

    /// Same objectives and senses, restricted to the given rows (in the given order).
    pub(crate) fn subset(&self, rows: &[usize]) -> Front {
        let solutions: Vec<Solution> = rows.iter().map(|&r| self.solutions[r].clone()).collect();
        let index = solutions
            .iter()
            .enumerate()
            .map(|(i, s)| (s.id.clone(), i))
            .collect();
        Front {
            objective_names: self.objective_names.clone(),
            senses: self.senses.clone(),
            solutions,
            index,
        }
    }
}
