use std::fmt::{self, Write as _};
use std::str::FromStr;

/// Which selector produced a [`Decision`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// Minimum Manhattan distance from the normalized ideal vector.
    Mmd,
    /// Weighted sum with weights `1 / L_n`.
    Ws,
    /// Divide-and-conquer knockout tournament over equivalence classes.
    Dnc,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Mmd, Method::Ws, Method::Dnc];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Mmd => "mmd",
            Method::Ws => "ws",
            Method::Dnc => "dnc",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "mmd" => Ok(Method::Mmd),
            "ws" => Ok(Method::Ws),
            "dnc" => Ok(Method::Dnc),
            other => Err(format!(
                "unknown method `{other}` (expected mmd, ws or dnc)"
            )),
        }
    }
}

/// Per-solution scores.
#[derive(Debug, Clone, PartialEq)]
pub struct Score {
    pub id: String,
    /// `||y(x) - y_opt||_1`.
    pub mmd: f64,
    /// `sum_n f_n(x) / L_n`.
    pub ws: f64,
}

/// One pairwise class comparison of the tournament.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRecord {
    /// Tournament round, starting at 1.
    pub round: usize,
    /// Class index (into the ascending class list) of the left contender.
    pub left: usize,
    pub right: usize,
    /// Net improvement percentage of moving from `left` to `right`.
    pub ip: f64,
    /// `right` when `ip > 0`, otherwise `left`.
    pub winner: usize,
}

/// Outcome of a knee selection.
#[derive(Debug, Clone, PartialEq)]
pub struct Decision {
    pub method: Method,
    /// Members of the winning equivalence class, ascending by score then id.
    pub winner: Vec<String>,
    /// Objective vectors of the winners, aligned with `winner`.
    pub knee: Vec<Vec<f64>>,
    pub c_min_mmd: f64,
    pub c_min_ws: f64,
    /// One entry per solution, in front order.
    pub scores: Vec<Score>,
    /// Tournament comparisons; only for [`Method::Dnc`].
    pub trace: Option<Vec<ComparisonRecord>>,
}

impl Decision {
    /// Lexicographically smallest winner id.
    pub fn representative(&self) -> &str {
        self.winner
            .iter()
            .min()
            .map(String::as_str)
            .expect("a decision always has a winner")
    }

    /// Winner ids in lexicographic order, for set comparisons.
    pub fn winner_set(&self) -> Vec<String> {
        let mut ids = self.winner.clone();
        ids.sort();
        ids
    }

    /// JSON document with fixed key order and every number printed with
    /// 17 significant digits, so equal decisions serialize to equal bytes.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        let _ = writeln!(out, "  \"method\": {},", quote(self.method.as_str()));
        let ids: Vec<String> = self.winner.iter().map(|s| quote(s)).collect();
        let _ = writeln!(out, "  \"winner_ids\": [{}],", ids.join(", "));
        let knee: Vec<String> = self.knee.iter().map(|f| number_list(f)).collect();
        let _ = writeln!(out, "  \"knee\": [{}],", knee.join(", "));
        let _ = writeln!(out, "  \"c_min_mmd\": {},", format_number(self.c_min_mmd));
        let _ = writeln!(out, "  \"c_min_ws\": {},", format_number(self.c_min_ws));
        out.push_str("  \"scores\": [");
        for (i, s) in self.scores.iter().enumerate() {
            out.push_str(if i == 0 { "\n" } else { ",\n" });
            let _ = write!(
                out,
                "    {{\"id\": {}, \"mmd\": {}, \"ws\": {}}}",
                quote(&s.id),
                format_number(s.mmd),
                format_number(s.ws)
            );
        }
        out.push_str("\n  ]");
        if let Some(trace) = &self.trace {
            out.push_str(",\n  \"trace\": [");
            for (i, c) in trace.iter().enumerate() {
                out.push_str(if i == 0 { "\n" } else { ",\n" });
                let _ = write!(
                    out,
                    "    {{\"round\": {}, \"left\": {}, \"right\": {}, \"ip\": {}, \"winner\": {}}}",
                    c.round,
                    c.left,
                    c.right,
                    format_number(c.ip),
                    c.winner
                );
            }
            out.push_str(if trace.is_empty() { "]" } else { "\n  ]" });
        }
        out.push_str("\n}\n");
        out
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// 17 significant digits in scientific notation; parses back to the same `f64`.
pub fn format_number(v: f64) -> String {
    format!("{v:.16e}")
}

fn number_list(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|&v| format_number(v)).collect();
    format!("[{}]", parts.join(", "))
}
