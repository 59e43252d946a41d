//! Wall-clock comparison of the three selectors.
//!
//! Every timed call is `normalize` followed by the selector, on fronts drawn
//! before the clock starts. Times are medians over several batches so that a
//! stray scheduler hiccup does not decide the ordering.

use std::time::Instant;

use knee_mcdm::gen::{generate, Family, FrontSpec};
use knee_mcdm::{normalize, select, Front, Method};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::sampling::noisy_simplex;

const POOL: usize = 16;
const BATCHES: usize = 5;

/// Timing of one method on one workload.
#[derive(Debug, Clone, PartialEq)]
pub struct Timing {
    pub method: Method,
    /// Total over all batches, in seconds.
    pub total: f64,
    /// Median per-run time, in seconds.
    pub mean: f64,
}

/// One workload and its three timings.
#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub category: &'static str,
    pub label: String,
    pub m: usize,
    pub n: usize,
    pub runs: usize,
    pub timings: Vec<Timing>,
    /// Every method picked the same winner class on every front.
    pub agree: bool,
}

impl BenchRow {
    pub fn mean(&self, method: Method) -> f64 {
        self.timings
            .iter()
            .find(|t| t.method == method)
            .map(|t| t.mean)
            .expect("every method is timed")
    }
}

/// Times `runs` selections per method, cycling through `fronts`.
pub fn time_workload(
    category: &'static str,
    label: String,
    fronts: &[Front],
    runs: usize,
    epsilon: f64,
) -> BenchRow {
    let agree = fronts.iter().all(|f| winners_agree(f, epsilon));
    let per_batch = runs.div_ceil(BATCHES).max(1);
    let mut timings = Vec::new();
    for method in Method::ALL {
        let mut batch_means = Vec::with_capacity(BATCHES);
        let mut total = 0.0;
        for b in 0..BATCHES {
            let start = Instant::now();
            for k in 0..per_batch {
                let front = &fronts[(b * per_batch + k) % fronts.len()];
                let nf = normalize(front).expect("bench fronts normalize");
                let d = select(&nf, method, epsilon, k as u64).expect("bench fronts select");
                std::hint::black_box(d);
            }
            let elapsed = start.elapsed().as_secs_f64();
            total += elapsed;
            batch_means.push(elapsed / per_batch as f64);
        }
        batch_means.sort_by(f64::total_cmp);
        timings.push(Timing {
            method,
            total,
            mean: batch_means[BATCHES / 2],
        });
    }
    BenchRow {
        category,
        label,
        m: fronts[0].len(),
        n: fronts[0].dims(),
        runs: per_batch * BATCHES,
        timings,
        agree,
    }
}

fn winners_agree(front: &Front, epsilon: f64) -> bool {
    let nf = normalize(front).expect("bench fronts normalize");
    let sets: Vec<Vec<String>> = Method::ALL
        .iter()
        .map(|&m| {
            select(&nf, m, epsilon, 0)
                .expect("bench fronts select")
                .winner_set()
        })
        .collect();
    sets.windows(2).all(|w| w[0] == w[1])
}

fn simplex_pool(m: usize, n: usize, seed: u64) -> Vec<Front> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..POOL).map(|_| noisy_simplex(&mut rng, m, n)).collect()
}

/// Fixed front size, varying repetition counts.
pub fn c1(run_counts: &[usize], seed: u64, epsilon: f64) -> Vec<BenchRow> {
    let pool = simplex_pool(50, 5, seed);
    run_counts
        .iter()
        .map(|&runs| time_workload("C1", format!("runs={runs}"), &pool, runs, epsilon))
        .collect()
}

/// Growing front size at fixed repetitions.
pub fn c2(sizes: &[usize], runs: usize, seed: u64, epsilon: f64) -> Vec<BenchRow> {
    sizes
        .iter()
        .map(|&m| {
            let pool = simplex_pool(m, 5, seed);
            time_workload("C2", format!("M={m}"), &pool, runs, epsilon)
        })
        .collect()
}

/// The sampled shape families.
pub fn c3(samples: usize, runs: usize, seed: u64, epsilon: f64) -> Vec<BenchRow> {
    let families = [
        Family::Convex2d,
        Family::Concave2d,
        Family::Line2d,
        Family::Disconnected2d,
        Family::Plane3d,
        Family::Sphere3d,
    ];
    families
        .iter()
        .map(|&family| {
            let pool: Vec<Front> = (0..POOL as u64)
                .map(|k| {
                    generate(&FrontSpec::new(family, samples, seed.wrapping_add(k)))
                        .expect("valid spec")
                })
                .collect();
            time_workload("C3", family.to_string(), &pool, runs, epsilon)
        })
        .collect()
}

/// `true` when the tournament's mean time is at least that of both direct
/// methods on every row.
pub fn dnc_slowest(rows: &[BenchRow]) -> bool {
    rows.iter().all(|r| {
        r.mean(Method::Dnc) >= r.mean(Method::Mmd) && r.mean(Method::Dnc) >= r.mean(Method::Ws)
    })
}

pub fn render_text(rows: &[BenchRow]) -> String {
    let mut out = format!(
        "{:<4} {:<16} {:>5} {:>3} {:>7} {:>6} {:>12} {:>12} {}\n",
        "cat", "workload", "M", "N", "runs", "method", "total_ms", "mean_us", "agree"
    );
    for r in rows {
        for t in &r.timings {
            out.push_str(&format!(
                "{:<4} {:<16} {:>5} {:>3} {:>7} {:>6} {:>12.3} {:>12.3} {}\n",
                r.category,
                r.label,
                r.m,
                r.n,
                r.runs,
                t.method.as_str(),
                t.total * 1e3,
                t.mean * 1e6,
                if r.agree { "yes" } else { "NO" }
            ));
        }
    }
    out.push_str(&verdict(rows));
    out
}

pub fn render_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from("category,workload,m,n,runs,method,total_s,mean_s,agree\n");
    for r in rows {
        for t in &r.timings {
            out.push_str(&format!(
                "{},{},{},{},{},{},{:e},{:e},{}\n",
                r.category,
                r.label,
                r.m,
                r.n,
                r.runs,
                t.method.as_str(),
                t.total,
                t.mean,
                r.agree
            ));
        }
    }
    out
}

pub fn verdict(rows: &[BenchRow]) -> String {
    format!(
        "dnc slower than mmd/ws: {}\n",
        if dnc_slowest(rows) { "yes" } else { "no" }
    )
}
