//! Random fronts for self-tests and timing runs.

use knee_mcdm::gen::{generate, Family, FrontSpec};
use knee_mcdm::{dominance_filter, normalize, Front};
use rand::Rng;

const SHAPES: [Family; 6] = [
    Family::Convex2d,
    Family::Concave2d,
    Family::Line2d,
    Family::Plane3d,
    Family::Sphere3d,
    Family::Disconnected2d,
];

/// A nondominated front with at most `max_m` solutions and `2..=max_n`
/// objectives that normalizes without error.
///
/// Draws either uniform points in the unit cube (optionally snapped to a
/// quarter grid so exact ties occur), or a sample of one of the analytic
/// shape families.
pub fn random_front<R: Rng>(rng: &mut R, max_m: usize, max_n: usize) -> Front {
    loop {
        let front = match rng.gen_range(0..3) {
            0 | 1 => {
                let quantized = rng.gen_bool(0.3);
                let n = rng.gen_range(2..=max_n);
                let m = rng.gen_range(1..=max_m);
                let rows = (0..m).map(|i| {
                    let f = (0..n)
                        .map(|_| {
                            let v: f64 = rng.gen();
                            if quantized {
                                (v * 4.0).round() / 4.0
                            } else {
                                v
                            }
                        })
                        .collect();
                    (format!("s{i}"), f)
                });
                let rows: Vec<_> = rows.collect();
                dominance_filter(&Front::from_rows(rows).expect("valid rows")).0
            }
            _ => {
                let family = SHAPES[rng.gen_range(0..SHAPES.len())];
                let samples = rng.gen_range(3..=max_m.max(3));
                generate(&FrontSpec::new(family, samples, rng.gen())).expect("valid spec")
            }
        };
        if normalize(&front).is_ok() {
            return front;
        }
    }
}

/// An approximate DTLZ1-style front: `m` points scattered around the simplex
/// `sum f = 0.5` in `n` objectives, every point with a distinct normalized sum.
pub fn noisy_simplex<R: Rng>(rng: &mut R, m: usize, n: usize) -> Front {
    let rows = (0..m).map(|i| {
        let mut cuts: Vec<f64> = (0..n - 1).map(|_| rng.gen()).collect();
        cuts.push(0.0);
        cuts.push(1.0);
        cuts.sort_by(f64::total_cmp);
        let lift = 1.0 + 0.5 * rng.gen::<f64>();
        let f = cuts
            .windows(2)
            .map(|w| 0.5 * (w[1] - w[0]) * lift)
            .collect();
        (format!("x{}", i + 1), f)
    });
    Front::from_rows(rows.collect::<Vec<_>>()).expect("valid rows")
}
