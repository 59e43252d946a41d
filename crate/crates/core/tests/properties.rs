use knee_mcdm::{
    build_classes, dominance_filter, net_improvement, normalize, rank, select_dnc, select_mmd,
    select_ws, verify_equivalence, Front,
};
use proptest::prelude::*;

/// Exhaustive pairwise dominance check, written out independently of the library.
fn brute_force_nondominated(rows: &[Vec<f64>]) -> Vec<usize> {
    (0..rows.len())
        .filter(|&i| {
            !(0..rows.len()).any(|j| {
                j != i
                    && rows[j].iter().zip(&rows[i]).all(|(a, b)| a <= b)
                    && rows[j].iter().zip(&rows[i]).any(|(a, b)| a < b)
            })
        })
        .collect()
}

fn front_of(rows: &[Vec<f64>]) -> Front {
    Front::from_rows(
        rows.iter()
            .enumerate()
            .map(|(i, r)| (format!("s{i:02}"), r.clone())),
    )
    .unwrap()
}

/// Rows of `m` points in `n` dimensions. Half the strategies quantize values to
/// quarters so that exact ties in normalized sums actually occur.
fn rows_strategy(max_m: usize, max_n: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    (2..=max_n, any::<bool>()).prop_flat_map(move |(n, quantized)| {
        let value = if quantized {
            (0..=8u8).prop_map(|q| q as f64 * 0.25).boxed()
        } else {
            (0.0..10.0f64).boxed()
        };
        prop::collection::vec(prop::collection::vec(value, n), 1..=max_m)
    })
}

/// Nondominated, non-degenerate-as-a-whole fronts.
fn front_strategy() -> impl Strategy<Value = Front> {
    rows_strategy(64, 6).prop_filter_map("all points coincide", |rows| {
        let (front, _) = dominance_filter(&front_of(&rows));
        normalize(&front).is_ok().then_some(front)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dominance_filter_matches_brute_force(rows in rows_strategy(64, 6)) {
        let front = front_of(&rows);
        let (kept, removed) = dominance_filter(&front);
        let want = brute_force_nondominated(&rows);
        let kept_ids: Vec<String> = kept.ids().map(str::to_string).collect();
        let want_ids: Vec<String> = want.iter().map(|&i| format!("s{i:02}")).collect();
        prop_assert_eq!(&kept_ids, &want_ids);
        prop_assert_eq!(kept.len() + removed.len(), front.len());
        let (again, removed_again) = dominance_filter(&kept);
        prop_assert_eq!(again, kept);
        prop_assert!(removed_again.is_empty());
    }

    #[test]
    fn normalization_has_unit_spread(front in front_strategy()) {
        let nf = normalize(&front).unwrap();
        for n in 0..nf.dims() {
            if nf.is_degenerate(n) {
                prop_assert!((0..nf.len()).all(|r| nf.y(r)[n] == 0.0));
                continue;
            }
            let col: Vec<f64> = (0..nf.len()).map(|r| nf.y(r)[n]).collect();
            let lo = col.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            let scale = hi.abs().max(1.0);
            prop_assert!((hi - lo - 1.0).abs() <= 1e-12 * scale, "range {}", hi - lo);
            prop_assert!((nf.y_opt()[n] - lo).abs() <= 1e-12 * scale);
            let dev: Vec<f64> = (0..nf.len()).map(|r| nf.deviation(r)[n]).collect();
            prop_assert!(dev.iter().all(|&d| (0.0..=1.0).contains(&d)));
            prop_assert_eq!(dev.iter().copied().fold(f64::INFINITY, f64::min), 0.0);
            prop_assert_eq!(dev.iter().copied().fold(f64::NEG_INFINITY, f64::max), 1.0);
        }
    }

    #[test]
    fn manhattan_distance_is_a_plain_sum(front in front_strategy()) {
        let nf = normalize(&front).unwrap();
        let decision = select_mmd(&nf, 1e-9).unwrap();
        for (row, score) in decision.scores.iter().enumerate() {
            let y = nf.y(row);
            let l1: f64 = y.iter().zip(nf.y_opt()).map(|(a, b)| (a - b).abs()).sum();
            let scale = y.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
            prop_assert!((l1 - score.mmd).abs() <= 1e-12 * scale, "{} vs {}", l1, score.mmd);
        }
    }

    #[test]
    fn net_improvement_is_antisymmetric(front in front_strategy(), picks in prop::collection::vec((0usize..64, 0usize..64), 1..20)) {
        let nf = normalize(&front).unwrap();
        let ids: Vec<&str> = front.ids().collect();
        for (a, b) in picks {
            let (i, j) = (ids[a % ids.len()], ids[b % ids.len()]);
            let forward = net_improvement(&nf, i, j).unwrap();
            prop_assert_eq!(forward, -net_improvement(&nf, j, i).unwrap());
            prop_assert_eq!(net_improvement(&nf, i, i).unwrap(), 0.0);
        }
    }

    #[test]
    fn classes_partition_every_id(front in front_strategy(), epsilon in prop_oneof![Just(0.0), 0.0..0.5f64]) {
        let nf = normalize(&front).unwrap();
        let classes = build_classes(&nf, epsilon);
        let mut seen: Vec<&str> = classes.classes.iter().flat_map(|c| c.members.iter().map(String::as_str)).collect();
        seen.sort();
        let mut all: Vec<&str> = front.ids().collect();
        all.sort();
        prop_assert_eq!(seen, all);
        for pair in classes.classes.windows(2) {
            let gap = pair[1].sum - pair[0].sum;
            prop_assert!(gap > epsilon * pair[0].sum.abs().max(1.0));
        }
        for class in &classes.classes {
            let d = |id: &str| select_mmd(&nf, epsilon).unwrap().scores.iter().find(|s| s.id == id).unwrap().mmd;
            let first = d(&class.members[0]);
            let last = d(class.members.last().unwrap());
            prop_assert!(last - first <= epsilon * first.abs().max(1.0));
        }
    }

    #[test]
    fn selectors_agree(front in front_strategy(), seeds in prop::collection::vec(any::<u64>(), 4)) {
        let nf = normalize(&front).unwrap();
        let report = verify_equivalence(&nf, 1e-9, &seeds);
        prop_assert!(report.is_ok(), "{:?}", report);
        let report = report.unwrap();
        prop_assert!(report.passed, "{:?}", report.details);

        let classes = build_classes(&nf, 1e-9);
        for seed in seeds {
            let dnc = select_dnc(&nf, 1e-9, seed).unwrap();
            prop_assert_eq!(dnc.trace.unwrap().len(), classes.len() - 1);
        }
    }

    #[test]
    fn winners_score_the_minimum(front in front_strategy()) {
        let nf = normalize(&front).unwrap();
        let d = select_ws(&nf, 1e-9).unwrap();
        let tol = 1e-9 * d.c_min_mmd.abs().max(1.0);
        for s in &d.scores {
            if d.winner.contains(&s.id) {
                prop_assert!(s.mmd - d.c_min_mmd <= tol);
            } else {
                prop_assert!(s.mmd > d.c_min_mmd);
                prop_assert!(s.ws > d.c_min_ws);
            }
        }
    }

    #[test]
    fn ranking_follows_weighted_sums(front in front_strategy()) {
        let nf = normalize(&front).unwrap();
        let ranking = rank(&nf, 1e-9).unwrap();
        let ws = select_ws(&nf, 1e-9).unwrap();
        prop_assert_eq!(&ranking[0].members, &select_mmd(&nf, 1e-9).unwrap().winner);
        // Oracle: order ids by weighted sum; ranked class order must be consistent.
        let mut by_ws: Vec<(f64, String)> = ws.scores.iter().map(|s| (s.ws, s.id.clone())).collect();
        by_ws.sort_by(|a, b| a.0.total_cmp(&b.0));
        let class_of = |id: &str| ranking.iter().position(|c| c.members.iter().any(|m| m == id)).unwrap();
        let positions: Vec<usize> = by_ws.iter().map(|(_, id)| class_of(id)).collect();
        prop_assert!(positions.windows(2).all(|w| w[0] <= w[1]), "{:?}", positions);
    }

    #[test]
    fn row_order_does_not_matter(front in front_strategy(), shuffle_seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rows: Vec<(String, Vec<f64>)> = front.solutions().iter().map(|s| (s.id.clone(), s.f.clone())).collect();
        rows.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(shuffle_seed));
        let shuffled = Front::from_rows(rows).unwrap();
        let (a, b) = (normalize(&front).unwrap(), normalize(&shuffled).unwrap());
        prop_assert_eq!(select_mmd(&a, 1e-9).unwrap().winner, select_mmd(&b, 1e-9).unwrap().winner);
        prop_assert_eq!(select_dnc(&a, 1e-9, 3).unwrap().winner, select_dnc(&b, 1e-9, 3).unwrap().winner);
        let members = |nf| build_classes(nf, 1e-9).classes.into_iter().map(|c| c.members).collect::<Vec<_>>();
        prop_assert_eq!(members(&a), members(&b));
    }

    #[test]
    fn affine_transforms_leave_selection_unchanged(
        front in front_strategy(),
        scales in prop::collection::vec(-6.0..6.0f64, 6),
        shifts in prop::collection::vec(-100.0..100.0f64, 6),
    ) {
        let transformed = Front::from_rows(front.solutions().iter().map(|s| {
            // Offsets are expressed in units of the new scale so values stay representable.
            let f = s.f.iter().enumerate().map(|(n, v)| {
                let a = 10f64.powf(scales[n]);
                a * v + a * shifts[n]
            }).collect();
            (s.id.clone(), f)
        })).unwrap();
        let (a, b) = (normalize(&front).unwrap(), normalize(&transformed).unwrap());
        let (da, db) = (select_mmd(&a, 1e-9).unwrap(), select_mmd(&b, 1e-9).unwrap());
        prop_assert_eq!(da.winner_set(), db.winner_set());
        for (x, y) in da.scores.iter().zip(&db.scores) {
            prop_assert!((x.mmd - y.mmd).abs() <= 1e-9 * x.mmd.abs().max(1.0));
        }
        prop_assert_eq!(select_ws(&b, 1e-9).unwrap().winner_set(), db.winner_set());
    }
}

#[test]
fn disconnected_winner_lies_left_of_the_chord() {
    use knee_mcdm::gen::{generate, Family, FrontSpec};
    for seed in 0..20 {
        let front = generate(&FrontSpec::new(Family::Disconnected2d, 40, seed)).unwrap();
        let nf = normalize(&front).unwrap();
        let d = select_mmd(&nf, 1e-9).unwrap();
        // The chord through the two extreme samples is the level set mmd = 1;
        // points below it have mmd < 1.
        let below = d.scores.iter().filter(|s| s.mmd < 1.0).count();
        if below > 0 {
            assert!(d.c_min_mmd < 1.0);
            assert_eq!(d.winner.len(), 1);
        } else {
            assert_eq!(d.c_min_mmd, 1.0);
        }
        let far = d
            .scores
            .iter()
            .min_by(|a, b| a.mmd.total_cmp(&b.mmd))
            .unwrap();
        assert_eq!(d.winner[0], far.id);
    }
}
