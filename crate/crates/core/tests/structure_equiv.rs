//! Cross-validation of the structural layer against the exact solver:
//! dismantlability orderings, partitions, partition capture times, and the
//! retraction calculus.

use pursuit_core::game::GameConfig;
use pursuit_core::graph::{cartesian_product, path, write_graph6};
use pursuit_core::harness::sample::random_connected;
use pursuit_core::solver::{cop_number, solve};
use pursuit_core::structure::{
    capture_time_via_partition, copwin_ordering, copwin_partition, is_retraction, product_map,
    retract_subgraph, VertexMap,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn ordering_partition_and_solver_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3101);
    for trial in 0..500 {
        let n = 2 + trial % 8; // orders 2..=9
        let g = random_connected(&mut rng, n);
        let solver_win = solve(&g, &GameConfig::classic(1)).unwrap().cop_win;
        let ordering = copwin_ordering(&g).is_some();
        let complete = g.size() == n * (n - 1) / 2;
        let partition = if complete {
            true
        } else {
            let found = copwin_partition(&g).unwrap();
            if let Some(p) = &found {
                // Layers partition the vertex set.
                let mut seen: Vec<usize> = p.layers.iter().flatten().copied().collect();
                seen.sort_unstable();
                assert_eq!(seen, (0..n).collect::<Vec<_>>(), "layers must partition V");
            }
            found.is_some()
        };
        assert_eq!(
            ordering,
            solver_win,
            "ordering vs solver on {}",
            write_graph6(&g).unwrap()
        );
        assert_eq!(
            partition,
            solver_win,
            "partition vs solver on {}",
            write_graph6(&g).unwrap()
        );
        if solver_win {
            let via_partition = capture_time_via_partition(&g).unwrap();
            let via_solver = solve(&g, &GameConfig::classic(1))
                .unwrap()
                .capture_time
                .unwrap();
            assert_eq!(
                via_partition,
                via_solver,
                "capture time on {}",
                write_graph6(&g).unwrap()
            );
        }
    }
}

#[test]
fn product_of_retractions_is_a_retraction() {
    // Coordinatewise products of path clamps, checked on the product graph.
    let mut rng = ChaCha8Rng::seed_from_u64(0x3102);
    use rand::Rng;
    for _ in 0..50 {
        let na = rng.gen_range(2..=5);
        let nb = rng.gen_range(2..=5);
        let a = path(na).unwrap();
        let b = path(nb).unwrap();
        let ka = rng.gen_range(1..=na);
        let kb = rng.gen_range(1..=nb);
        let clamp_a = VertexMap {
            image: (0..na).map(|v| v.min(ka - 1)).collect(),
        };
        let clamp_b = VertexMap {
            image: (0..nb).map(|v| v.min(kb - 1)).collect(),
        };
        assert!(is_retraction(&a, &clamp_a).unwrap());
        assert!(is_retraction(&b, &clamp_b).unwrap());
        let prod = cartesian_product(&a, &b).unwrap();
        let map = product_map(&clamp_a, &clamp_b);
        assert!(
            is_retraction(&prod, &map).unwrap(),
            "product of clamps {ka}/{na} x {kb}/{nb}"
        );
    }
}

#[test]
fn retract_monotonicity_on_random_product_pairs() {
    // Verified retraction implies the retract's cop number is no larger.
    let mut rng = ChaCha8Rng::seed_from_u64(0x3103);
    use rand::Rng;
    for _ in 0..10 {
        let na = rng.gen_range(3..=5);
        let nb = rng.gen_range(3..=5);
        let a = path(na).unwrap();
        let b = path(nb).unwrap();
        let ka = rng.gen_range(2..=na);
        let kb = rng.gen_range(2..=nb);
        let clamp_a = VertexMap {
            image: (0..na).map(|v| v.min(ka - 1)).collect(),
        };
        let clamp_b = VertexMap {
            image: (0..nb).map(|v| v.min(kb - 1)).collect(),
        };
        let prod = cartesian_product(&a, &b).unwrap();
        let map = product_map(&clamp_a, &clamp_b);
        let (sub, _) = retract_subgraph(&prod, &map).unwrap();
        for s in [1usize, 2] {
            let big = cop_number(&prod, &GameConfig::speed(1, s), 4).unwrap();
            let small = cop_number(&sub, &GameConfig::speed(1, s), 4).unwrap();
            assert!(big >= small, "s={s}: {big} < {small}");
        }
    }
}
