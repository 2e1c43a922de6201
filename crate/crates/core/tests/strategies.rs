//! Scripted strategies validated inside their hypotheses: evasion policies
//! survive with their invariants intact, capture policies close the game,
//! against solver-optimal adversaries where solvable and greedy/random
//! adversaries throughout.

use pursuit_core::game::GameConfig;
use pursuit_core::graph::{
    cartesian_product, cartesian_products, cycle_strong_power_product, hypercube,
    incidence_graph_pg2, path,
};
use pursuit_core::solver::{solve_full, SolverOptions};
use pursuit_core::strategy::{
    simulate, GreedyCops, GreedyRobber, GridBlockingRobber, GridSingleCop, HypercubeWeightRobber,
    Outcome, ProjectiveProductRobber, RandomCops, RandomRobber, SolvedCopPolicy,
    SolvedRobberPolicy, TorusCoordinateRobber, TwoPhaseProductCops,
};

const HORIZON: usize = 200;

#[test]
fn optimal_play_matches_solver_value_on_q3() {
    let q3 = hypercube(3).unwrap();
    let cfg = GameConfig::speed(2, 2);
    let solved = solve_full(&q3, &cfg, &SolverOptions::default()).unwrap();
    let expected = solved.result().capture_time.unwrap();
    let mut cop = SolvedCopPolicy::new(&solved);
    let mut rob = SolvedRobberPolicy::new(&solved);
    let trace = simulate(&q3, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
    assert_eq!(trace.outcome, Outcome::Captured { round: expected });
}

#[test]
fn torus_robber_survives_on_single_cycle() {
    // One-dimensional case: the strong power with one factor is the plain
    // cycle of length 2s+2.
    let c6 = cycle_strong_power_product(1, 2).unwrap();
    let cfg = GameConfig::speed(1, 2);
    let solved = solve_full(&c6, &cfg, &SolverOptions::default()).unwrap();
    assert!(!solved.result().cop_win);
    let mut cop = SolvedCopPolicy::new(&solved);
    let mut rob = TorusCoordinateRobber::new(2);
    let trace = simulate(&c6, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
    assert_eq!(trace.outcome, Outcome::Survived { horizon: HORIZON });
    assert!(trace.invariants_hold());
}

#[test]
fn torus_robber_survives_on_strong_square() {
    let t = cycle_strong_power_product(2, 2).unwrap();
    let cfg = GameConfig::speed(2, 2);
    let solved = solve_full(&t, &cfg, &SolverOptions::default()).unwrap();
    assert!(
        !solved.result().cop_win,
        "two cops lose on the strong square"
    );
    for adversary in 0..3 {
        let mut rob = TorusCoordinateRobber::new(2);
        let trace = match adversary {
            0 => {
                let mut cop = SolvedCopPolicy::new(&solved);
                simulate(&t, &cfg, &mut cop, &mut rob, HORIZON).unwrap()
            }
            1 => {
                let mut cop = GreedyCops::new();
                simulate(&t, &cfg, &mut cop, &mut rob, HORIZON).unwrap()
            }
            _ => {
                let mut cop = RandomCops::new(23);
                simulate(&t, &cfg, &mut cop, &mut rob, HORIZON).unwrap()
            }
        };
        assert_eq!(trace.outcome, Outcome::Survived { horizon: HORIZON });
        assert!(
            trace.invariants_hold(),
            "coordinate offsets broke vs adversary {adversary}"
        );
    }
}

#[test]
fn hypercube_weight_robber_survives_within_hypotheses() {
    for (d, k) in [(8usize, 3usize), (6, 2)] {
        let q = hypercube(d).unwrap();
        let cfg = GameConfig::speed(k, 2);
        let mut greedy = GreedyCops::new();
        let mut rob = HypercubeWeightRobber::new();
        let trace = simulate(&q, &cfg, &mut greedy, &mut rob, HORIZON).unwrap();
        assert_eq!(
            trace.outcome,
            Outcome::Survived { horizon: HORIZON },
            "Q{d} vs greedy"
        );
        assert!(trace.invariants_hold(), "distance-three invariant on Q{d}");

        let mut random = RandomCops::new(0x51ed);
        let mut rob = HypercubeWeightRobber::new();
        let trace = simulate(&q, &cfg, &mut random, &mut rob, HORIZON).unwrap();
        assert_eq!(
            trace.outcome,
            Outcome::Survived { horizon: HORIZON },
            "Q{d} vs random"
        );
        assert!(trace.invariants_hold());
    }
}

#[test]
fn hypercube_weight_robber_survives_optimal_cops_on_q6() {
    let q6 = hypercube(6).unwrap();
    let cfg = GameConfig::speed(2, 2);
    let solved = solve_full(&q6, &cfg, &SolverOptions::default()).unwrap();
    assert!(!solved.result().cop_win, "two cops lose on the 6-cube");
    let mut cop = SolvedCopPolicy::new(&solved);
    let mut rob = HypercubeWeightRobber::new();
    let trace = simulate(&q6, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
    assert_eq!(trace.outcome, Outcome::Survived { horizon: HORIZON });
    assert!(trace.invariants_hold());
}

#[test]
fn grid_blocking_robber_survives_on_five_factors() {
    let p9 = path(9).unwrap();
    let g = cartesian_products(&[&p9, &p9, &p9, &p9, &p9]).unwrap();
    let cfg = GameConfig::speed(2, 2);
    let mut greedy = GreedyCops::new();
    let mut rob = GridBlockingRobber::new();
    let trace = simulate(&g, &cfg, &mut greedy, &mut rob, 100).unwrap();
    assert_eq!(trace.outcome, Outcome::Survived { horizon: 100 });
    assert!(trace.invariants_hold(), "cops crossed the speed margin");

    let mut random = RandomCops::new(0x6b1d);
    let mut rob = GridBlockingRobber::new();
    let trace = simulate(&g, &cfg, &mut random, &mut rob, 100).unwrap();
    assert_eq!(trace.outcome, Outcome::Survived { horizon: 100 });
    assert!(trace.invariants_hold());
}

#[test]
fn grid_blocking_robber_rejects_single_dimension() {
    let g = cartesian_products(&[&path(9).unwrap()]).unwrap();
    let cfg = GameConfig::speed(1, 2);
    let mut greedy = GreedyCops::new();
    let mut rob = GridBlockingRobber::new();
    let result = simulate(&g, &cfg, &mut greedy, &mut rob, 50);
    match result {
        Err(pursuit_core::error::Error::Policy { .. }) => {}
        Ok(trace) => assert!(
            trace.captured(),
            "one dimension cannot hide the robber forever"
        ),
        Err(e) => panic!("unexpected error {e}"),
    }
}

#[test]
fn grid_single_cop_captures_with_monotone_distance() {
    for n in [7usize, 9] {
        let p = path(n).unwrap();
        let g = cartesian_product(&p, &p).unwrap();
        let cfg = GameConfig::speed(1, 2);
        let solved = solve_full(&g, &cfg, &SolverOptions::default()).unwrap();
        assert!(
            solved.result().cop_win,
            "one fast cop wins on the {n}x{n} grid"
        );
        let mut cop = GridSingleCop::new();
        let mut rob = SolvedRobberPolicy::new(&solved);
        let trace = simulate(&g, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
        assert!(trace.captured(), "grid cop must capture on {n}x{n}");
        assert!(
            trace.invariants_hold(),
            "total distance increased on {n}x{n}"
        );

        let mut cop = GridSingleCop::new();
        let mut rob = GreedyRobber::new();
        let trace = simulate(&g, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
        assert!(trace.captured());
        assert!(trace.invariants_hold());
    }
}

#[test]
fn projective_robber_blocks_two_cops() {
    let p = incidence_graph_pg2(2).unwrap();
    let pp = cartesian_product(&p, &p).unwrap();
    let cfg = GameConfig::speed(2, 2);
    let mut greedy = GreedyCops::new();
    let mut rob = ProjectiveProductRobber::new(&p);
    let trace = simulate(&pp, &cfg, &mut greedy, &mut rob, HORIZON).unwrap();
    assert_eq!(trace.outcome, Outcome::Survived { horizon: HORIZON });
    assert!(trace.invariants_hold());
}

#[test]
fn two_phase_cops_capture_on_product_of_cubes() {
    let q2 = hypercube(2).unwrap();
    let q3 = hypercube(3).unwrap();
    let q5 = cartesian_product(&q2, &q3).unwrap();
    let cfg = GameConfig::speed(2, 2);
    let solved = solve_full(&q5, &cfg, &SolverOptions::default()).unwrap();
    assert!(solved.result().cop_win);

    let mut rob = SolvedRobberPolicy::new(&solved);
    let mut cop = TwoPhaseProductCops::new(&q2, &q3, 2, 1, 1).unwrap();
    let trace = simulate(&q5, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
    assert!(trace.captured(), "two-phase cops vs optimal robber");

    let mut cop = TwoPhaseProductCops::new(&q2, &q3, 2, 1, 1).unwrap();
    let mut rob = GreedyRobber::new();
    let trace = simulate(&q5, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
    assert!(trace.captured(), "two-phase cops vs greedy robber");

    let mut cop = TwoPhaseProductCops::new(&q2, &q3, 2, 1, 1).unwrap();
    let mut rob = RandomRobber::new(5);
    let trace = simulate(&q5, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
    assert!(trace.captured(), "two-phase cops vs random robber");
}

#[test]
fn half_distance_escape_rule_exhaustive_on_grid() {
    // On a two-factor path grid, a robber taking s = 2 steps with fewer than
    // half the cop distance spent approaching ends up out of reach.
    let p9 = path(9).unwrap();
    let g = cartesian_product(&p9, &p9).unwrap();
    let s = 2usize;
    let coord = |v: usize| (v / 9, v % 9);
    let l1 = |a: usize, b: usize| {
        let (a1, a2) = coord(a);
        let (b1, b2) = coord(b);
        a1.abs_diff(b1) + a2.abs_diff(b2)
    };
    let cfg = GameConfig::speed(1, 2);
    let mut checked = 0u64;
    for cop in 0..81 {
        for robber in 0..81 {
            if cop == robber {
                continue;
            }
            let x = l1(cop, robber);
            for dest in pursuit_core::game::robber_moves(&g, &cfg, &[cop], robber).unwrap() {
                if l1(robber, dest) != s {
                    continue;
                }
                // Each unit step changes the cop distance by exactly one.
                let after = l1(cop, dest);
                let toward = (x + s - after) / 2;
                if 2 * toward < x {
                    checked += 1;
                    assert!(
                        after > s,
                        "cop {cop} robber {robber} dest {dest}: {after} <= {s}"
                    );
                }
            }
        }
    }
    assert!(checked > 10_000, "exhaustive sweep looked thin: {checked}");
}

#[test]
fn trace_serializes_one_record_per_round() {
    let g = hypercube(3).unwrap();
    let cfg = GameConfig::speed(2, 2);
    let solved = solve_full(&g, &cfg, &SolverOptions::default()).unwrap();
    let mut cop = SolvedCopPolicy::new(&solved);
    let mut rob = SolvedRobberPolicy::new(&solved);
    let trace = simulate(&g, &cfg, &mut cop, &mut rob, HORIZON).unwrap();
    let lines = trace.to_json_lines().unwrap();
    assert_eq!(lines.lines().count(), trace.rounds.len());
    for line in lines.lines() {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("round").is_some());
    }
}
