//! Cross-validation of the retrograde engine against a naive fixpoint
//! solver built only from the semantic move generators. The two share no
//! search code: the engine works on sub-move layers with counters, the
//! oracle applies the one-turn Bellman operator over canonical states until
//! it stabilizes.

use pursuit_core::game::{
    cop_turn_successors, is_capture, robber_moves, GameConfig, GameState, Phase, StateIndexer,
    Variant,
};
use pursuit_core::graph::{write_graph6, Graph};
use pursuit_core::harness::sample::random_connected;
use pursuit_core::solver::solve;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const INF: u64 = u64::MAX;

struct Oracle {
    indexer: StateIndexer,
    values: Vec<u64>,
}

fn oracle_solve(g: &Graph, cfg: &GameConfig) -> (bool, Option<usize>) {
    let n = g.order();
    let k = cfg.cop_count;
    let indexer = StateIndexer::new(n, k).unwrap();
    let total = indexer.state_count() as usize;
    let mut oracle = Oracle {
        indexer,
        values: vec![INF; total],
    };

    // Captured states are worth zero at either phase.
    for idx in 0..total {
        let state = oracle.indexer.decode(idx as u64).unwrap();
        if is_capture(g, cfg, &state.cops, state.robber) {
            oracle.values[idx] = 0;
        }
    }

    // Bellman iterations to a fixpoint.
    loop {
        let mut changed = false;
        for idx in 0..total {
            let state = oracle.indexer.decode(idx as u64).unwrap();
            if is_capture(g, cfg, &state.cops, state.robber) {
                continue;
            }
            let new = match state.phase {
                Phase::CopTurn => {
                    let best = cop_turn_successors(g, cfg, &state)
                        .unwrap()
                        .into_iter()
                        .map(|s| {
                            let succ = oracle.indexer.encode(&s).unwrap() as usize;
                            oracle.values[succ]
                        })
                        .min()
                        .unwrap_or(INF);
                    if best == INF {
                        INF
                    } else {
                        best + 1
                    }
                }
                Phase::RobberTurn => {
                    let moves = robber_moves(g, cfg, &state.cops, state.robber).unwrap();
                    if moves.is_empty() {
                        0
                    } else {
                        moves
                            .into_iter()
                            .map(|w| {
                                let s = GameState::new(state.cops.clone(), w, Phase::CopTurn);
                                oracle.values[oracle.indexer.encode(&s).unwrap() as usize]
                            })
                            .max()
                            .unwrap()
                    }
                }
            };
            if new != oracle.values[idx] {
                oracle.values[idx] = new;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }

    // Placement minimax: cops pick a multiset, the robber answers.
    let mut cops = vec![0usize; k];
    let mut best = INF;
    loop {
        let mut worst = 0u64;
        for v in 0..n {
            let value = if is_capture(g, cfg, &cops, v) {
                0
            } else {
                let s = GameState::new(cops.clone(), v, Phase::CopTurn);
                oracle.values[oracle.indexer.encode(&s).unwrap() as usize]
            };
            worst = worst.max(value);
            if worst == INF {
                break;
            }
        }
        best = best.min(worst);
        // Next nondecreasing cop tuple.
        let mut i = k;
        while i > 0 && cops[i - 1] == n - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        cops[i - 1] += 1;
        let v = cops[i - 1];
        for slot in cops.iter_mut().skip(i) {
            *slot = v;
        }
    }
    if best == INF {
        (false, None)
    } else {
        (true, Some(best as usize))
    }
}

#[test]
fn engine_matches_naive_oracle_across_variants() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x04ac);
    let variants = [
        Variant::Standard,
        Variant::Active,
        Variant::SemiActive,
        Variant::Restricted,
    ];
    let mut trials = 0;
    while trials < 120 {
        let n = rng.gen_range(2..=6);
        let g = random_connected(&mut rng, n);
        let k = rng.gen_range(1..=2);
        let cop_speed = rng.gen_range(1..=3);
        let robber_speed = rng.gen_range(1..=3);
        let variant = variants[rng.gen_range(0..variants.len())];
        let radius = usize::from(rng.gen_bool(0.25));
        let cfg = GameConfig {
            cop_speed,
            robber_speed,
            cop_count: k,
            variant,
            capture_radius: radius,
        };
        let engine = solve(&g, &cfg).unwrap();
        let (oracle_win, oracle_time) = oracle_solve(&g, &cfg);
        assert_eq!(
            (engine.cop_win, engine.capture_time),
            (oracle_win, oracle_time),
            "engine disagrees with oracle on {} with {cfg:?}",
            write_graph6(&g).unwrap()
        );
        trials += 1;
    }
}
