//! Executable proof strategies and a simulation engine with per-turn
//! invariant checking.
//!
//! Policies emit placements and destinations; the simulator enforces
//! legality through the game rules, so a policy that violates its own proof
//! surfaces as a trace error rather than a silently wrong run.

mod cops;
mod robbers;
mod two_phase;

pub use cops::{GreedyCops, GridSingleCop, RandomCops, SolvedCopPolicy};
pub use robbers::{
    GreedyRobber, GridBlockingRobber, HypercubeWeightRobber, ProjectiveProductRobber, RandomRobber,
    SolvedRobberPolicy, TorusCoordinateRobber,
};
pub use two_phase::TwoPhaseProductCops;

use crate::error::{Error, Result};
use crate::game::{is_capture, robber_moves, GameConfig};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

impl InvariantCheck {
    pub fn new(name: &str, holds: bool, detail: impl Into<String>) -> InvariantCheck {
        InvariantCheck {
            name: name.into(),
            holds,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Captured { round: usize },
    Survived { horizon: usize },
}

/// One record per round: positions after both turns plus invariant results.
/// Round 0 holds the placements.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RoundRecord {
    pub round: usize,
    pub cops: Vec<usize>,
    pub robber: usize,
    pub checks: Vec<InvariantCheck>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StrategyTrace {
    pub cop_policy: String,
    pub robber_policy: String,
    pub rounds: Vec<RoundRecord>,
    pub outcome: Outcome,
}

impl StrategyTrace {
    pub fn captured(&self) -> bool {
        matches!(self.outcome, Outcome::Captured { .. })
    }

    /// True iff every recorded invariant check holds.
    pub fn invariants_hold(&self) -> bool {
        self.rounds.iter().all(|r| r.checks.iter().all(|c| c.holds))
    }

    /// One JSON record per round, preceded by none and followed by none.
    pub fn to_json_lines(&self) -> Result<String> {
        let mut out = String::new();
        for r in &self.rounds {
            out.push_str(&serde_json::to_string(r)?);
            out.push('\n');
        }
        Ok(out)
    }
}

pub trait CopPolicy {
    fn name(&self) -> String;
    fn place(&mut self, g: &Graph, cfg: &GameConfig) -> Result<Vec<usize>>;
    /// Destination of each cop, aligned with `cops`.
    fn turn(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<Vec<usize>>;
    fn invariant(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        _cops: &[usize],
        _robber: usize,
    ) -> Option<InvariantCheck> {
        None
    }
}

pub trait RobberPolicy {
    fn name(&self) -> String;
    fn place(&mut self, g: &Graph, cfg: &GameConfig, cops: &[usize]) -> Result<usize>;
    fn turn(&mut self, g: &Graph, cfg: &GameConfig, cops: &[usize], robber: usize)
        -> Result<usize>;
    fn invariant(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        _cops: &[usize],
        _robber: usize,
    ) -> Option<InvariantCheck> {
        None
    }
}

fn policy_err(round: usize, message: impl Into<String>) -> Error {
    Error::Policy {
        round,
        message: message.into(),
    }
}

/// Truncated BFS reachability check; avoids all-pairs tables on graphs too
/// large to solve.
fn within_distance(g: &Graph, from: usize, to: usize, limit: usize) -> bool {
    if from == to {
        return true;
    }
    let mut seen = vec![false; g.order()];
    seen[from] = true;
    let mut frontier = vec![from];
    for _ in 0..limit {
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in g.neighbors(u) {
                let v = v as usize;
                if v == to {
                    return true;
                }
                if !seen[v] {
                    seen[v] = true;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    false
}

/// Plays the policies against each other under the full rule set, recording
/// positions and invariant checks per round. Stops at capture or horizon.
pub fn simulate(
    g: &Graph,
    cfg: &GameConfig,
    cop_policy: &mut dyn CopPolicy,
    robber_policy: &mut dyn RobberPolicy,
    horizon: usize,
) -> Result<StrategyTrace> {
    cfg.validate()?;
    if horizon < 1 {
        return Err(Error::invalid("horizon must be at least 1"));
    }
    let n = g.order();

    let mut cops = cop_policy.place(g, cfg)?;
    if cops.len() != cfg.cop_count {
        return Err(policy_err(
            0,
            format!("placed {} cops, expected {}", cops.len(), cfg.cop_count),
        ));
    }
    if cops.iter().any(|&c| c >= n) {
        return Err(policy_err(0, "cop placement out of range"));
    }
    let robber = robber_policy.place(g, cfg, &cops)?;
    if robber >= n {
        return Err(policy_err(0, "robber placement out of range"));
    }

    let mut trace = StrategyTrace {
        cop_policy: cop_policy.name(),
        robber_policy: robber_policy.name(),
        rounds: vec![RoundRecord {
            round: 0,
            cops: cops.clone(),
            robber,
            checks: Vec::new(),
        }],
        outcome: Outcome::Survived { horizon },
    };
    let mut robber = robber;
    if is_capture(g, cfg, &cops, robber) {
        trace.outcome = Outcome::Captured { round: 0 };
        return Ok(trace);
    }

    for round in 1..=horizon {
        let dests = cop_policy.turn(g, cfg, &cops, robber)?;
        if dests.len() != cops.len() {
            return Err(policy_err(round, "cop turn has wrong arity"));
        }
        for (i, (&from, &to)) in cops.iter().zip(&dests).enumerate() {
            if to >= n || !within_distance(g, from, to, cfg.cop_speed) {
                return Err(policy_err(
                    round,
                    format!(
                        "cop {i} moved {from} -> {to}, beyond speed {}",
                        cfg.cop_speed
                    ),
                ));
            }
        }
        if cfg.cops_must_move() && dests == cops {
            return Err(policy_err(
                round,
                "active variant requires some cop to move",
            ));
        }
        cops = dests;
        if is_capture(g, cfg, &cops, robber) {
            trace.rounds.push(RoundRecord {
                round,
                cops: cops.clone(),
                robber,
                checks: Vec::new(),
            });
            trace.outcome = Outcome::Captured { round };
            return Ok(trace);
        }

        let dest = robber_policy.turn(g, cfg, &cops, robber)?;
        let legal = robber_moves(g, cfg, &cops, robber)?;
        if !legal.contains(&dest) {
            return Err(policy_err(
                round,
                format!("illegal robber move {robber} -> {dest}"),
            ));
        }
        robber = dest;

        let mut checks = Vec::new();
        if let Some(c) = cop_policy.invariant(g, cfg, &cops, robber) {
            checks.push(c);
        }
        if let Some(c) = robber_policy.invariant(g, cfg, &cops, robber) {
            checks.push(c);
        }
        trace.rounds.push(RoundRecord {
            round,
            cops: cops.clone(),
            robber,
            checks,
        });

        if is_capture(g, cfg, &cops, robber) {
            trace.outcome = Outcome::Captured { round };
            return Ok(trace);
        }
    }
    Ok(trace)
}

/// Coordinate annotations of a product graph, or an error naming the policy
/// that needs them.
pub(crate) fn product_coords<'a>(
    g: &'a Graph,
    who: &str,
) -> Result<(&'a [usize], &'a Vec<Vec<usize>>)> {
    match g.tags() {
        Some(crate::graph::VertexTags::Coords {
            factor_sizes,
            coords,
        }) => Ok((factor_sizes, coords)),
        _ => Err(Error::invalid(format!(
            "{who} requires a coordinate-annotated product graph"
        ))),
    }
}

/// Mixed-radix vertex index of a coordinate tuple, matching the product
/// constructors.
pub(crate) fn coord_index(sizes: &[usize], coords: &[usize]) -> usize {
    coords
        .iter()
        .zip(sizes)
        .fold(0, |acc, (&c, &s)| acc * s + c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cartesian_products, cycle, hypercube, path};
    use crate::solver::{solve_full, SolverOptions};

    #[test]
    fn coord_index_inverts_annotations() {
        let p3 = path(3).unwrap();
        let g = cartesian_products(&[&p3, &p3, &p3]).unwrap();
        let (sizes, coords) = product_coords(&g, "test").unwrap();
        for v in 0..g.order() {
            assert_eq!(coord_index(sizes, &coords[v]), v);
        }
        let q4 = hypercube(4).unwrap();
        let (sizes, coords) = product_coords(&q4, "test").unwrap();
        for v in 0..q4.order() {
            assert_eq!(coord_index(sizes, &coords[v]), v);
        }
    }

    #[test]
    fn optimal_versus_optimal_matches_solver() {
        let g = cycle(5).unwrap();
        let cfg = GameConfig::classic(2);
        let solved = solve_full(&g, &cfg, &SolverOptions::default()).unwrap();
        let expected = solved.result().capture_time.unwrap();
        let mut cop = SolvedCopPolicy::new(&solved);
        let mut rob = SolvedRobberPolicy::new(&solved);
        let trace = simulate(&g, &cfg, &mut cop, &mut rob, 100).unwrap();
        assert_eq!(trace.outcome, Outcome::Captured { round: expected });
    }

    #[test]
    fn optimal_robber_survives_when_winning() {
        let g = cycle(6).unwrap();
        let cfg = GameConfig::speed(1, 2);
        let solved = solve_full(&g, &cfg, &SolverOptions::default()).unwrap();
        assert!(!solved.result().cop_win);
        let mut cop = GreedyCops::new();
        let mut rob = SolvedRobberPolicy::new(&solved);
        let trace = simulate(&g, &cfg, &mut cop, &mut rob, 50).unwrap();
        assert_eq!(trace.outcome, Outcome::Survived { horizon: 50 });
    }

    #[test]
    fn traces_replay_as_legal_move_sequences() {
        let g = path(6).unwrap();
        let cfg = GameConfig::speed(1, 2);
        let solved = solve_full(&g, &cfg, &SolverOptions::default()).unwrap();
        let mut cop = SolvedCopPolicy::new(&solved);
        let mut rob = GreedyRobber::new();
        let trace = simulate(&g, &cfg, &mut cop, &mut rob, 50).unwrap();
        assert!(trace.captured());
        let dist = g.distance_table();
        for w in trace.rounds.windows(2) {
            let (a, b) = (&w[0], &w[1]);
            for (&from, &to) in a.cops.iter().zip(&b.cops) {
                assert!(dist[from * g.order() + to] as usize <= cfg.cop_speed);
            }
            if b.robber != a.robber {
                let legal = robber_moves(&g, &cfg, &b.cops, a.robber).unwrap();
                assert!(legal.contains(&b.robber));
            }
        }
        let lines = trace.to_json_lines().unwrap();
        assert_eq!(lines.lines().count(), trace.rounds.len());
    }
}
