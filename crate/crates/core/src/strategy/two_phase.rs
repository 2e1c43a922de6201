//! Two-squad cop play on a Cartesian product G x H: each squad first captures
//! the robber's shadow in its off coordinate, then drives a solved game in
//! its own coordinate while mirroring the robber's moves in the other.
//!
//! The G squad plays the semi-active speed-1 game on G, consuming the
//! robber's G-steps one at a time; the H squad plays the
//! restricted-end-distance game on H, advancing one imagined round whenever
//! the robber stands still in G and covers distance s-1 or s in H.

use super::{CopPolicy, InvariantCheck};
use crate::error::{Error, Result};
use crate::game::{GameConfig, Variant};
use crate::graph::Graph;
use crate::solver::{solve_full, SolvedGame, SolverOptions};

pub struct TwoPhaseProductCops {
    n_g: usize,
    n_h: usize,
    g_cops: usize,
    h_cops: usize,
    g_dist: Vec<u16>,
    h_dist: Vec<u16>,
    g_neighbors: Vec<Vec<u32>>,
    h_neighbors: Vec<Vec<u32>>,
    semi: SolvedGame,
    restricted: SolvedGame,
    phase2: Vec<bool>,
    prev_robber: Option<(usize, usize)>,
}

fn central_spread(g: &Graph, k: usize) -> Vec<usize> {
    let mut by_ecc: Vec<(usize, usize)> = (0..g.order())
        .map(|v| (g.eccentricity(v).unwrap_or(usize::MAX), v))
        .collect();
    by_ecc.sort_unstable();
    (0..k).map(|i| by_ecc[i % by_ecc.len()].1).collect()
}

/// One step along a lowest-index shortest path from `from` toward `target`.
fn step_toward(
    dist: &[u16],
    neighbors: &[Vec<u32>],
    n: usize,
    from: usize,
    target: usize,
) -> usize {
    if from == target {
        return from;
    }
    let d = dist[from * n + target];
    neighbors[from]
        .iter()
        .map(|&x| x as usize)
        .find(|&nb| dist[nb * n + target] + 1 == d)
        .expect("connected factor")
}

/// Table-optimal one-turn response of a cop squad in its own factor, with a
/// walk toward the squad's optimal placement as the fallback on positions the
/// table marks as robber wins.
fn squad_response(
    solved: &SolvedGame,
    dist: &[u16],
    neighbors: &[Vec<u32>],
    n: usize,
    positions: &mut [usize],
    imagined_robber: usize,
) -> Result<()> {
    let mut order: Vec<usize> = (0..positions.len()).collect();
    order.sort_by_key(|&i| positions[i]);
    let sorted: Vec<usize> = order.iter().map(|&i| positions[i]).collect();
    let winning = sorted.iter().all(|&c| c != imagined_robber)
        && solved.value_cop_turn(&sorted, imagined_robber)?.is_some();
    if winning {
        let plan = solved.optimal_cop_turn(&sorted, imagined_robber)?;
        for (slot, &(_, to)) in order.iter().zip(&plan) {
            positions[*slot] = to;
        }
    } else {
        let targets = match &solved.result().optimal_placement {
            Some(p) => p.clone(),
            None => central_spread(solved.graph(), positions.len()),
        };
        for (slot, &target) in order.iter().zip(&targets) {
            let from = positions[*slot];
            positions[*slot] = step_toward(dist, neighbors, n, from, target);
        }
    }
    Ok(())
}

impl TwoPhaseProductCops {
    /// Solves the semi-active game on the first factor for `g_cops` cops and
    /// the restricted speed-(s,s) game on the second for `h_cops`.
    pub fn new(
        g_factor: &Graph,
        h_factor: &Graph,
        s: usize,
        g_cops: usize,
        h_cops: usize,
    ) -> Result<TwoPhaseProductCops> {
        if s < 2 {
            return Err(Error::invalid("two-phase cops require speed at least 2"));
        }
        let opts = SolverOptions::default();
        let semi_cfg = GameConfig::classic(g_cops).with_variant(Variant::SemiActive);
        let semi = solve_full(g_factor, &semi_cfg, &opts)?;
        let restricted_cfg = GameConfig::speed(h_cops, s).with_variant(Variant::Restricted);
        let restricted = solve_full(h_factor, &restricted_cfg, &opts)?;
        Ok(TwoPhaseProductCops {
            n_g: g_factor.order(),
            n_h: h_factor.order(),
            g_cops,
            h_cops,
            g_dist: g_factor.distance_table(),
            h_dist: h_factor.distance_table(),
            g_neighbors: (0..g_factor.order())
                .map(|v| g_factor.neighbors(v).to_vec())
                .collect(),
            h_neighbors: (0..h_factor.order())
                .map(|v| h_factor.neighbors(v).to_vec())
                .collect(),
            semi,
            restricted,
            phase2: Vec::new(),
            prev_robber: None,
        })
    }

    fn split(&self, v: usize) -> (usize, usize) {
        (v / self.n_h, v % self.n_h)
    }

    fn join(&self, g: usize, h: usize) -> usize {
        g * self.n_h + h
    }

    fn dg(&self, a: usize, b: usize) -> usize {
        self.g_dist[a * self.n_g + b] as usize
    }

    fn dh(&self, a: usize, b: usize) -> usize {
        self.h_dist[a * self.n_h + b] as usize
    }
}

impl CopPolicy for TwoPhaseProductCops {
    fn name(&self) -> String {
        "two-phase product cops".into()
    }

    fn place(&mut self, g: &Graph, cfg: &GameConfig) -> Result<Vec<usize>> {
        if cfg.cop_count != self.g_cops + self.h_cops {
            return Err(Error::invalid("cop count does not match the two squads"));
        }
        if g.order() != self.n_g * self.n_h {
            return Err(Error::invalid(
                "graph is not the product of the given factors",
            ));
        }
        self.phase2 = vec![false; cfg.cop_count];
        self.prev_robber = None;
        let g_slots = match &self.semi.result().optimal_placement {
            Some(p) => p.clone(),
            None => central_spread(self.semi.graph(), self.g_cops),
        };
        let h_slots = match &self.restricted.result().optimal_placement {
            Some(p) => p.clone(),
            None => central_spread(self.restricted.graph(), self.h_cops),
        };
        let mut out: Vec<usize> = g_slots.iter().map(|&gc| self.join(gc, 0)).collect();
        out.extend(h_slots.iter().map(|&hc| self.join(0, hc)));
        Ok(out)
    }

    fn turn(
        &mut self,
        _g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<Vec<usize>> {
        let s = cfg.cop_speed;
        let (u_r, v_r) = self.split(robber);
        let Some((pu, pv)) = self.prev_robber else {
            // Skip the first turn; it only lets the robber re-place himself.
            self.prev_robber = Some((u_r, v_r));
            return Ok(cops.to_vec());
        };
        let d_g = self.dg(pu, u_r);
        let d_h = self.dh(pv, v_r);

        let mut gs: Vec<(usize, usize)> = cops.iter().map(|&c| self.split(c)).collect();

        // G squad: indices 0..g_cops. Group play begins the turn after every
        // squad member has reached phase two.
        let all_g_phase2 = (0..self.g_cops).all(|i| self.phase2[i]);
        for i in 0..self.g_cops {
            if self.phase2[i] {
                // Mirror the robber's H displacement to stay in phase two.
                gs[i].1 = v_r;
                continue;
            }
            // Phase one: close in on the robber's H shadow, one step at a time.
            let (gc, mut hc) = gs[i];
            for _ in 0..s {
                if hc == v_r {
                    break;
                }
                hc = step_toward(&self.h_dist, &self.h_neighbors, self.n_h, hc, v_r);
            }
            gs[i] = (gc, hc);
            if hc == v_r {
                self.phase2[i] = true;
            }
        }
        if all_g_phase2 {
            // Spend the slack after mirroring on the imagined semi-active
            // game over the robber's G steps.
            let mut imagined_steps: Vec<usize> = Vec::new();
            if d_g > 0 {
                let mut at = pu;
                while at != u_r {
                    at = step_toward(&self.g_dist, &self.g_neighbors, self.n_g, at, u_r);
                    imagined_steps.push(at);
                }
            } else if d_h <= s.saturating_sub(2) {
                // The robber idled in G: imagine a step out and back.
                let nb = self.g_neighbors[pu]
                    .first()
                    .map(|&x| x as usize)
                    .ok_or_else(|| Error::Policy {
                        round: 0,
                        message: "first factor has an isolated vertex".into(),
                    })?;
                imagined_steps.push(nb);
                imagined_steps.push(pu);
            }
            let mut positions: Vec<usize> = (0..self.g_cops).map(|i| gs[i].0).collect();
            // Once some cop shares the imagined robber's vertex, she mirrors
            // his remaining steps and the others hold.
            let mut mirror: Option<usize> = None;
            for &imagined in &imagined_steps {
                if mirror.is_none() {
                    mirror = positions.iter().position(|&p| p == imagined);
                }
                match mirror {
                    Some(which) => positions[which] = imagined,
                    None => {
                        squad_response(
                            &self.semi,
                            &self.g_dist,
                            &self.g_neighbors,
                            self.n_g,
                            &mut positions,
                            imagined,
                        )?;
                        mirror = positions.iter().position(|&p| p == imagined);
                    }
                }
            }
            for i in 0..self.g_cops {
                gs[i].0 = positions[i];
            }
        }

        // H squad: indices g_cops..g_cops+h_cops.
        let all_h_phase2 = (self.g_cops..cops.len()).all(|i| self.phase2[i]);
        for i in self.g_cops..cops.len() {
            if self.phase2[i] {
                gs[i].0 = u_r;
                continue;
            }
            let (mut gc, hc) = gs[i];
            for _ in 0..s {
                if gc == u_r {
                    break;
                }
                gc = step_toward(&self.g_dist, &self.g_neighbors, self.n_g, gc, u_r);
            }
            gs[i] = (gc, hc);
            if gc == u_r {
                self.phase2[i] = true;
            }
        }
        if all_h_phase2 {
            let qualifying = d_g == 0 && (d_h + 1 == s || d_h == s);
            if qualifying {
                let mut positions: Vec<usize> =
                    (self.g_cops..cops.len()).map(|i| gs[i].1).collect();
                squad_response(
                    &self.restricted,
                    &self.h_dist,
                    &self.h_neighbors,
                    self.n_h,
                    &mut positions,
                    v_r,
                )?;
                for (slot, i) in (self.g_cops..cops.len()).enumerate() {
                    gs[i].1 = positions[slot];
                }
            }
        }

        self.prev_robber = Some((u_r, v_r));
        Ok(gs.into_iter().map(|(gc, hc)| self.join(gc, hc)).collect())
    }

    fn invariant(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        _cops: &[usize],
        _robber: usize,
    ) -> Option<InvariantCheck> {
        let in_phase2 = self.phase2.iter().filter(|&&p| p).count();
        Some(InvariantCheck::new(
            "phase progress",
            true,
            format!("{in_phase2}/{} cops in phase two", self.phase2.len()),
        ))
    }
}
