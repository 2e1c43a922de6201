//! Cop-side policies: solver-optimal play, simple adversaries, and the
//! sub-stepping single cop for two-factor path products.

use super::{coord_index, product_coords, CopPolicy, InvariantCheck};
use crate::error::{Error, Result};
use crate::game::GameConfig;
use crate::graph::Graph;
use crate::solver::SolvedGame;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Plays value-optimal moves from a solved table. On robber-win positions
/// every move is value-equivalent; the lowest-index successor is used.
pub struct SolvedCopPolicy<'a> {
    solved: &'a SolvedGame,
}

impl<'a> SolvedCopPolicy<'a> {
    pub fn new(solved: &'a SolvedGame) -> SolvedCopPolicy<'a> {
        SolvedCopPolicy { solved }
    }
}

/// Deterministic spread placement: vertices of minimum eccentricity, then
/// index order.
fn central_spread(g: &Graph, k: usize) -> Vec<usize> {
    let mut by_ecc: Vec<(usize, usize)> = (0..g.order())
        .map(|v| (g.eccentricity(v).unwrap_or(usize::MAX), v))
        .collect();
    by_ecc.sort_unstable();
    (0..k).map(|i| by_ecc[i % by_ecc.len()].1).collect()
}

impl CopPolicy for SolvedCopPolicy<'_> {
    fn name(&self) -> String {
        "solver-optimal cops".into()
    }

    fn place(&mut self, g: &Graph, cfg: &GameConfig) -> Result<Vec<usize>> {
        match &self.solved.result().optimal_placement {
            Some(p) => Ok(p.clone()),
            None => Ok(central_spread(g, cfg.cop_count)),
        }
    }

    fn turn(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<Vec<usize>> {
        let mut order: Vec<usize> = (0..cops.len()).collect();
        order.sort_by_key(|&i| cops[i]);
        let sorted: Vec<usize> = order.iter().map(|&i| cops[i]).collect();
        let plan = self.solved.optimal_cop_turn(&sorted, robber)?;
        let mut dests = vec![0; cops.len()];
        for (slot, &(_, to)) in order.iter().zip(&plan) {
            dests[*slot] = to;
        }
        Ok(dests)
    }
}

/// Each cop independently takes up to s steps along a shortest path toward
/// the robber. Works from per-turn BFS so it scales to graphs far beyond the
/// solver's reach.
pub struct GreedyCops;

impl GreedyCops {
    pub fn new() -> GreedyCops {
        GreedyCops
    }
}

impl Default for GreedyCops {
    fn default() -> Self {
        GreedyCops::new()
    }
}

impl CopPolicy for GreedyCops {
    fn name(&self) -> String {
        "greedy-closing cops".into()
    }

    fn place(&mut self, g: &Graph, cfg: &GameConfig) -> Result<Vec<usize>> {
        // Evenly spaced over the index range; eccentricity scans would be
        // wasteful on graphs this policy is meant to pressure-test.
        let k = cfg.cop_count;
        Ok((1..=k).map(|i| i * g.order() / (k + 1)).collect())
    }

    fn turn(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<Vec<usize>> {
        let to_robber = g.bfs(robber);
        Ok(cops
            .iter()
            .map(|&c| {
                g.ball(c, cfg.cop_speed)
                    .expect("cop vertex in range")
                    .into_iter()
                    .min_by_key(|&w| (to_robber[w], w))
                    .expect("ball is nonempty")
            })
            .collect())
    }
}

/// Seeded uniformly random legal moves.
pub struct RandomCops {
    rng: ChaCha8Rng,
}

impl RandomCops {
    pub fn new(seed: u64) -> RandomCops {
        RandomCops {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl CopPolicy for RandomCops {
    fn name(&self) -> String {
        "random cops".into()
    }

    fn place(&mut self, g: &Graph, cfg: &GameConfig) -> Result<Vec<usize>> {
        Ok((0..cfg.cop_count)
            .map(|_| self.rng.gen_range(0..g.order()))
            .collect())
    }

    fn turn(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        _robber: usize,
    ) -> Result<Vec<usize>> {
        cops.iter()
            .map(|&c| {
                let ball = g.ball(c, cfg.cop_speed)?;
                Ok(ball[self.rng.gen_range(0..ball.len())])
            })
            .collect()
    }
}

/// The single-cop strategy for a Cartesian product of two paths: one step at
/// a time, shrink the larger per-dimension distance without zeroing either,
/// and walk straight in for the capture. Records the per-round monotone
/// total distance as its invariant.
pub struct GridSingleCop {
    prev_total: Option<usize>,
}

impl GridSingleCop {
    pub fn new() -> GridSingleCop {
        GridSingleCop { prev_total: None }
    }
}

impl Default for GridSingleCop {
    fn default() -> Self {
        GridSingleCop::new()
    }
}

fn two_path_coords(g: &Graph, v: usize, who: &str) -> Result<(usize, usize, usize, usize)> {
    let (sizes, coords) = product_coords(g, who)?;
    if sizes.len() != 2 {
        return Err(Error::invalid(format!(
            "{who} requires exactly two factors"
        )));
    }
    Ok((coords[v][0], coords[v][1], sizes[0], sizes[1]))
}

impl CopPolicy for GridSingleCop {
    fn name(&self) -> String {
        "grid single cop".into()
    }

    fn place(&mut self, g: &Graph, cfg: &GameConfig) -> Result<Vec<usize>> {
        if cfg.cop_count != 1 {
            return Err(Error::invalid("grid single cop plays alone"));
        }
        let (sizes, _) = product_coords(g, "grid single cop")?;
        let center: Vec<usize> = sizes.iter().map(|&s| (s - 1) / 2).collect();
        self.prev_total = None;
        Ok(vec![coord_index(sizes, &center)])
    }

    fn turn(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<Vec<usize>> {
        let (mut c1, mut c2, s1, s2) = two_path_coords(g, cops[0], "grid single cop")?;
        let (r1, r2, _, _) = two_path_coords(g, robber, "grid single cop")?;
        let mut remaining = cfg.cop_speed;
        while remaining > 0 {
            let d1 = c1.abs_diff(r1);
            let d2 = c2.abs_diff(r2);
            if d1 + d2 <= remaining {
                // Walk straight onto the robber.
                c1 = r1;
                c2 = r2;
                break;
            }
            let step_dim1 = if d1 >= d2 { d1 >= 2 } else { d2 < 2 };
            if d1.max(d2) < 2 {
                // Distance 1 in each dimension with steps to spare: stop.
                break;
            }
            if step_dim1 {
                c1 = if r1 > c1 { c1 + 1 } else { c1 - 1 };
            } else {
                c2 = if r2 > c2 { c2 + 1 } else { c2 - 1 };
            }
            remaining -= 1;
        }
        Ok(vec![coord_index(&[s1, s2], &[c1, c2])])
    }

    fn invariant(
        &mut self,
        g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Option<InvariantCheck> {
        let (c1, c2, ..) = two_path_coords(g, cops[0], "grid single cop").ok()?;
        let (r1, r2, ..) = two_path_coords(g, robber, "grid single cop").ok()?;
        let total = c1.abs_diff(r1) + c2.abs_diff(r2);
        let holds = self.prev_total.is_none_or(|p| total <= p);
        let detail = format!("total distance {total}, previous {:?}", self.prev_total);
        self.prev_total = Some(total);
        Some(InvariantCheck::new(
            "total distance non-increasing",
            holds,
            detail,
        ))
    }
}
