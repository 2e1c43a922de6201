//! Robber-side policies: solver-optimal play, simple adversaries, and the
//! evasion strategies for grids, hypercubes, incidence-graph products and
//! strong cycle powers.

use super::{coord_index, product_coords, InvariantCheck, RobberPolicy};
use crate::error::{Error, Result};
use crate::game::{robber_moves, GameConfig};
use crate::graph::Graph;
use crate::solver::SolvedGame;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn policy_err(message: impl Into<String>) -> Error {
    Error::Policy {
        round: 0,
        message: message.into(),
    }
}

pub struct SolvedRobberPolicy<'a> {
    solved: &'a SolvedGame,
}

impl<'a> SolvedRobberPolicy<'a> {
    pub fn new(solved: &'a SolvedGame) -> SolvedRobberPolicy<'a> {
        SolvedRobberPolicy { solved }
    }
}

impl RobberPolicy for SolvedRobberPolicy<'_> {
    fn name(&self) -> String {
        "solver-optimal robber".into()
    }

    fn place(&mut self, _g: &Graph, _cfg: &GameConfig, cops: &[usize]) -> Result<usize> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        self.solved.robber_best_placement(&sorted)
    }

    fn turn(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<usize> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        self.solved.optimal_robber_move(&sorted, robber)
    }
}

/// Maximizes distance to the nearest cop among legal moves, by per-turn BFS
/// from the cop positions.
pub struct GreedyRobber;

impl GreedyRobber {
    pub fn new() -> GreedyRobber {
        GreedyRobber
    }

    /// Distance to the nearest cop for every vertex: one BFS from the whole
    /// cop set.
    fn margins(g: &Graph, cops: &[usize]) -> Vec<u32> {
        let mut dist = vec![u32::MAX; g.order()];
        let mut queue = std::collections::VecDeque::new();
        for &c in cops {
            if dist[c] != 0 {
                dist[c] = 0;
                queue.push_back(c);
            }
        }
        while let Some(u) = queue.pop_front() {
            for &v in g.neighbors(u) {
                let v = v as usize;
                if dist[v] == u32::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }
}

impl Default for GreedyRobber {
    fn default() -> Self {
        GreedyRobber::new()
    }
}

impl RobberPolicy for GreedyRobber {
    fn name(&self) -> String {
        "greedy-fleeing robber".into()
    }

    fn place(&mut self, g: &Graph, _cfg: &GameConfig, cops: &[usize]) -> Result<usize> {
        let margins = Self::margins(g, cops);
        (0..g.order())
            .max_by_key(|&v| (margins[v], std::cmp::Reverse(v)))
            .ok_or_else(|| policy_err("empty graph"))
    }

    fn turn(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<usize> {
        let margins = Self::margins(g, cops);
        robber_moves(g, cfg, cops, robber)?
            .into_iter()
            .max_by_key(|&v| (margins[v], std::cmp::Reverse(v)))
            .ok_or_else(|| policy_err("robber has no legal move"))
    }
}

pub struct RandomRobber {
    rng: ChaCha8Rng,
}

impl RandomRobber {
    pub fn new(seed: u64) -> RandomRobber {
        RandomRobber {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl RobberPolicy for RandomRobber {
    fn name(&self) -> String {
        "random robber".into()
    }

    fn place(&mut self, g: &Graph, _cfg: &GameConfig, cops: &[usize]) -> Result<usize> {
        let free: Vec<usize> = (0..g.order()).filter(|v| !cops.contains(v)).collect();
        if free.is_empty() {
            return Ok(0);
        }
        Ok(free[self.rng.gen_range(0..free.len())])
    }

    fn turn(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<usize> {
        let moves = robber_moves(g, cfg, cops, robber)?;
        if moves.is_empty() {
            return Err(policy_err("robber has no legal move"));
        }
        Ok(moves[self.rng.gen_range(0..moves.len())])
    }
}

/// Evasion on Cartesian products of paths: find a dimension where neither
/// direction is blocked by a cop covering at least half its distance, and
/// move the full s steps along it.
pub struct GridBlockingRobber;

impl GridBlockingRobber {
    pub fn new() -> GridBlockingRobber {
        GridBlockingRobber
    }
}

impl Default for GridBlockingRobber {
    fn default() -> Self {
        GridBlockingRobber::new()
    }
}

fn l1_dist(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).map(|(&x, &y)| x.abs_diff(y)).sum()
}

impl RobberPolicy for GridBlockingRobber {
    fn name(&self) -> String {
        "grid blocking robber".into()
    }

    fn place(&mut self, g: &Graph, _cfg: &GameConfig, cops: &[usize]) -> Result<usize> {
        let (_, coords) = product_coords(g, "grid blocking robber")?;
        (0..g.order())
            .max_by_key(|&v| {
                let margin = cops
                    .iter()
                    .map(|&c| l1_dist(&coords[v], &coords[c]))
                    .min()
                    .unwrap_or(0);
                (margin, std::cmp::Reverse(v))
            })
            .ok_or_else(|| policy_err("empty graph"))
    }

    fn turn(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<usize> {
        let (sizes, coords) = product_coords(g, "grid blocking robber")?;
        let s = cfg.robber_speed;
        let here = &coords[robber];
        for dim in 0..sizes.len() {
            let mut forward_free = true;
            let mut backward_free = true;
            for &c in cops {
                let cc = &coords[c];
                let x = l1_dist(here, cc);
                let dd = here[dim].abs_diff(cc[dim]);
                if 2 * dd >= x {
                    if cc[dim] > here[dim] {
                        forward_free = false;
                    } else if cc[dim] < here[dim] {
                        backward_free = false;
                    }
                }
            }
            if !(forward_free && backward_free) {
                continue;
            }
            let room_forward = sizes[dim] - 1 - here[dim];
            let dest_coord = if room_forward >= s {
                here[dim] + s
            } else if here[dim] >= s {
                here[dim] - s
            } else {
                return Err(policy_err(format!(
                    "factor {dim} too small to take {s} steps; diameter precondition violated"
                )));
            };
            let mut target = here.clone();
            target[dim] = dest_coord;
            return Ok(coord_index(sizes, &target));
        }
        Err(policy_err(
            "every dimension blocked; cop-count precondition violated",
        ))
    }

    fn invariant(
        &mut self,
        g: &Graph,
        cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Option<InvariantCheck> {
        let (_, coords) = product_coords(g, "grid blocking robber").ok()?;
        let margin = cops
            .iter()
            .map(|&c| l1_dist(&coords[robber], &coords[c]))
            .min()?;
        Some(InvariantCheck::new(
            "cops beyond speed range",
            margin > cfg.cop_speed,
            format!("nearest cop at distance {margin}"),
        ))
    }
}

/// Speed-2 evasion on hypercubes by dimension weighting: cops at distance
/// one or two weight their differing dimensions 1, cops at distance three or
/// four weight theirs 1/2, and the robber flips two low-weight dimensions
/// (or one, in the exceptional all-heavy case) to reach a vertex at distance
/// at least three from every cop.
pub struct HypercubeWeightRobber;

impl HypercubeWeightRobber {
    pub fn new() -> HypercubeWeightRobber {
        HypercubeWeightRobber
    }

    fn check_cube(g: &Graph) -> Result<usize> {
        let (sizes, _) = product_coords(g, "hypercube weight robber")?;
        if sizes.iter().any(|&s| s != 2) {
            return Err(policy_err("hypercube weight robber requires a hypercube"));
        }
        Ok(sizes.len())
    }
}

impl Default for HypercubeWeightRobber {
    fn default() -> Self {
        HypercubeWeightRobber::new()
    }
}

impl RobberPolicy for HypercubeWeightRobber {
    fn name(&self) -> String {
        "hypercube weight robber".into()
    }

    fn place(&mut self, g: &Graph, _cfg: &GameConfig, cops: &[usize]) -> Result<usize> {
        Self::check_cube(g)?;
        let best = (0..g.order())
            .max_by_key(|&v| {
                let margin = cops
                    .iter()
                    .map(|&c| (v ^ c).count_ones())
                    .min()
                    .unwrap_or(u32::MAX);
                (margin, std::cmp::Reverse(v))
            })
            .expect("nonempty graph");
        let margin = cops
            .iter()
            .map(|&c| (best ^ c).count_ones())
            .min()
            .unwrap_or(u32::MAX);
        if margin < 3 {
            return Err(policy_err(
                "no safe starting vertex; cop count exceeds hypotheses",
            ));
        }
        Ok(best)
    }

    fn turn(
        &mut self,
        g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<usize> {
        let d = Self::check_cube(g)?;
        // Weights in half units; a dimension of weight exactly 1/2 has a
        // unique contributing cop.
        let mut halves = vec![0u32; d];
        let mut contributor = vec![usize::MAX; d];
        for (ci, &c) in cops.iter().enumerate() {
            let diff = robber ^ c;
            let dist = diff.count_ones();
            let unit: u32 = match dist {
                1 | 2 => 2,
                3 | 4 => 1,
                _ => continue,
            };
            for bit in 0..d {
                if diff >> bit & 1 == 1 {
                    halves[bit] += unit;
                    contributor[bit] = ci;
                }
            }
        }
        let zeros: Vec<usize> = (0..d).filter(|&b| halves[b] == 0).collect();
        let half_dims: Vec<usize> = (0..d).filter(|&b| halves[b] == 1).collect();

        let flip = |bits: &[usize]| bits.iter().fold(robber, |v, &b| v ^ (1 << b));
        let dest = if zeros.len() >= 2 {
            flip(&zeros[..2])
        } else if zeros.len() == 1 && !half_dims.is_empty() {
            flip(&[zeros[0], half_dims[0]])
        } else if let Some(pair) = distinct_contributor_pair(&half_dims, &contributor) {
            flip(&pair)
        } else if !half_dims.is_empty() {
            // Exceptional case: one step in a half-weight dimension.
            flip(&half_dims[..1])
        } else {
            return Err(policy_err(
                "no low-weight dimension; weighting argument violated",
            ));
        };
        let margin = cops
            .iter()
            .map(|&c| (dest ^ c).count_ones())
            .min()
            .unwrap_or(u32::MAX);
        if margin < 3 {
            return Err(policy_err(format!(
                "chosen move ends at distance {margin} < 3; weighting case analysis violated"
            )));
        }
        Ok(dest)
    }

    fn invariant(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Option<InvariantCheck> {
        let margin = cops.iter().map(|&c| (robber ^ c).count_ones()).min()?;
        Some(InvariantCheck::new(
            "distance at least three",
            margin >= 3,
            format!("nearest cop at distance {margin}"),
        ))
    }
}

fn distinct_contributor_pair(half_dims: &[usize], contributor: &[usize]) -> Option<[usize; 2]> {
    for (i, &a) in half_dims.iter().enumerate() {
        for &b in &half_dims[i + 1..] {
            if contributor[a] != contributor[b] {
                return Some([a, b]);
            }
        }
    }
    None
}

/// Evasion on the Cartesian square of a projective-plane incidence graph:
/// per factor, pick a neighbor at distance two or more from every cop not
/// sharing the robber's coordinate.
pub struct ProjectiveProductRobber {
    p_order: usize,
    p_dist: Vec<u16>,
    p_neighbors: Vec<Vec<u32>>,
}

impl ProjectiveProductRobber {
    pub fn new(p: &Graph) -> ProjectiveProductRobber {
        ProjectiveProductRobber {
            p_order: p.order(),
            p_dist: p.distance_table(),
            p_neighbors: (0..p.order()).map(|v| p.neighbors(v).to_vec()).collect(),
        }
    }

    fn split(&self, v: usize) -> (usize, usize) {
        (v / self.p_order, v % self.p_order)
    }

    fn pd(&self, a: usize, b: usize) -> usize {
        self.p_dist[a * self.p_order + b] as usize
    }

    /// Lowest neighbor of `at` lying at factor distance >= 2 from every
    /// listed cop coordinate other than `at` itself.
    fn safe_neighbor(&self, at: usize, cop_coords: &[usize]) -> Option<usize> {
        self.p_neighbors[at]
            .iter()
            .map(|&x| x as usize)
            .find(|&nb| cop_coords.iter().all(|&w| w == at || self.pd(nb, w) >= 2))
    }

    fn product_margin(&self, cops: &[usize], v: usize) -> usize {
        let (a, b) = self.split(v);
        cops.iter()
            .map(|&c| {
                let (wa, wb) = self.split(c);
                self.pd(a, wa) + self.pd(b, wb)
            })
            .min()
            .unwrap_or(usize::MAX)
    }
}

impl RobberPolicy for ProjectiveProductRobber {
    fn name(&self) -> String {
        "projective product robber".into()
    }

    fn place(&mut self, g: &Graph, _cfg: &GameConfig, cops: &[usize]) -> Result<usize> {
        if g.order() != self.p_order * self.p_order {
            return Err(policy_err(
                "graph is not the Cartesian square of the given factor",
            ));
        }
        let best = (0..g.order())
            .max_by_key(|&v| (self.product_margin(cops, v), std::cmp::Reverse(v)))
            .expect("nonempty graph");
        if self.product_margin(cops, best) < 3 {
            return Err(policy_err(
                "no starting vertex at distance three; hypotheses violated",
            ));
        }
        Ok(best)
    }

    fn turn(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<usize> {
        let (u, v) = self.split(robber);
        let first: Vec<usize> = cops.iter().map(|&c| self.split(c).0).collect();
        let second: Vec<usize> = cops.iter().map(|&c| self.split(c).1).collect();
        let u2 = self
            .safe_neighbor(u, &first)
            .ok_or_else(|| policy_err("no safe first coordinate; counting property violated"))?;
        let v2 = self
            .safe_neighbor(v, &second)
            .ok_or_else(|| policy_err("no safe second coordinate; counting property violated"))?;
        Ok(u2 * self.p_order + v2)
    }

    fn invariant(
        &mut self,
        _g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Option<InvariantCheck> {
        let margin = self.product_margin(cops, robber);
        Some(InvariantCheck::new(
            "distance at least three",
            margin >= 3,
            format!("nearest cop at product distance {margin}"),
        ))
    }
}

/// Evasion on the k-fold strong product of the cycle of length 2s+2: keep
/// coordinate i offset by exactly s+1 from cop i's coordinate i.
pub struct TorusCoordinateRobber {
    s: usize,
}

impl TorusCoordinateRobber {
    pub fn new(s: usize) -> TorusCoordinateRobber {
        TorusCoordinateRobber { s }
    }

    fn cycle_len(&self) -> usize {
        2 * self.s + 2
    }

    fn target(&self, g: &Graph, cops: &[usize]) -> Result<usize> {
        let (sizes, coords) = product_coords(g, "torus coordinate robber")?;
        let len = self.cycle_len();
        if sizes.len() != cops.len() || sizes.iter().any(|&x| x != len) {
            return Err(policy_err(format!(
                "torus coordinate robber needs one cop per factor of a strong power of the {len}-cycle"
            )));
        }
        let target: Vec<usize> = (0..sizes.len())
            .map(|i| (coords[cops[i]][i] + self.s + 1) % len)
            .collect();
        Ok(coord_index(sizes, &target))
    }
}

impl RobberPolicy for TorusCoordinateRobber {
    fn name(&self) -> String {
        "torus coordinate robber".into()
    }

    fn place(&mut self, g: &Graph, _cfg: &GameConfig, cops: &[usize]) -> Result<usize> {
        self.target(g, cops)
    }

    fn turn(
        &mut self,
        g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Result<usize> {
        let _ = robber;
        self.target(g, cops)
    }

    fn invariant(
        &mut self,
        g: &Graph,
        _cfg: &GameConfig,
        cops: &[usize],
        robber: usize,
    ) -> Option<InvariantCheck> {
        let (sizes, coords) = product_coords(g, "torus coordinate robber").ok()?;
        let len = self.cycle_len();
        let offsets: Vec<usize> = (0..sizes.len())
            .map(|i| {
                let a = coords[robber][i];
                let b = coords[cops[i]][i];
                let d = a.abs_diff(b);
                d.min(len - d)
            })
            .collect();
        let holds = offsets.iter().all(|&o| o == self.s + 1);
        Some(InvariantCheck::new(
            "designated coordinate offset",
            holds,
            format!(
                "per-dimension offsets {offsets:?}, expected all {}",
                self.s + 1
            ),
        ))
    }
}
