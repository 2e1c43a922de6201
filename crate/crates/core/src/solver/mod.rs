//! Exact solving by retrograde analysis.
//!
//! States are labeled backward from captures with per-state
//! unresolved-successor counters: cop-choice states finalize on their first
//! finalized successor (minimum, since states pop in nondecreasing value
//! order), robber states finalize when every successor is resolved
//! (maximum). One round costs one cop turn; the edge out of the first cop
//! sub-move of a turn carries the cost. Unlabeled states are robber wins.

mod layout;

use crate::error::{Error, Result};
use crate::game::{robber_moves, GameConfig};
use crate::graph::Graph;
use layout::Layout;
use serde::{Deserialize, Serialize};

const UNSET: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct SolverOptions {
    /// Cap on canonical states (cop multisets x vertices x 2 phases).
    pub state_budget: u64,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            state_budget: 1 << 28,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveStats {
    pub internal_states: u64,
    pub finalized: u64,
    pub value_layers: u32,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveResult {
    pub cop_win: bool,
    /// Optimal capture time in cop turns; present iff `cop_win`.
    pub capture_time: Option<usize>,
    /// A placement multiset achieving the optimum, lowest rank first.
    pub optimal_placement: Option<Vec<usize>>,
    /// Canonical state count of the configuration.
    pub state_count: u64,
    pub stats: SolveStats,
}

/// Solve-report schema used by the CLI and the cache.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SolveReport {
    pub graph_hash: String,
    pub config: GameConfig,
    pub cop_win: bool,
    pub capture_time: Option<usize>,
    pub states: u64,
    pub millis: u128,
}

impl SolveReport {
    pub fn new(g: &Graph, cfg: &GameConfig, res: &SolveResult) -> SolveReport {
        SolveReport {
            graph_hash: g.hash_hex(),
            config: cfg.clone(),
            cop_win: res.cop_win,
            capture_time: res.capture_time,
            states: res.state_count,
            millis: res.stats.millis,
        }
    }
}

/// Truncated-BFS scratch for robber move generation.
struct MoveGen {
    blocked: Vec<u32>,
    visited: Vec<u32>,
    stamp: u32,
    frontier: Vec<u16>,
    next: Vec<u16>,
    out: Vec<u16>,
}

impl MoveGen {
    fn new(n: usize) -> MoveGen {
        MoveGen {
            blocked: vec![0; n],
            visited: vec![0; n],
            stamp: 0,
            frontier: Vec::with_capacity(n),
            next: Vec::with_capacity(n),
            out: Vec::with_capacity(n),
        }
    }

    /// Legal robber destinations from `from` against cops at `cops`:
    /// reachable within `t` steps avoiding cop vertices, ending at an allowed
    /// unblocked distance. `from` must not be cop-occupied.
    fn moves(
        &mut self,
        g: &Graph,
        dist: &[u16],
        allowed: &[bool],
        t: usize,
        cops: &[u16],
        from: usize,
    ) -> &[u16] {
        let n = g.order();
        self.stamp += 1;
        let stamp = self.stamp;
        for &c in cops {
            self.blocked[c as usize] = stamp;
        }
        self.out.clear();
        self.frontier.clear();
        self.frontier.push(from as u16);
        self.visited[from] = stamp;
        if allowed[0] {
            self.out.push(from as u16);
        }
        let drow = &dist[from * n..(from + 1) * n];
        for _ in 1..=t {
            self.next.clear();
            for &u in &self.frontier {
                for &v in g.neighbors(u as usize) {
                    let vu = v as usize;
                    if self.visited[vu] != stamp && self.blocked[vu] != stamp {
                        self.visited[vu] = stamp;
                        self.next.push(v as u16);
                        let fd = drow[vu] as usize;
                        if fd <= t && allowed[fd] {
                            self.out.push(v as u16);
                        }
                    }
                }
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
        &self.out
    }
}

struct Engine<'a> {
    g: &'a Graph,
    cfg: &'a GameConfig,
    layout: Layout,
    n: usize,
    k: usize,
    radius: u16,
    dist: Vec<u16>,
    balls: Vec<Vec<u16>>,
    allowed: Vec<bool>,
    values: Vec<u32>,
    /// Unresolved-successor counters for robber-phase states.
    counters: Vec<u16>,
    movegen: MoveGen,
    cur: Vec<u32>,
    next: Vec<u32>,
    finalized: u64,
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, cfg: &'a GameConfig) -> Engine<'a> {
        let n = g.order();
        let k = cfg.cop_count;
        let flagged = cfg.cops_must_move() && k >= 2;
        let layout = Layout::new(n, k, flagged);
        assert!(
            layout.total < u32::MAX as u64,
            "internal state space exceeds u32 indexing"
        );
        let dist = g.distance_table();
        let balls: Vec<Vec<u16>> = (0..n)
            .map(|v| {
                (0..n)
                    .filter(|&w| (dist[v * n + w] as usize) <= cfg.cop_speed)
                    .map(|w| w as u16)
                    .collect()
            })
            .collect();
        let allowed: Vec<bool> = (0..=cfg.robber_speed)
            .map(|d| cfg.end_distance_allowed(d))
            .collect();
        let values = vec![UNSET; layout.total as usize];
        let counter_len = (layout.m_counts[k] * n as u64) as usize;
        Engine {
            g,
            cfg,
            n,
            k,
            radius: cfg.capture_radius as u16,
            dist,
            balls,
            allowed,
            values,
            counters: vec![0; counter_len],
            movegen: MoveGen::new(n),
            cur: Vec::new(),
            next: Vec::new(),
            layout,
            finalized: 0,
        }
    }

    /// Seeds terminal states: captures at every phase and, for must-move
    /// variants, robber states with no legal move.
    fn init(&mut self) {
        let n = self.n;
        let k = self.k;
        let mut mind = vec![u16::MAX; n];
        let mut cops: Vec<u16> = Vec::with_capacity(k);
        for phase in 0..=k {
            let m_size = phase;
            let u_size = k - phase;
            for rank_m in 0..self.layout.m_counts[phase] {
                for rank_u in 0..self.layout.u_counts[phase] {
                    cops.clear();
                    cops.extend_from_slice(self.layout.multiset(m_size, rank_m));
                    cops.extend_from_slice(self.layout.multiset(u_size, rank_u));
                    for v in 0..n {
                        let mut m = u16::MAX;
                        for &c in &cops {
                            m = m.min(self.dist[c as usize * n + v]);
                        }
                        mind[v] = m;
                    }
                    for flag in 0..self.layout.flag_dims[phase] {
                        for v in 0..n {
                            let idx = self.layout.index(phase, rank_m, rank_u, flag, v);
                            if mind[v] <= self.radius {
                                self.values[idx as usize] = 0;
                                self.cur.push(idx as u32);
                                self.finalized += 1;
                            } else if phase == k {
                                let count = self
                                    .movegen
                                    .moves(
                                        self.g,
                                        &self.dist,
                                        &self.allowed,
                                        self.cfg.robber_speed,
                                        &cops,
                                        v,
                                    )
                                    .len();
                                if count == 0 {
                                    self.values[idx as usize] = 0;
                                    self.cur.push(idx as u32);
                                    self.finalized += 1;
                                } else {
                                    self.counters[(idx - self.layout.phase_offset[k]) as usize] =
                                        count as u16;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[inline]
    fn relax_or(&mut self, pred: u64, value: u32, cost: u32) {
        let slot = &mut self.values[pred as usize];
        if *slot == UNSET {
            *slot = value + cost;
            self.finalized += 1;
            if cost == 0 {
                self.cur.push(pred as u32);
            } else {
                self.next.push(pred as u32);
            }
        }
    }

    #[inline]
    fn relax_robber(&mut self, pred: u64, value: u32) {
        if self.values[pred as usize] != UNSET {
            return;
        }
        let c = &mut self.counters[(pred - self.layout.phase_offset[self.k]) as usize];
        *c -= 1;
        if *c == 0 {
            self.values[pred as usize] = value;
            self.finalized += 1;
            self.cur.push(pred as u32);
        }
    }

    fn propagate(&mut self) -> u32 {
        let active = self.cfg.cops_must_move();
        let k = self.k;
        let n = self.n;
        let mut layer: u32 = 0;
        let mut m_scratch: Vec<usize> = Vec::with_capacity(k);
        let mut moved: Vec<u16> = Vec::with_capacity(k);
        let mut unmoved: Vec<u16> = Vec::with_capacity(k);
        while !self.cur.is_empty() || !self.next.is_empty() {
            while let Some(idx32) = self.cur.pop() {
                let idx = idx32 as u64;
                let value = self.values[idx32 as usize];
                let (phase, rank_m, rank_u, flag, v) = self.layout.decode(idx);
                if phase == 0 {
                    // Predecessors are robber moves into v, by symmetry of the
                    // move relation. Cop-occupied v means the position arose
                    // from a cop sub-move only; no robber edge ends there.
                    unmoved.clear();
                    unmoved.extend_from_slice(self.layout.multiset(k, rank_u));
                    if unmoved.iter().any(|&c| c as usize == v) {
                        continue;
                    }
                    let base = self.layout.phase_offset[k] + rank_u * n as u64;
                    self.movegen.moves(
                        self.g,
                        &self.dist,
                        &self.allowed,
                        self.cfg.robber_speed,
                        &unmoved,
                        v,
                    );
                    for i in 0..self.movegen.out.len() {
                        let w = self.movegen.out[i] as u64;
                        self.relax_robber(base + w, value);
                    }
                    continue;
                }

                // Un-move one cop: the moved cop u' in M returns to some u in
                // its ball, with u at most the minimum of the unmoved set.
                let i = phase - 1;
                let cost = if i == 0 { 1 } else { 0 };
                moved.clear();
                moved.extend_from_slice(self.layout.multiset(phase, rank_m));
                unmoved.clear();
                unmoved.extend_from_slice(self.layout.multiset(k - phase, rank_u));
                let bound = unmoved.first().map_or(u16::MAX, |&x| x);
                let u_suffix: u64 = unmoved
                    .iter()
                    .enumerate()
                    .map(|(t, &x)| self.layout.binom.get(x as usize + t + 1, t + 2))
                    .sum();
                for j in 0..phase {
                    if j > 0 && moved[j] == moved[j - 1] {
                        continue;
                    }
                    let mover = moved[j] as usize;
                    m_scratch.clear();
                    m_scratch.extend(
                        moved
                            .iter()
                            .enumerate()
                            .filter(|&(p, _)| p != j)
                            .map(|(_, &x)| x as usize),
                    );
                    let rank_m_pred = self.layout.rank(&m_scratch);
                    let cut = self.balls[mover].partition_point(|&x| x <= bound);
                    for bi in 0..cut {
                        let u = self.balls[mover][bi];
                        let rank_u_pred = u as u64 + u_suffix;
                        let did_move = u as usize != mover;
                        if !active {
                            let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 0, v);
                            self.relax_or(pred, value, cost);
                            continue;
                        }
                        // Active variant: thread the moved-yet flag.
                        if phase == k {
                            if k == 1 {
                                if did_move {
                                    let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 0, v);
                                    self.relax_or(pred, value, cost);
                                }
                            } else {
                                // Final sub-move: legal from flag 0 only if it moves.
                                if did_move {
                                    let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 0, v);
                                    self.relax_or(pred, value, cost);
                                }
                                let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 1, v);
                                self.relax_or(pred, value, cost);
                            }
                        } else if i == 0 {
                            if flag == u64::from(did_move) {
                                let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 0, v);
                                self.relax_or(pred, value, cost);
                            }
                        } else {
                            // flag' = pred_flag | did_move
                            if flag == 1 {
                                if did_move {
                                    let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 0, v);
                                    self.relax_or(pred, value, cost);
                                }
                                let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 1, v);
                                self.relax_or(pred, value, cost);
                            } else if !did_move {
                                let pred = self.layout.index(i, rank_m_pred, rank_u_pred, 0, v);
                                self.relax_or(pred, value, cost);
                            }
                        }
                    }
                }
            }
            std::mem::swap(&mut self.cur, &mut self.next);
            if !self.cur.is_empty() {
                layer += 1;
            }
        }
        layer
    }

    /// Minimax over placements: cops pick the multiset, then the robber picks
    /// the worst vertex knowing it. Ties break toward the lowest rank.
    fn placement(&self) -> (Option<u32>, Option<Vec<usize>>) {
        let n = self.n as u64;
        let mut best: Option<(u32, u64)> = None;
        for rank in 0..self.layout.u_counts[0] {
            let base = rank * n;
            let mut worst: u32 = 0;
            for v in 0..n {
                let val = self.values[(base + v) as usize];
                worst = worst.max(val);
                if val == UNSET {
                    break;
                }
            }
            if worst != UNSET && best.is_none_or(|(b, _)| worst < b) {
                best = Some((worst, rank));
            }
        }
        match best {
            None => (None, None),
            Some((time, rank)) => {
                let cops = self
                    .layout
                    .multiset(self.k, rank)
                    .iter()
                    .map(|&x| x as usize)
                    .collect();
                (Some(time), Some(cops))
            }
        }
    }
}

fn semantic_state_count(g: &Graph, cfg: &GameConfig) -> u64 {
    let b = crate::game::Binomials::new(g.order() + cfg.cop_count + 1, cfg.cop_count + 1);
    b.multiset_count(g.order(), cfg.cop_count)
        .saturating_mul(g.order() as u64)
        .saturating_mul(2)
}

fn check_input(g: &Graph, cfg: &GameConfig, opts: &SolverOptions) -> Result<u64> {
    cfg.validate()?;
    if g.order() == 0 {
        return Err(Error::Domain("empty graph".into()));
    }
    if g.order() > 60_000 {
        return Err(Error::Domain("graph too large for u16 vertex ids".into()));
    }
    if !g.is_connected() {
        return Err(Error::Domain("solver requires a connected graph".into()));
    }
    let states = semantic_state_count(g, cfg);
    if states > opts.state_budget {
        return Err(Error::Budget {
            states,
            budget: opts.state_budget,
        });
    }
    Ok(states)
}

/// A solved configuration, retaining the value table for policy extraction.
pub struct SolvedGame {
    graph: Graph,
    cfg: GameConfig,
    layout: Layout,
    balls: Vec<Vec<u16>>,
    values: Vec<u32>,
    result: SolveResult,
}

pub fn solve_full(g: &Graph, cfg: &GameConfig, opts: &SolverOptions) -> Result<SolvedGame> {
    let states = check_input(g, cfg, opts)?;
    let start = std::time::Instant::now();
    let mut engine = Engine::new(g, cfg);
    engine.init();
    let layers = engine.propagate();
    let (time, placement) = engine.placement();
    let result = SolveResult {
        cop_win: time.is_some(),
        capture_time: time.map(|t| t as usize),
        optimal_placement: placement,
        state_count: states,
        stats: SolveStats {
            internal_states: engine.layout.total,
            finalized: engine.finalized,
            value_layers: layers,
            millis: start.elapsed().as_millis(),
        },
    };
    let Engine {
        layout,
        balls,
        values,
        ..
    } = engine;
    Ok(SolvedGame {
        graph: g.clone(),
        cfg: cfg.clone(),
        layout,
        balls,
        values,
        result,
    })
}

pub fn solve_with(g: &Graph, cfg: &GameConfig, opts: &SolverOptions) -> Result<SolveResult> {
    Ok(solve_full(g, cfg, opts)?.result)
}

pub fn solve(g: &Graph, cfg: &GameConfig) -> Result<SolveResult> {
    solve_with(g, cfg, &SolverOptions::default())
}

/// Least k <= k_max winning for the cops under the base configuration.
pub fn cop_number(g: &Graph, base: &GameConfig, k_max: usize) -> Result<usize> {
    cop_number_with(g, base, k_max, &SolverOptions::default())
}

pub fn cop_number_with(
    g: &Graph,
    base: &GameConfig,
    k_max: usize,
    opts: &SolverOptions,
) -> Result<usize> {
    if k_max < 1 {
        return Err(Error::invalid("k_max must be at least 1"));
    }
    for k in 1..=k_max {
        let cfg = GameConfig {
            cop_count: k,
            ..base.clone()
        };
        if solve_with(g, &cfg, opts)?.cop_win {
            return Ok(k);
        }
    }
    Err(Error::CopNumberExceeded { k_max })
}

/// Classic cop number of the s-th power; the cross-validation route for the
/// speed-(s,s) game.
pub fn cop_number_via_power(g: &Graph, s: usize, k_max: usize) -> Result<usize> {
    cop_number(&crate::graph::power(g, s)?, &GameConfig::classic(1), k_max)
}

/// Optimal capture time under the given configuration; errors when the
/// robber wins.
pub fn capture_time(g: &Graph, cfg: &GameConfig) -> Result<usize> {
    solve(g, cfg)?
        .capture_time
        .ok_or_else(|| Error::Domain("robber wins this configuration".into()))
}

impl SolvedGame {
    pub fn result(&self) -> &SolveResult {
        &self.result
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn config(&self) -> &GameConfig {
        &self.cfg
    }

    fn rank_of(&self, cops: &[usize]) -> Result<u64> {
        if cops.len() != self.cfg.cop_count {
            return Err(Error::InvalidState("wrong cop count".into()));
        }
        if cops.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidState("cop multiset is not sorted".into()));
        }
        if cops.iter().any(|&c| c >= self.graph.order()) {
            return Err(Error::InvalidState("cop vertex out of range".into()));
        }
        Ok(self.layout.rank(cops))
    }

    /// Rounds to capture with cops to move; `None` means the robber wins.
    pub fn value_cop_turn(&self, cops: &[usize], robber: usize) -> Result<Option<u32>> {
        let rank = self.rank_of(cops)?;
        let idx = self.layout.index(0, 0, rank, 0, robber);
        let v = self.values[idx as usize];
        Ok((v != UNSET).then_some(v))
    }

    /// Rounds to capture with the robber to move.
    pub fn value_robber_turn(&self, cops: &[usize], robber: usize) -> Result<Option<u32>> {
        let rank = self.rank_of(cops)?;
        let idx = self.layout.index(self.cfg.cop_count, rank, 0, 0, robber);
        let v = self.values[idx as usize];
        Ok((v != UNSET).then_some(v))
    }

    /// A value-optimal full cop turn from sorted positions, as
    /// (from, to) sub-moves in processing order. Ties break toward the lowest
    /// successor index.
    pub fn optimal_cop_turn(&self, cops: &[usize], robber: usize) -> Result<Vec<(usize, usize)>> {
        self.rank_of(cops)?;
        let k = self.cfg.cop_count;
        let active = self.cfg.cops_must_move();
        let mut moved: Vec<usize> = Vec::with_capacity(k);
        let mut unmoved: Vec<usize> = cops.to_vec();
        let mut flag = false;
        let mut plan = Vec::with_capacity(k);
        for phase in 1..=k {
            let u = unmoved.remove(0);
            let rank_u_next = self.layout.rank(&unmoved);
            let mut best: Option<(u32, u64, usize)> = None;
            for &dest in &self.balls[u] {
                let dest = dest as usize;
                if active && phase == k && !flag && dest == u {
                    continue;
                }
                let mut m_next = moved.clone();
                let pos = m_next.partition_point(|&x| x < dest);
                m_next.insert(pos, dest);
                let next_flag_dim = self.layout.flag_dims[phase];
                let f = if next_flag_dim == 2 {
                    u64::from(flag || dest != u)
                } else {
                    0
                };
                let idx =
                    self.layout
                        .index(phase, self.layout.rank(&m_next), rank_u_next, f, robber);
                let val = self.values[idx as usize];
                // Prefer finite values; among equals, the lowest index.
                let key = (val, idx, dest);
                if best.is_none_or(|b| key < b) {
                    best = Some(key);
                }
            }
            let (_, _, dest) =
                best.ok_or_else(|| Error::InvalidState("cop has no legal sub-move".into()))?;
            plan.push((u, dest));
            flag = flag || dest != u;
            let pos = moved.partition_point(|&x| x < dest);
            moved.insert(pos, dest);
        }
        Ok(plan)
    }

    /// A value-optimal robber move; prefers surviving moves, then higher
    /// values, then the lowest vertex.
    pub fn optimal_robber_move(&self, cops: &[usize], robber: usize) -> Result<usize> {
        let rank = self.rank_of(cops)?;
        let moves = robber_moves(&self.graph, &self.cfg, cops, robber)?;
        let base = rank * self.graph.order() as u64;
        moves
            .into_iter()
            .map(|w| {
                let val = self.values[(base + w as u64) as usize];
                (val, w)
            })
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, w)| w)
            .ok_or_else(|| Error::InvalidState("robber has no legal move".into()))
    }

    /// The robber's best placement against the given cop placement.
    pub fn robber_best_placement(&self, cops: &[usize]) -> Result<usize> {
        let rank = self.rank_of(cops)?;
        let base = rank * self.graph.order() as u64;
        Ok((0..self.graph.order())
            .map(|v| (self.values[(base + v as u64) as usize], v))
            .max_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)))
            .map(|(_, v)| v)
            .expect("nonempty graph"))
    }
}
