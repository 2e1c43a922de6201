//! Game rules: configurations, state encoding, and legal-move generation.
//!
//! Cops move up to `cop_speed` edges per turn, unconstrained by other pieces.
//! The robber moves up to `robber_speed` edges along a path that avoids every
//! cop-occupied vertex, and must end at a distance from his starting vertex
//! that the variant allows. Capture means some cop is within
//! `capture_radius` of the robber (radius 0: same vertex).

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Both sides may stay put.
    Standard,
    /// At least one cop must change vertex each cop turn and the robber must
    /// change vertex each robber turn.
    Active,
    /// Only the robber is required to move.
    SemiActive,
    /// The robber must end at unblocked distance t-1 or t from his previous
    /// position; reachability still respects blocking.
    Restricted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameConfig {
    pub cop_speed: usize,
    pub robber_speed: usize,
    pub cop_count: usize,
    pub variant: Variant,
    pub capture_radius: usize,
}

impl GameConfig {
    pub fn new(cop_count: usize, cop_speed: usize, robber_speed: usize) -> GameConfig {
        GameConfig {
            cop_speed,
            robber_speed,
            cop_count,
            variant: Variant::Standard,
            capture_radius: 0,
        }
    }

    /// The speed-(s,s) game with k cops.
    pub fn speed(k: usize, s: usize) -> GameConfig {
        GameConfig::new(k, s, s)
    }

    /// The classic speed-(1,1) game with k cops.
    pub fn classic(k: usize) -> GameConfig {
        GameConfig::new(k, 1, 1)
    }

    pub fn with_variant(mut self, variant: Variant) -> GameConfig {
        self.variant = variant;
        self
    }

    pub fn with_radius(mut self, r: usize) -> GameConfig {
        self.capture_radius = r;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.cop_speed < 1 || self.robber_speed < 1 {
            return Err(Error::invalid("speeds must be at least 1"));
        }
        if self.cop_count < 1 {
            return Err(Error::invalid("at least one cop required"));
        }
        Ok(())
    }

    /// Whether a robber turn may end at unblocked distance d from its start.
    pub fn end_distance_allowed(&self, d: usize) -> bool {
        let t = self.robber_speed;
        match self.variant {
            Variant::Standard => d <= t,
            Variant::Active | Variant::SemiActive => 1 <= d && d <= t,
            Variant::Restricted => d + 1 == t || d == t,
        }
    }

    pub fn allowed_end_distances(&self) -> Vec<usize> {
        (0..=self.robber_speed)
            .filter(|&d| self.end_distance_allowed(d))
            .collect()
    }

    /// At least one cop must end its turn on a different vertex.
    pub fn cops_must_move(&self) -> bool {
        self.variant == Variant::Active
    }

    /// The robber may not end a turn where he started.
    pub fn robber_must_move(&self) -> bool {
        !self.end_distance_allowed(0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Phase {
    CopTurn,
    RobberTurn,
}

/// Canonical game state: sorted cop multiset, robber vertex, side to move.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GameState {
    pub cops: Vec<usize>,
    pub robber: usize,
    pub phase: Phase,
}

impl GameState {
    pub fn new(mut cops: Vec<usize>, robber: usize, phase: Phase) -> GameState {
        cops.sort_unstable();
        GameState {
            cops,
            robber,
            phase,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.cops.windows(2).all(|w| w[0] <= w[1])
    }
}

/// True iff some cop is within the capture radius of the robber.
pub fn is_capture(g: &Graph, cfg: &GameConfig, cops: &[usize], robber: usize) -> bool {
    if cfg.capture_radius == 0 {
        return cops.contains(&robber);
    }
    let dist = g.bfs(robber);
    cops.iter()
        .any(|&c| dist[c] != crate::graph::UNREACHABLE && dist[c] as usize <= cfg.capture_radius)
}

/// Legal robber destinations: vertices reachable within `robber_speed` steps
/// along cop-free paths, ending at an allowed unblocked distance from `from`.
pub fn robber_moves(
    g: &Graph,
    cfg: &GameConfig,
    cops: &[usize],
    from: usize,
) -> Result<Vec<usize>> {
    if from >= g.order() {
        return Err(Error::invalid(format!("vertex {from} out of range")));
    }
    if cops.contains(&from) {
        return Err(Error::InvalidState(format!(
            "robber vertex {from} is cop-occupied"
        )));
    }
    let n = g.order();
    let t = cfg.robber_speed;
    let mut blocked = vec![false; n];
    for &c in cops {
        if c >= n {
            return Err(Error::invalid(format!("cop vertex {c} out of range")));
        }
        blocked[c] = true;
    }
    // Truncated BFS in the cop-deleted graph.
    let mut depth = vec![usize::MAX; n];
    depth[from] = 0;
    let mut frontier = vec![from];
    for d in 1..=t {
        let mut next = Vec::new();
        for &u in &frontier {
            for &v in g.neighbors(u) {
                let v = v as usize;
                if !blocked[v] && depth[v] == usize::MAX {
                    depth[v] = d;
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    let free_dist = g.bfs(from);
    Ok((0..n)
        .filter(|&w| depth[w] != usize::MAX && cfg.end_distance_allowed(free_dist[w] as usize))
        .collect())
}

/// All states reachable by one full cop turn: every cop independently moves
/// to any vertex within its speed ball. The active variant excludes the
/// assignment where every cop stays. Successors are canonical and deduped.
pub fn cop_turn_successors(
    g: &Graph,
    cfg: &GameConfig,
    state: &GameState,
) -> Result<Vec<GameState>> {
    if state.phase != Phase::CopTurn {
        return Err(Error::InvalidState("not a cop-turn state".into()));
    }
    let balls: Vec<Vec<usize>> = state
        .cops
        .iter()
        .map(|&c| g.ball(c, cfg.cop_speed))
        .collect::<Result<_>>()?;
    let k = state.cops.len();
    let mut out = Vec::new();
    let mut choice = vec![0usize; k];
    'outer: loop {
        let dests: Vec<usize> = (0..k).map(|i| balls[i][choice[i]]).collect();
        let all_stay = dests.iter().zip(&state.cops).all(|(d, c)| d == c);
        if !(cfg.cops_must_move() && all_stay) {
            out.push(GameState::new(dests, state.robber, Phase::RobberTurn));
        }
        for i in (0..k).rev() {
            choice[i] += 1;
            if choice[i] < balls[i].len() {
                continue 'outer;
            }
            choice[i] = 0;
            if i == 0 {
                break 'outer;
            }
        }
    }
    out.sort_unstable_by(|a, b| a.cops.cmp(&b.cops));
    out.dedup();
    Ok(out)
}

/// All states reachable by one robber turn.
pub fn robber_turn_successors(
    g: &Graph,
    cfg: &GameConfig,
    state: &GameState,
) -> Result<Vec<GameState>> {
    if state.phase != Phase::RobberTurn {
        return Err(Error::InvalidState("not a robber-turn state".into()));
    }
    Ok(robber_moves(g, cfg, &state.cops, state.robber)?
        .into_iter()
        .map(|w| GameState::new(state.cops.clone(), w, Phase::CopTurn))
        .collect())
}

/// Binomial table serving the multiset codecs; rows up to `max_n`, columns up
/// to `max_k`.
#[derive(Debug, Clone)]
pub(crate) struct Binomials {
    cols: usize,
    table: Vec<u64>,
}

impl Binomials {
    pub fn new(max_n: usize, max_k: usize) -> Binomials {
        let cols = max_k + 1;
        let mut table = vec![0u64; (max_n + 1) * cols];
        for n in 0..=max_n {
            table[n * cols] = 1;
            for k in 1..=max_k.min(n) {
                table[n * cols + k] = table[(n - 1) * cols + k - 1].saturating_add(if k < n {
                    table[(n - 1) * cols + k]
                } else {
                    0
                });
            }
        }
        Binomials { cols, table }
    }

    pub fn get(&self, n: usize, k: usize) -> u64 {
        if k >= self.cols || n * self.cols + k >= self.table.len() {
            return 0;
        }
        self.table[n * self.cols + k]
    }

    /// Number of size-k multisets over an n-element alphabet.
    pub fn multiset_count(&self, n: usize, k: usize) -> u64 {
        if k == 0 {
            1
        } else {
            self.get(n + k - 1, k)
        }
    }

    /// Colex rank of a sorted multiset.
    pub fn multiset_rank(&self, sorted: &[usize]) -> u64 {
        sorted
            .iter()
            .enumerate()
            .map(|(t, &c)| self.get(c + t, t + 1))
            .sum()
    }

    /// Inverse of [`Self::multiset_rank`]; writes the sorted multiset into `out`.
    pub fn multiset_unrank(&self, k: usize, mut rank: u64, out: &mut Vec<usize>) {
        out.clear();
        out.resize(k, 0);
        for t in (0..k).rev() {
            // Largest b with C(b, t+1) <= rank.
            let mut b = t; // C(t, t+1) = 0
            while self.get(b + 1, t + 1) <= rank {
                b += 1;
            }
            rank -= self.get(b, t + 1);
            out[t] = b - t;
        }
    }
}

/// Dense bijective encoding of canonical states:
/// `(multiset rank * n + robber) * 2 + phase`.
#[derive(Debug, Clone)]
pub struct StateIndexer {
    n: usize,
    k: usize,
    binom: Binomials,
}

impl StateIndexer {
    pub fn new(n: usize, k: usize) -> Result<StateIndexer> {
        if n == 0 || k == 0 {
            return Err(Error::invalid("indexer requires n >= 1 and k >= 1"));
        }
        Ok(StateIndexer {
            n,
            k,
            binom: Binomials::new(n + k, k + 1),
        })
    }

    pub fn multiset_count(&self) -> u64 {
        self.binom.multiset_count(self.n, self.k)
    }

    /// Total states: C(n+k-1, k) * n * 2.
    pub fn state_count(&self) -> u64 {
        self.multiset_count() * self.n as u64 * 2
    }

    pub fn encode(&self, state: &GameState) -> Result<u64> {
        if state.cops.len() != self.k {
            return Err(Error::InvalidState(format!(
                "expected {} cops, got {}",
                self.k,
                state.cops.len()
            )));
        }
        if !state.is_canonical() {
            return Err(Error::InvalidState("cop multiset is not sorted".into()));
        }
        if state.robber >= self.n || state.cops.iter().any(|&c| c >= self.n) {
            return Err(Error::InvalidState("vertex out of range".into()));
        }
        let phase = match state.phase {
            Phase::CopTurn => 0,
            Phase::RobberTurn => 1,
        };
        Ok(
            (self.binom.multiset_rank(&state.cops) * self.n as u64 + state.robber as u64) * 2
                + phase,
        )
    }

    pub fn decode(&self, index: u64) -> Result<GameState> {
        if index >= self.state_count() {
            return Err(Error::invalid(format!("state index {index} out of range")));
        }
        let phase = if index % 2 == 0 {
            Phase::CopTurn
        } else {
            Phase::RobberTurn
        };
        let rest = index / 2;
        let robber = (rest % self.n as u64) as usize;
        let rank = rest / self.n as u64;
        let mut cops = Vec::with_capacity(self.k);
        self.binom.multiset_unrank(self.k, rank, &mut cops);
        Ok(GameState {
            cops,
            robber,
            phase,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path};

    #[test]
    fn blocking_rule_on_path() {
        let g = path(5).unwrap();
        let cfg = GameConfig::new(1, 2, 2);
        let moves = robber_moves(&g, &cfg, &[1], 2).unwrap();
        assert_eq!(moves, vec![2, 3, 4]);
    }

    #[test]
    fn no_cops_means_ball() {
        let g = path(5).unwrap();
        let cfg = GameConfig::new(1, 2, 2);
        assert_eq!(
            robber_moves(&g, &cfg, &[], 2).unwrap(),
            g.ball(2, 2).unwrap()
        );
    }

    #[test]
    fn semi_active_excludes_staying() {
        let g = path(2).unwrap();
        let cfg = GameConfig::classic(1).with_variant(Variant::SemiActive);
        assert_eq!(robber_moves(&g, &cfg, &[], 0).unwrap(), vec![1]);
    }

    #[test]
    fn restricted_end_distances() {
        let cfg = GameConfig::new(1, 3, 3).with_variant(Variant::Restricted);
        assert_eq!(cfg.allowed_end_distances(), vec![2, 3]);
        let g = path(6).unwrap();
        assert_eq!(robber_moves(&g, &cfg, &[], 0).unwrap(), vec![2, 3]);
    }

    #[test]
    fn cop_occupied_start_is_invalid() {
        let g = path(3).unwrap();
        let cfg = GameConfig::classic(1);
        assert!(matches!(
            robber_moves(&g, &cfg, &[1], 1),
            Err(Error::InvalidState(_))
        ));
    }

    #[test]
    fn successor_counts() {
        let k1 = complete(1).unwrap();
        let cfg = GameConfig::classic(1);
        let state = GameState::new(vec![0], 0, Phase::CopTurn);
        assert_eq!(cop_turn_successors(&k1, &cfg, &state).unwrap().len(), 1);

        let p5 = path(5).unwrap();
        let cfg = GameConfig::speed(1, 2);
        let state = GameState::new(vec![2], 4, Phase::CopTurn);
        assert_eq!(cop_turn_successors(&p5, &cfg, &state).unwrap().len(), 5);
    }

    #[test]
    fn active_excludes_all_stay_only() {
        let g = path(4).unwrap();
        let cfg = GameConfig::classic(2).with_variant(Variant::Active);
        let state = GameState::new(vec![0, 3], 2, Phase::CopTurn);
        let active = cop_turn_successors(&g, &cfg, &state).unwrap();
        let standard = cop_turn_successors(&g, &GameConfig::classic(2), &state).unwrap();
        assert_eq!(active.len(), standard.len() - 1);
        assert!(!active.iter().any(|s| s.cops == vec![0, 3]));
    }

    #[test]
    fn capture_radius() {
        let g = path(3).unwrap();
        assert!(is_capture(&g, &GameConfig::classic(1), &[1], 1));
        assert!(!is_capture(&g, &GameConfig::classic(1), &[1], 2));
        assert!(is_capture(
            &g,
            &GameConfig::classic(1).with_radius(1),
            &[1],
            2
        ));
    }

    #[test]
    fn indexer_counts() {
        assert_eq!(StateIndexer::new(49, 2).unwrap().state_count(), 120_050);
        assert_eq!(StateIndexer::new(8, 1).unwrap().state_count(), 128);
    }

    #[test]
    fn encode_decode_round_trip() {
        let idx = StateIndexer::new(7, 3).unwrap();
        for index in 0..idx.state_count() {
            let state = idx.decode(index).unwrap();
            assert_eq!(idx.encode(&state).unwrap(), index);
        }
        let bad = GameState {
            cops: vec![2, 1, 0],
            robber: 0,
            phase: Phase::CopTurn,
        };
        assert!(idx.encode(&bad).is_err());
    }

    #[test]
    fn state_count_matches_enumeration() {
        // Cross-check the combinatorial count by exhaustive enumeration.
        for n in 1..=6 {
            for k in 1..=3 {
                let idx = StateIndexer::new(n, k).unwrap();
                let mut count = 0u64;
                let mut cops = vec![0usize; k];
                loop {
                    count += 2 * n as u64;
                    let mut i = k;
                    while i > 0 && cops[i - 1] == n - 1 {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    cops[i - 1] += 1;
                    let v = cops[i - 1];
                    for j in i..k {
                        cops[j] = v;
                    }
                }
                assert_eq!(idx.state_count(), count, "n={n} k={k}");
            }
        }
    }
}
