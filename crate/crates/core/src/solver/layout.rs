//! Internal state layout for the retrograde engine.
//!
//! A cop turn is decomposed into k single-cop sub-moves: at phase i, the
//! multiset M of already-moved cops has size i and the multiset U of cops
//! still to move has size k-i; the smallest element of U moves next. Phase k
//! is the robber's turn. The active variant adds a moved-yet flag to the
//! interior phases. Multisets are ranked colexicographically.

use crate::game::Binomials;

pub(crate) struct Layout {
    pub n: usize,
    pub binom: Binomials,
    /// Multisets of each size 0..=k over n, flattened in colex order.
    decode_tables: Vec<Vec<u16>>,
    pub m_counts: Vec<u64>,
    pub u_counts: Vec<u64>,
    pub flag_dims: Vec<u64>,
    pub phase_offset: Vec<u64>,
    pub total: u64,
}

/// Advances a sorted multiset over 0..n to its colex successor.
pub(crate) fn next_multiset(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for t in 0..k {
        if t + 1 == k || c[t] < c[t + 1] {
            if c[t] + 1 == n && t + 1 == k {
                return false;
            }
            c[t] += 1;
            for x in c.iter_mut().take(t) {
                *x = 0;
            }
            return true;
        }
    }
    false
}

impl Layout {
    pub fn new(n: usize, k: usize, flagged: bool) -> Layout {
        let binom = Binomials::new(n + k + 1, k + 1);
        let mut decode_tables = Vec::with_capacity(k + 1);
        for size in 0..=k {
            let count = binom.multiset_count(n, size) as usize;
            let mut table = Vec::with_capacity(count * size);
            if size == 0 {
                decode_tables.push(table);
                continue;
            }
            let mut cur = vec![0usize; size];
            loop {
                table.extend(cur.iter().map(|&x| x as u16));
                if !next_multiset(&mut cur, n) {
                    break;
                }
            }
            debug_assert_eq!(table.len(), count * size);
            decode_tables.push(table);
        }

        let mut m_counts = Vec::with_capacity(k + 1);
        let mut u_counts = Vec::with_capacity(k + 1);
        let mut flag_dims = Vec::with_capacity(k + 1);
        for phase in 0..=k {
            m_counts.push(binom.multiset_count(n, phase));
            u_counts.push(binom.multiset_count(n, k - phase));
            flag_dims.push(if flagged && phase >= 1 && phase < k {
                2
            } else {
                1
            });
        }
        let mut phase_offset = Vec::with_capacity(k + 2);
        let mut total = 0u64;
        for phase in 0..=k {
            phase_offset.push(total);
            total += m_counts[phase] * u_counts[phase] * flag_dims[phase] * n as u64;
        }
        phase_offset.push(total);

        Layout {
            n,
            binom,
            decode_tables,
            m_counts,
            u_counts,
            flag_dims,
            phase_offset,
            total,
        }
    }

    /// Sorted multiset with the given size and colex rank.
    pub fn multiset(&self, size: usize, rank: u64) -> &[u16] {
        let start = rank as usize * size;
        &self.decode_tables[size][start..start + size]
    }

    pub fn rank(&self, sorted: &[usize]) -> u64 {
        self.binom.multiset_rank(sorted)
    }

    #[inline]
    pub fn index(&self, phase: usize, rank_m: u64, rank_u: u64, flag: u64, v: usize) -> u64 {
        self.phase_offset[phase]
            + (((rank_m * self.u_counts[phase] + rank_u) * self.flag_dims[phase] + flag)
                * self.n as u64
                + v as u64)
    }

    pub fn phase_of(&self, idx: u64) -> usize {
        // k is tiny; a linear scan beats binary search here.
        let mut phase = 0;
        while self.phase_offset[phase + 1] <= idx {
            phase += 1;
        }
        phase
    }

    /// Splits an index into (phase, rank_m, rank_u, flag, robber vertex).
    pub fn decode(&self, idx: u64) -> (usize, u64, u64, u64, usize) {
        let phase = self.phase_of(idx);
        let mut rest = idx - self.phase_offset[phase];
        let v = (rest % self.n as u64) as usize;
        rest /= self.n as u64;
        let flag = rest % self.flag_dims[phase];
        rest /= self.flag_dims[phase];
        let rank_u = rest % self.u_counts[phase];
        let rank_m = rest / self.u_counts[phase];
        (phase, rank_m, rank_u, flag, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odometer_matches_rank_order() {
        let binom = Binomials::new(16, 4);
        for (n, k) in [(4usize, 2usize), (5, 3), (7, 1)] {
            let mut cur = vec![0usize; k];
            let mut expected = 0u64;
            loop {
                assert_eq!(binom.multiset_rank(&cur), expected);
                expected += 1;
                if !next_multiset(&mut cur, n) {
                    break;
                }
            }
            assert_eq!(expected, binom.multiset_count(n, k));
        }
    }

    #[test]
    fn index_round_trips() {
        for flagged in [false, true] {
            let layout = Layout::new(5, 3, flagged);
            let mut seen = 0u64;
            for phase in 0..=3 {
                for rank_m in 0..layout.m_counts[phase] {
                    for rank_u in 0..layout.u_counts[phase] {
                        for flag in 0..layout.flag_dims[phase] {
                            for v in 0..5 {
                                let idx = layout.index(phase, rank_m, rank_u, flag, v);
                                assert_eq!(idx, seen);
                                assert_eq!(layout.decode(idx), (phase, rank_m, rank_u, flag, v));
                                seen += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(seen, layout.total);
        }
    }

    #[test]
    fn decode_tables_are_sorted_multisets() {
        let layout = Layout::new(6, 2, false);
        for rank in 0..layout.m_counts[2] {
            let m = layout.multiset(2, rank);
            assert!(m[0] <= m[1]);
            assert_eq!(layout.rank(&[m[0] as usize, m[1] as usize]), rank);
        }
    }
}
