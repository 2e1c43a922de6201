//! Graph representation and metrics.
//!
//! Graphs are finite, undirected and simple. The reflexive convention used by
//! the game (every vertex sees itself) is supplied by the closed-neighborhood
//! accessors rather than stored loops.

mod build;
mod g6;

pub use build::{
    capture_family, cartesian_product, cartesian_products, complete, cycle,
    cycle_strong_power_product, hypercube, incidence_graph_pg2, path, petersen, power,
    sequence_realizer, star, strong_product, strong_products, subdivide, Realizer,
};
pub use g6::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Distance value for vertex pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// Role tag for incidence-graph vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum IncidenceRole {
    Point(usize),
    Line(usize),
}

/// Kind tag for subdivision-graph vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SubdivisionVertex {
    /// Vertex present in the original graph, keeping its index.
    Branch,
    /// Introduced by subdividing edge `(u, v)` (u < v); `pos` counts 1.. from `u`.
    Between { u: usize, v: usize, pos: usize },
}

/// Optional per-vertex annotations set by the constructions that need them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum VertexTags {
    /// Coordinate tuples for product graphs; `factor_sizes[i]` is the order of factor i.
    Coords {
        factor_sizes: Vec<usize>,
        coords: Vec<Vec<usize>>,
    },
    /// Point/line split of an incidence graph.
    Incidence(Vec<IncidenceRole>),
    /// Human-readable vertex names.
    Names(Vec<String>),
    /// Branch/subdivision structure of a subdivided graph.
    Subdivision(Vec<SubdivisionVertex>),
}

impl VertexTags {
    fn len(&self) -> usize {
        match self {
            VertexTags::Coords { coords, .. } => coords.len(),
            VertexTags::Incidence(v) => v.len(),
            VertexTags::Names(v) => v.len(),
            VertexTags::Subdivision(v) => v.len(),
        }
    }
}

/// Immutable simple graph with adjacency bitset rows and sorted neighbor lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    /// Row-major adjacency bitsets, `words` u64 words per vertex. No self bits.
    rows: Vec<u64>,
    /// Sorted open neighbor lists.
    neighbors: Vec<Vec<u32>>,
    tags: Option<VertexTags>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let words = n.div_ceil(64).max(1);
        let mut rows = vec![0u64; n * words];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!(
                    "edge ({u}, {v}) out of range for order {n}"
                )));
            }
            if u == v {
                return Err(Error::invalid(format!("self-loop at {u}")));
            }
            rows[u * words + v / 64] |= 1 << (v % 64);
            rows[v * words + u / 64] |= 1 << (u % 64);
        }
        let neighbors = (0..n)
            .map(|u| {
                let row = &rows[u * words..(u + 1) * words];
                (0..n as u32)
                    .filter(|&v| row[v as usize / 64] >> (v % 64) & 1 == 1)
                    .collect()
            })
            .collect();
        Ok(Graph {
            n,
            words,
            rows,
            neighbors,
            tags: None,
        })
    }

    pub fn with_tags(mut self, tags: VertexTags) -> Result<Graph> {
        if tags.len() != self.n {
            return Err(Error::invalid(format!(
                "annotation covers {} vertices, graph has {}",
                tags.len(),
                self.n
            )));
        }
        self.tags = Some(tags);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn tags(&self) -> Option<&VertexTags> {
        self.tags.as_ref()
    }

    /// Coordinate annotation of vertex `v`, when present.
    pub fn coords_of(&self, v: usize) -> Option<&[usize]> {
        match &self.tags {
            Some(VertexTags::Coords { coords, .. }) => Some(&coords[v]),
            _ => None,
        }
    }

    pub fn factor_sizes(&self) -> Option<&[usize]> {
        match &self.tags {
            Some(VertexTags::Coords { factor_sizes, .. }) => Some(factor_sizes),
            _ => None,
        }
    }

    /// Index of the vertex named `name` under a `Names` annotation.
    pub fn vertex_named(&self, name: &str) -> Option<usize> {
        match &self.tags {
            Some(VertexTags::Names(names)) => names.iter().position(|s| s == name),
            _ => None,
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Open neighborhood as a sorted slice.
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[v]
    }

    /// Closed neighborhood N[v] as a sorted vector (reflexive convention).
    pub fn closed_neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self.neighbors[v].iter().map(|&x| x as usize).collect();
        let pos = out.partition_point(|&x| x < v);
        out.insert(pos, v);
        out
    }

    /// N[v] ⊆ N[u] on closed neighborhoods, via bitset rows.
    pub fn closed_row_subset(&self, v: usize, u: usize) -> bool {
        let rv = &self.rows[v * self.words..(v + 1) * self.words];
        let ru = &self.rows[u * self.words..(u + 1) * self.words];
        for w in 0..self.words {
            let mut a = rv[w];
            let mut b = ru[w];
            if w == v / 64 {
                a |= 1 << (v % 64);
            }
            if w == u / 64 {
                b |= 1 << (u % 64);
            }
            if a & !b != 0 {
                return false;
            }
        }
        true
    }

    /// Closed rows equal, i.e. u and v are twins under the reflexive convention.
    pub fn closed_row_eq(&self, v: usize, u: usize) -> bool {
        self.closed_row_subset(v, u) && self.closed_row_subset(u, v)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.n {
            for &v in &self.neighbors[u] {
                if (v as usize) > u {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::invalid(format!(
                "vertex {v} out of range for order {}",
                self.n
            )));
        }
        Ok(())
    }

    /// BFS distances from `src`; unreachable vertices get [`UNREACHABLE`].
    pub fn bfs(&self, src: usize) -> Vec<u32> {
        let mut dist = vec![UNREACHABLE; self.n];
        dist[src] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let du = dist[u];
            for &v in &self.neighbors[u] {
                let v = v as usize;
                if dist[v] == UNREACHABLE {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn dist(&self, u: usize, v: usize) -> Result<Option<usize>> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let d = self.bfs(u)[v];
        Ok(if d == UNREACHABLE {
            None
        } else {
            Some(d as usize)
        })
    }

    /// Closed ball N_r[v]: all vertices within distance r, including v.
    pub fn ball(&self, v: usize, r: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let dist = self.bfs(v);
        Ok((0..self.n)
            .filter(|&w| dist[w] != UNREACHABLE && dist[w] as usize <= r)
            .collect())
    }

    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let dist = self.bfs(v);
        let mut ecc = 0;
        for &d in &dist {
            if d == UNREACHABLE {
                return None;
            }
            ecc = ecc.max(d);
        }
        Some(ecc as usize)
    }

    /// Maximum eccentricity; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .try_fold(0, |acc, e| e.map(|e| acc.max(e)))
    }

    /// Minimum eccentricity; `None` when disconnected.
    pub fn radius(&self) -> Option<usize> {
        (0..self.n)
            .map(|v| self.eccentricity(v))
            .try_fold(usize::MAX, |acc, e| e.map(|e| acc.min(e)))
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.bfs(0).iter().all(|&d| d != UNREACHABLE)
    }

    /// Flat all-pairs distance table (`u16`, `u16::MAX` for unreachable pairs).
    pub fn distance_table(&self) -> Vec<u16> {
        let mut table = vec![u16::MAX; self.n * self.n];
        for v in 0..self.n {
            let dist = self.bfs(v);
            for w in 0..self.n {
                if dist[w] != UNREACHABLE {
                    table[v * self.n + w] = dist[w] as u16;
                }
            }
        }
        table
    }

    /// Induced subgraph on `keep` (order preserved); returns the graph and the
    /// old index of each new vertex. Annotations are dropped.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut old_of = Vec::with_capacity(keep.len());
        let mut new_of = vec![usize::MAX; self.n];
        for &v in keep {
            self.check_vertex(v)?;
            if new_of[v] != usize::MAX {
                return Err(Error::invalid(format!("duplicate vertex {v} in subset")));
            }
            new_of[v] = old_of.len();
            old_of.push(v);
        }
        let mut edges = Vec::new();
        for (i, &u) in old_of.iter().enumerate() {
            for &v in &self.neighbors[u] {
                let v = v as usize;
                if new_of[v] != usize::MAX && new_of[v] > i {
                    edges.push((i, new_of[v]));
                }
            }
        }
        Ok((Graph::from_edges(old_of.len(), &edges)?, old_of))
    }

    /// Hash of the labeled graph: order plus digest of the sorted edge list.
    pub fn hash_hex(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(self.n.to_le_bytes());
        for (u, v) in self.edges() {
            hasher.update(u.to_le_bytes());
            hasher.update(v.to_le_bytes());
        }
        let digest = hasher.finalize();
        let mut out = String::with_capacity(16);
        for b in &digest[..8] {
            out.push_str(&format!("{b:02x}"));
        }
        out
    }

    /// Girth (length of a shortest cycle), or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for src in 0..self.n {
            let mut dist = vec![UNREACHABLE; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[src] = 0;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                for &v in &self.neighbors[u] {
                    let v = v as usize;
                    if dist[v] == UNREACHABLE {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let cycle = (dist[u] + dist[v] + 1) as usize;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
        assert!(Graph::from_edges(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn metrics_on_cycle() {
        let g = cycle(6).unwrap();
        assert_eq!(g.dist(0, 3).unwrap(), Some(3));
        assert_eq!(g.diameter(), Some(3));
        assert_eq!(g.radius(), Some(3));
        assert_eq!(g.girth(), Some(6));
    }

    #[test]
    fn ball_includes_center() {
        let g = path(5).unwrap();
        assert_eq!(g.ball(2, 1).unwrap(), vec![1, 2, 3]);
        assert_eq!(g.ball(0, 0).unwrap(), vec![0]);
    }

    #[test]
    fn disconnected_pairs_report_none() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.dist(0, 2).unwrap(), None);
        assert!(!g.is_connected());
        assert_eq!(g.diameter(), None);
    }

    #[test]
    fn closed_neighborhood_and_subset() {
        let g = path(3).unwrap();
        assert_eq!(g.closed_neighbors(0), vec![0, 1]);
        assert_eq!(g.closed_neighbors(1), vec![0, 1, 2]);
        assert!(g.closed_row_subset(0, 1));
        assert!(!g.closed_row_subset(1, 0));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let g = cycle(5).unwrap();
        let (h, old) = g.induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(h.order(), 3);
        assert_eq!(h.size(), 2);
        assert_eq!(old, vec![1, 2, 3]);
    }
}
