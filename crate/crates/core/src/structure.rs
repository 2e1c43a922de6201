//! Static structural analysis: corners, twin classes, quotients, cop-win
//! orderings and partitions, the partition-based capture time, and
//! verification of homomorphisms and retractions.

use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

fn full_mask(n: usize) -> Vec<u64> {
    let mut m = vec![u64::MAX; words_for(n)];
    let rem = n % 64;
    if rem > 0 {
        *m.last_mut().unwrap() = (1u64 << rem) - 1;
    }
    if n == 0 {
        m[0] = 0;
    }
    m
}

/// Closed row of v restricted to `alive`.
fn masked_closed_row(g: &Graph, v: usize, alive: &[u64]) -> Vec<u64> {
    let n = g.order();
    let words = words_for(n);
    let mut out = vec![0u64; words];
    for &w in g.neighbors(v) {
        out[w as usize / 64] |= 1 << (w % 64);
    }
    out[v / 64] |= 1 << (v % 64);
    for i in 0..words {
        out[i] &= alive[i];
    }
    out
}

fn subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x & !y == 0)
}

/// True iff some other vertex u has N[u] ⊇ N[v] (closed neighborhoods).
pub fn is_corner(g: &Graph, v: usize) -> Result<bool> {
    if v >= g.order() {
        return Err(Error::invalid(format!("vertex {v} out of range")));
    }
    Ok((0..g.order()).any(|u| u != v && g.closed_row_subset(v, u)))
}

pub fn corners(g: &Graph) -> Vec<usize> {
    (0..g.order())
        .filter(|&v| is_corner(g, v).unwrap())
        .collect()
}

/// Equivalence classes of the closed-twin relation (N[u] = N[v]), each sorted,
/// listed by smallest member.
pub fn twin_classes(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if class_of[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[v] = id;
        let mut members = vec![v];
        for u in v + 1..n {
            if class_of[u] == usize::MAX && g.closed_row_eq(v, u) {
                class_of[u] = id;
                members.push(u);
            }
        }
        classes.push(members);
    }
    classes
}

/// Quotient by the closed-twin relation: one vertex per class, classes
/// adjacent iff distinct and their representatives are adjacent. Returns the
/// quotient and the class index of each original vertex.
pub fn quotient(g: &Graph) -> (Graph, Vec<usize>) {
    let classes = twin_classes(g);
    let mut class_of = vec![0usize; g.order()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    let mut edges = Vec::new();
    for (i, ci) in classes.iter().enumerate() {
        for (j, cj) in classes.iter().enumerate().skip(i + 1) {
            if g.has_edge(ci[0], cj[0]) {
                edges.push((i, j));
            }
        }
    }
    let q = Graph::from_edges(classes.len(), &edges).expect("quotient edges are valid");
    (q, class_of)
}

/// A cop-win ordering: each vertex is a corner of the subgraph induced by it
/// and its successors. Lowest available index is removed first. `None` iff no
/// corner exists at some stage, i.e. iff the graph is not cop-win.
pub fn copwin_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let mut alive_mask = full_mask(n);
    let mut alive: Vec<usize> = (0..n).collect();
    let mut order = Vec::with_capacity(n);
    while alive.len() > 1 {
        let rows: Vec<Vec<u64>> = alive
            .iter()
            .map(|&v| masked_closed_row(g, v, &alive_mask))
            .collect();
        let corner = alive.iter().enumerate().position(|(i, _)| {
            rows.iter()
                .enumerate()
                .any(|(j, ru)| j != i && subset(&rows[i], ru))
        })?;
        let v = alive.remove(corner);
        alive_mask[v / 64] &= !(1 << (v % 64));
        order.push(v);
    }
    order.push(alive[0]);
    Some(order)
}

/// Ordered layers of the cop-win partition plus the adjacency flag that
/// selects between the k-1 and k capture-time cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopWinPartition {
    pub layers: Vec<Vec<usize>>,
    pub last_layers_fully_adjacent: bool,
}

fn is_complete(g: &Graph) -> bool {
    g.size() == g.order() * g.order().saturating_sub(1) / 2
}

/// Cop-win partition by iterated quotient-corner removal. Each layer is the
/// set of vertices whose twin class is a corner of the current quotient; a
/// one-class quotient counts as its own corner and ends the process. `None`
/// iff some stage has no corners. Complete inputs are rejected; callers use
/// the capture-time wrapper for those.
pub fn copwin_partition(g: &Graph) -> Result<Option<CopWinPartition>> {
    if g.order() == 0 {
        return Err(Error::invalid("empty graph"));
    }
    if is_complete(g) {
        return Err(Error::Domain(
            "cop-win partition is undefined for complete graphs; use capture_time_via_partition"
                .into(),
        ));
    }
    let mut alive: Vec<usize> = (0..g.order()).collect();
    let mut layers: Vec<Vec<usize>> = Vec::new();
    while !alive.is_empty() {
        let (sub, old_of) = g.induced_subgraph(&alive)?;
        let (q, class_of) = quotient(&sub);
        let corner_classes: Vec<usize> = if q.order() == 1 { vec![0] } else { corners(&q) };
        if corner_classes.is_empty() {
            return Ok(None);
        }
        let mut layer: Vec<usize> = (0..sub.order())
            .filter(|&v| corner_classes.contains(&class_of[v]))
            .map(|v| old_of[v])
            .collect();
        layer.sort_unstable();
        alive.retain(|v| !layer.contains(v));
        layers.push(layer);
    }
    let k = layers.len();
    let last_layers_fully_adjacent = if k >= 2 {
        layers[k - 1]
            .iter()
            .all(|&u| layers[k - 2].iter().all(|&v| g.has_edge(u, v)))
    } else {
        false
    };
    Ok(Some(CopWinPartition {
        layers,
        last_layers_fully_adjacent,
    }))
}

/// Classic capture time from the cop-win partition: k-1 when the last two
/// layers are fully adjacent (or the graph is a single vertex), otherwise k.
/// Complete graphs bypass the partition: 1 for two or more vertices, 0 for a
/// single vertex.
pub fn capture_time_via_partition(g: &Graph) -> Result<usize> {
    if g.order() == 0 {
        return Err(Error::invalid("empty graph"));
    }
    if g.order() == 1 {
        return Ok(0);
    }
    if is_complete(g) {
        return Ok(1);
    }
    let partition =
        copwin_partition(g)?.ok_or_else(|| Error::Domain("graph is not cop-win".into()))?;
    let k = partition.layers.len();
    if k == 1 {
        return Ok(1);
    }
    Ok(if partition.last_layers_fully_adjacent {
        k - 1
    } else {
        k
    })
}

/// Serialized form of a partition and its capture time.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PartitionReport {
    pub layers: Vec<Vec<usize>>,
    pub capture_time: usize,
}

pub fn partition_report(g: &Graph) -> Result<PartitionReport> {
    let capture_time = capture_time_via_partition(g)?;
    let layers = if is_complete(g) {
        vec![(0..g.order()).collect()]
    } else {
        copwin_partition(g)?
            .expect("capture time above implies a partition")
            .layers
    };
    Ok(PartitionReport {
        layers,
        capture_time,
    })
}

/// Total vertex map, stored as one image per source vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexMap {
    pub image: Vec<usize>,
}

impl VertexMap {
    pub fn identity(n: usize) -> VertexMap {
        VertexMap {
            image: (0..n).collect(),
        }
    }

    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }
}

/// Homomorphism check under the reflexive convention: every edge maps to an
/// edge or collapses to a single vertex.
pub fn is_homomorphism(g: &Graph, h: &Graph, map: &VertexMap) -> Result<bool> {
    if map.image.len() != g.order() {
        return Err(Error::invalid("map is not total on the source graph"));
    }
    if let Some(&bad) = map.image.iter().find(|&&x| x >= h.order()) {
        return Err(Error::invalid(format!(
            "image vertex {bad} outside target graph"
        )));
    }
    Ok(g.edges().iter().all(|&(u, v)| {
        let (a, b) = (map.apply(u), map.apply(v));
        a == b || h.has_edge(a, b)
    }))
}

/// Retraction check for a self-map of G: the map must fix its image pointwise
/// and be a homomorphism onto the induced subgraph on the fixed vertices.
pub fn is_retraction(g: &Graph, map: &VertexMap) -> Result<bool> {
    if map.image.len() != g.order() {
        return Err(Error::invalid("map is not total on the source graph"));
    }
    if let Some(&bad) = map.image.iter().find(|&&x| x >= g.order()) {
        return Err(Error::invalid(format!("image vertex {bad} out of range")));
    }
    // Idempotence: every image vertex is fixed.
    if map.image.iter().any(|&x| map.image[x] != x) {
        return Ok(false);
    }
    is_homomorphism(g, g, map)
}

/// Two-graph form: H must be a subgraph of G under the identity embedding
/// (vertex i of H is vertex i of G); the map must fix V(H) pointwise and be a
/// homomorphism from G to H.
pub fn is_retraction_to(g: &Graph, h: &Graph, map: &VertexMap) -> Result<bool> {
    if h.order() > g.order() {
        return Err(Error::Structural(
            "target has more vertices than source".into(),
        ));
    }
    if h.edges().iter().any(|&(u, v)| !g.has_edge(u, v)) {
        return Err(Error::Structural(
            "target is not a subgraph of the source under the identity embedding".into(),
        ));
    }
    if map.image.len() != g.order() {
        return Err(Error::invalid("map is not total on the source graph"));
    }
    if (0..h.order()).any(|v| map.image[v] != v) {
        return Ok(false);
    }
    is_homomorphism(g, h, map)
}

/// Fixed-point set of a verified retraction, as an induced subgraph plus the
/// original index of each of its vertices.
pub fn retract_subgraph(g: &Graph, map: &VertexMap) -> Result<(Graph, Vec<usize>)> {
    if !is_retraction(g, map)? {
        return Err(Error::Domain("map is not a retraction".into()));
    }
    let fixed: Vec<usize> = (0..g.order()).filter(|&v| map.image[v] == v).collect();
    g.induced_subgraph(&fixed)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapReport {
    pub image: Vec<usize>,
    pub is_retraction: bool,
}

/// Serialized form of a map plus its retraction verdict on G.
pub fn map_report(g: &Graph, map: &VertexMap) -> Result<MapReport> {
    Ok(MapReport {
        image: map.image.clone(),
        is_retraction: is_retraction(g, map)?,
    })
}

/// The retraction of the subdivided complete graph on n vertices onto the
/// copy missing branch vertex n-1: the deleted branch vertex and the
/// subdivision vertices toward it fold onto branch vertex n-2 and its
/// subdivision paths.
pub fn complete_subdivision_retraction(n: usize, s: usize) -> Result<(Graph, VertexMap)> {
    if n < 4 {
        return Err(Error::invalid(
            "complete_subdivision_retraction requires n >= 4",
        ));
    }
    if s < 1 {
        return Err(Error::invalid(
            "complete_subdivision_retraction requires s >= 1",
        ));
    }
    let g = crate::graph::subdivide(&crate::graph::complete(n)?, s)?;
    let dropped = n - 1;
    let kept = n - 2;
    let mut image: Vec<usize> = (0..g.order()).collect();
    image[dropped] = kept;

    use crate::graph::{SubdivisionVertex, VertexTags};
    let Some(VertexTags::Subdivision(tags)) = g.tags() else {
        unreachable!("subdivide always annotates");
    };
    // Position of the subdivision vertex of edge (u, v) at offset `pos`.
    let locate = |eu: usize, ev: usize, pos: usize| -> usize {
        tags.iter()
            .position(|t| {
                matches!(t, SubdivisionVertex::Between { u, v, pos: p }
                if *u == eu && *v == ev && *p == pos)
            })
            .expect("subdivision vertex exists")
    };
    for (x, tag) in tags.iter().enumerate() {
        if let SubdivisionVertex::Between { u, v, pos } = tag {
            debug_assert!(u < v);
            if *v != dropped {
                continue;
            }
            if *u == kept {
                image[x] = kept;
            } else {
                image[x] = locate(*u, kept, *pos);
            }
        }
    }
    Ok((g, VertexMap { image }))
}

/// Coordinatewise product of two maps, on the product graph indexed
/// row-major as u * n_h + v.
pub fn product_map(map_g: &VertexMap, map_h: &VertexMap) -> VertexMap {
    let n_h = map_h.image.len();
    let mut image = Vec::with_capacity(map_g.image.len() * n_h);
    for &gu in &map_g.image {
        for &hv in &map_h.image {
            image.push(gu * n_h + hv);
        }
    }
    VertexMap { image }
}

/// The retraction of a sequence realizer onto its j-th block (1-based):
/// identity on the block, everything else to the block's all-zero vertex.
pub fn realizer_retraction(seq: &[usize], j: usize) -> Result<(Graph, VertexMap)> {
    let realizer = crate::graph::sequence_realizer(seq)?;
    if j == 0 || j > realizer.blocks.len() {
        return Err(Error::invalid(format!(
            "descent index {j} out of range 1..={}",
            realizer.blocks.len()
        )));
    }
    let (start, end) = realizer.blocks[j - 1];
    let image = (0..realizer.graph.order())
        .map(|v| if (start..end).contains(&v) { v } else { start })
        .collect();
    Ok((realizer.graph, VertexMap { image }))
}
