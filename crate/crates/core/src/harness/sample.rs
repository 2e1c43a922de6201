//! Seeded random graph sources for the property-style claims.

use crate::graph::Graph;
use rand::Rng;

/// Connected Erdos-Renyi sample by rejection; edge probability drifts upward
/// if connectivity keeps failing.
pub fn random_connected(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 1);
    let mut p = 0.5 * (n as f64).ln().max(1.0) / n as f64 + 0.15;
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p.min(1.0)) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, &edges).expect("valid random edges");
        if g.is_connected() {
            return g;
        }
        p = (p + 0.05).min(1.0);
    }
}

/// Uniform random labeled tree from a Prufer sequence.
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    assert!(n >= 1);
    if n == 1 {
        return Graph::from_edges(1, &[]).unwrap();
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).unwrap();
    }
    let prufer: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &prufer {
        degree[v] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut leaf_heap: std::collections::BinaryHeap<std::cmp::Reverse<usize>> = (0..n)
        .filter(|&v| degree[v] == 1)
        .map(std::cmp::Reverse)
        .collect();
    for &v in &prufer {
        let std::cmp::Reverse(leaf) = leaf_heap.pop().expect("tree invariant");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaf_heap.push(std::cmp::Reverse(v));
        }
    }
    let std::cmp::Reverse(a) = leaf_heap.pop().unwrap();
    let std::cmp::Reverse(b) = leaf_heap.pop().unwrap();
    edges.push((a, b));
    Graph::from_edges(n, &edges).unwrap()
}
