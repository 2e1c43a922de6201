//! Explorer for the monotonicity conjecture: cop numbers as speed grows.

use crate::error::Result;
use crate::game::GameConfig;
use crate::graph::Graph;
use crate::solver::{cop_number_with, SolverOptions};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MonotoneReport {
    pub label: String,
    /// Speed-(s,s) cop numbers for s = 1, 2, ...
    pub sequence: Vec<usize>,
    /// Speeds s with a strictly larger cop number than s-1; candidate
    /// conjecture counterexamples, reported rather than asserted.
    pub increases: Vec<usize>,
}

/// Computes the cop-number sequence up to min(s_max, radius). Past the
/// radius a single central cop wins outright, so the sequence is pinned at 1
/// from there on.
pub fn explore_monotone(
    g: &Graph,
    label: &str,
    s_max: usize,
    opts: &SolverOptions,
) -> Result<MonotoneReport> {
    let radius = g.radius().ok_or_else(|| {
        crate::error::Error::Domain("monotone exploration needs a connected graph".into())
    })?;
    let top = s_max.min(radius.max(1));
    let mut sequence = Vec::with_capacity(top);
    for s in 1..=top {
        let c = cop_number_with(g, &GameConfig::speed(1, s), g.order(), opts)?;
        sequence.push(c);
    }
    let increases = (1..sequence.len())
        .filter(|&i| sequence[i] > sequence[i - 1])
        .map(|i| i + 1)
        .collect();
    Ok(MonotoneReport {
        label: label.into(),
        sequence,
        increases,
    })
}
