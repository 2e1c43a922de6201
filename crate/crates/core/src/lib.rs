//! Exact solver and verification workbench for the speed-(s,t) game of Cops
//! and Robbers: graph constructions, structural analysis (corners, cop-win
//! partitions, retractions), retrograde game solving, scripted strategies,
//! and a claim registry with a catalog scanner.

pub mod error;
pub mod game;
pub mod graph;
pub mod harness;
pub mod solver;
pub mod strategy;
pub mod structure;

pub use error::{Error, Result};
pub use graph::Graph;
