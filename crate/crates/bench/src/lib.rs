//! Shared fixtures for the criterion benchmarks: deterministic graphs big
//! enough to show algorithmic differences, small enough to iterate quickly.

use chromatica::{generators, Graph, Seed};

/// A connected-ish random graph; fixed seed so every run measures the same
/// instance.
pub fn random_graph(n: usize, p: f64) -> Graph {
    generators::gnp(n, p, Seed(0xB0E)).expect("valid parameters")
}
