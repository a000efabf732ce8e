//! Benchmark inputs shared by the criterion suites.

use pathgraph_core::{gen_chordal, gen_path_graph, Graph};

/// Seeded chordal graphs of `n` vertices.
pub fn chordal_inputs(n: usize, count: u64) -> Vec<Graph> {
    (0..count)
        .map(|seed| gen_chordal(n, seed).expect("chordal generator"))
        .collect()
}

/// Seeded path graphs from `n` paths in an `n`-node host tree.
pub fn path_inputs(n: usize, count: u64) -> Vec<Graph> {
    (0..count)
        .map(|seed| gen_path_graph(n, n, seed).expect("path generator").0)
        .collect()
}
