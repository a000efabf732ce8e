//! Recognition and certification of path graphs: intersection graphs of
//! paths in a tree.
//!
//! A chordal graph is split at each clique separator `Q`; the components
//! hanging off `Q` are related by attachedness, dominance and antipodality,
//! and the graph is a path graph exactly when every such attachedness graph
//! admits a constrained coloring. Failing separators yield an explicit
//! obstruction from a finite catalogue of 2-edge-colored wheels and fans.

pub mod attachedness;
pub mod chordal;
pub mod coloring;
pub mod decomposition;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod obstructions;
pub mod oracle;
pub mod realization;
pub mod recognition;

pub use attachedness::{antipodal, attached, dominates, quotient, AttachednessGraph};
pub use chordal::{
    clique_tree, is_chordal, is_clique_path_tree, is_clique_tree, maximal_cliques, peo_or_hole,
    Chordality, CliqueTree, EliminationOrder, Hole,
};
pub use coloring::{
    full_antipodal_triple, is_strong_coloring, skeleton, upper_bounds, weak_coloring, Member,
    Refutation, Skeleton, WeakColoring, WeakOutcome,
};
pub use decomposition::{
    clique_separators, gamma_components, relevant_cliques, Decomposition, GammaComponent,
};
pub use error::{Error, Result};
pub use generate::{gen_chordal, gen_path_graph, k4_hub, HostRealization};
pub use graph::{EdgeColor, EdgeColoredGraph, Graph, VertexSet};
pub use io::{emit_verdict, parse_graph, Format, VerdictDocument};
pub use obstructions::{
    build_family, find_colored, refutation_to_obstruction, verify_obstruction, Family, Obstruction,
    ObstructionPattern,
};
pub use oracle::{oracle_clique_path_tree, oracle_strong_coloring, oracle_sweep};
pub use realization::{clique_path_tree_to_host, realize, realize_report, Realization};
pub use recognition::{
    analyze_separator, recognize_directed_path_graph, recognize_path_graph, DirectedVerdict,
    SeparatorAnalysis, Verdict,
};
