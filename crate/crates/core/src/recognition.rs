//! Whole-graph verdicts: path graphs and directed path graphs.

use crate::attachedness::{quotient, AttachednessGraph};
use crate::chordal::{peo_or_hole, Chordality, Hole};
use crate::coloring::{antipodal_odd_cycle, skeleton, weak_coloring, Skeleton, WeakOutcome};
use crate::decomposition::{clique_separators, gamma_components, Decomposition};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::obstructions::{refutation_to_obstruction, Obstruction};

/// Everything computed at one clique separator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorAnalysis {
    pub decomposition: Decomposition,
    pub attachedness: AttachednessGraph,
    pub skeleton: Skeleton,
    pub outcome: WeakOutcome,
    /// Present exactly when the outcome is a refutation.
    pub obstruction: Option<Obstruction>,
}

impl SeparatorAnalysis {
    pub fn separator(&self) -> &VertexSet {
        &self.decomposition.separator
    }

    pub fn is_colorable(&self) -> bool {
        self.outcome.is_colorable()
    }
}

pub fn analyze_separator(g: &Graph, q: &VertexSet) -> Result<SeparatorAnalysis> {
    let decomposition = gamma_components(g, q)?;
    let attachedness = quotient(&decomposition)?;
    let skeleton = skeleton(&attachedness);
    let outcome = weak_coloring(&attachedness)?;
    let obstruction = match &outcome {
        WeakOutcome::Refuted(r) => Some(refutation_to_obstruction(&attachedness, &skeleton, r)?),
        WeakOutcome::Colorable(_) => None,
    };
    Ok(SeparatorAnalysis {
        decomposition,
        attachedness,
        skeleton,
        outcome,
        obstruction,
    })
}

/// Analyses of every clique separator of a chordal graph.
pub fn analyze_separators(g: &Graph) -> Result<Vec<SeparatorAnalysis>> {
    clique_separators(g)?
        .iter()
        .map(|q| analyze_separator(g, q))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    NotChordal(Hole),
    /// Every separator is weakly colorable; empty for atoms.
    PathGraph {
        separators: Vec<SeparatorAnalysis>,
    },
    /// `separators[failing]` is the first refuted separator.
    NotPathGraph {
        separators: Vec<SeparatorAnalysis>,
        failing: usize,
    },
}

impl Verdict {
    pub fn is_chordal(&self) -> bool {
        !matches!(self, Verdict::NotChordal(_))
    }

    pub fn is_path_graph(&self) -> bool {
        matches!(self, Verdict::PathGraph { .. })
    }

    pub fn separators(&self) -> &[SeparatorAnalysis] {
        match self {
            Verdict::NotChordal(_) => &[],
            Verdict::PathGraph { separators } | Verdict::NotPathGraph { separators, .. } => {
                separators
            }
        }
    }

    pub fn failure(&self) -> Option<&SeparatorAnalysis> {
        match self {
            Verdict::NotPathGraph {
                separators,
                failing,
            } => separators.get(*failing),
            _ => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        self.failure().and_then(|a| a.obstruction.as_ref())
    }
}

pub fn recognize_path_graph(g: &Graph) -> Result<Verdict> {
    if let Chordality::Hole(h) = peo_or_hole(g) {
        return Ok(Verdict::NotChordal(h));
    }
    let separators = analyze_separators(g)?;
    Ok(match separators.iter().position(|a| !a.is_colorable()) {
        Some(failing) => Verdict::NotPathGraph {
            separators,
            failing,
        },
        None => Verdict::PathGraph { separators },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DirectedVerdict {
    NotChordal(Hole),
    DirectedPathGraph,
    /// The antipodality graph at `separator` has the odd cycle (over classes).
    NotDirectedPathGraph {
        separator: VertexSet,
        odd_cycle: Vec<usize>,
    },
}

impl DirectedVerdict {
    pub fn is_directed_path_graph(&self) -> bool {
        matches!(self, DirectedVerdict::DirectedPathGraph)
    }
}

/// Chordal, and every antipodality graph is bipartite.
pub fn recognize_directed_path_graph(g: &Graph) -> Result<DirectedVerdict> {
    if let Chordality::Hole(h) = peo_or_hole(g) {
        return Ok(DirectedVerdict::NotChordal(h));
    }
    for q in clique_separators(g)? {
        let m = quotient(&gamma_components(g, &q)?)?;
        if let Some(odd_cycle) = antipodal_odd_cycle(&m) {
            return Ok(DirectedVerdict::NotDirectedPathGraph {
                separator: q,
                odd_cycle,
            });
        }
    }
    Ok(DirectedVerdict::DirectedPathGraph)
}
