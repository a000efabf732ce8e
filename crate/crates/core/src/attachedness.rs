//! Attachedness, dominance and antipodality between the gammas of one
//! separator, and the 2-edge-colored graph they form.

use std::collections::{BTreeMap, BTreeSet};

use crate::chordal::UnionFind;
use crate::decomposition::{Decomposition, GammaComponent};
use crate::error::{Error, Result};
use crate::graph::{EdgeColor, EdgeColoredGraph, VertexSet};

/// Some trace of `a` meets some trace of `b`.
pub fn attached(a: &GammaComponent, b: &GammaComponent) -> bool {
    a.traces
        .iter()
        .any(|t| b.traces.iter().any(|s| t.intersects(s)))
}

/// `a ≤ b`: attached, and every trace of `b` either contains all traces of
/// `a` or misses all of them.
pub fn dominates(a: &GammaComponent, b: &GammaComponent) -> bool {
    attached(a, b)
        && b.traces.iter().all(|s| {
            a.traces.iter().all(|t| t.is_subset(s)) || a.traces.iter().all(|t| !t.intersects(s))
        })
}

/// Some pair of intersecting traces is inclusion-incomparable.
pub fn traces_incomparable(a: &GammaComponent, b: &GammaComponent) -> bool {
    a.traces.iter().any(|t| {
        b.traces
            .iter()
            .any(|s| t.intersects(s) && !t.is_subset(s) && !s.is_subset(t))
    })
}

/// Attached but comparable in neither direction.
///
/// This contains every pair flagged by [`traces_incomparable`] and keeps the
/// three relations a partition of attachedness.
pub fn antipodal(a: &GammaComponent, b: &GammaComponent) -> bool {
    attached(a, b) && !dominates(a, b) && !dominates(b, a)
}

/// The attachedness graph on the classes of mutually dominating gammas.
///
/// Classes are numbered by their smallest member, and the representative of
/// a class is that member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AttachednessGraph {
    pub separator: VertexSet,
    pub gammas: Vec<GammaComponent>,
    pub class_members: Vec<Vec<usize>>,
    pub edges: EdgeColoredGraph,
    /// `(a, b)` means class `a` lies strictly below class `b`.
    pub dominance_order: BTreeSet<(usize, usize)>,
    /// For every separator vertex, the classes having it in a trace.
    pub neighbor_map: BTreeMap<usize, VertexSet>,
}

impl AttachednessGraph {
    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }

    pub fn classes(&self) -> std::ops::Range<usize> {
        0..self.gammas.len()
    }

    pub fn is_antipodal(&self, a: usize, b: usize) -> bool {
        self.edges.color(a, b) == Some(EdgeColor::Antipodal)
    }

    pub fn is_attached(&self, a: usize, b: usize) -> bool {
        self.edges.color(a, b).is_some()
    }

    /// Strictly below.
    pub fn below(&self, a: usize, b: usize) -> bool {
        self.dominance_order.contains(&(a, b))
    }

    pub fn antipodal_neighbors(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.neighbors_of(a, EdgeColor::Antipodal)
    }

    /// Class containing the original gamma `index`.
    pub fn class_of(&self, index: usize) -> Option<usize> {
        self.class_members.iter().position(|m| m.contains(&index))
    }

    /// The smallest separator vertex lying in a trace of every class in `set`.
    pub fn is_neighboring_set(&self, set: &[usize]) -> Option<usize> {
        if set.is_empty() {
            return None;
        }
        self.neighbor_map
            .iter()
            .find(|(_, classes)| set.iter().all(|&c| classes.contains(c)))
            .map(|(&v, _)| v)
    }
}

pub fn quotient(dec: &Decomposition) -> Result<AttachednessGraph> {
    let gs = &dec.gammas;
    let k = gs.len();
    let mut uf = UnionFind::new(k);
    for a in 0..k {
        for b in a + 1..k {
            if dominates(&gs[a], &gs[b]) && dominates(&gs[b], &gs[a]) {
                uf.union(a, b);
            }
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for a in 0..k {
        by_root.entry(uf.find(a)).or_default().push(a);
    }
    let mut class_members: Vec<Vec<usize>> = by_root.into_values().collect();
    class_members.sort();
    let reps: Vec<GammaComponent> = class_members.iter().map(|m| gs[m[0]].clone()).collect();
    let c = reps.len();

    let mut edges = EdgeColoredGraph::new(c);
    let mut dominance_order = BTreeSet::new();
    for a in 0..c {
        for b in a + 1..c {
            let (x, y) = (&reps[a], &reps[b]);
            if !attached(x, y) {
                continue;
            }
            let (le, ge) = (dominates(x, y), dominates(y, x));
            if le && ge {
                return Err(Error::Invariant(format!(
                    "classes {a} and {b} dominate each other after the quotient"
                )));
            }
            if le {
                dominance_order.insert((a, b));
            } else if ge {
                dominance_order.insert((b, a));
            }
            let color = if le || ge {
                EdgeColor::Dominance
            } else {
                EdgeColor::Antipodal
            };
            edges.add_edge(a, b, color)?;
        }
    }
    for &(a, b) in &dominance_order {
        for &(b2, c2) in dominance_order.range((b, 0)..(b + 1, 0)) {
            debug_assert_eq!(b, b2);
            if a != c2 && !dominance_order.contains(&(a, c2)) {
                return Err(Error::Invariant(format!(
                    "dominance is not transitive on classes {a} < {b} < {c2}"
                )));
            }
        }
    }
    let neighbor_map = dec
        .separator
        .iter()
        .map(|v| {
            let set = (0..c).filter(|&i| reps[i].touches(v)).collect();
            (v, set)
        })
        .collect();
    Ok(AttachednessGraph {
        separator: dec.separator.clone(),
        gammas: reps,
        class_members,
        edges,
        dominance_order,
        neighbor_map,
    })
}
