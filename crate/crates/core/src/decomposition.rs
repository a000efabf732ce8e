//! Clique separators and the components hanging off them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chordal::{maximal_cliques, maximal_cliques_from_peo, peo_or_hole, Chordality};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One component `V_i` of `G - Q` together with `Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaComponent {
    pub index: usize,
    /// `V_i ∪ Q`
    pub vertices: VertexSet,
    /// `V_i`
    pub component: VertexSet,
    pub relevant_cliques: Vec<VertexSet>,
    /// Distinct `K ∩ Q` over the relevant cliques, sorted.
    pub traces: Vec<VertexSet>,
}

impl GammaComponent {
    /// Union of the traces. It is itself a trace and contains all others.
    pub fn top_trace(&self) -> VertexSet {
        self.traces
            .iter()
            .fold(VertexSet::new(), |acc, t| acc.union(t))
    }

    pub fn touches(&self, v: usize) -> bool {
        self.traces.iter().any(|t| t.contains(v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub separator: VertexSet,
    pub gammas: Vec<GammaComponent>,
    /// For every `v` in the separator, the gammas with `v` in some trace.
    pub neighbor_map: BTreeMap<usize, VertexSet>,
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.gammas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gammas.is_empty()
    }
}

/// Vertices of the connected component containing `set` (assumed connected).
fn component_of(g: &Graph, set: &VertexSet) -> VertexSet {
    let Some(start) = set.first() else {
        return VertexSet::new();
    };
    g.connected_components()
        .into_iter()
        .find(|c| c.contains(start))
        .unwrap_or_default()
}

/// Components of `G - q` inside the connected component of `q`.
fn split_at(g: &Graph, q: &VertexSet) -> Vec<VertexSet> {
    let host = component_of(g, q);
    g.components_avoiding(q)
        .into_iter()
        .filter(|c| c.first().is_some_and(|v| host.contains(v)))
        .collect()
}

/// Maximal cliques whose removal splits their connected component.
pub fn clique_separators(g: &Graph) -> Result<Vec<VertexSet>> {
    Ok(maximal_cliques(g)?
        .into_iter()
        .filter(|q| split_at(g, q).len() >= 2)
        .collect())
}

/// Maximal cliques of `gamma_graph` meeting `q` without being `q`.
pub fn relevant_cliques(gamma_graph: &Graph, q: &VertexSet) -> Result<Vec<VertexSet>> {
    gamma_graph.check_set(q)?;
    let peo = match peo_or_hole(gamma_graph) {
        Chordality::Peo(p) => p,
        Chordality::Hole(h) => {
            return Err(Error::Precondition(format!(
                "graph is not chordal (hole {:?})",
                h.0
            )))
        }
    };
    Ok(maximal_cliques_from_peo(gamma_graph, &peo)
        .into_iter()
        .filter(|k| k.intersects(q) && k != q)
        .collect())
}

pub fn gamma_components(g: &Graph, q: &VertexSet) -> Result<Decomposition> {
    g.check_set(q)?;
    let cliques = maximal_cliques(g)?;
    if !cliques.contains(q) {
        return Err(Error::Precondition(format!(
            "{q:?} is not a maximal clique"
        )));
    }
    let parts = split_at(g, q);
    if parts.len() < 2 {
        return Err(Error::Precondition(format!(
            "{q:?} is not a clique separator"
        )));
    }
    let mut gammas = Vec::with_capacity(parts.len());
    for (index, component) in parts.into_iter().enumerate() {
        let vertices = component.union(q);
        let (sub, map) = g.induced_subgraph(&vertices)?;
        let local_q: VertexSet = q
            .iter()
            .map(|v| map.binary_search(&v).expect("separator inside gamma"))
            .collect();
        let relevant: Vec<VertexSet> = relevant_cliques(&sub, &local_q)?
            .into_iter()
            .map(|k| k.iter().map(|x| map[x]).collect())
            .collect();
        let mut traces: Vec<VertexSet> = relevant.iter().map(|k| k.intersection(q)).collect();
        traces.sort();
        traces.dedup();
        gammas.push(GammaComponent {
            index,
            vertices,
            component,
            relevant_cliques: relevant,
            traces,
        });
    }
    let neighbor_map = q
        .iter()
        .map(|v| {
            let set = gammas
                .iter()
                .filter(|gm| gm.touches(v))
                .map(|gm| gm.index)
                .collect();
            (v, set)
        })
        .collect();
    Ok(Decomposition {
        separator: q.clone(),
        gammas,
        neighbor_map,
    })
}

/// Decompositions at every clique separator, in separator order.
pub fn decompose(g: &Graph) -> Result<Vec<Decomposition>> {
    clique_separators(g)?
        .iter()
        .map(|q| gamma_components(g, q))
        .collect()
}
