//! Dense-id simple undirected graphs, canonical vertex sets and
//! 2-edge-colored graphs.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A sorted, duplicate-free set of vertex ids.
///
/// Ordering between sets is lexicographic on the sorted id sequence, which
/// gives every enumeration in the crate a reproducible order.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new() -> Self {
        VertexSet(Vec::new())
    }

    /// Builds the canonical form of an arbitrary id sequence.
    pub fn from_unsorted(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        ids.dedup();
        VertexSet(ids)
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(vec![v])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        match self.0.binary_search(&v) {
            Ok(_) => false,
            Err(pos) => {
                self.0.insert(pos, v);
                true
            }
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        let mut it = other.0.iter();
        'outer: for &x in &self.0 {
            for &y in it.by_ref() {
                if y == x {
                    continue 'outer;
                }
                if y > x {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| other.contains(v))
                .collect(),
        )
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut ids = self.0.clone();
        ids.extend_from_slice(&other.0);
        VertexSet::from_unsorted(ids)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet(
            self.0
                .iter()
                .copied()
                .filter(|&v| !other.contains(v))
                .collect(),
        )
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_unsorted(iter.into_iter().collect())
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(ids: Vec<usize>) -> Self {
        VertexSet::from_unsorted(ids)
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(ids: [usize; N]) -> Self {
        VertexSet::from_unsorted(ids.to_vec())
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = std::iter::Copied<std::slice::Iter<'a, usize>>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter().copied()
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            g.adj[u] = (0..n).filter(|&v| v != u).collect();
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n() {
            return Err(Error::input(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n()
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// Adds `uv`; returns `false` if the edge was already present.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::input(format!("self-loop on vertex {u}")));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Ok(false),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(true)
            }
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            out.extend(nbrs.iter().filter(|&&v| v > u).map(|&v| (u, v)));
        }
        out
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of a vertex: its label if present, else its id.
    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet((0..self.n()).collect())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::input(format!(
                "vertex {v} out of range for graph on {} vertices",
                self.n()
            )))
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: &VertexSet) -> Result<()> {
        match s.as_slice().last() {
            Some(&v) => self.check_vertex(v),
            None => Ok(()),
        }
    }

    /// The subgraph induced by `set`, renumbered by sorted order; the returned
    /// vector maps new ids back to ids of `self`.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(set)?;
        let map: Vec<usize> = set.iter().collect();
        let mut back = vec![usize::MAX; self.n()];
        for (i, &v) in map.iter().enumerate() {
            back[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| back[w] != usize::MAX)
                    .map(|&w| back[w])
                    .collect()
            })
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&v| l[v].clone()).collect());
        Ok((Graph { adj, labels }, map))
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_avoiding(&VertexSet::new())
    }

    /// Connected components of `self - removed`.
    pub fn components_avoiding(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        for v in removed {
            if v < n {
                seen[v] = true;
            }
        }
        let mut parts = Vec::new();
        let mut queue = VecDeque::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            queue.push_back(s);
            let mut part = Vec::new();
            while let Some(v) = queue.pop_front() {
                part.push(v);
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            parts.push(VertexSet::from_unsorted(part));
        }
        parts
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_clique(&self, set: &VertexSet) -> Result<bool> {
        self.check_set(set)?;
        let ids = set.as_slice();
        Ok(ids
            .iter()
            .enumerate()
            .all(|(i, &u)| ids[i + 1..].iter().all(|&v| self.has_edge(u, v))))
    }

    /// `G⁺`: every vertex `i` gets a pendant copy `n + i`.
    pub fn plus(&self) -> Graph {
        let n = self.n();
        let mut adj = Vec::with_capacity(2 * n);
        for (v, nbrs) in self.adj.iter().enumerate() {
            let mut nbrs = nbrs.clone();
            nbrs.push(n + v);
            adj.push(nbrs);
        }
        for v in 0..n {
            adj.push(vec![v]);
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = l.clone();
            out.extend(l.iter().map(|s| format!("{s}+")));
            out
        });
        Graph { adj, labels }
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n() || VertexSet::from(perm.to_vec()).len() != self.n() {
            return Err(Error::input("not a permutation of the vertex set"));
        }
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        if let Some(l) = &self.labels {
            let mut labels = vec![String::new(); self.n()];
            for (v, s) in l.iter().enumerate() {
                labels[perm[v]] = s.clone();
            }
            g.labels = Some(labels);
        }
        Ok(g)
    }
}

/// Free-function form of [`Graph::induced_subgraph`].
pub fn induced_subgraph(g: &Graph, set: &VertexSet) -> Result<(Graph, Vec<usize>)> {
    g.induced_subgraph(set)
}

pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    g.connected_components()
}

pub fn is_clique(g: &Graph, set: &VertexSet) -> Result<bool> {
    g.is_clique(set)
}

pub fn graph_plus(g: &Graph) -> Graph {
    g.plus()
}

/// The two edge colors of an attachedness graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeColor {
    Antipodal,
    Dominance,
}

/// Undirected graph whose edges each carry exactly one [`EdgeColor`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EdgeColoredGraph {
    n: usize,
    edges: BTreeMap<(usize, usize), EdgeColor>,
    adj: Vec<Vec<usize>>,
}

impl EdgeColoredGraph {
    pub fn new(n: usize) -> Self {
        EdgeColoredGraph {
            n,
            edges: BTreeMap::new(),
            adj: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize, color: EdgeColor) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::input(format!("edge {u}-{v} out of range")));
        }
        if u == v {
            return Err(Error::input(format!("self-loop on vertex {u}")));
        }
        let key = (u.min(v), u.max(v));
        match self.edges.get(&key) {
            Some(&c) if c == color => Ok(()),
            Some(&c) => Err(Error::input(format!(
                "edge {u}-{v} already colored {c:?}, cannot recolor {color:?}"
            ))),
            None => {
                self.edges.insert(key, color);
                let pos = self.adj[u].binary_search(&v).unwrap_err();
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn color(&self, u: usize, v: usize) -> Option<EdgeColor> {
        self.edges.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v, color)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, EdgeColor)> + '_ {
        self.edges.iter().map(|(&(u, v), &c)| (u, v, c))
    }

    pub fn edges_of(&self, color: EdgeColor) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges()
            .filter(move |&(_, _, c)| c == color)
            .map(|(u, v, _)| (u, v))
    }

    pub fn neighbors_of(&self, v: usize, color: EdgeColor) -> impl Iterator<Item = usize> + '_ {
        self.adj[v]
            .iter()
            .copied()
            .filter(move |&w| self.color(v, w) == Some(color))
    }

    /// Induced subgraph on `set`, renumbered by sorted order.
    pub fn induced(&self, set: &VertexSet) -> EdgeColoredGraph {
        let map: Vec<usize> = set.iter().collect();
        let mut out = EdgeColoredGraph::new(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if let Some(c) = self.color(u, v) {
                    out.add_edge(i, j, c).expect("fresh edge");
                }
            }
        }
        out
    }

    /// The underlying uncolored graph.
    pub fn shape(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v, _) in self.edges() {
            g.add_edge(u, v).expect("valid edge");
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_is_canonical() {
        let s = VertexSet::from(vec![3, 1, 3, 2]);
        assert_eq!(s.as_slice(), &[1, 2, 3]);
        assert!(VertexSet::from([1, 3]).is_subset(&s));
        assert!(!VertexSet::from([0, 3]).is_subset(&s));
        assert!(VertexSet::new().is_subset(&s));
        assert!(s.intersects(&VertexSet::from([3, 9])));
        assert!(!s.intersects(&VertexSet::from([0, 9])));
        assert!(VertexSet::from([1, 2]) < VertexSet::from([1, 3]));
    }

    #[test]
    fn induced_triangle_pair_is_an_edge() {
        let g = Graph::complete(3);
        let (h, map) = g.induced_subgraph(&VertexSet::from([0, 1])).unwrap();
        assert_eq!(h.n(), 2);
        assert_eq!(h.edges(), vec![(0, 1)]);
        assert_eq!(map, vec![0, 1]);
    }

    #[test]
    fn induced_on_everything_is_identity() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (h, map) = g.induced_subgraph(&g.all_vertices()).unwrap();
        assert_eq!(h, g);
        assert_eq!(map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let g = Graph::new(2);
        assert!(matches!(
            g.induced_subgraph(&VertexSet::from([0, 5])),
            Err(Error::Input { .. })
        ));
    }

    #[test]
    fn components_of_edgeless_graph() {
        let g = Graph::new(3);
        assert_eq!(
            g.connected_components(),
            vec![
                VertexSet::from([0]),
                VertexSet::from([1]),
                VertexSet::from([2])
            ]
        );
    }

    #[test]
    fn clique_checks() {
        let g = Graph::complete(3);
        assert!(g.is_clique(&VertexSet::new()).unwrap());
        assert!(g.is_clique(&VertexSet::from([0, 1, 2])).unwrap());
        let p = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(!p.is_clique(&VertexSet::from([0, 1, 2])).unwrap());
        assert!(p.is_clique(&VertexSet::from([0, 3])).is_err());
    }

    #[test]
    fn self_loops_and_duplicates() {
        let mut g = Graph::new(2);
        assert!(g.add_edge(0, 0).is_err());
        assert!(g.add_edge(0, 1).unwrap());
        assert!(!g.add_edge(1, 0).unwrap());
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn plus_of_an_edge_is_a_path() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let p = g.plus();
        assert_eq!(p.n(), 4);
        assert_eq!(p.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        let single = Graph::new(1).plus();
        assert_eq!(single.edges(), vec![(0, 1)]);
    }

    #[test]
    fn colored_edges_keep_one_color() {
        let mut m = EdgeColoredGraph::new(3);
        m.add_edge(0, 1, EdgeColor::Antipodal).unwrap();
        assert!(m.add_edge(1, 0, EdgeColor::Antipodal).is_ok());
        assert!(m.add_edge(1, 0, EdgeColor::Dominance).is_err());
        assert!(m.add_edge(2, 2, EdgeColor::Dominance).is_err());
        assert_eq!(m.color(1, 0), Some(EdgeColor::Antipodal));
        assert_eq!(m.color(1, 2), None);
    }
}
