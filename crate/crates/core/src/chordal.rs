//! Chordality with hole certificates, maximal cliques of chordal graphs,
//! clique trees and clique path trees.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Perfect elimination ordering: every vertex's later neighbors form a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EliminationOrder(pub Vec<usize>);

/// A chordless cycle of length at least four, listed in cyclic order starting
/// from its smallest vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Hole(pub Vec<usize>);

impl Hole {
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let c = &self.0;
        let k = c.len();
        if k < 4 || VertexSet::from(c.clone()).len() != k || c.iter().any(|&v| v >= g.n()) {
            return false;
        }
        (0..k).all(|i| {
            (i + 1..k).all(|j| {
                let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                g.has_edge(c[i], c[j]) == consecutive
            })
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Chordality {
    Peo(EliminationOrder),
    Hole(Hole),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Peo(_))
    }
}

/// Maximum cardinality search, ties broken towards the smallest id. Returns
/// the visit order; its reverse is a PEO exactly when the graph is chordal.
fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !numbered[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("unnumbered vertex");
        numbered[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !numbered[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// Returns a perfect elimination ordering, or a hole if none exists.
pub fn peo_or_hole(g: &Graph) -> Chordality {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    for &v in &order {
        let later: Vec<usize> = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| pos[w] > pos[v])
            .collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        for &w in &later {
            if w != parent && !g.has_edge(parent, w) {
                let hole = hole_through(g, v, parent, w)
                    .or_else(|| find_any_hole(g))
                    .expect("a PEO violation implies a hole");
                return Chordality::Hole(hole);
            }
        }
    }
    Chordality::Peo(EliminationOrder(order))
}

pub fn is_chordal(g: &Graph) -> bool {
    peo_or_hole(g).is_chordal()
}

/// Hole `v, a, ..., b` where the `a..b` part is a shortest path avoiding the
/// closed neighborhood of `v` (other than `a` and `b`).
fn hole_through(g: &Graph, v: usize, a: usize, b: usize) -> Option<Hole> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for &w in g.neighbors(v) {
        blocked[w] = w != a && w != b;
    }
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([a]);
    parent[a] = a;
    while let Some(x) = queue.pop_front() {
        if x == b {
            break;
        }
        for &y in g.neighbors(x) {
            if !blocked[y] && parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if parent[b] == usize::MAX {
        return None;
    }
    let mut cycle = vec![v];
    let mut path = vec![b];
    let mut x = b;
    while x != a {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    cycle.extend(path);
    let hole = canonical_cycle(cycle);
    hole.is_valid_in(g).then_some(hole)
}

fn find_any_hole(g: &Graph) -> Option<Hole> {
    for v in g.vertices() {
        let nbrs = g.neighbors(v);
        for (i, &a) in nbrs.iter().enumerate() {
            for &b in &nbrs[i + 1..] {
                if !g.has_edge(a, b) {
                    if let Some(h) = hole_through(g, v, a, b) {
                        return Some(h);
                    }
                }
            }
        }
    }
    None
}

/// Rotates a cycle to start at its smallest vertex, then picks the direction
/// whose second vertex is smaller.
pub(crate) fn canonical_cycle(mut cycle: Vec<usize>) -> Hole {
    if cycle.is_empty() {
        return Hole(cycle);
    }
    let start = (0..cycle.len()).min_by_key(|&i| cycle[i]).unwrap();
    cycle.rotate_left(start);
    if cycle.len() > 2 && cycle[cycle.len() - 1] < cycle[1] {
        cycle[1..].reverse();
    }
    Hole(cycle)
}

/// Maximal cliques read off a perfect elimination ordering, canonically sorted.
pub fn maximal_cliques_from_peo(g: &Graph, peo: &EliminationOrder) -> Vec<VertexSet> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.0.iter().enumerate() {
        pos[v] = i;
    }
    let mut candidates: Vec<VertexSet> = peo
        .0
        .iter()
        .map(|&v| {
            let mut c: Vec<usize> = g
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&w| pos[w] > pos[v])
                .collect();
            c.push(v);
            VertexSet::from_unsorted(c)
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let mut out: Vec<VertexSet> = candidates
        .iter()
        .filter(|c| {
            !candidates
                .iter()
                .any(|d| d.len() > c.len() && c.is_subset(d))
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// All maximal cliques of a chordal graph. At most `n` of them.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<VertexSet>> {
    match peo_or_hole(g) {
        Chordality::Peo(peo) => Ok(maximal_cliques_from_peo(g, &peo)),
        Chordality::Hole(h) => Err(Error::Precondition(format!(
            "graph is not chordal (hole {:?})",
            h.0
        ))),
    }
}

/// A tree whose nodes are the maximal cliques of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueTree {
    pub cliques: Vec<VertexSet>,
    /// Unordered pairs of clique indices, stored as `(min, max)` and sorted.
    pub edges: Vec<(usize, usize)>,
}

impl CliqueTree {
    pub fn new(cliques: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        let mut edges: Vec<(usize, usize)> = edges
            .into_iter()
            .map(|(a, b)| (a.min(b), a.max(b)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        CliqueTree { cliques, edges }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.cliques.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Spanning tree check on the clique list.
    pub fn is_tree(&self) -> bool {
        let k = self.cliques.len();
        if k == 0 {
            return self.edges.is_empty();
        }
        if self.edges.len() != k - 1 || self.edges.iter().any(|&(a, b)| a == b || b >= k) {
            return false;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == k
    }

    /// For each vertex `v < n`, the indices of cliques containing `v`.
    pub fn occurrences(&self, n: usize) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::new(); n];
        for (i, c) in self.cliques.iter().enumerate() {
            for v in c {
                if v < n {
                    occ[v].push(i);
                }
            }
        }
        occ
    }

    /// Checks, for every vertex, that the cliques containing it induce a
    /// connected subgraph; with `paths`, additionally that every induced
    /// degree is at most two.
    fn vertex_property(&self, n: usize, paths: bool) -> bool {
        let adj = self.adjacency();
        let k = self.cliques.len();
        let mut inside = vec![false; k];
        for nodes in self.occurrences(n) {
            if nodes.is_empty() {
                continue;
            }
            for &x in &nodes {
                inside[x] = true;
            }
            let ok = induced_connected(&adj, &nodes, &inside)
                && (!paths
                    || nodes
                        .iter()
                        .all(|&x| adj[x].iter().filter(|&&y| inside[y]).count() <= 2));
            for &x in &nodes {
                inside[x] = false;
            }
            if !ok {
                return false;
            }
        }
        true
    }
}

fn induced_connected(adj: &[Vec<usize>], nodes: &[usize], inside: &[bool]) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![nodes[0]];
    seen[nodes[0]] = true;
    let mut count = 1;
    while let Some(x) = stack.pop() {
        for &y in &adj[x] {
            if inside[y] && !seen[y] {
                seen[y] = true;
                count += 1;
                stack.push(y);
            }
        }
    }
    count == nodes.len()
}

/// Maximum-weight spanning tree of the clique intersection graph (Kruskal,
/// ties by lexicographic clique-index order). Zero-weight pairs are kept as a
/// last resort so that disconnected graphs still get a single tree.
pub fn clique_tree_of(cliques: Vec<VertexSet>) -> CliqueTree {
    let k = cliques.len();
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            pairs.push((cliques[i].intersection(&cliques[j]).len(), i, j));
        }
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut uf = UnionFind::new(k);
    let mut edges = Vec::new();
    for (_, i, j) in pairs {
        if uf.union(i, j) {
            edges.push((i, j));
        }
    }
    CliqueTree::new(cliques, edges)
}

pub fn clique_tree(g: &Graph) -> Result<CliqueTree> {
    Ok(clique_tree_of(maximal_cliques(g)?))
}

fn check_clique_list(g: &Graph, t: &CliqueTree) -> Result<()> {
    let cliques = maximal_cliques(g)?;
    let mut given = t.cliques.clone();
    given.sort();
    if given != cliques {
        return Err(Error::input(
            "tree nodes are not the maximal cliques of the graph",
        ));
    }
    Ok(())
}

/// Tree whose clique sets containing each vertex are connected.
pub fn is_clique_tree(g: &Graph, t: &CliqueTree) -> Result<bool> {
    check_clique_list(g, t)?;
    Ok(t.is_tree() && t.vertex_property(g.n(), false))
}

/// Tree whose clique sets containing each vertex induce paths.
pub fn is_clique_path_tree(g: &Graph, t: &CliqueTree) -> Result<bool> {
    check_clique_list(g, t)?;
    Ok(t.is_tree() && t.vertex_property(g.n(), true))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = x;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn four_cycle_is_its_own_hole() {
        assert_eq!(
            peo_or_hole(&cycle(4)),
            Chordality::Hole(Hole(vec![0, 1, 2, 3]))
        );
    }

    #[test]
    fn long_cycle_with_pendant_gives_valid_hole() {
        let mut g = cycle(7);
        g = {
            let mut h = Graph::new(8);
            for (u, v) in g.edges() {
                h.add_edge(u, v).unwrap();
            }
            h.add_edge(3, 7).unwrap();
            h
        };
        match peo_or_hole(&g) {
            Chordality::Hole(h) => {
                assert!(h.is_valid_in(&g));
                assert_eq!(h.0.len(), 7);
            }
            other => panic!("expected hole, got {other:?}"),
        }
    }

    #[test]
    fn complete_graph_is_chordal() {
        let g = Graph::complete(5);
        assert!(is_chordal(&g));
        assert_eq!(maximal_cliques(&g).unwrap(), vec![g.all_vertices()]);
        let t = clique_tree(&g).unwrap();
        assert_eq!(t.len(), 1);
        assert!(t.edges.is_empty());
    }

    #[test]
    fn path_cliques() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            maximal_cliques(&g).unwrap(),
            vec![VertexSet::from([0, 1]), VertexSet::from([1, 2])]
        );
        let t = clique_tree(&g).unwrap();
        assert_eq!(t.edges, vec![(0, 1)]);
        assert!(is_clique_path_tree(&g, &t).unwrap());
    }

    #[test]
    fn cliques_of_non_chordal_graph_are_refused() {
        assert!(matches!(
            maximal_cliques(&cycle(5)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn triangles_sharing_a_vertex() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)]).unwrap();
        let t = clique_tree(&g).unwrap();
        assert_eq!(t.cliques.len(), 2);
        assert_eq!(t.edges, vec![(0, 1)]);
        assert!(is_clique_tree(&g, &t).unwrap());
    }

    #[test]
    fn mismatched_clique_list_is_an_input_error() {
        let g = Graph::complete(3);
        let t = CliqueTree::new(vec![VertexSet::from([0, 1])], vec![]);
        assert!(matches!(
            is_clique_path_tree(&g, &t),
            Err(Error::Input { .. })
        ));
    }

    #[test]
    fn canonical_cycle_orientation() {
        assert_eq!(canonical_cycle(vec![2, 3, 0, 1]).0, vec![0, 1, 2, 3]);
        assert_eq!(canonical_cycle(vec![3, 2, 1, 0]).0, vec![0, 1, 2, 3]);
    }
}
