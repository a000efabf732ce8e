//! Clique path trees and host-tree realizations for path graphs.
//!
//! The tree is assembled recursively: split at a clique separator `Q`,
//! realize every gamma on its own (there `Q` is always a leaf), then hang
//! the gamma subtrees off `Q` one color class at a time, each new branch
//! going as deep as its top trace allows. The result is validated, and a
//! bounded exact search over maximum-weight spanning trees of the clique
//! intersection graph takes over whenever the merge does not validate.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::attachedness::quotient;
use crate::chordal::{
    clique_tree_of, is_clique_path_tree, maximal_cliques, peo_or_hole, Chordality, CliqueTree,
};
use crate::coloring::{weak_coloring, WeakOutcome};
use crate::decomposition::{clique_separators, gamma_components};
use crate::error::{Error, Result};
use crate::generate::HostRealization;
use crate::graph::{Graph, VertexSet};
use crate::oracle::{oracle_clique_path_tree, TREE_ORACLE_LIMIT};

/// Search nodes the exact fallback may visit per subproblem.
pub const SEARCH_BUDGET: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Merge,
    Search,
    Oracle,
}

/// A validated clique path tree and how its pieces were obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realization {
    pub tree: CliqueTree,
    /// Subproblems solved by each method, counting the recursion.
    pub methods: BTreeMap<String, usize>,
}

#[derive(Default)]
struct Tally(BTreeMap<String, usize>);

impl Tally {
    fn note(&mut self, m: Method) {
        let key = serde_json::to_value(m)
            .ok()
            .and_then(|v| v.as_str().map(str::to_owned))
            .unwrap_or_default();
        *self.0.entry(key).or_default() += 1;
    }
}

pub fn realize(g: &Graph) -> Result<CliqueTree> {
    realize_report(g).map(|r| r.tree)
}

/// Like [`realize`], also reporting which strategy produced each piece.
pub fn realize_report(g: &Graph) -> Result<Realization> {
    if let Chordality::Hole(h) = peo_or_hole(g) {
        return Err(Error::Precondition(format!(
            "graph has the chordless cycle {:?}",
            h.0
        )));
    }
    let cliques = maximal_cliques(g)?;
    let index = clique_index(&cliques);
    let mut tally = Tally::default();
    let mut edges = Vec::new();
    let mut previous: Option<usize> = None;
    for comp in g.connected_components() {
        let (sub, map) = g.induced_subgraph(&comp)?;
        let t = realize_connected(&sub, &mut tally)?;
        let global = |c: &VertexSet| index[&lift(c, &map)];
        for &(a, b) in &t.edges {
            edges.push((global(&t.cliques[a]), global(&t.cliques[b])));
        }
        let first = global(&t.cliques[0]);
        if let Some(p) = previous {
            edges.push((p, first));
        }
        previous = Some(first);
    }
    let tree = CliqueTree::new(cliques, edges);
    if !is_clique_path_tree(g, &tree)? {
        return Err(Error::Invariant(
            "joined component trees fail validation".into(),
        ));
    }
    Ok(Realization {
        tree,
        methods: tally.0,
    })
}

fn lift(c: &VertexSet, map: &[usize]) -> VertexSet {
    c.iter().map(|x| map[x]).collect()
}

fn clique_index(cliques: &[VertexSet]) -> BTreeMap<VertexSet, usize> {
    cliques
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect()
}

fn realize_connected(g: &Graph, tally: &mut Tally) -> Result<CliqueTree> {
    let separators = clique_separators(g)?;
    let merged = match separators.first() {
        None => Some(clique_tree_of(maximal_cliques(g)?)),
        Some(q) => merge_at(g, q, tally)?,
    };
    if let Some(t) = merged {
        if is_clique_path_tree(g, &t)? {
            tally.note(Method::Merge);
            return Ok(t);
        }
    }
    fallback(g, separators.first().cloned(), tally)
}

fn fallback(g: &Graph, separator: Option<VertexSet>, tally: &mut Tally) -> Result<CliqueTree> {
    let cliques = maximal_cliques(g)?;
    if let Some(edges) = search_path_tree(&cliques, SEARCH_BUDGET) {
        return match edges {
            Some(edges) => {
                tally.note(Method::Search);
                Ok(CliqueTree::new(cliques, edges))
            }
            None => Err(Error::Precondition("not a path graph".into())),
        };
    }
    if cliques.len() <= TREE_ORACLE_LIMIT {
        if let Some(t) = oracle_clique_path_tree(g)? {
            tally.note(Method::Oracle);
            return Ok(t);
        }
        return Err(Error::Precondition("not a path graph".into()));
    }
    Err(Error::Realization { separator })
}

/// Hangs recursively realized gammas off `q`. `None` when a branch finds no
/// admissible attachment point.
fn merge_at(g: &Graph, q: &VertexSet, tally: &mut Tally) -> Result<Option<CliqueTree>> {
    let dec = gamma_components(g, q)?;
    let m = quotient(&dec)?;
    let colors = match weak_coloring(&m)? {
        WeakOutcome::Colorable(f) => f.colors,
        WeakOutcome::Refuted(_) => return Err(Error::Precondition("not a path graph".into())),
    };
    let cliques = maximal_cliques(g)?;
    let index = clique_index(&cliques);
    let root = index[q];

    struct Branch {
        color: usize,
        top: VertexSet,
        attach: usize,
        edges: Vec<(usize, usize)>,
    }
    let mut branches = Vec::with_capacity(dec.len());
    for gamma in &dec.gammas {
        let (sub, map) = g.induced_subgraph(&gamma.vertices)?;
        let t = realize_connected(&sub, tally)?;
        let ids: Vec<usize> = t.cliques.iter().map(|c| index[&lift(c, &map)]).collect();
        let mut attach = None;
        let mut edges = Vec::new();
        for &(a, b) in &t.edges {
            let (a, b) = (ids[a], ids[b]);
            if a == root || b == root {
                if attach.replace(a + b - root).is_some() {
                    return Ok(None);
                }
            } else {
                edges.push((a, b));
            }
        }
        let Some(attach) = attach else {
            return Ok(None);
        };
        let class = m.class_of(gamma.index).expect("every gamma has a class");
        branches.push(Branch {
            color: colors[class],
            top: gamma.top_trace(),
            attach,
            edges,
        });
    }
    branches.sort_by(|a, b| {
        (a.color, std::cmp::Reverse(a.top.len()), a.attach).cmp(&(
            b.color,
            std::cmp::Reverse(b.top.len()),
            b.attach,
        ))
    });

    let k = cliques.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); k];
    let mut color_of = vec![0usize; k];
    let mut edges = Vec::new();
    for br in &branches {
        let depth = depths(&adj, root);
        let admissible = |x: usize| {
            depth[x] != usize::MAX
                && br.top.iter().all(|v| {
                    cliques[x].contains(v)
                        && adj[x].iter().filter(|&&y| cliques[y].contains(v)).count() <= 1
                })
        };
        let mut candidates: Vec<usize> = (0..k).filter(|&x| admissible(x)).collect();
        candidates.sort_by_key(|&x| {
            let rank = if x == root {
                1
            } else if color_of[x] == br.color {
                0
            } else {
                2
            };
            (rank, std::cmp::Reverse(depth[x]), x)
        });
        let Some(&x) = candidates.first() else {
            return Ok(None);
        };
        let mut add = |a: usize, b: usize| {
            adj[a].push(b);
            adj[b].push(a);
            edges.push((a, b));
        };
        add(x, br.attach);
        for &(a, b) in &br.edges {
            add(a, b);
        }
        color_of[br.attach] = br.color;
        for &(a, b) in &br.edges {
            color_of[a] = br.color;
            color_of[b] = br.color;
        }
    }
    Ok(Some(CliqueTree::new(cliques, edges)))
}

fn depths(adj: &[Vec<usize>], root: usize) -> Vec<usize> {
    let mut depth = vec![usize::MAX; adj.len()];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
        }
    }
    depth
}

/// Exhaustive branch and bound over maximum-weight spanning trees of the
/// clique intersection graph of a connected chordal graph, pruning any
/// partial forest in which some vertex's cliques already branch. Returns
/// `None` if the budget runs out, `Some(None)` if no clique path tree exists.
pub fn search_path_tree(
    cliques: &[VertexSet],
    budget: usize,
) -> Option<Option<Vec<(usize, usize)>>> {
    let k = cliques.len();
    if k <= 1 {
        return Some(Some(vec![]));
    }
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for a in 0..k {
        for b in a + 1..k {
            let w = cliques[a].intersection(&cliques[b]).len();
            if w > 0 {
                pairs.push((w, a, b));
            }
        }
    }
    pairs.sort_by(|x, y| y.0.cmp(&x.0).then((x.1, x.2).cmp(&(y.1, y.2))));
    let n = cliques
        .iter()
        .filter_map(|c| c.as_slice().last())
        .max()
        .map_or(0, |&v| v + 1);
    let mut search = Search {
        cliques,
        pairs: &pairs,
        target: completion(&pairs, 0, &(0..k).collect::<Vec<_>>()),
        degree: vec![vec![0u8; k]; n],
        chosen: Vec::new(),
        budget,
    };
    let comp: Vec<usize> = (0..k).collect();
    match search.run(0, &comp, 0) {
        Ok(true) => Some(Some(search.chosen)),
        Ok(false) => Some(None),
        Err(()) => None,
    }
}

struct Search<'a> {
    cliques: &'a [VertexSet],
    pairs: &'a [(usize, usize, usize)],
    target: usize,
    /// `degree[v][x]`: chosen edges at clique `x` whose both ends contain `v`.
    degree: Vec<Vec<u8>>,
    chosen: Vec<(usize, usize)>,
    budget: usize,
}

impl Search<'_> {
    fn run(&mut self, at: usize, comp: &[usize], weight: usize) -> std::result::Result<bool, ()> {
        if self.chosen.len() + 1 == comp.len() {
            return Ok(weight == self.target);
        }
        if self.budget == 0 {
            return Err(());
        }
        self.budget -= 1;
        if at == self.pairs.len() || weight + completion(self.pairs, at, comp) < self.target {
            return Ok(false);
        }
        let (w, a, b) = self.pairs[at];
        if comp[a] != comp[b] && self.fits(a, b) {
            self.bump(a, b, true);
            self.chosen.push((a, b));
            let (from, to) = (comp[b], comp[a]);
            let merged: Vec<usize> = comp
                .iter()
                .map(|&c| if c == from { to } else { c })
                .collect();
            if self.run(at + 1, &merged, weight + w)? {
                return Ok(true);
            }
            self.chosen.pop();
            self.bump(a, b, false);
        }
        self.run(at + 1, comp, weight)
    }

    fn fits(&self, a: usize, b: usize) -> bool {
        self.cliques[a]
            .intersection(&self.cliques[b])
            .iter()
            .all(|v| self.degree[v][a] < 2 && self.degree[v][b] < 2)
    }

    fn bump(&mut self, a: usize, b: usize, up: bool) {
        for v in self.cliques[a].intersection(&self.cliques[b]).iter() {
            for x in [a, b] {
                if up {
                    self.degree[v][x] += 1;
                } else {
                    self.degree[v][x] -= 1;
                }
            }
        }
    }
}

/// Heaviest forest completing `comp` with pairs from `at` onward.
fn completion(pairs: &[(usize, usize, usize)], at: usize, comp: &[usize]) -> usize {
    let mut label = comp.to_vec();
    let mut total = 0;
    for &(w, a, b) in &pairs[at..] {
        let (la, lb) = (label[a], label[b]);
        if la != lb {
            total += w;
            for l in &mut label {
                if *l == lb {
                    *l = la;
                }
            }
        }
    }
    total
}

/// Reads the host tree straight off a clique path tree: one host node per
/// clique, and each vertex's path is the run of cliques containing it.
pub fn clique_path_tree_to_host(g: &Graph, t: &CliqueTree) -> Result<HostRealization> {
    if !is_clique_path_tree(g, t)? {
        return Err(Error::Precondition("not a clique path tree".into()));
    }
    let adj = t.adjacency();
    let paths = t
        .occurrences(g.n())
        .into_iter()
        .map(|nodes| {
            let inside = |x: usize| nodes.binary_search(&x).is_ok();
            let start = nodes
                .iter()
                .copied()
                .find(|&x| adj[x].iter().filter(|&&y| inside(y)).count() <= 1)
                .expect("a path has an end");
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while let Some(&next) = adj[cur].iter().find(|&&y| y != prev && inside(y)) {
                path.push(next);
                prev = cur;
                cur = next;
            }
            path
        })
        .collect();
    let host = HostRealization {
        nodes: t.len(),
        tree_edges: t.edges.clone(),
        paths,
    };
    if host.intersection_graph().edges() != g.edges() {
        return Err(Error::Invariant(
            "host paths do not reproduce the graph".into(),
        ));
    }
    Ok(host)
}
