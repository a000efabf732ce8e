//! Seeded generators. All randomness comes from a ChaCha8 stream keyed by
//! the 64-bit seed, so a seed names the same graph on every platform.

use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Paths of a host tree whose vertex intersection graph is the realized graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostRealization {
    pub nodes: usize,
    pub tree_edges: Vec<(usize, usize)>,
    /// One node sequence per graph vertex.
    pub paths: Vec<Vec<usize>>,
}

impl HostRealization {
    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes];
        for &(a, b) in &self.tree_edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// The host is a tree and every path walks along tree edges without
    /// repeating a node.
    pub fn is_valid(&self) -> bool {
        let t = crate::chordal::CliqueTree::new(
            vec![Default::default(); self.nodes],
            self.tree_edges.clone(),
        );
        if !t.is_tree() {
            return false;
        }
        let adj = self.adjacency();
        self.paths.iter().all(|p| {
            !p.is_empty()
                && p.iter().all(|&x| x < self.nodes)
                && p.windows(2).all(|w| adj[w[0]].contains(&w[1]))
                && p.iter().collect::<std::collections::BTreeSet<_>>().len() == p.len()
        })
    }

    /// Vertices adjacent iff their paths share a node.
    pub fn intersection_graph(&self) -> Graph {
        let n = self.paths.len();
        let mut owners = vec![Vec::new(); self.nodes];
        for (v, p) in self.paths.iter().enumerate() {
            for &x in p {
                owners[x].push(v);
            }
        }
        let mut g = Graph::new(n);
        for list in &owners {
            for (i, &u) in list.iter().enumerate() {
                for &w in &list[i + 1..] {
                    g.add_edge(u, w).expect("distinct path owners");
                }
            }
        }
        g
    }
}

/// Uniform labeled tree on `n` nodes from a random Prüfer sequence.
fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Vec<(usize, usize)> {
    if n < 2 {
        return vec![];
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    crate::oracle::prufer_decode(&seq, n)
}

fn tree_adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

fn tree_path(adj: &[Vec<usize>], from: usize, to: usize) -> Vec<usize> {
    let mut parent = vec![usize::MAX; adj.len()];
    parent[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if parent[y] == usize::MAX {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

const PATH_RETRIES: usize = 1000;

/// Intersection graph of `n_paths` random paths in a random tree on
/// `n_tree_nodes` nodes, resampled until connected.
pub fn gen_path_graph(
    n_tree_nodes: usize,
    n_paths: usize,
    seed: u64,
) -> Result<(Graph, HostRealization)> {
    if n_tree_nodes == 0 || n_paths == 0 {
        return Err(Error::input("tree size and path count must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..PATH_RETRIES {
        let tree_edges = random_tree(n_tree_nodes, &mut rng);
        let adj = tree_adjacency(n_tree_nodes, &tree_edges);
        let paths: Vec<Vec<usize>> = (0..n_paths)
            .map(|_| {
                let a = rng.gen_range(0..n_tree_nodes);
                let b = rng.gen_range(0..n_tree_nodes);
                tree_path(&adj, a, b)
            })
            .collect();
        let host = HostRealization {
            nodes: n_tree_nodes,
            tree_edges,
            paths,
        };
        let g = host.intersection_graph();
        if g.is_connected() {
            return Ok((g, host));
        }
    }
    Err(Error::Generation(format!(
        "no connected path graph from {n_paths} paths in a {n_tree_nodes}-node tree after {PATH_RETRIES} tries"
    )))
}

const CHORDAL_RETRIES: usize = 100;

/// Intersection graph of `n` random subtrees of a random recursive tree on
/// `n..=3n/2` nodes. Half the subtrees are single nodes; the rest grow from
/// a random node through a random frontier to at most three quarters of the
/// tree. After the retry budget the last vertex takes the whole tree, which
/// forces connectivity.
pub fn gen_chordal(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("vertex count must be positive"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = None;
    for _ in 0..CHORDAL_RETRIES {
        let nodes = rng.gen_range(n.max(2)..=(3 * n / 2).max(2));
        let edges: Vec<(usize, usize)> = (1..nodes).map(|v| (rng.gen_range(0..v), v)).collect();
        let adj = tree_adjacency(nodes, &edges);
        let big = (3 * nodes / 4).max(2);
        let subtrees: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let size = if rng.gen_bool(0.5) {
                    1
                } else {
                    rng.gen_range(1..=big)
                };
                random_subtree(&adj, size, &mut rng)
            })
            .collect();
        let g = subtree_graph(nodes, &subtrees);
        if g.is_connected() {
            return Ok(g);
        }
        last = Some((nodes, subtrees));
    }
    let (nodes, mut subtrees) = last.expect("at least one attempt");
    subtrees[n - 1] = (0..nodes).collect();
    Ok(subtree_graph(nodes, &subtrees))
}

fn random_subtree(adj: &[Vec<usize>], size: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let start = rng.gen_range(0..adj.len());
    let mut inside = vec![false; adj.len()];
    inside[start] = true;
    let mut nodes = vec![start];
    let mut frontier = adj[start].clone();
    while nodes.len() < size && !frontier.is_empty() {
        let x = frontier.swap_remove(rng.gen_range(0..frontier.len()));
        if inside[x] {
            continue;
        }
        inside[x] = true;
        nodes.push(x);
        frontier.extend(adj[x].iter().copied().filter(|&y| !inside[y]));
    }
    nodes
}

fn subtree_graph(nodes: usize, subtrees: &[Vec<usize>]) -> Graph {
    let mut owners = vec![Vec::new(); nodes];
    for (v, s) in subtrees.iter().enumerate() {
        for &x in s {
            owners[x].push(v);
        }
    }
    let mut g = Graph::new(subtrees.len());
    for list in &owners {
        for (i, &u) in list.iter().enumerate() {
            for &w in &list[i + 1..] {
                g.add_edge(u, w).expect("distinct owners");
            }
        }
    }
    g
}

/// `K_t` on vertices `0..t` (labeled `1..=t`) plus, for every `i` in
/// `1..t`, a pendant vertex adjacent to vertices `0` and `i` (labeled
/// `a`, `b`, ...). At `t = 4` this is the smallest graph whose separator
/// carries a full antipodal triple.
pub fn k4_hub(t: usize) -> Result<Graph> {
    if t < 2 {
        return Err(Error::input("the hub clique needs at least two vertices"));
    }
    let mut g = Graph::new(2 * t - 1);
    for u in 0..t {
        for v in u + 1..t {
            g.add_edge(u, v)?;
        }
    }
    let mut labels: Vec<String> = (1..=t).map(|i| i.to_string()).collect();
    for i in 1..t {
        let p = t + i - 1;
        g.add_edge(p, 0)?;
        g.add_edge(p, i)?;
        labels.push(pendant_label(i - 1));
    }
    g.with_labels(labels)
}

fn pendant_label(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("p{i}")
    }
}

/// A random relabeling of `g`, for invariance checks.
pub fn shuffled(g: &Graph, seed: u64) -> (Graph, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = g.vertices().collect();
    perm.shuffle(&mut rng);
    (g.permuted(&perm).expect("valid permutation"), perm)
}
