//! Exhaustive oracles, independent of the coloring machinery.

use crate::attachedness::{antipodal, AttachednessGraph};
use crate::chordal::{maximal_cliques, CliqueTree};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest clique count swept by [`oracle_clique_path_tree`].
pub const TREE_ORACLE_LIMIT: usize = 9;
/// Largest class count swept by [`oracle_strong_coloring`].
pub const COLORING_ORACLE_LIMIT: usize = 8;

/// Decodes a Prüfer sequence over `0..k` into `k - 1` tree edges.
pub fn prufer_decode(seq: &[usize], k: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1usize; k];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(k.saturating_sub(1));
    for &x in seq {
        let leaf = (0..k).find(|&v| degree[v] == 1).expect("leaf");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..k).filter(|&v| degree[v] == 1).collect();
    if rest.len() == 2 {
        edges.push((rest[0], rest[1]));
    }
    edges
}

/// Sweeps every labeled tree on the maximal cliques in Prüfer order and
/// returns the first clique path tree.
pub fn oracle_clique_path_tree(g: &Graph) -> Result<Option<CliqueTree>> {
    oracle_sweep(g).map(|s| s.tree)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub tree: Option<CliqueTree>,
    /// Labeled trees examined, the successful one included.
    pub examined: usize,
}

pub fn oracle_sweep(g: &Graph) -> Result<Sweep> {
    let cliques = maximal_cliques(g)?;
    let k = cliques.len();
    if k > TREE_ORACLE_LIMIT {
        return Err(Error::Guard {
            what: "clique path tree sweep",
            limit: TREE_ORACLE_LIMIT,
            actual: k,
        });
    }
    if k <= 2 {
        let edges = if k == 2 { vec![(0, 1)] } else { vec![] };
        return Ok(Sweep {
            tree: Some(CliqueTree::new(cliques, edges)),
            examined: 1,
        });
    }
    // bitmask of cliques per vertex in two or more cliques
    let masks: Vec<u32> = g
        .vertices()
        .map(|v| {
            cliques
                .iter()
                .enumerate()
                .filter(|(_, c)| c.contains(v))
                .fold(0u32, |m, (i, _)| m | (1 << i))
        })
        .filter(|m| m.count_ones() >= 2)
        .collect();
    let mut seq = vec![0usize; k - 2];
    let mut examined = 0;
    loop {
        let edges = prufer_decode(&seq, k);
        examined += 1;
        if masks.iter().all(|&mask| induces_path(&edges, mask, k)) {
            return Ok(Sweep {
                tree: Some(CliqueTree::new(cliques, edges)),
                examined,
            });
        }
        // odometer increment
        let mut pos = seq.len();
        loop {
            if pos == 0 {
                return Ok(Sweep {
                    tree: None,
                    examined,
                });
            }
            pos -= 1;
            seq[pos] += 1;
            if seq[pos] < k {
                break;
            }
            seq[pos] = 0;
        }
    }
}

/// In a tree, a node set spans a path iff it carries `size - 1` edges and
/// no node has more than two of them.
fn induces_path(edges: &[(usize, usize)], mask: u32, k: usize) -> bool {
    let mut deg = [0u8; 32];
    let mut inner = 0;
    for &(a, b) in edges {
        if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
            inner += 1;
            deg[a] += 1;
            deg[b] += 1;
        }
    }
    inner + 1 == mask.count_ones() as usize && deg[..k].iter().all(|&d| d <= 2)
}

/// Searches colorings of the classes (one per color pattern, as restricted
/// growth strings) for one that properly colors antipodal pairs and uses at
/// most two colors on every neighboring triple. Relations are recomputed
/// from the raw traces of `dec`.
pub fn oracle_strong_coloring(
    dec: &Decomposition,
    m: &AttachednessGraph,
) -> Result<Option<Vec<usize>>> {
    let s = m.class_members.len();
    if s > COLORING_ORACLE_LIMIT {
        return Err(Error::Guard {
            what: "strong coloring sweep",
            limit: COLORING_ORACLE_LIMIT,
            actual: s,
        });
    }
    let rep = |c: usize| &dec.gammas[m.class_members[c][0]];
    let anti: Vec<Vec<bool>> = (0..s)
        .map(|a| {
            (0..s)
                .map(|b| a != b && antipodal(rep(a), rep(b)))
                .collect()
        })
        .collect();
    let touches: Vec<Vec<bool>> = dec
        .separator
        .iter()
        .map(|v| {
            (0..s)
                .map(|c| m.class_members[c].iter().any(|&i| dec.gammas[i].touches(v)))
                .collect()
        })
        .collect();
    let mut triples = Vec::new();
    for a in 0..s {
        for b in a + 1..s {
            for c in b + 1..s {
                if touches.iter().any(|t| t[a] && t[b] && t[c]) {
                    triples.push((a, b, c));
                }
            }
        }
    }
    if s == 0 {
        return Ok(Some(vec![]));
    }
    let mut f = vec![0usize; s];
    loop {
        let proper = (0..s).all(|a| (a + 1..s).all(|b| !anti[a][b] || f[a] != f[b]));
        let triples_ok = triples
            .iter()
            .all(|&(a, b, c)| f[a] == f[b] || f[b] == f[c] || f[a] == f[c]);
        if proper && triples_ok {
            return Ok(Some(f.iter().map(|c| c + 1).collect()));
        }
        if !next_rgs(&mut f) {
            return Ok(None);
        }
    }
}

/// Advances a restricted growth string (`f[0] = 0`, `f[i] <= 1 + max f[..i]`).
fn next_rgs(f: &mut [usize]) -> bool {
    for i in (1..f.len()).rev() {
        let cap = f[..i].iter().max().copied().unwrap_or(0) + 1;
        if f[i] < cap {
            f[i] += 1;
            for x in &mut f[i + 1..] {
                *x = 0;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prufer_round_trip_counts() {
        let mut count = 0;
        let k = 4;
        for a in 0..k {
            for b in 0..k {
                let e = prufer_decode(&[a, b], k);
                assert_eq!(e.len(), 3);
                let t = CliqueTree::new(vec![Default::default(); k], e);
                assert!(t.is_tree());
                count += 1;
            }
        }
        assert_eq!(count, 16);
    }

    #[test]
    fn restricted_growth_strings_count_set_partitions() {
        let bell = [1, 1, 2, 5, 15, 52];
        for (n, &b) in bell.iter().enumerate().skip(1) {
            let mut f = vec![0; n];
            let mut count = 1;
            while next_rgs(&mut f) {
                count += 1;
            }
            assert_eq!(count, b);
        }
    }

    #[test]
    fn single_clique() {
        let t = oracle_clique_path_tree(&Graph::complete(3))
            .unwrap()
            .unwrap();
        assert_eq!(t.len(), 1);
    }
}
