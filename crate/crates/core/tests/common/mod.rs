#![allow(dead_code)]

use pathgraph_core::{Graph, VertexSet};

pub fn running_example() -> Graph {
    let e = [
        (0, 1),
        (0, 2),
        (1, 2),
        (1, 4),
        (2, 4),
        (2, 3),
        (3, 4),
        (1, 6),
        (4, 6),
        (1, 5),
        (5, 6),
        (4, 7),
        (6, 7),
    ];
    Graph::from_edges(8, &e)
        .unwrap()
        .with_labels("abcdefgh".chars().map(String::from).collect())
        .unwrap()
}

/// Vertex set from letters `a..h`.
pub fn set(letters: &str) -> VertexSet {
    letters.bytes().map(|b| (b - b'a') as usize).collect()
}

pub fn sets(list: &[&str]) -> Vec<VertexSet> {
    list.iter().map(|s| set(s)).collect()
}

/// A clique `Q = {0, .., q-1}` with one gamma per entry of `gammas`. The
/// first trace of a gamma is its top trace and must contain the others;
/// every trace must be a proper subset of `Q`. Gamma `i` gets its vertices
/// after those of gamma `i - 1`, so gamma order is preserved.
pub fn from_traces(q: usize, gammas: &[&[&[usize]]]) -> Graph {
    let total: usize = q + gammas.iter().map(|t| t.len()).sum::<usize>();
    let mut g = Graph::new(total);
    for a in 0..q {
        for b in a + 1..q {
            g.add_edge(a, b).unwrap();
        }
    }
    let mut next = q;
    for traces in gammas {
        let top = next;
        next += 1;
        for &v in traces[0] {
            g.add_edge(top, v).unwrap();
        }
        for t in &traces[1..] {
            assert!(t.iter().all(|v| traces[0].contains(v)));
            let x = next;
            next += 1;
            g.add_edge(x, top).unwrap();
            for &v in *t {
                g.add_edge(x, v).unwrap();
            }
        }
    }
    g
}
