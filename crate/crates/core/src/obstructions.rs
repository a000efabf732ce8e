//! The catalogue of 2-edge-colored obstructions, conversion of refutations
//! into embedded obstructions, and a small colored subgraph matcher.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::attachedness::AttachednessGraph;
use crate::coloring::{full_antipodal_triple, IntraWitness, Member, Refutation, Skeleton};
use crate::error::{Error, Result};
use crate::graph::{EdgeColor, EdgeColoredGraph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "w0")]
    W0,
    #[serde(rename = "w1")]
    W1,
    #[serde(rename = "f")]
    F,
    #[serde(rename = "ftilde")]
    Ftilde,
    #[serde(rename = "df")]
    Df,
    #[serde(rename = "full_antipodal_triangle")]
    FullTriangle,
}

impl Family {
    /// Wheels with zero or one antipodal spoke, and fans.
    pub const F0: [Family; 3] = [Family::W0, Family::W1, Family::F];
    pub const ALL: [Family; 5] = [
        Family::W0,
        Family::W1,
        Family::F,
        Family::Ftilde,
        Family::Df,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::W0 => "w0",
            Family::W1 => "w1",
            Family::F => "f",
            Family::Ftilde => "ftilde",
            Family::Df => "df",
            Family::FullTriangle => "full_antipodal_triangle",
        }
    }

    /// Smallest admissible order parameter.
    pub fn min_order(self) -> usize {
        match self {
            Family::W0 | Family::W1 | Family::FullTriangle => 1,
            Family::F | Family::Ftilde | Family::Df => 2,
        }
    }

    /// Vertex count of the member with the given order parameter.
    pub fn vertex_count(self, order: usize) -> usize {
        match self {
            Family::W0 | Family::W1 => 2 * order + 2,
            Family::F | Family::Ftilde | Family::Df => 2 * order + 1,
            Family::FullTriangle => 3,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "w0" => Ok(Family::W0),
            "w1" => Ok(Family::W1),
            "f" => Ok(Family::F),
            "ftilde" => Ok(Family::Ftilde),
            "df" => Ok(Family::Df),
            "full_antipodal_triangle" | "full" => Ok(Family::FullTriangle),
            other => Err(Error::input(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObstructionPattern {
    pub family: Family,
    /// `k` for wheels, `n` for fans.
    pub order: usize,
    pub pattern: EdgeColoredGraph,
}

/// Vertex numbering puts hubs last.
///
/// * `W0`, `W1` of order `k`: rim `0..=2k` in cyclic order, hub `2k+1`; in
///   `W1` the spoke to rim vertex `0` is antipodal.
/// * `F`, `Ftilde` of order `n`: antipodal path `0..2n`, hub `2n` antipodal
///   to both path ends and dominating the interior; `Ftilde` also joins the
///   path ends antipodally.
/// * `Df` of order `n`: antipodal cycle `2n, 2n-1, 0, 1, ..., 2n-2`; hub
///   `2n` dominates `0..=2n-3` and hub `2n-1` dominates `1..=2n-2`.
pub fn build_family(family: Family, order: usize) -> Result<ObstructionPattern> {
    if order < family.min_order() {
        return Err(Error::input(format!(
            "{} needs order at least {}, got {order}",
            family.name(),
            family.min_order()
        )));
    }
    let n = family.vertex_count(order);
    let mut p = EdgeColoredGraph::new(n);
    let (a, d) = (EdgeColor::Antipodal, EdgeColor::Dominance);
    match family {
        Family::W0 | Family::W1 => {
            let rim = 2 * order + 1;
            let hub = rim;
            for i in 0..rim {
                p.add_edge(i, (i + 1) % rim, a)?;
                let spoke = if family == Family::W1 && i == 0 { a } else { d };
                p.add_edge(hub, i, spoke)?;
            }
        }
        Family::F | Family::Ftilde => {
            let hub = 2 * order;
            for i in 0..hub - 1 {
                p.add_edge(i, i + 1, a)?;
            }
            p.add_edge(hub, 0, a)?;
            p.add_edge(hub, hub - 1, a)?;
            for j in 1..hub - 1 {
                p.add_edge(hub, j, d)?;
            }
            if family == Family::Ftilde {
                p.add_edge(0, hub - 1, a)?;
            }
        }
        Family::Df => {
            let (g0, g1) = (2 * order, 2 * order - 1);
            let last = 2 * order - 2;
            for i in 0..last {
                p.add_edge(i, i + 1, a)?;
            }
            p.add_edge(g0, g1, a)?;
            p.add_edge(g1, 0, a)?;
            p.add_edge(last, g0, a)?;
            for j in 0..last {
                p.add_edge(g0, j, d)?;
            }
            for j in 1..=last {
                p.add_edge(g1, j, d)?;
            }
        }
        Family::FullTriangle => {
            p.add_edge(0, 1, a)?;
            p.add_edge(1, 2, a)?;
            p.add_edge(0, 2, a)?;
        }
    }
    Ok(ObstructionPattern {
        family,
        order,
        pattern: p,
    })
}

/// A pattern mapped into an attachedness graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Obstruction {
    pub pattern: ObstructionPattern,
    /// Class of the attachedness graph per pattern vertex.
    pub embedding: Vec<usize>,
    pub separator: VertexSet,
    /// Common separator vertex of a full triangle.
    pub witness: Option<usize>,
}

impl Obstruction {
    pub fn family(&self) -> Family {
        self.pattern.family
    }

    fn new(
        m: &AttachednessGraph,
        family: Family,
        order: usize,
        embedding: Vec<usize>,
    ) -> Result<Self> {
        Ok(Obstruction {
            pattern: build_family(family, order)?,
            embedding,
            separator: m.separator.clone(),
            witness: None,
        })
    }
}

/// Wheel on an odd rim; with `W1` the first rim vertex carries the
/// antipodal spoke.
fn wheel(
    m: &AttachednessGraph,
    family: Family,
    rim: Vec<usize>,
    hub: usize,
) -> Result<Obstruction> {
    let order = (rim.len() - 1) / 2;
    let mut emb = rim;
    emb.push(hub);
    Obstruction::new(m, family, order, emb)
}

/// Fan over an antipodal path of even length `2n` with the given hub.
fn fan(m: &AttachednessGraph, path: Vec<usize>, hub: usize) -> Result<Obstruction> {
    let order = path.len() / 2;
    let family = if m.is_antipodal(path[0], path[path.len() - 1]) {
        Family::Ftilde
    } else {
        Family::F
    };
    let mut emb = path;
    emb.push(hub);
    Obstruction::new(m, family, order, emb)
}

/// Double fan from the cycle `g0, g1, g2, ..., g2n`.
fn double_fan(m: &AttachednessGraph, cycle: &[usize]) -> Result<Obstruction> {
    let order = (cycle.len() - 1) / 2;
    let mut emb: Vec<usize> = cycle[2..].to_vec();
    emb.push(cycle[1]);
    emb.push(cycle[0]);
    Obstruction::new(m, Family::Df, order, emb)
}

/// Classes outside `member` antipodal to both `theta` and `hub`.
fn attackers(
    m: &AttachednessGraph,
    s: &Skeleton,
    member: Member,
    theta: usize,
    hub: usize,
) -> Vec<usize> {
    m.antipodal_neighbors(theta)
        .filter(|&x| s.member_of(x) != Some(member) && m.is_antipodal(x, hub))
        .collect()
}

fn missing_attacker(theta: usize) -> Error {
    Error::Invariant(format!("no attacker for the conflict endpoint {theta}"))
}

/// Turns a refutation into an obstruction embedded as a colored subgraph.
pub fn refutation_to_obstruction(
    m: &AttachednessGraph,
    s: &Skeleton,
    r: &Refutation,
) -> Result<Obstruction> {
    let o = match r {
        Refutation::FullAntipodalTriple { classes, witness } => Obstruction {
            pattern: build_family(Family::FullTriangle, 1)?,
            embedding: classes.to_vec(),
            separator: m.separator.clone(),
            witness: Some(*witness),
        },
        Refutation::BadTriple(t) => {
            let (i, j) = t.pair;
            let (ui, uj) = (s.hub(i), s.hub(j));
            if m.is_antipodal(t.gamma_i, t.gamma_j) {
                wheel(m, Family::W1, vec![t.gamma_j, t.gamma, t.gamma_i], ui)?
            } else {
                double_fan(m, &[uj, ui, t.gamma_j, t.gamma, t.gamma_i])?
            }
        }
        Refutation::IntraNot2Colorable { member, witness } => {
            let first_index = member.indices()[0];
            match witness {
                IntraWitness::OddCycle(cycle) => {
                    wheel(m, Family::W0, cycle.clone(), s.hub(first_index))?
                }
                IntraWitness::ConflictPath { path, end_colors } => {
                    let (c1, c2) = *end_colors;
                    let (first, last) = (path[0], path[path.len() - 1]);
                    if c1 == c2 {
                        let hub = s.hub(c1);
                        let a1 = attackers(m, s, *member, first, hub);
                        let a2 = attackers(m, s, *member, last, hub);
                        if let Some(&common) = a1.iter().find(|x| a2.contains(x)) {
                            let mut rim = vec![common];
                            rim.extend(path);
                            wheel(m, Family::W1, rim, hub)?
                        } else {
                            let alpha = *a1.first().ok_or_else(|| missing_attacker(first))?;
                            let beta = *a2.first().ok_or_else(|| missing_attacker(last))?;
                            let mut full = vec![alpha];
                            full.extend(path);
                            full.push(beta);
                            fan(m, full, hub)?
                        }
                    } else {
                        let (h1, h2) = (s.hub(c1), s.hub(c2));
                        let in_single = |k: usize, theta: usize, hub: usize| {
                            m.antipodal_neighbors(theta).find(|&x| {
                                s.member_of(x) == Some(Member::Single(k)) && m.is_antipodal(x, hub)
                            })
                        };
                        let alpha =
                            in_single(c2, first, h1).ok_or_else(|| missing_attacker(first))?;
                        let beta = in_single(c1, last, h2).ok_or_else(|| missing_attacker(last))?;
                        let mut cycle = vec![h2, h1, alpha];
                        cycle.extend(path);
                        cycle.push(beta);
                        double_fan(m, &cycle)?
                    }
                }
            }
        }
    };
    if !verify_obstruction(m, &o) {
        return Err(Error::Invariant(format!(
            "constructed {} obstruction does not embed: {:?}",
            o.family().name(),
            o.embedding
        )));
    }
    Ok(o)
}

/// Checks that the embedding is injective and color-preserving on pattern
/// edges, and that a full triangle's witness lies in all three traces.
pub fn verify_obstruction(m: &AttachednessGraph, o: &Obstruction) -> bool {
    let emb = &o.embedding;
    if emb.len() != o.pattern.pattern.n()
        || emb.iter().any(|&c| c >= m.len())
        || emb.iter().collect::<BTreeSet<_>>().len() != emb.len()
        || o.separator != m.separator
    {
        return false;
    }
    let edges_ok = o
        .pattern
        .pattern
        .edges()
        .all(|(u, v, c)| m.edges.color(emb[u], emb[v]) == Some(c));
    let witness_ok = match (o.family(), o.witness) {
        (Family::FullTriangle, Some(w)) => m
            .neighbor_map
            .get(&w)
            .is_some_and(|n| emb.iter().all(|&c| n.contains(c))),
        (Family::FullTriangle, None) => false,
        (_, w) => w.is_none(),
    };
    edges_ok && witness_ok
}

/// Additionally requires pattern non-edges to map to non-edges.
pub fn is_induced_embedding(m: &AttachednessGraph, o: &Obstruction) -> bool {
    let emb = &o.embedding;
    verify_obstruction(m, o)
        && (0..emb.len()).all(|u| {
            (u + 1..emb.len()).all(|v| {
                o.pattern.pattern.color(u, v).is_some() || m.edges.color(emb[u], emb[v]).is_none()
            })
        })
}

/// Host size above which [`find_colored`] refuses to search.
pub const MATCH_LIMIT: usize = 12;

/// Color-preserving embedding of `p` into `host`; with `induced`, pattern
/// non-edges must map to non-edges.
pub fn find_colored(
    host: &EdgeColoredGraph,
    p: &ObstructionPattern,
    induced: bool,
) -> Result<Option<Vec<usize>>> {
    find_colored_within(host, p, induced, MATCH_LIMIT)
}

pub(crate) fn find_colored_within(
    host: &EdgeColoredGraph,
    p: &ObstructionPattern,
    induced: bool,
    limit: usize,
) -> Result<Option<Vec<usize>>> {
    if host.n() > limit {
        return Err(Error::Guard {
            what: "colored subgraph search",
            limit,
            actual: host.n(),
        });
    }
    let pat = &p.pattern;
    if pat.n() > host.n() {
        return Ok(None);
    }
    let order = search_order(pat);
    let mut map = vec![usize::MAX; pat.n()];
    let mut used = vec![false; host.n()];
    Ok(extend(host, pat, &order, 0, induced, &mut map, &mut used).then_some(map))
}

/// Breadth-first pattern order starting from the highest-degree vertex.
fn search_order(pat: &EdgeColoredGraph) -> Vec<usize> {
    let n = pat.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let start = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (pat.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &y in pat.neighbors(x) {
                if !placed[y] {
                    placed[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

fn extend(
    host: &EdgeColoredGraph,
    pat: &EdgeColoredGraph,
    order: &[usize],
    depth: usize,
    induced: bool,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&pv) = order.get(depth) else {
        return true;
    };
    for hv in 0..host.n() {
        if used[hv] || host.degree(hv) < pat.degree(pv) {
            continue;
        }
        let consistent = order[..depth].iter().all(|&q| {
            let want = pat.color(pv, q);
            let have = host.color(hv, map[q]);
            match want {
                Some(_) => want == have,
                None => !induced || have.is_none(),
            }
        });
        if !consistent {
            continue;
        }
        map[pv] = hv;
        used[hv] = true;
        if extend(host, pat, order, depth + 1, induced, map, used) {
            return true;
        }
        used[hv] = false;
        map[pv] = usize::MAX;
    }
    false
}

/// Members of `families` in increasing order that fit in a host of `n`
/// vertices.
pub fn patterns_up_to(families: &[Family], n: usize) -> Vec<ObstructionPattern> {
    let mut out = Vec::new();
    for &f in families {
        let mut order = f.min_order();
        while f.vertex_count(order) <= n {
            out.push(build_family(f, order).expect("admissible order"));
            order += 1;
        }
    }
    out.sort_by_key(|p| (p.pattern.n(), p.family));
    out
}

/// First full antipodal triple over all classes, as an obstruction.
pub fn find_full_triangle(m: &AttachednessGraph) -> Option<Obstruction> {
    let all: Vec<usize> = m.classes().collect();
    full_antipodal_triple(m, &all).map(|(classes, w)| Obstruction {
        pattern: build_family(Family::FullTriangle, 1).expect("triangle"),
        embedding: classes.to_vec(),
        separator: m.separator.clone(),
        witness: Some(w),
    })
}

/// Smallest member of `families` occurring in `m`, induced or as a subgraph.
pub fn find_family_member(
    m: &AttachednessGraph,
    families: &[Family],
    induced: bool,
) -> Result<Option<Obstruction>> {
    for p in patterns_up_to(families, m.len()) {
        if let Some(embedding) = find_colored(&m.edges, &p, induced)? {
            return Ok(Some(Obstruction {
                pattern: p,
                embedding,
                separator: m.separator.clone(),
                witness: None,
            }));
        }
    }
    Ok(None)
}

/// An induced member of the full catalogue inside the classes of `o`. A full
/// triangle is first extended by a class whose only trace is the witness
/// vertex, which exists when the graph carries pendant copies.
pub fn induced_member_near(m: &AttachednessGraph, o: &Obstruction) -> Result<Option<Obstruction>> {
    let mut set: Vec<usize> = o.embedding.clone();
    if let Some(w) = o.witness {
        let only_w = VertexSet::singleton(w);
        if let Some(c) = m
            .classes()
            .find(|&c| !set.contains(&c) && m.gammas[c].traces == [only_w.clone()])
        {
            set.push(c);
        }
    }
    let set = VertexSet::from_unsorted(set);
    let host = m.edges.induced(&set);
    let ids = set.as_slice();
    for p in patterns_up_to(&Family::ALL, host.n()) {
        if let Some(local) = find_colored_within(&host, &p, true, 4 * MATCH_LIMIT)? {
            let found = Obstruction {
                pattern: p,
                embedding: local.into_iter().map(|x| ids[x]).collect(),
                separator: m.separator.clone(),
                witness: None,
            };
            debug_assert!(is_induced_embedding(m, &found));
            return Ok(Some(found));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(p: &ObstructionPattern, c: EdgeColor) -> usize {
        p.pattern.edges_of(c).count()
    }

    #[test]
    fn smallest_wheel() {
        let p = build_family(Family::W0, 1).unwrap();
        assert_eq!(p.pattern.n(), 4);
        assert_eq!(count(&p, EdgeColor::Antipodal), 3);
        assert_eq!(count(&p, EdgeColor::Dominance), 3);
        let w1 = build_family(Family::W1, 1).unwrap();
        assert_eq!(count(&w1, EdgeColor::Antipodal), 4);
        assert_eq!(w1.pattern.color(3, 0), Some(EdgeColor::Antipodal));
    }

    #[test]
    fn smallest_fan() {
        let p = build_family(Family::F, 2).unwrap();
        assert_eq!(p.pattern.n(), 5);
        assert_eq!(count(&p, EdgeColor::Antipodal), 5);
        let dom: Vec<_> = p.pattern.edges_of(EdgeColor::Dominance).collect();
        assert_eq!(dom, vec![(1, 4), (2, 4)]);
        let t = build_family(Family::Ftilde, 2).unwrap();
        assert_eq!(t.pattern.color(0, 3), Some(EdgeColor::Antipodal));
    }

    #[test]
    fn smallest_double_fan() {
        let p = build_family(Family::Df, 2).unwrap();
        assert_eq!(p.pattern.n(), 5);
        assert_eq!(count(&p, EdgeColor::Antipodal), 5);
        let dom: BTreeSet<_> = p.pattern.edges_of(EdgeColor::Dominance).collect();
        // g0 = 4, g1 = 3, g2 = 0, g3 = 1, g4 = 2
        assert_eq!(dom, BTreeSet::from([(0, 4), (1, 4), (1, 3), (2, 3)]));
    }

    #[test]
    fn invalid_orders_are_rejected() {
        assert!(build_family(Family::W0, 0).is_err());
        assert!(build_family(Family::F, 1).is_err());
        assert!(build_family(Family::Df, 1).is_err());
    }

    #[test]
    fn uncolored_shapes() {
        for k in 1..4 {
            let w = build_family(Family::W0, k).unwrap().pattern.shape();
            let hub = 2 * k + 1;
            assert_eq!(w.degree(hub), 2 * k + 1);
            assert!((0..hub).all(|v| w.degree(v) == 3));
        }
        for n in 2..5 {
            let f = build_family(Family::F, n).unwrap().pattern.shape();
            assert_eq!(f.degree(2 * n), 2 * n);
            assert_eq!(f.edge_count(), 2 * n + 2 * n - 1);
            let d = build_family(Family::Df, n).unwrap().pattern.shape();
            assert_eq!(d.degree(2 * n), 2 * n);
            assert_eq!(d.degree(2 * n - 1), 2 * n);
        }
    }

    #[test]
    fn matcher_respects_colors_and_inducedness() {
        let w0 = build_family(Family::W0, 1).unwrap();
        assert_eq!(
            find_colored(&w0.pattern, &w0, true).unwrap(),
            Some(vec![0, 1, 2, 3])
        );
        let w1 = build_family(Family::W1, 1).unwrap();
        assert_eq!(find_colored(&w1.pattern, &w0, false).unwrap(), None);
        let mut bip = EdgeColoredGraph::new(4);
        for (u, v) in [(0, 1), (1, 2), (2, 3), (3, 0)] {
            bip.add_edge(u, v, EdgeColor::Antipodal).unwrap();
        }
        assert_eq!(find_colored(&bip, &w0, false).unwrap(), None);
        assert_eq!(
            find_colored(&EdgeColoredGraph::new(0), &w0, true).unwrap(),
            None
        );
        let too_big = EdgeColoredGraph::new(MATCH_LIMIT + 1);
        assert!(matches!(
            find_colored(&too_big, &w0, true),
            Err(Error::Guard { .. })
        ));
    }
}
