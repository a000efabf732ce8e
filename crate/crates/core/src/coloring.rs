//! Upper bounds, the skeleton partition, and weak colorings with their
//! refutations.
//!
//! Skeleton members and colors are 1-based, matching `u_1, ..., u_ℓ`.
//! Everything else (classes, vertices) is 0-based.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::attachedness::AttachednessGraph;
use crate::error::{Error, Result};

/// A member of the skeleton: `D_i` or `D_{i,j}` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Member {
    Single(usize),
    Pair(usize, usize),
}

impl Member {
    /// The two colors a member may use.
    pub fn palette(self, ell: usize) -> (usize, usize) {
        match self {
            Member::Single(i) => (i, ell + 1),
            Member::Pair(i, j) => (i, j),
        }
    }

    pub fn indices(self) -> Vec<usize> {
        match self {
            Member::Single(i) => vec![i],
            Member::Pair(i, j) => vec![i, j],
        }
    }
}

impl std::fmt::Display for Member {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Member::Single(i) => write!(f, "D_{i}"),
            Member::Pair(i, j) => write!(f, "D_{i},{j}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Skeleton {
    /// `upper[i - 1]` is the class `u_i`.
    pub upper: Vec<usize>,
    /// `singles[i - 1]` is `D_i`.
    pub singles: Vec<Vec<usize>>,
    pub pairs: BTreeMap<(usize, usize), Vec<usize>>,
    /// Classes below three or more upper bounds.
    pub unassigned: Vec<usize>,
    membership: Vec<Option<Member>>,
}

impl Skeleton {
    pub fn ell(&self) -> usize {
        self.upper.len()
    }

    pub fn member_of(&self, class: usize) -> Option<Member> {
        self.membership.get(class).copied().flatten()
    }

    pub fn member(&self, m: Member) -> &[usize] {
        match m {
            Member::Single(i) => &self.singles[i - 1],
            Member::Pair(i, j) => self.pairs.get(&(i, j)).map_or(&[], Vec::as_slice),
        }
    }

    /// Nonempty members: every `D_i`, then the populated `D_{i,j}`.
    pub fn members(&self) -> Vec<Member> {
        (1..=self.ell())
            .map(Member::Single)
            .chain(self.pairs.keys().map(|&(i, j)| Member::Pair(i, j)))
            .collect()
    }

    /// `u_i` for a 1-based `i`.
    pub fn hub(&self, i: usize) -> usize {
        self.upper[i - 1]
    }

    /// 1-based index of an upper bound.
    pub fn upper_index(&self, class: usize) -> Option<usize> {
        self.upper.iter().position(|&u| u == class).map(|p| p + 1)
    }
}

/// Classes with no strict dominator, by class index.
pub fn upper_bounds(m: &AttachednessGraph) -> Vec<usize> {
    let dominated: BTreeSet<usize> = m.dominance_order.iter().map(|&(a, _)| a).collect();
    m.classes().filter(|c| !dominated.contains(c)).collect()
}

/// 1-based indices of the upper bounds lying above (or equal to) `class`.
fn bounds_of(m: &AttachednessGraph, upper: &[usize], class: usize) -> Vec<usize> {
    upper
        .iter()
        .enumerate()
        .filter(|&(_, &u)| u == class || m.below(class, u))
        .map(|(i, _)| i + 1)
        .collect()
}

/// First pairwise antipodal triple inside `restrict` whose members share a
/// separator vertex, with the smallest such vertex.
pub fn full_antipodal_triple(
    m: &AttachednessGraph,
    restrict: &[usize],
) -> Option<([usize; 3], usize)> {
    let mut set: Vec<usize> = restrict.to_vec();
    set.sort_unstable();
    set.dedup();
    for (x, &a) in set.iter().enumerate() {
        for (y, &b) in set.iter().enumerate().skip(x + 1) {
            if !m.is_antipodal(a, b) {
                continue;
            }
            for &c in &set[y + 1..] {
                if m.is_antipodal(a, c) && m.is_antipodal(b, c) {
                    if let Some(v) = m.is_neighboring_set(&[a, b, c]) {
                        return Some(([a, b, c], v));
                    }
                }
            }
        }
    }
    None
}

pub fn skeleton(m: &AttachednessGraph) -> Skeleton {
    let upper = upper_bounds(m);
    let ell = upper.len();
    let mut singles = vec![Vec::new(); ell];
    let mut pairs: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    let mut unassigned = Vec::new();
    let mut membership = vec![None; m.len()];
    for c in m.classes() {
        match bounds_of(m, &upper, c).as_slice() {
            [i] => {
                singles[i - 1].push(c);
                membership[c] = Some(Member::Single(*i));
            }
            [i, j] => {
                pairs.entry((*i, *j)).or_default().push(c);
                membership[c] = Some(Member::Pair(*i, *j));
            }
            _ => unassigned.push(c),
        }
    }
    Skeleton {
        upper,
        singles,
        pairs,
        unassigned,
        membership,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CrossIntra {
    pub cross: Vec<(usize, usize)>,
    pub intra: Vec<(usize, usize)>,
    /// Endpoints of cross edges.
    pub cross_vertices: Vec<usize>,
}

fn require_partition(s: &Skeleton) -> Result<()> {
    if s.unassigned.is_empty() {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "classes {:?} lie below three or more upper bounds",
            s.unassigned
        )))
    }
}

/// Classifies every antipodal edge by whether its ends share a member.
pub fn cross_intra_split(m: &AttachednessGraph, s: &Skeleton) -> Result<CrossIntra> {
    require_partition(s)?;
    let mut out = CrossIntra::default();
    let mut endpoints = BTreeSet::new();
    for (a, b) in m.edges.edges_of(crate::graph::EdgeColor::Antipodal) {
        if s.member_of(a) == s.member_of(b) {
            out.intra.push((a, b));
        } else {
            out.cross.push((a, b));
            endpoints.insert(a);
            endpoints.insert(b);
        }
    }
    out.cross_vertices = endpoints.into_iter().collect();
    Ok(out)
}

/// `h_Q`: color `i` on every cross vertex of `D_i`.
pub fn base_coloring_hq(m: &AttachednessGraph, s: &Skeleton) -> Result<BTreeMap<usize, usize>> {
    let split = cross_intra_split(m, s)?;
    let h: BTreeMap<usize, usize> = split
        .cross_vertices
        .iter()
        .filter_map(|&c| match s.member_of(c) {
            Some(Member::Single(i)) => Some((c, i)),
            _ => None,
        })
        .collect();
    check_proper(&split.cross, &h, "h_Q")?;
    Ok(h)
}

fn check_proper(edges: &[(usize, usize)], f: &BTreeMap<usize, usize>, what: &str) -> Result<()> {
    for &(a, b) in edges {
        if let (Some(x), Some(y)) = (f.get(&a), f.get(&b)) {
            if x == y {
                return Err(Error::Invariant(format!(
                    "{what} gives color {x} to both ends of antipodal edge {a}-{b}"
                )));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadTriple {
    /// `(i, j)` with `i < j`.
    pub pair: (usize, usize),
    /// In `D_{i,j}`.
    pub gamma: usize,
    /// In `D_i`, antipodal to `gamma`.
    pub gamma_i: usize,
    /// In `D_j`, antipodal to `gamma`.
    pub gamma_j: usize,
}

pub fn find_bad_triple(m: &AttachednessGraph, s: &Skeleton) -> Result<Option<BadTriple>> {
    require_partition(s)?;
    for (&(i, j), members) in &s.pairs {
        for &gamma in members {
            let nbrs: Vec<usize> = m.antipodal_neighbors(gamma).collect();
            let in_single = |k: usize| {
                nbrs.iter()
                    .copied()
                    .find(|&x| s.member_of(x) == Some(Member::Single(k)))
            };
            if let (Some(gamma_i), Some(gamma_j)) = (in_single(i), in_single(j)) {
                return Ok(Some(BadTriple {
                    pair: (i, j),
                    gamma,
                    gamma_i,
                    gamma_j,
                }));
            }
        }
    }
    Ok(None)
}

/// Extends `h_Q` to the cross vertices of the `D_{i,j}`: a neighbor in `D_k`
/// forces the other index, and an unforced vertex takes `i`.
pub fn cross_extension(
    m: &AttachednessGraph,
    s: &Skeleton,
    h: &BTreeMap<usize, usize>,
) -> Result<BTreeMap<usize, usize>> {
    let split = cross_intra_split(m, s)?;
    let mut f = h.clone();
    for &c in &split.cross_vertices {
        let Some(Member::Pair(i, j)) = s.member_of(c) else {
            continue;
        };
        let mut forced = BTreeSet::new();
        for x in m.antipodal_neighbors(c) {
            match s.member_of(x) {
                Some(Member::Single(k)) if k == i => {
                    forced.insert(j);
                }
                Some(Member::Single(k)) if k == j => {
                    forced.insert(i);
                }
                _ => {}
            }
        }
        let color = match forced.len() {
            0 => i,
            1 => *forced.iter().next().unwrap(),
            _ => {
                return Err(Error::Invariant(format!(
                    "class {c} of D_{i},{j} is forced to both colors"
                )))
            }
        };
        f.insert(c, color);
    }
    check_proper(&split.cross, &f, "the cross coloring")?;
    Ok(f)
}

/// A weak coloring `f`, stored as `colors[class]` in `1..=ell + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakColoring {
    pub ell: usize,
    pub colors: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntraWitness {
    /// Odd antipodal cycle inside the member, in cyclic order.
    OddCycle(Vec<usize>),
    /// Antipodal path inside the member between two precolored classes whose
    /// colors disagree with the path's parity.
    ConflictPath {
        path: Vec<usize>,
        end_colors: (usize, usize),
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Refutation {
    FullAntipodalTriple {
        classes: [usize; 3],
        witness: usize,
    },
    BadTriple(BadTriple),
    IntraNot2Colorable {
        member: Member,
        witness: IntraWitness,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RefutationKind {
    FullAntipodalTriple,
    BadTriple,
    IntraNot2Colorable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeakOutcome {
    Colorable(WeakColoring),
    Refuted(Refutation),
}

impl WeakOutcome {
    pub fn is_colorable(&self) -> bool {
        matches!(self, WeakOutcome::Colorable(_))
    }
}

impl Refutation {
    pub fn kind(&self) -> RefutationKind {
        match self {
            Refutation::FullAntipodalTriple { .. } => RefutationKind::FullAntipodalTriple,
            Refutation::BadTriple(_) => RefutationKind::BadTriple,
            Refutation::IntraNot2Colorable { .. } => RefutationKind::IntraNot2Colorable,
        }
    }

    /// Re-derives the skeleton and cross coloring from `m` and checks the
    /// witness against them.
    pub fn verify(&self, m: &AttachednessGraph) -> bool {
        match self {
            Refutation::FullAntipodalTriple { classes, witness } => {
                let [a, b, c] = *classes;
                a != b
                    && b != c
                    && a != c
                    && classes.iter().all(|&x| x < m.len())
                    && m.is_antipodal(a, b)
                    && m.is_antipodal(b, c)
                    && m.is_antipodal(a, c)
                    && m.neighbor_map
                        .get(witness)
                        .is_some_and(|n| classes.iter().all(|&x| n.contains(x)))
            }
            Refutation::BadTriple(t) => {
                let s = skeleton(m);
                let (i, j) = t.pair;
                i < j
                    && s.member_of(t.gamma) == Some(Member::Pair(i, j))
                    && s.member_of(t.gamma_i) == Some(Member::Single(i))
                    && s.member_of(t.gamma_j) == Some(Member::Single(j))
                    && m.is_antipodal(t.gamma, t.gamma_i)
                    && m.is_antipodal(t.gamma, t.gamma_j)
            }
            Refutation::IntraNot2Colorable { member, witness } => {
                let s = skeleton(m);
                let Ok(pre) = precoloring(m, &s) else {
                    return false;
                };
                let inside = |c: &usize| s.member_of(*c) == Some(*member);
                match witness {
                    IntraWitness::OddCycle(cycle) => {
                        let k = cycle.len();
                        k >= 3
                            && k % 2 == 1
                            && distinct(cycle)
                            && cycle.iter().all(inside)
                            && (0..k).all(|x| m.is_antipodal(cycle[x], cycle[(x + 1) % k]))
                    }
                    IntraWitness::ConflictPath { path, end_colors } => {
                        let k = path.len();
                        k >= 2
                            && distinct(path)
                            && path.iter().all(inside)
                            && path.windows(2).all(|w| m.is_antipodal(w[0], w[1]))
                            && pre.get(&path[0]) == Some(&end_colors.0)
                            && pre.get(&path[k - 1]) == Some(&end_colors.1)
                            && ((k - 1) % 2 == 0) != (end_colors.0 == end_colors.1)
                    }
                }
            }
        }
    }
}

fn distinct(xs: &[usize]) -> bool {
    xs.iter().collect::<BTreeSet<_>>().len() == xs.len()
}

/// The cross coloring plus `f(u_i) = i`.
fn precoloring(m: &AttachednessGraph, s: &Skeleton) -> Result<BTreeMap<usize, usize>> {
    let h = base_coloring_hq(m, s)?;
    let mut f = cross_extension(m, s, &h)?;
    for (i, &u) in s.upper.iter().enumerate() {
        if let Some(&c) = f.get(&u) {
            if c != i + 1 {
                return Err(Error::Invariant(format!(
                    "upper bound u_{} received cross color {c}",
                    i + 1
                )));
            }
        }
        f.insert(u, i + 1);
    }
    Ok(f)
}

/// Decides weak colorability, returning either `f` or the first obstacle met
/// by the pipeline: a full triple among the upper bounds, a bad triple, or a
/// member whose precolored antipodal subgraph is not 2-colorable.
pub fn weak_coloring(m: &AttachednessGraph) -> Result<WeakOutcome> {
    let upper = upper_bounds(m);
    if let Some((classes, witness)) = full_antipodal_triple(m, &upper) {
        return Ok(WeakOutcome::Refuted(Refutation::FullAntipodalTriple {
            classes,
            witness,
        }));
    }
    let s = skeleton(m);
    if let Some(&c) = s.unassigned.first() {
        let above: Vec<usize> = bounds_of(m, &s.upper, c)
            .into_iter()
            .map(|i| s.hub(i))
            .collect();
        return match full_antipodal_triple(m, &above) {
            Some((classes, witness)) => Ok(WeakOutcome::Refuted(Refutation::FullAntipodalTriple {
                classes,
                witness,
            })),
            None => Err(Error::Invariant(format!(
                "class {c} has upper bounds {above:?} without a full antipodal triple"
            ))),
        };
    }
    if let Some(t) = find_bad_triple(m, &s)? {
        return Ok(WeakOutcome::Refuted(Refutation::BadTriple(t)));
    }
    let pre = precoloring(m, &s)?;
    let ell = s.ell();
    let mut colors = vec![0; m.len()];
    for member in s.members() {
        match two_color_member(m, s.member(member), &pre, member.palette(ell)) {
            Ok(local) => {
                for (c, col) in local {
                    colors[c] = col;
                }
            }
            Err(witness) => {
                return Ok(WeakOutcome::Refuted(Refutation::IntraNot2Colorable {
                    member,
                    witness,
                }))
            }
        }
    }
    let f = WeakColoring { ell, colors };
    if let Err(e) = check_conditions(m, &s, &f) {
        return Err(Error::Invariant(format!("computed coloring fails {e}")));
    }
    Ok(WeakOutcome::Colorable(f))
}

/// Breadth-first 2-coloring of `H[members]` extending `pre`.
fn two_color_member(
    m: &AttachednessGraph,
    members: &[usize],
    pre: &BTreeMap<usize, usize>,
    (a, b): (usize, usize),
) -> std::result::Result<Vec<(usize, usize)>, IntraWitness> {
    let index: BTreeMap<usize, usize> = members.iter().enumerate().map(|(x, &c)| (c, x)).collect();
    let adj: Vec<Vec<usize>> = members
        .iter()
        .map(|&c| {
            m.antipodal_neighbors(c)
                .filter_map(|d| index.get(&d).copied())
                .collect()
        })
        .collect();
    let k = members.len();
    let other = |c: usize| if c == a { b } else { a };
    let mut side = vec![usize::MAX; k];
    let mut out = Vec::with_capacity(k);
    for start in 0..k {
        if side[start] != usize::MAX {
            continue;
        }
        let comp = bfs_order(&adj, start);
        side[start] = 0;
        for &x in &comp {
            for &y in &adj[x] {
                if side[y] == usize::MAX {
                    side[y] = 1 - side[x];
                }
            }
        }
        let bipartite = comp
            .iter()
            .all(|&x| adj[x].iter().all(|&y| side[x] != side[y]));
        if !bipartite {
            let cycle = shortest_odd_cycle(&adj, &comp);
            return Err(IntraWitness::OddCycle(
                cycle.into_iter().map(|x| members[x]).collect(),
            ));
        }
        let colored: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&x| pre.contains_key(&members[x]))
            .collect();
        if let Some(path) = shortest_conflict(&adj, &colored, |x| pre[&members[x]], &side) {
            let ends = (pre[&members[path[0]]], pre[&members[*path.last().unwrap()]]);
            return Err(IntraWitness::ConflictPath {
                path: path.into_iter().map(|x| members[x]).collect(),
                end_colors: ends,
            });
        }
        let (anchor, anchor_color) = match colored.iter().min() {
            Some(&x) => (x, pre[&members[x]]),
            None => (start, a),
        };
        for &x in &comp {
            let col = if side[x] == side[anchor] {
                anchor_color
            } else {
                other(anchor_color)
            };
            out.push((members[x], col));
        }
    }
    Ok(out)
}

fn bfs_order(adj: &[Vec<usize>], start: usize) -> Vec<usize> {
    let mut seen = vec![false; adj.len()];
    seen[start] = true;
    let mut order = vec![start];
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                order.push(y);
            }
        }
    }
    order
}

fn bfs_tree(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<usize>) {
    let mut dist = vec![usize::MAX; adj.len()];
    let mut parent = vec![usize::MAX; adj.len()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    (dist, parent)
}

fn path_to_root(parent: &[usize], mut x: usize) -> Vec<usize> {
    let mut path = vec![x];
    while parent[x] != usize::MAX {
        x = parent[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Shortest odd cycle within a non-bipartite component.
pub(crate) fn shortest_odd_cycle(adj: &[Vec<usize>], comp: &[usize]) -> Vec<usize> {
    let mut best: Option<Vec<usize>> = None;
    let mut sorted = comp.to_vec();
    sorted.sort_unstable();
    for &root in &sorted {
        let (dist, parent) = bfs_tree(adj, root);
        for &x in &sorted {
            for &y in &adj[x] {
                if x < y && dist[x] == dist[y] && dist[x] != usize::MAX {
                    let px = path_to_root(&parent, x);
                    let py = path_to_root(&parent, y);
                    let common = px.iter().zip(&py).take_while(|(p, q)| p == q).count();
                    let mut cycle: Vec<usize> = px[common - 1..].to_vec();
                    cycle.extend(py[common..].iter().rev());
                    if best.as_ref().is_none_or(|b| cycle.len() < b.len()) {
                        best = Some(cycle);
                    }
                }
            }
        }
    }
    best.expect("non-bipartite component has an odd cycle")
}

/// Shortest path between two precolored vertices whose colors contradict
/// the bipartition.
fn shortest_conflict(
    adj: &[Vec<usize>],
    colored: &[usize],
    color: impl Fn(usize) -> usize,
    side: &[usize],
) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for (x, &p) in colored.iter().enumerate() {
        let mut parent_tree = None;
        for &q in &colored[x + 1..] {
            let same_side = side[p] == side[q];
            if same_side == (color(p) == color(q)) {
                continue;
            }
            let (dist, parent) = parent_tree.get_or_insert_with(|| bfs_tree(adj, p));
            if best.as_ref().is_none_or(|b| dist[q] + 1 < b.len()) {
                best = Some(path_to_root(parent, q));
            }
        }
    }
    best
}

/// Proper on antipodal edges, and every separator vertex sees at most two
/// colors among its classes.
pub fn is_strong_coloring(m: &AttachednessGraph, f: &[usize]) -> bool {
    f.len() == m.len()
        && m.edges
            .edges_of(crate::graph::EdgeColor::Antipodal)
            .all(|(a, b)| f[a] != f[b])
        && m.neighbor_map
            .values()
            .all(|classes| classes.iter().map(|c| f[c]).collect::<BTreeSet<_>>().len() <= 2)
}

/// Same predicate with the triple condition spelled out over all neighboring
/// triples.
pub fn is_strong_coloring_by_triples(m: &AttachednessGraph, f: &[usize]) -> bool {
    if f.len() != m.len()
        || m.edges
            .edges_of(crate::graph::EdgeColor::Antipodal)
            .any(|(a, b)| f[a] == f[b])
    {
        return false;
    }
    let k = m.len();
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let distinct_colors = f[a] != f[b] && f[b] != f[c] && f[a] != f[c];
                if distinct_colors && m.is_neighboring_set(&[a, b, c]).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// Which canonical condition a coloring violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// `f(u_i) = i`
    A,
    /// `f(D_i) ⊆ {i, ℓ+1}`
    B,
    /// `f(D_{i,j}) ⊆ {i, j}`
    C,
    /// classes of `D_i` antipodal to an upper bound get `i`
    D,
    /// classes of `D_{i,j}` antipodal to `D_k` avoid `k`
    E,
    /// proper inside each member
    F,
    /// the skeleton is not a partition, or `f` has the wrong length
    Shape,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Condition::A => "(a)",
            Condition::B => "(b)",
            Condition::C => "(c)",
            Condition::D => "(d)",
            Condition::E => "(e)",
            Condition::F => "(f)",
            Condition::Shape => "the shape check",
        };
        write!(f, "condition {name}")
    }
}

pub fn condition_a(s: &Skeleton, f: &WeakColoring) -> bool {
    s.upper
        .iter()
        .enumerate()
        .all(|(i, &u)| f.colors[u] == i + 1)
}

pub fn condition_b(s: &Skeleton, f: &WeakColoring) -> bool {
    s.singles.iter().enumerate().all(|(x, d)| {
        d.iter()
            .all(|&c| f.colors[c] == x + 1 || f.colors[c] == f.ell + 1)
    })
}

pub fn condition_c(s: &Skeleton, f: &WeakColoring) -> bool {
    s.pairs
        .iter()
        .all(|(&(i, j), d)| d.iter().all(|&c| f.colors[c] == i || f.colors[c] == j))
}

pub fn condition_d(m: &AttachednessGraph, s: &Skeleton, f: &WeakColoring) -> bool {
    s.singles.iter().enumerate().all(|(x, d)| {
        d.iter()
            .all(|&c| !s.upper.iter().any(|&u| m.is_antipodal(c, u)) || f.colors[c] == x + 1)
    })
}

pub fn condition_e(m: &AttachednessGraph, s: &Skeleton, f: &WeakColoring) -> bool {
    s.pairs.iter().all(|(&(i, j), d)| {
        d.iter().all(|&c| {
            [(i, j), (j, i)].iter().all(|&(k, rest)| {
                let hit = s.singles[k - 1].iter().any(|&x| m.is_antipodal(c, x));
                !hit || f.colors[c] == rest
            })
        })
    })
}

pub fn condition_f(m: &AttachednessGraph, s: &Skeleton, f: &WeakColoring) -> bool {
    m.edges
        .edges_of(crate::graph::EdgeColor::Antipodal)
        .all(|(a, b)| s.member_of(a) != s.member_of(b) || f.colors[a] != f.colors[b])
}

/// Checks conditions (a) through (f) in order, reporting the first failure.
pub fn check_conditions(
    m: &AttachednessGraph,
    s: &Skeleton,
    f: &WeakColoring,
) -> std::result::Result<(), Condition> {
    if !s.unassigned.is_empty() || f.colors.len() != m.len() || f.ell != s.ell() {
        return Err(Condition::Shape);
    }
    let checks = [
        (condition_a(s, f), Condition::A),
        (condition_b(s, f), Condition::B),
        (condition_c(s, f), Condition::C),
        (condition_d(m, s, f), Condition::D),
        (condition_e(m, s, f), Condition::E),
        (condition_f(m, s, f), Condition::F),
    ];
    match checks.iter().find(|(ok, _)| !ok) {
        Some(&(_, c)) => Err(c),
        None => Ok(()),
    }
}

/// Whether the antipodal edges form a bipartite graph; otherwise a shortest
/// odd cycle.
pub fn antipodal_odd_cycle(m: &AttachednessGraph) -> Option<Vec<usize>> {
    let adj: Vec<Vec<usize>> = m
        .classes()
        .map(|c| m.antipodal_neighbors(c).collect())
        .collect();
    let mut side = vec![usize::MAX; adj.len()];
    for start in 0..adj.len() {
        if side[start] != usize::MAX {
            continue;
        }
        let comp = bfs_order(&adj, start);
        side[start] = 0;
        for &x in &comp {
            for &y in &adj[x] {
                if side[y] == usize::MAX {
                    side[y] = 1 - side[x];
                }
            }
        }
        if comp
            .iter()
            .any(|&x| adj[x].iter().any(|&y| side[x] == side[y]))
        {
            return Some(shortest_odd_cycle(&adj, &comp));
        }
    }
    None
}
