//! Text formats: edge lists, graph6, JSON verdict documents and DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::attachedness::AttachednessGraph;
use crate::chordal::CliqueTree;
use crate::coloring::{Refutation, Skeleton, WeakOutcome};
use crate::error::{Error, Result};
use crate::generate::HostRealization;
use crate::graph::{EdgeColor, EdgeColoredGraph, Graph, VertexSet};
use crate::obstructions::{Family, Obstruction, ObstructionPattern};
use crate::recognition::{DirectedVerdict, SeparatorAnalysis, Verdict};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Edgelist,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(Format::Edgelist),
            "graph6" => Ok(Format::Graph6),
            _ => Err(Error::input(format!("unknown graph format {s:?}"))),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::Edgelist => parse_edgelist(text),
        Format::Graph6 => parse_graph6(text),
    }
}

/// `p <n>` header (optional), then one `u v` pair per line; `#` starts a
/// comment. Without a header the vertex count is one more than the largest id.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens[0] == "p" {
            if tokens.len() != 2 {
                return Err(Error::input_at(line, "header must read `p <n>`"));
            }
            if declared.is_some() {
                return Err(Error::input_at(line, "repeated header"));
            }
            declared = Some(parse_id(tokens[1], line)?);
            continue;
        }
        if tokens.len() != 2 {
            return Err(Error::input_at(
                line,
                format!("expected two vertex ids, found {:?}", content),
            ));
        }
        let (u, v) = (parse_id(tokens[0], line)?, parse_id(tokens[1], line)?);
        if u == v {
            return Err(Error::input_at(line, format!("self-loop at {u}")));
        }
        if let Some(n) = declared {
            if u.max(v) >= n {
                return Err(Error::input_at(
                    line,
                    format!("vertex {} outside the declared 0..{n}", u.max(v)),
                ));
            }
        }
        edges.push((u, v));
    }
    let n = declared.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, &edges)
}

fn parse_id(token: &str, line: usize) -> Result<usize> {
    match token.parse::<i64>() {
        Ok(x) if x < 0 => Err(Error::input_at(line, format!("negative vertex id {x}"))),
        Ok(x) => usize::try_from(x).map_err(|_| Error::input_at(line, "vertex id too large")),
        Err(_) => Err(Error::input_at(line, format!("not an integer: {token:?}"))),
    }
}

pub fn write_edgelist(g: &Graph) -> String {
    let mut out = format!("p {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// One graph in the standard dense graph6 encoding, with or without the
/// `>>graph6<<` header.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((index, line)) = lines.next() else {
        return Err(Error::input("empty graph6 input"));
    };
    if let Some((extra, _)) = lines.next() {
        return Err(Error::input_at(extra + 1, "only one graph per input"));
    }
    let line_no = index + 1;
    let body = line.trim();
    let body = body.strip_prefix(">>graph6<<").unwrap_or(body);
    let bytes: Vec<u8> = body.bytes().collect();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::input_at(
            line_no,
            format!("byte {b} outside the graph6 range"),
        ));
    }
    let sextet = |b: u8| (b - 63) as u64;
    let (n, rest) = match bytes.as_slice() {
        [126, 126, tail @ ..] if tail.len() >= 6 => (
            tail[..6].iter().fold(0, |acc, &b| acc << 6 | sextet(b)),
            &tail[6..],
        ),
        [126, tail @ ..] if tail.len() >= 3 && tail[0] != 126 => (
            tail[..3].iter().fold(0, |acc, &b| acc << 6 | sextet(b)),
            &tail[3..],
        ),
        [b, tail @ ..] if *b != 126 => (sextet(*b), tail),
        _ => return Err(Error::input_at(line_no, "truncated graph6 size")),
    };
    let n = usize::try_from(n).map_err(|_| Error::input_at(line_no, "graph too large"))?;
    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(Error::input_at(
            line_no,
            format!(
                "expected {} edge bytes for {n} vertices, found {}",
                bits.div_ceil(6),
                rest.len()
            ),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if sextet(rest[k / 6]) >> (5 - k % 6) & 1 == 1 {
                g.add_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    let mut s = String::from_utf8(out).expect("graph6 bytes are ASCII");
    s.push('\n');
    s
}

/// Everything `certify` reports about one graph. Field order is the key
/// order of the JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub input: InputDescriptor,
    pub chordal: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hole: Option<Vec<usize>>,
    pub path_graph: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub directed_path_graph: Option<bool>,
    pub separators: Vec<SeparatorRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub realization: Option<RealizationRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
    pub vertices: usize,
    pub edges: usize,
    pub gplus: bool,
    /// Vertex names, when the graph carries them; ids index into this list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorRecord {
    pub separator: VertexSet,
    /// Vertex set `V_i` of every gamma, in gamma order.
    pub components: Vec<VertexSet>,
    /// Gamma indices of every class of mutually dominating gammas.
    pub classes: Vec<Vec<usize>>,
    pub class_count: usize,
    pub upper: Vec<usize>,
    pub skeleton: SkeletonRecord,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coloring: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub refutation: Option<Refutation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub obstruction: Option<ObstructionRecord>,
    /// An induced catalogue member near the obstruction, when one was sought.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub induced_obstruction: Option<ObstructionRecord>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeletonRecord {
    /// `singles[i - 1]` lists `D_i`.
    pub singles: Vec<Vec<usize>>,
    pub pairs: Vec<PairRecord>,
    pub unassigned: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub classes: Vec<usize>,
}

/// An obstruction as an edge list over pattern vertices plus the class each
/// pattern vertex maps to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionRecord {
    pub kind: Family,
    pub order: usize,
    pub embedding: Vec<usize>,
    pub pattern_edges: Vec<(usize, usize, EdgeColor)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationRecord {
    pub tree: CliqueTree,
    pub host: HostRealization,
}

impl From<&Obstruction> for ObstructionRecord {
    fn from(o: &Obstruction) -> Self {
        ObstructionRecord {
            kind: o.family(),
            order: o.pattern.order,
            embedding: o.embedding.clone(),
            pattern_edges: o.pattern.pattern.edges().collect(),
            witness: o.witness,
        }
    }
}

impl From<&Skeleton> for SkeletonRecord {
    fn from(s: &Skeleton) -> Self {
        SkeletonRecord {
            singles: s.singles.clone(),
            pairs: s
                .pairs
                .iter()
                .map(|(&(i, j), classes)| PairRecord {
                    i,
                    j,
                    classes: classes.clone(),
                })
                .collect(),
            unassigned: s.unassigned.clone(),
        }
    }
}

impl From<&SeparatorAnalysis> for SeparatorRecord {
    fn from(a: &SeparatorAnalysis) -> Self {
        let (coloring, refutation) = match &a.outcome {
            WeakOutcome::Colorable(f) => (Some(f.colors.clone()), None),
            WeakOutcome::Refuted(r) => (None, Some(r.clone())),
        };
        SeparatorRecord {
            separator: a.separator().clone(),
            components: a
                .decomposition
                .gammas
                .iter()
                .map(|gm| gm.component.clone())
                .collect(),
            classes: a.attachedness.class_members.clone(),
            class_count: a.attachedness.len(),
            upper: a.skeleton.upper.clone(),
            skeleton: (&a.skeleton).into(),
            coloring,
            refutation,
            obstruction: a.obstruction.as_ref().map(Into::into),
            induced_obstruction: None,
        }
    }
}

impl VerdictDocument {
    pub fn new(g: &Graph, verdict: &Verdict) -> Self {
        VerdictDocument {
            input: InputDescriptor {
                source: None,
                vertices: g.n(),
                edges: g.edge_count(),
                gplus: false,
                labels: g.labels().map(<[String]>::to_vec),
            },
            chordal: verdict.is_chordal(),
            hole: match verdict {
                Verdict::NotChordal(h) => Some(h.0.clone()),
                _ => None,
            },
            path_graph: verdict.is_path_graph(),
            directed_path_graph: None,
            separators: verdict.separators().iter().map(Into::into).collect(),
            realization: None,
        }
    }

    pub fn with_directed(mut self, d: &DirectedVerdict) -> Self {
        self.directed_path_graph = Some(d.is_directed_path_graph());
        self
    }

    pub fn with_realization(mut self, tree: CliqueTree, host: HostRealization) -> Self {
        self.realization = Some(RealizationRecord { tree, host });
        self
    }
}

/// Compact JSON followed by a newline.
pub fn emit_verdict(doc: &VerdictDocument) -> String {
    let mut s = serde_json::to_string(doc).expect("verdict documents serialize");
    s.push('\n');
    s
}

fn dot_edges(out: &mut String, edges: &EdgeColoredGraph) {
    for (a, b, c) in edges.edges() {
        match c {
            EdgeColor::Antipodal => {
                let _ = writeln!(out, "  {a} -- {b};");
            }
            EdgeColor::Dominance => {
                let _ = writeln!(out, "  {a} -- {b} [style=dotted];");
            }
        }
    }
}

/// Classes as nodes labeled by their member gammas; antipodality solid,
/// dominance dotted.
pub fn attachedness_dot(m: &AttachednessGraph) -> String {
    let mut out = String::from("graph attachedness {\n");
    for (c, members) in m.class_members.iter().enumerate() {
        let names: Vec<String> = members.iter().map(|i| format!("γ{i}")).collect();
        let _ = writeln!(out, "  {c} [label=\"{}\"];", names.join(","));
    }
    dot_edges(&mut out, &m.edges);
    out.push_str("}\n");
    out
}

pub fn pattern_dot(p: &ObstructionPattern) -> String {
    let mut out = format!("graph {}_{} {{\n", p.family.name(), p.order);
    for v in 0..p.pattern.n() {
        let _ = writeln!(out, "  {v};");
    }
    dot_edges(&mut out, &p.pattern);
    out.push_str("}\n");
    out
}

/// Tree nodes labeled by their clique, written with the graph's labels.
pub fn clique_tree_dot(g: &Graph, t: &CliqueTree) -> String {
    let mut out = String::from("graph clique_tree {\n  node [shape=box];\n");
    for (i, c) in t.cliques.iter().enumerate() {
        let names: Vec<String> = c.iter().map(|v| g.label(v)).collect();
        let _ = writeln!(out, "  {i} [label=\"{}\"];", names.join(" "));
    }
    for &(a, b) in &t.edges {
        let w = t.cliques[a].intersection(&t.cliques[b]).len();
        let _ = writeln!(out, "  {a} -- {b} [label=\"{w}\"];");
    }
    out.push_str("}\n");
    out
}
