use std::fmt::Write as _;
use std::io::{self, Read};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pathgraph_core::io::{
    attachedness_dot, clique_tree_dot, pattern_dot, write_edgelist, write_graph6,
    RealizationRecord, SeparatorRecord,
};
use pathgraph_core::obstructions::induced_member_near;
use pathgraph_core::recognition::analyze_separator;
use pathgraph_core::{
    build_family, clique_path_tree_to_host, clique_separators, emit_verdict, gen_chordal,
    gen_path_graph, k4_hub, oracle_sweep, parse_graph, realize, recognize_directed_path_graph,
    recognize_path_graph, Error, Family, Format, Graph, Obstruction, SeparatorAnalysis, Verdict,
    VerdictDocument, VertexSet, WeakOutcome,
};

const MEMBER: u8 = 0;
const NON_MEMBER: u8 = 1;
const INPUT_ERROR: u8 = 2;
const GUARD_REFUSAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pathgraph",
    version,
    about = "Recognize and certify path graphs"
)]
struct Cli {
    /// Graph file format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Edgelist)]
    format: FormatArg,
    /// Analyze the graph with a pendant vertex attached to every vertex
    #[arg(long, global = true)]
    gplus: bool,
    /// Print machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; report through the exit code only
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Edgelist => Format::Edgelist,
            FormatArg::Graph6 => Format::Graph6,
        }
    }
}

#[derive(Args)]
struct Input {
    /// Graph file, or `-` for standard input
    file: String,
}

#[derive(Subcommand)]
enum Command {
    /// Decide path graph membership
    Recognize(Input),
    /// Verdict with per-separator colorings, refutations and obstructions
    Certify(Input),
    /// Build a clique path tree and host-tree paths
    Realize {
        #[command(flatten)]
        input: Input,
        /// Print the clique path tree in DOT
        #[arg(long)]
        dot: bool,
    },
    /// Decide membership by sweeping all labeled trees on the cliques
    Oracle(Input),
    /// Print a seeded random graph
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Vertices (chordal), paths (path), or hub clique size (k4hub)
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Host tree size for `--kind path`; defaults to `n`
        #[arg(long)]
        tree_nodes: Option<usize>,
    },
    /// Show the attachedness graph at one clique separator
    Attachedness {
        #[command(flatten)]
        input: Input,
        /// Position in the list of clique separators
        #[arg(long, default_value_t = 0)]
        separator: usize,
        #[arg(long)]
        dot: bool,
    },
    /// Print a member of an obstruction family
    Obstruction {
        #[arg(long, value_enum)]
        family: FamilyArg,
        /// Order parameter: rim `2k+1` for wheels, `2n+1` vertices for fans
        #[arg(long)]
        size: usize,
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenKind {
    Path,
    Chordal,
    K4hub,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    W0,
    W1,
    F,
    Ftilde,
    Df,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::W0 => Family::W0,
            FamilyArg::W1 => Family::W1,
            FamilyArg::F => Family::F,
            FamilyArg::Ftilde => Family::Ftilde,
            FamilyArg::Df => Family::Df,
        }
    }
}

/// What a command prints and the exit status it ends with.
struct Report {
    text: String,
    code: u8,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: MEMBER }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if !cli.quiet {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            if !cli.quiet {
                eprintln!("pathgraph: {e}");
            }
            ExitCode::from(match e {
                Error::Guard { .. } | Error::Realization { .. } => GUARD_REFUSAL,
                _ => INPUT_ERROR,
            })
        }
    }
}

fn read_graph(cli: &Cli, input: &Input) -> Result<Graph, Error> {
    let text = if input.file == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| io_error("standard input", e))?;
        s
    } else {
        std::fs::read_to_string(&input.file).map_err(|e| io_error(&input.file, e))?
    };
    let g = parse_graph(&text, cli.format.into())?;
    Ok(if cli.gplus { g.plus() } else { g })
}

fn io_error(what: &str, e: io::Error) -> Error {
    Error::Input {
        line: None,
        message: format!("cannot read {what}: {e}"),
    }
}

fn document(cli: &Cli, input: &Input, g: &Graph, v: &Verdict) -> Result<VerdictDocument, Error> {
    let mut doc = VerdictDocument::new(g, v);
    doc.input.source = Some(input.file.clone());
    doc.input.gplus = cli.gplus;
    if let (Some(induced), Verdict::NotPathGraph { failing, .. }) = (induced_member(cli, v)?, v) {
        doc.separators[*failing].induced_obstruction = Some((&induced).into());
    }
    Ok(doc)
}

/// With `--gplus`, the induced catalogue member that stands in for the
/// refutation's obstruction.
fn induced_member(cli: &Cli, v: &Verdict) -> Result<Option<Obstruction>, Error> {
    match (cli.gplus, v.failure(), v.obstruction()) {
        (true, Some(a), Some(o)) => induced_member_near(&a.attachedness, o),
        _ => Ok(None),
    }
}

fn membership(v: &Verdict) -> u8 {
    if v.is_path_graph() {
        MEMBER
    } else {
        NON_MEMBER
    }
}

fn run(cli: &Cli) -> Result<Report, Error> {
    match &cli.command {
        Command::Recognize(input) => {
            let g = read_graph(cli, input)?;
            let v = recognize_path_graph(&g)?;
            let text = if cli.json {
                emit_verdict(&document(cli, input, &g, &v)?)
            } else {
                summary(&g, &v) + &induced_text(cli, &g, &v)?
            };
            Ok(Report {
                text,
                code: membership(&v),
            })
        }
        Command::Certify(input) => {
            let g = read_graph(cli, input)?;
            let v = recognize_path_graph(&g)?;
            let mut doc = document(cli, input, &g, &v)?;
            if v.is_chordal() {
                doc = doc.with_directed(&recognize_directed_path_graph(&g)?);
            }
            if v.is_path_graph() {
                let tree = realize(&g)?;
                let host = clique_path_tree_to_host(&g, &tree)?;
                doc = doc.with_realization(tree, host);
            }
            let text = if cli.json {
                emit_verdict(&doc)
            } else {
                certify_text(&g, &v, &doc) + &induced_text(cli, &g, &v)?
            };
            Ok(Report {
                text,
                code: membership(&v),
            })
        }
        Command::Realize { input, dot } => {
            let g = read_graph(cli, input)?;
            let v = recognize_path_graph(&g)?;
            if !v.is_path_graph() {
                return Ok(Report {
                    text: summary(&g, &v),
                    code: NON_MEMBER,
                });
            }
            let tree = realize(&g)?;
            let host = clique_path_tree_to_host(&g, &tree)?;
            let text = if *dot {
                clique_tree_dot(&g, &tree)
            } else if cli.json {
                json_line(&RealizationRecord { tree, host })
            } else {
                realization_text(&g, &RealizationRecord { tree, host })
            };
            Ok(Report::ok(text))
        }
        Command::Oracle(input) => {
            let g = read_graph(cli, input)?;
            let sweep = oracle_sweep(&g)?;
            let member = sweep.tree.is_some();
            let text = if cli.json {
                json_line(&serde_json::json!({
                    "path_graph": member,
                    "trees_examined": sweep.examined,
                    "tree": sweep.tree,
                }))
            } else {
                format!(
                    "{} ({} labeled trees examined)\n",
                    if member {
                        "path graph"
                    } else {
                        "not a path graph"
                    },
                    sweep.examined
                )
            };
            Ok(Report {
                text,
                code: if member { MEMBER } else { NON_MEMBER },
            })
        }
        Command::Gen {
            kind,
            n,
            seed,
            tree_nodes,
        } => {
            let g = match kind {
                GenKind::Path => gen_path_graph(tree_nodes.unwrap_or(*n), *n, *seed)?.0,
                GenKind::Chordal => gen_chordal(*n, *seed)?,
                GenKind::K4hub => k4_hub(*n)?,
            };
            Ok(Report::ok(match cli.format {
                FormatArg::Edgelist => write_edgelist(&g),
                FormatArg::Graph6 => write_graph6(&g),
            }))
        }
        Command::Attachedness {
            input,
            separator,
            dot,
        } => {
            let g = read_graph(cli, input)?;
            let separators = clique_separators(&g)?;
            let q = separators.get(*separator).ok_or_else(|| Error::Input {
                line: None,
                message: format!(
                    "separator index {separator} out of range; the graph has {}",
                    separators.len()
                ),
            })?;
            let a = analyze_separator(&g, q)?;
            let text = if *dot {
                attachedness_dot(&a.attachedness)
            } else if cli.json {
                json_line(&SeparatorRecord::from(&a))
            } else {
                separator_text(&g, &a)
            };
            Ok(Report::ok(text))
        }
        Command::Obstruction { family, size, dot } => {
            let p = build_family((*family).into(), *size)?;
            let text = if *dot {
                pattern_dot(&p)
            } else {
                let edges: Vec<_> = p.pattern.edges().collect();
                if cli.json {
                    json_line(&serde_json::json!({
                        "family": p.family,
                        "order": p.order,
                        "vertices": p.pattern.n(),
                        "edges": edges,
                    }))
                } else {
                    let mut s = format!(
                        "{} order {}: {} vertices\n",
                        p.family.name(),
                        p.order,
                        p.pattern.n()
                    );
                    for (a, b, c) in edges {
                        let _ = writeln!(s, "{a} {b} {}", color_name(c));
                    }
                    s
                }
            };
            Ok(Report::ok(text))
        }
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn color_name(c: pathgraph_core::EdgeColor) -> &'static str {
    match c {
        pathgraph_core::EdgeColor::Antipodal => "antipodal",
        pathgraph_core::EdgeColor::Dominance => "dominance",
    }
}

fn names(g: &Graph, s: &VertexSet) -> String {
    let parts: Vec<String> = s.iter().map(|v| g.label(v)).collect();
    format!("{{{}}}", parts.join(","))
}

fn summary(g: &Graph, v: &Verdict) -> String {
    match v {
        Verdict::NotChordal(h) => {
            let cycle: Vec<String> = h.0.iter().map(|&x| g.label(x)).collect();
            format!("not chordal: hole {}\n", cycle.join(" "))
        }
        Verdict::PathGraph { .. } => "path graph\n".into(),
        Verdict::NotPathGraph { .. } => {
            let a = v.failure().expect("failing separator");
            let mut s = format!("not a path graph: separator {}", names(g, a.separator()));
            if let Some(o) = &a.obstruction {
                let _ = write!(s, ", {}", obstruction_text(g, a, o));
            }
            s.push('\n');
            s
        }
    }
}

fn obstruction_text(g: &Graph, a: &SeparatorAnalysis, o: &Obstruction) -> String {
    let classes: Vec<String> = o
        .embedding
        .iter()
        .map(|c| format!("γ{}", a.attachedness.class_members[*c][0]))
        .collect();
    let mut s = format!(
        "{} order {} on {}",
        o.family().name(),
        o.pattern.order,
        classes.join(" ")
    );
    if let Some(w) = o.witness {
        let _ = write!(s, " sharing {}", g.label(w));
    }
    s
}

fn induced_text(cli: &Cli, g: &Graph, v: &Verdict) -> Result<String, Error> {
    Ok(match (induced_member(cli, v)?, v.failure()) {
        (Some(o), Some(a)) => format!("induced obstruction: {}\n", obstruction_text(g, a, &o)),
        _ => String::new(),
    })
}

fn separator_text(g: &Graph, a: &SeparatorAnalysis) -> String {
    let m = &a.attachedness;
    let mut s = format!("separator {}\n", names(g, a.separator()));
    for gm in &a.decomposition.gammas {
        let traces: Vec<String> = gm.traces.iter().map(|t| names(g, t)).collect();
        let _ = writeln!(
            s,
            "  γ{} component {} traces {}",
            gm.index,
            names(g, &gm.component),
            traces.join(" ")
        );
    }
    for (c, members) in m.class_members.iter().enumerate() {
        let list: Vec<String> = members.iter().map(|i| format!("γ{i}")).collect();
        let _ = writeln!(s, "  class {c}: {}", list.join(" "));
    }
    for (x, y, c) in m.edges.edges() {
        let _ = writeln!(s, "  {x} -- {y} {}", color_name(c));
    }
    let _ = writeln!(s, "  upper bounds {:?}", a.skeleton.upper);
    for member in a.skeleton.members() {
        let _ = writeln!(s, "  {member} = {:?}", a.skeleton.member(member));
    }
    if !a.skeleton.unassigned.is_empty() {
        let _ = writeln!(s, "  unassigned {:?}", a.skeleton.unassigned);
    }
    match &a.outcome {
        WeakOutcome::Colorable(f) => {
            let _ = writeln!(s, "  coloring {:?}", f.colors);
        }
        WeakOutcome::Refuted(r) => {
            let _ = writeln!(s, "  refuted: {r:?}");
            if let Some(o) = &a.obstruction {
                let _ = writeln!(s, "  obstruction {}", obstruction_text(g, a, o));
            }
        }
    }
    s
}

fn realization_text(g: &Graph, r: &RealizationRecord) -> String {
    let mut s = String::from("clique path tree\n");
    for (i, c) in r.tree.cliques.iter().enumerate() {
        let _ = writeln!(s, "  node {i}: {}", names(g, c));
    }
    for &(a, b) in &r.tree.edges {
        let _ = writeln!(s, "  {a} -- {b}");
    }
    s.push_str("paths\n");
    for (v, p) in r.host.paths.iter().enumerate() {
        let nodes: Vec<String> = p.iter().map(usize::to_string).collect();
        let _ = writeln!(s, "  {}: {}", g.label(v), nodes.join(" "));
    }
    s
}

fn certify_text(g: &Graph, v: &Verdict, doc: &VerdictDocument) -> String {
    let mut s = summary(g, v);
    if let Some(d) = doc.directed_path_graph {
        let _ = writeln!(s, "directed path graph: {}", if d { "yes" } else { "no" });
    }
    for a in v.separators() {
        s.push_str(&separator_text(g, a));
    }
    if let Some(r) = &doc.realization {
        s.push_str(&realization_text(g, r));
    }
    s
}
