//! Graph ingestion, command dispatch, and report serialization.
//!
//! Key operations:
//! - [`parse_graph`]: reads a digraph from JSON (`{"vertices":[...],
//!   "edges":[{"id","from","to"}]}`) or a DOT subset (`digraph { a -> b
//!   [label="e1"]; }`); undirected inputs come as `graph { a -- b; }`.
//! - [`run_command`]: executes one [`AnalysisRequest`] and renders the
//!   report as stable text or single-line JSON.
//! - [`render_json`] / [`render_dot`]: graph writers that round-trip
//!   through the parsers.
//!
//! Design notes: output is deterministic for a fixed request and seed, so
//! JSON reports can be compared byte for byte. Undirected inputs are given
//! a seeded orientation before any directed analysis runs; the seed is
//! required, never implicit.

use std::collections::HashSet;
use std::fs;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::analysis::{
    classify_generators, cycle_space_dimension, diedge_ideal, is_dag, is_directly_bipartite,
    is_upd, linear_cycle_report, linear_edge_ideal, source_sink_covers, CycleClass,
    ReportedCycle,
};
use crate::error::{Error, Result};
use crate::graphs::{fresh_id, h_graph, k_graph, Digraph, UGraph};
use crate::groebner::IdealBasis;
use crate::poly::order::TermOrder;
use crate::poly::MulStyle;

// ---- requests ----

/// Which analysis to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Ideal,
    Cycles,
    CycleBasis,
    IsDag,
    IsUpd,
    Covers,
    Bipartite,
    HGraph { kind: DoubleKind },
    Analyze,
}

/// Which doubled graph to export: with or without its perfect matching.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DoubleKind {
    WithMatching,
    WithoutMatching,
}

/// Cycle route: read generators of the edge ideal, or verify the oracle's
/// cycles against the linear cycle space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Toric,
    Linear,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderChoice {
    Lex,
    Grevlex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Json,
}

/// One fully resolved batch request.
#[derive(Debug, Clone)]
pub struct AnalysisRequest {
    pub command: Command,
    pub input: PathBuf,
    pub order: OrderChoice,
    /// Edge ids in descending priority, when the default order is not wanted.
    pub vars: Option<Vec<String>>,
    pub method: Method,
    /// Orientation seed for undirected inputs.
    pub seed: Option<u64>,
    pub format: OutputFormat,
    pub max_cycles: usize,
    pub max_covers: usize,
}

/// Exit code for an error, per the documented contract: usage 1,
/// parse/validation 2, cap exceeded 3.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Usage(_) => 1,
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

// ---- graph input and output ----

/// A parsed input graph, directed or undirected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Directed(Digraph),
    Undirected(UGraph),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonGraph {
    vertices: Vec<String>,
    edges: Vec<JsonEdge>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonEdge {
    id: String,
    from: String,
    to: String,
}

/// Parses JSON or DOT graph text, deciding the format by the first
/// non-space character.
pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    match text.trim_start().chars().next() {
        Some('{') => parse_json(text),
        Some(_) => parse_dot(text),
        None => Err(Error::Parse("empty input".into())),
    }
}

fn parse_json(text: &str) -> Result<ParsedGraph> {
    let g: JsonGraph = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let edges = g.edges.into_iter().map(|e| (e.id, e.from, e.to)).collect();
    Digraph::new(g.vertices, edges).map(ParsedGraph::Directed)
}

/// Serializes a digraph into the JSON input schema, one line.
pub fn render_json(d: &Digraph) -> String {
    let doc = JsonGraph {
        vertices: d.vertex_labels().to_vec(),
        edges: d
            .edges()
            .iter()
            .map(|e| JsonEdge {
                id: e.id.clone(),
                from: d.vertex_label(e.tail).to_string(),
                to: d.vertex_label(e.head).to_string(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

/// Serializes a digraph as DOT, declaring every vertex before the edges so
/// parsing preserves vertex order.
pub fn render_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph {\n");
    for label in d.vertex_labels() {
        out.push_str(&format!("  {label};\n"));
    }
    for e in d.edges() {
        out.push_str(&format!(
            "  {} -> {} [label=\"{}\"];\n",
            d.vertex_label(e.tail),
            d.vertex_label(e.head),
            e.id
        ));
    }
    out.push('}');
    out
}

/// Serializes an undirected graph as DOT.
pub fn render_dot_undirected(g: &UGraph) -> String {
    let mut out = String::from("graph {\n");
    for label in g.vertex_labels() {
        out.push_str(&format!("  {label};\n"));
    }
    for e in g.edges() {
        out.push_str(&format!(
            "  {} -- {} [label=\"{}\"];\n",
            g.vertex_label(e.a),
            g.vertex_label(e.b),
            e.id
        ));
    }
    out.push('}');
    out
}

// ---- DOT subset parser ----

#[derive(Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    DirectedEdge,
    UndirectedEdge,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Semi,
    Comma,
    Equals,
}

struct Scanner<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Scanner { text, pos: 0, line: 1 }
    }

    fn error(&self, msg: impl std::fmt::Display) -> Error {
        Error::Parse(format!("line {}: {}", self.line, msg))
    }

    fn bytes(&self) -> &[u8] {
        self.text.as_bytes()
    }

    fn skip_trivia(&mut self) -> Result<()> {
        loop {
            match self.bytes().get(self.pos) {
                Some(b'\n') => {
                    self.line += 1;
                    self.pos += 1;
                }
                Some(c) if c.is_ascii_whitespace() => self.pos += 1,
                Some(b'#') => self.skip_to_line_end(),
                Some(b'/') if self.bytes().get(self.pos + 1) == Some(&b'/') => {
                    self.skip_to_line_end()
                }
                Some(b'/') if self.bytes().get(self.pos + 1) == Some(&b'*') => {
                    let open_line = self.line;
                    self.pos += 2;
                    loop {
                        match self.bytes().get(self.pos) {
                            Some(b'*') if self.bytes().get(self.pos + 1) == Some(&b'/') => {
                                self.pos += 2;
                                break;
                            }
                            Some(b'\n') => {
                                self.line += 1;
                                self.pos += 1;
                            }
                            Some(_) => self.pos += 1,
                            None => {
                                self.line = open_line;
                                return Err(self.error("unterminated comment"));
                            }
                        }
                    }
                }
                _ => return Ok(()),
            }
        }
    }

    fn skip_to_line_end(&mut self) {
        while let Some(&c) = self.bytes().get(self.pos) {
            if c == b'\n' {
                break;
            }
            self.pos += 1;
        }
    }

    fn next(&mut self) -> Result<Option<Tok>> {
        self.skip_trivia()?;
        let Some(&c) = self.bytes().get(self.pos) else { return Ok(None) };
        let tok = match c {
            b'{' => {
                self.pos += 1;
                Tok::LBrace
            }
            b'}' => {
                self.pos += 1;
                Tok::RBrace
            }
            b'[' => {
                self.pos += 1;
                Tok::LBracket
            }
            b']' => {
                self.pos += 1;
                Tok::RBracket
            }
            b';' => {
                self.pos += 1;
                Tok::Semi
            }
            b',' => {
                self.pos += 1;
                Tok::Comma
            }
            b'=' => {
                self.pos += 1;
                Tok::Equals
            }
            b'-' => match self.bytes().get(self.pos + 1) {
                Some(b'>') => {
                    self.pos += 2;
                    Tok::DirectedEdge
                }
                Some(b'-') => {
                    self.pos += 2;
                    Tok::UndirectedEdge
                }
                _ => return Err(self.error("stray '-'; expected '->' or '--'")),
            },
            b'"' => {
                let start = self.pos + 1;
                let mut end = start;
                loop {
                    match self.bytes().get(end) {
                        Some(b'"') => break,
                        Some(b'\n') | None => return Err(self.error("unterminated string")),
                        Some(_) => end += 1,
                    }
                }
                self.pos = end + 1;
                Tok::Ident(self.text[start..end].to_string())
            }
            c if c == b'_' || c.is_ascii_alphanumeric() => {
                let start = self.pos;
                while matches!(
                    self.bytes().get(self.pos),
                    Some(ch) if ch.is_ascii_alphanumeric() || *ch == b'_' || *ch == b'.'
                ) {
                    self.pos += 1;
                }
                Tok::Ident(self.text[start..self.pos].to_string())
            }
            _ => {
                let ch = self.text[self.pos..].chars().next().expect("byte in bounds");
                return Err(self.error(format!("unexpected character {ch:?}")));
            }
        };
        Ok(Some(tok))
    }

    fn peek(&mut self) -> Result<Option<Tok>> {
        let save = (self.pos, self.line);
        let tok = self.next()?;
        (self.pos, self.line) = save;
        Ok(tok)
    }
}

fn parse_dot(text: &str) -> Result<ParsedGraph> {
    let mut s = Scanner::new(text);
    let directed = match s.next()? {
        Some(Tok::Ident(kw)) if kw == "digraph" => true,
        Some(Tok::Ident(kw)) if kw == "graph" => false,
        _ => return Err(s.error("expected 'digraph' or 'graph'")),
    };
    match s.next()? {
        Some(Tok::LBrace) => {}
        Some(Tok::Ident(_)) => match s.next()? {
            Some(Tok::LBrace) => {}
            _ => return Err(s.error("expected '{' after the graph name")),
        },
        _ => return Err(s.error("expected '{'")),
    }

    let mut vertices: Vec<String> = Vec::new();
    let mut seen: HashSet<String> = HashSet::new();
    let mut edges: Vec<(String, String, Option<String>)> = Vec::new();
    loop {
        match s.next()? {
            None => return Err(s.error("unexpected end of input; missing '}'")),
            Some(Tok::RBrace) => break,
            Some(Tok::Semi) => continue,
            Some(Tok::Ident(a)) => {
                if matches!(a.as_str(), "node" | "edge" | "graph")
                    && s.peek()? == Some(Tok::LBracket)
                {
                    s.next()?;
                    parse_attrs(&mut s)?;
                    continue;
                }
                if seen.insert(a.clone()) {
                    vertices.push(a.clone());
                }
                match s.peek()? {
                    Some(Tok::DirectedEdge) | Some(Tok::UndirectedEdge) => {
                        let op = s.next()?.expect("peeked token");
                        if directed != (op == Tok::DirectedEdge) {
                            return Err(s.error(if directed {
                                "undirected edge '--' inside a digraph"
                            } else {
                                "directed edge '->' inside an undirected graph"
                            }));
                        }
                        let b = match s.next()? {
                            Some(Tok::Ident(b)) => b,
                            _ => return Err(s.error("expected a vertex after the edge operator")),
                        };
                        if seen.insert(b.clone()) {
                            vertices.push(b.clone());
                        }
                        if matches!(s.peek()?, Some(Tok::DirectedEdge | Tok::UndirectedEdge)) {
                            return Err(s.error(
                                "edge chains are not supported; write one edge per statement",
                            ));
                        }
                        let mut label = None;
                        if s.peek()? == Some(Tok::LBracket) {
                            s.next()?;
                            label = parse_attrs(&mut s)?;
                        }
                        edges.push((a, b, label));
                    }
                    Some(Tok::LBracket) => {
                        s.next()?;
                        parse_attrs(&mut s)?;
                    }
                    _ => {}
                }
            }
            Some(_) => return Err(s.error("expected a vertex name, an edge, or '}'")),
        }
    }
    if s.next()?.is_some() {
        return Err(s.error("unexpected text after the closing '}'"));
    }
    assemble(vertices, edges, directed)
}

/// Parses `key = value` pairs up to `]`, returning the `label` value.
fn parse_attrs(s: &mut Scanner) -> Result<Option<String>> {
    let mut label = None;
    loop {
        match s.next()? {
            Some(Tok::RBracket) => return Ok(label),
            Some(Tok::Ident(key)) => {
                if s.next()? != Some(Tok::Equals) {
                    return Err(s.error(format!("expected '=' after attribute {key:?}")));
                }
                let value = match s.next()? {
                    Some(Tok::Ident(v)) => v,
                    _ => return Err(s.error(format!("expected a value for attribute {key:?}"))),
                };
                if key == "label" {
                    label = Some(value);
                }
                if matches!(s.peek()?, Some(Tok::Comma | Tok::Semi)) {
                    s.next()?;
                }
            }
            _ => return Err(s.error("expected an attribute name or ']'")),
        }
    }
}

/// Builds the graph, assigning ids `e1..em` in file order to unlabeled
/// edges (uniquified against explicit labels).
fn assemble(
    vertices: Vec<String>,
    edges: Vec<(String, String, Option<String>)>,
    directed: bool,
) -> Result<ParsedGraph> {
    let mut used: HashSet<String> =
        edges.iter().filter_map(|(_, _, label)| label.clone()).collect();
    let triples: Vec<(String, String, String)> = edges
        .into_iter()
        .enumerate()
        .map(|(i, (a, b, label))| {
            let id = label.unwrap_or_else(|| {
                let id = fresh_id(&used, &format!("e{}", i + 1));
                used.insert(id.clone());
                id
            });
            (id, a, b)
        })
        .collect();
    if directed {
        Digraph::new(vertices, triples).map(ParsedGraph::Directed)
    } else {
        UGraph::new(vertices, triples).map(ParsedGraph::Undirected)
    }
}

// ---- output documents ----

#[derive(Serialize)]
struct CycleOut {
    edges: Vec<String>,
    class: &'static str,
    length: usize,
}

#[derive(Serialize)]
struct CyclesDoc {
    cycles: Vec<CycleOut>,
}

#[derive(Serialize)]
struct IdealDoc {
    ideal: Vec<String>,
}

#[derive(Serialize)]
struct BasisDoc {
    basis: Vec<String>,
    dimension: usize,
}

#[derive(Serialize)]
struct DagDoc {
    dag: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<String>>,
}

#[derive(Serialize)]
struct UpdDoc {
    upd: bool,
    reason: String,
}

#[derive(Serialize)]
struct CoversObj {
    source: Vec<Vec<String>>,
    sink: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct CoversDoc {
    covers: CoversObj,
}

#[derive(Serialize)]
struct BipartiteDoc {
    directly_bipartite: bool,
    sources: Vec<String>,
    sinks: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
}

#[derive(Serialize)]
struct DotDoc {
    dot: String,
}

#[derive(Serialize)]
struct AnalyzeDoc {
    ideal: Vec<String>,
    cycles: Vec<CycleOut>,
    dag: bool,
    upd: bool,
    directly_bipartite: bool,
    covers: CoversObj,
}

// ---- dispatch ----

/// Runs one request and returns the rendered report (no trailing newline).
pub fn run_command(req: &AnalysisRequest) -> Result<String> {
    let d = load_digraph(req)?;
    match req.command {
        Command::Ideal => {
            let gb = diedge_ideal(&d, &edge_order(&d, req)?)?;
            let ideal = ideal_strings(&gb);
            emit(req, &IdealDoc { ideal: ideal.clone() }, || ideal_text(&ideal))
        }
        Command::Cycles => {
            let report = match req.method {
                Method::Toric => {
                    classify_generators(&diedge_ideal(&d, &edge_order(&d, req)?)?, &d)?
                }
                Method::Linear => linear_cycle_report(&d, req.max_cycles)?,
            };
            let doc = CyclesDoc { cycles: cycles_out(&report.cycles) };
            emit(req, &doc, || cycles_text(&report.cycles))
        }
        Command::CycleBasis => {
            let basis = linear_edge_ideal(&d)?;
            let dimension = cycle_space_dimension(&d);
            if basis.len() != dimension {
                return Err(Error::Structural(format!(
                    "kernel basis has {} vectors but the cycle space has dimension {dimension}",
                    basis.len()
                )));
            }
            let ord = TermOrder::grevlex(d.n_edges());
            let rendered: Vec<String> =
                basis.iter().map(|p| p.to_text(&ord, MulStyle::Explicit)).collect();
            let doc = BasisDoc { basis: rendered.clone(), dimension };
            emit(req, &doc, || {
                let mut lines = vec![format!("dimension: {dimension}")];
                lines.extend(rendered.iter().cloned());
                lines.join("\n")
            })
        }
        Command::IsDag => {
            let report = is_dag(&d)?;
            let doc = DagDoc { dag: report.is_dag, witness: report.witness.clone() };
            emit(req, &doc, || match &report.witness {
                None => "dag: true".into(),
                Some(cycle) => format!("dag: false\ncycle: {}", cycle.join(", ")),
            })
        }
        Command::IsUpd => {
            let report = is_upd(&d, req.max_cycles)?;
            let doc = UpdDoc { upd: report.is_upd, reason: report.reason.clone() };
            emit(req, &doc, || format!("upd: {}\nreason: {}", report.is_upd, report.reason))
        }
        Command::Covers => {
            let report = source_sink_covers(&d, req.max_covers)?;
            let doc = CoversDoc {
                covers: CoversObj {
                    source: report.source_covers.clone(),
                    sink: report.sink_covers.clone(),
                },
            };
            emit(req, &doc, || covers_text(&report.source_covers, &report.sink_covers))
        }
        Command::Bipartite => {
            let report = is_directly_bipartite(&d)?;
            let witness = report.witness.as_ref().map(|w| {
                w.to_text(&TermOrder::grevlex(w.vars().len()), MulStyle::Explicit)
            });
            let doc = BipartiteDoc {
                directly_bipartite: report.directly_bipartite,
                sources: report.sources.clone(),
                sinks: report.sinks.clone(),
                witness: witness.clone(),
            };
            emit(req, &doc, || {
                let mut lines = vec![format!("directly bipartite: {}", report.directly_bipartite)];
                if report.directly_bipartite {
                    lines.push(format!("sources: {}", report.sources.join(", ")));
                    lines.push(format!("sinks: {}", report.sinks.join(", ")));
                }
                if let Some(w) = &witness {
                    lines.push(format!("witness: {w}"));
                }
                lines.join("\n")
            })
        }
        Command::HGraph { kind } => {
            let dot = match kind {
                DoubleKind::WithMatching => render_dot_undirected(&h_graph(&d)?.graph),
                DoubleKind::WithoutMatching => render_dot_undirected(&k_graph(&d)?),
            };
            emit(req, &DotDoc { dot: dot.clone() }, || dot.clone())
        }
        Command::Analyze => {
            let gb = diedge_ideal(&d, &edge_order(&d, req)?)?;
            let cycles = classify_generators(&gb, &d)?;
            let dag = is_dag(&d)?;
            let upd = is_upd(&d, req.max_cycles)?;
            let bipartite = is_directly_bipartite(&d)?;
            let covers = source_sink_covers(&d, req.max_covers)?;
            let ideal = ideal_strings(&gb);
            let doc = AnalyzeDoc {
                ideal: ideal.clone(),
                cycles: cycles_out(&cycles.cycles),
                dag: dag.is_dag,
                upd: upd.is_upd,
                directly_bipartite: bipartite.directly_bipartite,
                covers: CoversObj {
                    source: covers.source_covers.clone(),
                    sink: covers.sink_covers.clone(),
                },
            };
            emit(req, &doc, || {
                let mut lines = vec!["ideal:".to_string()];
                match ideal.is_empty() {
                    true => lines.push("  0".into()),
                    false => lines.extend(ideal.iter().map(|g| format!("  {g}"))),
                }
                lines.push("cycles:".into());
                match cycles.cycles.is_empty() {
                    true => lines.push("  none".into()),
                    false => lines.extend(
                        cycles.cycles.iter().map(|c| format!("  {}", cycle_line(c))),
                    ),
                }
                lines.push(format!("dag: {}", dag.is_dag));
                lines.push(format!("upd: {}", upd.is_upd));
                lines.push(format!("directly bipartite: {}", bipartite.directly_bipartite));
                lines.push(covers_text(&covers.source_covers, &covers.sink_covers));
                lines.join("\n")
            })
        }
    }
}

fn load_digraph(req: &AnalysisRequest) -> Result<Digraph> {
    let text = fs::read_to_string(&req.input)
        .map_err(|e| Error::Parse(format!("{}: {e}", req.input.display())))?;
    match parse_graph(&text)? {
        ParsedGraph::Directed(d) => Ok(d),
        ParsedGraph::Undirected(g) => {
            let seed = req.seed.ok_or_else(|| {
                Error::Usage("undirected input needs --seed to fix an orientation".into())
            })?;
            Ok(g.orient(seed))
        }
    }
}

/// Resolves the requested term order over the digraph's edge variables.
fn edge_order(d: &Digraph, req: &AnalysisRequest) -> Result<TermOrder> {
    let m = d.n_edges();
    let Some(list) = &req.vars else {
        return Ok(match req.order {
            OrderChoice::Lex => TermOrder::lex(m),
            OrderChoice::Grevlex => TermOrder::grevlex(m),
        });
    };
    if list.len() != m {
        return Err(Error::Usage(format!(
            "--vars lists {} ids but the graph has {m} edges",
            list.len()
        )));
    }
    let priority: Vec<usize> = list
        .iter()
        .map(|id| {
            d.edge_index(id).ok_or_else(|| {
                Error::Usage(format!("--vars names {id:?}, which is not an edge of the input"))
            })
        })
        .collect::<Result<_>>()?;
    if priority.iter().collect::<HashSet<_>>().len() != m {
        return Err(Error::Usage("--vars must list every edge exactly once".into()));
    }
    match req.order {
        OrderChoice::Lex => TermOrder::lex_with(priority),
        OrderChoice::Grevlex => TermOrder::grevlex_with(priority),
    }
}

fn emit<T: Serialize>(
    req: &AnalysisRequest,
    doc: &T,
    text: impl FnOnce() -> String,
) -> Result<String> {
    match req.format {
        OutputFormat::Json => serde_json::to_string(doc)
            .map_err(|e| Error::Structural(format!("report serialization failed: {e}"))),
        OutputFormat::Text => Ok(text()),
    }
}

fn ideal_strings(gb: &IdealBasis) -> Vec<String> {
    gb.generators().iter().map(|g| g.to_text(gb.order(), MulStyle::Explicit)).collect()
}

fn ideal_text(ideal: &[String]) -> String {
    if ideal.is_empty() {
        "0".into()
    } else {
        ideal.join("\n")
    }
}

fn class_name(class: CycleClass) -> &'static str {
    match class {
        CycleClass::Directed => "directed",
        CycleClass::Undirected => "undirected",
    }
}

fn cycles_out(cycles: &[ReportedCycle]) -> Vec<CycleOut> {
    cycles
        .iter()
        .map(|c| CycleOut { edges: c.edges.clone(), class: class_name(c.class), length: c.length })
        .collect()
}

fn cycle_line(c: &ReportedCycle) -> String {
    format!("{} cycle of length {}: {}", class_name(c.class), c.length, c.edges.join(", "))
}

fn cycles_text(cycles: &[ReportedCycle]) -> String {
    if cycles.is_empty() {
        return "no cycles".into();
    }
    cycles.iter().map(cycle_line).collect::<Vec<_>>().join("\n")
}

fn covers_text(source: &[Vec<String>], sink: &[Vec<String>]) -> String {
    let mut lines = Vec::new();
    if source.is_empty() {
        lines.push("no source covers".to_string());
    }
    for cover in source {
        lines.push(format!("source cover: {}", cover.join(", ")));
    }
    if sink.is_empty() {
        lines.push("no sink covers".to_string());
    }
    for cover in sink {
        lines.push(format!("sink cover: {}", cover.join(", ")));
    }
    lines.join("\n")
}
