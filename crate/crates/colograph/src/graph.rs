//! The multigraph data model: properly edge-colored bipartite multigraphs,
//! validation, and the line-oriented text format.

use std::fmt::Write as _;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Color = u8;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Parity {
    White,
    Black,
}

impl Parity {
    pub fn flip(self) -> Parity {
        match self {
            Parity::White => Parity::Black,
            Parity::Black => Parity::White,
        }
    }
}

/// An edge record. Endpoints are normalized so that `u < v`; self-loops are
/// rejected at construction so the normalization is total.
#[derive(Copy, Clone, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub color: Color,
}

impl Edge {
    pub fn new(a: VertexId, b: VertexId, color: Color) -> Edge {
        if a <= b {
            Edge { u: a, v: b, color }
        } else {
            Edge { u: b, v: a, color }
        }
    }

    pub fn other(&self, x: VertexId) -> VertexId {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// Which colors may appear: full graphs use `{0..d}`, bubbles `{1..d}`.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ColorSupport {
    Full,
    NoZero,
}

impl ColorSupport {
    pub fn colors(self, dimension: u8) -> impl Iterator<Item = Color> {
        let lo = match self {
            ColorSupport::Full => 0,
            ColorSupport::NoZero => 1,
        };
        lo..=dimension
    }

    pub fn contains(self, c: Color, dimension: u8) -> bool {
        c <= dimension && (self == ColorSupport::Full || c != 0)
    }

    pub fn len(self, dimension: u8) -> usize {
        match self {
            ColorSupport::Full => dimension as usize + 1,
            ColorSupport::NoZero => dimension as usize,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    SelfLoop { edge: EdgeId },
    EndpointOutOfRange { edge: EdgeId },
    ColorOutOfSupport { edge: EdgeId, color: Color },
    NotBipartite { edge: EdgeId },
    MissingColor { vertex: VertexId, color: Color },
    RepeatedColor { vertex: VertexId, color: Color },
    OddVertexCount { n: usize },
    TooFewVertices { n: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::SelfLoop { edge } => write!(f, "edge {edge} is a self-loop"),
            Violation::EndpointOutOfRange { edge } => {
                write!(f, "edge {edge} has an endpoint out of range")
            }
            Violation::ColorOutOfSupport { edge, color } => {
                write!(f, "edge {edge} has color {color} outside the color support")
            }
            Violation::NotBipartite { edge } => {
                write!(f, "edge {edge} joins two vertices of the same parity")
            }
            Violation::MissingColor { vertex, color } => {
                write!(f, "vertex {vertex} has no incident edge of color {color}")
            }
            Violation::RepeatedColor { vertex, color } => {
                write!(f, "vertex {vertex} has more than one incident edge of color {color}")
            }
            Violation::OddVertexCount { n } => write!(f, "vertex count {n} is odd"),
            Violation::TooFewVertices { n } => write!(f, "vertex count {n} is below 2"),
        }
    }
}

/// Empty iff all `ColoredGraph` invariants hold on the raw data.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.violations.is_empty() {
            write!(f, "valid")
        } else {
            for (i, v) in self.violations.iter().enumerate() {
                if i > 0 {
                    writeln!(f)?;
                }
                write!(f, "{v}")?;
            }
            Ok(())
        }
    }
}

#[derive(Error, Debug)]
pub enum GraphError {
    #[error("validation failed:\n{0}")]
    Invalid(ValidationReport),
    #[error("syntax error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("graph is not connected")]
    Disconnected,
    #[error("{0}")]
    Other(String),
}

/// A properly edge-colored bipartite multigraph: the dual 1-skeleton of a
/// colored triangulation (full color support) or of a colored building block
/// boundary (support without 0).
///
/// Immutable after construction; every operation returns a new value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColoredGraph {
    dimension: u8,
    support: ColorSupport,
    parity: Vec<Parity>,
    edges: Vec<Edge>,
    /// adj[v][c] = the unique edge of color c at v (properness makes this a bijection).
    adj: Vec<Vec<Option<EdgeId>>>,
}

/// Check all invariants on raw graph data. Errors are the output, not failures.
pub fn validate(
    dimension: u8,
    n_vertices: usize,
    edges: &[Edge],
    support: ColorSupport,
) -> ValidationReport {
    let mut report = ValidationReport::default();
    if n_vertices < 2 {
        report.violations.push(Violation::TooFewVertices { n: n_vertices });
    }
    if n_vertices % 2 != 0 {
        report.violations.push(Violation::OddVertexCount { n: n_vertices });
    }
    for (id, e) in edges.iter().enumerate() {
        if e.u == e.v {
            report.violations.push(Violation::SelfLoop { edge: id });
        }
        if e.u >= n_vertices || e.v >= n_vertices {
            report.violations.push(Violation::EndpointOutOfRange { edge: id });
        }
        if !support.contains(e.color, dimension) {
            report.violations.push(Violation::ColorOutOfSupport { edge: id, color: e.color });
        }
    }
    if !report.is_empty() {
        return report;
    }
    // Bipartiteness via 2-coloring, lowest-indexed vertex of each component white.
    match derive_parity(n_vertices, edges) {
        Ok(_) => {}
        Err(edge) => report.violations.push(Violation::NotBipartite { edge }),
    }
    // Proper coloring: exactly one incident edge of each supported color.
    let mut seen = vec![vec![0usize; dimension as usize + 1]; n_vertices];
    for e in edges {
        seen[e.u][e.color as usize] += 1;
        seen[e.v][e.color as usize] += 1;
    }
    for v in 0..n_vertices {
        for c in support.colors(dimension) {
            match seen[v][c as usize] {
                0 => report.violations.push(Violation::MissingColor { vertex: v, color: c }),
                1 => {}
                _ => report.violations.push(Violation::RepeatedColor { vertex: v, color: c }),
            }
        }
    }
    report
}

/// 2-color the vertices, fixing the lowest-indexed vertex of each component
/// white. Returns the offending edge id on a parity clash.
fn derive_parity(n_vertices: usize, edges: &[Edge]) -> Result<Vec<Parity>, EdgeId> {
    let mut incident: Vec<Vec<EdgeId>> = vec![Vec::new(); n_vertices];
    for (id, e) in edges.iter().enumerate() {
        incident[e.u].push(id);
        incident[e.v].push(id);
    }
    let mut parity: Vec<Option<Parity>> = vec![None; n_vertices];
    for start in 0..n_vertices {
        if parity[start].is_some() {
            continue;
        }
        parity[start] = Some(Parity::White);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let px = parity[x].unwrap();
            for &id in &incident[x] {
                let y = edges[id].other(x);
                match parity[y] {
                    None => {
                        parity[y] = Some(px.flip());
                        queue.push_back(y);
                    }
                    Some(py) => {
                        if py == px {
                            return Err(id);
                        }
                    }
                }
            }
        }
    }
    Ok(parity.into_iter().map(|p| p.unwrap()).collect())
}

impl ColoredGraph {
    pub fn new(
        dimension: u8,
        n_vertices: usize,
        edges: Vec<Edge>,
        support: ColorSupport,
    ) -> Result<ColoredGraph, GraphError> {
        let report = validate(dimension, n_vertices, &edges, support);
        if !report.is_empty() {
            return Err(GraphError::Invalid(report));
        }
        let parity = derive_parity(n_vertices, &edges).expect("validated bipartite");
        let mut adj = vec![vec![None; dimension as usize + 1]; n_vertices];
        for (id, e) in edges.iter().enumerate() {
            adj[e.u][e.color as usize] = Some(id);
            adj[e.v][e.color as usize] = Some(id);
        }
        Ok(ColoredGraph { dimension, support, parity, edges, adj })
    }

    pub fn dimension(&self) -> u8 {
        self.dimension
    }

    pub fn support(&self) -> ColorSupport {
        self.support
    }

    pub fn n_vertices(&self) -> usize {
        self.parity.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> Edge {
        self.edges[id]
    }

    pub fn parity(&self, v: VertexId) -> Parity {
        self.parity[v]
    }

    pub fn vertices(&self) -> std::ops::Range<VertexId> {
        0..self.n_vertices()
    }

    pub fn white_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.parity[v] == Parity::White)
    }

    pub fn black_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|&v| self.parity[v] == Parity::Black)
    }

    /// The unique edge of color `c` at `v` (None only when c is outside the support).
    pub fn edge_at(&self, v: VertexId, c: Color) -> Option<EdgeId> {
        self.adj[v].get(c as usize).copied().flatten()
    }

    /// The other end of the unique edge of color `c` at `v`.
    pub fn neighbor(&self, v: VertexId, c: Color) -> Option<VertexId> {
        self.edge_at(v, c).map(|id| self.edges[id].other(v))
    }

    /// The white endpoint of an edge.
    pub fn white_end(&self, id: EdgeId) -> VertexId {
        let e = self.edges[id];
        if self.parity[e.u] == Parity::White {
            e.u
        } else {
            e.v
        }
    }

    pub fn black_end(&self, id: EdgeId) -> VertexId {
        let e = self.edges[id];
        if self.parity[e.u] == Parity::Black {
            e.u
        } else {
            e.v
        }
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(0).len() == self.n_vertices()
    }

    /// Vertices reachable from `start`, sorted.
    pub fn component_of(&self, start: VertexId) -> Vec<VertexId> {
        let mut seen = vec![false; self.n_vertices()];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for c in self.support.colors(self.dimension) {
                if let Some(y) = self.neighbor(x, c) {
                    if !seen[y] {
                        seen[y] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        (0..self.n_vertices()).filter(|&v| seen[v]).collect()
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        let mut assigned = vec![false; self.n_vertices()];
        for v in self.vertices() {
            if !assigned[v] {
                let comp = self.component_of(v);
                for &x in &comp {
                    assigned[x] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    /// Extract the induced graph on a sorted vertex subset, keeping only edges
    /// with both ends inside. Vertices are reindexed by rank in `vertices`.
    /// Returns the new graph data without validating properness.
    pub fn induced_edges(&self, vertices: &[VertexId]) -> Vec<Edge> {
        let rank: std::collections::HashMap<VertexId, usize> =
            vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        self.edges
            .iter()
            .filter(|e| rank.contains_key(&e.u) && rank.contains_key(&e.v))
            .map(|e| Edge::new(rank[&e.u], rank[&e.v], e.color))
            .collect()
    }

    /// Split into per-component `ColoredGraph`s (vertex ids compacted per
    /// component, preserving order). Each component is validated.
    pub fn split_components(&self) -> Vec<ColoredGraph> {
        self.components()
            .into_iter()
            .map(|comp| {
                let edges = self.induced_edges(&comp);
                ColoredGraph::new(self.dimension, comp.len(), edges, self.support)
                    .expect("component of a valid graph is valid")
            })
            .collect()
    }
}

/// A colored graph over colors `{1..d}` only: the dual of a colored building
/// block, determined by its boundary triangulation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Bubble {
    graph: ColoredGraph,
    tag: String,
}

impl Bubble {
    pub fn new(graph: ColoredGraph, tag: impl Into<String>) -> Result<Bubble, GraphError> {
        if graph.support() != ColorSupport::NoZero {
            return Err(GraphError::Other("bubble must not carry color 0".into()));
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Bubble { graph, tag: tag.into() })
    }

    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn n_vertices(&self) -> usize {
        self.graph.n_vertices()
    }
}

/// Parse the `cg` text format. Parity is assigned by 2-coloring each component
/// with its lowest-indexed vertex white. The color support is inferred: a graph
/// without any color-0 edge is read as a bubble.
pub fn parse_graph(text: &str) -> Result<ColoredGraph, GraphError> {
    let mut header: Option<(u8, usize)> = None;
    let mut edges: Vec<Edge> = Vec::new();
    let mut any_zero = false;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        match parts.next() {
            Some("cg") => {
                if header.is_some() {
                    return Err(GraphError::Syntax { line: line_no, msg: "duplicate header".into() });
                }
                let d: u8 = parse_field(parts.next(), line_no, "dimension")?;
                let n: usize = parse_field(parts.next(), line_no, "vertex count")?;
                if parts.next().is_some() {
                    return Err(GraphError::Syntax { line: line_no, msg: "trailing tokens".into() });
                }
                if d == 0 {
                    return Err(GraphError::Syntax { line: line_no, msg: "dimension must be positive".into() });
                }
                header = Some((d, n));
            }
            Some("e") => {
                if header.is_none() {
                    return Err(GraphError::Syntax { line: line_no, msg: "edge before header".into() });
                }
                let u: usize = parse_field(parts.next(), line_no, "endpoint")?;
                let v: usize = parse_field(parts.next(), line_no, "endpoint")?;
                let c: u8 = parse_field(parts.next(), line_no, "color")?;
                if parts.next().is_some() {
                    return Err(GraphError::Syntax { line: line_no, msg: "trailing tokens".into() });
                }
                if c == 0 {
                    any_zero = true;
                }
                edges.push(Edge::new(u, v, c));
            }
            Some(tok) => {
                return Err(GraphError::Syntax {
                    line: line_no,
                    msg: format!("unknown record `{tok}`"),
                })
            }
            None => unreachable!(),
        }
    }
    let (d, n) = header.ok_or(GraphError::Syntax { line: 1, msg: "missing `cg` header".into() })?;
    let support = if any_zero { ColorSupport::Full } else { ColorSupport::NoZero };
    ColoredGraph::new(d, n, edges, support)
}

fn parse_field<T: std::str::FromStr>(
    tok: Option<&str>,
    line: usize,
    what: &str,
) -> Result<T, GraphError> {
    tok.ok_or_else(|| GraphError::Syntax { line, msg: format!("missing {what}") })?
        .parse()
        .map_err(|_| GraphError::Syntax { line, msg: format!("bad {what}") })
}

/// Serialize to the `cg` format. Byte-stable: edge lines are ordered by
/// (color, min endpoint, max endpoint, insertion rank).
pub fn serialize_graph(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "cg {} {}", g.dimension(), g.n_vertices()).unwrap();
    let mut order: Vec<EdgeId> = (0..g.n_edges()).collect();
    order.sort_by_key(|&id| {
        let e = g.edge(id);
        (e.color, e.u, e.v, id)
    });
    for id in order {
        let e = g.edge(id);
        writeln!(out, "e {} {} {}", e.u, e.v, e.color).unwrap();
    }
    out
}
