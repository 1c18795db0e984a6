//! Counting structure dual to simplices: bicolored cycles, Gurau degree,
//! p-bubbles, boundary bubbles and the flip-interaction color set.

use std::collections::BTreeMap;
use std::collections::HashMap;

use num_rational::Rational64;
use thiserror::Error;

use crate::graph::{
    Color, ColorSupport, ColoredGraph, Edge, EdgeId, GraphError, VertexId,
};

#[derive(Error, Debug)]
pub enum CensusError {
    #[error("graph carries no color 0 (bubble input)")]
    NoColorZero,
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge {0} does not have color 0")]
    WrongColor(EdgeId),
    #[error("the two edges must be distinct")]
    SameEdge,
    #[error("vertex subset is not a colored subgraph: color {color} leaves it at vertex {vertex}")]
    NotColoredSubgraph { vertex: VertexId, color: Color },
    #[error("empty or invalid color subset")]
    BadColorSubset,
}

/// All bicolored cycles, grouped by unordered color pair.
#[derive(Clone, Debug)]
pub struct CycleCensus {
    /// (a, b) with a < b, mapped to the cycles as edge-id sequences. A cycle
    /// starts at its smallest edge id, traversed with the white endpoint of
    /// that edge first.
    pub pairs: BTreeMap<(Color, Color), Vec<Vec<EdgeId>>>,
}

impl CycleCensus {
    pub fn count(&self, a: Color, b: Color) -> usize {
        let key = (a.min(b), a.max(b));
        self.pairs.get(&key).map_or(0, |c| c.len())
    }

    /// C_0 = sum over a of C_{0a}.
    pub fn c0(&self) -> usize {
        self.pairs
            .iter()
            .filter(|((a, _), _)| *a == 0)
            .map(|(_, c)| c.len())
            .sum()
    }

    pub fn total(&self) -> usize {
        self.pairs.values().map(|c| c.len()).sum()
    }

    /// The cycle of colors {a,b} through an edge of color a or b.
    pub fn cycle_through(&self, a: Color, b: Color, edge: EdgeId) -> Option<&[EdgeId]> {
        let key = (a.min(b), a.max(b));
        self.pairs
            .get(&key)?
            .iter()
            .find(|cyc| cyc.contains(&edge))
            .map(|c| c.as_slice())
    }
}

/// Connected components of the restriction to two colors; by properness and
/// bipartiteness each component is a cycle alternating the two colors.
pub fn cycle_census(g: &ColoredGraph) -> CycleCensus {
    let d = g.dimension();
    let colors: Vec<Color> = g.support().colors(d).collect();
    let mut pairs = BTreeMap::new();
    for i in 0..colors.len() {
        for j in i + 1..colors.len() {
            let (a, b) = (colors[i], colors[j]);
            pairs.insert((a, b), cycles_for_pair(g, a, b));
        }
    }
    CycleCensus { pairs }
}

fn cycles_for_pair(g: &ColoredGraph, a: Color, b: Color) -> Vec<Vec<EdgeId>> {
    let mut visited = vec![false; g.n_edges()];
    let mut cycles = Vec::new();
    for start in 0..g.n_edges() {
        let ec = g.edge(start).color;
        if visited[start] || (ec != a && ec != b) {
            continue;
        }
        // walk from the white endpoint of the start edge
        let mut seq = Vec::new();
        let mut at = g.white_end(start);
        let mut eid = start;
        loop {
            visited[eid] = true;
            seq.push(eid);
            at = g.edge(eid).other(at);
            let next_color = if g.edge(eid).color == a { b } else { a };
            eid = g.edge_at(at, next_color).expect("proper coloring");
            if eid == start {
                break;
            }
        }
        cycles.push(seq);
    }
    cycles
}

/// Gurau degree with the integrality verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GurauDegree {
    pub value: Rational64,
    pub is_nonnegative_integer: bool,
}

/// omega = d + d(d-1)/4 * n - C_total, computed exactly over the rationals.
pub fn gurau_degree(g: &ColoredGraph) -> Result<GurauDegree, CensusError> {
    if g.support() != ColorSupport::Full {
        return Err(CensusError::NoColorZero);
    }
    if !g.is_connected() {
        return Err(CensusError::Disconnected);
    }
    let d = g.dimension() as i64;
    let n = g.n_vertices() as i64;
    let total = cycle_census(g).total() as i64;
    let value = Rational64::from_integer(d)
        + Rational64::new(d * (d - 1), 4) * Rational64::from_integer(n)
        - Rational64::from_integer(total);
    let is_nonnegative_integer = value.is_integer() && value >= Rational64::from_integer(0);
    Ok(GurauDegree { value, is_nonnegative_integer })
}

/// One connected component of the restriction of a graph to a color subset.
#[derive(Clone, Debug)]
pub struct PComponent {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

#[derive(Clone, Debug)]
pub struct PBubbleCensus {
    pub colors: Vec<Color>,
    pub components: Vec<PComponent>,
}

impl PBubbleCensus {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    pub fn component_containing(&self, v: VertexId) -> usize {
        self.components
            .iter()
            .position(|c| c.vertices.binary_search(&v).is_ok())
            .expect("components partition the vertex set")
    }
}

/// Connected components of the restriction to edges with colors in `P`,
/// keeping all vertices.
pub fn p_bubbles(g: &ColoredGraph, p: &[Color]) -> Result<PBubbleCensus, CensusError> {
    let d = g.dimension();
    if p.is_empty() || p.iter().any(|&c| !g.support().contains(c, d)) {
        return Err(CensusError::BadColorSubset);
    }
    let mut colors: Vec<Color> = p.to_vec();
    colors.sort_unstable();
    colors.dedup();
    let mut comp: Vec<Option<usize>> = vec![None; g.n_vertices()];
    let mut components = Vec::new();
    for start in g.vertices() {
        if comp[start].is_some() {
            continue;
        }
        let id = components.len();
        let mut vertices = vec![start];
        comp[start] = Some(id);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &c in &colors {
                if let Some(y) = g.neighbor(x, c) {
                    if comp[y].is_none() {
                        comp[y] = Some(id);
                        vertices.push(y);
                        queue.push_back(y);
                    }
                }
            }
        }
        vertices.sort_unstable();
        components.push(PComponent { vertices, edges: Vec::new() });
    }
    for (id, e) in g.edges().iter().enumerate() {
        if colors.contains(&e.color) {
            components[comp[e.u].unwrap()].edges.push(id);
        }
    }
    Ok(PBubbleCensus { colors, components })
}

/// The boundary bubble of a colored subgraph, with original vertex ids kept
/// on the free vertices.
#[derive(Clone, Debug)]
pub struct BoundaryBubble {
    /// Bubble-support graph on the free vertices (possibly disconnected).
    pub graph: ColoredGraph,
    /// orig_ids[i] = vertex id in the host graph of boundary vertex i.
    pub orig_ids: Vec<VertexId>,
}

/// Checks the colored-subgraph precondition on a vertex subset: every edge of
/// color 1..d incident to a subset vertex must stay inside. Returns the sorted
/// subset and the sorted free vertices (those whose color-0 edge leaves the
/// subset or is absent).
fn check_colored_subgraph(
    g: &ColoredGraph,
    h: &[VertexId],
) -> Result<(Vec<VertexId>, Vec<VertexId>), CensusError> {
    let mut hs: Vec<VertexId> = h.to_vec();
    hs.sort_unstable();
    hs.dedup();
    let inside = |v: VertexId| hs.binary_search(&v).is_ok();
    for &v in &hs {
        for c in 1..=g.dimension() {
            if let Some(u) = g.neighbor(v, c) {
                if !inside(u) {
                    return Err(CensusError::NotColoredSubgraph { vertex: v, color: c });
                }
            }
        }
    }
    let free: Vec<VertexId> = hs
        .iter()
        .copied()
        .filter(|&v| match g.neighbor(v, 0) {
            Some(u) => !inside(u),
            None => true,
        })
        .collect();
    Ok((hs, free))
}

/// Boundary bubble: one edge of color c per maximal open {0,c}-alternating
/// path inside `h`. The result satisfies bubble invariants componentwise.
pub fn boundary_bubble(g: &ColoredGraph, h: &[VertexId]) -> Result<BoundaryBubble, CensusError> {
    let (hs, free) = check_colored_subgraph(g, h)?;
    let inside = |v: VertexId| hs.binary_search(&v).is_ok();
    let rank: HashMap<VertexId, usize> = free.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut edges = Vec::new();
    for c in 1..=g.dimension() {
        let mut done = vec![false; free.len()];
        for (i, &start) in free.iter().enumerate() {
            if done[i] {
                continue;
            }
            // walk the open {0,c} path beginning with the color-c edge
            let mut at = start;
            loop {
                at = g.neighbor(at, c).expect("colored subgraph keeps color edges inside");
                match g.neighbor(at, 0) {
                    Some(next) if inside(next) => at = next,
                    _ => break, // `at` is free
                }
            }
            let j = rank[&at];
            done[i] = true;
            done[j] = true;
            edges.push(Edge::new(i, j, c));
        }
    }
    let graph = ColoredGraph::new(g.dimension(), free.len(), edges, ColorSupport::NoZero)
        .map_err(|e| match e {
            GraphError::Invalid(_) => CensusError::BadColorSubset,
            _ => CensusError::BadColorSubset,
        })?;
    Ok(BoundaryBubble { graph, orig_ids: free })
}

/// The host graph with a colored subgraph replaced by its boundary bubble.
#[derive(Clone, Debug)]
pub struct BoundaryReplacement {
    pub graph: ColoredGraph,
    /// Map from old edge id to new edge id for every edge that survives
    /// (edges outside the subgraph and the crossing color-0 edges).
    pub edge_map: HashMap<EdgeId, EdgeId>,
    /// Map from old vertex id to new vertex id for every surviving vertex
    /// (the complement and the free vertices).
    pub vertex_map: HashMap<VertexId, VertexId>,
}

/// Replace the colored subgraph on `h` by its boundary bubble, keeping the
/// complement and the crossing color-0 edges.
pub fn replace_with_boundary(
    g: &ColoredGraph,
    h: &[VertexId],
) -> Result<BoundaryReplacement, CensusError> {
    let (hs, _) = check_colored_subgraph(g, h)?;
    let inside = |v: VertexId| hs.binary_search(&v).is_ok();
    let boundary = boundary_bubble(g, h)?;

    // new vertex set: complement vertices then boundary (free) vertices,
    // reindexed in increasing original id
    let mut keep: Vec<VertexId> = g.vertices().filter(|&v| !inside(v)).collect();
    keep.extend_from_slice(&boundary.orig_ids);
    keep.sort_unstable();
    let rank: HashMap<VertexId, usize> = keep.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut edges = Vec::new();
    let mut edge_map = HashMap::new();
    for (id, e) in g.edges().iter().enumerate() {
        let (iu, iv) = (inside(e.u), inside(e.v));
        let survives = match (iu, iv) {
            (false, false) => true,
            // crossing edges are color 0 with the inside end free
            (true, false) | (false, true) => e.color == 0,
            (true, true) => false,
        };
        if survives {
            edge_map.insert(id, edges.len());
            edges.push(Edge::new(rank[&e.u], rank[&e.v], e.color));
        }
    }
    for (i, e) in boundary.graph.edges().iter().enumerate() {
        let (u, v) = (boundary.orig_ids[e.u], boundary.orig_ids[e.v]);
        let _ = i;
        edges.push(Edge::new(rank[&u], rank[&v], e.color));
    }
    let graph = ColoredGraph::new(g.dimension(), keep.len(), edges, g.support())
        .map_err(|_| CensusError::BadColorSubset)?;
    Ok(BoundaryReplacement { graph, edge_map, vertex_map: rank })
}

/// I_G(e1, e2): the colors c for which the same {0,c}-cycle goes along both
/// edges.
pub fn interaction_colors(
    g: &ColoredGraph,
    e1: EdgeId,
    e2: EdgeId,
) -> Result<Vec<Color>, CensusError> {
    if e1 == e2 {
        return Err(CensusError::SameEdge);
    }
    for &e in &[e1, e2] {
        if g.edge(e).color != 0 {
            return Err(CensusError::WrongColor(e));
        }
    }
    let mut out = Vec::new();
    for c in 1..=g.dimension() {
        if same_zero_c_cycle(g, c, e1, e2) {
            out.push(c);
        }
    }
    Ok(out)
}

fn same_zero_c_cycle(g: &ColoredGraph, c: Color, e1: EdgeId, e2: EdgeId) -> bool {
    // walk the {0,c}-cycle through e1 and look for e2
    let start = e1;
    let mut at = g.white_end(start);
    let mut eid = start;
    loop {
        at = g.edge(eid).other(at);
        let next_color = if g.edge(eid).color == 0 { c } else { 0 };
        eid = g.edge_at(at, next_color).expect("proper coloring");
        if eid == e2 {
            return true;
        }
        if eid == start {
            return false;
        }
    }
}

/// Count closed {0,c}-cycles lying entirely within a vertex subset (using only
/// the subset's internal color-0 edges).
pub fn c0_within(g: &ColoredGraph, vertices: &[VertexId]) -> usize {
    let mut vs: Vec<VertexId> = vertices.to_vec();
    vs.sort_unstable();
    let inside = |v: VertexId| vs.binary_search(&v).is_ok();
    let census = cycle_census(g);
    let mut count = 0;
    for ((a, _b), cycles) in &census.pairs {
        if *a != 0 {
            continue;
        }
        for cyc in cycles {
            if cyc
                .iter()
                .all(|&eid| inside(g.edge(eid).u) && inside(g.edge(eid).v))
            {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_graph;

    #[test]
    fn supermelon_census() {
        let g = fixtures::supermelon3();
        let census = cycle_census(&g);
        for a in 0..4u8 {
            for b in a + 1..4 {
                assert_eq!(census.count(a, b), 1, "pair {{{a},{b}}}");
            }
        }
        assert_eq!(census.c0(), 3);
        assert_eq!(census.total(), 6);
    }

    #[test]
    fn k33_census() {
        let g = fixtures::k33().graph().clone();
        let census = cycle_census(&g);
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let cycles = &census.pairs[&(a, b)];
            assert_eq!(cycles.len(), 1);
            assert_eq!(cycles[0].len(), 6);
        }
    }

    #[test]
    fn octa_census() {
        let g = fixtures::octa().graph().clone();
        let census = cycle_census(&g);
        for (a, b) in [(1, 2), (1, 3), (2, 3)] {
            let cycles = &census.pairs[&(a, b)];
            assert_eq!(cycles.len(), 2);
            assert!(cycles.iter().all(|c| c.len() == 4));
        }
        assert_eq!(census.total(), 6); // F = V/2 + 2
    }

    #[test]
    fn every_edge_lies_on_d_cycles() {
        let g = fixtures::octa().graph().clone();
        let census = cycle_census(&g);
        for eid in 0..g.n_edges() {
            let mut hits = 0;
            for cycles in census.pairs.values() {
                for cyc in cycles {
                    if cyc.contains(&eid) {
                        hits += 1;
                    }
                }
            }
            assert_eq!(hits, 2); // each color has two partner colors in a bubble
        }
    }

    #[test]
    fn supermelon_gurau_degree() {
        let g = fixtures::supermelon3();
        let deg = gurau_degree(&g).unwrap();
        assert_eq!(deg.value, Rational64::from_integer(0));
        assert!(deg.is_nonnegative_integer);
    }

    #[test]
    fn gurau_rejects_bubbles() {
        let b = fixtures::octa();
        assert!(matches!(gurau_degree(b.graph()), Err(CensusError::NoColorZero)));
    }

    #[test]
    fn p_bubble_counts() {
        let g = fixtures::supermelon3();
        assert_eq!(p_bubbles(&g, &[0, 2, 3]).unwrap().count(), 1);
        assert_eq!(p_bubbles(&g, &[1, 2, 3]).unwrap().count(), 1);
        // two-color restriction reproduces the cycle census counts
        let census = cycle_census(&g);
        for (a, b) in [(0u8, 1u8), (1, 2), (2, 3)] {
            assert_eq!(p_bubbles(&g, &[a, b]).unwrap().count(), census.count(a, b));
        }
    }

    fn two_edge_cut_graph() -> ColoredGraph {
        // Two 2-vertex bubbles joined by two color-0 edges (a 2-edge-cut).
        let text = "cg 3 4\n\
                    e 0 1 1\ne 0 1 2\ne 0 1 3\n\
                    e 2 3 1\ne 2 3 2\ne 2 3 3\n\
                    e 1 2 0\ne 0 3 0\n";
        parse_graph(text).unwrap()
    }

    #[test]
    fn boundary_of_one_side_of_a_two_edge_cut() {
        let g = two_edge_cut_graph();
        // H = one bubble; both color-0 edges leave it, so both vertices are free.
        let b = boundary_bubble(&g, &[0, 1]).unwrap();
        assert_eq!(b.orig_ids, vec![0, 1]);
        assert_eq!(b.graph.n_vertices(), 2);
        assert_eq!(b.graph.n_edges(), 3);
        assert!(b.graph.is_connected());
    }

    #[test]
    fn boundary_with_no_internal_zero_edges_is_the_bubble_union() {
        let g = fixtures::octa().graph().clone();
        let all: Vec<_> = g.vertices().collect();
        let b = boundary_bubble(&g, &all).unwrap();
        assert_eq!(b.graph.n_vertices(), 8);
        assert_eq!(b.graph.n_edges(), 12);
        use crate::canon::{canonical_form, CanonMode};
        assert_eq!(
            canonical_form(&b.graph, CanonMode::ColorsFixed).unwrap(),
            canonical_form(&g, CanonMode::ColorsFixed).unwrap()
        );
    }

    #[test]
    fn interaction_colors_on_two_edge_cut() {
        let g = two_edge_cut_graph();
        let zero_edges: Vec<EdgeId> = (0..g.n_edges()).filter(|&e| g.edge(e).color == 0).collect();
        let i = interaction_colors(&g, zero_edges[0], zero_edges[1]).unwrap();
        assert_eq!(i, vec![1, 2, 3]);
    }
}
