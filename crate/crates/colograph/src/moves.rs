//! Graph rewriting: color-0 edge flips, contractions, dipole removal and
//! insertion, connected sums, and the dipole-reduction driver used for sphere
//! recognition.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::census::{cycle_census, interaction_colors, p_bubbles, CensusError};
use crate::embedding::{embedding_stats, three_bubble_components};
use crate::graph::{
    Color, ColorSupport, ColoredGraph, Edge, EdgeId, GraphError, Parity, VertexId,
};

#[derive(Error, Debug)]
pub enum MoveError {
    #[error("edge {0} does not have color 0")]
    WrongColor(EdgeId),
    #[error("the two edges must be distinct")]
    SameEdge,
    #[error("the 2-vertex closed graph contracts to nothing")]
    ContractionSentinel,
    #[error("not a removable dipole: the two side bubbles coincide")]
    SharedSideBubble,
    #[error("dipole not present in the graph")]
    AbsentDipole,
    #[error("inconsistent insertion location: {0}")]
    BadLocation(String),
    #[error("connected sum endpoints must be black in the first and white in the second graph")]
    ParityMismatch,
    #[error("graphs must share dimension and color support")]
    SupportMismatch,
    #[error("{0}")]
    Census(#[from] CensusError),
    #[error("{0}")]
    Graph(#[from] GraphError),
}

/// Outcome of a color-0 edge flip. Deltas are recounted from scratch, never
/// derived from the law they are used to test.
#[derive(Clone, Debug)]
pub struct FlipResult {
    /// One graph when the result stays connected, two otherwise. In the
    /// connected case edge ids are preserved (the two flipped edges are
    /// rewritten in place).
    pub components: Vec<ColoredGraph>,
    pub c0_before: usize,
    pub c0_after: usize,
    /// I_G(e1, e2) measured on the input graph.
    pub interaction: Vec<Color>,
}

/// Replace e1 = (w1, b1), e2 = (w2, b2) with (w1, b2), (w2, b1), pairing the
/// white end of e1 with the black end of e2.
pub fn flip(g: &ColoredGraph, e1: EdgeId, e2: EdgeId) -> Result<FlipResult, MoveError> {
    if e1 == e2 {
        return Err(MoveError::SameEdge);
    }
    for &e in &[e1, e2] {
        if g.edge(e).color != 0 {
            return Err(MoveError::WrongColor(e));
        }
    }
    let interaction = interaction_colors(g, e1, e2)?;
    let c0_before = cycle_census(g).c0();

    let (w1, b1) = (g.white_end(e1), g.black_end(e1));
    let (w2, b2) = (g.white_end(e2), g.black_end(e2));
    let mut edges = g.edges().to_vec();
    edges[e1] = Edge::new(w1, b2, 0);
    edges[e2] = Edge::new(w2, b1, 0);
    let flipped = ColoredGraph::new(g.dimension(), g.n_vertices(), edges, g.support())?;

    let components = if flipped.is_connected() {
        vec![flipped]
    } else {
        flipped.split_components()
    };
    let c0_after = components.iter().map(|c| cycle_census(c).c0()).sum();
    Ok(FlipResult { components, c0_before, c0_after, interaction })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionCase {
    /// e parallel to two colored edges; result connected, C_0 drops by 2.
    ParallelTwo,
    /// e parallel to one colored edge, flanking faces distinct; C_0 drops by 1.
    ParallelOneConnected,
    /// e parallel to one colored edge, flanking faces equal; splits in two.
    ParallelOneSplit,
    /// e parallel to no colored edge.
    ParallelNone,
}

#[derive(Clone, Debug)]
pub struct ContractResult {
    pub components: Vec<ColoredGraph>,
    pub case: ContractionCase,
    pub c0_before: usize,
    pub c0_after: usize,
}

/// Contract a color-0 edge: delete its endpoints, drop edges parallel to it,
/// and rejoin the liberated edge-ends color by color.
pub fn contract(g: &ColoredGraph, e: EdgeId) -> Result<ContractResult, MoveError> {
    if g.edge(e).color != 0 {
        return Err(MoveError::WrongColor(e));
    }
    if g.n_vertices() == 2 {
        return Err(MoveError::ContractionSentinel);
    }
    let c0_before = cycle_census(g).c0();
    let w = g.white_end(e);
    let b = g.black_end(e);
    let mut parallel = 0usize;
    let mut joins: Vec<Edge> = Vec::new();
    for c in 1..=g.dimension() {
        let a = g.neighbor(w, c).unwrap();
        if a == b {
            parallel += 1; // this parallel edge vanishes
        } else {
            let z = g.neighbor(b, c).unwrap();
            joins.push(Edge::new(a, z, c));
        }
    }
    // surviving vertices, compacted
    let keep: Vec<VertexId> = g.vertices().filter(|&v| v != w && v != b).collect();
    let rank = |v: VertexId| keep.binary_search(&v).unwrap();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|ed| ed.u != w && ed.u != b && ed.v != w && ed.v != b)
        .map(|ed| Edge::new(rank(ed.u), rank(ed.v), ed.color))
        .collect();
    edges.extend(joins.iter().map(|ed| Edge::new(rank(ed.u), rank(ed.v), ed.color)));
    let contracted = ColoredGraph::new(g.dimension(), keep.len(), edges, g.support())?;
    let components = if contracted.is_connected() {
        vec![contracted]
    } else {
        contracted.split_components()
    };
    let case = match (parallel, components.len()) {
        (2, _) => ContractionCase::ParallelTwo,
        (1, 1) => ContractionCase::ParallelOneConnected,
        (1, _) => ContractionCase::ParallelOneSplit,
        _ => ContractionCase::ParallelNone,
    };
    let c0_after = components.iter().map(|c| cycle_census(c).c0()).sum();
    Ok(ContractResult { components, case, c0_before, c0_after })
}

/// A set of parallel edges between two vertices, annotated with the side
/// conditions of the dipole moves.
#[derive(Clone, Debug)]
pub struct Dipole {
    pub white: VertexId,
    pub black: VertexId,
    /// Colors of the parallel edges (H), sorted; h = colors.len().
    pub colors: Vec<Color>,
    /// Complementary colors P within the graph's support.
    pub p_colors: Vec<Color>,
    /// True iff the P-bubbles at the two endpoints are distinct components.
    pub distinct_p_bubbles: bool,
    /// Genus of the P-bubble at the white resp. black end, when |P| = 3.
    pub side_genus: [Option<usize>; 2],
    /// Whether the side bubble represents a ball: genus 0 at |P| = 3,
    /// always true at |P| <= 2.
    pub side_ball: [bool; 2],
}

impl Dipole {
    pub fn h(&self) -> usize {
        self.colors.len()
    }

    /// Legal to remove: the endpoints sit in distinct P-bubbles.
    pub fn is_removable(&self) -> bool {
        self.distinct_p_bubbles
    }

    /// Removal preserves topology: removable with at least one ball side.
    pub fn is_topological(&self) -> bool {
        self.is_removable() && (self.side_ball[0] || self.side_ball[1])
    }
}

/// All vertex pairs joined by at least one edge, annotated as dipoles.
pub fn find_dipoles(g: &ColoredGraph) -> Vec<Dipole> {
    let d = g.dimension();
    let support: Vec<Color> = g.support().colors(d).collect();
    let mut census_cache: BTreeMap<Vec<Color>, crate::census::PBubbleCensus> = BTreeMap::new();
    let mut out = Vec::new();
    for w in g.white_vertices() {
        let mut partners: BTreeMap<VertexId, Vec<Color>> = BTreeMap::new();
        for &c in &support {
            partners.entry(g.neighbor(w, c).unwrap()).or_default().push(c);
        }
        for (b, colors) in partners {
            let p_colors: Vec<Color> =
                support.iter().copied().filter(|c| !colors.contains(c)).collect();
            let (distinct, side_genus, side_ball) = if p_colors.is_empty() {
                // degenerate: the pair is a whole component
                (false, [None, None], [false, false])
            } else {
                let census = census_cache
                    .entry(p_colors.clone())
                    .or_insert_with(|| p_bubbles(g, &p_colors).expect("valid color subset"));
                let (iw, ib) = (census.component_containing(w), census.component_containing(b));
                let mut genus = [None, None];
                let mut ball = [p_colors.len() <= 2, p_colors.len() <= 2];
                if p_colors.len() == 3 {
                    let comps =
                        three_bubble_components(g, [p_colors[0], p_colors[1], p_colors[2]])
                            .expect("three supported colors");
                    for (slot, idx) in [(0, iw), (1, ib)] {
                        let s = embedding_stats(&comps[idx]).expect("3-bubble is cubic");
                        genus[slot] = Some(s.genus);
                        ball[slot] = s.genus == 0;
                    }
                }
                (iw != ib, genus, ball)
            };
            out.push(Dipole {
                white: w,
                black: b,
                colors,
                p_colors,
                distinct_p_bubbles: distinct,
                side_genus,
                side_ball,
            });
        }
    }
    out
}

/// Where a dipole was removed: enough to reinsert it and recover the original
/// graph up to isomorphism.
#[derive(Clone, Debug)]
pub struct DipoleLocation {
    /// Colors of the parallel edges of the reinserted pair.
    pub colors: Vec<Color>,
    /// For each complementary color, the edge of that color (in the graph
    /// after removal) to cut and route through the new pair.
    pub cut: Vec<(EdgeId, Color)>,
}

/// Remove a dipole: delete the two vertices and rejoin the remaining
/// same-colored edge-ends. Returns the graph, the topological flag, and the
/// location record for reinsertion.
pub fn remove_dipole(
    g: &ColoredGraph,
    dip: &Dipole,
) -> Result<(ColoredGraph, bool, DipoleLocation), MoveError> {
    // revalidate presence
    for &c in &dip.colors {
        if g.neighbor(dip.white, c) != Some(dip.black) {
            return Err(MoveError::AbsentDipole);
        }
    }
    if !dip.is_removable() {
        return Err(MoveError::SharedSideBubble);
    }
    let (w, b) = (dip.white, dip.black);
    let mut joins: Vec<Edge> = Vec::new();
    for &c in &dip.p_colors {
        let a = g.neighbor(w, c).unwrap();
        let z = g.neighbor(b, c).unwrap();
        joins.push(Edge::new(a, z, c));
    }
    let keep: Vec<VertexId> = g.vertices().filter(|&v| v != w && v != b).collect();
    let rank = |v: VertexId| keep.binary_search(&v).unwrap();
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .filter(|ed| ed.u != w && ed.u != b && ed.v != w && ed.v != b)
        .map(|ed| Edge::new(rank(ed.u), rank(ed.v), ed.color))
        .collect();
    let first_join = edges.len();
    edges.extend(joins.iter().map(|ed| Edge::new(rank(ed.u), rank(ed.v), ed.color)));
    let cut = dip
        .p_colors
        .iter()
        .enumerate()
        .map(|(i, &c)| (first_join + i, c))
        .collect();
    let out = ColoredGraph::new(g.dimension(), keep.len(), edges, g.support())?;
    Ok((out, dip.is_topological(), DipoleLocation { colors: dip.colors.clone(), cut }))
}

/// Insert a dipole at a recorded location: cut the named edges, appending a
/// white and a black vertex joined by the named parallel colors, and route
/// each cut edge through the pair.
pub fn insert_dipole(g: &ColoredGraph, loc: &DipoleLocation) -> Result<ColoredGraph, MoveError> {
    let d = g.dimension();
    let support: Vec<Color> = g.support().colors(d).collect();
    let mut named: Vec<Color> = loc.colors.clone();
    named.extend(loc.cut.iter().map(|&(_, c)| c));
    named.sort_unstable();
    if named != support {
        return Err(MoveError::BadLocation(
            "parallel colors plus cut colors must cover the support exactly".into(),
        ));
    }
    let w = g.n_vertices();
    let b = w + 1;
    let mut edges = g.edges().to_vec();
    for &(eid, c) in &loc.cut {
        if eid >= g.n_edges() || g.edge(eid).color != c {
            return Err(MoveError::BadLocation(format!("edge {eid} is not a color-{c} edge")));
        }
        // white end of the cut edge keeps color c toward the new black vertex
        let (zw, zb) = (g.white_end(eid), g.black_end(eid));
        edges[eid] = Edge::new(zw, b, c);
        edges.push(Edge::new(w, zb, c));
    }
    for &c in &loc.colors {
        edges.push(Edge::new(w, b, c));
    }
    Ok(ColoredGraph::new(d, w + 2, edges, g.support())?)
}

/// Connected sum: delete a black vertex of g1 and a white vertex of g2,
/// joining the hanging edges of equal colors.
pub fn connected_sum(
    g1: &ColoredGraph,
    v1: VertexId,
    g2: &ColoredGraph,
    v2: VertexId,
) -> Result<ColoredGraph, MoveError> {
    if g1.dimension() != g2.dimension() || g1.support() != g2.support() {
        return Err(MoveError::SupportMismatch);
    }
    if g1.parity(v1) != Parity::Black || g2.parity(v2) != Parity::White {
        return Err(MoveError::ParityMismatch);
    }
    let keep1: Vec<VertexId> = g1.vertices().filter(|&v| v != v1).collect();
    let keep2: Vec<VertexId> = g2.vertices().filter(|&v| v != v2).collect();
    let rank1 = |v: VertexId| keep1.binary_search(&v).unwrap();
    let rank2 = |v: VertexId| keep1.len() + keep2.binary_search(&v).unwrap();
    let mut edges: Vec<Edge> = Vec::new();
    for ed in g1.edges() {
        if ed.u != v1 && ed.v != v1 {
            edges.push(Edge::new(rank1(ed.u), rank1(ed.v), ed.color));
        }
    }
    for ed in g2.edges() {
        if ed.u != v2 && ed.v != v2 {
            edges.push(Edge::new(rank2(ed.u), rank2(ed.v), ed.color));
        }
    }
    for c in g1.support().colors(g1.dimension()) {
        let a = g1.neighbor(v1, c).unwrap();
        let z = g2.neighbor(v2, c).unwrap();
        edges.push(Edge::new(rank1(a), rank2(z), c));
    }
    Ok(ColoredGraph::new(g1.dimension(), keep1.len() + keep2.len(), edges, g1.support())?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionVerdict {
    CanonicalSphere,
    Stuck,
}

#[derive(Clone, Debug)]
pub struct AppliedMove {
    pub white: VertexId,
    pub black: VertexId,
    pub colors: Vec<Color>,
    pub topological: bool,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub moves: Vec<AppliedMove>,
    pub terminal: ColoredGraph,
    pub verdict: ReductionVerdict,
}

/// Greedy sphere recognition: apply only topologically-flagged dipole
/// removals, larger h first, ties by smallest (white, black) pair, until the
/// 2-vertex closed graph remains, nothing applies, or the budget runs out.
/// One-sided: canonical-sphere is sound, stuck is inconclusive.
pub fn reduce_to_canonical(g: &ColoredGraph, move_budget: Option<usize>) -> ReductionTrace {
    let budget = move_budget.unwrap_or(10 * g.n_vertices());
    let mut cur = g.clone();
    let mut moves = Vec::new();
    loop {
        if cur.n_vertices() == 2 {
            // a valid 2-vertex closed graph is the canonical sphere graph
            return ReductionTrace { moves, terminal: cur, verdict: ReductionVerdict::CanonicalSphere };
        }
        if moves.len() >= budget {
            return ReductionTrace { moves, terminal: cur, verdict: ReductionVerdict::Stuck };
        }
        let mut candidates: Vec<Dipole> =
            find_dipoles(&cur).into_iter().filter(|d| d.is_topological()).collect();
        candidates.sort_by_key(|d| (std::cmp::Reverse(d.h()), d.white, d.black));
        let Some(dip) = candidates.into_iter().next() else {
            return ReductionTrace { moves, terminal: cur, verdict: ReductionVerdict::Stuck };
        };
        let (next, topological, _) = remove_dipole(&cur, &dip).expect("candidate is removable");
        if !next.is_connected() {
            return ReductionTrace { moves, terminal: cur, verdict: ReductionVerdict::Stuck };
        }
        moves.push(AppliedMove {
            white: dip.white,
            black: dip.black,
            colors: dip.colors.clone(),
            topological,
        });
        cur = next;
    }
}

/// True iff every 3-color restriction of a closed d=3 graph has only planar
/// components: the testable necessary condition for representing a manifold.
pub fn all_three_bubbles_planar(g: &ColoredGraph) -> bool {
    debug_assert_eq!(g.dimension(), 3);
    debug_assert_eq!(g.support(), ColorSupport::Full);
    for p in [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]] {
        let comps = three_bubble_components(g, p).expect("supported colors");
        for comp in comps {
            if embedding_stats(&comp).expect("cubic").genus != 0 {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{canonical_form, CanonMode};
    use crate::fixtures;
    use crate::graph::parse_graph;

    fn two_edge_cut_graph() -> ColoredGraph {
        let text = "cg 3 4\n\
                    e 0 1 1\ne 0 1 2\ne 0 1 3\n\
                    e 2 3 1\ne 2 3 2\ne 2 3 3\n\
                    e 1 2 0\ne 0 3 0\n";
        parse_graph(text).unwrap()
    }

    fn zero_edges(g: &ColoredGraph) -> Vec<EdgeId> {
        (0..g.n_edges()).filter(|&e| g.edge(e).color == 0).collect()
    }

    #[test]
    fn flip_across_a_two_edge_cut_disconnects() {
        let g = two_edge_cut_graph();
        let ze = zero_edges(&g);
        let r = flip(&g, ze[0], ze[1]).unwrap();
        assert_eq!(r.interaction, vec![1, 2, 3]);
        assert_eq!(r.components.len(), 2);
        // C_0(G) = C_0(G_1) + C_0(G_2) - 3
        assert_eq!(r.c0_before, r.c0_after - 3);
    }

    #[test]
    fn flip_is_an_involution() {
        let g = two_edge_cut_graph();
        let ze = zero_edges(&g);
        // flip in place on the unsplit graph, then flip back
        let (w1, b1) = (g.white_end(ze[0]), g.black_end(ze[0]));
        let (w2, b2) = (g.white_end(ze[1]), g.black_end(ze[1]));
        let mut edges = g.edges().to_vec();
        edges[ze[0]] = Edge::new(w1, b2, 0);
        edges[ze[1]] = Edge::new(w2, b1, 0);
        let once = ColoredGraph::new(3, 4, edges, ColorSupport::Full).unwrap();
        let back = flip(&once, ze[0], ze[1]).unwrap();
        assert_eq!(back.components.len(), 1);
        assert_eq!(back.components[0], g);
    }

    #[test]
    fn flip_delta_law_on_connected_results() {
        // all color-0 edge pairs of a 6-vertex closed melonic graph
        let g = chain_of_melons(3);
        let ze = zero_edges(&g);
        for i in 0..ze.len() {
            for j in i + 1..ze.len() {
                let r = flip(&g, ze[i], ze[j]).unwrap();
                if r.components.len() == 1 {
                    let expect = r.c0_before as i64 - 3 + 2 * r.interaction.len() as i64;
                    assert_eq!(r.c0_after as i64, expect);
                }
            }
        }
    }

    /// Cyclic chain of k melon pairs: pair i joined internally by colors
    /// {1,2,3}, color-0 edges closing the cycle.
    fn chain_of_melons(k: usize) -> ColoredGraph {
        let mut edges = Vec::new();
        for i in 0..k {
            let (w, b) = (2 * i, 2 * i + 1);
            for c in 1..=3 {
                edges.push(Edge::new(w, b, c));
            }
            edges.push(Edge::new(b, (2 * i + 2) % (2 * k), 0));
        }
        ColoredGraph::new(3, 2 * k, edges, ColorSupport::Full).unwrap()
    }

    #[test]
    fn contract_two_parallel_edges_drops_two_cycles() {
        // in the 2-edge-cut graph no color-0 edge has 2 parallel colored
        // edges; build a case-1 pattern instead: 4-vertex graph where e is
        // parallel to colors 1,2
        let text = "cg 3 4\n\
                    e 0 1 0\ne 0 1 1\ne 0 1 2\n\
                    e 0 3 3\ne 1 2 3\n\
                    e 2 3 0\ne 2 3 1\ne 2 3 2\n";
        let g = parse_graph(text).unwrap();
        let e = (0..g.n_edges()).find(|&e| g.edge(e) == Edge::new(0, 1, 0)).unwrap();
        let r = contract(&g, e).unwrap();
        assert_eq!(r.case, ContractionCase::ParallelTwo);
        assert_eq!(r.components.len(), 1);
        assert_eq!(r.c0_before, r.c0_after + 2);
    }

    #[test]
    fn contract_supermelon_is_rejected() {
        let g = fixtures::supermelon3();
        assert!(matches!(contract(&g, 0), Err(MoveError::ContractionSentinel)));
    }

    #[test]
    fn contract_one_parallel_edge_drops_one_cycle() {
        let text = "cg 3 6\n\
                    e 0 1 0\ne 0 1 1\n\
                    e 0 3 2\ne 1 2 2\n\
                    e 0 5 3\ne 1 4 3\n\
                    e 2 3 1\ne 4 5 1\n\
                    e 2 3 3\ne 4 5 2\n\
                    e 2 5 0\ne 3 4 0\n";
        let g = parse_graph(text).unwrap();
        let e = (0..g.n_edges()).find(|&e| g.edge(e) == Edge::new(0, 1, 0)).unwrap();
        let r = contract(&g, e).unwrap();
        assert!(matches!(
            r.case,
            ContractionCase::ParallelOneConnected | ContractionCase::ParallelOneSplit
        ));
        assert_eq!(r.c0_before, r.c0_after + 1);
    }

    #[test]
    fn supermelon_dipole_is_degenerate() {
        let g = fixtures::supermelon3();
        let dips = find_dipoles(&g);
        assert_eq!(dips.len(), 1);
        assert_eq!(dips[0].h(), 4);
        assert!(!dips[0].is_removable());
    }

    #[test]
    fn melonic_chain_has_h3_dipoles() {
        let g = chain_of_melons(3);
        let dips = find_dipoles(&g);
        assert!(dips.iter().any(|d| d.h() == 3 && d.is_topological()));
    }

    #[test]
    fn remove_then_insert_restores_the_graph() {
        let g = chain_of_melons(3);
        for dip in find_dipoles(&g).into_iter().filter(|d| d.is_removable()) {
            let (h, flag, loc) = remove_dipole(&g, &dip).unwrap();
            assert!(flag);
            let back = insert_dipole(&h, &loc).unwrap();
            assert_eq!(
                canonical_form(&back, CanonMode::ColorsFixed).unwrap(),
                canonical_form(&g, CanonMode::ColorsFixed).unwrap()
            );
        }
    }

    #[test]
    fn melonic_chains_reduce_to_the_sphere() {
        for k in 2..=5 {
            let g = chain_of_melons(k);
            let t = reduce_to_canonical(&g, None);
            assert_eq!(t.verdict, ReductionVerdict::CanonicalSphere, "k = {k}");
            assert!(t.moves.iter().all(|m| m.topological));
        }
    }

    #[test]
    fn connected_sum_with_the_sphere_is_neutral() {
        let g = chain_of_melons(2);
        let s = fixtures::supermelon3();
        let black = g.black_vertices().next().unwrap();
        let sum = connected_sum(&g, black, &s, 0).unwrap();
        assert_eq!(sum.n_vertices(), g.n_vertices());
        assert!(sum.is_connected());
        // the deleted vertex comes back as a cancellable pair, so here the
        // sum is outright isomorphic to g
        assert_eq!(
            canonical_form(&sum, CanonMode::ColorsFixed).unwrap(),
            canonical_form(&g, CanonMode::ColorsFixed).unwrap()
        );
        let t = reduce_to_canonical(&sum, None);
        assert_eq!(t.verdict, ReductionVerdict::CanonicalSphere);
    }

    #[test]
    fn two_cut_graph_is_a_connected_sum_of_its_flip_components() {
        let g = two_edge_cut_graph();
        let ze = zero_edges(&g);
        let r = flip(&g, ze[0], ze[1]).unwrap();
        assert_eq!(r.components.len(), 2);
        let (g1, g2) = (&r.components[0], &r.components[1]);
        // pad g1 with a 3-dipole on its fresh color-0 edge, then sum away the
        // padding's black vertex against a white vertex of g2
        let e0 = zero_edges(g1)[0];
        let padded = insert_dipole(
            g1,
            &DipoleLocation { colors: vec![1, 2, 3], cut: vec![(e0, 0)] },
        )
        .unwrap();
        let b1 = padded.n_vertices() - 1; // appended black vertex
        assert_eq!(padded.parity(b1), Parity::Black);
        let w2 = g2.white_vertices().next().unwrap();
        let sum = connected_sum(&padded, b1, g2, w2).unwrap();
        assert_eq!(
            canonical_form(&sum, CanonMode::ColorsFixed).unwrap(),
            canonical_form(&g, CanonMode::ColorsFixed).unwrap()
        );
    }

    #[test]
    fn three_bubble_planarity_gate() {
        assert!(all_three_bubbles_planar(&fixtures::supermelon3()));
        assert!(all_three_bubbles_planar(&chain_of_melons(3)));
    }
}
