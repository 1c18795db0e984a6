//! Exhaustive enumeration of pairings and gluings, brute-force cycle maxima,
//! edge-cut analysis and the maximal 2-cut checker.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use itertools::Itertools;
use rayon::prelude::*;
use thiserror::Error;

use crate::canon::{canonical_form, CanonMode, CanonicalCode};
use crate::census::{cycle_census, p_bubbles, CensusError};
use crate::embedding::{is_planar, EmbedError};
use crate::graph::{
    Bubble, Color, ColorSupport, ColoredGraph, Edge, EdgeId, GraphError, VertexId,
};

#[derive(Error, Debug)]
pub enum SearchError {
    #[error("vertex budget exceeded: need {needed}, budget {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("no bubble with index {0}")]
    BadBubbleIndex(usize),
    #[error("bubble {0} is not planar and not the marked one")]
    NonPlanarBubble(usize),
    #[error("{0}")]
    Census(#[from] CensusError),
    #[error("{0}")]
    Embed(#[from] EmbedError),
    #[error("{0}")]
    Graph(#[from] GraphError),
}

pub const DEFAULT_VERTEX_BUDGET: usize = 16;

/// A pairing: the color-0 involution closing a bubble into a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pairing {
    /// pi[v] = partner of v; a parity-swapping involution.
    pub pi: Vec<VertexId>,
    /// Whether the realized closed graph is connected.
    pub connected: bool,
}

/// Close a bubble with the color-0 matching {v, pi[v]}.
pub fn realize_pairing(b: &Bubble, pi: &[VertexId]) -> ColoredGraph {
    let g = b.graph();
    let mut edges = g.edges().to_vec();
    for w in g.white_vertices() {
        edges.push(Edge::new(w, pi[w], 0));
    }
    ColoredGraph::new(g.dimension(), g.n_vertices(), edges, ColorSupport::Full)
        .expect("a pairing closes a bubble into a valid graph")
}

/// Every bipartite perfect matching of the bubble, in lexicographic order of
/// the white-to-black assignment. A 2V-vertex bubble yields exactly V! items.
pub fn enumerate_pairings(b: &Bubble) -> Vec<Pairing> {
    let g = b.graph();
    let whites: Vec<VertexId> = g.white_vertices().collect();
    let blacks: Vec<VertexId> = g.black_vertices().collect();
    let mut out = Vec::new();
    for perm in blacks.iter().copied().permutations(blacks.len()) {
        let mut pi = vec![usize::MAX; g.n_vertices()];
        for (&w, &bk) in whites.iter().zip(perm.iter()) {
            pi[w] = bk;
            pi[bk] = w;
        }
        let connected = realize_pairing(b, &pi).is_connected();
        out.push(Pairing { pi, connected });
    }
    out
}

/// Result of a brute-force maximization sweep.
#[derive(Clone, Debug)]
pub struct MaxReport {
    /// Maximum C_0 over connected results.
    pub max_c0: usize,
    pub connected_count: usize,
    /// Maximizers before canonical dedup.
    pub maximizer_count: usize,
    /// One representative per colors-fixed isomorphism class.
    pub maximizers: Vec<ColoredGraph>,
}

fn collect_max(results: impl Iterator<Item = (usize, ColoredGraph)>, connected_count: usize) -> MaxReport {
    let mut max_c0 = 0;
    let mut raw: Vec<ColoredGraph> = Vec::new();
    for (c0, g) in results {
        if c0 > max_c0 {
            max_c0 = c0;
            raw.clear();
        }
        if c0 == max_c0 {
            raw.push(g);
        }
    }
    let maximizer_count = raw.len();
    let mut seen: BTreeMap<CanonicalCode, ColoredGraph> = BTreeMap::new();
    for g in raw {
        let code = canonical_form(&g, CanonMode::ColorsFixed).expect("maximizers are connected");
        seen.entry(code).or_insert(g);
    }
    MaxReport {
        max_c0,
        connected_count,
        maximizer_count,
        maximizers: seen.into_values().collect(),
    }
}

/// C_1(B) and its maximizer pairings, by exhausting all pairings.
pub fn max_pairings(b: &Bubble) -> MaxReport {
    let all = enumerate_pairings(b);
    let connected_count = all.iter().filter(|p| p.connected).count();
    collect_max(
        all.iter().filter(|p| p.connected).map(|p| {
            let g = realize_pairing(b, &p.pi);
            (cycle_census(&g).c0(), g)
        }),
        connected_count,
    )
}

#[derive(Clone, Debug)]
pub struct QEdgesReport {
    /// Number of parallel edges between the named pair.
    pub q: usize,
    /// q > d/2, the lemma's hypothesis.
    pub hypothesis_met: bool,
    pub holds: bool,
    /// Maximizer pairings with pi[v] != vbar.
    pub counterexamples: Vec<Pairing>,
}

/// Any pair joined by more than d/2 parallel edges is matched by every
/// maximizer pairing.
pub fn lemma_qedges_check(b: &Bubble, v: VertexId, vbar: VertexId) -> QEdgesReport {
    let g = b.graph();
    let q = (1..=g.dimension()).filter(|&c| g.neighbor(v, c) == Some(vbar)).count();
    let hypothesis_met = 2 * q > g.dimension() as usize;
    if !hypothesis_met {
        return QEdgesReport { q, hypothesis_met, holds: false, counterexamples: Vec::new() };
    }
    let all = enumerate_pairings(b);
    let max_c0 = all
        .iter()
        .filter(|p| p.connected)
        .map(|p| cycle_census(&realize_pairing(b, &p.pi)).c0())
        .max()
        .unwrap_or(0);
    let counterexamples: Vec<Pairing> = all
        .into_iter()
        .filter(|p| {
            p.connected
                && p.pi[v] != vbar
                && cycle_census(&realize_pairing(b, &p.pi)).c0() == max_c0
        })
        .collect();
    QEdgesReport { q, hypothesis_met, holds: counterexamples.is_empty(), counterexamples }
}

/// Disjoint union of bubbles: offset edges plus global white/black lists.
struct Union {
    dimension: u8,
    n: usize,
    edges: Vec<Edge>,
    whites: Vec<VertexId>,
    blacks: Vec<VertexId>,
}

fn disjoint_union(bubbles: &[Bubble], budget: usize) -> Result<Union, SearchError> {
    let needed: usize = bubbles.iter().map(|b| b.n_vertices()).sum();
    if needed > budget {
        return Err(SearchError::BudgetExceeded { needed, budget });
    }
    let dimension = bubbles.first().map_or(3, |b| b.graph().dimension());
    let mut edges = Vec::new();
    let mut whites = Vec::new();
    let mut blacks = Vec::new();
    let mut offset = 0;
    for b in bubbles {
        let g = b.graph();
        edges.extend(g.edges().iter().map(|e| Edge::new(e.u + offset, e.v + offset, e.color)));
        whites.extend(g.white_vertices().map(|v| v + offset));
        blacks.extend(g.black_vertices().map(|v| v + offset));
        offset += g.n_vertices();
    }
    Ok(Union { dimension, n: offset, edges, whites, blacks })
}

impl Union {
    /// Close the union with the color-0 matching whites[i] -> assignment[i].
    fn glue(&self, assignment: &[VertexId]) -> ColoredGraph {
        let mut edges = self.edges.clone();
        for (&w, &bk) in self.whites.iter().zip(assignment.iter()) {
            edges.push(Edge::new(w, bk, 0));
        }
        ColoredGraph::new(self.dimension, self.n, edges, ColorSupport::Full)
            .expect("a gluing of valid bubbles is a valid graph")
    }
}

/// Every color-0 perfect matching on the disjoint union of the bubbles.
pub fn enumerate_gluings(
    bubbles: &[Bubble],
    connected_only: bool,
    budget: usize,
) -> Result<Vec<ColoredGraph>, SearchError> {
    let u = disjoint_union(bubbles, budget)?;
    let mut out = Vec::new();
    for assignment in u.blacks.iter().copied().permutations(u.blacks.len()) {
        let g = u.glue(&assignment);
        if !connected_only || g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Brute-force C_max over connected gluings, partitioned for parallelism by
/// the image of the lowest white vertex.
pub fn max_gluings(bubbles: &[Bubble], budget: usize) -> Result<MaxReport, SearchError> {
    let u = disjoint_union(bubbles, budget)?;
    let parts: Vec<MaxReport> = (0..u.blacks.len())
        .into_par_iter()
        .map(|first| {
            let rest: Vec<VertexId> = u
                .blacks
                .iter()
                .copied()
                .enumerate()
                .filter(|&(i, _)| i != first)
                .map(|(_, b)| b)
                .collect();
            let mut connected_count = 0;
            let results: Vec<(usize, ColoredGraph)> = rest
                .iter()
                .copied()
                .permutations(rest.len())
                .filter_map(|tail| {
                    let mut assignment = vec![u.blacks[first]];
                    assignment.extend(tail);
                    let g = u.glue(&assignment);
                    if g.is_connected() {
                        connected_count += 1;
                        Some((cycle_census(&g).c0(), g))
                    } else {
                        None
                    }
                })
                .collect();
            collect_max(results.into_iter(), connected_count)
        })
        .collect();
    // merge: max, then union of maximizer lists, then dedup again
    let max_c0 = parts.iter().map(|p| p.max_c0).max().unwrap_or(0);
    let connected_count = parts.iter().map(|p| p.connected_count).sum();
    let maximizer_count = parts
        .iter()
        .filter(|p| p.max_c0 == max_c0)
        .map(|p| p.maximizer_count)
        .sum();
    let mut seen: BTreeMap<CanonicalCode, ColoredGraph> = BTreeMap::new();
    for p in parts.into_iter().filter(|p| p.max_c0 == max_c0) {
        for g in p.maximizers {
            let code = canonical_form(&g, CanonMode::ColorsFixed).expect("connected");
            seen.entry(code).or_insert(g);
        }
    }
    Ok(MaxReport { max_c0, connected_count, maximizer_count, maximizers: seen.into_values().collect() })
}

/// The color-0 edges crossing out of one bubble occurrence, partitioned into
/// edge-cuts by the external component they reach.
#[derive(Clone, Debug)]
pub struct CutPartition {
    pub bubble_vertices: Vec<VertexId>,
    /// Color-0 edges with both ends on the bubble.
    pub internal: Vec<EdgeId>,
    /// Crossing edges grouped by external component, ordered by smallest id.
    pub classes: Vec<Vec<EdgeId>>,
}

/// Bubble occurrences of a closed graph: the {1..d}-restriction components.
pub fn bubble_occurrences(g: &ColoredGraph) -> Vec<Vec<VertexId>> {
    let colors: Vec<Color> = (1..=g.dimension()).collect();
    p_bubbles(g, &colors)
        .expect("supported colors")
        .components
        .into_iter()
        .map(|c| c.vertices)
        .collect()
}

pub fn edge_cut_partition(g: &ColoredGraph, bubble: usize) -> Result<CutPartition, SearchError> {
    let occurrences = bubble_occurrences(g);
    let vertices = occurrences.get(bubble).ok_or(SearchError::BadBubbleIndex(bubble))?.clone();
    let inside = |v: VertexId| vertices.binary_search(&v).is_ok();
    let mut internal = Vec::new();
    let mut crossing = Vec::new();
    for (id, e) in g.edges().iter().enumerate() {
        if e.color != 0 {
            continue;
        }
        match (inside(e.u), inside(e.v)) {
            (true, true) => internal.push(id),
            (true, false) | (false, true) => crossing.push(id),
            (false, false) => {}
        }
    }
    // components of g with the crossing edges deleted
    let mut comp = vec![usize::MAX; g.n_vertices()];
    let mut next = 0;
    for start in g.vertices() {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next;
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for c in g.support().colors(g.dimension()) {
                if let Some(eid) = g.edge_at(x, c) {
                    if crossing.contains(&eid) {
                        continue;
                    }
                    let y = g.edge(eid).other(x);
                    if comp[y] == usize::MAX {
                        comp[y] = next;
                        queue.push_back(y);
                    }
                }
            }
        }
        next += 1;
    }
    let mut by_component: BTreeMap<usize, Vec<EdgeId>> = BTreeMap::new();
    for &eid in &crossing {
        let e = g.edge(eid);
        let external = if inside(e.u) { e.v } else { e.u };
        by_component.entry(comp[external]).or_default().push(eid);
    }
    let mut classes: Vec<Vec<EdgeId>> = by_component.into_values().collect();
    classes.sort_by_key(|c| c[0]);
    Ok(CutPartition { bubble_vertices: vertices, internal, classes })
}

/// Memoized C_1 values keyed by canonical bubble code (color permutations do
/// not change C_1, so the permutable code is used).
#[derive(Default)]
pub struct C1Cache {
    map: Mutex<HashMap<CanonicalCode, usize>>,
}

impl C1Cache {
    pub fn new() -> C1Cache {
        C1Cache::default()
    }

    pub fn c1(&self, b: &Bubble) -> usize {
        let code = canonical_form(b.graph(), CanonMode::ColorsPermutable)
            .expect("bubbles are connected");
        if let Some(&v) = self.map.lock().unwrap().get(&code) {
            return v;
        }
        let v = max_pairings(b).max_c0;
        self.map.lock().unwrap().insert(code, v);
        v
    }
}

#[derive(Clone, Debug)]
pub enum TwoCutViolation {
    /// A cut class of size other than 2.
    WrongClassSize { class: Vec<EdgeId> },
    /// A size-2 class whose bubble endpoints have equal parity, so no pairing
    /// can be assembled.
    Unpairable { class: Vec<EdgeId> },
    /// The assembled pairing is disconnected or below C_1.
    NonMaximalPairing { pi: Vec<VertexId>, c0: Option<usize>, c1: usize },
}

#[derive(Clone, Debug)]
pub struct MaxTwoCutVerdict {
    pub ok: bool,
    /// The realized pairing on the bubble (local ids) when ok.
    pub witness: Option<Vec<VertexId>>,
    pub violation: Option<TwoCutViolation>,
}

/// The maximal 2-cut property for one bubble occurrence: every external
/// attachment is a 2-edge-cut, and the pairing assembled from internal edges
/// plus 2-cut endpoint pairs maximizes C_0 over the bubble's pairings.
pub fn check_max_two_cut(
    g: &ColoredGraph,
    bubble: usize,
    cache: &C1Cache,
) -> Result<MaxTwoCutVerdict, SearchError> {
    let part = edge_cut_partition(g, bubble)?;
    let fail = |violation| {
        Ok(MaxTwoCutVerdict { ok: false, witness: None, violation: Some(violation) })
    };
    for class in &part.classes {
        if class.len() != 2 {
            return fail(TwoCutViolation::WrongClassSize { class: class.clone() });
        }
    }
    let vertices = &part.bubble_vertices;
    let rank = |v: VertexId| vertices.binary_search(&v).unwrap();
    let inside = |v: VertexId| vertices.binary_search(&v).is_ok();
    let mut pi = vec![usize::MAX; vertices.len()];
    for &eid in &part.internal {
        let e = g.edge(eid);
        pi[rank(e.u)] = rank(e.v);
        pi[rank(e.v)] = rank(e.u);
    }
    for class in &part.classes {
        let end = |eid: EdgeId| {
            let e = g.edge(eid);
            if inside(e.u) {
                e.u
            } else {
                e.v
            }
        };
        let (a, z) = (end(class[0]), end(class[1]));
        if g.parity(a) == g.parity(z) {
            return fail(TwoCutViolation::Unpairable { class: class.clone() });
        }
        pi[rank(a)] = rank(z);
        pi[rank(z)] = rank(a);
    }
    // realize pi on the standalone bubble
    let sub = ColoredGraph::new(
        g.dimension(),
        vertices.len(),
        g.induced_edges(vertices).into_iter().filter(|e| e.color != 0).collect(),
        ColorSupport::NoZero,
    )?;
    let b = Bubble::new(sub, "occurrence")?;
    let realized = realize_pairing(&b, &pi);
    let c1 = cache.c1(&b);
    if !realized.is_connected() {
        return fail(TwoCutViolation::NonMaximalPairing { pi, c0: None, c1 });
    }
    let c0 = cycle_census(&realized).c0();
    if c0 != c1 {
        return fail(TwoCutViolation::NonMaximalPairing { pi, c0: Some(c0), c1 });
    }
    Ok(MaxTwoCutVerdict { ok: true, witness: Some(pi), violation: None })
}

/// Closed-form maximum versus brute force, plus the two-sided equivalence
/// between maximizing and every bubble passing the max-2-cut check.
#[derive(Clone, Debug)]
pub struct OnlyPlanarReport {
    pub c1_values: Vec<usize>,
    pub formula: usize,
    pub brute_max: usize,
    pub formula_matches: bool,
    /// Maximizer set == set of connected gluings whose bubbles all pass.
    pub equivalence_holds: bool,
    pub maximizer_count: usize,
}

pub fn verify_only_planar(
    bubbles: &[Bubble],
    marked: usize,
    budget: usize,
) -> Result<OnlyPlanarReport, SearchError> {
    if marked >= bubbles.len() {
        return Err(SearchError::BadBubbleIndex(marked));
    }
    for (i, b) in bubbles.iter().enumerate() {
        if i != marked && !is_planar(b.graph())? {
            return Err(SearchError::NonPlanarBubble(i));
        }
    }
    let cache = C1Cache::new();
    let c1_values: Vec<usize> = bubbles.iter().map(|b| cache.c1(b)).collect();
    let formula = c1_values[marked]
        + c1_values
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != marked)
            .map(|(_, &c)| c - 3)
            .sum::<usize>();

    let u = disjoint_union(bubbles, budget)?;
    // (c0, all bubbles pass) per connected gluing, in partition order
    let evaluated: Vec<Vec<(usize, bool)>> = (0..u.blacks.len())
        .into_par_iter()
        .map(|first| {
            let rest: Vec<VertexId> = u
                .blacks
                .iter()
                .copied()
                .enumerate()
                .filter(|&(i, _)| i != first)
                .map(|(_, b)| b)
                .collect();
            rest.iter()
                .copied()
                .permutations(rest.len())
                .filter_map(|tail| {
                    let mut assignment = vec![u.blacks[first]];
                    assignment.extend(tail);
                    let g = u.glue(&assignment);
                    if !g.is_connected() {
                        return None;
                    }
                    let c0 = cycle_census(&g).c0();
                    let n_bubbles = bubble_occurrences(&g).len();
                    let pass = (0..n_bubbles).all(|i| {
                        check_max_two_cut(&g, i, &cache).map(|v| v.ok).unwrap_or(false)
                    });
                    Some((c0, pass))
                })
                .collect()
        })
        .collect();
    let flat: Vec<(usize, bool)> = evaluated.into_iter().flatten().collect();
    let brute_max = flat.iter().map(|&(c0, _)| c0).max().unwrap_or(0);
    let maximizer_count = flat.iter().filter(|&&(c0, _)| c0 == brute_max).count();
    let equivalence_holds = flat.iter().all(|&(c0, pass)| (c0 == brute_max) == pass);
    Ok(OnlyPlanarReport {
        c1_values,
        formula,
        brute_max,
        formula_matches: formula == brute_max,
        equivalence_holds,
        maximizer_count,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::parse_graph;

    #[test]
    fn pairing_counts() {
        assert_eq!(enumerate_pairings(&fixtures::melon_b2()).len(), 1);
        assert_eq!(enumerate_pairings(&fixtures::k33()).len(), 6);
        assert_eq!(enumerate_pairings(&fixtures::octa()).len(), 24);
    }

    #[test]
    fn melonic_c1_values() {
        for (b, expect) in [
            (fixtures::melon_b2(), 3),
            (fixtures::q1_b4(), 5),
            (fixtures::melon6a(), 7),
            (fixtures::melon6b(), 7),
        ] {
            let r = max_pairings(&b);
            assert_eq!(r.max_c0, expect, "{}", b.tag());
            // the melonic maximizer pairing is unique
            assert_eq!(r.maximizer_count, 1, "{}", b.tag());
        }
    }

    /// Independent C_1 oracle: count bicolored cycles as cycles of permutation
    /// compositions on the white vertices, never walking graph edges.
    fn c1_by_permutations(b: &Bubble) -> usize {
        let g = b.graph();
        let whites: Vec<VertexId> = g.white_vertices().collect();
        let blacks: Vec<VertexId> = g.black_vertices().collect();
        // rho[c][i] = index of the black end of the color-c edge at whites[i]
        let bidx: HashMap<VertexId, usize> = blacks.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let rho = |c: Color| -> Vec<usize> {
            whites.iter().map(|&w| bidx[&g.neighbor(w, c).unwrap()]).collect()
        };
        let count_cycles = |perm: Vec<usize>| -> usize {
            let mut seen = vec![false; perm.len()];
            let mut n = 0;
            for mut i in 0..perm.len() {
                if !seen[i] {
                    n += 1;
                    while !seen[i] {
                        seen[i] = true;
                        i = perm[i];
                    }
                }
            }
            n
        };
        let mut best = 0;
        for zeta in (0..whites.len()).permutations(whites.len()) {
            // zeta closes the bubble: whites[i] paired to blacks[zeta[i]]
            let mut c0 = 0;
            for c in 1..=g.dimension() {
                let r = rho(c);
                // follow color 0 then color c: white i -> black zeta[i] -> white j
                let inv: HashMap<usize, usize> = r.iter().enumerate().map(|(i, &x)| (x, i)).collect();
                let comp: Vec<usize> = (0..whites.len()).map(|i| inv[&zeta[i]]).collect();
                c0 += count_cycles(comp);
            }
            // connectivity check via the realized graph
            let mut pi = vec![usize::MAX; g.n_vertices()];
            for (i, &z) in zeta.iter().enumerate() {
                pi[whites[i]] = blacks[z];
                pi[blacks[z]] = whites[i];
            }
            if realize_pairing(b, &pi).is_connected() {
                best = best.max(c0);
            }
        }
        best
    }

    #[test]
    fn c1_of_octa_and_k33_against_permutation_oracle() {
        let octa = max_pairings(&fixtures::octa()).max_c0;
        assert_eq!(octa, c1_by_permutations(&fixtures::octa()));
        let k33 = max_pairings(&fixtures::k33()).max_c0;
        assert_eq!(k33, c1_by_permutations(&fixtures::k33()));
    }

    #[test]
    fn qedges_on_fixtures() {
        // the melonic pair of q1b4 is joined by colors 2 and 3
        let b = fixtures::q1_b4();
        let r = lemma_qedges_check(&b, 0, 1);
        assert_eq!(r.q, 2);
        assert!(r.hypothesis_met);
        assert!(r.holds);
        // octa has no multi-edge pair
        let b = fixtures::octa();
        let r = lemma_qedges_check(&b, 0, 1);
        assert_eq!(r.q, 1);
        assert!(!r.hypothesis_met);
    }

    #[test]
    fn gluing_counts() {
        let two_melons = [fixtures::melon_b2(), fixtures::melon_b2()];
        let all = enumerate_gluings(&two_melons, false, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!(all.len(), 2);
        let connected = enumerate_gluings(&two_melons, true, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!(connected.len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let bubbles = vec![fixtures::octa(), fixtures::octa(), fixtures::melon_b2()];
        assert!(matches!(
            enumerate_gluings(&bubbles, true, 16),
            Err(SearchError::BudgetExceeded { needed: 18, budget: 16 })
        ));
    }

    #[test]
    fn max_gluing_q1b4_with_melon() {
        let r = max_gluings(&[fixtures::q1_b4(), fixtures::melon_b2()], DEFAULT_VERTEX_BUDGET)
            .unwrap();
        assert_eq!(r.max_c0, 5); // C_1(Q1_B4) + C_1(MELON_B2) - 3
    }

    #[test]
    fn cut_partition_of_a_two_edge_cut() {
        let text = "cg 3 4\n\
                    e 0 1 1\ne 0 1 2\ne 0 1 3\n\
                    e 2 3 1\ne 2 3 2\ne 2 3 3\n\
                    e 1 2 0\ne 0 3 0\n";
        let g = parse_graph(text).unwrap();
        for idx in 0..2 {
            let p = edge_cut_partition(&g, idx).unwrap();
            assert!(p.internal.is_empty());
            assert_eq!(p.classes.len(), 1);
            assert_eq!(p.classes[0].len(), 2);
        }
        assert!(edge_cut_partition(&g, 2).is_err());
    }

    #[test]
    fn max_two_cut_on_maximizers() {
        let bubbles = [fixtures::q1_b4(), fixtures::melon_b2()];
        let r = max_gluings(&bubbles, DEFAULT_VERTEX_BUDGET).unwrap();
        let cache = C1Cache::new();
        for g in &r.maximizers {
            for idx in 0..bubble_occurrences(g).len() {
                assert!(check_max_two_cut(g, idx, &cache).unwrap().ok);
            }
        }
    }

    #[test]
    fn only_planar_on_two_q1b4() {
        let bubbles = vec![fixtures::q1_b4(), fixtures::q1_b4()];
        let r = verify_only_planar(&bubbles, 0, DEFAULT_VERTEX_BUDGET).unwrap();
        assert_eq!(r.formula, 7); // 5 + (5 - 3)
        assert_eq!(r.brute_max, 7);
        assert!(r.formula_matches);
        assert!(r.equivalence_holds);
    }

    #[test]
    fn non_planar_unmarked_bubble_is_rejected() {
        let bubbles = vec![fixtures::k33(), fixtures::melon_b2()];
        assert!(matches!(
            verify_only_planar(&bubbles, 1, DEFAULT_VERTEX_BUDGET),
            Err(SearchError::NonPlanarBubble(0))
        ));
    }
}
