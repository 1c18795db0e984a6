//! Canonical forms for isomorphism-aware deduplication.
//!
//! Proper edge coloring makes canonicalization cheap and exact: once a root
//! vertex is chosen, a breadth-first traversal that scans colors in increasing
//! order visits the whole connected graph in a determined order, so a full code
//! is the minimum over all root choices (exhaustive completion), the optional
//! global white/black exchange and, in permutable mode, all permutations of the
//! colors `{1..d}`. Color 0 is never permuted.

use itertools::Itertools;

use crate::graph::{Color, ColoredGraph, GraphError, Parity, VertexId};

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CanonMode {
    /// Only vertex relabeling (and the global parity swap) is allowed.
    ColorsFixed,
    /// Additionally, the colors `{1..d}` may be permuted.
    ColorsPermutable,
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CanonicalCode {
    pub mode_permutable: bool,
    pub bytes: Vec<u8>,
}

/// Canonical code of a connected valid graph. Two graphs receive equal codes
/// under a mode iff they are isomorphic under that mode's relabelings.
pub fn canonical_form(g: &ColoredGraph, mode: CanonMode) -> Result<CanonicalCode, GraphError> {
    if !g.is_connected() {
        return Err(GraphError::Disconnected);
    }
    Ok(CanonicalCode { mode_permutable: mode == CanonMode::ColorsPermutable, bytes: code_bytes(g, mode) })
}

/// Canonical code for a possibly disconnected graph: the sorted multiset of
/// component codes.
pub fn canonical_form_components(g: &ColoredGraph, mode: CanonMode) -> CanonicalCode {
    let mut parts: Vec<Vec<u8>> = g
        .split_components()
        .iter()
        .map(|c| code_bytes(c, mode))
        .collect();
    parts.sort();
    let mut bytes = Vec::new();
    for p in parts {
        bytes.extend_from_slice(&(p.len() as u32).to_le_bytes());
        bytes.extend_from_slice(&p);
    }
    CanonicalCode { mode_permutable: mode == CanonMode::ColorsPermutable, bytes }
}

fn code_bytes(g: &ColoredGraph, mode: CanonMode) -> Vec<u8> {
    let d = g.dimension();
    let colors: Vec<Color> = g.support().colors(d).collect();
    let permutable: Vec<Color> = colors.iter().copied().filter(|&c| c != 0).collect();

    let mut best: Option<Vec<u8>> = None;
    let perms: Vec<Vec<Color>> = match mode {
        CanonMode::ColorsFixed => vec![permutable.clone()],
        CanonMode::ColorsPermutable => permutable
            .iter()
            .copied()
            .permutations(permutable.len())
            .collect(),
    };
    for perm in &perms {
        // color_map[c] = image of color c under the permutation
        let mut color_map: Vec<Color> = (0..=d).collect();
        for (src, dst) in permutable.iter().zip(perm.iter()) {
            color_map[*src as usize] = *dst;
        }
        for swap in [false, true] {
            for root in g.vertices() {
                let cand = candidate(g, root, swap, &color_map);
                if best.as_ref().map_or(true, |b| cand < *b) {
                    best = Some(cand);
                }
            }
        }
    }
    best.unwrap()
}

/// Deterministic code for one (root, parity swap, color relabeling) choice.
/// The traversal scans vertices in label order and colors in increasing
/// relabeled order; properness makes the resulting labeling unique.
fn candidate(g: &ColoredGraph, root: VertexId, swap: bool, color_map: &[Color]) -> Vec<u8> {
    let d = g.dimension();
    // scan_order[i] = original color to follow at step i, sorted by relabeled color
    let mut scan_order: Vec<Color> = g.support().colors(d).collect();
    scan_order.sort_by_key(|&c| color_map[c as usize]);

    let n = g.n_vertices();
    let mut label: Vec<Option<usize>> = vec![None; n];
    let mut order: Vec<VertexId> = Vec::with_capacity(n);
    label[root] = Some(0);
    order.push(root);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &c in &scan_order {
            if let Some(y) = g.neighbor(x, c) {
                if label[y].is_none() {
                    label[y] = Some(order.len());
                    order.push(y);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), n);

    let mut triples: Vec<(Color, u16, u16)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (label[e.u].unwrap() as u16, label[e.v].unwrap() as u16);
            (color_map[e.color as usize], a.min(b), a.max(b))
        })
        .collect();
    triples.sort();

    let mut bytes = Vec::with_capacity(4 + n + triples.len() * 5);
    bytes.push(d);
    bytes.push(g.support().len(d) as u8);
    bytes.extend_from_slice(&(n as u16).to_le_bytes());
    for &v in &order {
        let mut p = g.parity(v);
        if swap {
            p = p.flip();
        }
        bytes.push(if p == Parity::White { 0 } else { 1 });
    }
    for (c, a, b) in triples {
        bytes.push(c);
        bytes.extend_from_slice(&a.to_le_bytes());
        bytes.extend_from_slice(&b.to_le_bytes());
    }
    bytes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{parse_graph, ColorSupport, ColoredGraph, Edge};

    fn relabel(g: &ColoredGraph, perm: &[usize]) -> ColoredGraph {
        let edges = g
            .edges()
            .iter()
            .map(|e| Edge::new(perm[e.u], perm[e.v], e.color))
            .collect();
        ColoredGraph::new(g.dimension(), g.n_vertices(), edges, g.support()).unwrap()
    }

    #[test]
    fn relabeling_invariance_on_k33() {
        let g = fixtures::k33().graph().clone();
        let h = relabel(&g, &[4, 2, 0, 5, 3, 1]);
        for mode in [CanonMode::ColorsFixed, CanonMode::ColorsPermutable] {
            assert_eq!(canonical_form(&g, mode).unwrap(), canonical_form(&h, mode).unwrap());
        }
    }

    #[test]
    fn four_vertex_bubble_colorings() {
        // The three d=3 colorings of the 4-vertex bubble: transversal edge
        // colored 1, 2 or 3.
        let variant = |t: u8| {
            let (a, b) = match t {
                1 => (2, 3),
                2 => (1, 3),
                _ => (1, 2),
            };
            let text = format!(
                "cg 3 4\ne 0 3 {t}\ne 1 2 {t}\ne 0 1 {a}\ne 2 3 {a}\ne 0 1 {b}\ne 2 3 {b}\n"
            );
            parse_graph(&text).unwrap()
        };
        let codes_fixed: Vec<_> = (1..=3)
            .map(|t| canonical_form(&variant(t), CanonMode::ColorsFixed).unwrap())
            .collect();
        let codes_perm: Vec<_> = (1..=3)
            .map(|t| canonical_form(&variant(t), CanonMode::ColorsPermutable).unwrap())
            .collect();
        assert_eq!(codes_perm[0], codes_perm[1]);
        assert_eq!(codes_perm[0], codes_perm[2]);
        assert_ne!(codes_fixed[0], codes_fixed[1]);
        assert_ne!(codes_fixed[0], codes_fixed[2]);
        assert_ne!(codes_fixed[1], codes_fixed[2]);
    }

    #[test]
    fn melon6a_differs_from_k33() {
        let a = fixtures::melon6a().graph().clone();
        let k = fixtures::k33().graph().clone();
        for mode in [CanonMode::ColorsFixed, CanonMode::ColorsPermutable] {
            assert_ne!(canonical_form(&a, mode).unwrap(), canonical_form(&k, mode).unwrap());
        }
    }

    #[test]
    fn melon6a_differs_from_melon6b() {
        let a = fixtures::melon6a().graph().clone();
        let b = fixtures::melon6b().graph().clone();
        assert_ne!(
            canonical_form(&a, CanonMode::ColorsPermutable).unwrap(),
            canonical_form(&b, CanonMode::ColorsPermutable).unwrap()
        );
    }

    #[test]
    fn color_permutation_invariance() {
        let g = fixtures::octa().graph().clone();
        // swap colors 1 and 3
        let edges = g
            .edges()
            .iter()
            .map(|e| {
                let c = match e.color {
                    1 => 3,
                    3 => 1,
                    c => c,
                };
                Edge::new(e.u, e.v, c)
            })
            .collect();
        let h = ColoredGraph::new(3, 8, edges, ColorSupport::NoZero).unwrap();
        assert_eq!(
            canonical_form(&g, CanonMode::ColorsPermutable).unwrap(),
            canonical_form(&h, CanonMode::ColorsPermutable).unwrap()
        );
    }

    #[test]
    fn disconnected_input_is_rejected() {
        let text = "cg 3 4\ne 0 1 1\ne 0 1 2\ne 0 1 3\ne 2 3 1\ne 2 3 2\ne 2 3 3\n";
        let g = parse_graph(text).unwrap();
        assert!(canonical_form(&g, CanonMode::ColorsFixed).is_err());
        // but the multiset form works
        let code = canonical_form_components(&g, CanonMode::ColorsFixed);
        let single = canonical_form(&fixtures::melon_b2().graph().clone(), CanonMode::ColorsFixed)
            .unwrap();
        let mut expect = Vec::new();
        for _ in 0..2 {
            expect.extend_from_slice(&(single.bytes.len() as u32).to_le_bytes());
            expect.extend_from_slice(&single.bytes);
        }
        assert_eq!(code.bytes, expect);
    }
}
