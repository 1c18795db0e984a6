//! Generators feeding the sweeps: exhaustive small-bubble enumeration,
//! fixture multisets, and seeded random closed graphs.

use std::collections::BTreeSet;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::canon::{canonical_form, CanonMode, CanonicalCode};
use crate::fixtures;
use crate::graph::{Bubble, ColorSupport, ColoredGraph, Edge, VertexId};
use crate::search::realize_pairing;

/// All connected d=3 bubbles with exactly `n` vertices, one per isomorphism
/// class (vertex relabelings and color permutations). The color-1 matching is
/// fixed to (white i, black i), which loses no class; color-2 and color-3
/// matchings range over all permutations and duplicates are removed by
/// canonical code.
pub fn enumerate_bubbles(n: usize) -> Vec<Bubble> {
    assert!(n >= 2 && n % 2 == 0);
    let half = n / 2;
    let white = |i: usize| 2 * i;
    let black = |j: usize| 2 * j + 1;
    let mut seen: BTreeSet<CanonicalCode> = BTreeSet::new();
    let mut out = Vec::new();
    let ids: Vec<usize> = (0..half).collect();
    for p2 in ids.iter().copied().permutations(half) {
        for p3 in ids.iter().copied().permutations(half) {
            let mut edges = Vec::with_capacity(3 * half);
            for i in 0..half {
                edges.push(Edge::new(white(i), black(i), 1));
                edges.push(Edge::new(white(i), black(p2[i]), 2));
                edges.push(Edge::new(white(i), black(p3[i]), 3));
            }
            let g = ColoredGraph::new(3, n, edges, ColorSupport::NoZero)
                .expect("three disjoint matchings form a proper coloring");
            if !g.is_connected() {
                continue;
            }
            let code = canonical_form(&g, CanonMode::ColorsPermutable).expect("connected");
            if seen.insert(code) {
                let tag = format!("gen{}v{}", n, out.len());
                out.push(Bubble::new(g, tag).expect("connected bubble"));
            }
        }
    }
    out
}

pub fn enumerate_bubbles_up_to(max_vertices: usize) -> Vec<Bubble> {
    let mut out = Vec::new();
    let mut n = 2;
    while n <= max_vertices {
        out.extend(enumerate_bubbles(n));
        n += 2;
    }
    out
}

/// Every nonempty multiset of fixture bubbles with total vertex count at most
/// `max_vertices`, in deterministic order.
pub fn fixture_multisets(max_vertices: usize) -> Vec<Vec<Bubble>> {
    let kinds = fixtures::all_bubbles();
    let mut out = Vec::new();
    let mut current: Vec<Bubble> = Vec::new();
    fn go(
        kinds: &[Bubble],
        from: usize,
        room: usize,
        current: &mut Vec<Bubble>,
        out: &mut Vec<Vec<Bubble>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        for k in from..kinds.len() {
            let sz = kinds[k].n_vertices();
            if sz <= room {
                current.push(kinds[k].clone());
                go(kinds, k, room - sz, current, out);
                current.pop();
            }
        }
    }
    go(&kinds, 0, max_vertices, &mut current, &mut out);
    out
}

/// A uniformly random gluing of the multiset (not necessarily connected).
pub fn random_gluing<R: Rng>(bubbles: &[Bubble], rng: &mut R) -> ColoredGraph {
    let mut edges = Vec::new();
    let mut whites: Vec<VertexId> = Vec::new();
    let mut blacks: Vec<VertexId> = Vec::new();
    let mut offset = 0;
    for b in bubbles {
        let g = b.graph();
        edges.extend(g.edges().iter().map(|e| Edge::new(e.u + offset, e.v + offset, e.color)));
        whites.extend(g.white_vertices().map(|v| v + offset));
        blacks.extend(g.black_vertices().map(|v| v + offset));
        offset += g.n_vertices();
    }
    blacks.shuffle(rng);
    for (&w, &bk) in whites.iter().zip(blacks.iter()) {
        edges.push(Edge::new(w, bk, 0));
    }
    ColoredGraph::new(3, offset, edges, ColorSupport::Full).expect("gluing is valid")
}

/// A random connected closed graph built from a random fixture multiset with
/// at most `max_vertices` vertices.
pub fn random_closed_graph<R: Rng>(max_vertices: usize, rng: &mut R) -> ColoredGraph {
    let kinds = fixtures::all_bubbles();
    loop {
        let mut picked: Vec<Bubble> = Vec::new();
        let mut room = max_vertices;
        loop {
            let fitting: Vec<&Bubble> =
                kinds.iter().filter(|b| b.n_vertices() <= room).collect();
            if fitting.is_empty() {
                break;
            }
            let b = fitting[rng.gen_range(0..fitting.len())];
            room -= b.n_vertices();
            picked.push(b.clone());
            // stop early with growing probability to vary the multiset size
            if rng.gen_bool(0.35) {
                break;
            }
        }
        if picked.is_empty() {
            continue;
        }
        let g = random_gluing(&picked, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// A random connected single-bubble closed graph (a random pairing).
pub fn random_pairing_graph<R: Rng>(b: &Bubble, rng: &mut R) -> ColoredGraph {
    let g = b.graph();
    let whites: Vec<VertexId> = g.white_vertices().collect();
    let mut blacks: Vec<VertexId> = g.black_vertices().collect();
    loop {
        blacks.shuffle(rng);
        let mut pi = vec![usize::MAX; g.n_vertices()];
        for (&w, &bk) in whites.iter().zip(blacks.iter()) {
            pi[w] = bk;
            pi[bk] = w;
        }
        let closed = realize_pairing(b, &pi);
        if closed.is_connected() {
            return closed;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn bubble_counts_small() {
        // 2 vertices: only the 3-parallel-edge bubble
        assert_eq!(enumerate_bubbles(2).len(), 1);
        // 4 vertices: one class up to color permutation
        assert_eq!(enumerate_bubbles(4).len(), 1);
    }

    #[test]
    fn six_vertex_bubbles() {
        let bs = enumerate_bubbles(6);
        // two melonic classes and K33
        assert_eq!(bs.len(), 3);
        let k33code =
            canonical_form(crate::fixtures::k33().graph(), CanonMode::ColorsPermutable).unwrap();
        assert!(bs
            .iter()
            .any(|b| canonical_form(b.graph(), CanonMode::ColorsPermutable).unwrap() == k33code));
    }

    #[test]
    fn fixture_multisets_respect_budget() {
        let sets = fixture_multisets(6);
        assert!(!sets.is_empty());
        for s in &sets {
            let total: usize = s.iter().map(|b| b.n_vertices()).sum();
            assert!(total <= 6);
        }
        // [melon_b2], [melon_b2 x2], [melon_b2 x3], [melon_b2, q1b4], [q1b4],
        // [melon6a], [melon6b], [k33]
        assert_eq!(sets.len(), 8);
    }

    #[test]
    fn random_closed_graphs_are_connected_and_bounded() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_closed_graph(12, &mut rng);
            assert!(g.is_connected());
            assert!(g.n_vertices() <= 12);
        }
    }
}
