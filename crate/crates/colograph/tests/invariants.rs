//! Property tests over seeded random graphs.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use colograph::canon::{canonical_form, CanonMode};
use colograph::census::cycle_census;
use colograph::embedding::{is_melonic, is_melonic_seeded, replay_witness};
use colograph::generate::{enumerate_bubbles_up_to, random_closed_graph};
use colograph::graph::{parse_graph, serialize_graph, ColoredGraph, Edge};

fn random_graph(seed: u64) -> ColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_closed_graph(12, &mut rng)
}

/// Relabel vertices by a seeded random permutation.
fn relabel(g: &ColoredGraph, seed: u64) -> ColoredGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n_vertices()).collect();
    perm.shuffle(&mut rng);
    let edges: Vec<Edge> =
        g.edges().iter().map(|e| Edge::new(perm[e.u], perm[e.v], e.color)).collect();
    ColoredGraph::new(g.dimension(), g.n_vertices(), edges, g.support())
        .expect("relabeling preserves validity")
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn serialize_parse_roundtrip(seed in any::<u64>()) {
        let g = random_graph(seed);
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        prop_assert_eq!(serialize_graph(&back), text);
        prop_assert_eq!(back.n_vertices(), g.n_vertices());
        prop_assert_eq!(back.n_edges(), g.n_edges());
    }

    #[test]
    fn canonical_code_is_relabeling_invariant(seed in any::<u64>(), perm_seed in any::<u64>()) {
        let g = random_graph(seed);
        let h = relabel(&g, perm_seed);
        for mode in [CanonMode::ColorsFixed, CanonMode::ColorsPermutable] {
            prop_assert_eq!(
                canonical_form(&g, mode).unwrap(),
                canonical_form(&h, mode).unwrap()
            );
        }
    }

    #[test]
    fn census_handshake(seed in any::<u64>()) {
        // in each bicolored subgraph every edge lies on exactly one cycle
        let g = random_graph(seed);
        let census = cycle_census(&g);
        for ((a, b), cycles) in &census.pairs {
            let edge_count = g
                .edges()
                .iter()
                .filter(|e| e.color == *a || e.color == *b)
                .count();
            let total_len: usize = cycles.iter().map(|c| c.len()).sum();
            prop_assert_eq!(total_len, edge_count);
        }
    }
}

#[test]
fn melonic_recognition_is_order_independent() {
    for b in enumerate_bubbles_up_to(8) {
        let base = is_melonic(&b);
        assert!(replay_witness(&b, &base));
        for seed in 0..20u64 {
            let w = is_melonic_seeded(&b, seed);
            assert_eq!(w.melonic, base.melonic, "bubble {}", b.tag());
            assert!(replay_witness(&b, &w));
        }
    }
}
