//! The canonical embedding of cubic 3-colored graphs as maps: faces are the
//! bicolored cycles, genus comes from Euler's formula, and melonicity is
//! recognized by greedy parallel-pair reduction.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::census::{cycle_census, p_bubbles};
use crate::graph::{Bubble, Color, ColorSupport, ColoredGraph, Edge, VertexId};

#[derive(Error, Debug)]
pub enum EmbedError {
    #[error("embedding needs a connected graph")]
    Disconnected,
    #[error("embedding needs a cubic 3-colored graph (got {0} colors)")]
    NotCubic(usize),
    #[error("face bound applies to planar input only (genus {0})")]
    NotPlanar(usize),
    #[error("color subset must have exactly three distinct supported colors")]
    BadColorTriple,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingStats {
    pub v: usize,
    pub e: usize,
    /// Faces: bicolored cycles over the three color pairs.
    pub f: usize,
    pub genus: usize,
    /// face degree (cycle length, always even) -> count
    pub face_profile: BTreeMap<usize, usize>,
}

/// Stats of the canonical embedding, rotation (123) around white and (132)
/// around black vertices; the faces are exactly the bicolored cycles, so all
/// counts come from the census and genus from Euler's formula.
pub fn embedding_stats(g: &ColoredGraph) -> Result<EmbeddingStats, EmbedError> {
    if g.support() != ColorSupport::NoZero || g.dimension() != 3 {
        return Err(EmbedError::NotCubic(g.support().len(g.dimension())));
    }
    if !g.is_connected() {
        return Err(EmbedError::Disconnected);
    }
    let v = g.n_vertices();
    let e = g.n_edges();
    debug_assert_eq!(2 * e, 3 * v);
    let census = cycle_census(g);
    let mut face_profile = BTreeMap::new();
    let mut f = 0;
    for cycles in census.pairs.values() {
        for cyc in cycles {
            *face_profile.entry(cyc.len()).or_insert(0) += 1;
            f += 1;
        }
    }
    let chi = f as i64 - e as i64 + v as i64;
    debug_assert!(chi <= 2 && chi % 2 == 0);
    let genus = ((2 - chi) / 2) as usize;
    Ok(EmbeddingStats { v, e, f, genus, face_profile })
}

pub fn is_planar(g: &ColoredGraph) -> Result<bool, EmbedError> {
    Ok(embedding_stats(g)?.genus == 0)
}

/// A 3-bubble of a closed d=3 graph with its colors relabeled
/// order-preservingly to {1,2,3}, ready for `embedding_stats`.
pub fn three_bubble_components(
    g: &ColoredGraph,
    p: [Color; 3],
) -> Result<Vec<ColoredGraph>, EmbedError> {
    let mut colors = p.to_vec();
    colors.sort_unstable();
    colors.dedup();
    if colors.len() != 3 || colors.iter().any(|&c| !g.support().contains(c, g.dimension())) {
        return Err(EmbedError::BadColorTriple);
    }
    let relabel = |c: Color| -> Color {
        colors.iter().position(|&x| x == c).unwrap() as Color + 1
    };
    let census = p_bubbles(g, &colors).map_err(|_| EmbedError::BadColorTriple)?;
    let mut out = Vec::new();
    for comp in &census.components {
        let edges: Vec<Edge> = comp
            .edges
            .iter()
            .map(|&id| {
                let e = g.edge(id);
                let rank = |v: VertexId| comp.vertices.binary_search(&v).unwrap();
                Edge::new(rank(e.u), rank(e.v), relabel(e.color))
            })
            .collect();
        out.push(
            ColoredGraph::new(3, comp.vertices.len(), edges, ColorSupport::NoZero)
                .expect("3-bubble of a valid graph is a valid bubble"),
        );
    }
    Ok(out)
}

/// One reduction step: the removed white/black pair (original vertex ids) and
/// the color of the edge rejoining their outside neighbors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MelonicStep {
    pub white: VertexId,
    pub black: VertexId,
    pub rejoined_color: Color,
}

#[derive(Clone, Debug)]
pub struct MelonicWitness {
    pub melonic: bool,
    pub steps: Vec<MelonicStep>,
}

/// Mutable reduction state: neighbor[v][c] in original vertex ids, plus alive
/// flags. Properness is preserved by every parallel-pair removal.
struct Reduction {
    d: u8,
    alive: Vec<bool>,
    neighbor: Vec<Vec<VertexId>>,
    n_alive: usize,
}

impl Reduction {
    fn new(b: &Bubble) -> Reduction {
        let g = b.graph();
        let n = g.n_vertices();
        let d = g.dimension();
        let mut neighbor = vec![vec![usize::MAX; d as usize + 1]; n];
        for v in 0..n {
            for c in 1..=d {
                neighbor[v][c as usize] = g.neighbor(v, c).unwrap();
            }
        }
        Reduction { d, alive: vec![true; n], neighbor, n_alive: n }
    }

    /// The unique color on which `v` is not joined to `u`, if `v` and `u` are
    /// joined by exactly d-1 parallel edges.
    fn parallel_pair_color(&self, v: VertexId, u: VertexId) -> Option<Color> {
        let mut odd = None;
        for c in 1..=self.d {
            if self.neighbor[v][c as usize] != u {
                match odd {
                    None => odd = Some(c),
                    Some(_) => return None,
                }
            }
        }
        odd
    }

    /// Remove the pair (v, u) joined on all colors but `c`, rejoining their
    /// c-neighbors. Records the step with the white vertex first.
    fn remove(&mut self, b: &Bubble, v: VertexId, u: VertexId, c: Color) -> MelonicStep {
        let a = self.neighbor[v][c as usize];
        let z = self.neighbor[u][c as usize];
        self.neighbor[a][c as usize] = z;
        self.neighbor[z][c as usize] = a;
        self.alive[v] = false;
        self.alive[u] = false;
        self.n_alive -= 2;
        let (white, black) = if b.graph().parity(v) == crate::graph::Parity::White {
            (v, u)
        } else {
            (u, v)
        };
        MelonicStep { white, black, rejoined_color: c }
    }

    fn find_pair(&self, order: &[VertexId]) -> Option<(VertexId, VertexId, Color)> {
        for &v in order {
            if !self.alive[v] {
                continue;
            }
            for c in 1..=self.d {
                let u = self.neighbor[v][c as usize];
                if let Some(odd) = self.parallel_pair_color(v, u) {
                    return Some((v, u, odd));
                }
            }
        }
        None
    }
}

fn reduce_with_order(
    b: &Bubble,
    mut order_of: impl FnMut(&Reduction) -> Vec<VertexId>,
) -> MelonicWitness {
    let mut red = Reduction::new(b);
    let mut steps = Vec::new();
    while red.n_alive > 2 {
        let order = order_of(&red);
        match red.find_pair(&order) {
            Some((v, u, c)) => steps.push(red.remove(b, v, u, c)),
            None => return MelonicWitness { melonic: false, steps },
        }
    }
    // two survivors of a connected bubble are fully parallel
    MelonicWitness { melonic: true, steps }
}

/// Greedy melonic recognition: repeatedly remove a pair of vertices joined by
/// exactly d-1 parallel edges, rejoining the leftover color, until the
/// 2-vertex bubble remains or no pair exists.
pub fn is_melonic(b: &Bubble) -> MelonicWitness {
    let n = b.n_vertices();
    reduce_with_order(b, |_| (0..n).collect())
}

/// Same reduction with the candidate scan order shuffled each step; the
/// verdict is checked to be order-independent by tests, not assumed.
pub fn is_melonic_seeded(b: &Bubble, seed: u64) -> MelonicWitness {
    let n = b.n_vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    reduce_with_order(b, move |_| {
        let mut order: Vec<VertexId> = (0..n).collect();
        order.shuffle(&mut rng);
        order
    })
}

/// Replay a witness's steps on the bubble; true iff every step removes a valid
/// parallel pair and, for a melonic verdict, the 2-vertex bubble remains.
pub fn replay_witness(b: &Bubble, w: &MelonicWitness) -> bool {
    let mut red = Reduction::new(b);
    for s in &w.steps {
        if !red.alive[s.white] || !red.alive[s.black] {
            return false;
        }
        match red.parallel_pair_color(s.white, s.black) {
            Some(c) if c == s.rejoined_color => {
                red.remove(b, s.white, s.black, c);
            }
            _ => return false,
        }
    }
    !w.melonic || red.n_alive == 2
}

#[derive(Clone, Debug)]
pub struct FaceBoundReport {
    pub f2: usize,
    pub f4: usize,
    /// 2*F2 + F4 >= 6, and F4 >= 6 whenever F2 = 0.
    pub holds: bool,
    pub face_profile: BTreeMap<usize, usize>,
}

/// Face bound for planar bubbles: few short faces force the bubble to be small.
pub fn check_face_bound(b: &Bubble) -> Result<FaceBoundReport, EmbedError> {
    let stats = embedding_stats(b.graph())?;
    if stats.genus != 0 {
        return Err(EmbedError::NotPlanar(stats.genus));
    }
    let f2 = stats.face_profile.get(&2).copied().unwrap_or(0);
    let f4 = stats.face_profile.get(&4).copied().unwrap_or(0);
    let holds = 2 * f2 + f4 >= 6 && (f2 > 0 || f4 >= 6);
    Ok(FaceBoundReport { f2, f4, holds, face_profile: stats.face_profile })
}
