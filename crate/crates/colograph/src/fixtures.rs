//! Bundled fixture graphs, embedded so suites never touch the filesystem.

use crate::graph::{parse_graph, Bubble, ColoredGraph};

pub const SUPERMELON3: &str = include_str!("../fixtures/supermelon3.cg");
pub const MELON_B2: &str = include_str!("../fixtures/melon_b2.cg");
pub const Q1_B4: &str = include_str!("../fixtures/q1b4.cg");
pub const MELON6A: &str = include_str!("../fixtures/melon6a.cg");
pub const MELON6B: &str = include_str!("../fixtures/melon6b.cg");
pub const K33: &str = include_str!("../fixtures/k33.cg");
pub const OCTA: &str = include_str!("../fixtures/octa.cg");

pub const ALL: &[(&str, &str)] = &[
    ("supermelon3", SUPERMELON3),
    ("melon_b2", MELON_B2),
    ("q1b4", Q1_B4),
    ("melon6a", MELON6A),
    ("melon6b", MELON6B),
    ("k33", K33),
    ("octa", OCTA),
];

/// The 2-vertex closed graph with one edge of each color: the canonical sphere.
pub fn supermelon3() -> ColoredGraph {
    parse_graph(SUPERMELON3).expect("fixture is valid")
}

fn bubble(name: &str, text: &str) -> Bubble {
    Bubble::new(parse_graph(text).expect("fixture is valid"), name).expect("fixture is a bubble")
}

pub fn melon_b2() -> Bubble {
    bubble("melon_b2", MELON_B2)
}

pub fn q1_b4() -> Bubble {
    bubble("q1b4", Q1_B4)
}

pub fn melon6a() -> Bubble {
    bubble("melon6a", MELON6A)
}

pub fn melon6b() -> Bubble {
    bubble("melon6b", MELON6B)
}

pub fn k33() -> Bubble {
    bubble("k33", K33)
}

pub fn octa() -> Bubble {
    bubble("octa", OCTA)
}

/// Every bundled bubble fixture (the closed supermelon graph is excluded).
pub fn all_bubbles() -> Vec<Bubble> {
    vec![melon_b2(), q1_b4(), melon6a(), melon6b(), k33(), octa()]
}

pub fn bubble_by_name(name: &str) -> Option<Bubble> {
    all_bubbles().into_iter().find(|b| b.tag() == name)
}
