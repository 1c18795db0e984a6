//! Combinatorics of 3-dimensional colored triangulations as edge-colored
//! graphs: cycle censuses, Gurau degree, canonical embeddings of bubbles,
//! flips, contractions and dipole moves, plus exhaustive maximization sweeps.

pub mod canon;
pub mod census;
pub mod embedding;
pub mod fixtures;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod moves;
pub mod search;
