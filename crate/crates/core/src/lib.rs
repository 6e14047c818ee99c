//! Persistent homology of the power filtration of unweighted graphs.
//!
//! The vertex set of a connected graph, equipped with the shortest-path
//! metric, has a Vietoris–Rips filtration whose stage at integer scale `n`
//! is the clique complex of the `n`-th graph power. This crate computes
//! persistence diagrams of that filtration over Z/2 with explicit cycle
//! representatives, and measures homology classes geometrically: shortest
//! H₁ bases and the `(1, ⌈l/3⌉)` diagram identity, class norms (minimal
//! representative volume), injectivity radii, thick-thin decompositions,
//! bracelets, sweepouts, and widths, together with the life-span bounds
//! they imply.
//!
//! The crate is `no_std` (with `alloc`); IO, file formats, and the CLI
//! live in the companion `powerfilt-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod cycles;
pub mod filtration;
pub mod generators;
pub mod geometry;
pub mod graph;
pub mod persistence;
pub mod verify;

mod linalg;

pub use filtration::{build_filtration, FilteredComplex, Simplex};
pub use graph::{DistanceMatrix, Graph};
pub use persistence::{compute_pd, Chain, PersistenceDiagram, PersistencePair};
