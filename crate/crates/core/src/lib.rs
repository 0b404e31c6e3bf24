//! Plane, bounded-degree spanners of the visibility graph of points and
//! polygonal obstacles, built from half-Θ6 cones with exact arithmetic.

// Errors carry the exact points involved; they are rare and never hot.
#![allow(clippy::result_large_err, clippy::large_enum_variant)]

pub mod cones;
pub mod error;
pub mod generate;
pub mod geom;
pub mod graph;
pub mod io;
pub mod render;
pub mod scene;
pub mod spanners;
pub mod verify;
pub mod visibility;

pub use graph::Graph;
pub use scene::Scene;
