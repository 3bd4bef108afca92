//! Generalized distance matrices `D_α(G) = α·Tr(G) + (1 − α)·D(G)` of
//! small connected graphs, their spectral radii, closed forms for the
//! extremal families, and exhaustive minimum searches over trees,
//! unicyclic graphs and chromatic classes.

pub mod enumeration;
pub mod error;
pub mod families;
pub mod format;
pub mod graph;
pub mod harness;
pub mod spectral;

pub use error::{Error, Result};
pub use graph::{DistanceProfile, Graph};
