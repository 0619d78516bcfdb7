//! Parametrized homology of constructible R-spaces.
//!
//! A constructible R-space is glued from vertex complexes `V_i` over critical
//! values `a_i` and edge complexes `E_i` over the gaps between them. This crate
//! computes its four decorated persistence diagrams (one per behavior type
//! `↑↓`, `↓↓`, `↑↑`, `↓↑`) two ways: from the levelset zigzag, and from the
//! rectangle measures evaluated directly on slices. It also converts to
//! extended persistence, checks cohomology duality, and measures bottleneck
//! stability.

pub mod error;
pub mod linalg;
pub mod complexes;
pub mod zigzag;
pub mod rspace;
pub mod levelset;
pub mod measures;
pub mod diagrams;
pub mod bottleneck;
pub mod extended;
pub mod cohomology;
pub mod corpus;
pub mod checks;

pub use error::{Error, Result};
