//! Coupon-colorings (pairs of disjoint total dominating sets) of maximal outerplanar
//! graphs and Hamiltonian maximal planar graphs.
//!
//! A maximal outerplanar graph has a 2-class coupon-coloring unless it is a
//! generalized sun. [`color::color_outerplanar`] builds the coloring or the
//! certificate, [`color::color_hamiltonian`] colors any triangulation of the sphere
//! that comes with a Hamiltonian cycle, and [`oracle`] checks all of it by exhaustion.

pub mod color;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod recognize;

pub use color::{Coloring, ColoringOutcome};
pub use error::{Error, Result};
pub use graph::{Chord, HamiltonianTriangulation, OuterplanarTriangulation};
pub use recognize::SunVerdict;
