//! Mutual witness Gabriel drawings of complete multipartite graph pairs.
//!
//! A *Gabriel disk* of two points `u`, `v` is the closed disk having `u` and
//! `v` as antipodal points. Given two vertex-disjoint straight-line drawings
//! `gamma0`, `gamma1`, each drawing induces a graph on the other's behalf:
//! two vertices of one drawing are adjacent exactly when their Gabriel disk
//! contains no vertex of the other drawing. A pair of drawings in which each
//! serves as the witness set of the other is a *mutual witness Gabriel
//! drawing* (MWG drawing).
//!
//! This crate provides:
//!
//! - [`geometry`]: exact rational 2-D primitives (disk membership, wedges,
//!   strips, segment intersection, convex hulls, linear separation, convex
//!   terrains). No floating point, no epsilons.
//! - [`model`]: induced-graph semantics for witness Gabriel drawings and
//!   recognition of complete multipartite target graphs.
//! - [`characterize`]: decision procedures for which pairs of complete
//!   bipartite (and all-classes-ge-2 multipartite) graphs admit an MWG
//!   drawing.
//! - [`construct`]: deterministic constructions with exact rational
//!   coordinates for every drawable pair, plus named coordinate fixtures.
//! - [`properties`]: checkers for the structural facts every MWG drawing
//!   must satisfy, with concrete geometric witnesses on failure.
//! - [`search`]: seeded randomized/grid/annealing search for drawings
//!   realizing a given pair, used as an independent oracle.
//! - [`io`]: the drawing file format, pair-spec parsing, report
//!   serialization and SVG rendering.

pub mod characterize;
pub mod construct;
pub mod geometry;
pub mod io;
pub mod model;
pub mod properties;
pub mod search;

pub use geometry::{Point, Rational};
pub use model::{Drawing, GraphSpec, InducedGraph, MwgInstance};
