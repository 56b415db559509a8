//! Atom graphs, partial Boolean algebras of projectors, and graph-level
//! Kochen-Specker contextuality checks.
//!
//! Everything that feeds an equality test is exact: scalars are arbitrary
//! precision rationals and projectors are rational symmetric idempotents.
//! Floating point only shows up in the pentagon umbrella construction, in
//! quantum expectation values, and when rendering reports.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: simple graphs, maximal cliques, weighted independence,
//!   isomorphism, vertex packing polytope membership, JSON/DIMACS I/O.
//! * [`exactla`]: rational matrices, elimination, nullspaces, projectors and
//!   an exact phase-one simplex.
//! * [`orthorep`]: faithful, linearly independent orthogonal
//!   co-representations.
//! * [`pba`]: finite partial Boolean algebras, generated from projectors or
//!   reconstructed symbolically from an atom graph.
//! * [`states`]: states, substates and 0-1 states on graphs and algebras.
//! * [`extension`]: context extensions and their projector realisation.
//! * [`contextuality`]: the `α(G; c_G)` versus `c(G)` certificate and the
//!   built-in pentagon and 18-ray scenarios.

pub mod catalog;
pub mod contextuality;
mod error;
pub mod exactla;
pub mod extension;
pub mod graph;
pub mod orthorep;
pub mod pba;
pub mod states;

pub use error::{Error, Result};
pub use exactla::{Projector, Rational, RationalMatrix};
pub use graph::{Graph, VertexSet, WeightVector};
pub use pba::PartialBooleanAlgebra;
