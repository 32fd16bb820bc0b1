//! Graph-saturation toolkit.
//!
//! Everything revolves around a pattern graph `H` and hosts that are
//! `H`-saturated: they contain no copy of `H`, yet adding any missing edge
//! creates one. The crate provides
//!
//! * a compact undirected [`Graph`] with bitset adjacency ([`graph`]),
//!   standard families ([`generate`]), and graph6 / edge-list / DOT
//!   interchange ([`mod@format`]);
//! * the edge weight functions and derived constants that drive the
//!   size bounds ([`weights`]);
//! * exact-rational lower and upper bounds on the minimum size of an
//!   `H`-saturated graph, for trees in general, triangle-free patterns,
//!   double stars, and short caterpillars ([`bounds`]);
//! * explicit saturated hosts matching those bounds, with built-in
//!   structural audits ([`constructions`]);
//! * a subgraph-embedding saturation verifier ([`saturation`]); and
//! * a brute-force minimum-saturation oracle for small orders ([`oracle`]).
//!
//! The most-used types are re-exported at the crate root.

pub mod bounds;
pub mod constructions;
pub mod format;
pub mod generate;
pub mod graph;

pub use bounds::{BoundKind, BoundReport, LowerBoundSurvey, Rat};
pub use constructions::{ConstructionReport, VertexRole};
pub use format::{emit_graph6, parse_graph6};
pub use graph::{Graph, GraphError};

pub mod oracle;
pub mod saturation;
pub mod weights;

pub use oracle::{CanonicalForm, SatResult};
pub use saturation::{Embedding, SaturationVerdict};
pub use weights::{EdgeWeights, WeightSummary};
