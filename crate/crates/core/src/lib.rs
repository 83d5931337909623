//! Strong metric dimension of graphs and the threshold strong dimension,
//! computed through placements in strong products of paths.
//!
//! The strong dimension is obtained as the vertex covering number of the
//! strong resolving graph. The threshold versions search for an injective
//! placement of the graph in a grid `{0..D}^k` whose coordinates are the
//! distances to `k` anchor vertices in the graph induced by the placement.

pub mod constructions;
pub mod cover;
pub mod dimension;
pub mod embedding;
mod error;
pub mod graph;
pub mod threshold;

pub use cover::{is_vertex_cover, min_vertex_cover, CoverResult};
pub use dimension::{
    brute_force_dimension, is_mmd, is_resolving_set, is_strong_resolving_set, strong_dimension,
    strong_resolving_graph, strongly_resolves, DimensionMode, DimensionResult, Method,
    StrongResolvingGraph,
};
pub use embedding::{chebyshev, Coord, Embedding};
pub use error::{Error, Result};
pub use graph::{all_pairs_distances, parse_edge_list, DistanceMatrix, Graph};
pub use threshold::{
    exists_supergraph_resolved_by, threshold_dimension, PlacementSearchConfig, SearchMode,
    SearchOutcome, ThresholdResult,
};
