//! Deciding temporal transitive orientability of temporal graphs in its four
//! variants, computing witness orientations, temporal transitive completion
//! (quadratic for fully oriented inputs, exact search over the unoriented
//! edges otherwise), multilayer transitive orientation, and generators for
//! the matching SAT hardness constructions.

pub mod complete;
pub mod constraints;
pub mod graph;
pub mod implication;
pub mod io;
pub mod oracle;
pub mod recognize;
pub mod reductions;
pub mod sites;
pub mod verify;

pub use graph::{
    Dir, DirectedTimeEdge, Edge, EdgeId, MultiEdge, MultiLabelTemporalGraph, Orientation,
    TemporalGraph, TimeLabel, VertexId,
};
pub use verify::Variant;
