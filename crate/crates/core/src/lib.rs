//! Induced path factors of small graphs.

pub mod bounds;
pub mod census;
pub mod constructive;
pub mod exact;
pub mod families;
pub mod graph;
pub mod ipf;

pub use graph::{Edge, Graph, GraphError, Vertex};
pub use ipf::Ipf;
