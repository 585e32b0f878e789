pub mod canon;
pub mod cli;
pub mod colorings;
pub mod connectivity;
pub mod error;
pub mod experiments;
pub mod extraction;
pub mod generators;
pub mod graph;
pub mod io;
pub mod minors;
pub mod posets;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Path, Separation, Vertex, VertexSet};
