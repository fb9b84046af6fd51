//! Additive edge colorings of regular graphs.
//!
//! An edge labeling is additive when every two incident edges have
//! different neighbor sums, the neighbor sum of an edge being the total
//! label over the edges sharing an endpoint with it. The crate provides
//! graphs and their I/O, proper edge colorings and class/resistance
//! computations, the label-set constructions and checks for additive
//! colorings, the spaced-coloring pipeline, brute-force oracles for small
//! instances, and the `etaedge` command-line tool.

pub mod additive;
pub mod budget;
pub mod cli;
pub mod coloring;
pub mod constructions;
pub mod error;
pub mod exact;
pub mod graph;
pub mod io;
pub mod label_set;
pub mod oracle;
pub mod spaced;
pub mod vizing;

pub use budget::{Budgeted, NodeBudget, DEFAULT_NODE_BUDGET};
pub use coloring::{missing_color_map, EdgeColoring, MissingColorMap};
pub use error::{Error, Result};
pub use graph::{find_unreachable_cycle_edge, EdgeId, Girth, Graph, VertexId, Walk};
pub use label_set::LabelSet;
