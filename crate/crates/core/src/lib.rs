//! Minimal dominating sets, domination hypergraphs and their completions.
//!
//! Everything works on labeled ground sets of at most 64 elements; vertex
//! sets are bitmasks and hypergraphs are kept as canonical antichains.
//!
//! ```
//! use domhg::format::parse_graph;
//!
//! let g = parse_graph("ground: 1,2,3,4,5\n1-2\n2-3\n3-4\n4-5\n5-1\n").unwrap();
//! let d = g.minimal_dominating_sets();
//! assert_eq!(d, g.minimal_closed_neighborhoods().transversal());
//! assert_eq!(d.to_string(), "{{1,3},{1,4},{2,4},{2,5},{3,5}}");
//! ```

pub mod completion;
pub mod config;
pub mod error;
pub mod family;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod parallel;
pub mod recognition;
pub mod set;
pub mod shape;
pub mod util;
pub mod verify;

#[cfg(test)]
mod testutil;

pub use config::SearchConfig;
pub use error::{Error, Result};
pub use family::{enumerate_family, Family, GraphFamilyKind};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use recognition::{recognize, RecognitionResult};
pub use set::{GroundSet, VertexSet};
