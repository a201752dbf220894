//! Maximum matching on cocomparability graphs via LDFS+ and the rightmost
//! matching greedy, together with the ordering verifiers, exact potential
//! arithmetic, instance generators and blossom oracle used to check it.
//!
//! Vertices are `0..n` in the API. Every text format is 1-based.

pub mod bench;
pub mod error;
pub mod generators;
pub mod graph;
pub mod interval;
pub mod io;
pub mod ldfs;
mod list;
pub mod oracle;
pub mod orderings;
pub mod potential;
pub mod rmm;

pub use error::{Error, Result};
pub use graph::{complement, induced_prefix, induced_subgraph, AlternatingPath, Graph, Matching, Remap, VertexOrdering};
pub use interval::Interval;
pub use ldfs::{ldfs, ldfs_plus};
pub use oracle::{brute_force_max_matching, find_augmenting_path, matching_with_deletion_set, max_matching_reference};
pub use orderings::{is_i_ordering, is_ldfs_ordering, is_umbrella_free, Triple, Verdict};
pub use rmm::{max_matching_cocomparability, max_matching_interval, rmm};
