//! Max-flow machinery and the cube path constructions built on it.

pub mod network;
pub mod oracle;
pub mod paths;

pub use network::{FlowNetwork, FlowResult, Residual};
pub use oracle::{interface_size, min_boundary_oracle, min_vertex_cut_oracle, separates};
pub use paths::{
    edge_disjoint_paths, max_matching_to_complement, vertex_disjoint_paths, CutWitness,
    DisjointPaths, PathFamily, PathKind, MAX_FLOW_DIM,
};
