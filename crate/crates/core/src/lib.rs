//! Combinatorics on the hypercube `Q_n`: vertex sets, boundaries,
//! compressions, disjoint path families and the isoperimetric bound
//! functions, plus a harness that checks the related inequalities on
//! exhaustive and random instances.

pub mod boundary;
pub mod bounds;
pub mod cli;
pub mod compression;
pub mod cube;
pub mod error;
pub mod flow;
pub mod json;
pub mod verify;

pub use cube::{CubeSet, CubeVertex, VertexOrder, MAX_DIM};
pub use error::{Error, Result};
