//! Library side of the `blossom-subdiv` command: document formats, mesh
//! export, verification and benchmarking.

pub mod bench;
pub mod diag;
pub mod document;
pub mod mesh;
pub mod verify;
