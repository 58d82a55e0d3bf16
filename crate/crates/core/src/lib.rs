//! Combinatorial curvature of planar tessellations.

pub mod boundary;
pub mod curv;
pub mod curvature;
pub mod explorer;
pub mod generators;
pub mod patterns;
pub mod tess;

pub use curv::Curv;
pub use tess::{Tessellation, VertexId, VertexStatus};
