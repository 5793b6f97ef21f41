//! Edge coloring, discharging and structure tools for K5-minor-free graphs.

pub mod audit;
pub mod color;
pub mod discharge;
pub mod error;
pub mod graph;
pub mod minor;
pub mod par;
pub mod plane;
pub mod suite;

pub use error::{Error, Result};
pub use graph::Graph;
pub use plane::{FaceProfile, PlaneEmbedding};
