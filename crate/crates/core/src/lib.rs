//! Exact verification of the equivalence between Chevalley-Eilenberg cochains of a
//! nilpotent L-infinity algebra and normalized functions on its Maurer-Cartan
//! cosimplicial scheme.

pub mod complexes;
pub mod error;
pub mod fixtures;
pub mod lie;
pub mod matrix;
pub mod mc;
pub mod phi;
pub mod pipeline;
pub mod poly;
pub mod scalar;
pub mod simplicial;

pub use error::{Error, Result};
pub use scalar::Q;
