//! The derived Maurer-Cartan locus as a cosimplicial scheme.

pub mod classical;
pub mod coordinates;
pub mod functions;
pub mod locus;
pub mod oracle;

pub use coordinates::{McCoordinates, PolynomialMap};
pub use locus::McLocus;
pub use functions::FunctionsAlgebra;
