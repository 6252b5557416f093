pub mod ce;
pub mod harrison;
pub mod identities;
pub mod koszul;
pub mod structure;
pub mod tensor;

pub use ce::{ce_algebra, ce_algebra_with, CeAlgebra, CeOptions};
pub use identities::{bianchi_check, validate, ValidationReport};
pub use structure::{AlgebraDef, LInfinityStructure};
pub use tensor::TensorElement;
