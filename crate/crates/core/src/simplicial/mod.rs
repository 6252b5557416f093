//! Simplex category, `Λ^•`, normalized (co)chains and the Eilenberg-Zilber maps.

pub mod ez;
pub mod kfunctor;
pub mod lambda;
pub mod module;
pub mod simplex;
pub mod surjection;

pub use kfunctor::KFunctor;
pub use lambda::Lambda;
pub use module::SimplicialModule;
pub use simplex::SimplexMap;
pub use surjection::{SurjectionComplex, ZeroSlot};
