pub mod dold_kan;
pub mod freeness;
pub mod map;
pub mod oracle;
pub mod report;

pub use dold_kan::{abelian_dold_kan_check, DoldKanVerdict};
pub use freeness::{freeness_hilbert, FreenessReport, ProductChoice};
pub use map::{PhiGenerator, PhiMap};
pub use report::{graded_independence_check, quasi_iso_report, QuasiIsoReport};
