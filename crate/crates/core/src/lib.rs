//! Exact verification workbench for the invariant theory of the cubic
//! Jordan algebras `V0..V3 = H3(F_C)`, `F ∈ {R, C, H, O}`.

pub mod comp;
pub mod config;
pub mod dim;
pub mod error;
pub mod exact;
pub mod inv;
pub mod jordan;
pub mod lie;
pub mod models;
pub mod realize;
pub mod report;
pub mod suites;

pub use comp::{CompAlgebra, CompElem};
pub use error::{Error, Result};
pub use exact::{GaussRational, Scalar};
pub use jordan::HermMat;
