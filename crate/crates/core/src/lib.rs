//! Exact verification of the one-parameter family of rational group laws
//! `u + v / (1 + h^2 uv)` (relativistic velocity addition) and
//! `u + v + huv`, their matrix models, their morphisms to the
//! multiplicative group, and the reduction of the transported `p`-th power
//! map over `Z[zeta_p]` to the Artin-Schreier map `u^p - u`.

pub mod arith;
pub mod cyclotomic;
pub mod error;
pub mod laws;
pub mod matrix;
pub mod morphisms;
pub mod relativity;
pub mod report;
pub mod symbolic;

pub use error::{Error, Result};
