//! Exact scalar rings: rationals, prime fields and `Z[zeta_p]`.

pub mod cyclo;
pub mod fp;
pub mod rational;
pub mod scalar;

pub use cyclo::{compute_unit_w, CycloNum, Valuation};
pub use fp::{FpElem, FpPoly};
pub use rational::{int, is_prime, rat, Rational};
pub use scalar::Scalar;
