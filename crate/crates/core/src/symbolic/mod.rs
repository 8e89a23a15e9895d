//! Exact polynomial and rational-function arithmetic over `Q`.

pub mod poly;
pub mod ratfunc;

pub use poly::{elementary_symmetric, MultiPoly};
pub use ratfunc::{ratfunc_eq, substitute, RatFunc};

use std::collections::BTreeMap;

/// Builds a binding map from `(name, value)` pairs.
pub fn bind<'a, T: Clone>(pairs: &[(&'a str, T)]) -> BTreeMap<&'a str, T> {
    pairs.iter().cloned().collect()
}
