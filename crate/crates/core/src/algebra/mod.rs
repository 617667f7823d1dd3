//! Exact arithmetic in F_{p^k} and univariate polynomials over it.

pub mod field;
pub mod ops;
pub mod poly;
pub mod resultant;
pub mod roots;

pub use field::{make_field, prime_power, Field, FieldElem, ZechView, DEFAULT_SEED};
pub use ops::FieldOps;
pub use poly::UniPoly;
