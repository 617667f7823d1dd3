//! Genus-3 curves over small finite fields: exact field arithmetic, plane
//! quartic point counting, smoothness and Frobenius non-classicality tests,
//! L-polynomials, and the upper-bound engine for N_q(3).

pub mod algebra;
pub mod bounds;
pub mod curves;
pub mod error;
pub mod families;
pub mod forms;
pub mod zeta;

pub use algebra::{make_field, Field, FieldElem, FieldOps, UniPoly};
pub use bounds::BoundReport;
pub use curves::{HyperellipticG3, PlaneQuartic, PointCount};
pub use error::{Error, Result};
pub use forms::TernaryForm;
pub use zeta::{LPolynomial, PowerSums};
