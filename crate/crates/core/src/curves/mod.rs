//! Curve models, point counting, smoothness and Frobenius non-classicality.

pub mod fnc;
pub mod hyperelliptic;
pub mod quartic;
pub mod smooth;

pub use fnc::{derive_f2_fnc_quartic, frobenius_form, hv_count, q8_form, sv_bound};
pub use hyperelliptic::HyperellipticG3;
pub use quartic::{PlaneQuartic, PointCount};
pub use smooth::Smoothness;
