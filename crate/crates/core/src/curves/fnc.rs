//! Frobenius non-classical quartics.

use crate::algebra::{make_field, FieldElem};
use crate::error::{Error, Result};
use crate::forms::{det3, product_of_linear_forms, normalized_linear_forms, TernaryForm, Var};

use super::quartic::PlaneQuartic;

/// `x^q F_x + y^q F_y + z^q F_z`, of degree q + 3.
pub fn frobenius_form(c: &PlaneQuartic) -> TernaryForm {
    let f = c.base();
    let q = c.q() as u32;
    let mut out = TernaryForm::zero(f, q + 3);
    for (v, m) in [(Var::X, (q, 0, 0)), (Var::Y, (0, q, 0)), (Var::Z, (0, 0, q))] {
        let partial = c.form().partial(v);
        if partial.is_zero() {
            continue;
        }
        let term = partial.mul_term(m, FieldElem::ONE);
        out = out.add(&term).expect("same field and degree");
    }
    out
}

impl PlaneQuartic {
    /// Whether F divides its Frobenius form.
    pub fn is_frobenius_nonclassical(&self) -> bool {
        frobenius_form(self)
            .divide_exact(self.form())
            .expect("same field, nonzero divisor")
            .is_some()
    }
}

/// Points forced on a smooth quartic that is not Frobenius non-classical.
pub fn sv_bound(q: u64) -> u64 {
    2 * q + 6
}

/// Exact point count d(q - d + 2) of a Frobenius non-classical plane curve of
/// degree d; may be zero or negative.
pub fn hv_count(d: i64, q: i64) -> i64 {
    d * (q - d + 2)
}

/// The quartic cut out of det[(x,y,z); (x^2,y^2,z^2); (x^8,y^8,z^8)] over F_2
/// by removing the seven rational lines.
pub fn derive_f2_fnc_quartic() -> Result<PlaneQuartic> {
    let f2 = make_field(2, 1)?;
    let row = |e: u32| [Var::X, Var::Y, Var::Z].map(|v| TernaryForm::var(&f2, v).pow(e));
    let mut g = det3(&[row(1), row(2), row(8)])?;
    let lines = normalized_linear_forms(&f2);
    for l in &lines {
        g = g.divide_exact(l)?.ok_or_else(|| {
            Error::InternalInconsistency(format!("determinant not divisible by {l}"))
        })?;
    }
    // cross-check against the product taken as a single divisor
    let whole = det3(&[row(1), row(2), row(8)])?
        .divide_exact(&product_of_linear_forms(&f2)?)?
        .ok_or_else(|| Error::InternalInconsistency("product division failed".into()))?;
    if whole != g {
        return Err(Error::InternalInconsistency(
            "sequential and product divisions disagree".into(),
        ));
    }
    PlaneQuartic::new(g)
}

/// Monomials of the canonical Q8 quartic; all coefficients are 1.
pub const Q8_MONOMIALS: [(u32, u32, u32); 9] = [
    (4, 0, 0),
    (0, 4, 0),
    (0, 0, 4),
    (2, 2, 0),
    (0, 2, 2),
    (2, 0, 2),
    (2, 1, 1),
    (1, 2, 1),
    (1, 1, 2),
];

/// The canonical Q8 form over the given field of characteristic 2.
pub fn q8_form(field: &crate::algebra::Field) -> Result<TernaryForm> {
    TernaryForm::new(field, 4, Q8_MONOMIALS.iter().map(|&m| (m, FieldElem::ONE)))
}
