#![allow(dead_code)]

use g3_core::algebra::{make_field, Field, FieldElem};
use g3_core::forms::{Monomial, TernaryForm};
use g3_core::PlaneQuartic;
use proptest::prelude::*;

pub const SMALL_FIELDS: [(u64, usize); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

pub fn field(pk: (u64, usize)) -> Field {
    make_field(pk.0, pk.1).unwrap()
}

pub fn quartic_monomials() -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in (0..=4u32).rev() {
        for j in (0..=4 - i).rev() {
            out.push((i, j, 4 - i - j));
        }
    }
    out
}

/// Form from packed coefficient values, reduced into the field.
pub fn form_from(field: &Field, degree: u32, packed: &[u64]) -> TernaryForm {
    let mut monos = Vec::new();
    for i in (0..=degree).rev() {
        for j in (0..=degree - i).rev() {
            monos.push((i, j, degree - i - j));
        }
    }
    let terms = monos
        .into_iter()
        .zip(packed.iter())
        .map(|(m, &v)| (m, field.from_packed(v % field.q()).unwrap()));
    TernaryForm::new(field, degree, terms).unwrap()
}

pub fn quartic_from(field: &Field, packed: &[u64]) -> Option<PlaneQuartic> {
    PlaneQuartic::new(form_from(field, 4, packed)).ok()
}

pub fn elem(field: &Field, v: u64) -> FieldElem {
    field.from_packed(v % field.q()).unwrap()
}

/// A field from `choices` and raw values for `n` elements.
pub fn field_and_values(
    choices: &'static [(u64, usize)],
    n: usize,
) -> impl Strategy<Value = ((u64, usize), Vec<u64>)> {
    (prop::sample::select(choices), prop::collection::vec(any::<u64>(), n))
}
