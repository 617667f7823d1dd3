//! Hyperelliptic models `y^2 + h(x) y = f(x)` with deg f ≤ 8, deg h ≤ 4.

use crate::algebra::{poly, Field, FieldElem, FieldOps, DEFAULT_SEED};
use crate::error::{Error, Result};

use super::quartic::{PointCount, COUNT_LIMIT};
use super::smooth::{common_affine_zero, BiPoly, Elimination};

/// Genus-3 hyperelliptic curve over its base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticG3 {
    field: Field,
    f: Vec<FieldElem>,
    h: Vec<FieldElem>,
}

impl HyperellipticG3 {
    /// Validated model; fails with `NotGenus3` unless both charts are
    /// nonsingular and the degrees force genus 3.
    pub fn new(field: &Field, f: Vec<FieldElem>, h: Vec<FieldElem>) -> Result<Self> {
        let model = Self::new_unchecked(field, f, h)?;
        model.validate()?;
        Ok(model)
    }

    /// Model without the genus check; counting still works.
    pub fn new_unchecked(field: &Field, mut f: Vec<FieldElem>, mut h: Vec<FieldElem>) -> Result<Self> {
        if f.iter().chain(h.iter()).any(|&c| !field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        poly::trim(field, &mut f);
        poly::trim(field, &mut h);
        if f.len() > 9 {
            return Err(Error::NotGenus3("deg f exceeds 8"));
        }
        if h.len() > 5 {
            return Err(Error::NotGenus3("deg h exceeds 4"));
        }
        Ok(HyperellipticG3 {
            field: field.clone(),
            f,
            h,
        })
    }

    pub fn from_ints(field: &Field, f: &[i64], h: &[i64]) -> Result<Self> {
        let conv = |v: &[i64]| v.iter().map(|&c| field.from_int(c)).collect::<Vec<_>>();
        Self::new(field, conv(f), conv(h))
    }

    pub fn base(&self) -> &Field {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.q()
    }

    pub fn f(&self) -> &[FieldElem] {
        &self.f
    }

    pub fn h(&self) -> &[FieldElem] {
        &self.h
    }

    fn coeff(v: &[FieldElem], i: usize) -> FieldElem {
        v.get(i).copied().unwrap_or(FieldElem::ZERO)
    }

    /// Plane model `y^2 + h y - f` of a chart, given f, h as coefficient lists.
    fn chart(field: &Field, f: &[FieldElem], h: &[FieldElem]) -> BiPoly {
        let mut terms = vec![(0, 2, FieldElem::ONE)];
        terms.extend(h.iter().enumerate().map(|(i, &c)| (i, 1, c)));
        terms.extend(f.iter().enumerate().map(|(i, &c)| (i, 0, field.neg(c))));
        BiPoly::from_terms(field, &terms)
    }

    fn chart_nonsingular(field: &Field, f: &[FieldElem], h: &[FieldElem]) -> Result<bool> {
        let g = Self::chart(field, f, h);
        let system = [g.clone(), g.partial_x(field), g.partial_y(field)];
        Ok(common_affine_zero(field, &system, DEFAULT_SEED)? == Elimination::None)
    }

    /// Checks the genus-3 conditions.
    pub fn validate(&self) -> Result<()> {
        let field = &self.field;
        let deg = |v: &[FieldElem]| poly::degree(v).map(|d| d as i64).unwrap_or(-1);
        if field.p() == 2 {
            if self.h.is_empty() {
                return Err(Error::NotGenus3("h = 0 in characteristic 2"));
            }
            let top = (2 * deg(&self.h)).max(deg(&self.f));
            if !(7..=8).contains(&top) {
                return Err(Error::NotGenus3("degrees do not give genus 3"));
            }
        } else {
            // completing the square: y'^2 = f + h^2/4
            let quarter = field.inv(field.from_int(4));
            let disc = poly::add(field, &self.f, &poly::scale(field, &poly::mul(field, &self.h, &self.h), quarter));
            let d = deg(&disc);
            if !(7..=8).contains(&d) {
                return Err(Error::NotGenus3("f + h^2/4 must have degree 7 or 8"));
            }
            let g = poly::gcd(field, &disc, &poly::derivative(field, &disc));
            if poly::degree(&g).unwrap_or(0) > 0 {
                return Err(Error::NotGenus3("f + h^2/4 is not squarefree"));
            }
        }
        let rev = |v: &[FieldElem], n: usize| (0..=n).rev().map(|i| Self::coeff(v, i)).collect::<Vec<_>>();
        let (fr, hr) = (rev(&self.f, 8), rev(&self.h, 4));
        if !Self::chart_nonsingular(field, &self.f, &self.h)? || !Self::chart_nonsingular(field, &fr, &hr)? {
            return Err(Error::NotGenus3("singular chart"));
        }
        Ok(())
    }

    /// Exact number of points over F_{q^k}, with the post-check N ≤ 2q^k + 2.
    pub fn count_points(&self, k: usize) -> Result<PointCount> {
        let ext = self.field.extension(k)?;
        let qk = ext.q();
        if qk > COUNT_LIMIT {
            return Err(Error::FieldTooLarge(qk));
        }
        let f = self.field.embed_all(&self.f, &ext)?;
        let h = self.field.embed_all(&self.h, &ext)?;
        let mut n: u64 = ext
            .elements()
            .map(|x0| quadratic_solutions(&ext, poly::eval(&ext, &h, x0), poly::eval(&ext, &f, x0)))
            .sum();
        n += quadratic_solutions(&ext, Self::coeff(&h, 4), Self::coeff(&f, 8));
        if n > 2 * qk + 2 {
            return Err(Error::InternalInconsistency(format!(
                "hyperelliptic count {n} exceeds 2q+2 over F_{qk}"
            )));
        }
        Ok(PointCount { k, n })
    }

    /// Reference count: every (x, y) in the first chart, every v over u = 0.
    pub fn count_points_bruteforce(&self, k: usize) -> Result<PointCount> {
        let ext = self.field.extension(k)?;
        let qk = ext.q();
        if qk.saturating_mul(qk) > super::quartic::BRUTE_LIMIT {
            return Err(Error::FieldTooLarge(qk));
        }
        let f = self.field.embed_all(&self.f, &ext)?;
        let h = self.field.embed_all(&self.h, &ext)?;
        let on = |y: FieldElem, hx: FieldElem, fx: FieldElem| {
            ext.add(ext.mul(y, y), ext.mul(hx, y)) == fx
        };
        let mut n = 0u64;
        for x in ext.elements() {
            let (hx, fx) = (poly::eval(&ext, &h, x), poly::eval(&ext, &f, x));
            n += ext.elements().filter(|&y| on(y, hx, fx)).count() as u64;
        }
        let (h4, f8) = (Self::coeff(&h, 4), Self::coeff(&f, 8));
        n += ext.elements().filter(|&v| on(v, h4, f8)).count() as u64;
        Ok(PointCount { k, n })
    }
}

/// Number of y in the field with y^2 + a y = b.
fn quadratic_solutions(field: &Field, a: FieldElem, b: FieldElem) -> u64 {
    if field.p() == 2 {
        if a == FieldElem::ZERO {
            return 1;
        }
        let t = field.mul(b, field.inv(field.square(a)));
        if field.trace_f2(t) == FieldElem::ZERO {
            2
        } else {
            0
        }
    } else {
        let quarter = field.inv(field.from_int(4));
        let disc = field.add(field.mul(field.square(a), quarter), b);
        (1 + field.legendre(disc)) as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    #[test]
    fn x7_plus_x_over_f3() {
        let f3 = make_field(3, 1).unwrap();
        let c = HyperellipticG3::new_unchecked(
            &f3,
            [0, 1, 0, 0, 0, 0, 0, 1].iter().map(|&v| f3.from_int(v)).collect(),
            vec![],
        )
        .unwrap();
        assert_eq!(c.count_points(1).unwrap().n, 4);
        assert_eq!(c.count_points_bruteforce(1).unwrap().n, 4);
        // x^7 + x = x (x^2 + 1)^3 over F_3
        assert!(c.validate().is_err());
    }

    #[test]
    fn x8_plus_one_over_f5() {
        let f5 = make_field(5, 1).unwrap();
        let c = HyperellipticG3::from_ints(&f5, &[1, 0, 0, 0, 0, 0, 0, 0, 1], &[]).unwrap();
        for k in 1..=2 {
            assert_eq!(c.count_points(k).unwrap(), c.count_points_bruteforce(k).unwrap());
        }
    }

    #[test]
    fn characteristic_two_model() {
        let f2 = make_field(2, 1).unwrap();
        // y^2 + (x^4 + x + 1) y = x^7 + x
        let c = HyperellipticG3::from_ints(&f2, &[0, 1, 0, 0, 0, 0, 0, 1], &[1, 1, 0, 0, 1]).unwrap();
        for k in 1..=3 {
            assert_eq!(c.count_points(k).unwrap(), c.count_points_bruteforce(k).unwrap());
        }
        assert!(HyperellipticG3::from_ints(&f2, &[1, 0, 0, 0, 0, 0, 0, 1], &[]).is_err());
    }
}
