//! Singular-point detection by resultant elimination.
//!
//! For a system of bivariate polynomials over F_q, the x-coordinates of common
//! zeros are roots of every nonzero resultant Res_y of two members. The gcd of
//! those resultants is split by degree; its roots are found in F_{q^d} and each
//! candidate x0 is confirmed by a univariate gcd in y.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::MAX_ORDER;
use crate::algebra::poly;
use crate::algebra::roots::find_roots_raw;
use crate::algebra::{Field, FieldElem, FieldOps};
use crate::error::{Error, Result};
use crate::forms::{det3_scalar, projective_points, Matrix3, TernaryForm, Var};

use super::quartic::PlaneQuartic;

/// Coordinate changes tried before giving up on a degenerate elimination.
pub const MAX_ATTEMPTS: usize = 20;

type Poly = Vec<FieldElem>;

/// `Σ_j c_j(x) y^j` with `c_j ∈ F[x]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    pub ycoeffs: Vec<Poly>,
}

impl BiPoly {
    fn trimmed(field: &Field, mut ycoeffs: Vec<Poly>) -> Self {
        for c in ycoeffs.iter_mut() {
            poly::trim(field, c);
        }
        while ycoeffs.last().is_some_and(|c| c.is_empty()) {
            ycoeffs.pop();
        }
        BiPoly { ycoeffs }
    }

    /// The affine chart `F(x, y, 1)`.
    pub fn chart_z1(form: &TernaryForm) -> Self {
        let d = form.degree() as usize;
        let mut ycoeffs = vec![vec![FieldElem::ZERO; d + 1]; d + 1];
        for ((i, j, _), c) in form.terms() {
            ycoeffs[j as usize][i as usize] = c;
        }
        Self::trimmed(form.field(), ycoeffs)
    }

    /// From explicit terms `(i, j, c)` meaning `c x^i y^j`.
    pub fn from_terms(field: &Field, terms: &[(usize, usize, FieldElem)]) -> Self {
        let dy = terms.iter().map(|t| t.1).max().unwrap_or(0);
        let dx = terms.iter().map(|t| t.0).max().unwrap_or(0);
        let mut ycoeffs = vec![vec![FieldElem::ZERO; dx + 1]; dy + 1];
        for &(i, j, c) in terms {
            ycoeffs[j][i] = field.add(ycoeffs[j][i], c);
        }
        Self::trimmed(field, ycoeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.ycoeffs.is_empty()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.ycoeffs.len().checked_sub(1)
    }

    pub fn partial_x(&self, field: &Field) -> Self {
        let ycoeffs = self
            .ycoeffs
            .iter()
            .map(|c| poly::derivative(field, c))
            .collect();
        Self::trimmed(field, ycoeffs)
    }

    pub fn partial_y(&self, field: &Field) -> Self {
        let p = field.p();
        let ycoeffs = self
            .ycoeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| poly::scale(field, c, field.from_int((j as u64 % p) as i64)))
            .collect();
        Self::trimmed(field, ycoeffs)
    }

    /// Specialization `y ↦ self(x0, y)` for `x0` in `ext`, coefficients embedded.
    fn specialize(&self, base: &Field, ext: &Field, x0: FieldElem) -> Result<Poly> {
        let mut out = Vec::with_capacity(self.ycoeffs.len());
        for c in &self.ycoeffs {
            let lifted = base.embed_all(c, ext)?;
            out.push(poly::eval(ext, &lifted, x0));
        }
        poly::trim(ext, &mut out);
        Ok(out)
    }
}

/// Res_y(a, b) as a polynomial in x, by fraction-free elimination on the
/// Sylvester matrix. For two polynomials free of y it returns their gcd, whose
/// roots are again the common x-coordinates.
pub fn resultant_y(field: &Field, a: &BiPoly, b: &BiPoly) -> Poly {
    let (Some(m), Some(n)) = (a.degree_y(), b.degree_y()) else {
        return Vec::new();
    };
    if m == 0 && n == 0 {
        return poly::gcd(field, &a.ycoeffs[0], &b.ycoeffs[0]);
    }
    if m == 0 {
        return poly_pow(field, &a.ycoeffs[0], n);
    }
    if n == 0 {
        return poly_pow(field, &b.ycoeffs[0], m);
    }
    let matrix = crate::algebra::resultant::sylvester(&a.ycoeffs, &b.ycoeffs, Vec::new());
    bareiss_det(field, matrix)
}

fn poly_pow(field: &Field, a: &[FieldElem], n: usize) -> Poly {
    let mut acc = vec![FieldElem::ONE];
    for _ in 0..n {
        acc = poly::mul(field, &acc, a);
    }
    acc
}

/// Determinant over F[x] with Bareiss' fraction-free elimination.
fn bareiss_det(field: &Field, mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut negate = false;
    let mut prev: Poly = vec![FieldElem::ONE];
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_empty() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_empty()) else {
                return Vec::new();
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..n {
                let t = poly::sub(
                    field,
                    &poly::mul(field, &m[i][j], &m[k][k]),
                    &poly::mul(field, &m[i][k], &m[k][j]),
                );
                let (q, r) = poly::div_rem(field, &t, &prev);
                debug_assert!(r.is_empty(), "Bareiss division must be exact");
                m[i][j] = q;
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        det.iter().map(|&c| field.neg(c)).collect()
    } else {
        det
    }
}

/// Outcome of searching a system for a common zero in the affine plane.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Elimination {
    /// A common zero exists over the algebraic closure.
    Found,
    /// No common zero with residue degree within the search bound.
    None,
    /// Every pairwise resultant vanished identically.
    Degenerate,
}

/// Whether the polynomials in `system` have a common zero in the affine plane
/// over the algebraic closure of `base`.
pub fn common_affine_zero(base: &Field, system: &[BiPoly], seed: u64) -> Result<Elimination> {
    let live: Vec<&BiPoly> = system.iter().filter(|p| !p.is_zero()).collect();
    match live.len() {
        0 => return Ok(Elimination::Found),
        1 => {
            // a single nonconstant polynomial vanishes somewhere in the plane
            let p = live[0];
            let constant = p.ycoeffs.len() == 1 && p.ycoeffs[0].len() == 1;
            return Ok(if constant {
                Elimination::None
            } else {
                Elimination::Found
            });
        }
        _ => {}
    }
    let mut g: Option<Poly> = None;
    for i in 0..live.len() {
        for j in (i + 1)..live.len() {
            let r = resultant_y(base, live[i], live[j]);
            if r.is_empty() {
                continue;
            }
            g = Some(match g {
                None => poly::monic(base, &r),
                Some(acc) => poly::gcd(base, &acc, &r),
            });
        }
    }
    let Some(g) = g else {
        return Ok(Elimination::Degenerate);
    };
    let deg_g = poly::degree(&g).unwrap_or(0);
    if deg_g == 0 {
        return Ok(Elimination::None);
    }

    // distinct-degree split of g, testing the roots of each part in F_{q^d}
    let q = base.q();
    let x = vec![FieldElem::ZERO, FieldElem::ONE];
    let mut rest = g.clone();
    let mut frob = x.clone();
    let mut qd: u64 = 1;
    for d in 1..=deg_g {
        if poly::degree(&rest).unwrap_or(0) == 0 {
            break;
        }
        // a reduced quartic has at most 6 singular points, so their
        // x-coordinates have degree at most 6, well inside this cap
        qd = match qd.checked_mul(q) {
            Some(v) if v <= MAX_ORDER => v,
            _ => break,
        };
        frob = poly::powmod(base, &frob, q, &rest);
        let part = poly::gcd(base, &rest, &poly::sub(base, &frob, &x));
        if poly::degree(&part).unwrap_or(0) == 0 {
            continue;
        }
        // strip every copy of the degree-d factors from rest
        loop {
            let c = poly::gcd(base, &rest, &part);
            if poly::degree(&c).unwrap_or(0) == 0 {
                break;
            }
            rest = poly::div_rem(base, &rest, &c).0;
        }
        frob = poly::rem(base, &frob, &rest);
        let ext = base.extension(d)?;
        let lifted = base.embed_all(&part, &ext)?;
        for x0 in find_roots_raw(&ext, &lifted, seed) {
            let mut h: Poly = Vec::new();
            for p in &live {
                let s = p.specialize(base, &ext, x0)?;
                h = poly::gcd(&ext, &h, &s);
            }
            if h.is_empty() || poly::degree(&h).unwrap_or(0) >= 1 {
                return Ok(Elimination::Found);
            }
        }
    }
    Ok(Elimination::None)
}

/// Result of a smoothness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Smoothness {
    pub smooth: bool,
    /// Coordinate systems tried (1 when the identity sufficed).
    pub attempts: usize,
    pub diagnostic: Option<String>,
}

/// The four polynomials whose common zeros are the singular points.
fn singular_system(form: &TernaryForm) -> [TernaryForm; 4] {
    [
        form.clone(),
        form.partial(Var::X),
        form.partial(Var::Y),
        form.partial(Var::Z),
    ]
}

/// Singular point on the line z = 0 (over the algebraic closure).
fn singular_at_infinity(form: &TernaryForm) -> bool {
    let field = form.field();
    let system = singular_system(form);
    let one = FieldElem::ONE;
    let zero = FieldElem::ZERO;
    if system
        .iter()
        .all(|g| g.is_zero() || g.evaluate([one, zero, zero]).unwrap() == zero)
    {
        return true;
    }
    // (x : 1 : 0)
    let mut h: Poly = Vec::new();
    for g in &system {
        let d = g.degree() as usize;
        let mut c = vec![zero; d + 1];
        for ((i, _, k), v) in g.terms() {
            if k == 0 {
                c[i as usize] = v;
            }
        }
        poly::trim(field, &mut c);
        h = poly::gcd(field, &h, &c);
    }
    h.is_empty() || poly::degree(&h).unwrap_or(0) >= 1
}

fn random_invertible(field: &Field, rng: &mut ChaCha8Rng) -> Matrix3 {
    loop {
        let mut m = [[FieldElem::ZERO; 3]; 3];
        for row in m.iter_mut() {
            for e in row.iter_mut() {
                *e = field.from_packed(rng.gen_range(0..field.q())).unwrap();
            }
        }
        if det3_scalar(field, &m) != FieldElem::ZERO {
            return m;
        }
    }
}

impl PlaneQuartic {
    /// Whether the curve has no singular point over the algebraic closure.
    pub fn is_smooth(&self) -> bool {
        self.smoothness(crate::algebra::DEFAULT_SEED).smooth
    }

    /// Smoothness test with diagnostics; the seed drives the coordinate changes
    /// and root finding but not the verdict.
    pub fn smoothness(&self, seed: u64) -> Smoothness {
        match self.singular_search(seed) {
            Ok((found, attempts)) => Smoothness {
                smooth: !found,
                attempts,
                diagnostic: None,
            },
            Err(e) => Smoothness {
                smooth: false,
                attempts: MAX_ATTEMPTS,
                diagnostic: Some(e.to_string()),
            },
        }
    }

    /// `Ok((singular, attempts))`, or `DegenerateAfterRetries`.
    fn singular_search(&self, seed: u64) -> Result<(bool, usize)> {
        let field = self.base();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for attempt in 0..MAX_ATTEMPTS {
            let form = if attempt == 0 {
                self.form().clone()
            } else {
                self.form().substitute_linear(&random_invertible(field, &mut rng))?
            };
            let system: Vec<BiPoly> = singular_system(&form).iter().map(BiPoly::chart_z1).collect();
            match common_affine_zero(field, &system, seed)? {
                Elimination::Found => return Ok((true, attempt + 1)),
                Elimination::None => return Ok((singular_at_infinity(&form), attempt + 1)),
                Elimination::Degenerate => continue,
            }
        }
        Err(Error::DegenerateAfterRetries(MAX_ATTEMPTS))
    }

    /// Reference scan: singular points of P^2(F_{q^d}).
    pub fn singular_points_bruteforce(&self, d: usize) -> Result<Vec<[FieldElem; 3]>> {
        let ext = self.base().extension(d)?;
        let qd = ext.q();
        if qd.saturating_mul(qd) > super::quartic::BRUTE_LIMIT {
            return Err(Error::FieldTooLarge(qd));
        }
        let system: Vec<TernaryForm> = singular_system(self.form())
            .iter()
            .map(|g| g.embed(&ext))
            .collect::<Result<_>>()?;
        Ok(projective_points(&ext)
            .filter(|&pt| {
                system
                    .iter()
                    .all(|g| g.is_zero() || g.evaluate(pt).unwrap() == FieldElem::ZERO)
            })
            .collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    fn quartic(f: &Field, terms: &[((u32, u32, u32), i64)]) -> PlaneQuartic {
        PlaneQuartic::new(TernaryForm::from_ints(f, 4, terms).unwrap()).unwrap()
    }

    #[test]
    fn fermat_is_smooth_over_f9() {
        let f9 = make_field(3, 2).unwrap();
        let c = quartic(&f9, &[((4, 0, 0), 1), ((0, 4, 0), 1), ((0, 0, 4), 1)]);
        assert!(c.is_smooth());
    }

    #[test]
    fn cone_is_singular() {
        let f5 = make_field(5, 1).unwrap();
        let c = quartic(&f5, &[((4, 0, 0), 1), ((0, 4, 0), 1)]);
        assert!(!c.is_smooth());
        assert!(c
            .singular_points_bruteforce(1)
            .unwrap()
            .contains(&[FieldElem::ZERO, FieldElem::ZERO, FieldElem::ONE]));
    }

    #[test]
    fn fermat_in_characteristic_two_is_a_double_conic() {
        let f2 = make_field(2, 1).unwrap();
        let c = quartic(&f2, &[((4, 0, 0), 1), ((0, 4, 0), 1), ((0, 0, 4), 1)]);
        assert!(!c.is_smooth());
    }

    #[test]
    fn singular_point_off_the_base_field() {
        // (x^2 + z^2)^2 + y^4 - y^2 z^2 over F_3 has its singular points at x = ±i
        let f3 = make_field(3, 1).unwrap();
        let c = quartic(
            &f3,
            &[((4, 0, 0), 1), ((2, 0, 2), 2), ((0, 0, 4), 1), ((0, 4, 0), 1), ((0, 2, 2), -1)],
        );
        let brute1 = c.singular_points_bruteforce(1).unwrap();
        let brute2 = c.singular_points_bruteforce(2).unwrap();
        assert!(!c.is_smooth());
        assert!(brute1.is_empty() || !brute2.is_empty());
    }

    #[test]
    fn bivariate_resultant_matches_specialization() {
        let f7 = make_field(7, 1).unwrap();
        let a = BiPoly::from_terms(
            &f7,
            &[(0, 2, FieldElem(1)), (1, 0, FieldElem(3)), (2, 1, FieldElem(2))],
        );
        let b = BiPoly::from_terms(
            &f7,
            &[(0, 1, FieldElem(1)), (2, 0, FieldElem(5)), (0, 0, FieldElem(1))],
        );
        let r = resultant_y(&f7, &a, &b);
        for x0 in f7.elements() {
            let sa = a.specialize(&f7, &f7, x0).unwrap();
            let sb = b.specialize(&f7, &f7, x0).unwrap();
            let expected = crate::algebra::resultant::resultant(&f7, &sa, &sb);
            assert_eq!(poly::eval(&f7, &r, x0), expected);
        }
    }
}
