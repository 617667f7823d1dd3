//! Homogeneous forms in x, y, z over a finite field.
//!
//! Coefficients are stored sparsely, keyed by exponent triple. Since every
//! stored monomial has the same total degree, the natural tuple order on
//! `(e_x, e_y, e_z)` is graded lex with x > y > z, and the leading monomial is
//! the largest key.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Field, FieldElem, FieldOps};
use crate::error::{Error, Result};

/// Exponent triple `(e_x, e_y, e_z)`.
pub type Monomial = (u32, u32, u32);

/// Coordinate variable.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

/// A 3x3 matrix of field elements, row major.
pub type Matrix3 = [[FieldElem; 3]; 3];

#[derive(Clone, PartialEq, Eq)]
pub struct TernaryForm {
    field: Field,
    degree: u32,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl fmt::Debug for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TernaryForm(deg {}, {})", self.degree, self)
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b, c), &v) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let coeffs = self.field.coeffs(v);
            let coeff = if self.field.k() == 1 {
                coeffs[0].to_string()
            } else {
                format!("{coeffs:?}")
            };
            write!(f, "{coeff}")?;
            for (name, e) in [("x", a), ("y", b), ("z", c)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    _ => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

fn mono_degree(m: Monomial) -> u32 {
    m.0 + m.1 + m.2
}

impl TernaryForm {
    /// Builds a form from monomial/coefficient pairs; repeated monomials are summed
    /// and zero coefficients dropped.
    pub fn new(
        field: &Field,
        degree: u32,
        terms: impl IntoIterator<Item = (Monomial, FieldElem)>,
    ) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            if mono_degree(m) != degree {
                return Err(Error::InhomogeneousInput(m));
            }
            if !field.contains(c) {
                return Err(Error::FieldMismatch);
            }
            accumulate(field, &mut out, m, c);
        }
        Ok(TernaryForm {
            field: field.clone(),
            degree,
            terms: out,
        })
    }

    /// Builds a form from integer coefficients read as prime-field residues.
    pub fn from_ints(field: &Field, degree: u32, terms: &[(Monomial, i64)]) -> Result<Self> {
        Self::new(
            field,
            degree,
            terms.iter().map(|&(m, c)| (m, field.from_int(c))),
        )
    }

    pub fn zero(field: &Field, degree: u32) -> Self {
        TernaryForm {
            field: field.clone(),
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: &Field, c: FieldElem) -> Self {
        let mut terms = BTreeMap::new();
        if c != FieldElem::ZERO {
            terms.insert((0, 0, 0), c);
        }
        TernaryForm {
            field: field.clone(),
            degree: 0,
            terms,
        }
    }

    pub fn var(field: &Field, v: Var) -> Self {
        let m = match v {
            Var::X => (1, 0, 0),
            Var::Y => (0, 1, 0),
            Var::Z => (0, 0, 1),
        };
        TernaryForm {
            field: field.clone(),
            degree: 1,
            terms: BTreeMap::from([(m, FieldElem::ONE)]),
        }
    }

    /// The linear form a x + b y + c z.
    pub fn linear(field: &Field, a: FieldElem, b: FieldElem, c: FieldElem) -> Self {
        let terms = [((1, 0, 0), a), ((0, 1, 0), b), ((0, 0, 1), c)];
        let mut out = BTreeMap::new();
        for (m, v) in terms {
            accumulate(field, &mut out, m, v);
        }
        TernaryForm {
            field: field.clone(),
            degree: 1,
            terms: out,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, FieldElem)> + '_ {
        self.terms.iter().map(|(&m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: Monomial) -> FieldElem {
        self.terms.get(&m).copied().unwrap_or(FieldElem::ZERO)
    }

    /// Leading monomial and coefficient under graded lex, x > y > z.
    pub fn leading(&self) -> Option<(Monomial, FieldElem)> {
        self.terms.iter().next_back().map(|(&m, &c)| (m, c))
    }

    fn check_field(&self, other: &TernaryForm) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    /// Sum of two forms of equal degree (a zero form adopts the other's degree).
    pub fn add(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.check_field(other)?;
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if self.degree != other.degree {
            let m = *other.terms.keys().next().unwrap();
            return Err(Error::InhomogeneousInput(m));
        }
        let mut out = self.terms.clone();
        for (&m, &c) in &other.terms {
            accumulate(&self.field, &mut out, m, c);
        }
        Ok(TernaryForm {
            field: self.field.clone(),
            degree: self.degree,
            terms: out,
        })
    }

    pub fn neg(&self) -> TernaryForm {
        self.map_coeffs(|c| self.field.neg(c))
    }

    pub fn sub(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: FieldElem) -> TernaryForm {
        self.map_coeffs(|v| self.field.mul(v, c))
    }

    fn map_coeffs(&self, f: impl Fn(FieldElem) -> FieldElem) -> TernaryForm {
        let terms = self
            .terms
            .iter()
            .filter_map(|(&m, &c)| {
                let v = f(c);
                (v != FieldElem::ZERO).then_some((m, v))
            })
            .collect();
        TernaryForm {
            field: self.field.clone(),
            degree: self.degree,
            terms,
        }
    }

    pub fn mul(&self, other: &TernaryForm) -> Result<TernaryForm> {
        self.check_field(other)?;
        let f = &self.field;
        let mut out = BTreeMap::new();
        for (&(a, b, c), &u) in &self.terms {
            for (&(d, e, g), &v) in &other.terms {
                accumulate(f, &mut out, (a + d, b + e, c + g), f.mul(u, v));
            }
        }
        Ok(TernaryForm {
            field: f.clone(),
            degree: self.degree + other.degree,
            terms: out,
        })
    }

    pub fn pow(&self, n: u32) -> TernaryForm {
        let mut acc = TernaryForm::constant(&self.field, FieldElem::ONE);
        for _ in 0..n {
            acc = acc.mul(self).expect("same field");
        }
        acc
    }

    /// Multiplies by the monomial `m` with coefficient `c`.
    pub fn mul_term(&self, m: Monomial, c: FieldElem) -> TernaryForm {
        let f = &self.field;
        let terms = self
            .terms
            .iter()
            .map(|(&(a, b, d), &v)| ((a + m.0, b + m.1, d + m.2), f.mul(v, c)))
            .filter(|&(_, v)| v != FieldElem::ZERO)
            .collect();
        TernaryForm {
            field: f.clone(),
            degree: self.degree + mono_degree(m),
            terms,
        }
    }

    /// Value at a projective point with coordinates in the coefficient field.
    pub fn evaluate(&self, point: [FieldElem; 3]) -> Result<FieldElem> {
        if point.iter().all(|&c| c == FieldElem::ZERO) {
            return Err(Error::ZeroPoint);
        }
        if point.iter().any(|&c| !self.field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        Ok(eval_terms(&self.field, self.degree, self.terms(), point))
    }

    /// Value at a point over an extension field `ext`; coefficients are embedded first.
    pub fn evaluate_ext(&self, ext: &Field, point: [FieldElem; 3]) -> Result<FieldElem> {
        if point.iter().all(|&c| c == FieldElem::ZERO) {
            return Err(Error::ZeroPoint);
        }
        let terms: Vec<(Monomial, FieldElem)> = self
            .terms()
            .map(|(m, c)| Ok((m, self.field.embed(c, ext)?)))
            .collect::<Result<_>>()?;
        Ok(eval_terms(ext, self.degree, terms.into_iter(), point))
    }

    /// Formal partial derivative; exponents act as residues mod p.
    pub fn partial(&self, v: Var) -> TernaryForm {
        let f = &self.field;
        let p = f.p() as u32;
        let mut out = BTreeMap::new();
        for (&(a, b, c), &coef) in &self.terms {
            let (e, m) = match v {
                Var::X if a > 0 => (a, (a - 1, b, c)),
                Var::Y if b > 0 => (b, (a, b - 1, c)),
                Var::Z if c > 0 => (c, (a, b, c - 1)),
                _ => continue,
            };
            let e = e % p;
            if e == 0 {
                continue;
            }
            accumulate(f, &mut out, m, f.mul(coef, f.from_int(e as i64)));
        }
        TernaryForm {
            field: f.clone(),
            degree: self.degree.saturating_sub(1),
            terms: out,
        }
    }

    /// Exact division by `divisor` under graded lex. Returns `Ok(None)` when a
    /// nonzero residue remains, i.e. `divisor` does not divide `self`.
    pub fn divide_exact(&self, divisor: &TernaryForm) -> Result<Option<TernaryForm>> {
        self.check_field(divisor)?;
        let (lm, lc) = divisor.leading().ok_or(Error::ZeroDivisor)?;
        let f = &self.field;
        if self.is_zero() {
            let d = self.degree.saturating_sub(divisor.degree);
            return Ok(Some(TernaryForm::zero(f, d)));
        }
        if self.degree < divisor.degree {
            return Ok(None);
        }
        let lc_inv = f.inv(lc);
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&m, &c)) = rem.iter().next_back() {
            if m.0 < lm.0 || m.1 < lm.1 || m.2 < lm.2 {
                // residue term: for a single divisor this already decides the verdict
                return Ok(None);
            }
            let qm = (m.0 - lm.0, m.1 - lm.1, m.2 - lm.2);
            let qc = f.mul(c, lc_inv);
            quot.insert(qm, qc);
            for (&(a, b, d), &v) in &divisor.terms {
                let key = (a + qm.0, b + qm.1, d + qm.2);
                accumulate(f, &mut rem, key, f.neg(f.mul(v, qc)));
            }
            debug_assert!(!rem.contains_key(&m));
        }
        Ok(Some(TernaryForm {
            field: f.clone(),
            degree: self.degree - divisor.degree,
            terms: quot,
        }))
    }

    /// `F(M (x, y, z)^T)`: each variable is replaced by the corresponding row of `M`
    /// applied to (x, y, z).
    pub fn substitute_linear(&self, m: &Matrix3) -> Result<TernaryForm> {
        let f = &self.field;
        if det3_scalar(f, m) == FieldElem::ZERO {
            return Err(Error::SingularMatrix);
        }
        let rows: Vec<TernaryForm> = m
            .iter()
            .map(|r| TernaryForm::linear(f, r[0], r[1], r[2]))
            .collect();
        let powers: Vec<Vec<TernaryForm>> = rows
            .iter()
            .map(|l| {
                let mut v = vec![TernaryForm::constant(f, FieldElem::ONE)];
                for i in 0..self.degree as usize {
                    let next = v[i].mul(l).expect("same field");
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = TernaryForm::zero(f, self.degree);
        for (&(a, b, c), &coef) in &self.terms {
            let t = powers[0][a as usize]
                .mul(&powers[1][b as usize])?
                .mul(&powers[2][c as usize])?
                .scale(coef);
            out = out.add(&t)?;
        }
        out.degree = self.degree;
        Ok(out)
    }

    /// Base change: the same form with coefficients embedded in `ext`.
    pub fn embed(&self, ext: &Field) -> Result<TernaryForm> {
        let terms: Vec<(Monomial, FieldElem)> = self
            .terms()
            .map(|(m, c)| Ok((m, self.field.embed(c, ext)?)))
            .collect::<Result<_>>()?;
        TernaryForm::new(ext, self.degree, terms)
    }

    /// Whether `self = c * other` for some nonzero scalar c.
    pub fn is_scalar_multiple_of(&self, other: &TernaryForm) -> bool {
        if self.field != other.field || self.terms.len() != other.terms.len() {
            return false;
        }
        let (Some((m, a)), Some((n, b))) = (self.leading(), other.leading()) else {
            return self.is_zero() && other.is_zero();
        };
        if m != n {
            return false;
        }
        let c = self.field.mul(a, self.field.inv(b));
        other.scale(c).terms == self.terms
    }
}

fn accumulate(f: &Field, map: &mut BTreeMap<Monomial, FieldElem>, m: Monomial, c: FieldElem) {
    if c == FieldElem::ZERO {
        return;
    }
    match map.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let v = f.add(*e.get(), c);
            if v == FieldElem::ZERO {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

fn eval_terms(
    f: &Field,
    degree: u32,
    terms: impl Iterator<Item = (Monomial, FieldElem)>,
    point: [FieldElem; 3],
) -> FieldElem {
    let powers: Vec<Vec<FieldElem>> = point
        .iter()
        .map(|&c| {
            let mut v = vec![FieldElem::ONE];
            for i in 0..degree as usize {
                v.push(f.mul(v[i], c));
            }
            v
        })
        .collect();
    terms.fold(FieldElem::ZERO, |acc, ((a, b, c), coef)| {
        let t = f.mul(
            coef,
            f.mul(
                powers[0][a as usize],
                f.mul(powers[1][b as usize], powers[2][c as usize]),
            ),
        );
        f.add(acc, t)
    })
}

pub fn det3_scalar(f: &Field, m: &Matrix3) -> FieldElem {
    let minor = |a: usize, b: usize, c: usize, d: usize| {
        f.sub(f.mul(m[1][a], m[2][b]), f.mul(m[1][c], m[2][d]))
    };
    let t0 = f.mul(m[0][0], minor(1, 2, 2, 1));
    let t1 = f.mul(m[0][1], minor(0, 2, 2, 0));
    let t2 = f.mul(m[0][2], minor(0, 1, 1, 0));
    f.add(f.sub(t0, t1), t2)
}

/// Product of two 3x3 matrices over `f`.
pub fn matmul3(f: &Field, a: &Matrix3, b: &Matrix3) -> Matrix3 {
    let mut out = [[FieldElem::ZERO; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).fold(FieldElem::ZERO, |acc, l| f.add(acc, f.mul(a[i][l], b[l][j])));
        }
    }
    out
}

/// Determinant of a 3x3 matrix of forms by cofactor expansion along the first row.
pub fn det3(m: &[[TernaryForm; 3]; 3]) -> Result<TernaryForm> {
    let field = m[0][0].field.clone();
    for row in m {
        for e in row {
            if e.field != field {
                return Err(Error::FieldMismatch);
            }
        }
    }
    // (sign, column for rows 0, 1, 2)
    const PERMS: [(bool, [usize; 3]); 6] = [
        (true, [0, 1, 2]),
        (false, [0, 2, 1]),
        (false, [1, 0, 2]),
        (true, [1, 2, 0]),
        (true, [2, 0, 1]),
        (false, [2, 1, 0]),
    ];
    let mut degree = None;
    let mut out: Option<TernaryForm> = None;
    for (positive, cols) in PERMS {
        let factors = [&m[0][cols[0]], &m[1][cols[1]], &m[2][cols[2]]];
        if factors.iter().any(|e| e.is_zero()) {
            continue;
        }
        let d: u32 = factors.iter().map(|e| e.degree).sum();
        match degree {
            None => degree = Some(d),
            Some(d0) if d0 != d => return Err(Error::InhomogeneousDeterminant),
            _ => {}
        }
        let mut t = factors[0].mul(factors[1])?.mul(factors[2])?;
        if !positive {
            t = t.neg();
        }
        out = Some(match out {
            None => t,
            Some(acc) => acc.add(&t)?,
        });
    }
    // all products vanish: fall back on the nominal degree of the diagonal
    let d = degree.unwrap_or_else(|| (0..3).map(|i| m[i][i].degree).sum());
    let mut res = out.unwrap_or_else(|| TernaryForm::zero(&field, d));
    res.degree = d;
    Ok(res)
}

/// Largest field for which [`product_of_linear_forms`] is computed.
pub const LINEAR_PRODUCT_LIMIT: u64 = 9;

/// Product of one representative of every projective class of nonzero linear
/// forms over `field`, each normalized so its first nonzero coefficient is 1.
pub fn product_of_linear_forms(field: &Field) -> Result<TernaryForm> {
    let q = field.q();
    if q > LINEAR_PRODUCT_LIMIT {
        return Err(Error::FieldTooLarge(q));
    }
    let mut acc = TernaryForm::constant(field, FieldElem::ONE);
    for l in normalized_linear_forms(field) {
        acc = acc.mul(&l)?;
    }
    Ok(acc)
}

/// The q^2 + q + 1 normalized linear forms: (1, b, c), (0, 1, c), (0, 0, 1).
pub fn normalized_linear_forms(field: &Field) -> Vec<TernaryForm> {
    let one = FieldElem::ONE;
    let zero = FieldElem::ZERO;
    let mut out = Vec::new();
    for b in field.elements() {
        for c in field.elements() {
            out.push(TernaryForm::linear(field, one, b, c));
        }
    }
    for c in field.elements() {
        out.push(TernaryForm::linear(field, zero, one, c));
    }
    out.push(TernaryForm::linear(field, zero, zero, one));
    out
}

/// One representative per point of P^2 over `field`: (1:y:z), (0:1:z), (0:0:1).
pub fn projective_points(field: &Field) -> impl Iterator<Item = [FieldElem; 3]> + '_ {
    let one = FieldElem::ONE;
    let zero = FieldElem::ZERO;
    let affine = field
        .elements()
        .flat_map(move |y| field.elements().map(move |z| [one, y, z]));
    let line = field.elements().map(move |z| [zero, one, z]);
    affine.chain(line).chain(std::iter::once([zero, zero, one]))
}
