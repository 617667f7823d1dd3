//! Dense univariate polynomials over a finite field.
//!
//! The free functions operate on coefficient vectors (constant term first, no
//! trailing zeros) over any [`FieldOps`] context; [`UniPoly`] is the owned,
//! field-tagged wrapper exposed by the crate.

use super::field::{Field, FieldElem, DEFAULT_SEED};
use super::ops::FieldOps;
use super::roots;
use crate::error::{Error, Result};

pub fn trim<F: FieldOps>(f: &F, v: &mut Vec<F::Elem>) {
    while let Some(&last) = v.last() {
        if f.is_zero(last) {
            v.pop();
        } else {
            break;
        }
    }
}

/// Degree, `None` for the zero polynomial.
pub fn degree<E>(v: &[E]) -> Option<usize> {
    v.len().checked_sub(1)
}

pub fn add<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let mut out: Vec<F::Elem> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(f.zero());
            let y = b.get(i).copied().unwrap_or(f.zero());
            f.add(x, y)
        })
        .collect();
    trim(f, &mut out);
    out
}

pub fn sub<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let n = a.len().max(b.len());
    let mut out: Vec<F::Elem> = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(f.zero());
            let y = b.get(i).copied().unwrap_or(f.zero());
            f.sub(x, y)
        })
        .collect();
    trim(f, &mut out);
    out
}

pub fn scale<F: FieldOps>(f: &F, a: &[F::Elem], c: F::Elem) -> Vec<F::Elem> {
    if f.is_zero(c) {
        return Vec::new();
    }
    a.iter().map(|&x| f.mul(x, c)).collect()
}

pub fn mul<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(f, &mut out);
    out
}

/// Quotient and remainder; `m` must be nonzero.
pub fn div_rem<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    m: &[F::Elem],
) -> (Vec<F::Elem>, Vec<F::Elem>) {
    let dm = degree(m).expect("division by the zero polynomial");
    let mut r = a.to_vec();
    trim(f, &mut r);
    if r.len() <= dm {
        return (Vec::new(), r);
    }
    let lead_inv = f.inv(m[dm]);
    let mut q = vec![f.zero(); r.len() - dm];
    for i in (dm..r.len()).rev() {
        let c = f.mul(r[i], lead_inv);
        if f.is_zero(c) {
            continue;
        }
        q[i - dm] = c;
        for j in 0..=dm {
            r[i - dm + j] = f.sub(r[i - dm + j], f.mul(c, m[j]));
        }
    }
    r.truncate(dm);
    trim(f, &mut r);
    trim(f, &mut q);
    (q, r)
}

pub fn rem<F: FieldOps>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Vec<F::Elem> {
    div_rem(f, a, m).1
}

pub fn monic<F: FieldOps>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(f, a, f.inv(lead)),
    }
}

/// Monic greatest common divisor; zero if both inputs are zero.
pub fn gcd<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(f, &mut x);
    trim(f, &mut y);
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn mulmod<F: FieldOps>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    m: &[F::Elem],
) -> Vec<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

/// `base^e mod m` by binary exponentiation; `deg m >= 1`.
pub fn powmod<F: FieldOps>(f: &F, base: &[F::Elem], e: u64, m: &[F::Elem]) -> Vec<F::Elem> {
    let mut result = rem(f, &[f.one()], m);
    let mut b = rem(f, base, m);
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(f, &result, &b, m);
        }
        e >>= 1;
        if e > 0 {
            b = mulmod(f, &b, &b, m);
        }
    }
    result
}

pub fn derivative<F: FieldOps>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    let p = f.characteristic();
    let mut out: Vec<F::Elem> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| f.mul(c, small_int(f, i as u64 % p)))
        .collect();
    trim(f, &mut out);
    out
}

/// The image of the integer `n` (reduced mod p) in the field.
pub fn small_int<F: FieldOps>(f: &F, n: u64) -> F::Elem {
    let n = n % f.characteristic();
    let mut acc = f.zero();
    let mut base = f.one();
    let mut n = n;
    // double-and-add keeps this cheap for p up to 97
    while n > 0 {
        if n & 1 == 1 {
            acc = f.add(acc, base);
        }
        base = f.add(base, base);
        n >>= 1;
    }
    acc
}

pub fn eval<F: FieldOps>(f: &F, a: &[F::Elem], x: F::Elem) -> F::Elem {
    a.iter().rev().fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
}

/// A polynomial over a finite field, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl UniPoly {
    pub fn new(field: &Field, coeffs: Vec<FieldElem>) -> Result<Self> {
        if coeffs.iter().any(|&c| !field.contains(c)) {
            return Err(Error::FieldMismatch);
        }
        let mut coeffs = coeffs;
        trim(field, &mut coeffs);
        Ok(UniPoly {
            field: field.clone(),
            coeffs,
        })
    }

    /// From signed prime-field residues.
    pub fn from_ints(field: &Field, coeffs: &[i64]) -> Self {
        let mut v: Vec<FieldElem> = coeffs.iter().map(|&c| field.from_int(c)).collect();
        trim(field, &mut v);
        UniPoly {
            field: field.clone(),
            coeffs: v,
        }
    }

    pub fn zero(field: &Field) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: Vec::new(),
        }
    }

    /// The monomial X.
    pub fn x(field: &Field) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs: vec![FieldElem::ZERO, FieldElem::ONE],
        }
    }

    pub(crate) fn from_raw(field: &Field, coeffs: Vec<FieldElem>) -> Self {
        UniPoly {
            field: field.clone(),
            coeffs,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        degree(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        eval(&self.field, &self.coeffs, x)
    }

    fn same_field(&self, other: &UniPoly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, add(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn sub(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, sub(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn mul(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, mul(&self.field, &self.coeffs, &other.coeffs)))
    }

    pub fn div_rem(&self, m: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        self.same_field(m)?;
        if m.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let (q, r) = div_rem(&self.field, &self.coeffs, &m.coeffs);
        Ok((Self::from_raw(&self.field, q), Self::from_raw(&self.field, r)))
    }

    pub fn derivative(&self) -> UniPoly {
        Self::from_raw(&self.field, derivative(&self.field, &self.coeffs))
    }

    /// Monic gcd; zero if both are zero.
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        self.same_field(other)?;
        Ok(Self::from_raw(&self.field, gcd(&self.field, &self.coeffs, &other.coeffs)))
    }

    /// `self^e mod m`, degree below `deg m`.
    pub fn powmod(&self, e: u64, m: &UniPoly) -> Result<UniPoly> {
        self.same_field(m)?;
        match m.degree() {
            Some(d) if d >= 1 => Ok(Self::from_raw(
                &self.field,
                powmod(&self.field, &self.coeffs, e, &m.coeffs),
            )),
            _ => Err(Error::ZeroPolynomial),
        }
    }

    /// Number of distinct roots in the coefficient field: deg gcd(f, X^Q - X).
    pub fn count_distinct_roots(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(roots::count_distinct_roots_vec(&self.field, &self.coeffs))
    }

    /// All roots in the coefficient field, sorted.
    pub fn find_roots(&self) -> Result<Vec<FieldElem>> {
        self.find_roots_seeded(DEFAULT_SEED)
    }

    pub fn find_roots_seeded(&self, seed: u64) -> Result<Vec<FieldElem>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(roots::find_roots_raw(&self.field, &self.coeffs, seed))
    }

    /// Sylvester resultant.
    pub fn resultant(&self, other: &UniPoly) -> Result<FieldElem> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(super::resultant::resultant(&self.field, &self.coeffs, &other.coeffs))
    }

    /// Image of this polynomial under the coefficient embedding into `ext`.
    pub fn embed(&self, ext: &Field) -> Result<UniPoly> {
        let coeffs = self.field.embed_all(&self.coeffs, ext)?;
        Ok(Self::from_raw(ext, coeffs))
    }
}
