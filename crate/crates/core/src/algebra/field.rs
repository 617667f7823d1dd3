//! Finite fields F_{p^k} in a polynomial basis over F_p.
//!
//! An element is stored packed as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! of its coefficient sequence. Prime fields use bare residues. Fields with at
//! most [`TABLE_LIMIT`] elements additionally carry discrete-log and Zech
//! tables, which make multiplication and addition table lookups.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::ops::FieldOps;
use super::poly;
use super::roots;
use crate::error::{Error, Result};

/// Largest supported field order, 97^9.
pub const MAX_ORDER: u64 = 760_231_058_654_565_217;

/// Fields up to this order get log/exp/Zech tables.
pub const TABLE_LIMIT: u64 = 1 << 21;

/// Default seed for randomized root finding and coordinate changes.
pub const DEFAULT_SEED: u64 = 0x6733_5F47;

/// Sentinel log value standing for the zero element.
pub const ZECH_ZERO: u32 = u32::MAX;

/// An element of some [`Field`], stored as its packed coefficient sequence.
///
/// Elements do not carry their field; arithmetic goes through the owning
/// `Field` value. The derived ordering is the numeric order of the packed
/// value, i.e. coefficient sequences compared from the top coefficient down.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(pub(crate) u64);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    /// The packed integer encoding.
    pub fn packed(self) -> u64 {
        self.0
    }
}

#[derive(Debug)]
pub(crate) struct Tables {
    /// `log[a]` for nonzero packed `a`.
    log: Vec<u32>,
    /// `exp[i] = g^i` for `0 <= i < 2(Q-1)`.
    exp: Vec<u32>,
    /// `zech[d] = log(1 + g^d)`, or `ZECH_ZERO` when `1 + g^d = 0`.
    zech: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Arith {
    Prime,
    Binary,
    Generic,
}

struct FieldInner {
    p: u64,
    k: usize,
    order: u64,
    /// Monic modulus, constant term first, length k + 1.
    modulus: Vec<u64>,
    /// Modulus without its leading term, as a bit mask (characteristic 2).
    modulus_bits: u64,
    arith: Arith,
    tables: Option<Tables>,
    /// Images of the basis element t of a subfield, keyed by that subfield's modulus.
    embeddings: Mutex<HashMap<Vec<u64>, FieldElem>>,
}

/// A finite field F_{p^k}. Cloning is cheap (shared handle).
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.0.p, self.0.k, self.0.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Returns `(p, k)` with `q = p^k`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn checked_order(p: u64, k: usize) -> Option<u64> {
    let mut q: u64 = 1;
    for _ in 0..k {
        q = q.checked_mul(p)?;
        if q > MAX_ORDER {
            return None;
        }
    }
    Some(q)
}

static REGISTRY: OnceLock<Mutex<HashMap<(u64, usize), Field>>> = OnceLock::new();

/// The field F_{p^k} with the smallest monic irreducible modulus, where
/// candidates `t^k + c_{k-1} t^{k-1} + ... + c_0` are ordered by the integer
/// `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`. Results are cached per `(p, k)`.
pub fn make_field(p: u64, k: usize) -> Result<Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p > 97 || k == 0 || checked_order(p, k).is_none() {
        return Err(Error::DegreeUnsupported { p, k });
    }
    let registry = REGISTRY.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = registry.lock().unwrap().get(&(p, k)) {
        return Ok(f.clone());
    }
    let field = if k == 1 {
        Field::build(p, vec![0, 1])
    } else {
        let prime = make_field(p, 1)?;
        let mut found = None;
        for n in 0..p.pow(k as u32) {
            let mut coeffs = Vec::with_capacity(k + 1);
            let mut m = n;
            for _ in 0..k {
                coeffs.push(m % p);
                m /= p;
            }
            coeffs.push(1);
            if coeffs[0] != 0 && is_irreducible_over_prime(&prime, &coeffs) {
                found = Some(coeffs);
                break;
            }
        }
        Field::build(p, found.expect("irreducible polynomials exist in every degree"))
    };
    let mut reg = registry.lock().unwrap();
    Ok(reg.entry((p, k)).or_insert(field).clone())
}

/// Rabin's test: `f` (monic, degree k, over F_p) is irreducible iff
/// X^(p^k) = X mod f and gcd(f, X^(p^(k/r)) - X) = 1 for every prime r | k.
pub(crate) fn is_irreducible_over_prime(prime: &Field, coeffs: &[u64]) -> bool {
    let f: Vec<FieldElem> = coeffs.iter().map(|&c| FieldElem(c % prime.p())).collect();
    let k = f.len() - 1;
    if k == 1 {
        return true;
    }
    let x = vec![FieldElem::ZERO, FieldElem::ONE];
    let p = prime.p();
    // frob[i] = X^(p^i) mod f
    let mut frob = vec![poly::rem(prime, &x, &f)];
    for i in 1..=k {
        let next = poly::powmod(prime, &frob[i - 1], p, &f);
        frob.push(next);
    }
    if frob[k] != poly::rem(prime, &x, &f) {
        return false;
    }
    for r in prime_factors(k as u64) {
        let h = poly::sub(prime, &frob[k / r as usize], &x);
        let g = poly::gcd(prime, &f, &h);
        if poly::degree(&g) != Some(0) {
            return false;
        }
    }
    true
}

impl Field {
    /// A field with an explicitly given modulus (monic, constant term first).
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let k = modulus.len().saturating_sub(1);
        if p > 97 || k == 0 || checked_order(p, k).is_none() {
            return Err(Error::DegreeUnsupported { p, k });
        }
        let reduced: Vec<u64> = modulus.iter().map(|c| c % p).collect();
        if reduced[k] != 1 {
            return Err(Error::InvalidModulus);
        }
        if k == 1 {
            // any monic linear modulus gives the prime field; normalize to t
            return make_field(p, 1);
        }
        let prime = make_field(p, 1)?;
        if !is_irreducible_over_prime(&prime, &reduced) {
            return Err(Error::InvalidModulus);
        }
        let canonical = make_field(p, k)?;
        if canonical.0.modulus == reduced {
            return Ok(canonical);
        }
        Ok(Field::build(p, reduced))
    }

    fn build(p: u64, modulus: Vec<u64>) -> Field {
        let k = modulus.len() - 1;
        let order = p.pow(k as u32);
        let arith = if k == 1 {
            Arith::Prime
        } else if p == 2 {
            Arith::Binary
        } else {
            Arith::Generic
        };
        let modulus_bits = if p == 2 {
            modulus[..k]
                .iter()
                .enumerate()
                .fold(0u64, |acc, (i, &c)| acc | (c << i))
        } else {
            0
        };
        let mut inner = FieldInner {
            p,
            k,
            order,
            modulus,
            modulus_bits,
            arith,
            tables: None,
            embeddings: Mutex::new(HashMap::new()),
        };
        if k > 1 && order <= TABLE_LIMIT {
            inner.tables = Some(build_tables(&inner));
        }
        Field(Arc::new(inner))
    }

    pub fn p(&self) -> u64 {
        self.0.p
    }

    pub fn k(&self) -> usize {
        self.0.k
    }

    /// Number of elements Q = p^k.
    pub fn q(&self) -> u64 {
        self.0.order
    }

    /// The modulus, constant term first; `[0, 1]` for prime fields.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.0.tables.is_some()
    }

    /// Element from a coefficient sequence (constant term first), reduced mod p.
    pub fn elem(&self, coeffs: &[u64]) -> Result<FieldElem> {
        if coeffs.len() > self.0.k {
            return Err(Error::FieldMismatch);
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            v = v * self.0.p + c % self.0.p;
        }
        Ok(FieldElem(v))
    }

    /// Element from signed coefficients, each reduced mod p.
    pub fn elem_signed(&self, coeffs: &[i64]) -> Result<FieldElem> {
        let p = self.0.p as i64;
        let v: Vec<u64> = coeffs.iter().map(|c| c.rem_euclid(p) as u64).collect();
        self.elem(&v)
    }

    /// The prime-field residue of an integer.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.0.p as i64) as u64)
    }

    /// The element with packed encoding `v`; `v` must be below Q.
    pub fn from_packed(&self, v: u64) -> Result<FieldElem> {
        if v >= self.0.order {
            return Err(Error::FieldMismatch);
        }
        Ok(FieldElem(v))
    }

    /// Coefficient sequence of `a`, length k, constant term first.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        let mut v = a.0;
        (0..self.0.k)
            .map(|_| {
                let d = v % self.0.p;
                v /= self.0.p;
                d
            })
            .collect()
    }

    /// The class of t (the polynomial-basis generator); for prime fields this is 0.
    pub fn t(&self) -> FieldElem {
        if self.0.k == 1 {
            FieldElem(0)
        } else {
            FieldElem(self.0.p)
        }
    }

    /// Every element, in packed order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.0.order).map(FieldElem)
    }

    pub fn contains(&self, a: FieldElem) -> bool {
        a.0 < self.0.order
    }

    pub fn checked_inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv(a))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.checked_inv(b)?))
    }

    /// `a^(p^i)`.
    pub fn frobenius_power(&self, a: FieldElem, i: usize) -> FieldElem {
        let i = i % self.0.k;
        self.pow(a, self.0.p.pow(i as u32))
    }

    /// A square root of `a`: the smaller of the two roots in packed order.
    pub fn sqrt(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Ok(a);
        }
        if self.0.p == 2 {
            return Ok(self.pow(a, self.0.order / 2));
        }
        if !self.is_square(a) {
            return Err(Error::NotASquare);
        }
        let r = tonelli_shanks(self, a);
        debug_assert_eq!(self.square(r), a);
        Ok(r.min(self.neg(r)))
    }

    /// The degree-`d` extension F_{Q^d}, with the canonical modulus over F_p.
    /// `d = 1` returns this field itself.
    pub fn extension(&self, d: usize) -> Result<Field> {
        if d == 1 {
            return Ok(self.clone());
        }
        make_field(self.0.p, self.0.k * d)
    }

    /// Whether this field embeds in `ext` (same characteristic, degree divides).
    pub fn is_subfield_of(&self, ext: &Field) -> bool {
        self.0.p == ext.0.p && ext.0.k.is_multiple_of(self.0.k)
    }

    /// Image of `a` under the fixed embedding of this field into `ext`: t maps
    /// to the smallest root of this field's modulus in `ext`. The root is
    /// located once per field pair and cached in `ext`.
    pub fn embed(&self, a: FieldElem, ext: &Field) -> Result<FieldElem> {
        if !self.is_subfield_of(ext) {
            return Err(Error::NotASubfield {
                sub: self.q(),
                ext: ext.q(),
            });
        }
        if self.0.k == 1 || self == ext {
            return Ok(a);
        }
        let img = self.embedding_root(ext)?;
        // Horner in ext over the coefficients of a
        let coeffs = self.coeffs(a);
        let mut acc = FieldElem::ZERO;
        for &c in coeffs.iter().rev() {
            acc = ext.add(ext.mul(acc, img), FieldElem(c));
        }
        Ok(acc)
    }

    /// Embedding map as a closure-friendly helper over many elements.
    pub fn embed_all(&self, xs: &[FieldElem], ext: &Field) -> Result<Vec<FieldElem>> {
        xs.iter().map(|&a| self.embed(a, ext)).collect()
    }

    fn embedding_root(&self, ext: &Field) -> Result<FieldElem> {
        if let Some(r) = ext.0.embeddings.lock().unwrap().get(&self.0.modulus) {
            return Ok(*r);
        }
        let lifted: Vec<FieldElem> = self.0.modulus.iter().map(|&c| FieldElem(c)).collect();
        let roots = roots::find_roots_raw(ext, &lifted, DEFAULT_SEED);
        let r = *roots.first().ok_or(Error::NoRootFound)?;
        ext.0
            .embeddings
            .lock()
            .unwrap()
            .insert(self.0.modulus.clone(), r);
        Ok(r)
    }

    /// Log-domain view for table fields.
    pub fn zech(&self) -> Option<ZechView<'_>> {
        let t = self.0.tables.as_ref()?;
        let q1 = (self.0.order - 1) as u32;
        Some(ZechView {
            t,
            q1,
            half: if self.0.p == 2 { 0 } else { q1 / 2 },
            p: self.0.p,
            q: self.0.order,
        })
    }

    fn digits(&self, mut a: u64, out: &mut [u64]) {
        for d in out.iter_mut().take(self.0.k) {
            *d = a % self.0.p;
            a /= self.0.p;
        }
    }

    fn pack(&self, digits: &[u64]) -> u64 {
        digits[..self.0.k]
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.0.p + d)
    }

    fn add_digits(&self, a: u64, b: u64) -> u64 {
        let p = self.0.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0u64;
        let mut w = 1u64;
        while a > 0 || b > 0 {
            let mut d = a % p + b % p;
            if d >= p {
                d -= p;
            }
            out += d * w;
            a /= p;
            b /= p;
            w = w.wrapping_mul(p);
        }
        out
    }

    fn neg_digits(&self, a: u64) -> u64 {
        let p = self.0.p;
        let mut a = a;
        let mut out = 0u64;
        let mut w = 1u64;
        while a > 0 {
            let d = a % p;
            if d != 0 {
                out += (p - d) * w;
            }
            a /= p;
            w = w.wrapping_mul(p);
        }
        out
    }

    fn mul_raw(&self, a: u64, b: u64) -> u64 {
        let inner = &*self.0;
        match inner.arith {
            Arith::Prime => a * b % inner.p,
            Arith::Binary => {
                let mut acc: u128 = 0;
                let mut bb = b;
                let mut i = 0;
                while bb != 0 {
                    if bb & 1 == 1 {
                        acc ^= (a as u128) << i;
                    }
                    bb >>= 1;
                    i += 1;
                }
                let k = inner.k;
                for i in (k..2 * k - 1).rev() {
                    if (acc >> i) & 1 == 1 {
                        acc ^= 1u128 << i;
                        acc ^= (inner.modulus_bits as u128) << (i - k);
                    }
                }
                acc as u64
            }
            Arith::Generic => {
                let k = inner.k;
                let p = inner.p;
                let mut da = [0u64; 64];
                let mut db = [0u64; 64];
                self.digits(a, &mut da);
                self.digits(b, &mut db);
                let mut prod = [0u64; 128];
                for i in 0..k {
                    if da[i] == 0 {
                        continue;
                    }
                    for j in 0..k {
                        prod[i + j] += da[i] * db[j];
                    }
                }
                for i in (k..2 * k - 1).rev() {
                    let c = prod[i] % p;
                    if c != 0 {
                        for j in 0..k {
                            prod[i - k + j] += c * (p - inner.modulus[j]);
                        }
                    }
                }
                for d in prod.iter_mut().take(k) {
                    *d %= p;
                }
                self.pack(&prod)
            }
        }
    }

    /// Discrete log of nonzero `a` (table fields only).
    pub fn to_log(&self, a: FieldElem) -> u32 {
        match (&self.0.tables, a.0) {
            (_, 0) => ZECH_ZERO,
            (Some(t), v) => t.log[v as usize],
            (None, _) => panic!("to_log requires a table field"),
        }
    }

    pub fn from_log(&self, l: u32) -> FieldElem {
        if l == ZECH_ZERO {
            return FieldElem::ZERO;
        }
        let t = self.0.tables.as_ref().expect("from_log requires a table field");
        FieldElem(t.exp[l as usize] as u64)
    }
}

fn build_tables(inner: &FieldInner) -> Tables {
    // A temporary handle without tables, used for raw multiplication.
    let raw = Field(Arc::new(FieldInner {
        p: inner.p,
        k: inner.k,
        order: inner.order,
        modulus: inner.modulus.clone(),
        modulus_bits: inner.modulus_bits,
        arith: inner.arith,
        tables: None,
        embeddings: Mutex::new(HashMap::new()),
    }));
    let q = inner.order;
    let q1 = q - 1;
    let factors = prime_factors(q1);
    let gen = (2..q)
        .map(FieldElem)
        .find(|&g| {
            factors
                .iter()
                .all(|&r| raw.pow(g, q1 / r) != FieldElem::ONE)
        })
        .expect("multiplicative group is cyclic");
    let mut exp = vec![0u32; 2 * q1 as usize];
    let mut log = vec![0u32; q as usize];
    let mut cur = 1u64;
    for i in 0..q1 as usize {
        exp[i] = cur as u32;
        log[cur as usize] = i as u32;
        cur = raw.mul_raw(cur, gen.0);
    }
    debug_assert_eq!(cur, 1);
    for i in 0..q1 as usize {
        exp[i + q1 as usize] = exp[i];
    }
    let p = inner.p;
    let zech = (0..q1 as usize)
        .map(|d| {
            let v = exp[d] as u64;
            let c0 = v % p;
            let w = v - c0 + (c0 + 1) % p;
            if w == 0 {
                ZECH_ZERO
            } else {
                log[w as usize]
            }
        })
        .collect();
    Tables { log, exp, zech }
}

impl FieldOps for Field {
    type Elem = FieldElem;

    #[inline]
    fn zero(&self) -> FieldElem {
        FieldElem::ZERO
    }

    #[inline]
    fn one(&self) -> FieldElem {
        FieldElem::ONE
    }

    #[inline]
    fn is_zero(&self, a: FieldElem) -> bool {
        a.0 == 0
    }

    #[inline]
    fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let inner = &*self.0;
        if inner.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if inner.arith == Arith::Prime {
            let s = a.0 + b.0;
            return FieldElem(if s >= inner.p { s - inner.p } else { s });
        }
        if let Some(t) = &inner.tables {
            if a.0 == 0 {
                return b;
            }
            if b.0 == 0 {
                return a;
            }
            let q1 = inner.order as u32 - 1;
            let la = t.log[a.0 as usize];
            let lb = t.log[b.0 as usize];
            let d = if lb >= la { lb - la } else { lb + q1 - la };
            let z = t.zech[d as usize];
            if z == ZECH_ZERO {
                return FieldElem::ZERO;
            }
            return FieldElem(t.exp[(la + z) as usize] as u64);
        }
        FieldElem(self.add_digits(a.0, b.0))
    }

    #[inline]
    fn neg(&self, a: FieldElem) -> FieldElem {
        let inner = &*self.0;
        if inner.p == 2 || a.0 == 0 {
            return a;
        }
        if inner.arith == Arith::Prime {
            return FieldElem(inner.p - a.0);
        }
        if let Some(t) = &inner.tables {
            let half = (inner.order as u32 - 1) / 2;
            return FieldElem(t.exp[(t.log[a.0 as usize] + half) as usize] as u64);
        }
        FieldElem(self.neg_digits(a.0))
    }

    #[inline]
    fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        if let Some(t) = &self.0.tables {
            let s = t.log[a.0 as usize] + t.log[b.0 as usize];
            return FieldElem(t.exp[s as usize] as u64);
        }
        FieldElem(self.mul_raw(a.0, b.0))
    }

    fn inv(&self, a: FieldElem) -> FieldElem {
        debug_assert!(a.0 != 0, "inverse of zero");
        let inner = &*self.0;
        if let Some(t) = &inner.tables {
            let q1 = inner.order as u32 - 1;
            let l = t.log[a.0 as usize];
            return FieldElem(t.exp[((q1 - l) % q1) as usize] as u64);
        }
        if inner.arith == Arith::Prime {
            // extended Euclid on residues
            let (mut r0, mut r1) = (inner.p as i64, a.0 as i64);
            let (mut s0, mut s1) = (0i64, 1i64);
            while r1 != 0 {
                let qt = r0 / r1;
                (r0, r1) = (r1, r0 - qt * r1);
                (s0, s1) = (s1, s0 - qt * s1);
            }
            return FieldElem(s0.rem_euclid(inner.p as i64) as u64);
        }
        self.pow(a, inner.order - 2)
    }

    #[inline]
    fn order(&self) -> u64 {
        self.0.order
    }

    #[inline]
    fn characteristic(&self) -> u64 {
        self.0.p
    }

    fn is_square(&self, a: FieldElem) -> bool {
        if self.0.p == 2 || a.0 == 0 {
            return true;
        }
        if let Some(t) = &self.0.tables {
            return t.log[a.0 as usize] % 2 == 0;
        }
        self.pow(a, (self.0.order - 1) / 2) == FieldElem::ONE
    }
}

/// Tonelli-Shanks square root in odd characteristic; `a` must be a nonzero square.
fn tonelli_shanks(f: &Field, a: FieldElem) -> FieldElem {
    let q = f.order();
    let mut s = 0;
    let mut odd = q - 1;
    while odd.is_multiple_of(2) {
        odd /= 2;
        s += 1;
    }
    let z = f
        .elements()
        .skip(1)
        .find(|&c| !f.is_square(c))
        .expect("odd-order fields have non-squares");
    let mut m = s;
    let mut c = f.pow(z, odd);
    let mut t = f.pow(a, odd);
    let mut r = f.pow(a, odd.div_ceil(2));
    while t != f.one() {
        let mut i = 0;
        let mut tt = t;
        while tt != f.one() {
            tt = f.square(tt);
            i += 1;
        }
        let mut b = c;
        for _ in 0..(m - i - 1) {
            b = f.square(b);
        }
        m = i;
        c = f.square(b);
        t = f.mul(t, c);
        r = f.mul(r, b);
    }
    r
}

/// Logarithmic representation of a table field: an element is its discrete
/// log with respect to a fixed primitive element, zero is [`ZECH_ZERO`].
#[derive(Clone, Copy)]
pub struct ZechView<'a> {
    t: &'a Tables,
    q1: u32,
    half: u32,
    p: u64,
    q: u64,
}

impl ZechView<'_> {
    pub fn from_packed(&self, a: FieldElem) -> u32 {
        if a.0 == 0 {
            ZECH_ZERO
        } else {
            self.t.log[a.0 as usize]
        }
    }

    pub fn to_packed(&self, l: u32) -> FieldElem {
        if l == ZECH_ZERO {
            FieldElem::ZERO
        } else {
            FieldElem(self.t.exp[l as usize] as u64)
        }
    }

    /// Multiplicative group order Q - 1.
    pub fn group_order(&self) -> u32 {
        self.q1
    }
}

impl FieldOps for ZechView<'_> {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        ZECH_ZERO
    }

    #[inline]
    fn one(&self) -> u32 {
        0
    }

    #[inline]
    fn is_zero(&self, a: u32) -> bool {
        a == ZECH_ZERO
    }

    #[inline]
    fn add(&self, a: u32, b: u32) -> u32 {
        if a == ZECH_ZERO {
            return b;
        }
        if b == ZECH_ZERO {
            return a;
        }
        let d = if b >= a { b - a } else { b + self.q1 - a };
        let z = self.t.zech[d as usize];
        if z == ZECH_ZERO {
            return ZECH_ZERO;
        }
        let s = a + z;
        if s >= self.q1 {
            s - self.q1
        } else {
            s
        }
    }

    #[inline]
    fn neg(&self, a: u32) -> u32 {
        if a == ZECH_ZERO || self.half == 0 {
            return a;
        }
        let s = a + self.half;
        if s >= self.q1 {
            s - self.q1
        } else {
            s
        }
    }

    #[inline]
    fn mul(&self, a: u32, b: u32) -> u32 {
        if a == ZECH_ZERO || b == ZECH_ZERO {
            return ZECH_ZERO;
        }
        let s = a + b;
        if s >= self.q1 {
            s - self.q1
        } else {
            s
        }
    }

    #[inline]
    fn square(&self, a: u32) -> u32 {
        self.mul(a, a)
    }

    #[inline]
    fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != ZECH_ZERO);
        if a == 0 {
            0
        } else {
            self.q1 - a
        }
    }

    fn pow(&self, a: u32, e: u64) -> u32 {
        if a == ZECH_ZERO {
            return if e == 0 { 0 } else { ZECH_ZERO };
        }
        ((a as u64 * (e % self.q1 as u64)) % self.q1 as u64) as u32
    }

    #[inline]
    fn order(&self) -> u64 {
        self.q
    }

    #[inline]
    fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    fn is_square(&self, a: u32) -> bool {
        self.p == 2 || a == ZECH_ZERO || a.is_multiple_of(2)
    }
}
