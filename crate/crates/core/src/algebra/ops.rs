//! The arithmetic interface shared by the packed field representation and
//! the logarithmic (Zech) representation used in counting loops.

use std::fmt::Debug;

/// Field arithmetic on a context object. Elements are plain `Copy` values;
/// the context carries the modulus and any lookup tables.
pub trait FieldOps: Sync {
    type Elem: Copy + PartialEq + Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: Self::Elem) -> bool;
    fn add(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    fn neg(&self, a: Self::Elem) -> Self::Elem;
    fn mul(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. `a` must be nonzero.
    fn inv(&self, a: Self::Elem) -> Self::Elem;
    /// Number of elements Q.
    fn order(&self) -> u64;
    fn characteristic(&self) -> u64;

    fn sub(&self, a: Self::Elem, b: Self::Elem) -> Self::Elem {
        self.add(a, self.neg(b))
    }

    fn square(&self, a: Self::Elem) -> Self::Elem {
        self.mul(a, a)
    }

    fn pow(&self, a: Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.square(base);
            }
        }
        acc
    }

    /// Quadratic residuosity; always true in characteristic 2.
    fn is_square(&self, a: Self::Elem) -> bool {
        if self.characteristic() == 2 || self.is_zero(a) {
            return true;
        }
        self.pow(a, (self.order() - 1) / 2) == self.one()
    }

    /// Absolute trace to F_2 in characteristic 2: a + a^2 + ... + a^(Q/2).
    fn trace_f2(&self, a: Self::Elem) -> Self::Elem {
        debug_assert_eq!(self.characteristic(), 2);
        let mut acc = a;
        let mut cur = a;
        let mut n = self.order() >> 1;
        while n > 1 {
            cur = self.square(cur);
            acc = self.add(acc, cur);
            n >>= 1;
        }
        acc
    }

    /// Quadratic character with chi(0) = 0, odd characteristic only.
    fn legendre(&self, a: Self::Elem) -> i64 {
        if self.is_zero(a) {
            0
        } else if self.is_square(a) {
            1
        } else {
            -1
        }
    }
}
