//! Root counting and root extraction for univariate polynomials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::field::{Field, FieldElem};
use super::ops::FieldOps;
use super::poly;

/// Maximum degree handled by the allocation-free counter.
pub const SMALL_DEGREE: usize = 8;

/// Number of distinct roots of a nonzero polynomial, via deg gcd(f, X^Q - X).
pub fn count_distinct_roots_vec<F: FieldOps>(f: &F, a: &[F::Elem]) -> usize {
    let mut a = a.to_vec();
    poly::trim(f, &mut a);
    match poly::degree(&a) {
        None => panic!("root count of the zero polynomial"),
        Some(d) if d <= SMALL_DEGREE => count_roots_small(f, &a),
        Some(_) => poly::degree(&rootful_part(f, &a)).unwrap_or(0),
    }
}

/// gcd(a, X^Q - X), the product of the distinct linear factors of `a`.
pub fn rootful_part<F: FieldOps>(f: &F, a: &[F::Elem]) -> Vec<F::Elem> {
    if poly::degree(a).unwrap_or(0) == 0 {
        return vec![f.one()];
    }
    let x = [f.zero(), f.one()];
    let xq = poly::powmod(f, &x, f.order(), a);
    let h = poly::sub(f, &xq, &x);
    poly::gcd(f, a, &h)
}

/// Distinct roots of a nonzero polynomial of degree at most [`SMALL_DEGREE`],
/// computed with fixed-size buffers (the point-counting inner loop).
pub fn count_roots_small<F: FieldOps>(f: &F, c: &[F::Elem]) -> usize {
    let mut n = c.len();
    while n > 0 && f.is_zero(c[n - 1]) {
        n -= 1;
    }
    assert!(n > 0, "root count of the zero polynomial");
    let d = n - 1;
    if d == 0 {
        return 0;
    }
    if d == 1 {
        return 1;
    }
    assert!(d <= SMALL_DEGREE);
    let zero = f.zero();
    let one = f.one();
    let lead_inv = f.inv(c[d]);
    // monic modulus, leading coefficient implicit
    let mut m = [zero; SMALL_DEGREE];
    for i in 0..d {
        m[i] = f.mul(c[i], lead_inv);
    }
    if d == 2 && f.characteristic() != 2 {
        // X^2 + bX + c: discriminant b^2 - 4c
        let four = f.add(f.add(one, one), f.add(one, one));
        let disc = f.sub(f.square(m[1]), f.mul(four, m[0]));
        return if f.is_zero(disc) {
            1
        } else if f.is_square(disc) {
            2
        } else {
            0
        };
    }

    let q = f.order();
    let mut r = [zero; SMALL_DEGREE];
    r[1] = one;
    let top = 63 - q.leading_zeros();
    let mut prod = [zero; 2 * SMALL_DEGREE];
    for bit in (0..top).rev() {
        // r <- r^2 mod m
        for v in prod.iter_mut().take(2 * d - 1) {
            *v = zero;
        }
        for i in 0..d {
            if f.is_zero(r[i]) {
                continue;
            }
            prod[2 * i] = f.add(prod[2 * i], f.square(r[i]));
            for j in (i + 1)..d {
                let t = f.mul(r[i], r[j]);
                prod[i + j] = f.add(prod[i + j], f.add(t, t));
            }
        }
        for i in (d..=2 * d - 2).rev() {
            let t = prod[i];
            if f.is_zero(t) {
                continue;
            }
            for j in 0..d {
                prod[i - d + j] = f.sub(prod[i - d + j], f.mul(t, m[j]));
            }
        }
        r[..d].copy_from_slice(&prod[..d]);
        if (q >> bit) & 1 == 1 {
            // r <- X r mod m
            let t = r[d - 1];
            for i in (1..d).rev() {
                r[i] = r[i - 1];
            }
            r[0] = zero;
            if !f.is_zero(t) {
                for j in 0..d {
                    r[j] = f.sub(r[j], f.mul(t, m[j]));
                }
            }
        }
    }
    r[1] = f.sub(r[1], one);

    // deg gcd(m, r) by Euclid on fixed buffers
    let mut a = [zero; SMALL_DEGREE + 1];
    a[..d].copy_from_slice(&m[..d]);
    a[d] = one;
    let mut da = d as isize;
    let mut b = [zero; SMALL_DEGREE + 1];
    b[..d].copy_from_slice(&r[..d]);
    let mut db = d as isize - 1;
    while db >= 0 && f.is_zero(b[db as usize]) {
        db -= 1;
    }
    while db >= 0 {
        // a <- a mod b
        let inv_b = f.inv(b[db as usize]);
        while da >= db {
            let t = f.mul(a[da as usize], inv_b);
            if !f.is_zero(t) {
                let shift = (da - db) as usize;
                for j in 0..=db as usize {
                    a[shift + j] = f.sub(a[shift + j], f.mul(t, b[j]));
                }
            }
            da -= 1;
            while da >= 0 && f.is_zero(a[da as usize]) {
                da -= 1;
            }
        }
        std::mem::swap(&mut a, &mut b);
        std::mem::swap(&mut da, &mut db);
    }
    da as usize
}

/// All roots of a nonzero polynomial in `field`, sorted by packed value.
///
/// The rootless part is removed with gcd(f, X^Q - X), then the remaining
/// product of linear factors is split by equal-degree splitting: odd
/// characteristic uses gcd(g, (X + c)^((Q-1)/2) - 1), characteristic 2 uses
/// gcd(g, Tr(cX)) with the absolute trace Tr(u) = u + u^2 + ... + u^(Q/2).
pub fn find_roots_raw(field: &Field, a: &[FieldElem], seed: u64) -> Vec<FieldElem> {
    let mut a = a.to_vec();
    poly::trim(field, &mut a);
    assert!(!a.is_empty(), "roots of the zero polynomial");
    let g = rootful_part(field, &a);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    split(field, &g, &mut rng, &mut out);
    out.sort_unstable();
    out
}

fn split(field: &Field, g: &[FieldElem], rng: &mut ChaCha8Rng, out: &mut Vec<FieldElem>) {
    match poly::degree(g) {
        None | Some(0) => {}
        Some(1) => {
            let r = field.neg(field.mul(g[0], field.inv(g[1])));
            out.push(r);
        }
        Some(d) => {
            let q = field.order();
            loop {
                let c = FieldElem(rng.gen_range(0..q));
                let h = if field.p() == 2 {
                    if c == FieldElem::ZERO {
                        continue;
                    }
                    // Tr(cX) mod g
                    let u = vec![FieldElem::ZERO, c];
                    let mut cur = poly::rem(field, &u, g);
                    let mut acc = cur.clone();
                    let mut n = q >> 1;
                    while n > 1 {
                        cur = poly::mulmod(field, &cur, &cur, g);
                        acc = poly::add(field, &acc, &cur);
                        n >>= 1;
                    }
                    acc
                } else {
                    let u = vec![c, FieldElem::ONE];
                    let pw = poly::powmod(field, &u, (q - 1) / 2, g);
                    poly::sub(field, &pw, &[FieldElem::ONE])
                };
                let s = poly::gcd(field, g, &h);
                let ds = poly::degree(&s).unwrap_or(d);
                if ds > 0 && ds < d {
                    let (other, _) = poly::div_rem(field, g, &s);
                    split(field, &s, rng, out);
                    split(field, &other, rng, out);
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;
    use crate::algebra::poly::UniPoly;

    #[test]
    fn root_count_examples() {
        let f5 = make_field(5, 1).unwrap();
        assert_eq!(
            UniPoly::from_ints(&f5, &[-1, 0, 0, 0, 1])
                .count_distinct_roots()
                .unwrap(),
            4
        );
        assert_eq!(UniPoly::from_ints(&f5, &[3, 1]).count_distinct_roots().unwrap(), 1);
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(UniPoly::from_ints(&f3, &[1, 0, 1]).count_distinct_roots().unwrap(), 0);
        assert!(UniPoly::zero(&f3).count_distinct_roots().is_err());
    }

    #[test]
    fn find_roots_examples() {
        let f9 = make_field(3, 2).unwrap();
        let r = UniPoly::from_ints(&f9, &[1, 0, 1]).find_roots().unwrap();
        assert_eq!(r, vec![f9.t(), f9.elem(&[0, 2]).unwrap()]);
        let f7 = make_field(7, 1).unwrap();
        let r = UniPoly::from_ints(&f7, &[-2, 0, 1]).find_roots().unwrap();
        assert_eq!(r, vec![FieldElem(3), FieldElem(4)]);
        let f5 = make_field(5, 1).unwrap();
        let r = UniPoly::from_ints(&f5, &[1, 0, 1]).find_roots().unwrap();
        assert_eq!(r, vec![FieldElem(2), FieldElem(3)]);
    }

    #[test]
    fn roots_seed_independent_in_char_two() {
        let f16 = make_field(2, 4).unwrap();
        // X^16 - X splits completely
        let mut c = vec![FieldElem::ZERO; 17];
        c[1] = FieldElem::ONE;
        c[16] = FieldElem::ONE;
        let p = UniPoly::new(&f16, c).unwrap();
        let a = p.find_roots_seeded(1).unwrap();
        let b = p.find_roots_seeded(99).unwrap();
        assert_eq!(a.len(), 16);
        assert_eq!(a, b);
    }

    #[test]
    fn small_counter_handles_repeated_roots() {
        let f7 = make_field(7, 1).unwrap();
        // (X-1)^2 (X-2) (X-3)
        let p = UniPoly::from_ints(&f7, &[-1, 1])
            .mul(&UniPoly::from_ints(&f7, &[-1, 1]))
            .unwrap()
            .mul(&UniPoly::from_ints(&f7, &[-2, 1]))
            .unwrap()
            .mul(&UniPoly::from_ints(&f7, &[-3, 1]))
            .unwrap();
        assert_eq!(count_roots_small(&f7, p.coeffs()), 3);
    }
}
