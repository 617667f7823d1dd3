//! Sylvester resultants and determinants over a field.

use super::ops::FieldOps;
use super::poly;

/// Sylvester matrix of `a` (degree m) and `b` (degree n), highest coefficients
/// first: n shifted rows of `a` followed by m shifted rows of `b`.
pub fn sylvester<E: Clone>(a: &[E], b: &[E], zero: E) -> Vec<Vec<E>> {
    let m = a.len() - 1;
    let n = b.len() - 1;
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in a.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in b.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Determinant by Gaussian elimination.
pub fn determinant<F: FieldOps>(f: &F, mut m: Vec<Vec<F::Elem>>) -> F::Elem {
    let n = m.len();
    let mut det = f.one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !f.is_zero(m[r][col])) else {
            return f.zero();
        };
        if piv != col {
            m.swap(piv, col);
            det = f.neg(det);
        }
        let pv = m[col][col];
        det = f.mul(det, pv);
        let inv = f.inv(pv);
        for r in (col + 1)..n {
            let factor = f.mul(m[r][col], inv);
            if f.is_zero(factor) {
                continue;
            }
            for c in col..n {
                let t = f.mul(factor, m[col][c]);
                m[r][c] = f.sub(m[r][c], t);
            }
        }
    }
    det
}

/// Resultant of two nonzero polynomials as the Sylvester determinant.
pub fn resultant<F: FieldOps>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    poly::trim(f, &mut a);
    poly::trim(f, &mut b);
    assert!(!a.is_empty() && !b.is_empty(), "resultant with the zero polynomial");
    let (m, n) = (a.len() - 1, b.len() - 1);
    if m == 0 {
        return f.pow(a[0], n as u64);
    }
    if n == 0 {
        return f.pow(b[0], m as u64);
    }
    determinant(f, sylvester(&a, &b, f.zero()))
}
