//! L-polynomials of genus-3 curves from point counts.
//!
//! With `S_r = q^r + 1 - N_r` the power sums of the six Frobenius eigenvalues,
//! `P(T) = Π (1 - α_i T) = Σ b_k T^k` is recovered from S_1, S_2, S_3 by the
//! Newton identities and the functional equation.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Relative tolerance on |α|^2 / q in the numerical root check.
pub const MODULUS_TOLERANCE: f64 = 1e-6;

/// Power sums `S_r = q^r + 1 - N_r`, r = 1, 2, 3.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PowerSums {
    pub q: u64,
    pub s: [i64; 3],
}

/// `P(T) = Σ b_k T^k`, k = 0..6.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct LPolynomial {
    pub q: u64,
    pub b: [i64; 7],
}

/// Why a candidate L-polynomial is not the L-polynomial of a genus-3 curve.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WeilFailure {
    LeadingCoefficient,
    FunctionalEquation,
    TraceBound,
    RootModulus,
    NegativeCount(u32),
}

impl WeilFailure {
    pub fn code(&self) -> String {
        match self {
            WeilFailure::LeadingCoefficient => "leading_coefficient".into(),
            WeilFailure::FunctionalEquation => "functional_equation".into(),
            WeilFailure::TraceBound => "trace_bound".into(),
            WeilFailure::RootModulus => "root_modulus".into(),
            WeilFailure::NegativeCount(r) => format!("negative_count_r{r}"),
        }
    }
}

fn qpow(q: u64, r: u32) -> i128 {
    (q as i128).pow(r)
}

pub fn power_sums(q: u64, n: [u64; 3]) -> PowerSums {
    let mut s = [0i64; 3];
    for (r, slot) in s.iter_mut().enumerate() {
        *slot = (qpow(q, r as u32 + 1) + 1 - n[r] as i128) as i64;
    }
    PowerSums { q, s }
}

/// Exact reconstruction; fails with `InconsistentCounts` when a Newton
/// division is inexact or the result violates the Weil conditions.
pub fn l_polynomial_from_counts(q: u64, n: [u64; 3]) -> Result<LPolynomial> {
    let PowerSums { s, .. } = power_sums(q, n);
    let [s1, s2, s3] = s.map(|v| v as i128);
    let e1 = s1;
    let num2 = e1 * s1 - s2;
    if num2 % 2 != 0 {
        return Err(Error::InconsistentCounts(format!("e2 = {num2}/2 is not integral")));
    }
    let e2 = num2 / 2;
    let num3 = s3 - e1 * s2 + e2 * s1;
    if num3 % 3 != 0 {
        return Err(Error::InconsistentCounts(format!("e3 = {num3}/3 is not integral")));
    }
    let e3 = num3 / 3;
    let qi = q as i128;
    let b = [1, -e1, e2, -e3, qi * e2, -qi * qi * e1, qi * qi * qi];
    let l = LPolynomial {
        q,
        b: b.map(|v| v as i64),
    };
    if let Err(f) = l.weil_report() {
        return Err(Error::InconsistentCounts(format!("Weil check failed: {}", f.code())));
    }
    Ok(l)
}

impl LPolynomial {
    /// Power sums p_1..p_r of the reciprocal roots via the Newton recurrence.
    pub fn eigenvalue_power_sums(&self, r: usize) -> Vec<i128> {
        let b: Vec<i128> = self.b.iter().map(|&v| v as i128).collect();
        let mut p: Vec<i128> = Vec::with_capacity(r);
        for n in 1..=r {
            let mut acc: i128 = 0;
            for i in 1..n.min(7) {
                acc -= b[i] * p[n - i - 1];
            }
            if n <= 6 {
                acc -= n as i128 * b[n];
            }
            p.push(acc);
        }
        p
    }

    /// N_r = q^r + 1 - p_r.
    pub fn predict_count(&self, r: u32) -> i128 {
        let p = self.eigenvalue_power_sums(r as usize);
        qpow(self.q, r) + 1 - p[r as usize - 1]
    }

    /// Order of the Jacobian, P(1).
    pub fn jacobian_order(&self) -> i64 {
        self.b.iter().sum()
    }

    pub fn weil_check(&self) -> bool {
        self.weil_report().is_ok()
    }

    /// Weil conditions, reporting the first failure.
    pub fn weil_report(&self) -> std::result::Result<(), WeilFailure> {
        let q = self.q as i128;
        let b = self.b.map(|v| v as i128);
        if b[0] != 1 {
            return Err(WeilFailure::LeadingCoefficient);
        }
        if b[4] != q * b[2] || b[5] != q * q * b[1] || b[6] != q * q * q {
            return Err(WeilFailure::FunctionalEquation);
        }
        // |b_1| ≤ 6 sqrt(q)  ⇔  b_1^2 ≤ 36 q
        if b[1] * b[1] > 36 * q {
            return Err(WeilFailure::TraceBound);
        }
        if !self.roots_on_circle() {
            return Err(WeilFailure::RootModulus);
        }
        for r in 1..=6 {
            if self.predict_count(r) < 0 {
                return Err(WeilFailure::NegativeCount(r));
            }
        }
        Ok(())
    }

    /// Every root α of T^6 P(1/T) has |α|^2 = q within the tolerance.
    fn roots_on_circle(&self) -> bool {
        let d = self.modulus_deviation();
        !d.is_nan() && d <= MODULUS_TOLERANCE
    }

    /// max over the roots α of T^6 P(1/T) of ||α|^2 / q - 1|, computed on the
    /// exact squarefree part.
    pub fn modulus_deviation(&self) -> f64 {
        let rev: Vec<BigRational> = self
            .b
            .iter()
            .rev()
            .map(|&v| BigRational::from_integer(BigInt::from(v)))
            .collect();
        let sf = squarefree_part(&rev);
        let coeffs: Vec<f64> = sf.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
        let q = self.q as f64;
        aberth(&coeffs, q.sqrt())
            .iter()
            .map(|z| (z.norm_sqr() / q - 1.0).abs())
            .fold(0.0, |acc, d| if d.is_nan() || acc.is_nan() { f64::NAN } else { acc.max(d) })
    }
}

type QPoly = Vec<BigRational>;

fn qtrim(a: &mut QPoly) {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
}

fn qrem(a: &QPoly, m: &QPoly) -> (QPoly, QPoly) {
    let mut r = a.clone();
    qtrim(&mut r);
    let dm = m.len() - 1;
    let lead = m[dm].clone();
    let mut quot = vec![BigRational::zero(); r.len().saturating_sub(dm).max(1)];
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r.last().unwrap() / &lead;
        for (i, mc) in m.iter().enumerate() {
            let t = &c * mc;
            r[shift + i] -= t;
        }
        quot[shift] = c;
        r.pop();
        qtrim(&mut r);
    }
    (quot, r)
}

fn qgcd(a: &QPoly, b: &QPoly) -> QPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    qtrim(&mut a);
    qtrim(&mut b);
    while !b.is_empty() {
        let (_, r) = qrem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// P / gcd(P, P'), made monic.
fn squarefree_part(p: &QPoly) -> QPoly {
    let d: QPoly = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    let g = qgcd(p, &d);
    let (mut sf, _) = qrem(p, &g);
    qtrim(&mut sf);
    let lead = sf.last().cloned().unwrap_or_else(BigRational::one);
    sf.iter().map(|c| c / &lead).collect()
}

/// Simultaneous root refinement (Aberth–Ehrlich) for a monic real polynomial
/// with ascending coefficients.
fn aberth(coeffs: &[f64], radius: f64) -> Vec<Complex64> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let eval = |z: Complex64| {
        let mut v = Complex64::zero();
        let mut dv = Complex64::zero();
        for &c in coeffs.iter().rev() {
            dv = dv * z + v;
            v = v * z + c;
        }
        (v, dv)
    };
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64))
        .collect();
    for _ in 0..1000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, dv) = eval(zs[i]);
            if v.is_zero() {
                continue;
            }
            let ratio = v / dv;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| (zs[i] - zs[j]).inv())
                .sum();
            let step = ratio / (Complex64::one() - ratio * repulsion);
            zs[i] -= step;
            moved = moved.max(step.norm() / radius.max(1.0));
        }
        if moved < 1e-15 {
            break;
        }
    }
    zs
}

impl PowerSums {
    /// |S_1| ≤ 6 sqrt(q).
    pub fn within_weil(&self) -> bool {
        let s1 = self.s[0] as i128;
        s1 * s1 <= 36 * self.q as i128
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sum_examples() {
        assert_eq!(power_sums(9, [28, 28, 892]).s, [-18, 54, -162]);
        assert_eq!(power_sums(8, [24, 38, 528]).s, [-15, 27, -15]);
        assert_eq!(power_sums(2, [3, 5, 9]).s, [0, 0, 0]);
    }

    #[test]
    fn reconstruction_examples() {
        let l = l_polynomial_from_counts(9, [28, 28, 892]).unwrap();
        assert_eq!(l.b, [1, 18, 135, 540, 1215, 1458, 729]);
        let l = l_polynomial_from_counts(8, [24, 38, 528]).unwrap();
        assert_eq!(l.b, [1, 15, 99, 365, 792, 960, 512]);
        let l = l_polynomial_from_counts(2, [3, 5, 9]).unwrap();
        assert_eq!(l.b, [1, 0, 0, 0, 0, 0, 8]);
    }

    #[test]
    fn predictions() {
        let l = LPolynomial {
            q: 9,
            b: [1, 18, 135, 540, 1215, 1458, 729],
        };
        assert_eq!(l.predict_count(1), 28);
        assert_eq!(l.predict_count(2), 28);
        assert_eq!(l.predict_count(3), 892);
        let l = LPolynomial {
            q: 2,
            b: [1, 0, 0, 0, 0, 0, 8],
        };
        assert_eq!(l.predict_count(3), 9);
    }

    #[test]
    fn weil_examples() {
        assert!(LPolynomial { q: 9, b: [1, 18, 135, 540, 1215, 1458, 729] }.weil_check());
        assert!(LPolynomial { q: 8, b: [1, 15, 99, 365, 792, 960, 512] }.weil_check());
        let tampered = LPolynomial {
            q: 9,
            b: [1, 20, 135, 540, 1215, 1620, 729],
        };
        assert_eq!(tampered.weil_report(), Err(WeilFailure::TraceBound));
        let off = LPolynomial {
            q: 9,
            b: [1, 0, 0, 0, 0, 0, 729],
        };
        assert!(off.weil_check());
        // (1 + 4T^2)^3: a triple root pair on the circle
        let cube = LPolynomial {
            q: 4,
            b: [1, 0, 12, 0, 48, 0, 64],
        };
        assert!(cube.weil_check());
        let off = LPolynomial {
            q: 4,
            b: [1, 0, -20, 0, -80, 0, 64],
        };
        assert_eq!(off.weil_report(), Err(WeilFailure::RootModulus));
    }

    #[test]
    fn inconsistent_counts() {
        assert!(matches!(
            l_polynomial_from_counts(2, [3, 6, 9]),
            Err(Error::InconsistentCounts(_))
        ));
        assert!(matches!(
            l_polynomial_from_counts(2, [20, 5, 9]),
            Err(Error::InconsistentCounts(_))
        ));
    }
}
