//! Plane quartics and their point counts over extensions of the base field.

use rayon::prelude::*;

use crate::algebra::roots::count_roots_small;
use crate::algebra::field::ZECH_ZERO;
use crate::algebra::{Field, FieldElem, FieldOps};
use crate::error::{Error, Result};
use crate::forms::{projective_points, TernaryForm};

/// Largest extension field the fiber-by-fiber counter will enumerate.
pub const COUNT_LIMIT: u64 = 1 << 24;

/// Budget of projective points for the brute-force counter.
pub const BRUTE_LIMIT: u64 = 100_000_000;

/// A plane quartic `F = 0` over its base field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneQuartic {
    form: TernaryForm,
}

/// Number of points over the degree-`k` extension of the base field.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PointCount {
    pub k: usize,
    pub n: u64,
}

impl PlaneQuartic {
    pub fn new(form: TernaryForm) -> Result<Self> {
        if form.degree() != 4 || form.is_zero() {
            return Err(Error::NotAQuartic(form.degree()));
        }
        Ok(PlaneQuartic { form })
    }

    pub fn form(&self) -> &TernaryForm {
        &self.form
    }

    pub fn base(&self) -> &Field {
        self.form.field()
    }

    /// Order q of the base field.
    pub fn q(&self) -> u64 {
        self.base().q()
    }

    /// The same curve over F_{q^k}.
    pub fn base_change(&self, k: usize) -> Result<PlaneQuartic> {
        let ext = self.base().extension(k)?;
        Ok(PlaneQuartic {
            form: self.form.embed(&ext)?,
        })
    }

    /// Coefficient table `c[i][j]` of x^i y^j z^(4-i-j), embedded in `ext`.
    fn coefficient_grid(&self, ext: &Field) -> Result<[[FieldElem; 5]; 5]> {
        let mut c = [[FieldElem::ZERO; 5]; 5];
        for ((i, j, _), v) in self.form.terms() {
            c[i as usize][j as usize] = self.base().embed(v, ext)?;
        }
        Ok(c)
    }

    /// Exact number of points over F_{q^k}.
    ///
    /// Affine chart z = 1: for each x0, the distinct roots in y of F(x0, y, 1).
    /// Line z = 0: the distinct roots of F(1, y, 0), plus (0:1:0) if it lies on
    /// the curve.
    pub fn count_points(&self, k: usize) -> Result<PointCount> {
        let ext = self.base().extension(k)?;
        let qk = ext.q();
        if qk > COUNT_LIMIT {
            return Err(Error::FieldTooLarge(qk));
        }
        let grid = self.coefficient_grid(&ext)?;
        let affine = match ext.zech() {
            Some(z) => {
                let g = grid.map(|row| row.map(|v| z.from_packed(v)));
                // index 0 is zero, index i > 0 is g^(i-1)
                count_affine(&z, &g, qk, |i| {
                    if i == 0 {
                        ZECH_ZERO
                    } else {
                        (i - 1) as u32
                    }
                })?
            }
            None => count_affine(&ext, &grid, qk, FieldElem)?,
        };
        // line at infinity
        let line: Vec<FieldElem> = (0..5).map(|j| grid[4 - j][j]).collect();
        if line.iter().all(|&c| c == FieldElem::ZERO) {
            return Err(Error::LineOnCurve);
        }
        let mut n = affine + count_roots_small(&ext, &line) as u64;
        if grid[0][4] == FieldElem::ZERO {
            n += 1;
        }
        Ok(PointCount { k, n })
    }

    /// Reference count by testing every point of P^2(F_{q^k}).
    pub fn count_points_bruteforce(&self, k: usize) -> Result<PointCount> {
        let ext = self.base().extension(k)?;
        let qk = ext.q();
        let total = qk
            .checked_mul(qk)
            .and_then(|v| v.checked_add(qk + 1))
            .unwrap_or(u64::MAX);
        if total > BRUTE_LIMIT {
            return Err(Error::FieldTooLarge(qk));
        }
        let form = self.form.embed(&ext)?;
        let n = projective_points(&ext)
            .filter(|&pt| form.evaluate(pt).expect("nonzero point") == FieldElem::ZERO)
            .count() as u64;
        Ok(PointCount { k, n })
    }

    /// Counts over F_q, F_{q^2}, ..., F_{q^r}.
    pub fn count_series(&self, r: usize) -> Result<Vec<u64>> {
        (1..=r).map(|k| self.count_points(k).map(|c| c.n)).collect()
    }
}

fn count_affine<F, M>(ops: &F, grid: &[[F::Elem; 5]; 5], qk: u64, elem: M) -> Result<u64>
where
    F: FieldOps,
    M: Fn(u64) -> F::Elem + Sync + Send,
{
    (0..qk)
        .into_par_iter()
        .map(|i| {
            let x0 = elem(i);
            let mut pw = [ops.one(); 5];
            for e in 1..5 {
                pw[e] = ops.mul(pw[e - 1], x0);
            }
            let mut fiber = [ops.zero(); 5];
            for (j, slot) in fiber.iter_mut().enumerate() {
                let mut acc = ops.zero();
                for (i, row) in grid.iter().enumerate().take(5 - j) {
                    let c = row[j];
                    if !ops.is_zero(c) {
                        acc = ops.add(acc, ops.mul(c, pw[i]));
                    }
                }
                *slot = acc;
            }
            if fiber.iter().all(|&c| ops.is_zero(c)) {
                return Err(Error::LineOnCurve);
            }
            Ok(count_roots_small(ops, &fiber) as u64)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::make_field;

    fn fermat(f: &Field) -> PlaneQuartic {
        PlaneQuartic::new(
            TernaryForm::from_ints(f, 4, &[((4, 0, 0), 1), ((0, 4, 0), 1), ((0, 0, 4), 1)])
                .unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn fermat_counts() {
        let f3 = make_field(3, 1).unwrap();
        assert_eq!(fermat(&f3).count_points(1).unwrap().n, 4);
        assert_eq!(fermat(&f3).count_points_bruteforce(1).unwrap().n, 4);
        let f9 = make_field(3, 2).unwrap();
        assert_eq!(fermat(&f9).count_points(1).unwrap().n, 28);
        assert_eq!(fermat(&f9).count_points_bruteforce(1).unwrap().n, 28);
        // base change: k = 2 over F_3 is k = 1 over F_9
        assert_eq!(fermat(&f3).count_points(2).unwrap().n, 28);
    }

    #[test]
    fn double_line_counted_by_bruteforce_only() {
        let f2 = make_field(2, 1).unwrap();
        let c = PlaneQuartic::new(TernaryForm::from_ints(&f2, 4, &[((4, 0, 0), 1)]).unwrap())
            .unwrap();
        assert_eq!(c.count_points_bruteforce(1).unwrap().n, 3);
        assert_eq!(c.count_points(1).unwrap_err(), Error::LineOnCurve);
    }

    #[test]
    fn rejects_non_quartics() {
        let f2 = make_field(2, 1).unwrap();
        assert_eq!(
            PlaneQuartic::new(TernaryForm::zero(&f2, 4)).unwrap_err(),
            Error::NotAQuartic(4)
        );
        assert_eq!(
            PlaneQuartic::new(TernaryForm::from_ints(&f2, 3, &[((3, 0, 0), 1)]).unwrap())
                .unwrap_err(),
            Error::NotAQuartic(3)
        );
    }
}
