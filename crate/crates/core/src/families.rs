//! Parametrized quartic families, the named curves, elliptic factors of the
//! HLP construction, and parameter search.

use rayon::prelude::*;

use crate::algebra::{make_field, Field, FieldElem, FieldOps};
use crate::curves::{q8_form, PlaneQuartic};
use crate::error::{Error, Result};
use crate::forms::{Monomial, TernaryForm};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    C,
    D,
    X,
    Y,
    Hlp,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::C, Family::D, Family::X, Family::Y, Family::Hlp];

    pub fn name(self) -> &'static str {
        match self {
            Family::C => "C",
            Family::D => "D",
            Family::X => "X",
            Family::Y => "Y",
            Family::Hlp => "HLP",
        }
    }

    pub fn arity(self) -> usize {
        match self {
            Family::C => 1,
            Family::D | Family::X | Family::Y => 2,
            Family::Hlp => 3,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// A family member: name plus parameters (C: λ; D, X, Y: a, b; HLP: λ, a, b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<FieldElem>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<FieldElem>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::WrongArity {
                family: family.name(),
                expected: family.arity(),
                got: params.len(),
            });
        }
        Ok(FamilySpec { family, params })
    }

    pub fn curve(&self, field: &Field) -> Result<PlaneQuartic> {
        family_curve(self.family, field, &self.params)
    }
}

fn quartic(field: &Field, terms: Vec<(Monomial, FieldElem)>) -> Result<PlaneQuartic> {
    let form = TernaryForm::new(field, 4, terms)?;
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    PlaneQuartic::new(form)
}

/// The family member with all terms moved to the left-hand side.
pub fn family_curve(family: Family, field: &Field, params: &[FieldElem]) -> Result<PlaneQuartic> {
    if params.len() != family.arity() {
        return Err(Error::WrongArity {
            family: family.name(),
            expected: family.arity(),
            got: params.len(),
        });
    }
    if params.iter().any(|&c| !field.contains(c)) {
        return Err(Error::FieldMismatch);
    }
    let one = FieldElem::ONE;
    let int = |n: i64| field.from_int(n);
    match family {
        Family::C => {
            let c = field.neg(field.add(params[0], one));
            quartic(
                field,
                vec![
                    ((4, 0, 0), one),
                    ((0, 4, 0), one),
                    ((0, 0, 4), one),
                    ((2, 2, 0), c),
                    ((0, 2, 2), c),
                    ((2, 0, 2), c),
                ],
            )
        }
        Family::D => {
            let (a, b) = (params[0], params[1]);
            quartic(
                field,
                vec![
                    ((3, 0, 1), one),
                    ((0, 3, 1), one),
                    ((2, 2, 0), one),
                    ((1, 1, 2), a),
                    ((0, 0, 4), b),
                ],
            )
        }
        Family::X => {
            let (a, b) = (params[0], params[1]);
            quartic(
                field,
                vec![
                    ((2, 2, 0), one),
                    ((0, 2, 2), one),
                    ((2, 0, 2), one),
                    ((3, 1, 0), a),
                    ((0, 3, 1), a),
                    ((1, 0, 3), a),
                    ((3, 0, 1), b),
                    ((1, 3, 0), b),
                    ((0, 1, 3), b),
                ],
            )
        }
        Family::Y => {
            // (3x^2 + y^2)^2 + a x (x^2 - y^2) z + b z^4
            let (a, b) = (params[0], params[1]);
            quartic(
                field,
                vec![
                    ((4, 0, 0), int(9)),
                    ((2, 2, 0), int(6)),
                    ((0, 4, 0), one),
                    ((3, 0, 1), a),
                    ((1, 2, 1), field.neg(a)),
                    ((0, 0, 4), b),
                ],
            )
        }
        Family::Hlp => hlp_quartic(field, params[0], params[1], params[2]),
    }
}

/// Elliptic curves y^2 = x(x-1)(x-λ) and y^2 = x(x^2 + a x + b).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum EllipticModel {
    Legendre { lambda: FieldElem },
    Split { a: FieldElem, b: FieldElem },
}

impl EllipticModel {
    /// Cubic x^3 + c2 x^2 + c1 x + c0 as (c0, c1, c2).
    fn cubic(&self, field: &Field) -> [FieldElem; 3] {
        match *self {
            EllipticModel::Legendre { lambda } => {
                // x (x - 1)(x - λ) = x^3 - (1 + λ) x^2 + λ x
                [
                    FieldElem::ZERO,
                    lambda,
                    field.neg(field.add(FieldElem::ONE, lambda)),
                ]
            }
            EllipticModel::Split { a, b } => [FieldElem::ZERO, b, a],
        }
    }

    pub fn is_nonsingular(&self, field: &Field) -> bool {
        match *self {
            EllipticModel::Legendre { lambda } => {
                lambda != FieldElem::ZERO && lambda != FieldElem::ONE
            }
            EllipticModel::Split { a, b } => {
                let disc = field.sub(field.square(a), field.mul(field.from_int(4), b));
                b != FieldElem::ZERO && disc != FieldElem::ZERO
            }
        }
    }
}

/// Number of points, including the one at infinity.
pub fn count_elliptic(e: &EllipticModel, field: &Field) -> Result<u64> {
    if field.p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if !e.is_nonsingular(field) {
        return Err(Error::SingularModel);
    }
    let [c0, c1, c2] = e.cubic(field);
    let q = field.q();
    let sum: i64 = field
        .elements()
        .map(|x| {
            let v = field.add(field.mul(field.add(field.mul(field.add(x, c2), x), c1), x), c0);
            1 + field.legendre(v)
        })
        .sum();
    let n = sum as u64 + 1;
    let t = n as i64 - q as i64 - 1;
    if (t * t) as u64 > 4 * q {
        return Err(Error::InternalInconsistency(format!(
            "elliptic count {n} violates |N - q - 1| <= 2 sqrt(q) over F_{q}"
        )));
    }
    Ok(n)
}

/// (λ-1)(λx^4 + b y^4 + b z^4 + λa x^2y^2 + λa x^2z^2) - (λa^2 - 2b(λ+1)) y^2z^2.
pub fn hlp_quartic(field: &Field, lambda: FieldElem, a: FieldElem, b: FieldElem) -> Result<PlaneQuartic> {
    if field.p() == 2 {
        return Err(Error::CharacteristicTwo);
    }
    if [lambda, a, b].iter().any(|&c| !field.contains(c)) {
        return Err(Error::FieldMismatch);
    }
    let one = FieldElem::ONE;
    let lm1 = field.sub(lambda, one);
    let four_b = field.mul(field.from_int(4), b);
    let cond = field.mul(
        field.mul(lambda, lm1),
        field.sub(field.mul(field.square(a), lambda), four_b),
    );
    if cond == FieldElem::ZERO || !field.is_square(cond) {
        return Err(Error::ConditionNotSquare);
    }
    let factors = [EllipticModel::Legendre { lambda }, EllipticModel::Split { a, b }];
    if factors.iter().any(|e| !e.is_nonsingular(field)) {
        return Err(Error::SingularEllipticFactor);
    }
    let la = field.mul(lambda, a);
    let rhs = field.sub(
        field.mul(lambda, field.square(a)),
        field.mul(field.from_int(2), field.mul(b, field.add(lambda, one))),
    );
    quartic(
        field,
        vec![
            ((4, 0, 0), field.mul(lm1, lambda)),
            ((0, 4, 0), field.mul(lm1, b)),
            ((0, 0, 4), field.mul(lm1, b)),
            ((2, 2, 0), field.mul(lm1, la)),
            ((2, 0, 2), field.mul(lm1, la)),
            ((0, 2, 2), field.neg(rhs)),
        ],
    )
}

/// Both sides of #C = #E_λ + 2 #E'_{a,b} - 2q - 2.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct HlpCheck {
    pub quartic_count: u64,
    pub elliptic_side: i64,
    pub smooth: bool,
}

impl HlpCheck {
    pub fn holds(&self) -> bool {
        self.quartic_count as i64 == self.elliptic_side
    }
}

pub fn check_hlp_relation(field: &Field, lambda: FieldElem, a: FieldElem, b: FieldElem) -> Result<HlpCheck> {
    let c = hlp_quartic(field, lambda, a, b)?;
    let n = c.count_points(1)?.n;
    let e1 = count_elliptic(&EllipticModel::Legendre { lambda }, field)? as i64;
    let e2 = count_elliptic(&EllipticModel::Split { a, b }, field)? as i64;
    Ok(HlpCheck {
        quartic_count: n,
        elliptic_side: e1 + 2 * e2 - 2 * field.q() as i64 - 2,
        smooth: c.is_smooth(),
    })
}

pub const SPECIAL_NAMES: [&str; 4] = ["example4_f2", "misprint_f2", "q8_f8", "fermat4_f9"];

/// x^4 + y^4 + z^4 over the given field.
pub fn fermat4(field: &Field) -> Result<PlaneQuartic> {
    let one = FieldElem::ONE;
    quartic(field, vec![((4, 0, 0), one), ((0, 4, 0), one), ((0, 0, 4), one)])
}

/// Named curves over their natural base fields.
pub fn special_curve(name: &str) -> Result<PlaneQuartic> {
    let ones = |field: &Field, ms: &[Monomial]| {
        quartic(field, ms.iter().map(|&m| (m, FieldElem::ONE)).collect())
    };
    match name {
        "example4_f2" => ones(
            &make_field(2, 1)?,
            &[(0, 2, 2), (0, 1, 3), (1, 3, 0), (2, 2, 0), (3, 0, 1), (1, 0, 3)],
        ),
        "misprint_f2" => ones(
            &make_field(2, 1)?,
            &[
                (4, 0, 0),
                (0, 4, 0),
                (0, 0, 4),
                (2, 2, 0),
                (0, 2, 2),
                (2, 0, 2),
                (2, 1, 1),
                (1, 2, 1),
            ],
        ),
        "q8_f8" => PlaneQuartic::new(q8_form(&make_field(2, 3)?)?),
        "fermat4_f9" => fermat4(&make_field(3, 2)?),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}

/// A curve with an explicit equation attaining N_q(3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessCurve {
    Special(&'static str),
    Member { family: Family, params: &'static [i64] },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub q: u64,
    pub curve: WitnessCurve,
    pub count: u64,
}

/// Every explicit maximal curve, in order of q.
pub fn witnesses() -> Vec<Witness> {
    use WitnessCurve::*;
    let m = |q, family, params, count| Witness {
        q,
        curve: Member { family, params },
        count,
    };
    vec![
        Witness { q: 2, curve: Special("example4_f2"), count: 7 },
        Witness { q: 8, curve: Special("q8_f8"), count: 24 },
        Witness { q: 9, curve: Special("fermat4_f9"), count: 28 },
        m(29, Family::C, &[2][..], 60),
        m(31, Family::D, &[4, 2], 62),
        m(37, Family::Hlp, &[7, 0, 2], 72),
        m(41, Family::X, &[-7, 8], 78),
        m(43, Family::C, &[10], 80),
        m(49, Family::C, &[-1], 92),
        m(53, Family::C, &[2], 96),
        m(59, Family::Y, &[4, 6], 102),
        m(61, Family::D, &[29, 34], 107),
        m(67, Family::C, &[30], 116),
        m(71, Family::C, &[37], 120),
        m(73, Family::D, &[2, 48], 122),
        m(79, Family::D, &[11, 8], 131),
        m(83, Family::Hlp, &[5, 4, 2], 136),
        m(89, Family::C, &[13], 144),
        m(97, Family::D, &[56, 79], 155),
    ]
}

/// Smooth members standing in for listed witnesses that turn out singular.
///
/// X(-7,8) has a + b = 1, so its form vanishes on the line x + y + z = 0: the
/// curve is that line together with a cubic. It still has 78 points over
/// F_41, and so does the smooth member X(22,22).
pub fn smooth_substitutes() -> Vec<Witness> {
    vec![Witness {
        q: 41,
        curve: WitnessCurve::Member { family: Family::X, params: &[22, 22] },
        count: 78,
    }]
}

/// The field F_q for a prime power q.
pub fn field_of_order(q: u64) -> Result<Field> {
    let (p, k) = crate::algebra::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    make_field(p, k)
}

impl Witness {
    pub fn quartic(&self) -> Result<PlaneQuartic> {
        match &self.curve {
            WitnessCurve::Special(name) => special_curve(name),
            WitnessCurve::Member { family, params } => {
                let field = field_of_order(self.q)?;
                let ps: Vec<FieldElem> = params.iter().map(|&v| field.from_int(v)).collect();
                family_curve(*family, &field, &ps)
            }
        }
    }

    pub fn label(&self) -> String {
        match &self.curve {
            WitnessCurve::Special(name) => name.to_string(),
            WitnessCurve::Member { family, params } => {
                let ps: Vec<String> = params.iter().map(|v| v.to_string()).collect();
                format!("{}({})", family.name(), ps.join(","))
            }
        }
    }
}

/// One member reached by a search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub params: Vec<FieldElem>,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub hits: Vec<SearchHit>,
    /// Parameter tuples examined.
    pub examined: u64,
    /// The budget stopped the sweep before the whole parameter space was seen.
    pub partial: bool,
}

/// Sweeps all parameter tuples in field order (last coordinate fastest),
/// keeping smooth members whose count equals `target`, or every smooth member
/// when no target is given. Degenerate members are skipped.
pub fn search_family(
    family: Family,
    field: &Field,
    target: Option<u64>,
    budget: Option<u64>,
) -> Result<SearchResult> {
    let q = field.q();
    let arity = family.arity() as u32;
    let total = q.checked_pow(arity).ok_or(Error::FieldTooLarge(q))?;
    let examined = budget.map_or(total, |b| b.min(total));
    let tuple = |mut idx: u64| -> Vec<FieldElem> {
        let mut v = vec![FieldElem::ZERO; arity as usize];
        for slot in v.iter_mut().rev() {
            *slot = field.from_packed(idx % q).expect("index below q");
            idx /= q;
        }
        v
    };
    let hits: Vec<SearchHit> = (0..examined)
        .into_par_iter()
        .filter_map(|i| {
            let params = tuple(i);
            let curve = family_curve(family, field, &params).ok()?;
            let count = curve.count_points(1).ok()?.n;
            if target.is_some_and(|t| t != count) || !curve.is_smooth() {
                return None;
            }
            Some(SearchHit { params, count })
        })
        .collect();
    Ok(SearchResult {
        hits,
        examined,
        partial: examined < total,
    })
}
