//! JSON curve files.
//!
//! ```json
//! { "field": { "p": 2, "k": 3 }, "model": "quartic", "coeffs": { "400": 1, "211": [0, 1] } }
//! { "field": { "p": 5, "k": 1 }, "model": "hyperelliptic", "f": [1, 0, 0, 0, 0, 0, 0, 0, 1], "h": [] }
//! ```
//!
//! An integer coefficient is a residue of the prime field; a list is an
//! element of F_{p^k} written in the basis 1, t, t^2, ... of the field modulus.

use std::collections::BTreeMap;

use g3_core::algebra::{make_field, Field, FieldElem};
use g3_core::{HyperellipticG3, PlaneQuartic, TernaryForm};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Int(i64),
    Elem(Vec<i64>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase", deny_unknown_fields)]
pub enum CurveFile {
    Quartic {
        field: FieldSpec,
        coeffs: BTreeMap<String, Coeff>,
    },
    Hyperelliptic {
        field: FieldSpec,
        f: Vec<Coeff>,
        #[serde(default)]
        h: Vec<Coeff>,
    },
}

/// A parsed curve.
#[derive(Clone, Debug)]
pub enum Curve {
    Quartic(PlaneQuartic),
    Hyperelliptic(HyperellipticG3),
}

impl Curve {
    pub fn field(&self) -> &Field {
        match self {
            Curve::Quartic(c) => c.base(),
            Curve::Hyperelliptic(h) => h.base(),
        }
    }
}

fn field_of(spec: &FieldSpec) -> Result<Field, String> {
    let field = match &spec.modulus {
        None => make_field(spec.p, spec.k),
        Some(m) => Field::with_modulus(spec.p, m),
    }
    .map_err(|e| format!("field: {e}"))?;
    if field.k() != spec.k {
        return Err(format!("field: modulus has degree {}, expected k = {}", field.k(), spec.k));
    }
    Ok(field)
}

fn coeff_of(field: &Field, c: &Coeff) -> Result<FieldElem, String> {
    match c {
        Coeff::Int(v) => Ok(field.from_int(*v)),
        Coeff::Elem(v) => field.elem_signed(v).map_err(|e| format!("coefficient {v:?}: {e}")),
    }
}

fn exponent_key(key: &str) -> Result<(u32, u32, u32), String> {
    let digits: Vec<u32> = key.chars().filter_map(|c| c.to_digit(10)).collect();
    if digits.len() != 3 || key.len() != 3 {
        return Err(format!("coefficient key {key:?} must be three decimal digits"));
    }
    Ok((digits[0], digits[1], digits[2]))
}

impl CurveFile {
    pub fn parse(text: &str) -> Result<CurveFile, String> {
        serde_json::from_str(text).map_err(|e| format!("curve file: {e}"))
    }

    pub fn to_curve(&self) -> Result<Curve, String> {
        match self {
            CurveFile::Quartic { field, coeffs } => {
                let field = field_of(field)?;
                let terms = coeffs
                    .iter()
                    .map(|(k, c)| Ok((exponent_key(k)?, coeff_of(&field, c)?)))
                    .collect::<Result<Vec<_>, String>>()?;
                let form = TernaryForm::new(&field, 4, terms).map_err(|e| e.to_string())?;
                PlaneQuartic::new(form).map(Curve::Quartic).map_err(|e| e.to_string())
            }
            CurveFile::Hyperelliptic { field, f, h } => {
                let field = field_of(field)?;
                let conv = |v: &[Coeff]| v.iter().map(|c| coeff_of(&field, c)).collect::<Result<Vec<_>, _>>();
                HyperellipticG3::new(&field, conv(f)?, conv(h)?)
                    .map(Curve::Hyperelliptic)
                    .map_err(|e| e.to_string())
            }
        }
    }

    /// Canonical file for a quartic: prime-field coefficients as integers,
    /// others as coefficient lists; the modulus is written only when it is not
    /// the default one.
    pub fn from_quartic(c: &PlaneQuartic) -> CurveFile {
        let field = c.base();
        let coeffs = c
            .form()
            .terms()
            .map(|((i, j, k), v)| (format!("{i}{j}{k}"), canonical_coeff(field, v)))
            .collect();
        CurveFile::Quartic {
            field: spec_of(field),
            coeffs,
        }
    }

    pub fn from_hyperelliptic(h: &HyperellipticG3) -> CurveFile {
        let field = h.base();
        let conv = |v: &[FieldElem]| v.iter().map(|&c| canonical_coeff(field, c)).collect();
        CurveFile::Hyperelliptic {
            field: spec_of(field),
            f: conv(h.f()),
            h: conv(h.h()),
        }
    }

    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        serde_json::to_string_pretty(&value).expect("serializable")
    }
}

fn spec_of(field: &Field) -> FieldSpec {
    let canonical = make_field(field.p(), field.k()).expect("field already exists");
    FieldSpec {
        p: field.p(),
        k: field.k(),
        modulus: (canonical.modulus() != field.modulus()).then(|| field.modulus().to_vec()),
    }
}

fn canonical_coeff(field: &Field, v: FieldElem) -> Coeff {
    let digits = field.coeffs(v);
    if digits.iter().skip(1).all(|&d| d == 0) {
        Coeff::Int(digits.first().copied().unwrap_or(0) as i64)
    } else {
        let mut out: Vec<i64> = digits.iter().map(|&d| d as i64).collect();
        while out.last() == Some(&0) {
            out.pop();
        }
        Coeff::Elem(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_round_trips() {
        let text = r#"{"field": {"p": 3, "k": 2}, "model": "quartic", "coeffs": {"400": 1, "040": [1], "004": [0, 1], "211": -1}}"#;
        let file = CurveFile::parse(text).unwrap();
        let Curve::Quartic(c) = file.to_curve().unwrap() else { panic!() };
        let again = CurveFile::from_quartic(&c);
        let Curve::Quartic(c2) = again.to_curve().unwrap() else { panic!() };
        assert_eq!(c, c2);
        assert_eq!(CurveFile::parse(&again.to_json()).unwrap(), again);
    }

    #[test]
    fn rejects_unknown_keys_and_bad_exponents() {
        let extra = r#"{"field": {"p": 3, "k": 1}, "model": "quartic", "coeffs": {"400": 1}, "name": "x"}"#;
        assert!(CurveFile::parse(extra).is_err());
        let field_extra = r#"{"field": {"p": 3, "k": 1, "q": 3}, "model": "quartic", "coeffs": {"400": 1}}"#;
        assert!(CurveFile::parse(field_extra).is_err());
        let bad = r#"{"field": {"p": 3, "k": 1}, "model": "quartic", "coeffs": {"311": 1}}"#;
        assert!(CurveFile::parse(bad).unwrap().to_curve().is_err());
        let model = r#"{"field": {"p": 3, "k": 1}, "model": "cubic", "coeffs": {}}"#;
        assert!(CurveFile::parse(model).is_err());
    }

    #[test]
    fn hyperelliptic_files() {
        let text = r#"{"field": {"p": 5, "k": 1}, "model": "hyperelliptic", "f": [1, 0, 0, 0, 0, 0, 0, 0, 1]}"#;
        let Curve::Hyperelliptic(h) = CurveFile::parse(text).unwrap().to_curve().unwrap() else {
            panic!()
        };
        assert_eq!(h.q(), 5);
    }
}
