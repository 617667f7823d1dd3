//! The curves shipped under `data/curves`, generated from the core registry.

use g3_core::families::{smooth_substitutes, special_curve, witnesses, SPECIAL_NAMES};
use g3_core::families::{field_of_order, WitnessCurve};
use g3_core::{HyperellipticG3, Result};

use crate::curve_file::CurveFile;

/// File stem for a registry entry: `C_2_f29`, `D_56_79_f97`, `q8_f8`.
fn stem(curve: &WitnessCurve, q: u64) -> String {
    match curve {
        WitnessCurve::Special(name) => name.to_string(),
        WitnessCurve::Member { family, params } => {
            let ps: Vec<String> = params.iter().map(|v| v.to_string()).collect();
            format!("{}_{}_f{q}", family.name(), ps.join("_"))
        }
    }
}

/// Hyperelliptic samples: (stem, q, f, h) with coefficients listed from x^0.
const HYPERELLIPTIC: [(&str, u64, &[i64], &[i64]); 2] = [
    ("hyper_y2_y_x7_f2", 2, &[0, 0, 0, 0, 0, 0, 0, 1], &[1]),
    ("hyper_y2_x7_x_f5", 5, &[0, -1, 0, 0, 0, 0, 0, 1], &[]),
];

/// Every bundled file as (file name, contents).
pub fn bundled_curves() -> Result<Vec<(String, CurveFile)>> {
    let mut out = Vec::new();
    for name in SPECIAL_NAMES {
        out.push((format!("{name}.json"), CurveFile::from_quartic(&special_curve(name)?)));
    }
    for w in witnesses().into_iter().chain(smooth_substitutes()) {
        if matches!(w.curve, WitnessCurve::Special(_)) {
            continue;
        }
        out.push((format!("{}.json", stem(&w.curve, w.q)), CurveFile::from_quartic(&w.quartic()?)));
    }
    for (name, q, f, h) in HYPERELLIPTIC {
        let c = HyperellipticG3::from_ints(&field_of_order(q)?, f, h)?;
        out.push((format!("{name}.json"), CurveFile::from_hyperelliptic(&c)));
    }
    Ok(out)
}
