//! Acceptance checks 1-8, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines reach the terminal under a
//! plain `cargo test`. The process fails on any FAIL except the entries in
//! `DOCUMENTED`, which reproduce an error in the source data and are reported
//! as FAIL all the same.

use std::cell::Cell;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use g3_cli::run;
use g3_core::algebra::{make_field, Field, FieldElem, FieldOps};
use g3_core::curves::{derive_f2_fnc_quartic, hv_count, sv_bound, HyperellipticG3};
use g3_core::families::{check_hlp_relation, field_of_order};
use g3_core::forms::{det3, Monomial, TernaryForm, Var};
use g3_core::zeta::l_polynomial_from_counts;
use g3_core::{Error, PlaneQuartic};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};
use serde_json::Value;

/// (criterion, item, observed) triples that are known to fail.
const DOCUMENTED: [(u32, &str, u64); 1] = [(3, "misprint_f2", 1)];

struct Outcome {
    pass: bool,
    detail: String,
    /// Failing items as (name, observed value).
    failed_items: Vec<(String, u64)>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into(), failed_items: vec![] }
    }
}

fn data(name: &str) -> String {
    let p: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/curves").join(name);
    p.to_string_lossy().into_owned()
}

fn g3(args: &[&str]) -> (i32, Value) {
    let out = run(std::iter::once("g3").chain(args.iter().copied()));
    (out.code, serde_json::from_str(&out.stdout).unwrap_or(Value::Null))
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

/// N_q(3) for every prime power q < 100.
const TABLE: [(u64, u64); 35] = [
    (2, 7), (3, 10), (4, 14), (5, 16), (7, 20), (8, 24), (9, 28), (11, 28), (13, 32),
    (16, 38), (17, 40), (19, 44), (23, 48), (25, 56), (27, 56), (29, 60), (31, 62),
    (32, 64), (37, 72), (41, 78), (43, 80), (47, 87), (49, 92), (53, 96), (59, 102),
    (61, 107), (64, 113), (67, 116), (71, 120), (73, 122), (79, 131), (81, 136),
    (83, 136), (89, 144), (97, 155),
];

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for (q, n) in TABLE {
        let (code, v) = g3(&["bound", "--q", &q.to_string()]);
        if code != 0 || v["results"]["best"] != n {
            bad.push(format!("q={q}: {}", v["results"]["best"]));
        }
    }
    let t = start.elapsed();
    let pass = bad.is_empty() && t < Duration::from_secs(1);
    Outcome::new(pass, format!("35/35 bounds exact in {} (limit 1s) {}", secs(t), bad.join(", ")))
}

/// Items credited per q; the empty entry is q = 32, which needs the lemma.
const CREDITED: [(u64, &str); 35] = [
    (2, "ad"), (3, "f"), (4, "b"), (5, "bd"), (7, "bf"), (8, "c"), (9, "c"), (11, "be"),
    (13, "bf"), (16, "b"), (17, "bd"), (19, "bc"), (23, "g"), (25, "bc"), (27, "e"),
    (29, "c"), (31, "f"), (32, ""), (37, "d"), (41, "c"), (43, "f"), (47, "c"), (49, "c"),
    (53, "c"), (59, "g"), (61, "c"), (64, "c"), (67, "c"), (71, "c"), (73, "f"), (79, "c"),
    (81, "c"), (83, "e"), (89, "c"), (97, "c"),
];

fn criterion_2() -> Outcome {
    let mut bad = Vec::new();
    for (q, items) in CREDITED {
        let (_, v) = g3(&["bound", "--q", &q.to_string()]);
        let achieved: Vec<String> = v["results"]["achieved_by"]
            .as_array()
            .map(|a| a.iter().filter_map(|s| s.as_str().map(String::from)).collect())
            .unwrap_or_default();
        let ok = if q == 32 {
            achieved == ["lemma"]
        } else {
            items.chars().all(|c| achieved.contains(&c.to_string()))
        };
        if !ok {
            bad.push(format!("q={q}: {achieved:?}"));
        }
    }
    Outcome::new(bad.is_empty(), format!("35/35 attributions hold, q=32 by lemma alone {}", bad.join(", ")))
}

const WITNESSES: [(&str, u64); 20] = [
    ("example4_f2", 7),
    ("misprint_f2", 0),
    ("q8_f8", 24),
    ("fermat4_f9", 28),
    ("C_2_f29", 60),
    ("C_-1_f49", 92),
    ("C_2_f53", 96),
    ("C_30_f67", 116),
    ("C_37_f71", 120),
    ("C_13_f89", 144),
    ("C_10_f43", 80),
    ("D_4_2_f31", 62),
    ("D_29_34_f61", 107),
    ("D_2_48_f73", 122),
    ("D_11_8_f79", 131),
    ("D_56_79_f97", 155),
    ("X_-7_8_f41", 78),
    ("Y_4_6_f59", 102),
    ("HLP_7_0_2_f37", 72),
    ("HLP_5_4_2_f83", 136),
];

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut failed = Vec::new();
    for (name, want) in WITNESSES {
        let (code, v) = g3(&["count", "--curve", &data(&format!("{name}.json"))]);
        let got = v["results"]["N"].as_u64();
        if code != 0 || got != Some(want) {
            failed.push((name.to_string(), got.unwrap_or(u64::MAX)));
        }
    }
    let t = start.elapsed();
    let detail = format!(
        "{}/20 counts exact in {} (limit 60s){}",
        20 - failed.len(),
        secs(t),
        failed
            .iter()
            .map(|(n, g)| format!("; {n} counted {g}"))
            .collect::<String>()
    );
    let mut o = Outcome::new(failed.is_empty() && t < Duration::from_secs(60), detail);
    if t >= Duration::from_secs(60) {
        failed.push(("time".into(), t.as_secs()));
    }
    o.failed_items = failed;
    o
}

const QUARTIC_MONOMIALS: [Monomial; 15] = [
    (4, 0, 0), (3, 1, 0), (3, 0, 1), (2, 2, 0), (2, 1, 1), (2, 0, 2), (1, 3, 0), (1, 2, 1),
    (1, 1, 2), (1, 0, 3), (0, 4, 0), (0, 3, 1), (0, 2, 2), (0, 1, 3), (0, 0, 4),
];

struct ScanResult {
    smooth: u64,
    max_smooth: u64,
    fnc_smooth: u64,
    fnc_total: u64,
    fnc_counts_ok: bool,
    brute_ok: bool,
}

/// Every nonzero quartic form over F_2.
fn scan_f2() -> ScanResult {
    let f2 = make_field(2, 1).unwrap();
    let mut r = ScanResult { smooth: 0, max_smooth: 0, fnc_smooth: 0, fnc_total: 0, fnc_counts_ok: true, brute_ok: true };
    for mask in 1u32..1 << 15 {
        let terms = QUARTIC_MONOMIALS
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &m)| (m, FieldElem::ONE));
        let c = PlaneQuartic::new(TernaryForm::new(&f2, 4, terms).unwrap()).unwrap();
        let fnc = c.is_frobenius_nonclassical();
        r.fnc_total += u64::from(fnc);
        if !c.is_smooth() {
            continue;
        }
        let n = c.count_points(1).unwrap().n;
        r.brute_ok &= n == c.count_points_bruteforce(1).unwrap().n;
        r.smooth += 1;
        r.max_smooth = r.max_smooth.max(n);
        if fnc {
            r.fnc_smooth += 1;
            r.fnc_counts_ok &= n as i64 == hv_count(4, 2);
        }
    }
    r
}

/// Largest count over all genus-3 models y^2 + h y = f over F_2.
fn hyperelliptic_max_f2() -> (u64, u64) {
    let f2 = make_field(2, 1).unwrap();
    let bits = |m: u32, n: usize| (0..n).map(|i| if m >> i & 1 == 1 { FieldElem::ONE } else { FieldElem::ZERO }).collect::<Vec<_>>();
    let (mut models, mut best) = (0, 0);
    for fm in 0u32..1 << 9 {
        for hm in 1u32..1 << 5 {
            let Ok(c) = HyperellipticG3::new(&f2, bits(fm, 9), bits(hm, 5)) else { continue };
            models += 1;
            best = best.max(c.count_points(1).unwrap().n);
        }
    }
    (models, best)
}

fn criterion_4(scan: &ScanResult, scan_time: Duration) -> Outcome {
    let start = Instant::now();
    let (models, hyper_max) = hyperelliptic_max_f2();
    let hyper_time = start.elapsed();
    let pass = scan.max_smooth == 7 && scan.brute_ok && hyper_max <= 6 && scan_time < Duration::from_secs(10);
    Outcome::new(
        pass,
        format!(
            "{} smooth quartics of 32767 forms, max {} points (brute agrees: {}), scan {} (limit 10s); \
             {models} hyperelliptic models, max {hyper_max} <= 6 in {}",
            scan.smooth,
            scan.max_smooth,
            scan.brute_ok,
            secs(scan_time),
            secs(hyper_time)
        ),
    )
}

/// det[(x,y,z); (x^2,y^2,z^2); (x^8,y^8,z^8)] over F_2 divided by its seven
/// rational lines one at a time.
fn derive_independently() -> Result<TernaryForm, String> {
    let f2 = make_field(2, 1).unwrap();
    let v = |w| TernaryForm::var(&f2, w);
    let row = |e: u32| [v(Var::X).pow(e), v(Var::Y).pow(e), v(Var::Z).pow(e)];
    let mut g = det3(&[row(1), row(2), row(8)]).map_err(|e| e.to_string())?;
    if g.degree() != 11 {
        return Err(format!("determinant has degree {}", g.degree()));
    }
    let lines: Vec<TernaryForm> = (1u32..8)
        .map(|m| {
            let terms = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
                .into_iter()
                .enumerate()
                .filter(|(i, _)| m >> i & 1 == 1)
                .map(|(_, mono)| (mono, FieldElem::ONE));
            TernaryForm::new(&f2, 1, terms).unwrap()
        })
        .collect();
    for l in &lines {
        g = g
            .divide_exact(l)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{l} does not divide"))?;
    }
    Ok(g)
}

fn criterion_5(scan: &ScanResult) -> Outcome {
    let q8_monomials = [(4, 0, 0), (0, 4, 0), (0, 0, 4), (2, 2, 0), (0, 2, 2), (2, 0, 2), (2, 1, 1), (1, 2, 1), (1, 1, 2)];
    let f2 = make_field(2, 1).unwrap();
    let expected = TernaryForm::new(&f2, 4, q8_monomials.map(|m| (m, FieldElem::ONE))).unwrap();
    let derived = derive_independently();
    let library = derive_f2_fnc_quartic().map(|c| c.form().clone());
    let (_, cli) = g3(&["derive-fnc-f2"]);
    let derive_ok = derived.as_ref() == Ok(&expected)
        && library.as_ref() == Ok(&expected)
        && cli["results"]["matches_q8"] == true;
    let fnc = |name: &str| g3(&["fnc", "--curve", &data(name)]).1["results"]["frobenius_nonclassical"].clone();
    let (a, b, c) = (fnc("q8_f8.json"), fnc("fermat4_f9.json"), fnc("example4_f2.json"));
    let flags_ok = a == true && b == true && c == false;
    // 441 forms with F dividing a nonzero Frobenius form plus 127 whose
    // Frobenius form vanishes, from a separate enumeration
    let pass = derive_ok && flags_ok && scan.fnc_total == 568 && scan.fnc_smooth > 0 && scan.fnc_counts_ok;
    Outcome::new(
        pass,
        format!(
            "degree 11 -> 4 after 7 exact divisions, equals the q=8 quartic: {derive_ok}; \
             FNC q8_f8={a} fermat4_f9={b} example4_f2={c}; {} FNC forms over F_2 (oracle 568), {} of them smooth, all with {} points: {}",
            scan.fnc_total,
            scan.fnc_smooth,
            hv_count(4, 2),
            scan.fnc_counts_ok
        ),
    )
}

fn zeta_case(name: &str, want: [i64; 7]) -> (bool, String) {
    let (code, v) = g3(&["zeta", "--curve", &data(name)]);
    let l: Vec<i64> = v["results"]["L"]
        .as_array()
        .map(|a| a.iter().filter_map(Value::as_i64).collect())
        .unwrap_or_default();
    let counts: Vec<u64> = v["results"]["counts"]
        .as_array()
        .map(|a| a.iter().filter_map(Value::as_u64).collect())
        .unwrap_or_default();
    let text = std::fs::read_to_string(data(name)).unwrap();
    let g3_cli::curve_file::Curve::Quartic(c) = g3_cli::curve_file::CurveFile::parse(&text).unwrap().to_curve().unwrap() else {
        return (false, format!("{name} is not a quartic"));
    };
    let brute_n2 = c.count_points_bruteforce(2).map(|n| n.n).ok();
    let ok = code == 0
        && l == want
        && v["results"]["weil_check"] == true
        && counts.len() == 3
        && brute_n2 == Some(counts[1]);
    (
        ok,
        format!("{name}: counts {counts:?}, brute N2 {brute_n2:?}, L {l:?}, weil {}", v["results"]["weil_check"]),
    )
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let (ok1, d1) = zeta_case("q8_f8.json", [1, 15, 99, 365, 792, 960, 512]);
    let (ok2, d2) = zeta_case("fermat4_f9.json", [1, 18, 135, 540, 1215, 1458, 729]);
    // (1 + 5T + 8T^2)^3 and (1 + 3T)^6 multiplied out here as an oracle
    let cube = {
        let b = [1i64, 5, 8];
        let mut sq = [0i64; 5];
        for i in 0..3 {
            for j in 0..3 {
                sq[i + j] += b[i] * b[j];
            }
        }
        let mut out = [0i64; 7];
        for i in 0..5 {
            for j in 0..3 {
                out[i + j] += sq[i] * b[j];
            }
        }
        out
    };
    let sixth: Vec<i64> = (0..7u32).map(|i| binom(6, i) * 3i64.pow(i)).collect();
    let oracle_ok = cube == [1, 15, 99, 365, 792, 960, 512] && sixth == [1, 18, 135, 540, 1215, 1458, 729];
    let t = start.elapsed();
    Outcome::new(
        ok1 && ok2 && oracle_ok && t < Duration::from_secs(30),
        format!("{d1}; {d2}; in {} (limit 30s)", secs(t)),
    )
}

fn binom(n: u32, k: u32) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Runs `cases` accepted random cases of a property with a fixed seed and
/// returns the number accepted or the failure.
fn property<S: Strategy>(strategy: S, test: impl Fn(S::Value) -> Result<bool, String>) -> Result<u32, String>
where
    S::Value: std::fmt::Debug,
{
    let config = Config { cases: 200, max_global_rejects: 200_000, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    let accepted = Cell::new(0u32);
    runner
        .run(&strategy, |v| match test(v) {
            Ok(true) => {
                accepted.set(accepted.get() + 1);
                Ok(())
            }
            Ok(false) => Err(TestCaseError::reject("precondition")),
            Err(e) => Err(TestCaseError::fail(e)),
        })
        .map_err(|e| e.to_string())?;
    Ok(accepted.get())
}

fn quartic_of(field: &Field, raw: &[u64]) -> Option<PlaneQuartic> {
    let terms = QUARTIC_MONOMIALS
        .iter()
        .zip(raw)
        .map(|(&m, &v)| (m, field.from_packed(v % field.q()).unwrap()));
    PlaneQuartic::new(TernaryForm::new(field, 4, terms).ok()?).ok()
}

fn raw(n: usize) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(any::<u64>(), n)
}

fn criterion_7() -> Outcome {
    static SMALL: [(u64, usize); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];
    let results: Vec<(&str, Result<u32, String>)> = vec![
        (
            "field axioms",
            property((prop::sample::select(&[(2u64, 1usize), (3, 2), (2, 8), (97, 3), (7, 4)][..]), raw(3)), |(pk, v)| {
                let f = make_field(pk.0, pk.1).unwrap();
                let e = |x: u64| f.from_packed(x % f.q()).unwrap();
                let (a, b, c) = (e(v[0]), e(v[1]), e(v[2]));
                let ok = f.add(a, b) == f.add(b, a)
                    && f.mul(a, b) == f.mul(b, a)
                    && f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                    && f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                    && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
                    && f.add(a, f.neg(a)) == f.zero()
                    && f.mul(a, f.one()) == a
                    && (a == f.zero() || f.mul(a, f.inv(a)) == f.one());
                ok.then_some(true).ok_or_else(|| format!("axiom fails for {a:?} {b:?} {c:?}"))
            }),
        ),
        (
            "fast count = brute on smooth quartics (q<=9, k<=2)",
            property((prop::sample::select(&SMALL[..]), raw(15), 1usize..=2), |(pk, c, k)| {
                let f = make_field(pk.0, pk.1).unwrap();
                let Some(curve) = quartic_of(&f, &c) else { return Ok(false) };
                if !curve.is_smooth() {
                    return Ok(false);
                }
                let (a, b) = (curve.count_points(k).map_err(|e| e.to_string())?, curve.count_points_bruteforce(k).map_err(|e| e.to_string())?);
                (a == b).then_some(true).ok_or_else(|| format!("{a:?} != {b:?}"))
            }),
        ),
        (
            "N <= 2q+6 for smooth non-FNC quartics, q in {3,5,7}",
            property((prop::sample::select(&[3u64, 5, 7][..]), raw(15)), |(p, c)| {
                let f = make_field(p, 1).unwrap();
                let Some(curve) = quartic_of(&f, &c) else { return Ok(false) };
                if !curve.is_smooth() || curve.is_frobenius_nonclassical() {
                    return Ok(false);
                }
                let n = curve.count_points(1).map_err(|e| e.to_string())?.n;
                (n <= sv_bound(p)).then_some(true).ok_or_else(|| format!("{n} points over F_{p}"))
            }),
        ),
        (
            "Euler relation",
            property((prop::sample::select(&SMALL[..]), raw(15)), |(pk, c)| {
                let f = make_field(pk.0, pk.1).unwrap();
                let Some(curve) = quartic_of(&f, &c) else { return Ok(false) };
                let form = curve.form();
                let mut lhs = TernaryForm::zero(&f, 4);
                for v in [Var::X, Var::Y, Var::Z] {
                    let t = TernaryForm::var(&f, v).mul(&form.partial(v)).map_err(|e| e.to_string())?;
                    lhs = lhs.add(&t).map_err(|e| e.to_string())?;
                }
                (lhs == form.scale(f.from_int(4))).then_some(true).ok_or_else(|| "mismatch".to_string())
            }),
        ),
        (
            "HLP count identity, q in {13,17,37}",
            property((prop::sample::select(&[13u64, 17, 37][..]), raw(3)), |(q, v)| {
                let f = field_of_order(q).unwrap();
                let e = |x: u64| f.from_packed(x % q).unwrap();
                match check_hlp_relation(&f, e(v[0]), e(v[1]), e(v[2])) {
                    Ok(c) if c.smooth => c.holds().then_some(true).ok_or_else(|| format!("{c:?}")),
                    Ok(_) | Err(Error::ConditionNotSquare | Error::SingularEllipticFactor | Error::LineOnCurve) => Ok(false),
                    Err(e) => Err(e.to_string()),
                }
            }),
        ),
        (
            "L-polynomial round trip, q in {3,5,7}",
            property((prop::sample::select(&[3u64, 5, 7][..]), raw(15)), |(p, c)| {
                let f = make_field(p, 1).unwrap();
                let Some(curve) = quartic_of(&f, &c) else { return Ok(false) };
                if !curve.is_smooth() {
                    return Ok(false);
                }
                let n = curve.count_series(3).map_err(|e| e.to_string())?;
                let l = l_polynomial_from_counts(p, [n[0], n[1], n[2]]).map_err(|e| e.to_string())?;
                let ok = l.weil_check() && (1..=3u32).all(|r| l.predict_count(r) == n[r as usize - 1] as i128);
                ok.then_some(true).ok_or_else(|| format!("{:?} from {n:?}", l.b))
            }),
        ),
    ];
    let pass = results.iter().all(|(_, r)| matches!(r, Ok(n) if *n >= 200));
    let detail = results
        .iter()
        .map(|(name, r)| match r {
            Ok(n) => format!("{name}: {n} cases"),
            Err(e) => format!("{name}: FAILED {e}"),
        })
        .collect::<Vec<_>>()
        .join("; ");
    Outcome::new(pass, detail)
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_g3"))
        .args(["zeta", "--curve", &data("D_56_79_f97.json")])
        .output()
        .expect("g3 runs");
    let t = start.elapsed();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    let ok = out.status.success() && v["results"]["counts"][0] == 155 && v["results"]["weil_check"] == true;
    Outcome::new(
        ok && t < Duration::from_secs(60),
        format!("D_56_79 over F_97: counts {}, weil {} in {} (limit 60s)", v["results"]["counts"], v["results"]["weil_check"], secs(t)),
    )
}

fn main() {
    // libtest flags such as --nocapture or a name filter are accepted and ignored
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let scan_start = Instant::now();
    let scan = scan_f2();
    let scan_time = scan_start.elapsed();
    let outcomes = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(&scan, scan_time),
        criterion_5(&scan),
        criterion_6(),
        criterion_7(),
        criterion_8(),
    ];
    let mut unexpected = 0;
    for (i, o) in outcomes.iter().enumerate() {
        let n = i as u32 + 1;
        println!("criterion {n}: {} | {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        if o.pass {
            continue;
        }
        let explained = !o.failed_items.is_empty()
            && o.failed_items
                .iter()
                .all(|(item, got)| DOCUMENTED.contains(&(n, item.as_str(), *got)));
        if explained {
            println!("  documented: the printed equation passes through (1:1:1), so the curve has 1 point over F_2, not 0");
        } else {
            unexpected += 1;
        }
    }
    let passed = outcomes.iter().filter(|o| o.pass).count();
    println!("acceptance: {passed}/8 PASS, {} FAIL ({unexpected} unexpected)", 8 - passed);
    if unexpected > 0 {
        std::process::exit(1);
    }
}
