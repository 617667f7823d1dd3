//! The `g3` command line: argument parsing, dispatch and JSON reports.

pub mod bundle;
pub mod curve_file;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use g3_core::algebra::{FieldElem, DEFAULT_SEED};
use g3_core::bounds::{best_upper_bound, known_table};
use g3_core::curves::{derive_f2_fnc_quartic, frobenius_form, hv_count, q8_form, sv_bound};
use g3_core::families::{family_curve, field_of_order, search_family, smooth_substitutes, witnesses, Family};
use g3_core::zeta::l_polynomial_from_counts;
use g3_core::{Error, PlaneQuartic};
use serde_json::{json, Value};

use curve_file::{Curve, CurveFile};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INCONSISTENT: i32 = 2;

/// Prime powers whose maximal curves are only given by outside references.
pub const EXTERNAL_REFERENCE: [u64; 4] = [27, 32, 64, 81];
/// Prime powers with no known explicit maximal curve in the bundled set.
pub const OPEN: [u64; 1] = [47];

#[derive(Parser, Debug)]
#[command(name = "g3", version, about = "Genus-3 curves over small finite fields")]
pub struct Cli {
    /// Seed for randomized root finding and coordinate changes.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count rational points over the degree-K extension.
    Count {
        #[arg(long)]
        curve: PathBuf,
        #[arg(long, default_value_t = 1)]
        ext: usize,
        /// Use the projective enumeration instead of fiber root counting.
        #[arg(long)]
        brute: bool,
    },
    /// Decide smoothness over the algebraic closure.
    Smooth {
        #[arg(long)]
        curve: PathBuf,
    },
    /// Frobenius non-classicality of a plane quartic.
    Fnc {
        #[arg(long)]
        curve: PathBuf,
    },
    /// Counts over the first three extensions and the L-polynomial.
    Zeta {
        #[arg(long)]
        curve: PathBuf,
    },
    /// Upper bound for N_q(3).
    Bound {
        #[arg(long)]
        q: u64,
    },
    /// The table of N_q(3) for prime powers q < 100.
    Table {
        /// Recount every explicit maximal curve.
        #[arg(long)]
        verify: bool,
    },
    /// One member of a named family.
    Family {
        #[arg(long)]
        name: String,
        #[arg(long)]
        q: u64,
        /// Comma-separated integers, e.g. -7,8.
        #[arg(long, allow_hyphen_values = true)]
        params: String,
        #[arg(long)]
        count: bool,
    },
    /// Sweep a family for members with a given number of points.
    Search {
        #[arg(long)]
        name: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        target: Option<u64>,
        /// Maximum number of parameter tuples to examine.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Rebuild the F_2 Frobenius non-classical quartic from its determinant.
    DeriveFncF2,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Core(Error),
    Verification(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INVALID,
            CliError::Verification(_) => EXIT_INCONSISTENT,
            CliError::Core(Error::InconsistentCounts(_) | Error::InternalInconsistency(_)) => {
                EXIT_INCONSISTENT
            }
            CliError::Core(_) => EXIT_INVALID,
        }
    }

    fn kind(&self) -> String {
        match self {
            CliError::Input(_) => "InvalidInput".into(),
            CliError::Verification(_) => "VerificationFailed".into(),
            CliError::Core(e) => format!("{e:?}")
                .split(['(', ' ', '{'])
                .next()
                .unwrap_or("Error")
                .to_string(),
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Input(m) | CliError::Verification(m) => m.clone(),
            CliError::Core(e) => e.to_string(),
        }
    }
}

/// Result of one invocation: exit code, standard output, standard error.
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_INVALID,
            };
            return if code == EXIT_OK {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let name = command_name(&cli.command);
    let (code, report) = match dispatch(&cli) {
        Ok(report) => (EXIT_OK, report),
        Err(e) => (
            e.exit_code(),
            json!({
                "command": name,
                "error": { "kind": e.kind(), "message": e.message() },
            }),
        ),
    };
    let stdout = serde_json::to_string_pretty(&report).expect("report serializes") + "\n";
    Outcome { code, stdout, stderr: String::new() }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Count { .. } => "count",
        Command::Smooth { .. } => "smooth",
        Command::Fnc { .. } => "fnc",
        Command::Zeta { .. } => "zeta",
        Command::Bound { .. } => "bound",
        Command::Table { .. } => "table",
        Command::Family { .. } => "family",
        Command::Search { .. } => "search",
        Command::DeriveFncF2 => "derive-fnc-f2",
    }
}

fn report(command: &str, inputs: Value, results: Value, diagnostics: Vec<String>) -> Value {
    json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "diagnostics": diagnostics,
    })
}

fn load(path: &PathBuf) -> Result<Curve, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    CurveFile::parse(&text)
        .and_then(|f| f.to_curve())
        .map_err(CliError::Input)
}

fn quartic_only(curve: Curve) -> Result<PlaneQuartic, CliError> {
    match curve {
        Curve::Quartic(c) => Ok(c),
        Curve::Hyperelliptic(_) => Err(CliError::Input("command needs a plane quartic".into())),
    }
}

fn field_json(curve: &Curve) -> Value {
    let f = curve.field();
    json!({ "p": f.p(), "k": f.k(), "q": f.q(), "modulus": f.modulus() })
}

fn parse_params(s: &str) -> Result<Vec<i64>, CliError> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| CliError::Input(format!("parameter {t:?} is not an integer")))
        })
        .collect()
}

fn packed(v: &[FieldElem]) -> Vec<u64> {
    v.iter().map(|e| e.packed()).collect()
}

fn dispatch(cli: &Cli) -> Result<Value, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Count { curve, ext, brute } => {
            if *ext == 0 {
                return Err(CliError::Input("--ext must be at least 1".into()));
            }
            let c = load(curve)?;
            let n = match (&c, brute) {
                (Curve::Quartic(q), false) => q.count_points(*ext)?,
                (Curve::Quartic(q), true) => q.count_points_bruteforce(*ext)?,
                (Curve::Hyperelliptic(h), false) => h.count_points(*ext)?,
                (Curve::Hyperelliptic(h), true) => h.count_points_bruteforce(*ext)?,
            };
            let q = c.field().q();
            Ok(report(
                "count",
                json!({ "curve": curve, "ext": ext, "brute": brute, "field": field_json(&c) }),
                json!({ "N": n.n, "k": n.k, "field_order": q.pow(*ext as u32) }),
                vec![],
            ))
        }
        Command::Smooth { curve } => {
            let c = load(curve)?;
            let (results, diags) = match &c {
                Curve::Quartic(q) => {
                    let s = q.smoothness(seed);
                    let diags = s.diagnostic.clone().into_iter().collect();
                    (json!({ "smooth": s.smooth, "attempts": s.attempts, "model": "quartic" }), diags)
                }
                // a file that parses as hyperelliptic has passed the genus-3 validation
                Curve::Hyperelliptic(_) => (json!({ "smooth": true, "model": "hyperelliptic" }), vec![]),
            };
            Ok(report("smooth", json!({ "curve": curve, "seed": seed, "field": field_json(&c) }), results, diags))
        }
        Command::Fnc { curve } => {
            let c = load(curve)?;
            let inputs = json!({ "curve": curve, "field": field_json(&c) });
            let c = quartic_only(c)?;
            let q = c.q();
            let fnc = c.is_frobenius_nonclassical();
            let mut diags = Vec::new();
            let n = match c.count_points(1) {
                Ok(n) => Some(n.n),
                Err(e) => {
                    diags.push(format!("count unavailable: {e}"));
                    None
                }
            };
            Ok(report(
                "fnc",
                inputs,
                json!({
                    "frobenius_nonclassical": fnc,
                    "frobenius_form_degree": frobenius_form(&c).degree(),
                    "hv_count": hv_count(4, q as i64),
                    "sv_bound": sv_bound(q),
                    "N": n,
                }),
                diags,
            ))
        }
        Command::Zeta { curve } => {
            let c = load(curve)?;
            let q = c.field().q();
            let counts: Vec<u64> = (1..=3)
                .map(|k| match &c {
                    Curve::Quartic(x) => x.count_points(k).map(|n| n.n),
                    Curve::Hyperelliptic(h) => h.count_points(k).map(|n| n.n),
                })
                .collect::<Result<_, _>>()?;
            let l = l_polynomial_from_counts(q, [counts[0], counts[1], counts[2]])?;
            let deviation: f64 = format!("{:.8e}", l.modulus_deviation()).parse().unwrap_or(f64::NAN);
            Ok(report(
                "zeta",
                json!({ "curve": curve, "field": field_json(&c) }),
                json!({
                    "counts": counts,
                    "L": l.b,
                    "weil_check": l.weil_check(),
                    "jacobian_order": l.jacobian_order(),
                    "predicted_counts": (1..=6).map(|r| l.predict_count(r) as i64).collect::<Vec<_>>(),
                    "root_modulus_deviation": deviation,
                }),
                vec![],
            ))
        }
        Command::Bound { q } => {
            let r = best_upper_bound(*q)?;
            let items: serde_json::Map<String, Value> =
                r.items.iter().map(|i| (i.label.to_string(), json!(i.bound))).collect();
            let mut diags = Vec::new();
            if let (Some(raw), None) = (r.lemma_unguarded, r.lemma_bound) {
                diags.push(format!(
                    "lemma not applied: q = {q} is a square or 8 (unguarded value {raw})"
                ));
            }
            Ok(report(
                "bound",
                json!({ "q": q }),
                json!({
                    "q": r.q,
                    "m": r.m,
                    "items": items,
                    "lemma_bound": r.lemma_bound,
                    "lemma_unguarded": r.lemma_unguarded,
                    "best": r.best,
                    "achieved_by": r.achieved_by,
                    "known": r.known,
                }),
                diags,
            ))
        }
        Command::Table { verify } => table(*verify),
        Command::Family { name, q, params, count } => {
            let family: Family = name.parse()?;
            let field = field_of_order(*q)?;
            let ps: Vec<FieldElem> = parse_params(params)?.iter().map(|&v| field.from_int(v)).collect();
            let c = family_curve(family, &field, &ps)?;
            let smooth = c.smoothness(seed);
            let mut results = json!({
                "form": c.form().to_string(),
                "params": packed(&ps),
                "smooth": smooth.smooth,
            });
            if *count {
                results["N"] = json!(c.count_points(1)?.n);
            }
            Ok(report(
                "family",
                json!({ "name": family.name(), "q": q, "params": params }),
                results,
                smooth.diagnostic.into_iter().collect(),
            ))
        }
        Command::Search { name, q, target, budget } => {
            let family: Family = name.parse()?;
            let field = field_of_order(*q)?;
            let r = search_family(family, &field, *target, *budget)?;
            let hits: Vec<Value> = r
                .hits
                .iter()
                .map(|h| json!({ "params": packed(&h.params), "N": h.count }))
                .collect();
            let diags = if r.partial {
                vec![format!("budget exhausted after {} parameter tuples; results are partial", r.examined)]
            } else {
                vec![]
            };
            Ok(report(
                "search",
                json!({ "name": family.name(), "q": q, "target": target, "budget": budget }),
                json!({ "hits": hits, "examined": r.examined, "partial": r.partial }),
                diags,
            ))
        }
        Command::DeriveFncF2 => {
            let c = derive_f2_fnc_quartic()?;
            let canonical = q8_form(c.base())?;
            let over8 = c.base_change(3)?;
            Ok(report(
                "derive-fnc-f2",
                json!({}),
                json!({
                    "form": c.form().to_string(),
                    "num_terms": c.form().num_terms(),
                    "matches_q8": c.form() == &canonical,
                    "N_over_f8": over8.count_points(1)?.n,
                    "fnc_over_f8": over8.is_frobenius_nonclassical(),
                    "smooth": c.is_smooth(),
                }),
                vec![],
            ))
        }
    }
}

fn table(verify: bool) -> Result<Value, CliError> {
    let ws = witnesses();
    let subs = smooth_substitutes();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for &(q, known) in known_table() {
        let r = best_upper_bound(q)?;
        let mut row = json!({ "q": q, "N": known, "bound": r.best, "achieved_by": r.achieved_by });
        if r.best != known {
            failures.push(format!("q = {q}: bound {} but table value {known}", r.best));
        }
        if verify {
            let (status, witness) = if let Some(w) = ws.iter().find(|w| w.q == q) {
                let c = w.quartic()?;
                let n = c.count_points(1)?.n;
                let smooth = c.is_smooth();
                row["witness_count"] = json!(n);
                row["witness_smooth"] = json!(smooth);
                if n != w.count || n != known {
                    failures.push(format!("q = {q}: witness {} has {n} points", w.label()));
                    ("mismatch", Some(w.label()))
                } else if smooth {
                    ("paper-witness-verified", Some(w.label()))
                } else if let Some(s) = subs.iter().find(|s| s.q == q) {
                    let c = s.quartic()?;
                    let n = c.count_points(1)?.n;
                    row["substitute"] = json!(s.label());
                    row["substitute_count"] = json!(n);
                    if n != known || !c.is_smooth() {
                        failures.push(format!("q = {q}: substitute {} does not attain {known}", s.label()));
                        ("mismatch", Some(w.label()))
                    } else {
                        ("substitute-verified", Some(w.label()))
                    }
                } else {
                    failures.push(format!("q = {q}: witness {} is singular", w.label()));
                    ("mismatch", Some(w.label()))
                }
            } else if EXTERNAL_REFERENCE.contains(&q) {
                ("external-reference", None)
            } else if OPEN.contains(&q) {
                ("open", None)
            } else {
                ("serre-table", None)
            };
            row["witness_status"] = json!(status);
            row["witness"] = json!(witness);
        }
        rows.push(row);
    }
    if !failures.is_empty() {
        return Err(CliError::Verification(failures.join("; ")));
    }
    Ok(report("table", json!({ "verify": verify }), json!({ "rows": rows }), vec![]))
}
