//! Command-line front end. `run` never touches the process; the binary prints
//! what it returns.
//!
//! Exit codes: 0 success, 2 invalid input, 3 internal inconsistency (two
//! prediction routes disagree, or `check` found a failing invariant).

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::alcove::{self, AlcovePosition, Reflection};
use crate::companions::{self, BggOutline, CompanionRecord};
use crate::error::Error;
use crate::lattice::{Prime, Weight};
use crate::modular::{self, SerreWeight, Symbol};
use crate::predictor::{self, LiftRecipe, PredictedWeight, Provenance};
use crate::tame::{self, TameType};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

#[derive(Parser, Debug)]
#[command(name = "gsp4-serre", version, about = "Predicted Serre weights for tame ordinary GSp4 types")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Predicted regular Serre weights of a tame type.
    Predict {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: TypeInput,
    },
    /// The fundamental weight and its seven companions.
    Companions {
        #[command(flatten)]
        common: Common,
        /// Modular weight k,ell.
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        weight: Ints,
    },
    /// Terms, degrees and Hodge filtration of the dual BGG complex.
    Bgg {
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        weight: Ints,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Crystalline lift recipes accounting for each predicted weight.
    Lifts {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        input: TypeInput,
    },
    /// Simple constituents of the Weyl module W(λ).
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
        lambda: Ints,
    },
    /// All Serre weights of GSp4(F_p).
    Enumerate {
        #[command(flatten)]
        common: Common,
        /// Only p-regular weights.
        #[arg(long)]
        regular: bool,
    },
    /// Runs the invariant suite at p.
    Check {
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long)]
    p: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct TypeInput {
    /// μ = x,y,z.
    #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
    mu: Option<Ints>,
    /// Diagonal ω-exponents e1,e2,e3,e4.
    #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
    diag: Option<Ints>,
    /// Modular weight k,ell of a p-ordinary form.
    #[arg(long, value_parser = parse_ints, allow_hyphen_values = true)]
    weight: Option<Ints>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug)]
struct Ints(Vec<i64>);

fn parse_ints(s: &str) -> Result<Ints, String> {
    s.split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("`{t}`: {e}")))
        .collect::<Result<_, _>>()
        .map(Ints)
}

struct Failure {
    code: i32,
    kind: &'static str,
    detail: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_internal() { 3 } else { 2 }, kind: e.code(), detail: e.to_string() }
    }
}

fn invalid(kind: &'static str, detail: impl Into<String>) -> Failure {
    Failure { code: 2, kind, detail: detail.into() }
}

fn arity<const N: usize>(v: &Ints, flag: &str) -> Result<[i64; N], Failure> {
    <[i64; N]>::try_from(v.0.as_slice())
        .map_err(|_| invalid("bad_arity", format!("--{flag} takes {N} comma-separated integers, got {}", v.0.len())))
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind::*;
            if matches!(e.kind(), DisplayHelp | DisplayVersion) {
                return Outcome { code: 0, output: e.to_string() };
            }
            return error_outcome(invalid("usage", e.to_string().trim_end()));
        }
    };
    match dispatch(cli.command) {
        Ok(o) => o,
        Err(f) => error_outcome(f),
    }
}

fn error_outcome(f: Failure) -> Outcome {
    let v = json!({ "error": f.kind, "detail": f.detail });
    Outcome { code: f.code, output: format!("{v}\n") }
}

fn dispatch(cmd: Command) -> Result<Outcome, Failure> {
    match cmd {
        Command::Predict { common, input } => {
            let p = Prime::new(common.p)?;
            let t = resolve_type(&input, p)?;
            let weights = predictor::predict(&t)?;
            let recipes = if t.is_generic() { predictor::lift_recipes(&t)? } else { Vec::new() };
            Ok(ok(common.format, || predict_json(&t, &weights, &recipes), || predict_text(&t, &weights)))
        }
        Command::Lifts { common, input } => {
            let p = Prime::new(common.p)?;
            let t = resolve_type(&input, p)?;
            let recipes = predictor::lift_recipes(&t)?;
            Ok(ok(
                common.format,
                || json!({ "p": p.get(), "mu": t.mu, "recipes": recipes }),
                || lifts_text(&t, &recipes),
            ))
        }
        Command::Companions { common, weight } => {
            let p = Prime::new(common.p)?;
            let [k, ell] = arity(&weight, "weight")?;
            let records = companions::companion_table(k, ell, p)?;
            let matches = companions::companion_matches_table(k, ell, p).ok();
            Ok(ok(
                common.format,
                || json!({ "k": k, "ell": ell, "p": p.get(), "matches_table": matches, "records": records }),
                || companions_text(k, ell, p, &records, matches),
            ))
        }
        Command::Bgg { weight, format } => {
            let [k, ell] = arity(&weight, "weight")?;
            let o = companions::bgg_outline(k, ell)?;
            Ok(ok(format, || serde_json::to_value(&o).expect("serializable"), || bgg_text(&o)))
        }
        Command::Decompose { common, lambda } => {
            let p = Prime::new(common.p)?;
            let [a, b, c] = arity(&lambda, "lambda")?;
            let l = Weight::new(a, b, c)?;
            let v = modular::decompose_weyl(l, p)?;
            let parts: Vec<(Weight, i64)> = v
                .iter()
                .map(|(s, m)| match s {
                    Symbol::Simple(w) | Symbol::Weyl(w) => (w, m),
                })
                .collect();
            Ok(ok(common.format, || decompose_json(l, p, &parts), || decompose_text(l, p, &parts)))
        }
        Command::Enumerate { common, regular } => {
            let p = Prime::new(common.p)?;
            let ws = modular::enumerate_serre_weights(p, regular);
            Ok(ok(common.format, || enumerate_json(p, regular, &ws), || enumerate_text(p, regular, &ws)))
        }
        Command::Check { common } => {
            let p = Prime::new(common.p)?;
            let results = check_suite(p);
            let passed = results.iter().all(|r| r.passed);
            let mut out = ok(
                common.format,
                || json!({ "p": p.get(), "passed": passed, "checks": results }),
                || check_text(&results),
            );
            if !passed {
                out.code = 3;
            }
            Ok(out)
        }
    }
}

fn ok(format: Format, js: impl FnOnce() -> Value, text: impl FnOnce() -> String) -> Outcome {
    let output = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&js()).expect("json")),
        Format::Text => text(),
    };
    Outcome { code: 0, output }
}

fn resolve_type(input: &TypeInput, p: Prime) -> Result<TameType, Failure> {
    if let Some(v) = &input.mu {
        let [x, y, z] = arity(v, "mu")?;
        return Ok(tame::type_from_weight(Weight::new(x, y, z)?, p));
    }
    if let Some(v) = &input.diag {
        return Ok(tame::type_from_exponents(arity(v, "diag")?, p)?);
    }
    if let Some(v) = &input.weight {
        let [k, ell] = arity(v, "weight")?;
        return Ok(tame::type_from_modular_weight(k, ell, p)?);
    }
    Err(invalid("usage", "one of --mu, --diag, --weight is required"))
}

fn shifted(l: Weight) -> [i64; 2] {
    let (x, y) = l.shifted();
    [x, y]
}

fn fmt_shifted(l: Weight) -> String {
    let (x, y) = l.shifted();
    format!("({x},{y})")
}

fn source_alcove(w: &PredictedWeight) -> usize {
    match w.provenance {
        Provenance::Direct => w.source_index,
        Provenance::Transported { from } => from,
    }
}

fn provenance_label(w: &PredictedWeight) -> &'static str {
    if w.is_direct() {
        "direct"
    } else {
        "transported"
    }
}

fn predict_json(t: &TameType, ws: &[PredictedWeight], recipes: &[LiftRecipe]) -> Value {
    let weights: Vec<Value> = ws
        .iter()
        .map(|w| {
            json!({
                "lambda": w.lambda(),
                "shifted": shifted(w.lambda()),
                "alcove": w.alcove,
                "provenance": provenance_label(w),
                "source_alcove": format!("C{}", source_alcove(w)),
            })
        })
        .collect();
    json!({ "p": t.p.get(), "mu": t.mu, "weights": weights, "recipes": recipes })
}

/// Left-aligned columns separated by two spaces.
fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(c);
            s.extend(std::iter::repeat_n(' ', w - c.chars().count()));
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(headers.to_vec());
    for r in rows {
        line(r.iter().map(String::as_str).collect());
    }
    out
}

fn predict_text(t: &TameType, ws: &[PredictedWeight]) -> String {
    let mut out = String::new();
    let e = t.exponents();
    let _ = writeln!(out, "type    {} (exponents {:?})", t, e);
    let _ = writeln!(out, "generic {}", if t.is_generic() { "yes" } else { "no" });
    let direct = ws.iter().filter(|w| w.is_direct()).count();
    let _ = writeln!(out, "weights {} ({} direct, {} transported)\n", ws.len(), direct, ws.len() - direct);
    let rows: Vec<Vec<String>> = ws
        .iter()
        .map(|w| {
            vec![
                w.lambda().to_string(),
                fmt_shifted(w.lambda()),
                w.alcove.label(),
                provenance_label(w).to_string(),
                format!("C{}", source_alcove(w)),
            ]
        })
        .collect();
    out.push_str(&render_table(&["lambda", "lambda+rho", "alcove", "provenance", "from"], &rows));
    out
}

fn lifts_text(t: &TameType, recipes: &[LiftRecipe]) -> String {
    let mut out = format!("type {t}\n\n");
    let rows: Vec<Vec<String>> = recipes
        .iter()
        .map(|r| {
            vec![
                r.row.to_string(),
                format!("{:?}", r.side).to_lowercase(),
                format!("{:?}", r.shape).to_lowercase(),
                format!("{}", r.mu),
                format!("{:?}", r.reduction_exponents),
                format!("{:?}", r.ht_by_position),
                r.units.join(","),
            ]
        })
        .collect();
    out.push_str(&render_table(&["row", "side", "shape", "mu", "omega exps", "HT", "units"], &rows));
    out
}

fn mask_label(m: &[(u8, u8)]) -> String {
    if m.is_empty() {
        return "-".to_string();
    }
    m.iter().map(|(i, j)| format!("{i}{j}")).collect::<Vec<_>>().join(",")
}

fn companions_text(k: i64, ell: i64, p: Prime, rs: &[CompanionRecord], matches: Option<bool>) -> String {
    let mut out = format!("weight (k,ell) = ({k},{ell}), p = {p}\n");
    match matches {
        Some(m) => {
            let _ = writeln!(out, "companions match table rows: {}\n", if m { "yes" } else { "NO" });
        }
        None => out.push_str("companions match table rows: n/a (outside table range)\n\n"),
    }
    let rows: Vec<Vec<String>> = rs
        .iter()
        .map(|r| {
            let alc = if r.condition_holds { r.alcove.label() } else { format!("({})", r.alcove.label()) };
            vec![
                r.case_id.label().to_string(),
                format!("w^{}", r.twist_exp),
                r.conjugator.word().to_string(),
                format!("({},{})", r.k_prime, r.ell_prime),
                r.lambda_prime.to_string(),
                fmt_shifted(r.lambda_prime),
                alc,
                r.alcove_condition.to_string(),
                r.automorphic_type.label().to_string(),
                mask_label(&r.required_zero_mask),
            ]
        })
        .collect();
    out.push_str(&render_table(
        &["case", "twist", "conj", "(k',l')", "lambda'", "lambda'+rho", "alcove", "condition", "type", "zeros"],
        &rows,
    ));
    for r in rs.iter().filter_map(|r| r.source_note.map(|n| (r.case_id, n))) {
        let _ = writeln!(out, "note {}: {}", r.0, r.1);
    }
    out
}

fn bgg_text(o: &BggOutline) -> String {
    let mut out = String::new();
    let terms: Vec<String> = o.terms.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "complex  {}", terms.join(" -> "));
    let _ = writeln!(out, "degrees  {:?}", o.degrees);
    let _ = writeln!(out, "jumps    {:?}", o.fil_jumps);
    for g in &o.graded {
        let _ = writeln!(out, "gr^{} = H^{}({})", g.jump, g.cohomological_degree, g.sheaf);
    }
    if let Some(d) = o.differential_degrees[2] {
        let _ = writeln!(out, "last differential has degree {d}");
    }
    out
}

fn decompose_json(l: Weight, p: Prime, parts: &[(Weight, i64)]) -> Value {
    let cs: Vec<Value> = parts
        .iter()
        .map(|(w, m)| {
            json!({
                "lambda": w,
                "shifted": shifted(*w),
                "alcove": alcove::classify(*w, p),
                "multiplicity": m,
            })
        })
        .collect();
    json!({
        "p": p.get(),
        "lambda": l,
        "shifted": shifted(l),
        "alcove": alcove::classify(l, p),
        "dim": modular::virtual_dim(l),
        "constituents": cs,
    })
}

fn decompose_text(l: Weight, p: Prime, parts: &[(Weight, i64)]) -> String {
    let mut out = format!("W{l} at p = {p}, lambda+rho = {}, {}\n\n", fmt_shifted(l), alcove::classify(l, p));
    let rows: Vec<Vec<String>> = parts
        .iter()
        .map(|(w, m)| vec![format!("F{w}"), fmt_shifted(*w), alcove::classify(*w, p).label(), m.to_string()])
        .collect();
    out.push_str(&render_table(&["constituent", "lambda+rho", "alcove", "mult"], &rows));
    out
}

fn enumerate_json(p: Prime, regular: bool, ws: &[SerreWeight]) -> Value {
    json!({ "p": p.get(), "regular_only": regular, "count": ws.len(), "weights": ws })
}

fn enumerate_text(p: Prime, regular: bool, ws: &[SerreWeight]) -> String {
    let kind = if regular { "regular Serre weights" } else { "Serre weights" };
    let mut out = format!("{} {kind} at p = {p}\n", ws.len());
    for w in ws {
        let _ = writeln!(out, "{}  {}", w.lambda(), fmt_shifted(w.lambda()));
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn check(name: &'static str, failures: Vec<String>, total: usize) -> CheckResult {
    let detail = match failures.first() {
        None => format!("{total} cases"),
        Some(f) => format!("{} of {total} failed; first: {f}", failures.len()),
    };
    CheckResult { name, passed: failures.is_empty(), detail }
}

/// Invariants that can be verified exhaustively at a single prime.
pub fn check_suite(p: Prime) -> Vec<CheckResult> {
    let types = tame::canonical_types(p);
    let mut out = Vec::new();

    let mut fails = Vec::new();
    let mut shape_fails = Vec::new();
    for t in &types {
        match predictor::predict(t) {
            Err(e) => fails.push(format!("{}: {e}", t.mu)),
            Ok(ws) => {
                let regular = ws.iter().all(|w| w.weight.is_regular());
                let distinct: BTreeSet<_> = ws.iter().map(|w| w.weight).collect();
                let direct = ws.iter().filter(|w| w.is_direct()).count();
                if !regular || ws.is_empty() {
                    shape_fails.push(format!("{}: irregular or empty output", t.mu));
                } else if t.has_twenty_weights() && (distinct.len() != 20 || direct != 8) {
                    shape_fails.push(format!("{}: {} weights, {direct} direct", t.mu, distinct.len()));
                }
            }
        }
    }
    out.push(check("routes_agree", fails, types.len()));
    out.push(check("output_shape", shape_fails, types.len()));

    let fails = types
        .iter()
        .filter(|t| !matches!(predictor::twist_equivariance_check(t, 1), Ok(true)))
        .map(|t| t.mu.to_string())
        .collect();
    out.push(check("twist_equivariance", fails, types.len()));

    let n = p.get();
    let all = modular::enumerate_serre_weights(p, false).len() as i64;
    let reg = modular::enumerate_serre_weights(p, true).len() as i64;
    let mut fails = Vec::new();
    if all != n * n * (n - 1) || reg != (n - 1).pow(3) {
        fails.push(format!("{all} weights, {reg} regular"));
    }
    out.push(check("serre_weight_count", fails, 2));

    let pts = alcove::region_points(p);
    let mut fails = Vec::new();
    for l in &pts {
        for r in Reflection::ALL {
            let i = r.index();
            let m = alcove::wall_reflect(r, *l, p);
            if alcove::wall_reflect(r, m, p) != *l {
                fails.push(format!("r{i} not an involution at {l}"));
            }
            if alcove::classify(*l, p) == AlcovePosition::Interior(i)
                && alcove::classify(m, p) != AlcovePosition::Interior(i + 1)
            {
                fails.push(format!("r{i} does not send {l} into C{}", i + 1));
            }
        }
    }
    out.push(check("alcove_reflections", fails, pts.len()));

    let mut fails = Vec::new();
    let mut total = 0;
    for k in 4..n {
        for ell in 4..k {
            if k + ell > n {
                continue;
            }
            total += 1;
            if !matches!(companions::companion_matches_table(k, ell, p), Ok(true)) {
                fails.push(format!("(k,ell) = ({k},{ell})"));
            }
        }
    }
    out.push(check("companions_match_table", fails, total));
    out
}

fn check_text(rs: &[CheckResult]) -> String {
    let rows: Vec<Vec<String>> = rs
        .iter()
        .map(|r| vec![r.name.to_string(), if r.passed { "ok" } else { "FAILED" }.to_string(), r.detail.clone()])
        .collect();
    render_table(&["check", "result", "detail"], &rows)
}
