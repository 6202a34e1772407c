//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings or integers and returns a JSON string,
//! either a result object or `{"error": "..."}`, so the page needs no glue
//! beyond `JSON.parse` and the same functions can be tested natively.

use std::collections::BTreeMap;

use jwverma::intertwiners::{check_intertwiner, e_family, f_family};
use jwverma::projectors::{extended_jw, jw, verify_idempotent, ProjectorBlocks};
use jwverma::qfield::{Assignment, RationalFn, WeightExpr};
use jwverma::repspaces::{BlockMatrix, ModuleDesc};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

/// Keeps the page responsive; larger inputs belong on the command line.
const MAX_WEIGHTS: usize = 4;
const MAX_DEGREE: i64 = 6;
const MAX_STRANDS: u32 = 5;

#[derive(Serialize)]
struct Matrix {
    degree: i64,
    /// Basis vectors rendered like `v1 (x) v0`.
    basis: Vec<String>,
    /// Dense rows of rendered entries.
    rows: Vec<Vec<String>>,
    trace: String,
}

#[derive(Serialize)]
struct ProjectorView {
    factors: Vec<String>,
    legend: Vec<String>,
    provenance: Vec<String>,
    idempotent: bool,
    blocks: Vec<Matrix>,
}

#[derive(Serialize)]
struct CheckLine {
    name: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn to_json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&Failure { error }),
    }
    .expect("views always serialize")
}

fn parse_weights(text: &str) -> Result<Vec<String>, String> {
    let names: Vec<String> = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(String::from)
        .collect();
    if names.len() < 2 || names.len() > MAX_WEIGHTS {
        return Err(format!("give between 2 and {MAX_WEIGHTS} weight names"));
    }
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(format!("weight {n} is repeated"));
        }
        if !n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') || n == "q" {
            return Err(format!("{n:?} is not a usable name"));
        }
    }
    Ok(names)
}

fn parse_at(text: &str, names: &[String]) -> Result<Assignment, String> {
    let mut out = BTreeMap::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) = item
            .split_once('=')
            .ok_or_else(|| format!("expected name=integer, got {item:?}"))?;
        let j = names
            .iter()
            .position(|n| n == name.trim())
            .ok_or_else(|| format!("unknown weight {name:?}"))?;
        let v: i64 = value
            .trim()
            .parse()
            .map_err(|_| format!("{value:?} is not an integer"))?;
        out.insert(j, v);
    }
    Ok(out)
}

fn check_degree(degree: i32) -> Result<i64, String> {
    let d = i64::from(degree);
    if !(0..=MAX_DEGREE).contains(&d) {
        return Err(format!("degree must be between 0 and {MAX_DEGREE}"));
    }
    Ok(d)
}

fn render_block(b: &BlockMatrix) -> Matrix {
    let basis = b
        .src()
        .vectors()
        .iter()
        .map(|v| {
            v.iter()
                .map(|i| format!("v{i}"))
                .collect::<Vec<_>>()
                .join(" (x) ")
        })
        .collect();
    let rows = (0..b.rows())
        .map(|r| (0..b.cols()).map(|c| b.entry(r, c).to_string()).collect())
        .collect();
    Matrix {
        degree: b.src().degree(),
        basis,
        rows,
        trace: b.trace().to_string(),
    }
}

fn legend(names: &[String]) -> Vec<String> {
    names
        .iter()
        .enumerate()
        .map(|(j, n)| format!("t{} = q^{n}", j + 1))
        .collect()
}

fn view(
    p: &ProjectorBlocks,
    factors: Vec<String>,
    names: &[String],
    degrees: &[i64],
) -> Result<ProjectorView, String> {
    let blocks = degrees
        .iter()
        .map(|&k| p.block(k).map(render_block).map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    Ok(ProjectorView {
        factors,
        legend: legend(names),
        provenance: p.provenance().explain_with(names),
        idempotent: verify_idempotent(p).is_empty(),
        blocks,
    })
}

fn projector_view(weights: &str, degree: i32, at: &str) -> Result<ProjectorView, String> {
    let names = parse_weights(weights)?;
    let d = check_degree(degree)?;
    let assignment = parse_at(at, &names)?;
    let ws: Vec<WeightExpr> = (0..names.len()).map(WeightExpr::symbol).collect();
    let mut p = extended_jw(&ws, d).map_err(|e| e.to_string())?;
    if !assignment.is_empty() {
        p = p.specialize(&assignment).map_err(|e| e.to_string())?;
    }
    let factors = names.iter().map(|n| format!("M({n})")).collect();
    view(&p, factors, &names, &[d])
}

/// The degree-`degree` block of the extended projector on
/// `M(w_1) (x) .. (x) M(w_n)`, optionally specialized with `at` written
/// like `mu1=-2,mu2=-3`.
#[wasm_bindgen]
pub fn projector_block(weights: &str, degree: i32, at: &str) -> String {
    to_json(projector_view(weights, degree, at))
}

/// Every block of the classical projector on `n` strands.
#[wasm_bindgen]
pub fn classical_projector(n: u32) -> String {
    to_json((|| {
        if n == 0 || n > MAX_STRANDS {
            return Err(format!("strands must be between 1 and {MAX_STRANDS}"));
        }
        let p = jw(n as usize).map_err(|e| e.to_string())?;
        let degrees: Vec<i64> = (0..=i64::from(n)).collect();
        view(&p, vec!["V_1".to_string(); n as usize], &[], &degrees)
    })())
}

fn check_lines(weights: &str, degree: i32) -> Result<Vec<CheckLine>, String> {
    let names = parse_weights(weights)?;
    let d = check_degree(degree)?;
    let ws: Vec<WeightExpr> = (0..names.len()).map(WeightExpr::symbol).collect();
    let (mu, lambda) = (&ws[0], &ws[1]);
    let line = |name: &str, failures: usize| CheckLine {
        name: name.to_string(),
        passed: failures == 0,
        detail: if failures == 0 {
            format!("holds through degree {d}")
        } else {
            format!("{failures} failing entries")
        },
    };
    let e = e_family(mu, lambda, d);
    let f = f_family(mu, lambda, d);
    let ef = e.compose(&f).map_err(|e| e.to_string())?;
    let ef_bad: usize = ef
        .blocks()
        .map(|(_, b)| {
            b.differences(&BlockMatrix::identity(b.src().clone()))
                .map_or(1, |v| v.len())
        })
        .sum();
    let p = extended_jw(&ws, d).map_err(|e| e.to_string())?;
    let trace_bad = p
        .traces()
        .iter()
        .filter(|(_, t)| *t != RationalFn::one())
        .count();
    let pair = describe(
        &[
            ModuleDesc::Verma(mu.clone()),
            ModuleDesc::Verma(lambda.clone()),
        ],
        &names,
    );
    Ok(vec![
        line(&format!("E F = Id on {pair}"), ef_bad),
        line("E intertwines", check_intertwiner(&e, d).len()),
        line("F intertwines", check_intertwiner(&f, d).len()),
        line("P^2 = P", verify_idempotent(&p).len()),
        line("every block of P has trace 1", trace_bad),
        line(
            "P intertwines",
            check_intertwiner(p.as_intertwiner(), d).len(),
        ),
    ])
}

fn describe(factors: &[ModuleDesc], names: &[String]) -> String {
    factors
        .iter()
        .map(|f| match f {
            ModuleDesc::Verma(w) => format!("M({})", w.display_with(names)),
            other => other.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" (x) ")
}

/// Runs the exact identity checks for the given weights through `degree`
/// and returns one line per check.
#[wasm_bindgen]
pub fn run_checks(weights: &str, degree: i32) -> String {
    to_json(check_lines(weights, degree))
}
