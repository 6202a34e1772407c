//! The JSON result format.
//!
//! Polynomials are lists of `{coeff, q, t}` terms where `coeff` is an exact
//! rational written `"a"` or `"a/b"` and the monomial is
//! `q^q * t_1^t[0] * .. * t_n^t[n-1]`. Terms, entries and blocks are always
//! written in a canonical order so equal inputs give identical bytes.

use std::collections::BTreeMap;

use jwverma::qfield::{Coeff, LaurentMono, LaurentPoly, RationalFn};
use jwverma::repspaces::BlockMatrix;
use serde::{Deserialize, Serialize};

use crate::config::JobConfig;
use crate::error::{CliError, Result};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub format_version: u32,
    pub command: String,
    pub config: JobConfig,
    /// Strand count, only for `tl`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub strands: Option<usize>,
    /// `symbols[j]` names the weight `mu` with `t_{j+1} = q^mu`.
    pub symbols: Vec<String>,
    /// Tensor factors, e.g. `M(mu1)` or `V_1`.
    pub factors: Vec<String>,
    pub provenance: Vec<String>,
    pub blocks: Vec<Block>,
    pub reports: Vec<CheckReport>,
    /// Wall-clock metadata. Absent unless requested, so output stays
    /// byte-for-byte reproducible.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl ResultDocument {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(|r| r.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let doc: ResultDocument =
            serde_json::from_str(s).map_err(|e| CliError::Document(e.to_string()))?;
        if doc.format_version != FORMAT_VERSION {
            return Err(CliError::Document(format!(
                "unsupported format version {} (expected {FORMAT_VERSION})",
                doc.format_version
            )));
        }
        Ok(doc)
    }
}

/// One degree block of a matrix, rows and columns indexed by `basis`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Block {
    pub degree: i64,
    pub basis: Vec<Vec<u32>>,
    /// Non-zero entries sorted by `(row, col)`.
    pub entries: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub row: usize,
    pub col: usize,
    pub value: RationalValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalValue {
    pub num: Vec<Term>,
    pub den: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub q: i32,
    pub t: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub passed: bool,
    /// What was checked, one line per sub-check.
    pub scope: Vec<String>,
    pub violations: Vec<Violation>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>, scope: Vec<String>, violations: Vec<Violation>) -> Self {
        Self {
            check: check.into(),
            passed: violations.is_empty(),
            scope,
            violations,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub degree: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub row: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub col: Option<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub millis: u64,
}

pub fn encode_poly(p: &LaurentPoly, nsym: usize) -> Vec<Term> {
    p.terms()
        .map(|(m, c)| Term {
            coeff: c.to_string(),
            q: m.q_exp(),
            t: m.t_exps(nsym).to_vec(),
        })
        .collect()
}

pub fn decode_poly(terms: &[Term]) -> Result<LaurentPoly> {
    let mut out = Vec::with_capacity(terms.len());
    for term in terms {
        if term.t.len() > jwverma::qfield::MAX_SYMBOLS {
            return Err(CliError::Document(format!(
                "term has {} symbols",
                term.t.len()
            )));
        }
        let c: Coeff = term
            .coeff
            .parse()
            .map_err(|_| CliError::Document(format!("bad coefficient {:?}", term.coeff)))?;
        out.push((LaurentMono::new(term.q, &term.t), c));
    }
    Ok(LaurentPoly::from_terms(out))
}

pub fn encode_rational(x: &RationalFn, nsym: usize) -> RationalValue {
    RationalValue {
        num: encode_poly(&x.numerator(), nsym),
        den: encode_poly(&x.denominator(), nsym),
    }
}

pub fn decode_rational(v: &RationalValue) -> Result<RationalFn> {
    let num = decode_poly(&v.num)?;
    let den = decode_poly(&v.den)?;
    RationalFn::from_num_den(&num, &den).map_err(|e| CliError::Document(e.to_string()))
}

pub fn encode_block(m: &BlockMatrix, nsym: usize) -> Block {
    // `entries()` iterates in (row, col) order already.
    Block {
        degree: m.src().degree(),
        basis: m.src().vectors().to_vec(),
        entries: m
            .entries()
            .map(|(row, col, x)| Entry {
                row,
                col,
                value: encode_rational(x, nsym),
            })
            .collect(),
    }
}

/// Decoded entries of a block, keyed by `(row, col)`.
pub fn decode_entries(b: &Block) -> Result<BTreeMap<(usize, usize), RationalFn>> {
    let n = b.basis.len();
    let mut out = BTreeMap::new();
    for e in &b.entries {
        if e.row >= n || e.col >= n {
            return Err(CliError::Document(format!(
                "entry ({}, {}) outside a {n}x{n} block",
                e.row, e.col
            )));
        }
        out.insert((e.row, e.col), decode_rational(&e.value)?);
    }
    Ok(out)
}
