//! The four subcommands, independent of argument parsing and I/O.

use std::collections::BTreeMap;

use jwverma::intertwiners::{check_intertwiner, e_family, f_family, IntertwinerBlocks};
use jwverma::projectors::{
    extended_jw, f_oracle, jw, verify_idempotent, ProjectorBlocks, Provenance,
};
use jwverma::qfield::{qbinomial, Assignment, RationalFn};
use jwverma::repspaces::{
    check_coassociativity, check_relations, BlockMatrix, ModuleDesc, RelationViolation,
};

use crate::config::{assignment_for, Check, JobConfig};
use crate::document::{
    decode_entries, encode_block, encode_rational, Block, CheckReport, Entry, ResultDocument,
    Violation, FORMAT_VERSION,
};
use crate::error::{CliError, Result};

/// Default ceiling for `tl`; the blocks of `jw(n)` grow like `2^n`.
pub const DEFAULT_MAX_STRANDS: usize = 8;

/// Progress sink; the binary forwards it to stderr.
pub type Log<'a> = &'a dyn Fn(&str);

fn blank(command: &str, config: JobConfig) -> ResultDocument {
    ResultDocument {
        format_version: FORMAT_VERSION,
        command: command.to_string(),
        symbols: config.weights.clone(),
        factors: config.weights.iter().map(|w| format!("M({w})")).collect(),
        config,
        strands: None,
        provenance: Vec::new(),
        blocks: Vec::new(),
        reports: Vec::new(),
        timing: None,
    }
}

fn at_degree(k: i64, e: jwverma::Error) -> CliError {
    match CliError::from(e) {
        CliError::Pole(msg) => CliError::Pole(format!("degree {k}: {msg}")),
        other => other,
    }
}

fn specialize_family(fam: &IntertwinerBlocks, a: &Assignment) -> Result<IntertwinerBlocks> {
    if a.is_empty() {
        return Ok(fam.clone());
    }
    fam.specialize(a).map_err(|e| {
        // Name the first degree that hits the pole.
        fam.blocks()
            .find_map(|(k, b)| b.specialize(a).err().map(|e| at_degree(k, e)))
            .unwrap_or_else(|| e.into())
    })
}

fn specialize_projector(p: &ProjectorBlocks, a: &Assignment) -> Result<ProjectorBlocks> {
    if a.is_empty() {
        return Ok(p.clone());
    }
    p.specialize(a).map_err(|e| {
        p.blocks()
            .find_map(|(k, b)| b.specialize(a).err().map(|e| at_degree(k, e)))
            .unwrap_or_else(|| e.into())
    })
}

/// Appends `t1 = q^name` for each symbol to pole messages.
fn with_legend(e: CliError, names: &[String]) -> CliError {
    match e {
        CliError::Pole(msg) if !names.is_empty() => {
            let legend: Vec<String> = names
                .iter()
                .enumerate()
                .map(|(j, n)| format!("t{} = q^{n}", j + 1))
                .collect();
            CliError::Pole(format!("{msg} (where {})", legend.join(", ")))
        }
        other => other,
    }
}

/// Builds `P_{mu_1,..,mu_n}` through degree `D` and records every block,
/// specialized if the config asks for it.
pub fn compute(config: &JobConfig, log: Log) -> Result<ResultDocument> {
    compute_inner(config, log).map_err(|e| with_legend(e, &config.weights))
}

fn compute_inner(config: &JobConfig, log: Log) -> Result<ResultDocument> {
    config.validate()?;
    config.require_pair()?;
    let d = config.max_degree;
    log(&format!(
        "building the projector on {} factors through degree {d}",
        config.weights.len()
    ));
    let p = extended_jw(&config.weight_exprs(), d)?;
    let assignment = config.assignment();
    let p = specialize_projector(&p, &assignment)?;
    let mut doc = blank("compute", config.clone());
    doc.provenance = p.provenance().explain_with(&config.weights);
    let nsym = config.weights.len();
    doc.blocks = p.blocks().map(|(_, b)| encode_block(b, nsym)).collect();
    Ok(doc)
}

fn block_differences(
    check: &str,
    lhs: &BlockMatrix,
    rhs: &BlockMatrix,
    out: &mut Vec<Violation>,
) -> Result<()> {
    let k = lhs.src().degree();
    for (row, col) in lhs.differences(rhs)? {
        out.push(Violation {
            degree: k,
            row: Some(row),
            col: Some(col),
            detail: check.to_string(),
        });
    }
    Ok(())
}

fn relation_violations(label: &str, vs: Vec<RelationViolation>) -> Vec<Violation> {
    vs.into_iter()
        .map(|v| Violation {
            degree: v.degree,
            row: Some(v.row),
            col: Some(v.col),
            detail: format!("{label}: {} fails", v.relation),
        })
        .collect()
}

fn verma_factors(config: &JobConfig) -> Vec<ModuleDesc> {
    let a = config.assignment();
    config
        .weight_exprs()
        .into_iter()
        .map(|w| ModuleDesc::Verma(w.specialize(&a)))
        .collect()
}

fn describe(factors: &[ModuleDesc], names: &[String]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .map(|f| match f {
            ModuleDesc::Verma(w) => format!("M({})", w.display_with(names)),
            other => other.to_string(),
        })
        .collect();
    parts.join(" (x) ")
}

fn run_check(
    check: Check,
    config: &JobConfig,
    doc: &mut ResultDocument,
    log: Log,
) -> Result<CheckReport> {
    let d = config.max_degree;
    let names = &config.weights;
    let a = config.assignment();
    let ws = config.weight_exprs();
    log(&format!("running {check} through degree {d}"));
    let mut scope = Vec::new();
    let mut violations = Vec::new();
    match check {
        Check::Idempotent => {
            config.require_pair()?;
            let p = specialize_projector(&extended_jw(&ws, d)?, &a)?;
            doc.provenance = p.provenance().explain_with(names);
            scope.push(format!("P^2 = P on every block of degree 0..={d}"));
            scope.push("every block has trace 1".to_string());
            for v in verify_idempotent(&p) {
                violations.push(Violation {
                    degree: v.degree,
                    row: Some(v.row),
                    col: Some(v.col),
                    detail: "P^2 != P".to_string(),
                });
            }
            for (k, tr) in p.traces() {
                if tr != RationalFn::one() {
                    violations.push(Violation {
                        degree: k,
                        row: None,
                        col: None,
                        detail: format!("trace is {tr}, expected 1"),
                    });
                }
            }
        }
        Check::Intertwiner => {
            config.require_pair()?;
            let (mu, lambda) = (&ws[0], &ws[1]);
            let maps = [
                ("E", specialize_family(&e_family(mu, lambda, d), &a)?),
                ("F", specialize_family(&f_family(mu, lambda, d), &a)?),
                (
                    "P",
                    specialize_projector(&extended_jw(&ws, d)?, &a)?.into_intertwiner(),
                ),
            ];
            for (label, phi) in &maps {
                scope.push(format!("{label} commutes with K, E, F through degree {d}"));
                for v in check_intertwiner(phi, d) {
                    violations.push(Violation {
                        degree: v.degree,
                        row: Some(v.row),
                        col: Some(v.col),
                        detail: format!("{label}: {} does not commute", v.generator),
                    });
                }
            }
        }
        Check::EfIdentity => {
            config.require_pair()?;
            let (mu, lambda) = (&ws[0], &ws[1]);
            scope.push(format!(
                "E F = Id on M({}) through degree {d}",
                (mu + lambda).display_with(names)
            ));
            let e = specialize_family(&e_family(mu, lambda, d), &a)?;
            let f = specialize_family(&f_family(mu, lambda, d), &a)?;
            let ef = e.compose(&f)?;
            for (_, b) in ef.blocks() {
                let id = BlockMatrix::identity(b.src().clone());
                block_differences("E F != Id", b, &id, &mut violations)?;
            }
        }
        Check::Oracle => {
            config.require_pair()?;
            let (mu, lambda) = (&ws[0], &ws[1]);
            scope.push(format!(
                "F agrees with the F-action recursion through degree {d}"
            ));
            let f = specialize_family(&f_family(mu, lambda, d), &a)?;
            let g = specialize_family(&f_oracle(mu, lambda, d), &a)?;
            for ((_, fb), (_, gb)) in f.blocks().zip(g.blocks()) {
                block_differences("F differs from the oracle", fb, gb, &mut violations)?;
            }
        }
        Check::Pascal => {
            scope.push(format!(
                "[k+1, j] = q^(j-k-1) [k, j-1] + q^j [k, j] for 1 <= j <= k <= {d}"
            ));
            for k in 1..=d {
                for j in 1..=k {
                    let lhs = qbinomial(k + 1, j)?;
                    let rhs = &(&RationalFn::q_pow((j - k - 1) as i32) * &qbinomial(k, j - 1)?)
                        + &(&RationalFn::q_pow(j as i32) * &qbinomial(k, j)?);
                    if !lhs.cross_multiplied_eq(&rhs) {
                        violations.push(Violation {
                            degree: k,
                            row: None,
                            col: None,
                            detail: format!("fails at k={k}, j={j}"),
                        });
                    }
                }
            }
        }
        Check::Relations => {
            let vermas = verma_factors(config);
            let mut spaces: Vec<Vec<ModuleDesc>> = vermas.iter().map(|m| vec![m.clone()]).collect();
            spaces.push(vec![ModuleDesc::FiniteIrrep(1)]);
            if vermas.len() > 1 {
                spaces.push(vermas);
            }
            for factors in spaces {
                let label = describe(&factors, names);
                scope.push(format!("{label} through degree {d}"));
                violations.extend(relation_violations(&label, check_relations(&factors, d)));
            }
        }
        Check::Coassoc => {
            let mut factors = verma_factors(config);
            while factors.len() < 3 {
                factors.push(ModuleDesc::FiniteIrrep(1));
            }
            let label = describe(&factors, names);
            scope.push(format!("{label} through degree {d}"));
            violations.extend(relation_violations(
                &label,
                check_coassociativity(&factors, d),
            ));
        }
    }
    Ok(CheckReport::new(check.name(), scope, violations))
}

/// Runs every selected check. The document passes iff no check reports a
/// violation.
pub fn verify(config: &JobConfig, log: Log) -> Result<ResultDocument> {
    verify_inner(config, log).map_err(|e| with_legend(e, &config.weights))
}

fn verify_inner(config: &JobConfig, log: Log) -> Result<ResultDocument> {
    config.validate()?;
    if config.checks.is_empty() {
        return Err(CliError::Config("no checks selected".into()));
    }
    let mut doc = blank("verify", config.clone());
    for &check in &config.checks {
        let report = run_check(check, config, &mut doc, log)?;
        doc.reports.push(report);
    }
    Ok(doc)
}

/// The classical projector on `n` strands with its idempotence report.
pub fn tl(n: usize, max_strands: usize, log: Log) -> Result<ResultDocument> {
    if n == 0 {
        return Err(CliError::Config("need at least one strand".into()));
    }
    if n > max_strands {
        return Err(CliError::Config(format!(
            "{n} strands exceeds the limit of {max_strands} (raise it with --max-strands)"
        )));
    }
    log(&format!("building the projector on {n} strands"));
    let p = jw(n)?;
    let mut config = JobConfig::new(Vec::new(), n as i64);
    config.checks.insert(Check::Idempotent);
    let mut doc = blank("tl", config);
    doc.strands = Some(n);
    doc.factors = vec!["V_1".to_string(); n];
    doc.provenance = p.provenance().explain();
    doc.blocks = p.blocks().map(|(_, b)| encode_block(b, 0)).collect();
    let violations = verify_idempotent(&p)
        .into_iter()
        .map(|v| Violation {
            degree: v.degree,
            row: Some(v.row),
            col: Some(v.col),
            detail: "P^2 != P".to_string(),
        })
        .collect();
    doc.reports.push(CheckReport::new(
        Check::Idempotent.name(),
        vec![format!("P^2 = P on every block of V_1^(x){n}")],
        violations,
    ));
    Ok(doc)
}

/// Substitutes integer weights into every entry of a stored document.
///
/// Reports are dropped since they described the unspecialized blocks.
pub fn specialize(
    doc: &ResultDocument,
    at: &BTreeMap<String, i64>,
    log: Log,
) -> Result<ResultDocument> {
    for (name, v) in at {
        if !doc.symbols.contains(name) {
            return Err(CliError::Config(format!(
                "document has no weight named {name:?}"
            )));
        }
        if let Some(old) = doc.config.specialization.get(name) {
            if old != v {
                return Err(CliError::Config(format!(
                    "{name} is already specialized to {old}"
                )));
            }
        }
    }
    let a = assignment_for(&doc.symbols, at);
    let nsym = doc.symbols.len();
    let mut out = doc.clone();
    out.command = "specialize".to_string();
    out.config
        .specialization
        .extend(at.iter().map(|(k, v)| (k.clone(), *v)));
    out.reports.clear();
    out.timing = None;
    let line = Provenance::Specialized {
        assignment: a.clone(),
        inner: Box::new(Provenance::Identity),
    }
    .explain_with(&doc.symbols)
    .remove(0);
    out.provenance.insert(0, line);
    log(&format!("specializing {} blocks", doc.blocks.len()));
    out.blocks = doc
        .blocks
        .iter()
        .map(|b| specialize_block(b, &a, nsym))
        .collect::<Result<_>>()
        .map_err(|e| with_legend(e, &doc.symbols))?;
    Ok(out)
}

fn specialize_block(b: &Block, a: &Assignment, nsym: usize) -> Result<Block> {
    let mut entries = Vec::new();
    for ((row, col), x) in decode_entries(b)? {
        let y = x.specialize(a).map_err(|e| at_degree(b.degree, e))?;
        if !y.is_zero() {
            entries.push(Entry {
                row,
                col,
                value: encode_rational(&y, nsym),
            });
        }
    }
    Ok(Block {
        degree: b.degree,
        basis: b.basis.clone(),
        entries,
    })
}
