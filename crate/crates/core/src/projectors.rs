//! Jones-Wenzl projectors: the classical recursion on `V_1^{(x)n}` and the
//! fusion-built projectors on tensor products of Verma modules.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::intertwiners::{cap_cup_e, e_family, f_family, splice_family, IntertwinerBlocks};
use crate::par::map_degrees;
use crate::qfield::{qint, qint_int, Assignment, RationalFn, WeightExpr};
use crate::repspaces::{tensor_action, BlockMatrix, Generator, GradedBasis, ModuleDesc};

/// How a projector was assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `P_1 = Id`.
    Identity,
    /// `P_n = P_{n-1} + [n-1]/[n] P_{n-1} e_{n-1} P_{n-1}`.
    JonesWenzl { n: usize, previous: Box<Provenance> },
    /// `F_{mu,lambda} E_{mu,lambda}`.
    Fusion { mu: WeightExpr, lambda: WeightExpr },
    /// `F_{mu,lambda;rest} P_{mu+lambda,rest} E_{mu,lambda;rest}`.
    Spliced {
        mu: WeightExpr,
        lambda: WeightExpr,
        trailing: Vec<WeightExpr>,
        inner: Box<Provenance>,
    },
    /// Built directly from blocks.
    Custom(String),
    /// Entries specialized at integer weights.
    Specialized {
        assignment: Assignment,
        inner: Box<Provenance>,
    },
}

impl Provenance {
    /// One line per recursion step, outermost first.
    pub fn explain(&self) -> Vec<String> {
        self.explain_with(&[])
    }

    /// Like [`Provenance::explain`], naming weight symbols from `names`.
    pub fn explain_with(&self, names: &[String]) -> Vec<String> {
        let show = |w: &WeightExpr| w.display_with(names).to_string();
        let mut out = Vec::new();
        let mut cur = self;
        loop {
            match cur {
                Provenance::Identity => {
                    out.push("P_1 = Id".to_string());
                    break;
                }
                Provenance::JonesWenzl { n, previous } => {
                    out.push(format!(
                        "P_{n} = P_{m} + [{m}]/[{n}] P_{m} e_{m} P_{m}",
                        m = n - 1
                    ));
                    cur = previous;
                }
                Provenance::Fusion { mu, lambda } => {
                    let (mu, lambda) = (show(mu), show(lambda));
                    out.push(format!(
                        "P({mu}, {lambda}) = F[{mu}, {lambda}] E[{mu}, {lambda}]"
                    ));
                    break;
                }
                Provenance::Spliced {
                    mu,
                    lambda,
                    trailing,
                    inner,
                } => {
                    let rest: Vec<String> = trailing.iter().map(show).collect();
                    let rest = rest.join(", ");
                    let fused = show(&(mu + lambda));
                    let (mu, lambda) = (show(mu), show(lambda));
                    out.push(format!(
                        "P({mu}, {lambda}, {rest}) = F[{mu}, {lambda}; {rest}] P({fused}, {rest}) E[{mu}, {lambda}; {rest}]"
                    ));
                    cur = inner;
                }
                Provenance::Custom(s) => {
                    out.push(s.clone());
                    break;
                }
                Provenance::Specialized { assignment, inner } => {
                    let at: Vec<String> = assignment
                        .iter()
                        .map(|(j, c)| {
                            format!("{}={c}", crate::qfield::weight::symbol_name(names, *j))
                        })
                        .collect();
                    out.push(format!("specialized at {}", at.join(", ")));
                    cur = inner;
                }
            }
        }
        out
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.explain().join("\n"))
    }
}

/// An endomorphism family with one square block per degree.
#[derive(Clone, Debug)]
pub struct ProjectorBlocks {
    map: IntertwinerBlocks,
    provenance: Provenance,
}

impl ProjectorBlocks {
    pub fn new(map: IntertwinerBlocks, provenance: Provenance) -> Result<Self> {
        if map.src_factors() != map.dst_factors() {
            return Err(Error::BasisMismatch(
                "a projector must be an endomorphism".into(),
            ));
        }
        Ok(Self { map, provenance })
    }

    pub fn factors(&self) -> &[ModuleDesc] {
        self.map.src_factors()
    }

    pub fn cutoff(&self) -> i64 {
        self.map.cutoff()
    }

    pub fn block(&self, k: i64) -> Result<&BlockMatrix> {
        self.map.block(k)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (i64, &BlockMatrix)> {
        self.map.blocks()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn as_intertwiner(&self) -> &IntertwinerBlocks {
        &self.map
    }

    pub fn into_intertwiner(self) -> IntertwinerBlocks {
        self.map
    }

    pub fn specialize(&self, assignment: &Assignment) -> Result<ProjectorBlocks> {
        Ok(Self {
            map: self.map.specialize(assignment)?,
            provenance: Provenance::Specialized {
                assignment: assignment.clone(),
                inner: Box::new(self.provenance.clone()),
            },
        })
    }

    /// Trace of every block.
    pub fn traces(&self) -> Vec<(i64, RationalFn)> {
        self.blocks().map(|(k, b)| (k, b.trace())).collect()
    }
}

/// The classical Jones-Wenzl projector `P_n` on `V_1^{(x)n}`, over `Q(q)`.
pub fn jw(n: usize) -> Result<ProjectorBlocks> {
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, n });
    }
    let v1 = ModuleDesc::FiniteIrrep(1);
    let mut current = ProjectorBlocks::new(
        IntertwinerBlocks::identity(vec![v1.clone()], 1),
        Provenance::Identity,
    )?;
    for m in 2..=n {
        let cutoff = m as i64;
        let prev = splice_family(&current.map, std::slice::from_ref(&v1), cutoff)?;
        let e = cap_cup_e(m, m - 1)?;
        let coeff = qint_int(m as i64 - 1)
            .checked_div(&qint_int(m as i64))
            .expect("[m] is nonzero for generic q");
        let blocks = map_degrees(0..=cutoff, |k| -> Result<BlockMatrix> {
            let p = prev.block(k)?;
            let pep = p.compose(&e.block(k)?.compose(p)?)?;
            p.add(&pep.scale(&coeff))
        })
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
        let factors = vec![v1.clone(); m];
        current = ProjectorBlocks::new(
            IntertwinerBlocks::new(factors.clone(), factors, cutoff, blocks)?,
            Provenance::JonesWenzl {
                n: m,
                previous: Box::new(current.provenance),
            },
        )?;
    }
    Ok(current)
}

/// The projector `P_{mu_1,..,mu_n}` on `M(mu_1) (x) .. (x) M(mu_n)` for
/// degrees `0..=cutoff`, obtained by fusing the first two factors, recursing
/// on `(mu_1+mu_2, mu_3, ..)` and splitting again.
pub fn extended_jw(weights: &[WeightExpr], cutoff: i64) -> Result<ProjectorBlocks> {
    if weights.len() < 2 {
        return Err(Error::TooFewWeights(weights.len()));
    }
    let (mu, lambda) = (&weights[0], &weights[1]);
    let e = e_family(mu, lambda, cutoff);
    let f = f_family(mu, lambda, cutoff);
    if weights.len() == 2 {
        return ProjectorBlocks::new(
            f.compose(&e)?,
            Provenance::Fusion {
                mu: mu.clone(),
                lambda: lambda.clone(),
            },
        );
    }
    let trailing: Vec<ModuleDesc> = weights[2..]
        .iter()
        .map(|w| ModuleDesc::Verma(w.clone()))
        .collect();
    let mut fused = vec![mu + lambda];
    fused.extend_from_slice(&weights[2..]);
    let inner = extended_jw(&fused, cutoff)?;
    let e_spliced = splice_family(&e, &trailing, cutoff)?;
    let f_spliced = splice_family(&f, &trailing, cutoff)?;
    let map = f_spliced.compose(&inner.map.compose(&e_spliced)?)?;
    ProjectorBlocks::new(
        map,
        Provenance::Spliced {
            mu: mu.clone(),
            lambda: lambda.clone(),
            trailing: weights[2..].to_vec(),
            inner: Box::new(inner.provenance),
        },
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdempotentViolation {
    pub degree: i64,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for IdempotentViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "P^2 != P at degree {} entry ({}, {})",
            self.degree, self.row, self.col
        )
    }
}

/// Checks `P_k P_k = P_k` exactly for every block; reports the first
/// differing entry of each failing block.
pub fn verify_idempotent(p: &ProjectorBlocks) -> Vec<IdempotentViolation> {
    let degrees: Vec<i64> = p.blocks().map(|(k, _)| k).collect();
    map_degrees(degrees.into_iter(), |k| {
        let b = p.block(k).expect("listed degree");
        let sq = b.compose(b).expect("square block");
        sq.differences(b)
            .expect("same spaces")
            .first()
            .map(|&(row, col)| IdempotentViolation {
                degree: k,
                row,
                col,
            })
    })
    .into_iter()
    .flatten()
    .collect()
}

/// The splitting map `M(mu+lambda) -> M(mu) (x) M(lambda)` rebuilt from the
/// module actions alone: `v_0 -> v_{0,0}` and
/// `G(v_{k+1}) = F . G(v_k) / [mu+lambda-k]`.
pub fn f_oracle(mu: &WeightExpr, lambda: &WeightExpr, cutoff: i64) -> IntertwinerBlocks {
    let pair = vec![
        ModuleDesc::Verma(mu.clone()),
        ModuleDesc::Verma(lambda.clone()),
    ];
    let sum = mu + lambda;
    let top = vec![ModuleDesc::Verma(sum.clone())];

    let b0 = Arc::new(GradedBasis::new(pair.clone(), 0));
    let mut column = BlockMatrix::zero(Arc::new(GradedBasis::new(top.clone(), 0)), b0);
    column.set(0, 0, RationalFn::one());
    let mut blocks = vec![column.clone()];
    for k in 0..cutoff {
        let f = tensor_action(Generator::F, &pair, k);
        let image = f.compose(&column).expect("F acts on the current degree");
        let scale = qint(&sum.shift(-k))
            .inv()
            .expect("[mu+lambda-k] is nonzero away from poles");
        let mut next = BlockMatrix::zero(
            Arc::new(GradedBasis::new(top.clone(), k + 1)),
            image.dst().clone(),
        );
        for (r, _, x) in image.entries() {
            next.set(r, 0, x * &scale);
        }
        blocks.push(next.clone());
        column = next;
    }
    IntertwinerBlocks::new(top, pair, cutoff, blocks).expect("oracle blocks are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intertwiners::f_block;

    fn mu(j: usize) -> WeightExpr {
        WeightExpr::symbol(j)
    }

    #[test]
    fn jw_one_is_identity() {
        let p = jw(1).unwrap();
        for (_, b) in p.blocks() {
            assert!(b.exactly_equals(&BlockMatrix::identity(b.src().clone())));
        }
    }

    #[test]
    fn jw_two_matches_recursion() {
        let p = jw(2).unwrap();
        let e = cap_cup_e(2, 1).unwrap();
        let coeff = qint_int(2).inv().unwrap();
        for k in 0..=2 {
            let b = p.block(k).unwrap();
            let expected = BlockMatrix::identity(b.src().clone())
                .add(&e.block(k).unwrap().scale(&coeff))
                .unwrap();
            assert!(b.exactly_equals(&expected));
        }
    }

    #[test]
    fn jw_small_idempotent() {
        for n in 1..=4 {
            assert!(verify_idempotent(&jw(n).unwrap()).is_empty(), "n = {n}");
        }
    }

    #[test]
    fn extended_two_degree_zero_and_one() {
        let p = extended_jw(&[mu(0), mu(1)], 1).unwrap();
        assert!(p.block(0).unwrap().entry(0, 0).is_one());
        let b = p.block(1).unwrap();
        let s = &mu(0) + &mu(1);
        let den = qint(&s).inv().unwrap();
        let m = |w: WeightExpr| RationalFn::monomial(w.q_power());
        let expected = [
            [
                &(&m(-mu(0)) * &qint(&mu(1))) * &den,
                &(&m(&mu(1) - &mu(0)) * &qint(&mu(1))) * &den,
            ],
            [&qint(&mu(0)) * &den, &(&m(mu(1)) * &qint(&mu(0))) * &den],
        ];
        for (r, row) in expected.iter().enumerate() {
            for (c, x) in row.iter().enumerate() {
                assert_eq!(&b.entry(r, c), x, "({r}, {c})");
            }
        }
        assert!(b.trace().is_one());
    }

    #[test]
    fn extended_three_idempotent_small() {
        let p = extended_jw(&[mu(0), mu(1), mu(2)], 3).unwrap();
        assert!(verify_idempotent(&p).is_empty());
        for (k, t) in p.traces() {
            assert!(t.is_one(), "trace at degree {k}");
        }
    }

    #[test]
    fn too_few_weights() {
        assert_eq!(
            extended_jw(&[mu(0)], 2).unwrap_err(),
            Error::TooFewWeights(1)
        );
    }

    #[test]
    fn scaled_projector_is_flagged() {
        let p = extended_jw(&[mu(0), mu(1)], 2).unwrap();
        let mut map = p.into_intertwiner();
        let b = map.block_mut(2).unwrap();
        *b = b.scale(&RationalFn::from_int(2));
        let scaled = ProjectorBlocks::new(map, Provenance::Custom("2P".into())).unwrap();
        let report = verify_idempotent(&scaled);
        assert_eq!(report.len(), 1);
        assert_eq!(report[0].degree, 2);
    }

    #[test]
    fn identity_is_idempotent() {
        let id = ProjectorBlocks::new(
            IntertwinerBlocks::identity(vec![ModuleDesc::Verma(mu(0)); 2], 3),
            Provenance::Custom("Id".into()),
        )
        .unwrap();
        assert!(verify_idempotent(&id).is_empty());
    }

    #[test]
    fn oracle_first_steps() {
        let g = f_oracle(&mu(0), &mu(1), 3);
        assert!(g.block(0).unwrap().entry(0, 0).is_one());
        for k in 0..=3 {
            assert!(
                g.block(k)
                    .unwrap()
                    .exactly_equals(&f_block(&mu(0), &mu(1), k)),
                "k = {k}"
            );
        }
    }

    #[test]
    fn explain_lists_recursion() {
        let p = extended_jw(&[mu(0), mu(1), mu(2)], 0).unwrap();
        let lines = p.provenance().explain();
        assert_eq!(lines.len(), 2);
        assert!(lines[0].starts_with("P(mu1, mu2, mu3)"));
        assert_eq!(
            lines[1],
            "P(mu1 + mu2, mu3) = F[mu1 + mu2, mu3] E[mu1 + mu2, mu3]"
        );
        assert_eq!(jw(3).unwrap().provenance().explain().len(), 3);
    }
}
