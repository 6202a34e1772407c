//! Fusion maps between Verma tensor products, their extensions by identity
//! factors, the Temperley-Lieb generators on `V_1^{(x)n}`, and a checker for
//! the intertwining property.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::par::map_degrees;
use crate::qfield::{qbinomial, qint, Assignment, RationalFn, WeightExpr};
use crate::repspaces::{tensor_action, BlockMatrix, Generator, GradedBasis, ModuleDesc};

/// A degree-preserving linear map given by one block per degree `0..=cutoff`.
#[derive(Clone, Debug)]
pub struct IntertwinerBlocks {
    src_factors: Vec<ModuleDesc>,
    dst_factors: Vec<ModuleDesc>,
    blocks: BTreeMap<i64, BlockMatrix>,
    cutoff: i64,
}

impl IntertwinerBlocks {
    /// Builds a family from blocks; every degree `0..=cutoff` must be present
    /// and act between the declared factor lists.
    pub fn new(
        src_factors: Vec<ModuleDesc>,
        dst_factors: Vec<ModuleDesc>,
        cutoff: i64,
        blocks: impl IntoIterator<Item = BlockMatrix>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for b in blocks {
            let k = b.src().degree();
            if b.src().factors() != src_factors.as_slice()
                || b.dst().factors() != dst_factors.as_slice()
                || b.dst().degree() != k
            {
                return Err(Error::BasisMismatch(format!(
                    "block at degree {k} does not match the declared factors"
                )));
            }
            map.insert(k, b);
        }
        if let Some(k) = (0..=cutoff).find(|k| !map.contains_key(k)) {
            return Err(Error::MissingBlock(k));
        }
        Ok(Self {
            src_factors,
            dst_factors,
            blocks: map,
            cutoff,
        })
    }

    pub fn identity(factors: Vec<ModuleDesc>, cutoff: i64) -> Self {
        let blocks: Vec<_> = (0..=cutoff)
            .map(|k| BlockMatrix::identity(Arc::new(GradedBasis::new(factors.clone(), k))))
            .collect();
        Self::new(factors.clone(), factors, cutoff, blocks).expect("identity blocks are consistent")
    }

    pub fn src_factors(&self) -> &[ModuleDesc] {
        &self.src_factors
    }

    pub fn dst_factors(&self) -> &[ModuleDesc] {
        &self.dst_factors
    }

    pub fn cutoff(&self) -> i64 {
        self.cutoff
    }

    pub fn block(&self, k: i64) -> Result<&BlockMatrix> {
        self.blocks.get(&k).ok_or(Error::MissingBlock(k))
    }

    pub fn block_mut(&mut self, k: i64) -> Option<&mut BlockMatrix> {
        self.blocks.get_mut(&k)
    }

    pub fn blocks(&self) -> impl Iterator<Item = (i64, &BlockMatrix)> {
        self.blocks.iter().map(|(&k, b)| (k, b))
    }

    /// Degree-wise composite `self` after `rhs`, on the common window.
    pub fn compose(&self, rhs: &IntertwinerBlocks) -> Result<IntertwinerBlocks> {
        let cutoff = self.cutoff.min(rhs.cutoff);
        let blocks = map_degrees(0..=cutoff, |k| self.block(k)?.compose(rhs.block(k)?))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        IntertwinerBlocks::new(
            rhs.src_factors.clone(),
            self.dst_factors.clone(),
            cutoff,
            blocks,
        )
    }

    pub fn specialize(&self, assignment: &Assignment) -> Result<IntertwinerBlocks> {
        let spec = |fs: &[ModuleDesc]| -> Vec<ModuleDesc> {
            fs.iter()
                .map(|m| match m {
                    ModuleDesc::Verma(w) => ModuleDesc::Verma(w.specialize(assignment)),
                    other => other.clone(),
                })
                .collect()
        };
        let blocks = self
            .blocks
            .values()
            .map(|b| b.specialize(assignment))
            .collect::<Result<Vec<_>>>()?;
        IntertwinerBlocks::new(
            spec(&self.src_factors),
            spec(&self.dst_factors),
            self.cutoff,
            blocks,
        )
    }
}

fn verma_pair(mu: &WeightExpr, lambda: &WeightExpr) -> Vec<ModuleDesc> {
    vec![
        ModuleDesc::Verma(mu.clone()),
        ModuleDesc::Verma(lambda.clone()),
    ]
}

fn fused(mu: &WeightExpr, lambda: &WeightExpr) -> Vec<ModuleDesc> {
    vec![ModuleDesc::Verma(mu + lambda)]
}

/// Degree-`k` block of the fusion `M(mu) (x) M(lambda) -> M(mu+lambda)`,
/// `v_{i,j} -> q^{i(lambda-j)} v_{i+j}`.
pub fn e_block(mu: &WeightExpr, lambda: &WeightExpr, k: i64) -> BlockMatrix {
    let src = Arc::new(GradedBasis::new(verma_pair(mu, lambda), k));
    let dst = Arc::new(GradedBasis::new(fused(mu, lambda), k));
    let mut m = BlockMatrix::zero(src.clone(), dst);
    for (col, v) in src.vectors().iter().enumerate() {
        let (i, j) = (i64::from(v[0]), i64::from(v[1]));
        m.set(
            0,
            col,
            RationalFn::monomial(lambda.shift(-j).scale(i).q_power()),
        );
    }
    m
}

/// Degree-`k` block of the splitting `M(mu+lambda) -> M(mu) (x) M(lambda)`:
///
/// `v_k -> sum_j q^{-(k-j)(mu-j)} [k j] prod_{i<j}[mu-i] prod_{i<k-j}[lambda-i]
///         / prod_{i<k}[mu+lambda-i] v_{j,k-j}`.
pub fn f_block(mu: &WeightExpr, lambda: &WeightExpr, k: i64) -> BlockMatrix {
    let src = Arc::new(GradedBasis::new(fused(mu, lambda), k));
    let dst = Arc::new(GradedBasis::new(verma_pair(mu, lambda), k));
    let mut m = BlockMatrix::zero(src, dst.clone());
    let sum = mu + lambda;
    let mut den = RationalFn::one();
    for i in 0..k {
        den = &den * &qint(&sum.shift(-i));
    }
    let den_inv = den
        .inv()
        .expect("prod [mu+lambda-i] is nonzero for symbolic or pole-free weights");
    for j in 0..=k {
        let mut c = RationalFn::monomial((-mu.shift(-j)).scale(k - j).q_power());
        c = &c * &qbinomial(k, j).expect("0 <= j <= k");
        for i in 0..j {
            c = &c * &qint(&mu.shift(-i));
        }
        for i in 0..k - j {
            c = &c * &qint(&lambda.shift(-i));
        }
        c = &c * &den_inv;
        let row = dst.index_of(&[j as u32, (k - j) as u32]).unwrap();
        m.set(row, 0, c);
    }
    m
}

pub fn e_family(mu: &WeightExpr, lambda: &WeightExpr, cutoff: i64) -> IntertwinerBlocks {
    let blocks = map_degrees(0..=cutoff, |k| e_block(mu, lambda, k));
    IntertwinerBlocks::new(verma_pair(mu, lambda), fused(mu, lambda), cutoff, blocks)
        .expect("e blocks are consistent")
}

pub fn f_family(mu: &WeightExpr, lambda: &WeightExpr, cutoff: i64) -> IntertwinerBlocks {
    let blocks = map_degrees(0..=cutoff, |k| f_block(mu, lambda, k));
    IntertwinerBlocks::new(fused(mu, lambda), verma_pair(mu, lambda), cutoff, blocks)
        .expect("f blocks are consistent")
}

/// Degree-`k` block of `base (x) Id_trailing`.
pub fn splice(base: &IntertwinerBlocks, trailing: &[ModuleDesc], k: i64) -> Result<BlockMatrix> {
    splice_around(&[], base, trailing, k)
}

/// Degree-`k` block of `Id_leading (x) base (x) Id_trailing`.
///
/// A source vector splits as `(sigma, x, tau)`; `base` acts on `x` at its own
/// degree and the outer indices are carried along unchanged.
pub fn splice_around(
    leading: &[ModuleDesc],
    base: &IntertwinerBlocks,
    trailing: &[ModuleDesc],
    k: i64,
) -> Result<BlockMatrix> {
    let wrap = |mid: &[ModuleDesc]| {
        let mut f = leading.to_vec();
        f.extend_from_slice(mid);
        f.extend_from_slice(trailing);
        f
    };
    let src = Arc::new(GradedBasis::new(wrap(&base.src_factors), k));
    let dst = Arc::new(GradedBasis::new(wrap(&base.dst_factors), k));
    let (a, b) = (leading.len(), leading.len() + base.src_factors.len());

    let mut by_degree: BTreeMap<i64, Vec<Vec<(usize, &RationalFn)>>> = BTreeMap::new();
    let mut out = BlockMatrix::zero(src.clone(), dst.clone());
    for (col, v) in src.vectors().iter().enumerate() {
        let mid = &v[a..b];
        let d: i64 = mid.iter().map(|&i| i64::from(i)).sum();
        if let Entry::Vacant(slot) = by_degree.entry(d) {
            let block = base.block(d)?;
            let mut cols = vec![Vec::new(); block.cols()];
            for (r, c, x) in block.entries() {
                cols[c].push((r, x));
            }
            slot.insert(cols);
        }
        let block = base.block(d)?;
        let inner_col = block
            .src()
            .index_of(mid)
            .expect("inner vector belongs to the base source basis");
        for &(r, x) in &by_degree[&d][inner_col] {
            let mut w = v[..a].to_vec();
            w.extend_from_slice(&block.dst().vectors()[r]);
            w.extend_from_slice(&v[b..]);
            let row = dst.index_of(&w).expect("spliced image stays in the basis");
            out.set(row, col, x.clone());
        }
    }
    Ok(out)
}

pub fn splice_family(
    base: &IntertwinerBlocks,
    trailing: &[ModuleDesc],
    cutoff: i64,
) -> Result<IntertwinerBlocks> {
    let blocks = map_degrees(0..=cutoff, |k| splice(base, trailing, k))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let mut src = base.src_factors.clone();
    src.extend_from_slice(trailing);
    let mut dst = base.dst_factors.clone();
    dst.extend_from_slice(trailing);
    IntertwinerBlocks::new(src, dst, cutoff, blocks)
}

/// `cap(1) = v_{0,1} - q^-1 v_{1,0}` in `V_1 (x) V_1`.
pub fn cap() -> Vec<([u32; 2], RationalFn)> {
    vec![
        ([0, 1], RationalFn::one()),
        ([1, 0], -RationalFn::q_pow(-1)),
    ]
}

/// `cup(v_{0,1}) = -q`, `cup(v_{1,0}) = 1`, zero on `v_{0,0}` and `v_{1,1}`.
pub fn cup(v: [u32; 2]) -> RationalFn {
    match v {
        [0, 1] => -RationalFn::q_pow(1),
        [1, 0] => RationalFn::one(),
        _ => RationalFn::zero(),
    }
}

/// `cap . cup` as an endomorphism of `V_1 (x) V_1`.
pub fn cap_cup() -> IntertwinerBlocks {
    let factors = vec![ModuleDesc::FiniteIrrep(1); 2];
    let blocks: Vec<_> = (0..=2)
        .map(|k| {
            let basis = Arc::new(GradedBasis::new(factors.clone(), k));
            let mut m = BlockMatrix::zero(basis.clone(), basis.clone());
            for (col, v) in basis.vectors().iter().enumerate() {
                let c = cup([v[0], v[1]]);
                if c.is_zero() {
                    continue;
                }
                for (w, x) in cap() {
                    let row = basis.index_of(&w).expect("cap lands in degree one");
                    m.set(row, col, &c * &x);
                }
            }
            m
        })
        .collect();
    IntertwinerBlocks::new(factors.clone(), factors, 2, blocks).expect("cap-cup blocks")
}

/// The Temperley-Lieb generator `e_i = Id^{(x)(i-1)} (x) cap.cup (x) Id^{(x)(n-i-1)}`
/// on `V_1^{(x)n}`, for `1 <= i <= n-1`.
pub fn cap_cup_e(n: usize, i: usize) -> Result<IntertwinerBlocks> {
    if n < 2 || i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let v1 = ModuleDesc::FiniteIrrep(1);
    let leading = vec![v1.clone(); i - 1];
    let trailing = vec![v1.clone(); n - i - 1];
    let base = cap_cup();
    let cutoff = n as i64;
    let blocks = map_degrees(0..=cutoff, |k| splice_around(&leading, &base, &trailing, k))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let factors = vec![v1; n];
    IntertwinerBlocks::new(factors.clone(), factors, cutoff, blocks)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntertwinerViolation {
    pub generator: Generator,
    pub degree: i64,
    pub row: usize,
    pub col: usize,
}

impl fmt::Display for IntertwinerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} does not commute at degree {} entry ({}, {})",
            self.generator, self.degree, self.row, self.col
        )
    }
}

/// Checks `X . phi = phi . X` for `X = K` on degrees `0..=max_degree`,
/// `X = E` on `1..=max_degree` and `X = F` on `0..max_degree`.
pub fn check_intertwiner(phi: &IntertwinerBlocks, max_degree: i64) -> Vec<IntertwinerViolation> {
    let max_degree = max_degree.min(phi.cutoff);
    let per_degree = map_degrees(0..=max_degree, |k| {
        let mut out = Vec::new();
        let mut push = |generator, lhs: Result<BlockMatrix>, rhs: Result<BlockMatrix>| {
            let (lhs, rhs) = (lhs.expect("composable"), rhs.expect("composable"));
            for (row, col) in lhs.differences(&rhs).expect("same spaces") {
                out.push(IntertwinerViolation {
                    generator,
                    degree: k,
                    row,
                    col,
                });
            }
        };
        let block = |d| phi.block(d).expect("block within cutoff");
        let (src, dst) = (&phi.src_factors, &phi.dst_factors);

        let lhs = tensor_action(Generator::K, dst, k).compose(block(k));
        let rhs = block(k).compose(&tensor_action(Generator::K, src, k));
        push(Generator::K, lhs, rhs);

        if k >= 1 {
            let lhs = tensor_action(Generator::E, dst, k).compose(block(k));
            let rhs = block(k - 1).compose(&tensor_action(Generator::E, src, k));
            push(Generator::E, lhs, rhs);
        }
        if k < max_degree {
            let lhs = tensor_action(Generator::F, dst, k).compose(block(k));
            let rhs = block(k + 1).compose(&tensor_action(Generator::F, src, k));
            push(Generator::F, lhs, rhs);
        }
        out
    });
    per_degree.into_iter().flatten().collect()
}
