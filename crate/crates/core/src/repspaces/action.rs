use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{BlockMatrix, GradedBasis, ModuleDesc};
use crate::qfield::{qint, RationalFn, WeightExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    K,
    KInv,
    E,
    F,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::K, Generator::KInv, Generator::E, Generator::F];

    /// Change in total degree.
    pub fn degree_shift(self) -> i64 {
        match self {
            Generator::K | Generator::KInv => 0,
            Generator::E => -1,
            Generator::F => 1,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Generator::K => "K",
            Generator::KInv => "K^-1",
            Generator::E => "E",
            Generator::F => "F",
        })
    }
}

/// How an n-fold coproduct is built from the two-factor rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bracketing {
    /// `((M1 (x) M2) (x) ..) (x) Mn`, the canonical choice.
    LeftToRight,
    /// `M1 (x) (M2 (x) (.. (x) Mn))`.
    RightToLeft,
}

type Vector = Vec<(Vec<u32>, RationalFn)>;

/// Generator action on the basis vector `v_i` of a single factor.
fn factor_action(gen: Generator, module: &ModuleDesc, i: u32) -> Option<(u32, RationalFn)> {
    let w = module.highest_weight();
    match gen {
        Generator::K => Some((
            i,
            RationalFn::monomial(w.shift(-2 * i64::from(i)).q_power()),
        )),
        Generator::KInv => Some((
            i,
            RationalFn::monomial((-w.shift(-2 * i64::from(i))).q_power()),
        )),
        Generator::E => (i > 0).then(|| (i - 1, qint(&WeightExpr::constant(i64::from(i))))),
        Generator::F => {
            if module.max_index().is_some_and(|top| i >= top) {
                return None;
            }
            Some((i + 1, qint(&w.shift(-i64::from(i)))))
        }
    }
}

/// Generator action on a tensor basis vector, expanded through the coproduct
/// `K -> K (x) K`, `E -> E (x) K + 1 (x) E`, `F -> F (x) 1 + K^-1 (x) F`.
pub fn act_on_vector(
    gen: Generator,
    factors: &[ModuleDesc],
    index: &[u32],
    bracketing: Bracketing,
) -> Vector {
    debug_assert_eq!(factors.len(), index.len());
    if factors.len() == 1 {
        return factor_action(gen, &factors[0], index[0])
            .map(|(j, c)| vec![(vec![j], c)])
            .unwrap_or_default();
    }
    let split = match bracketing {
        Bracketing::LeftToRight => factors.len() - 1,
        Bracketing::RightToLeft => 1,
    };
    let (lf, rf) = factors.split_at(split);
    let (li, ri) = index.split_at(split);
    let left = |g| act_on_vector(g, lf, li, bracketing);
    let right = |g| act_on_vector(g, rf, ri, bracketing);
    let ident_l = || vec![(li.to_vec(), RationalFn::one())];
    let ident_r = || vec![(ri.to_vec(), RationalFn::one())];

    let mut out = Vec::new();
    let mut tensor = |a: Vector, b: Vector| {
        for (x, cx) in &a {
            for (y, cy) in &b {
                let mut v = x.clone();
                v.extend_from_slice(y);
                out.push((v, cx * cy));
            }
        }
    };
    match gen {
        Generator::K | Generator::KInv => tensor(left(gen), right(gen)),
        Generator::E => {
            tensor(left(Generator::E), right(Generator::K));
            tensor(ident_l(), right(Generator::E));
        }
        Generator::F => {
            tensor(left(Generator::F), ident_r());
            tensor(left(Generator::KInv), right(Generator::F));
        }
    }
    collect(out)
}

fn collect(terms: Vector) -> Vector {
    let mut grouped: BTreeMap<Vec<u32>, Vec<RationalFn>> = BTreeMap::new();
    for (v, c) in terms {
        grouped.entry(v).or_default().push(c);
    }
    grouped
        .into_iter()
        .map(|(v, cs)| (v, RationalFn::sum(&cs)))
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

/// Matrix of `gen` from the degree-`k` space of `factors`, using the
/// canonical left-to-right coproduct.
pub fn tensor_action(gen: Generator, factors: &[ModuleDesc], k: i64) -> BlockMatrix {
    tensor_action_with(gen, factors, k, Bracketing::LeftToRight)
}

pub fn tensor_action_with(
    gen: Generator,
    factors: &[ModuleDesc],
    k: i64,
    bracketing: Bracketing,
) -> BlockMatrix {
    let src = Arc::new(GradedBasis::new(factors.to_vec(), k));
    let dst = Arc::new(GradedBasis::new(factors.to_vec(), k + gen.degree_shift()));
    let mut m = BlockMatrix::zero(src.clone(), dst.clone());
    for (col, v) in src.vectors().iter().enumerate() {
        for (w, c) in act_on_vector(gen, factors, v, bracketing) {
            let row = dst
                .index_of(&w)
                .expect("generator image stays in the graded basis");
            m.set(row, col, c);
        }
    }
    m
}

/// Action of `gen` on degree `k` of `M(w)`: a 1x1 block (or 0x1 for `E` at `k = 0`).
pub fn verma_action(gen: Generator, w: &WeightExpr, k: i64) -> BlockMatrix {
    tensor_action(gen, &[ModuleDesc::Verma(w.clone())], k)
}

/// Action of `gen` on every basis vector `v_0 .. v_k` of `V_k`, one block per index.
pub fn irrep_action(gen: Generator, k_dim: u32) -> Vec<BlockMatrix> {
    let factors = [ModuleDesc::FiniteIrrep(k_dim)];
    (0..=i64::from(k_dim))
        .map(|i| tensor_action(gen, &factors, i))
        .collect()
}
