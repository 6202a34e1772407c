use std::fmt;

use super::{tensor_action, tensor_action_with, BlockMatrix, Bracketing, Generator, ModuleDesc};
use crate::qfield::RationalFn;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `K K^-1 = 1`
    KInverse,
    /// `K E = q^2 E K`
    KE,
    /// `K F = q^-2 F K`
    KF,
    /// `E F - F E = (K - K^-1) / (q - q^-1)`
    Commutator,
    /// Left-to-right and right-to-left coproducts agree for this generator.
    Coassociativity(Generator),
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Relation::KInverse => write!(f, "K*K^-1 = 1"),
            Relation::KE => write!(f, "KE = q^2 EK"),
            Relation::KF => write!(f, "KF = q^-2 FK"),
            Relation::Commutator => write!(f, "EF - FE = (K - K^-1)/(q - q^-1)"),
            Relation::Coassociativity(g) => write!(f, "coassociativity of {g}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationViolation {
    pub relation: Relation,
    pub degree: i64,
    pub row: usize,
    pub col: usize,
}

fn compare(
    relation: Relation,
    degree: i64,
    lhs: &BlockMatrix,
    rhs: &BlockMatrix,
    out: &mut Vec<RelationViolation>,
) {
    let diffs = lhs
        .differences(rhs)
        .expect("relation sides act between the same spaces");
    out.extend(diffs.into_iter().map(|(row, col)| RelationViolation {
        relation,
        degree,
        row,
        col,
    }));
}

/// Checks the defining relations of `U_q(sl2)` on the degree window
/// `0..=max_degree` of `factors`. Relations whose composite would leave the
/// window (an `F` out of degree `max_degree`) are skipped.
pub fn check_relations(factors: &[ModuleDesc], max_degree: i64) -> Vec<RelationViolation> {
    use Generator::*;
    let mut out = Vec::new();
    let q_minus_inv = &RationalFn::q_pow(1) - &RationalFn::q_pow(-1);
    for k in 0..=max_degree {
        let kk = tensor_action(K, factors, k);
        let kinv = tensor_action(KInv, factors, k);
        let e = tensor_action(E, factors, k);
        let id = BlockMatrix::identity(kk.src().clone());
        compare(
            Relation::KInverse,
            k,
            &kk.compose(&kinv).unwrap(),
            &id,
            &mut out,
        );

        let lhs = tensor_action(K, factors, k - 1).compose(&e).unwrap();
        let rhs = e.compose(&kk).unwrap().scale(&RationalFn::q_pow(2));
        compare(Relation::KE, k, &lhs, &rhs, &mut out);

        if k < max_degree {
            let f = tensor_action(F, factors, k);
            let lhs = tensor_action(K, factors, k + 1).compose(&f).unwrap();
            let rhs = f.compose(&kk).unwrap().scale(&RationalFn::q_pow(-2));
            compare(Relation::KF, k, &lhs, &rhs, &mut out);

            let ef = tensor_action(E, factors, k + 1).compose(&f).unwrap();
            let fe = tensor_action(F, factors, k - 1).compose(&e).unwrap();
            let lhs = ef.sub(&fe).unwrap();
            let rhs = kk
                .sub(&kinv)
                .unwrap()
                .scale(&q_minus_inv.inv().expect("q - q^-1 is nonzero"));
            compare(Relation::Commutator, k, &lhs, &rhs, &mut out);
        }
    }
    out
}

/// Compares the two bracketings of the iterated coproduct for every generator.
pub fn check_coassociativity(factors: &[ModuleDesc], max_degree: i64) -> Vec<RelationViolation> {
    let mut out = Vec::new();
    for k in 0..=max_degree {
        for gen in Generator::ALL {
            let l = tensor_action_with(gen, factors, k, Bracketing::LeftToRight);
            let r = tensor_action_with(gen, factors, k, Bracketing::RightToLeft);
            compare(Relation::Coassociativity(gen), k, &l, &r, &mut out);
        }
    }
    out
}
