use std::collections::BTreeMap;
use std::sync::Arc;

use super::{GradedBasis, ModuleDesc};
use crate::error::{Error, Result};
use crate::qfield::{Assignment, RationalFn};

/// Sparse linear map between two graded bases. Absent entries are zero and
/// no zero is ever stored.
#[derive(Clone, Debug)]
pub struct BlockMatrix {
    src: Arc<GradedBasis>,
    dst: Arc<GradedBasis>,
    entries: BTreeMap<(usize, usize), RationalFn>,
}

impl BlockMatrix {
    pub fn zero(src: Arc<GradedBasis>, dst: Arc<GradedBasis>) -> Self {
        Self {
            src,
            dst,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(basis: Arc<GradedBasis>) -> Self {
        Self::scalar(basis, &RationalFn::one())
    }

    pub fn scalar(basis: Arc<GradedBasis>, x: &RationalFn) -> Self {
        let mut m = Self::zero(basis.clone(), basis.clone());
        for i in 0..basis.len() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn src(&self) -> &Arc<GradedBasis> {
        &self.src
    }

    pub fn dst(&self) -> &Arc<GradedBasis> {
        &self.dst
    }

    pub fn rows(&self) -> usize {
        self.dst.len()
    }

    pub fn cols(&self) -> usize {
        self.src.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&RationalFn> {
        self.entries.get(&(row, col))
    }

    pub fn entry(&self, row: usize, col: usize) -> RationalFn {
        self.get(row, col).cloned().unwrap_or_else(RationalFn::zero)
    }

    /// Sets an entry; storing zero removes it.
    pub fn set(&mut self, row: usize, col: usize, value: RationalFn) {
        assert!(
            row < self.rows() && col < self.cols(),
            "entry ({row}, {col}) outside {}x{}",
            self.rows(),
            self.cols()
        );
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    /// Nonzero entries in `(row, col)` order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &RationalFn)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// `self` after `rhs`.
    pub fn compose(&self, rhs: &BlockMatrix) -> Result<BlockMatrix> {
        if !rhs.dst.same_space(&self.src) {
            return Err(Error::BasisMismatch(format!(
                "cannot compose: inner spaces differ (degree {} vs {})",
                rhs.dst.degree(),
                self.src.degree()
            )));
        }
        let mut by_col: Vec<Vec<(usize, &RationalFn)>> = vec![Vec::new(); self.cols()];
        for (&(r, c), v) in &self.entries {
            by_col[c].push((r, v));
        }
        let mut products: BTreeMap<(usize, usize), Vec<RationalFn>> = BTreeMap::new();
        for (&(k, c), b) in &rhs.entries {
            for &(r, a) in &by_col[k] {
                products.entry((r, c)).or_default().push(a * b);
            }
        }
        let mut out = BlockMatrix::zero(rhs.src.clone(), self.dst.clone());
        for ((r, c), terms) in products {
            out.set(r, c, RationalFn::sum(&terms));
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &BlockMatrix) -> Result<()> {
        if self.src.same_space(&other.src) && self.dst.same_space(&other.dst) {
            Ok(())
        } else {
            Err(Error::BasisMismatch(
                "operands act between different spaces".into(),
            ))
        }
    }

    pub fn add(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            let s = &out.entry(r, c) + v;
            out.set(r, c, s);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &BlockMatrix) -> Result<BlockMatrix> {
        self.add(&other.scale(&RationalFn::from_int(-1)))
    }

    pub fn scale(&self, x: &RationalFn) -> BlockMatrix {
        let mut out = BlockMatrix::zero(self.src.clone(), self.dst.clone());
        if x.is_zero() {
            return out;
        }
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v * x);
        }
        out
    }

    /// Positions where `self` and `other` differ, in `(row, col)` order.
    pub fn differences(&self, other: &BlockMatrix) -> Result<Vec<(usize, usize)>> {
        self.check_same_shape(other)?;
        let mut keys: Vec<(usize, usize)> = self
            .entries
            .keys()
            .chain(other.entries.keys())
            .copied()
            .collect();
        keys.sort_unstable();
        keys.dedup();
        Ok(keys
            .into_iter()
            .filter(|&(r, c)| self.entry(r, c) != other.entry(r, c))
            .collect())
    }

    pub fn exactly_equals(&self, other: &BlockMatrix) -> bool {
        matches!(self.differences(other), Ok(d) if d.is_empty())
    }

    pub fn trace(&self) -> RationalFn {
        let diag: Vec<&RationalFn> = self
            .entries
            .iter()
            .filter(|((r, c), _)| r == c)
            .map(|(_, v)| v)
            .collect();
        RationalFn::sum(diag)
    }

    /// Specializes every entry and every Verma weight in both bases.
    pub fn specialize(&self, assignment: &Assignment) -> Result<BlockMatrix> {
        let spec_basis = |b: &GradedBasis| {
            let factors = b
                .factors()
                .iter()
                .map(|m| match m {
                    ModuleDesc::Verma(w) => ModuleDesc::Verma(w.specialize(assignment)),
                    other => other.clone(),
                })
                .collect();
            Arc::new(GradedBasis::new(factors, b.degree()))
        };
        let mut out = BlockMatrix::zero(spec_basis(&self.src), spec_basis(&self.dst));
        for (&(r, c), v) in &self.entries {
            out.set(r, c, v.specialize(assignment)?);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::WeightExpr;

    fn basis(k: i64) -> Arc<GradedBasis> {
        Arc::new(GradedBasis::new(
            vec![
                ModuleDesc::Verma(WeightExpr::symbol(0)),
                ModuleDesc::Verma(WeightExpr::symbol(1)),
            ],
            k,
        ))
    }

    #[test]
    fn zeros_are_never_stored() {
        let mut m = BlockMatrix::identity(basis(2));
        assert_eq!(m.nnz(), 3);
        m.set(1, 1, RationalFn::zero());
        assert_eq!(m.nnz(), 2);
        assert!(m.get(1, 1).is_none());
    }

    #[test]
    fn compose_checks_inner_space() {
        let a = BlockMatrix::identity(basis(1));
        let b = BlockMatrix::identity(basis(2));
        assert!(matches!(a.compose(&b), Err(Error::BasisMismatch(_))));
        let c = a.compose(&a).unwrap();
        assert!(c.exactly_equals(&a));
    }

    #[test]
    fn trace_of_scalar() {
        let x = RationalFn::q_pow(2);
        let m = BlockMatrix::scalar(basis(3), &x);
        assert_eq!(m.trace(), &x * &RationalFn::from_int(4));
    }

    #[test]
    fn differences_are_reported() {
        let a = BlockMatrix::identity(basis(1));
        let b = a.scale(&RationalFn::from_int(2));
        assert_eq!(a.differences(&b).unwrap(), vec![(0, 0), (1, 1)]);
    }
}
