use std::fmt;

use crate::qfield::WeightExpr;

/// One tensor factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleDesc {
    /// The `(k+1)`-dimensional irreducible `V_k`.
    FiniteIrrep(u32),
    /// The Verma module `M(w)`.
    Verma(WeightExpr),
}

impl ModuleDesc {
    pub fn verma(w: WeightExpr) -> Self {
        ModuleDesc::Verma(w)
    }

    /// Highest weight: `k` for `V_k`, `w` for `M(w)`.
    pub fn highest_weight(&self) -> WeightExpr {
        match self {
            ModuleDesc::FiniteIrrep(k) => WeightExpr::constant(i64::from(*k)),
            ModuleDesc::Verma(w) => w.clone(),
        }
    }

    /// Largest basis index, if finite.
    pub fn max_index(&self) -> Option<u32> {
        match self {
            ModuleDesc::FiniteIrrep(k) => Some(*k),
            ModuleDesc::Verma(_) => None,
        }
    }

    pub fn dimension(&self) -> Option<u32> {
        self.max_index().map(|k| k + 1)
    }
}

impl fmt::Display for ModuleDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleDesc::FiniteIrrep(k) => write!(f, "V_{k}"),
            ModuleDesc::Verma(w) => write!(f, "M({w})"),
        }
    }
}

/// The degree-`k` weight space of a tensor product, spanned by
/// `v_{i_1} (x) .. (x) v_{i_n}` with `sum i_j = k`.
///
/// Vectors are listed in ascending lexicographic order. A negative degree
/// gives the zero space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedBasis {
    factors: Vec<ModuleDesc>,
    degree: i64,
    vectors: Vec<Vec<u32>>,
}

impl GradedBasis {
    pub fn new(factors: Vec<ModuleDesc>, degree: i64) -> Self {
        let mut vectors = Vec::new();
        if degree >= 0 && !factors.is_empty() {
            let caps: Vec<Option<u32>> = factors.iter().map(|m| m.max_index()).collect();
            let mut cur = Vec::with_capacity(factors.len());
            compositions(degree as u32, &caps, &mut cur, &mut vectors);
        } else if degree == 0 {
            vectors.push(Vec::new());
        }
        Self {
            factors,
            degree,
            vectors,
        }
    }

    pub fn factors(&self) -> &[ModuleDesc] {
        &self.factors
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.vectors
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn index_of(&self, v: &[u32]) -> Option<usize> {
        self.vectors.binary_search_by(|x| x.as_slice().cmp(v)).ok()
    }

    /// Exponent of the K-eigenvalue shared by every vector:
    /// `sum_j w_j - 2k`.
    pub fn weight(&self) -> WeightExpr {
        self.factors
            .iter()
            .fold(WeightExpr::constant(-2 * self.degree), |acc, m| {
                &acc + &m.highest_weight()
            })
    }

    /// Same space, checked by factor list and degree.
    pub fn same_space(&self, other: &GradedBasis) -> bool {
        self.degree == other.degree && self.factors == other.factors
    }
}

fn compositions(rest: u32, caps: &[Option<u32>], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    let pos = cur.len();
    if pos + 1 == caps.len() {
        if caps[pos].is_none_or(|c| rest <= c) {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    let hi = caps[pos].map_or(rest, |c| c.min(rest));
    for i in 0..=hi {
        cur.push(i);
        compositions(rest - i, caps, cur, out);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vermas(n: usize) -> Vec<ModuleDesc> {
        (0..n)
            .map(|j| ModuleDesc::Verma(WeightExpr::symbol(j)))
            .collect()
    }

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn two_vermas_degree_one() {
        let b = GradedBasis::new(vermas(2), 1);
        assert_eq!(b.vectors(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn three_vermas_degree_two() {
        let b = GradedBasis::new(vermas(3), 2);
        let expected: Vec<Vec<u32>> = vec![
            vec![0, 0, 2],
            vec![0, 1, 1],
            vec![0, 2, 0],
            vec![1, 0, 1],
            vec![1, 1, 0],
            vec![2, 0, 0],
        ];
        assert_eq!(b.vectors(), expected.as_slice());
    }

    #[test]
    fn finite_caps() {
        let b = GradedBasis::new(vec![ModuleDesc::FiniteIrrep(1); 2], 2);
        assert_eq!(b.vectors(), &[vec![1, 1]]);
        assert!(GradedBasis::new(vec![ModuleDesc::FiniteIrrep(1); 2], 3).is_empty());
    }

    #[test]
    fn negative_degree_is_empty() {
        assert!(GradedBasis::new(vermas(2), -1).is_empty());
    }

    #[test]
    fn dimension_formula() {
        for n in 1..=4 {
            for k in 0..=6 {
                let b = GradedBasis::new(vermas(n), k);
                assert_eq!(b.len() as u64, binom(k as u64 + n as u64 - 1, n as u64 - 1));
                assert!(b.vectors().windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn weight_is_shared() {
        let b = GradedBasis::new(vermas(2), 3);
        assert_eq!(b.weight(), WeightExpr::from_parts([(0, 1), (1, 1)], -6));
    }
}
