use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use super::{LaurentMono, MAX_SYMBOLS};

/// A formal weight `sum_j a_j * mu_j + b` with integer coefficients.
///
/// The coefficient map never stores zeros, so derived equality is equality of
/// canonical forms.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightExpr {
    sym_coeffs: BTreeMap<usize, i64>,
    offset: i64,
}

impl WeightExpr {
    pub fn constant(offset: i64) -> Self {
        Self {
            sym_coeffs: BTreeMap::new(),
            offset,
        }
    }

    /// The bare symbol `mu_{index+1}`.
    ///
    /// Panics if `index >= MAX_SYMBOLS`.
    pub fn symbol(index: usize) -> Self {
        assert!(
            index < MAX_SYMBOLS,
            "weight symbol index {index} exceeds MAX_SYMBOLS = {MAX_SYMBOLS}"
        );
        let mut sym_coeffs = BTreeMap::new();
        sym_coeffs.insert(index, 1);
        Self {
            sym_coeffs,
            offset: 0,
        }
    }

    pub fn from_parts(coeffs: impl IntoIterator<Item = (usize, i64)>, offset: i64) -> Self {
        let mut w = Self::constant(offset);
        for (j, a) in coeffs {
            assert!(
                j < MAX_SYMBOLS,
                "weight symbol index {j} exceeds MAX_SYMBOLS"
            );
            *w.sym_coeffs.entry(j).or_insert(0) += a;
        }
        w.sym_coeffs.retain(|_, a| *a != 0);
        w
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn coeff(&self, index: usize) -> i64 {
        self.sym_coeffs.get(&index).copied().unwrap_or(0)
    }

    pub fn sym_coeffs(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.sym_coeffs.iter().map(|(&j, &a)| (j, a))
    }

    pub fn is_constant(&self) -> bool {
        self.sym_coeffs.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.is_constant() && self.offset == 0
    }

    pub fn scale(&self, factor: i64) -> Self {
        if factor == 0 {
            return Self::default();
        }
        Self {
            sym_coeffs: self
                .sym_coeffs
                .iter()
                .map(|(&j, &a)| (j, a * factor))
                .collect(),
            offset: self.offset * factor,
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        Self {
            sym_coeffs: self.sym_coeffs.clone(),
            offset: self.offset + by,
        }
    }

    /// Replaces assigned symbols by their integer values.
    pub fn specialize(&self, assignment: &BTreeMap<usize, i64>) -> Self {
        let mut out = Self::constant(self.offset);
        for (&j, &a) in &self.sym_coeffs {
            match assignment.get(&j) {
                Some(&c) => out.offset += a * c,
                None => {
                    out.sym_coeffs.insert(j, a);
                }
            }
        }
        out
    }

    /// The monomial `q^w`, i.e. `q^b * prod t_j^{a_j}`.
    pub fn q_power(&self) -> LaurentMono {
        let mut exps = [0i32; MAX_SYMBOLS + 1];
        exps[0] = to_exp(self.offset);
        for (&j, &a) in &self.sym_coeffs {
            exps[j + 1] = to_exp(a);
        }
        LaurentMono::from_exps(exps)
    }
}

fn to_exp(v: i64) -> i32 {
    i32::try_from(v).expect("exponent out of i32 range")
}

impl Add for &WeightExpr {
    type Output = WeightExpr;
    fn add(self, rhs: &WeightExpr) -> WeightExpr {
        WeightExpr::from_parts(
            self.sym_coeffs().chain(rhs.sym_coeffs()),
            self.offset + rhs.offset,
        )
    }
}

impl Add for WeightExpr {
    type Output = WeightExpr;
    fn add(self, rhs: WeightExpr) -> WeightExpr {
        &self + &rhs
    }
}

impl Sub for &WeightExpr {
    type Output = WeightExpr;
    fn sub(self, rhs: &WeightExpr) -> WeightExpr {
        self + &(-rhs)
    }
}

impl Sub for WeightExpr {
    type Output = WeightExpr;
    fn sub(self, rhs: WeightExpr) -> WeightExpr {
        &self - &rhs
    }
}

impl Neg for &WeightExpr {
    type Output = WeightExpr;
    fn neg(self) -> WeightExpr {
        self.scale(-1)
    }
}

impl Neg for WeightExpr {
    type Output = WeightExpr;
    fn neg(self) -> WeightExpr {
        self.scale(-1)
    }
}

impl WeightExpr {
    /// Renders with the given symbol names; symbols past the end of `names`
    /// fall back to `mu1`, `mu2`, ...
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> Named<'a> {
        Named { w: self, names }
    }
}

/// Display adaptor returned by [`WeightExpr::display_with`].
pub struct Named<'a> {
    w: &'a WeightExpr,
    names: &'a [String],
}

pub(crate) fn symbol_name(names: &[String], j: usize) -> String {
    names
        .get(j)
        .cloned()
        .unwrap_or_else(|| format!("mu{}", j + 1))
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (&j, &a) in &self.w.sym_coeffs {
            let sign = if a < 0 { "-" } else { "+" };
            if first {
                if a < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if a.abs() != 1 {
                write!(f, "{}*", a.abs())?;
            }
            write!(f, "{}", symbol_name(self.names, j))?;
            first = false;
        }
        let offset = self.w.offset;
        if first {
            write!(f, "{offset}")
        } else if offset != 0 {
            let sign = if offset < 0 { "-" } else { "+" };
            write!(f, " {sign} {}", offset.abs())
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for WeightExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&[]).fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_drops_zero_coefficients() {
        let mu = WeightExpr::symbol(0);
        let lam = WeightExpr::symbol(1);
        let w = &(&mu + &lam) - &lam;
        assert_eq!(w, mu);
        assert_eq!(&mu - &mu, WeightExpr::constant(0));
        assert!((&mu - &mu).is_zero());
    }

    #[test]
    fn q_power_encodes_offset_and_symbols() {
        let w = WeightExpr::from_parts([(0, 1), (2, -2)], 3);
        let m = w.q_power();
        assert_eq!(m.q_exp(), 3);
        assert_eq!(m.t_exp(0), 1);
        assert_eq!(m.t_exp(1), 0);
        assert_eq!(m.t_exp(2), -2);
    }

    #[test]
    fn display() {
        assert_eq!(
            WeightExpr::from_parts([(0, 1), (1, 1)], -1).to_string(),
            "mu1 + mu2 - 1"
        );
        assert_eq!(WeightExpr::from_parts([(0, -2)], 0).to_string(), "-2*mu1");
        assert_eq!(WeightExpr::constant(-3).to_string(), "-3");
    }

    #[test]
    fn specialize_folds_into_offset() {
        let w = WeightExpr::from_parts([(0, 1), (1, 2)], -1);
        let s = w.specialize(&[(1, -3)].into_iter().collect());
        assert_eq!(s, WeightExpr::from_parts([(0, 1)], -7));
    }
}
