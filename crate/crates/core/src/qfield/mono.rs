use std::fmt;

use super::MAX_SYMBOLS;

pub(crate) const NVARS: usize = MAX_SYMBOLS + 1;

/// `q^{q_exp} * prod_j t_j^{t_exps[j]}`.
///
/// Exponents are stored in a fixed array with `q` first, so the derived
/// ordering is lexicographic on `(q_exp, t_exps)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentMono {
    exps: [i32; NVARS],
}

impl LaurentMono {
    pub const ONE: LaurentMono = LaurentMono { exps: [0; NVARS] };

    pub fn from_exps(exps: [i32; NVARS]) -> Self {
        Self { exps }
    }

    pub fn q_pow(e: i32) -> Self {
        let mut exps = [0; NVARS];
        exps[0] = e;
        Self { exps }
    }

    pub fn t_pow(symbol: usize, e: i32) -> Self {
        let mut exps = [0; NVARS];
        exps[symbol + 1] = e;
        Self { exps }
    }

    pub fn new(q_exp: i32, t_exps: &[i32]) -> Self {
        assert!(t_exps.len() <= MAX_SYMBOLS, "too many weight symbols");
        let mut exps = [0; NVARS];
        exps[0] = q_exp;
        exps[1..=t_exps.len()].copy_from_slice(t_exps);
        Self { exps }
    }

    pub fn q_exp(&self) -> i32 {
        self.exps[0]
    }

    pub fn t_exp(&self, symbol: usize) -> i32 {
        self.exps[symbol + 1]
    }

    /// The t-exponents trimmed to `n` symbols.
    pub fn t_exps(&self, n: usize) -> &[i32] {
        &self.exps[1..=n]
    }

    pub(crate) fn exps(&self) -> &[i32; NVARS] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps == [0; NVARS]
    }

    /// Highest weight symbol index with a nonzero exponent, plus one.
    pub fn symbol_count(&self) -> usize {
        (1..NVARS).rev().find(|&v| self.exps[v] != 0).unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e += o;
        }
        Self { exps }
    }

    pub fn div(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e -= o;
        }
        Self { exps }
    }

    pub fn inv(&self) -> Self {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            *e = -*e;
        }
        Self { exps }
    }

    pub fn pow(&self, n: i32) -> Self {
        let mut exps = self.exps;
        for e in exps.iter_mut() {
            *e *= n;
        }
        Self { exps }
    }

    /// Componentwise minimum.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps.iter()) {
            *e = (*e).min(*o);
        }
        Self { exps }
    }

    pub(crate) fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// Replaces `t_j` by `q^{c_j}` for every assigned symbol.
    pub fn substitute(&self, assignment: &[Option<i64>; MAX_SYMBOLS]) -> Self {
        let mut exps = self.exps;
        let mut q = i64::from(exps[0]);
        for (j, c) in assignment.iter().enumerate() {
            if let Some(c) = c {
                q += c * i64::from(exps[j + 1]);
                exps[j + 1] = 0;
            }
        }
        exps[0] = i32::try_from(q).expect("exponent overflow in specialization");
        Self { exps }
    }
}

impl fmt::Display for LaurentMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if v == 0 {
                write!(f, "q")?;
            } else {
                write!(f, "t{v}")?;
            }
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}
