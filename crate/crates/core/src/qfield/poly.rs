use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::{Coeff, LaurentMono, MAX_SYMBOLS};

/// Sparse Laurent polynomial in `q, t_1, .., t_n` with rational coefficients.
///
/// Terms are kept sorted ascending by monomial with no zero coefficients, so
/// the derived equality and ordering are structural.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: Vec<(LaurentMono, Coeff)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Coeff::Small(1), LaurentMono::ONE)
    }

    pub fn constant(c: Coeff) -> Self {
        Self::monomial(c, LaurentMono::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Coeff::Small(c))
    }

    pub fn monomial(c: Coeff, m: LaurentMono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn q() -> Self {
        Self::monomial(Coeff::Small(1), LaurentMono::q_pow(1))
    }

    pub fn t(symbol: usize) -> Self {
        Self::monomial(Coeff::Small(1), LaurentMono::t_pow(symbol, 1))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (LaurentMono, Coeff)>) -> Self {
        let mut terms: Vec<_> = terms.into_iter().collect();
        terms.sort_by_key(|t| t.0);
        Self::from_sorted_unmerged(terms)
    }

    fn from_sorted_unmerged(terms: Vec<(LaurentMono, Coeff)>) -> Self {
        let mut out: Vec<(LaurentMono, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    pub fn terms(
        &self,
    ) -> impl DoubleEndedIterator<Item = (&LaurentMono, &Coeff)> + ExactSizeIterator {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The single `(monomial, coefficient)` if this is a monomial.
    pub fn as_monomial(&self) -> Option<(&LaurentMono, &Coeff)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// Largest term in the lexicographic order.
    pub fn leading(&self) -> Option<(&LaurentMono, &Coeff)> {
        self.terms.last().map(|(m, c)| (m, c))
    }

    /// Componentwise minimum exponent over all terms.
    pub fn min_mono(&self) -> LaurentMono {
        let mut it = self.terms.iter();
        match it.next() {
            None => LaurentMono::ONE,
            Some((first, _)) => it.fold(*first, |acc, (m, _)| acc.gcd(m)),
        }
    }

    /// Number of weight symbols referenced (highest index + 1).
    pub fn symbol_count(&self) -> usize {
        self.terms
            .iter()
            .map(|(m, _)| m.symbol_count())
            .max()
            .unwrap_or(0)
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: &LaurentMono) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (a.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Replaces `t_j` by `q^{c_j}` for assigned symbols.
    pub fn substitute(&self, assignment: &[Option<i64>; MAX_SYMBOLS]) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.substitute(assignment), c.clone())),
        )
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if it exists.
    ///
    /// Both sides are shifted to ordinary polynomials with no monomial
    /// content and then divided with lexicographic long division. For a
    /// single divisor a zero remainder is equivalent to divisibility.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((m, c)) = divisor.as_monomial() {
            return Some(self.mul_mono(&m.inv()).scale(&c.recip()));
        }
        let a_shift = self.min_mono();
        let d_shift = divisor.min_mono();
        let d = divisor.mul_mono(&d_shift.inv());
        let (d_lead_m, d_lead_c) = d.leading().map(|(m, c)| (*m, c.clone()))?;
        let mut rem = self.mul_mono(&a_shift.inv());
        let mut quotient = Vec::new();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if !d_lead_m.divides(&rm) {
                return None;
            }
            let qm = rm.div(&d_lead_m);
            let qc = &rc / &d_lead_c;
            rem = &rem - &d.mul_mono(&qm).scale(&qc);
            quotient.push((qm, qc));
        }
        Some(Self::from_terms(quotient).mul_mono(&a_shift.div(&d_shift)))
    }

    /// Exact evaluation at rational `q` and `t_j` values (unassigned symbols
    /// are treated as 1). Used for numeric cross-checks.
    pub fn eval(&self, q: &BigRational, t: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.to_big();
            term *= rational_pow(q, m.q_exp());
            for (j, tv) in t.iter().enumerate() {
                term *= rational_pow(tv, m.t_exp(j));
            }
            acc += term;
        }
        acc
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((m, c)) = rhs.as_monomial() {
            return self.mul_mono(m).scale(c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return rhs.mul_mono(m).scale(c);
        }
        if let Some(p) = mul_dense(self, rhs) {
            return p;
        }
        // Each row (one term times the other factor) is already sorted, so
        // merge rows pairwise instead of sorting the whole product.
        let (short, long) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut rows: Vec<Vec<(LaurentMono, Coeff)>> = short
            .terms
            .iter()
            .map(|(ma, ca)| {
                long.terms
                    .iter()
                    .map(|(mb, cb)| (ma.mul(mb), ca * cb))
                    .collect()
            })
            .collect();
        while rows.len() > 1 {
            let mut next = Vec::with_capacity(rows.len().div_ceil(2));
            let mut it = rows.into_iter();
            while let Some(a) = it.next() {
                match it.next() {
                    Some(b) => next.push(merge_terms(a, b)),
                    None => next.push(a),
                }
            }
            rows = next;
        }
        let mut out = rows.pop().unwrap_or_default();
        out.retain(|(_, c)| !c.is_zero());
        LaurentPoly { terms: out }
    }
}

/// Convolution on `q` exponents when both operands are `t^a` times a
/// univariate polynomial in `q` and the result span is not too sparse.
fn mul_dense(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let ta = shared_t_part(a)?;
    let tb = shared_t_part(b)?;
    let q_range = |p: &LaurentPoly| (p.terms[0].0.q_exp(), p.terms[p.terms.len() - 1].0.q_exp());
    let ((alo, ahi), (blo, bhi)) = (q_range(a), q_range(b));
    let span = (ahi - alo + bhi - blo) as usize + 1;
    if span > 4 * a.terms.len() * b.terms.len() + 64 {
        return None;
    }
    let mut acc = vec![Coeff::Small(0); span];
    for (ma, ca) in &a.terms {
        for (mb, cb) in &b.terms {
            acc[(ma.q_exp() - alo + mb.q_exp() - blo) as usize] += &(ca * cb);
        }
    }
    let t = ta.mul(&tb);
    let terms = acc
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (LaurentMono::q_pow(alo + blo + i as i32).mul(&t), c))
        .collect();
    Some(LaurentPoly { terms })
}

/// The common `t`-part of every term, if there is one.
fn shared_t_part(p: &LaurentPoly) -> Option<LaurentMono> {
    let first = p.terms.first()?.0;
    let t = first.t_exps(MAX_SYMBOLS);
    p.terms
        .iter()
        .all(|(m, _)| m.t_exps(MAX_SYMBOLS) == t)
        .then(|| first.div(&LaurentMono::q_pow(first.q_exp())))
}

fn merge_terms(
    a: Vec<(LaurentMono, Coeff)>,
    b: Vec<(LaurentMono, Coeff)>,
) -> Vec<(LaurentMono, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut a = a.into_iter().peekable();
    let mut b = b.into_iter().peekable();
    loop {
        let ord = match (a.peek(), b.peek()) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            std::cmp::Ordering::Less => out.push(a.next().unwrap()),
            std::cmp::Ordering::Greater => out.push(b.next().unwrap()),
            std::cmp::Ordering::Equal => {
                let (m, mut c) = a.next().unwrap();
                c += &b.next().unwrap().1;
                out.push((m, c));
            }
        }
    }
    out
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

/// Terms are printed in descending monomial order.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> LaurentPoly {
        LaurentPoly::q()
    }

    fn qi(e: i32) -> LaurentPoly {
        LaurentPoly::monomial(Coeff::Small(1), LaurentMono::q_pow(e))
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = &q() + &qi(-1);
        let b = -&qi(-1);
        let s = &a + &b;
        assert_eq!(s, q());
        assert_eq!((&a - &a).len(), 0);
    }

    #[test]
    fn exact_division_detects_divisibility() {
        let t = LaurentPoly::t(0);
        let a = &t - &q();
        let b = &(&t * &t) + &q();
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        let c = &t + &LaurentPoly::one();
        assert_eq!(prod.exact_div(&c), None);
        // Laurent shifts on both sides
        let shifted = prod.mul_mono(&LaurentMono::new(-3, &[2]));
        let d = a.mul_mono(&LaurentMono::q_pow(5));
        let quo = shifted.exact_div(&d).unwrap();
        assert_eq!(&quo * &d, shifted);
    }

    #[test]
    fn display_descending() {
        let p = &(&q() - &qi(-1)) + &LaurentPoly::from_int(2);
        assert_eq!(p.to_string(), "q + 2 - q^-1");
        let m = LaurentPoly::monomial(
            &Coeff::Small(-3) / &Coeff::Small(2),
            LaurentMono::new(1, &[0, -1]),
        );
        assert_eq!(m.to_string(), "-3/2*q*t2^-1");
    }
}
