use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::cyclotomic::{cyclotomic, minus_one_orders, plus_one_orders};
use super::{Coeff, LaurentMono, LaurentPoly, MAX_SYMBOLS};
use crate::error::{Error, Result};

type Factor = Arc<LaurentPoly>;

/// An exact element of `Q(q, t_1, .., t_n)`.
///
/// Stored in partially factored form
/// `coeff * mono * prod_f f^{e_f}` where each `f` is a normalized polynomial
/// (no monomial content, primitive integer coefficients, positive leading
/// coefficient) and `e_f` is a nonzero integer. Binomials are split into
/// cyclotomic pieces on entry, so the quantum integers that drive every
/// computation here arrive as products of irreducibles and cancel
/// structurally. Other factors stay opaque.
///
/// The representation is not canonical. Equality is decided by exact
/// subtraction over a common denominator, which is cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFn {
    coeff: Coeff,
    mono: LaurentMono,
    factors: BTreeMap<Factor, i32>,
}

impl RationalFn {
    pub fn zero() -> Self {
        Self {
            coeff: Coeff::Small(0),
            mono: LaurentMono::ONE,
            factors: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::unit(Coeff::Small(c), LaurentMono::ONE)
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::unit(Coeff::from_big(c), LaurentMono::ONE)
    }

    pub fn monomial(m: LaurentMono) -> Self {
        Self::unit(Coeff::Small(1), m)
    }

    pub fn q_pow(e: i32) -> Self {
        Self::monomial(LaurentMono::q_pow(e))
    }

    fn unit(coeff: Coeff, mono: LaurentMono) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            coeff,
            mono,
            factors: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (coeff, mono, pieces) = split(p);
        let mut out = Self::unit(coeff, mono);
        for f in pieces {
            *out.factors.entry(Arc::new(f)).or_insert(0) += 1;
        }
        out
    }

    pub fn from_num_den(num: &LaurentPoly, den: &LaurentPoly) -> Result<Self> {
        Self::from_poly(num).checked_div(&Self::from_poly(den))
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    pub fn is_one(&self) -> bool {
        (self - &Self::one()).is_zero()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self {
            coeff: self.coeff.recip(),
            mono: self.mono.inv(),
            factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect(),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        if n == 0 {
            return Ok(Self::one());
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        Ok(Self {
            coeff: (1..n).fold(self.coeff.clone(), |acc, _| &acc * &self.coeff),
            mono: self.mono.pow(n),
            factors: self
                .factors
                .iter()
                .map(|(f, e)| (f.clone(), e * n))
                .collect(),
        })
    }

    /// Expanded numerator, carrying the scalar and monomial part.
    pub fn numerator(&self) -> LaurentPoly {
        if self.is_zero() {
            return LaurentPoly::zero();
        }
        let mut acc = LaurentPoly::monomial(self.coeff.clone(), self.mono);
        for (f, &e) in &self.factors {
            if e > 0 {
                acc = &acc * &f.pow(e as u32);
            }
        }
        acc
    }

    /// Expanded denominator; a product of normalized factors.
    pub fn denominator(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (f, &e) in &self.factors {
            if e < 0 {
                acc = &acc * &f.pow(e.unsigned_abs());
            }
        }
        acc
    }

    /// The value as a Laurent polynomial when no denominator factor remains.
    pub fn as_laurent_poly(&self) -> Option<LaurentPoly> {
        if self.factors.values().any(|&e| e < 0) {
            None
        } else {
            Some(self.numerator())
        }
    }

    /// Literal cross-multiplication test `num_a * den_b == num_b * den_a`
    /// on the expanded forms.
    pub fn cross_multiplied_eq(&self, other: &Self) -> bool {
        &self.numerator() * &other.denominator() == &other.numerator() * &self.denominator()
    }

    /// Highest weight symbol index referenced, plus one.
    pub fn symbol_count(&self) -> usize {
        self.factors
            .keys()
            .map(|f| f.symbol_count())
            .chain(std::iter::once(self.mono.symbol_count()))
            .max()
            .unwrap_or(0)
    }

    /// Substitutes `t_j -> q^{c_j}` for each assigned symbol.
    ///
    /// A denominator factor that vanishes identically is reported as a pole;
    /// no attempt is made to detect removable singularities.
    pub fn specialize(&self, assignment: &BTreeMap<usize, i64>) -> Result<Self> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let mut slots = [None; MAX_SYMBOLS];
        for (&j, &c) in assignment {
            if j >= MAX_SYMBOLS {
                return Err(Error::TooManySymbols(j));
            }
            slots[j] = Some(c);
        }
        let mut pieces = Vec::with_capacity(self.factors.len());
        for (f, &e) in &self.factors {
            let s = f.substitute(&slots);
            if s.is_zero() && e < 0 {
                return Err(Error::Pole {
                    denominator: f.to_string(),
                });
            }
            pieces.push((s, e));
        }
        if pieces.iter().any(|(s, _)| s.is_zero()) {
            return Ok(Self::zero());
        }
        let mut out = Self::unit(self.coeff.clone(), self.mono.substitute(&slots));
        for (s, e) in pieces {
            out = &out * &Self::from_poly(&s).pow(e)?;
        }
        Ok(out)
    }

    /// Exact sum of many terms over one common denominator.
    pub fn sum<'a>(terms: impl IntoIterator<Item = &'a RationalFn>) -> Self {
        let terms: Vec<&RationalFn> = terms.into_iter().filter(|t| !t.is_zero()).collect();
        match terms.len() {
            0 => return Self::zero(),
            1 => return terms[0].clone(),
            _ => {}
        }

        // common part: componentwise minimum of monomials and factor exponents
        let g_mono = terms
            .iter()
            .skip(1)
            .fold(terms[0].mono, |acc, t| acc.gcd(&t.mono));
        let keys: BTreeSet<&Factor> = terms.iter().flat_map(|t| t.factors.keys()).collect();
        let mut g_factors: BTreeMap<Factor, i32> = BTreeMap::new();
        for key in keys {
            let e = terms
                .iter()
                .map(|t| t.factors.get(key).copied().unwrap_or(0))
                .min()
                .unwrap_or(0);
            g_factors.insert(key.clone(), e);
        }

        let mut all_terms = Vec::new();
        for t in &terms {
            let mut acc = LaurentPoly::monomial(t.coeff.clone(), t.mono.div(&g_mono));
            for (f, &ge) in &g_factors {
                let e = t.factors.get(f).copied().unwrap_or(0) - ge;
                if e > 0 {
                    acc = &acc * &f.pow(e as u32);
                }
            }
            all_terms.extend(acc.terms().map(|(m, c)| (*m, c.clone())));
        }
        let s = LaurentPoly::from_terms(all_terms);
        if s.is_zero() {
            return Self::zero();
        }

        let (c, m, mut rest) = normalize(&s);
        for (f, ge) in g_factors.iter_mut() {
            while *ge < 0 && !rest.is_one() && f.len() <= rest.len() {
                match rest.exact_div(f) {
                    Some(quo) => {
                        rest = quo;
                        *ge += 1;
                    }
                    None => break,
                }
            }
        }
        g_factors.retain(|_, e| *e != 0);

        let common = Self {
            coeff: Coeff::Small(1),
            mono: g_mono,
            factors: g_factors,
        };
        let mut out = &common * &Self::from_poly(&rest);
        out.coeff = &out.coeff * &c;
        out.mono = out.mono.mul(&m);
        out
    }
}

/// Writes `p = c * m * p'` with `p'` normalized: no monomial content,
/// primitive integer coefficients, positive leading coefficient.
pub(crate) fn normalize(p: &LaurentPoly) -> (Coeff, LaurentMono, LaurentPoly) {
    debug_assert!(!p.is_zero());
    let m = p.min_mono();
    let shifted = p.mul_mono(&m.inv());
    let mut content = content(&shifted);
    if shifted
        .leading()
        .map(|(_, c)| c.is_negative())
        .unwrap_or(false)
    {
        content = -&content;
    }
    let normalized = if content.is_one() {
        shifted
    } else {
        shifted.scale(&content.recip())
    };
    (content, m, normalized)
}

/// Positive rational `c` with `p / c` primitive over the integers.
fn content(p: &LaurentPoly) -> Coeff {
    let mut g: u64 = 0;
    let mut small = true;
    for (_, c) in p.terms() {
        match c {
            Coeff::Small(v) => g = g.gcd(&v.unsigned_abs()),
            Coeff::Big(_) => {
                small = false;
                break;
            }
        }
    }
    if small {
        if let Ok(g) = i64::try_from(g) {
            return Coeff::Small(g);
        }
    }
    let mut num_gcd = BigInt::zero();
    let mut den_lcm = BigInt::one();
    for (_, c) in p.terms() {
        num_gcd = num_gcd.gcd(&c.numer());
        den_lcm = den_lcm.lcm(&c.denom());
    }
    Coeff::from_big(BigRational::new(num_gcd, den_lcm))
}

/// Normalizes `p` and splits binomials `X +- 1` into cyclotomic pieces.
fn split(p: &LaurentPoly) -> (Coeff, LaurentMono, Vec<LaurentPoly>) {
    let (mut c, mut m, p) = normalize(p);
    if p.is_one() {
        return (c, m, Vec::new());
    }
    if p.len() != 2 {
        return (c, m, vec![p]);
    }
    let (lo_m, lo_neg, hi_m, is_unit_binomial) = {
        let mut it = p.terms();
        let (lo_m, lo_c) = it.next().unwrap();
        let (hi_m, hi_c) = it.next().unwrap();
        (
            *lo_m,
            lo_c.is_negative(),
            *hi_m,
            hi_c.is_one() && lo_c.abs().is_one(),
        )
    };
    if !is_unit_binomial {
        return (c, m, vec![p]);
    }
    let x = hi_m.div(&lo_m);
    let g = x
        .exps()
        .iter()
        .fold(0u32, |acc, &e| acc.gcd(&e.unsigned_abs()));
    let mut y_exps = *x.exps();
    for e in y_exps.iter_mut() {
        *e /= g as i32;
    }
    let y = LaurentMono::from_exps(y_exps);
    let orders = if lo_neg {
        minus_one_orders(g)
    } else {
        plus_one_orders(g)
    };
    m = m.mul(&lo_m);
    let mut pieces = Vec::with_capacity(orders.len());
    for d in orders {
        let phi = LaurentPoly::from_terms(
            cyclotomic(d)
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(i, &a)| (y.pow(i as i32), Coeff::Small(a))),
        );
        let (pc, pm, pn) = normalize(&phi);
        c = &c * &pc;
        m = m.mul(&pm);
        pieces.push(pn);
    }
    (c, m, pieces)
}

impl Default for RationalFn {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for RationalFn {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<&LaurentPoly> for RationalFn {
    fn from(p: &LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        if self.coeff == other.coeff && self.mono == other.mono && self.factors == other.factors {
            return true;
        }
        (self - other).is_zero()
    }
}

impl Eq for RationalFn {}

impl Mul for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        let mut factors = self.factors.clone();
        for (f, e) in &rhs.factors {
            let slot = factors.entry(f.clone()).or_insert(0);
            *slot += e;
            if *slot == 0 {
                factors.remove(f);
            }
        }
        RationalFn {
            coeff: &self.coeff * &rhs.coeff,
            mono: self.mono.mul(&rhs.mono),
            factors,
        }
    }
}

impl Add for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::sum([self, rhs])
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        let mut out = self.clone();
        out.coeff = -&out.coeff;
        out
    }
}

impl Sub for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::sum([self, &-rhs])
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for RationalFn {
            type Output = RationalFn;
            fn $f(self, rhs: RationalFn) -> RationalFn {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

/// Renders `num` or `(num)/(den)` from the expanded forms.
impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.numerator();
        let den = self.denominator();
        if den.is_one() {
            write!(f, "{num}")
        } else if num.len() == 1 {
            write!(f, "{num}/({den})")
        } else {
            write!(f, "({num})/({den})")
        }
    }
}
