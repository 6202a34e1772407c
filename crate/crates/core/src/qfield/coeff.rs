use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, ParseRatioError};
use num_traits::{One, Signed, ToPrimitive};

/// Exact rational coefficient with an `i64` fast path.
///
/// Integers that fit in `i64` are always stored as `Small`, so structural
/// equality and hashing agree with numeric equality.
#[derive(Clone, Debug)]
pub enum Coeff {
    Small(i64),
    Big(BigRational),
}

impl Coeff {
    pub fn from_big(r: BigRational) -> Self {
        if r.is_integer() {
            if let Some(v) = r.numer().to_i64() {
                return Coeff::Small(v);
            }
        }
        Coeff::Big(r)
    }

    pub fn from_bigint(v: BigInt) -> Self {
        match v.to_i64() {
            Some(v) => Coeff::Small(v),
            None => Coeff::Big(BigRational::from_integer(v)),
        }
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Coeff::Small(v) => BigRational::from_integer(BigInt::from(*v)),
            Coeff::Big(r) => r.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coeff::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coeff::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Coeff::Small(v) => *v < 0,
            Coeff::Big(r) => r.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Coeff::Small(_) => true,
            Coeff::Big(r) => r.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        match self {
            Coeff::Small(v) => v
                .checked_abs()
                .map(Coeff::Small)
                .unwrap_or_else(|| Coeff::from_big(self.to_big().abs())),
            Coeff::Big(r) => Coeff::Big(r.abs()),
        }
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero coefficient");
        match self {
            Coeff::Small(1) => Coeff::Small(1),
            Coeff::Small(-1) => Coeff::Small(-1),
            _ => Coeff::from_big(self.to_big().recip()),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Coeff::Small(v) => BigInt::from(*v),
            Coeff::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Coeff::Small(_) => BigInt::one(),
            Coeff::Big(r) => r.denom().clone(),
        }
    }

    /// Exact quotient if `self / rhs` is an integer.
    pub(crate) fn div_integer(&self, rhs: &Coeff) -> Option<Coeff> {
        match (self, rhs) {
            (Coeff::Small(a), Coeff::Small(b)) if *b != 0 => {
                if a % b == 0 {
                    a.checked_div(*b).map(Coeff::Small)
                } else {
                    None
                }
            }
            _ => {
                let q = self.to_big() / rhs.to_big();
                q.is_integer().then(|| Coeff::from_big(q))
            }
        }
    }
}

impl From<i64> for Coeff {
    fn from(v: i64) -> Self {
        Coeff::Small(v)
    }
}

impl From<BigRational> for Coeff {
    fn from(r: BigRational) -> Self {
        Coeff::from_big(r)
    }
}

impl PartialEq for Coeff {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a == b,
            (Coeff::Big(a), Coeff::Big(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Coeff {}

impl Hash for Coeff {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Coeff::Small(v) => {
                0u8.hash(state);
                v.hash(state)
            }
            Coeff::Big(r) => {
                1u8.hash(state);
                r.hash(state)
            }
        }
    }
}

impl Ord for Coeff {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Coeff::Small(a), Coeff::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Coeff {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Coeff {
    type Output = Coeff;
    fn add(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_add(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() + rhs.to_big())
    }
}

impl AddAssign<&Coeff> for Coeff {
    fn add_assign(&mut self, rhs: &Coeff) {
        *self = &*self + rhs;
    }
}

impl Sub for &Coeff {
    type Output = Coeff;
    fn sub(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_sub(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() - rhs.to_big())
    }
}

impl Mul for &Coeff {
    type Output = Coeff;
    fn mul(self, rhs: &Coeff) -> Coeff {
        if let (Coeff::Small(a), Coeff::Small(b)) = (self, rhs) {
            if let Some(v) = a.checked_mul(*b) {
                return Coeff::Small(v);
            }
        }
        Coeff::from_big(self.to_big() * rhs.to_big())
    }
}

impl Div for &Coeff {
    type Output = Coeff;
    fn div(self, rhs: &Coeff) -> Coeff {
        assert!(!rhs.is_zero(), "division by zero coefficient");
        if let Some(q) = self.div_integer(rhs) {
            return q;
        }
        Coeff::from_big(self.to_big() / rhs.to_big())
    }
}

impl Neg for &Coeff {
    type Output = Coeff;
    fn neg(self) -> Coeff {
        match self {
            Coeff::Small(v) => v
                .checked_neg()
                .map(Coeff::Small)
                .unwrap_or_else(|| Coeff::from_big(-self.to_big())),
            Coeff::Big(r) => Coeff::Big(-r),
        }
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coeff::Small(v) => write!(f, "{v}"),
            Coeff::Big(r) => write!(f, "{r}"),
        }
    }
}

/// Parses `"a"` or `"a/b"`, the same format `Display` writes.
impl FromStr for Coeff {
    type Err = ParseRatioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.parse::<BigRational>().map(Coeff::from_big)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn overflow_promotes() {
        let a = Coeff::Small(i64::MAX);
        let s = &a + &Coeff::Small(1);
        assert!(matches!(s, Coeff::Big(_)));
        let back = &s - &Coeff::Small(1);
        assert_eq!(back, Coeff::Small(i64::MAX));
        let p = &a * &a;
        assert_eq!(p.to_big(), a.to_big() * a.to_big());
    }

    #[test]
    fn division() {
        assert_eq!(&Coeff::Small(6) / &Coeff::Small(3), Coeff::Small(2));
        let h = &Coeff::Small(1) / &Coeff::Small(2);
        assert!(!h.is_integer());
        assert_eq!(&h * &Coeff::Small(2), Coeff::Small(1));
        assert_eq!(Coeff::Small(7).div_integer(&Coeff::Small(2)), None);
    }

    proptest! {
        #[test]
        fn agrees_with_bigrational(a in any::<i64>(), b in any::<i64>(), c in 1i64..1000) {
            let (ca, cb) = (Coeff::Small(a), Coeff::Small(b));
            let (ra, rb) = (ca.to_big(), cb.to_big());
            prop_assert_eq!((&ca + &cb).to_big(), &ra + &rb);
            prop_assert_eq!((&ca - &cb).to_big(), &ra - &rb);
            prop_assert_eq!((&ca * &cb).to_big(), &ra * &rb);
            let cc = Coeff::Small(c);
            prop_assert_eq!((&ca / &cc).to_big(), &ra / cc.to_big());
            prop_assert_eq!(ca.cmp(&cb), ra.cmp(&rb));
        }
    }

    #[test]
    fn parse_round_trips_display() {
        for text in [
            "0",
            "-7",
            "3/2",
            "-5/12",
            "100000000000000000000000000001/3",
        ] {
            let c: Coeff = text.parse().unwrap();
            assert_eq!(c.to_string(), text);
        }
        assert_eq!("4/2".parse::<Coeff>().unwrap(), Coeff::Small(2));
        assert!("1/0".parse::<Coeff>().is_err());
        assert!("x".parse::<Coeff>().is_err());
    }
}
