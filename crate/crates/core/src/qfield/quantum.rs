//! Quantum integers, factorials and binomials.

use super::{Coeff, LaurentMono, LaurentPoly, RationalFn, WeightExpr};
use crate::error::{Error, Result};

/// `[w] = (q^w - q^-w) / (q - q^-1)`.
pub fn qint(w: &WeightExpr) -> RationalFn {
    if w.is_zero() {
        return RationalFn::zero();
    }
    let m = w.q_power();
    let num = LaurentPoly::from_terms([(m, Coeff::Small(1)), (m.inv(), Coeff::Small(-1))]);
    RationalFn::from_poly(&num)
        .checked_div(&RationalFn::from_poly(&q_minus_q_inv()))
        .expect("q - q^-1 is nonzero")
}

pub fn qint_int(k: i64) -> RationalFn {
    qint(&WeightExpr::constant(k))
}

fn q_minus_q_inv() -> LaurentPoly {
    LaurentPoly::from_terms([
        (LaurentMono::q_pow(1), Coeff::Small(1)),
        (LaurentMono::q_pow(-1), Coeff::Small(-1)),
    ])
}

/// `[k]! = [k][k-1]..[1]`, with `[0]! = 1`.
pub fn qfactorial(k: u32) -> LaurentPoly {
    let mut acc = RationalFn::one();
    for i in 1..=i64::from(k) {
        acc = &acc * &qint_int(i);
    }
    acc.as_laurent_poly()
        .expect("quantum factorial is a Laurent polynomial")
}

/// `[k]! / ([l]! [k-l]!)` for `0 <= l <= k`.
pub fn qbinomial(k: i64, l: i64) -> Result<RationalFn> {
    if k < 0 || l < 0 || l > k {
        return Err(Error::InvalidBinomial { k, l });
    }
    let mut acc = RationalFn::one();
    // [k][k-1]..[k-l+1] / [l]!
    for i in 0..l {
        acc = &acc * &qint_int(k - i);
        acc = acc.checked_div(&qint_int(i + 1))?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn qpoly(coeffs: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            coeffs
                .iter()
                .map(|&(e, c)| (LaurentMono::q_pow(e), Coeff::Small(c))),
        )
    }

    #[test]
    fn qint_small_values() {
        assert!(qint_int(0).is_zero());
        assert_eq!(qint_int(1), RationalFn::one());
        assert_eq!(
            qint_int(2).as_laurent_poly(),
            Some(qpoly(&[(1, 1), (-1, 1)]))
        );
        assert_eq!(
            qint_int(-2).as_laurent_poly(),
            Some(qpoly(&[(1, -1), (-1, -1)]))
        );
    }

    #[test]
    fn qint_symbolic_matches_direct_substitution() {
        // [mu1 - 1] = (t1 q^-1 - t1^-1 q) / (q - q^-1)
        let w = WeightExpr::symbol(0).shift(-1);
        let num = LaurentPoly::from_terms([
            (LaurentMono::new(-1, &[1]), Coeff::Small(1)),
            (LaurentMono::new(1, &[-1]), Coeff::Small(-1)),
        ]);
        let expected = RationalFn::from_num_den(&num, &q_minus_q_inv()).unwrap();
        assert_eq!(qint(&w), expected);
        assert!(qint(&w).cross_multiplied_eq(&expected));
    }

    #[test]
    fn factorial_values() {
        assert_eq!(qfactorial(0), LaurentPoly::one());
        assert_eq!(qfactorial(1), LaurentPoly::one());
        assert_eq!(qfactorial(2), qpoly(&[(1, 1), (-1, 1)]));
        assert_eq!(qfactorial(3), qpoly(&[(3, 1), (1, 2), (-1, 2), (-3, 1)]));
    }

    #[test]
    fn factorial_matches_numeric_evaluation() {
        // [3]! at q = 3/2 from the defining quotient, evaluated in Q
        let q = BigRational::new(BigInt::from(3), BigInt::from(2));
        let qint_at = |k: i32| {
            let qk = super::super::poly::rational_pow(&q, k);
            let qmk = super::super::poly::rational_pow(&q, -k);
            (qk - qmk) / (&q - q.recip())
        };
        let expected = qint_at(3) * qint_at(2) * qint_at(1);
        assert_eq!(qfactorial(3).eval(&q, &[]), expected);
    }

    #[test]
    fn binomial_values() {
        assert!(qbinomial(5, 0).unwrap().is_one());
        assert!(qbinomial(5, 5).unwrap().is_one());
        assert_eq!(qbinomial(2, 1).unwrap(), qint_int(2));
        assert_eq!(
            qbinomial(3, 1).unwrap().as_laurent_poly(),
            Some(qpoly(&[(2, 1), (0, 1), (-2, 1)]))
        );
        // via one Pascal step: q^-2 [2 0] + q [2 1]
        let pascal = &(&RationalFn::q_pow(-2) * &qbinomial(2, 0).unwrap())
            + &(&RationalFn::q_pow(1) * &qbinomial(2, 1).unwrap());
        assert_eq!(qbinomial(3, 1).unwrap(), pascal);
    }

    #[test]
    fn binomial_domain_errors() {
        assert_eq!(qbinomial(2, 3), Err(Error::InvalidBinomial { k: 2, l: 3 }));
        assert!(qbinomial(-1, 0).is_err());
        assert!(qbinomial(3, -1).is_err());
    }

    #[test]
    fn binomials_are_laurent_polynomials() {
        for k in 0..=12 {
            for l in 0..=k {
                assert!(
                    qbinomial(k, l).unwrap().as_laurent_poly().is_some(),
                    "({k},{l})"
                );
            }
        }
    }

    #[test]
    fn zero_weight_is_zero() {
        assert!(qint(&WeightExpr::constant(0)).numerator().is_zero());
        assert_eq!(
            qint(&WeightExpr::constant(0)).numerator(),
            LaurentPoly::zero()
        );
    }
}
