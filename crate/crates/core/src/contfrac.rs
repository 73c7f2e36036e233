//! Exact continued fractions: the ceiling-based Euclidean algorithm,
//! evaluation of negative and regular expansions, and the conversion
//! between them.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    num: BigInt,
    den: BigInt,
}

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Rational { num, den })
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Rational { num: n.into(), den: BigInt::one() }
    }

    pub fn num(&self) -> &BigInt {
        &self.num
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Coefficients of `q1 - 1/(q2 - 1/(...))`, with `q_i >= 2` for `i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NegCF(Vec<BigInt>);

impl NegCF {
    pub fn new(qs: Vec<BigInt>) -> Result<Self> {
        if qs.is_empty() {
            return Err(Error::Domain("negative continued fraction needs at least one entry".into()));
        }
        let two = BigInt::from(2);
        if let Some(i) = qs.iter().skip(1).position(|q| q < &two) {
            return Err(Error::Domain(format!("entry {} is below 2", i + 1)));
        }
        Ok(NegCF(qs))
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<BigInt> {
        self.0
    }
}

/// Coefficients of `a1 + 1/(a2 + 1/(...))`, even length, `a_i >= 1` for `i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RegCF(Vec<BigInt>);

impl RegCF {
    pub fn new(a: Vec<BigInt>) -> Result<Self> {
        if a.is_empty() || !a.len().is_multiple_of(2) {
            return Err(Error::Domain(format!(
                "regular continued fraction must have even positive length, got {}",
                a.len()
            )));
        }
        if let Some(i) = a.iter().skip(1).position(|x| !x.is_positive()) {
            return Err(Error::Domain(format!("entry {} is below 1", i + 1)));
        }
        Ok(RegCF(a))
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }
}

/// Ceiling-division chain for `a/c`: `q1 = ceil(a/c)`, then ceilings of
/// successive remainder ratios until the remainder vanishes.
pub fn negative_euclid(a: &BigInt, c: &BigInt) -> Result<NegCF> {
    if !c.is_positive() {
        return Err(Error::Domain(format!("denominator must be positive, got {c}")));
    }
    if !a.gcd(c).is_one() {
        return Err(Error::Gcd { a: a.clone(), c: c.clone() });
    }
    let (mut x, mut y) = (a.clone(), c.clone());
    let mut qs = Vec::new();
    while y.is_positive() {
        let q = Integer::div_ceil(&x, &y);
        let r = &q * &y - &x;
        x = std::mem::replace(&mut y, r);
        qs.push(q);
    }
    Ok(NegCF(qs))
}

/// Evaluates right to left; any zero tail is reported instead of treated as infinity.
pub fn ncf_eval(qs: &[BigInt]) -> Result<Rational> {
    let (last, rest) = qs
        .split_last()
        .ok_or_else(|| Error::Domain("empty negative continued fraction".into()))?;
    let (mut num, mut den) = (last.clone(), BigInt::one());
    for q in rest.iter().rev() {
        if num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // q - den/num
        let next = q * &num - &den;
        den = num;
        num = next;
    }
    Rational::new(num, den)
}

pub fn regcf_eval(cf: &RegCF) -> Rational {
    let (last, rest) = cf.0.split_last().expect("RegCF is non-empty");
    let (mut num, mut den) = (last.clone(), BigInt::one());
    for a in rest.iter().rev() {
        let next = a * &num + &den;
        den = num;
        num = next;
    }
    Rational::new(num, den).expect("tails of a regular expansion are positive")
}

/// `(a1+1, 2 x (a2-1), a3+2, 2 x (a4-1), ..., a_{2m-1}+2, 2 x (a_{2m}-1))`.
pub fn regcf_to_ncf(cf: &RegCF) -> NegCF {
    let two = BigInt::from(2);
    let mut out = Vec::new();
    for (i, pair) in cf.0.chunks(2).enumerate() {
        let bump = if i == 0 { BigInt::one() } else { two.clone() };
        out.push(&pair[0] + bump);
        let twos = &pair[1] - 1;
        let mut k = BigInt::zero();
        while k < twos {
            out.push(two.clone());
            k += 1;
        }
    }
    NegCF(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn euclid_examples() {
        let ne = |a: i64, c: i64| negative_euclid(&a.into(), &c.into()).map(NegCF::into_vec);
        assert_eq!(ne(17, 7).unwrap(), b(&[3, 2, 4]));
        assert_eq!(ne(-60, 23).unwrap(), b(&[-2, 2, 3, 5]));
        assert_eq!(ne(5, 1).unwrap(), b(&[5]));
        assert!(matches!(ne(6, 4), Err(Error::Gcd { .. })));
        assert!(matches!(ne(3, 0), Err(Error::Domain(_))));
        assert!(matches!(ne(3, -2), Err(Error::Domain(_))));
    }

    #[test]
    fn ncf_eval_examples() {
        assert_eq!(ncf_eval(&b(&[3, 2, 4])).unwrap(), q(17, 7));
        assert_eq!(ncf_eval(&b(&[5])).unwrap(), q(5, 1));
        assert_eq!(ncf_eval(&b(&[0, 3, 2, 2, 2])).unwrap(), q(-4, 9));
        assert_eq!(ncf_eval(&b(&[3, 1, 1])), Err(Error::DivisionByZero));
    }

    #[test]
    fn regcf_examples() {
        let r = |v: &[i64]| RegCF::new(b(v)).unwrap();
        assert_eq!(regcf_eval(&r(&[2, 3])), q(7, 3));
        assert_eq!(regcf_eval(&r(&[0, 1])), q(1, 1));
        assert_eq!(regcf_eval(&r(&[-3, 2])), q(-5, 2));
        assert_eq!(regcf_to_ncf(&r(&[2, 3])).into_vec(), b(&[3, 2, 2]));
        assert_eq!(regcf_to_ncf(&r(&[0, 1])).into_vec(), b(&[1]));
        assert_eq!(regcf_to_ncf(&r(&[1, 1, 1, 1])).into_vec(), b(&[2, 3]));
        assert!(RegCF::new(b(&[1, 2, 3])).is_err());
        assert!(RegCF::new(b(&[1, 0])).is_err());
    }

    #[test]
    fn negcf_invariant() {
        assert!(NegCF::new(b(&[-7, 2, 9])).is_ok());
        assert!(NegCF::new(b(&[3, 1])).is_err());
        assert!(NegCF::new(vec![]).is_err());
    }
}
