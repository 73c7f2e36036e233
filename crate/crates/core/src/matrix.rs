//! Exact 2x2 integer matrices, the projective representative used for
//! PSL(2,Z), continuant products and rotations of coefficient words.

use std::fmt;
use std::ops::{Index, Mul};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A raw 2x2 integer matrix, row-major. No determinant or sign constraint.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub d: BigInt,
}

impl IntMatrix {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Self {
        IntMatrix { a: a.into(), b: b.into(), c: c.into(), d: d.into() }
    }

    pub fn identity() -> Self {
        IntMatrix::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn negated(&self) -> Self {
        IntMatrix { a: -&self.a, b: -&self.b, c: -&self.c, d: -&self.d }
    }

    /// `Some(+1)` for `Id`, `Some(-1)` for `-Id`, `None` otherwise.
    pub fn scalar_sign(&self) -> Option<Sign> {
        if !self.b.is_zero() || !self.c.is_zero() || self.a != self.d {
            return None;
        }
        if self.a.is_one() {
            Some(Sign::Plus)
        } else if self.a == -BigInt::one() {
            Some(Sign::Minus)
        } else {
            None
        }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, r: &IntMatrix) -> IntMatrix {
        IntMatrix {
            a: &self.a * &r.a + &self.b * &r.c,
            b: &self.a * &r.b + &self.b * &r.d,
            c: &self.c * &r.a + &self.d * &r.c,
            d: &self.c * &r.b + &self.d * &r.d,
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// An element of PSL(2,Z), stored as the representative with `c > 0`,
/// or `c = 0` and `a > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    /// Builds the class of `((a,b),(c,d))`; fails unless `ad - bc = 1`.
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        psl_normalize(&IntMatrix::new(a, b, c, d))
    }

    pub fn identity() -> Self {
        Mat2 { a: BigInt::one(), b: BigInt::zero(), c: BigInt::zero(), d: BigInt::one() }
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn is_identity(&self) -> bool {
        self == &Mat2::identity()
    }

    pub fn raw(&self) -> IntMatrix {
        IntMatrix { a: self.a.clone(), b: self.b.clone(), c: self.c.clone(), d: self.d.clone() }
    }

    pub fn inverse(&self) -> Mat2 {
        normalize_unit(IntMatrix {
            a: self.d.clone(),
            b: -&self.b,
            c: -&self.c,
            d: self.a.clone(),
        })
    }

    /// `g * self * g^-1`.
    pub fn conjugated_by(&self, g: &Mat2) -> Mat2 {
        &(g * self) * &g.inverse()
    }

    /// Trace up to sign.
    pub fn abs_trace(&self) -> BigInt {
        (&self.a + &self.d).abs()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, r: &Mat2) -> Mat2 {
        normalize_unit(&self.raw() * &r.raw())
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// The sign of a quiddity cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

/// A finite coefficient sequence `(c1, ..., cn)` standing for `M(c1)...M(cn)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<BigInt>);

impl Word {
    pub fn new() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn first(&self) -> Option<&BigInt> {
        self.0.first()
    }

    pub fn last(&self) -> Option<&BigInt> {
        self.0.last()
    }

    /// Concatenation `self ++ other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        Word(v)
    }

    /// Entrywise negation.
    pub fn negated(&self) -> Word {
        Word(self.0.iter().map(|c| -c).collect())
    }

    /// Entries as `i64`, when every entry fits.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(|c| c.to_i64()).collect()
    }
}

impl Index<usize> for Word {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl From<Vec<BigInt>> for Word {
    fn from(v: Vec<BigInt>) -> Self {
        Word(v)
    }
}

impl From<&[i64]> for Word {
    fn from(v: &[i64]) -> Self {
        Word(v.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl<const N: usize> From<[i64; N]> for Word {
    fn from(v: [i64; N]) -> Self {
        Word::from(&v[..])
    }
}

impl From<Vec<i64>> for Word {
    fn from(v: Vec<i64>) -> Self {
        Word::from(&v[..])
    }
}

impl FromIterator<BigInt> for Word {
    fn from_iter<I: IntoIterator<Item = BigInt>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a Word {
    type Item = &'a BigInt;
    type IntoIter = std::slice::Iter<'a, BigInt>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// `M(c) = ((c, -1), (1, 0))`.
pub fn single(c: &BigInt) -> IntMatrix {
    IntMatrix { a: c.clone(), b: -BigInt::one(), c: BigInt::one(), d: BigInt::zero() }
}

/// Left-to-right product of the elementary matrices, without normalization.
pub fn continuant_raw(w: &Word) -> IntMatrix {
    let mut acc = IntMatrix::identity();
    for c in w {
        // right-multiplying by M(c) only needs the first column of acc
        let a = &acc.a * c + &acc.b;
        let cc = &acc.c * c + &acc.d;
        acc = IntMatrix { b: -std::mem::take(&mut acc.a), d: -std::mem::take(&mut acc.c), a, c: cc };
    }
    acc
}

pub fn continuant(w: &Word) -> Mat2 {
    normalize_unit(continuant_raw(w))
}

pub fn psl_normalize(m: &IntMatrix) -> Result<Mat2> {
    let det = m.det();
    if !det.is_one() {
        return Err(Error::Determinant { det });
    }
    Ok(normalize_unit(m.clone()))
}

// caller guarantees det = 1
fn normalize_unit(m: IntMatrix) -> Mat2 {
    let flip = m.c.is_negative() || (m.c.is_zero() && m.a.is_negative());
    let m = if flip { m.negated() } else { m };
    Mat2 { a: m.a, b: m.b, c: m.c, d: m.d }
}

pub fn psl_equal(x: &IntMatrix, y: &IntMatrix) -> Result<bool> {
    Ok(psl_normalize(x)? == psl_normalize(y)?)
}

pub fn quiddity_sign(w: &Word) -> Option<Sign> {
    continuant_raw(w).scalar_sign()
}

/// `(c_{k+1}, ..., c_n, c_1, ..., c_k)`, with `k` taken modulo the length.
pub fn rotate(w: &Word, k: i64) -> Word {
    let n = w.len();
    if n == 0 {
        return Word::new();
    }
    let k = k.rem_euclid(n as i64) as usize;
    let mut v = Vec::with_capacity(n);
    v.extend_from_slice(&w.0[k..]);
    v.extend_from_slice(&w.0[..k]);
    Word(v)
}
