//! Conjugacy classes: proper and pure cyclic words, reduction of a class to
//! a proper word, length-two normalization and a canonical representative.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::matrix::{continuant, rotate, Mat2, Word};
use crate::presentation::{is_minimal, minimal_presentation};

/// Canonical class representative.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassForm {
    /// Pure word of length at least 3 at its lexicographically least rotation.
    Cyclic(Word),
    /// Word of length at most 2.
    Short(Word),
}

impl ClassForm {
    pub fn word(&self) -> &Word {
        match self {
            ClassForm::Cyclic(w) | ClassForm::Short(w) => w,
        }
    }
}

impl fmt::Display for ClassForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassForm::Cyclic(w) => write!(f, "cyclic: {w}"),
            ClassForm::Short(w) => write!(f, "short: {w}"),
        }
    }
}

/// The first failed rule of properness, numbered 1 to 6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperViolation {
    pub rule: u8,
    pub pos: usize,
}

impl fmt::Display for ProperViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.rule {
            1 => "entry in {-1, 0, 1}",
            2 => "consecutive 2s",
            3 => "consecutive -2s",
            4 => "starts and ends with the same of 2 or -2",
            5 => "cyclic (2,3,...,3,2) or (-2,-3,...,-3,-2) run",
            _ => "rotation of (2,3,...,3) or (-2,-3,...,-3)",
        };
        write!(f, "rule {}: {} at {}", self.rule, what, self.pos)
    }
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn proper_violation(w: &Word) -> Option<ProperViolation> {
    let n = w.len();
    let v = w.as_slice();
    let two = int(2);
    let bad = |rule, pos| Some(ProperViolation { rule, pos });

    if let Some(i) = v.iter().position(|c| c.abs() <= BigInt::one()) {
        return bad(1, i);
    }
    for (rule, val) in [(2, two.clone()), (3, -&two)] {
        if let Some(i) = (0..n.saturating_sub(1)).find(|&i| v[i] == val && v[i + 1] == val) {
            return bad(rule, i);
        }
    }
    if n >= 1 && v[0] == v[n - 1] && v[0].abs() == two {
        return bad(4, 0);
    }
    for s in [1i64, -1] {
        let (edge, mid) = (int(2 * s), int(3 * s));
        for i in (0..n).filter(|&i| v[i] == edge) {
            let mut l = 0;
            while l + 2 <= n && v[(i + 1 + l) % n] == mid {
                l += 1;
            }
            if l + 2 <= n && v[(i + 1 + l) % n] == edge {
                return bad(5, i);
            }
        }
    }
    for s in [1i64, -1] {
        let (edge, mid) = (int(2 * s), int(3 * s));
        let edges: Vec<usize> = (0..n).filter(|&i| v[i] == edge).collect();
        if edges.len() == 1 && v.iter().filter(|c| **c == mid).count() == n - 1 {
            return bad(6, edges[0]);
        }
    }
    None
}

pub fn is_proper(w: &Word) -> bool {
    proper_violation(w).is_none()
}

pub fn is_pure(w: &Word) -> bool {
    is_proper(w) && !w.iter().any(|c| c == &int(-2))
}

/// `continuant(g) * a * continuant(g)^-1`.
pub fn conjugate_by_word(a: &Mat2, g: &Word) -> Mat2 {
    a.conjugated_by(&continuant(g))
}

fn is_rotation_shaped(w: &[BigInt], k: usize, shape: &[BigInt]) -> bool {
    let n = w.len();
    (0..n).all(|j| w[(k + j) % n] == shape[j])
}

/// A conjugate of shorter minimal length for a minimal word that is not
/// proper, or `None` if no rule applies.
fn shorter_conjugate(w: &Word) -> Option<Word> {
    let n = w.len();
    for k in 0..n {
        let r = rotate(w, k as i64);
        if !is_minimal(&r) {
            return Some(minimal_presentation(&continuant(&r)).into_word());
        }
    }

    let v = w.as_slice();
    let mut candidate: Option<Vec<BigInt>> = None;
    for s in [1i64, -1] {
        let (two, three) = (int(2 * s), int(3 * s));
        for k in 0..n {
            // (x, 2, 2) on three entries
            if n == 3 {
                let x = &v[k];
                let shape = [x.clone(), two.clone(), two.clone()];
                if is_rotation_shaped(v, k, &shape) {
                    candidate = Some(vec![int(-3 * s), x - int(2 * s)]);
                }
            }
            // (x, 2, 3 x l, 2) with one entry outside the run
            if n >= 4 {
                let x = &v[k];
                let mut shape = vec![x.clone(), two.clone()];
                shape.extend(std::iter::repeat_n(three.clone(), n - 3));
                shape.push(two.clone());
                if is_rotation_shaped(v, k, &shape) {
                    let mut c: Vec<BigInt> = std::iter::repeat_n(int(-3 * s), n - 2).collect();
                    c.push(x - int(2 * s));
                    candidate = Some(c);
                }
            }
            // (2, 3 x m)
            let mut shape = vec![two.clone()];
            shape.extend(std::iter::repeat_n(three.clone(), n - 1));
            if is_rotation_shaped(v, k, &shape) {
                let mut c: Vec<BigInt> = std::iter::repeat_n(int(-3 * s), n - 2).collect();
                c.push(int(-4 * s));
                candidate = Some(c);
            }
            if candidate.is_some() {
                break;
            }
        }
        if candidate.is_some() {
            break;
        }
    }
    candidate.map(|c| minimal_presentation(&continuant(&Word(c))).into_word())
}

/// A proper word of length at least 3 whose matrix is conjugate to `a`, or a
/// word of length at most 2 when the class has such a presentation.
pub fn properize(a: &Mat2) -> Word {
    let mut w = minimal_presentation(a).into_word();
    let mut budget = w.len();
    while w.len() >= 3 && !is_proper(&w) && budget > 0 {
        budget -= 1;
        match shorter_conjugate(&w) {
            Some(next) => {
                debug_assert!(next.len() < w.len());
                w = next;
            }
            None => break,
        }
    }
    w
}

/// Turns every `-2` into `2` by `(a, -2, b) -> (a+1, 2, b+1)`, rotating a
/// boundary `-2` inward first. Length and class are kept.
pub fn purify(w: &Word) -> Result<Word> {
    if w.len() < 3 {
        return Err(Error::NotProper(format!("length {} is below 3", w.len())));
    }
    if let Some(v) = proper_violation(w) {
        return Err(Error::NotProper(v.to_string()));
    }
    let minus_two = int(-2);
    let mut r = w.clone();
    let n = r.len();
    while let Some(i) = r.iter().rposition(|c| c == &minus_two) {
        let i = if i == 0 {
            r = rotate(&r, -1);
            1
        } else if i == n - 1 {
            r = rotate(&r, 1);
            n - 2
        } else {
            i
        };
        r.0[i - 1] += 1;
        r.0[i] = int(2);
        r.0[i + 1] += 1;
    }
    Ok(r)
}

fn least_rotation(w: &Word) -> Word {
    (0..w.len().max(1)).map(|k| rotate(w, k as i64)).min().unwrap_or_default()
}

/// A complete conjugacy invariant, independent of the word machinery above.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassInvariant {
    /// trace 0, or trace of absolute value 1 told apart by the abelian image
    Elliptic { abs_trace: u8, character: u8 },
    /// conjugate to `((1, n), (0, 1))`; `n = 0` is the identity
    Parabolic(BigInt),
    /// positive trace plus the least rotation of the period of the ceiling
    /// expansion of the expanding fixed point
    Hyperbolic { trace: BigInt, period: Vec<BigInt> },
}

/// Image in the abelianization `Z/6`, with `M(c) -> c + 3`.
pub fn abelian_character(a: &Mat2) -> u8 {
    let w = minimal_presentation(a).into_word();
    let total: BigInt = w.iter().map(|c| c + 3).sum();
    total.mod_floor(&int(6)).to_u8().expect("residue below 6")
}

pub fn class_invariant(a: &Mat2) -> ClassInvariant {
    // sign with non-negative trace
    let r = a.raw();
    let r = if (&r.a + &r.d).is_negative() { r.negated() } else { r };
    let tr = &r.a + &r.d;
    let two = int(2);

    if tr < two {
        return ClassInvariant::Elliptic {
            abs_trace: tr.to_u8().expect("0 or 1"),
            character: if tr.is_zero() { 3 } else { abelian_character(a) },
        };
    }
    if tr == two {
        let g = (&r.a - BigInt::one()).gcd(&r.b).gcd(&r.c);
        let n = if !r.b.is_zero() { g * r.b.signum() } else { -g * r.c.signum() };
        return ClassInvariant::Parabolic(n);
    }

    // expanding fixed point (p + sqrt(disc)) / q with q | disc - p^2
    let disc: BigInt = &tr * &tr - 4;
    let s: BigInt = disc.sqrt();
    let (mut p, mut q): (BigInt, BigInt) = (&r.a - &r.d, &r.c * 2);
    let mut seen = std::collections::HashMap::new();
    let mut digits = Vec::new();
    loop {
        if let Some(&start) = seen.get(&(p.clone(), q.clone())) {
            let period = least_rotation(&Word(digits[start..].to_vec())).0;
            return ClassInvariant::Hyperbolic { trace: tr, period };
        }
        seen.insert((p.clone(), q.clone()), digits.len());
        // the numerator is irrational, so the ceiling is floor + 1
        let fl: BigInt = if q.is_positive() {
            (&p + &s).div_floor(&q)
        } else {
            -((&p + &s).div_floor(&-&q) + BigInt::one())
        };
        let b = fl + 1;
        let rest = (&disc - &p * &p) / &q;
        let p1 = &b * &q - &p;
        let q1: BigInt = &b * &b * &q - &b * &p * 2 - rest;
        digits.push(b);
        p = p1;
        q = q1;
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let m = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            out.push(d.clone());
            out.push(&m / &d);
        }
        d += 1;
    }
    out
}

/// Every word of length 1 or 2 whose trace has absolute value `t`; for
/// parabolic classes only the zero-entry words of the given twist are added.
fn short_candidates(t: &BigInt, twist: Option<&BigInt>) -> Vec<Word> {
    let mut out = vec![Word(vec![t.clone()]), Word(vec![-t])];
    for prod in [t + 2, int(2) - t] {
        if prod.is_zero() {
            if let Some(n) = twist {
                out.push(Word(vec![BigInt::zero(), n.clone()]));
                out.push(Word(vec![n.clone(), BigInt::zero()]));
            }
            continue;
        }
        for x in divisors(&prod) {
            for sx in [x.clone(), -&x] {
                let y = &prod / &sx;
                out.push(Word(vec![sx, y]));
            }
        }
    }
    out
}

/// Canonical representative of a class with a presentation of length at
/// most 2: the shortest, then lexicographically least, word in the class
/// with no `1`, `-1` or `-2` in a length-2 word. The identity is `(0, 0)`.
pub fn short_normalize(w: &Word) -> ClassForm {
    assert!(w.len() <= 2, "short_normalize takes words of length at most 2");
    let a = continuant(w);
    if a.is_identity() {
        return ClassForm::Short(Word::from([0, 0]));
    }
    let key = class_invariant(&a);
    let twist = match &key {
        ClassInvariant::Parabolic(n) => Some(n.clone()),
        _ => None,
    };
    let banned = [int(1), int(-1), int(-2)];
    let best = short_candidates(&a.abs_trace(), twist.as_ref())
        .into_iter()
        .filter(|c| c.len() == 1 || !c.iter().any(|x| banned.contains(x)))
        .filter(|c| class_invariant(&continuant(c)) == key)
        .min_by(|x, y| (x.len(), x).cmp(&(y.len(), y)));
    ClassForm::Short(best.unwrap_or_else(|| least_rotation(w)))
}

pub fn canonical_class(a: &Mat2) -> ClassForm {
    let w = properize(a);
    if w.len() >= 3 {
        let pure = purify(&w).expect("properize returns a proper word");
        // M(3)^n and M(-3)^n are conjugate although both words are pure;
        // they are the only such pair, so the smaller spelling is used
        if pure.iter().all(|c| c == &int(3)) {
            return ClassForm::Cyclic(pure.negated());
        }
        ClassForm::Cyclic(least_rotation(&pure))
    } else {
        short_normalize(&w)
    }
}

pub fn are_conjugate(a: &Mat2, b: &Mat2) -> bool {
    canonical_class(a) == canonical_class(b)
}
