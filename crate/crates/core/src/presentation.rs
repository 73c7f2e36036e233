//! Presentations of a matrix as a continuant word: the staircase word read
//! off the negative continued fraction of the first column, the catalogue of
//! class-preserving rewrites, and the left-to-right reduction engine that
//! produces the canonical minimal word.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::contfrac::negative_euclid;
use crate::error::{Error, Result};
use crate::matrix::{Mat2, Word};

/// Rewrite kinds. Counts and parameters travel with the kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoveKind {
    /// `(a, 1, b) -> (a-1, b-1)`
    DropOne,
    /// `(a, -1, b) -> (a+1, b+1)`
    DropMinusOne,
    /// `(a, 0, b) -> (a+b)`
    DropZero,
    /// `(a, b) -> (a+1, 1, b+1)`, the new entry lands at `pos`
    InsertOne,
    /// `(a, b) -> (a-1, -1, b-1)`, the new entry lands at `pos`
    InsertMinusOne,
    /// `c -> (c-z, 0, z)`
    SplitZero(BigInt),
    /// `(a, -k, b) -> (a+1, 2 x (k-1), b+1)` for `k >= 2`
    ExpandNegative,
    /// `(a, 2 x k, b) -> (a-1, -(k+1), b-1)`
    CollapseTwos(usize),
    /// `(a, -2 x k, b) -> (a+1, k+1, b+1)`
    CollapseMinusTwos(usize),
    /// last entry `-k`: `(a, -k) -> (a+1, 2 x (k-1), 1, 0)`
    TailToStaircase,
    /// `(a, 2, 3 x l, 2, b) -> (a-1, -3 x (l+1), b-1)`
    Run232ToNeg(usize),
    /// `(a, -2, -3 x l, -2, b) -> (a+1, 3 x (l+1), b+1)`
    RunNeg232ToPos(usize),
}

/// One rewrite step anchored at a 0-based index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub pos: usize,
}

impl Move {
    pub fn new(kind: MoveKind, pos: usize) -> Self {
        Move { kind, pos }
    }
}

impl PartialOrd for Move {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Move {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.pos, &self.kind).cmp(&(other.pos, &other.kind))
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}@{}", self.kind, self.pos)
    }
}

/// `(q1, ..., qk, m, 0)` with `q_i >= 2` for `2 <= i <= k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StaircaseWord(Word);

impl StaircaseWord {
    pub fn new(w: Word) -> Result<Self> {
        let n = w.len();
        if n < 2 {
            return Err(Error::NotStaircase(format!("length {n} is below 2")));
        }
        if !w[n - 1].is_zero() {
            return Err(Error::NotStaircase("last entry is not 0".into()));
        }
        let two = BigInt::from(2);
        if let Some(i) = (1..n.saturating_sub(2)).find(|&i| w[i] < two) {
            return Err(Error::NotStaircase(format!("entry {i} is below 2")));
        }
        Ok(StaircaseWord(w))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }
}

/// Output of the reduction engine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MinimalWord(Word);

impl MinimalWord {
    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for MinimalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn staircase(a: &Mat2) -> StaircaseWord {
    let mut v: Vec<BigInt> = if a.c().is_zero() {
        // normalized with c = 0 means ((1, b), (0, 1))
        vec![a.b().clone()]
    } else {
        let mut qs = negative_euclid(a.a(), a.c())
            .expect("first column of a unimodular matrix is coprime")
            .into_vec();
        qs.push(Integer::div_ceil(a.d(), a.c()));
        qs
    };
    v.push(BigInt::zero());
    StaircaseWord(Word(v))
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

fn run_len(w: &[BigInt], start: usize, value: &BigInt) -> usize {
    w[start..].iter().take_while(|c| *c == value).count()
}

/// Every rewrite anchored at an existing entry, sorted by position then kind.
/// Insertions and zero splits apply anywhere; see [`expansion_moves`].
pub fn applicable_moves(w: &Word) -> Vec<Move> {
    let n = w.len();
    let v = w.as_slice();
    let (one, two, three) = (int(1), int(2), int(3));
    let mut out = Vec::new();

    for (i, c) in v.iter().enumerate().take(n.saturating_sub(1)).skip(1) {
        if c == &one {
            out.push(Move::new(MoveKind::DropOne, i));
        } else if c == &-&one {
            out.push(Move::new(MoveKind::DropMinusOne, i));
        } else if c.is_zero() {
            out.push(Move::new(MoveKind::DropZero, i));
        } else if c <= &-&two {
            out.push(Move::new(MoveKind::ExpandNegative, i));
        }
    }

    // maximal runs of 2 and of -2, clipped to inner positions
    for (target, kind) in [(two.clone(), 0), (-&two, 1)] {
        let mut i = 0;
        while i < n {
            if v[i] != target {
                i += 1;
                continue;
            }
            let len = run_len(v, i, &target);
            let lo = i.max(1);
            let hi = (i + len).min(n.saturating_sub(1));
            if lo < hi {
                let k = hi - lo;
                let mk = if kind == 0 { MoveKind::CollapseTwos(k) } else { MoveKind::CollapseMinusTwos(k) };
                out.push(Move::new(mk, lo));
            }
            i += len;
        }
    }

    for i in 1..n.saturating_sub(1) {
        for (edge, mid, neg) in [(&two, &three, false), (&-&two, &-&three, true)] {
            if &v[i] != edge {
                continue;
            }
            let l = run_len(v, i + 1, mid);
            let close = i + l + 1;
            if close + 1 < n && &v[close] == edge {
                let mk = if neg { MoveKind::RunNeg232ToPos(l) } else { MoveKind::Run232ToNeg(l) };
                out.push(Move::new(mk, i));
            }
        }
    }

    if n >= 2 && v[n - 1].is_negative() {
        out.push(Move::new(MoveKind::TailToStaircase, n - 1));
    }

    out.sort();
    out
}

/// Insertions at every gap and zero splits with parameter `z` at every entry.
pub fn expansion_moves(w: &Word, z: &BigInt) -> Vec<Move> {
    let n = w.len();
    let mut out = Vec::new();
    for i in 0..n {
        if i >= 1 {
            out.push(Move::new(MoveKind::InsertOne, i));
            out.push(Move::new(MoveKind::InsertMinusOne, i));
        }
        out.push(Move::new(MoveKind::SplitZero(z.clone()), i));
    }
    out.sort();
    out
}

fn splice(v: &[BigInt], from: usize, to: usize, mid: Vec<BigInt>) -> Word {
    let mut out = Vec::with_capacity(v.len() + mid.len());
    out.extend_from_slice(&v[..from]);
    out.extend(mid);
    out.extend_from_slice(&v[to..]);
    Word(out)
}

fn repeat(value: i64, k: usize) -> impl Iterator<Item = BigInt> {
    std::iter::repeat_n(int(value), k)
}

pub fn apply_move(w: &Word, mv: &Move) -> Result<Word> {
    let n = w.len();
    let v = w.as_slice();
    let i = mv.pos;
    let bad = || Error::InvalidMove { mv: mv.clone() };
    let inner = i >= 1 && i + 1 < n;
    let one = BigInt::one();

    match &mv.kind {
        MoveKind::DropOne | MoveKind::DropMinusOne => {
            let (want, delta) = if mv.kind == MoveKind::DropOne { (int(1), -1) } else { (int(-1), 1) };
            if !inner || v[i] != want {
                return Err(bad());
            }
            Ok(splice(v, i - 1, i + 2, vec![&v[i - 1] + delta, &v[i + 1] + delta]))
        }
        MoveKind::DropZero => {
            if !inner || !v[i].is_zero() {
                return Err(bad());
            }
            Ok(splice(v, i - 1, i + 2, vec![&v[i - 1] + &v[i + 1]]))
        }
        MoveKind::InsertOne | MoveKind::InsertMinusOne => {
            if i == 0 || i >= n {
                return Err(bad());
            }
            let d = if mv.kind == MoveKind::InsertOne { 1 } else { -1 };
            Ok(splice(v, i - 1, i + 1, vec![&v[i - 1] + d, int(d), &v[i] + d]))
        }
        MoveKind::SplitZero(z) => {
            if i >= n {
                return Err(bad());
            }
            Ok(splice(v, i, i + 1, vec![&v[i] - z, BigInt::zero(), z.clone()]))
        }
        MoveKind::ExpandNegative => {
            if !inner || v[i] > int(-2) {
                return Err(bad());
            }
            let k = usize::try_from(-&v[i]).map_err(|_| bad())?;
            let mut mid = vec![&v[i - 1] + &one];
            mid.extend(repeat(2, k - 1));
            mid.push(&v[i + 1] + &one);
            Ok(splice(v, i - 1, i + 2, mid))
        }
        MoveKind::CollapseTwos(k) | MoveKind::CollapseMinusTwos(k) => {
            let pos = matches!(mv.kind, MoveKind::CollapseTwos(_));
            let (val, d) = if pos { (int(2), -1) } else { (int(-2), 1) };
            let k = *k;
            if k == 0 || i == 0 || i + k + 1 > n || v[i..i + k].iter().any(|c| c != &val) {
                return Err(bad());
            }
            let centre = if pos { -int(k as i64 + 1) } else { int(k as i64 + 1) };
            Ok(splice(v, i - 1, i + k + 1, vec![&v[i - 1] + d, centre, &v[i + k] + d]))
        }
        MoveKind::TailToStaircase => {
            if n < 2 || i != n - 1 || !v[i].is_negative() {
                return Err(bad());
            }
            let k = usize::try_from(-&v[i]).map_err(|_| bad())?;
            let mut mid = vec![&v[i - 1] + &one];
            mid.extend(repeat(2, k - 1));
            mid.push(one.clone());
            mid.push(BigInt::zero());
            Ok(splice(v, i - 1, n, mid))
        }
        MoveKind::Run232ToNeg(l) | MoveKind::RunNeg232ToPos(l) => {
            let pos = matches!(mv.kind, MoveKind::Run232ToNeg(_));
            let s: i64 = if pos { 1 } else { -1 };
            let l = *l;
            let close = i + l + 1;
            if i == 0
                || close + 1 >= n
                || v[i] != int(2 * s)
                || v[close] != int(2 * s)
                || v[i + 1..close].iter().any(|c| c != &int(3 * s))
            {
                return Err(bad());
            }
            let mut mid = vec![&v[i - 1] - s];
            mid.extend(repeat(-3 * s, l + 1));
            mid.push(&v[close + 1] - s);
            Ok(splice(v, i - 1, close + 2, mid))
        }
    }
}

/// Left-to-right collapse of inner runs of two or more 2s. A run starting at
/// index 0 is only collapsed from index 1 on.
pub fn reduce_twos(w: &Word) -> Word {
    let mut r = w.0.clone();
    let two = int(2);
    let mut i = 1;
    while i + 1 < r.len() {
        if r[i] == two {
            let count = run_len(&r, i, &two);
            // a run reaching the last entry has no right neighbour
            if count > 1 && i + count < r.len() {
                r.drain(i + 1..i + count);
                r[i - 1] -= 1;
                r[i] = -int(count as i64 + 1);
                r[i + 1] -= 1;
            }
        }
        i += 1;
    }
    Word(r)
}

/// Left-to-right replacement of inner `(a, 2, 3 x l, 2, b)` by
/// `(a-1, -3 x (l+1), b-1)`, including `l = 0`.
pub fn reduce_232(w: &Word) -> Word {
    let mut r = w.0.clone();
    let (two, three) = (int(2), int(3));
    let mut i = 1;
    while i + 1 < r.len() {
        if r[i] == two {
            let count = 1 + run_len(&r, i + 1, &three);
            let close = i + count;
            if close + 1 < r.len() && r[close] == two {
                for x in &mut r[i..close] {
                    *x = -&three;
                }
                r[i - 1] -= 1;
                r[close + 1] -= 1;
                r.remove(close);
            }
        }
        i += 1;
    }
    Word(r)
}

/// One pass of the tail case analysis on the second-to-last entry:
/// `1` and `-1` are dropped, `0` merges the neighbours, `-2` flips to `2`.
/// The cases are tried in that order, each on the current word.
pub fn reduce_tail(w: &Word) -> Word {
    let mut r = w.0.clone();
    let (one, two) = (int(1), int(2));
    if r.len() > 2 {
        let n = r.len();
        if r[n - 2] == one {
            r[n - 3] -= 1;
            r[n - 1] -= 1;
            r.remove(n - 2);
        }
    }
    if r.len() > 2 {
        let n = r.len();
        if r[n - 2] == -&one {
            r[n - 3] += 1;
            r[n - 1] += 1;
            r.remove(n - 2);
        }
    }
    if r.len() > 2 {
        let n = r.len();
        if r[n - 2].is_zero() {
            let last = r.pop().expect("len > 2");
            r.pop();
            r[n - 3] += last;
        }
    }
    if r.len() > 2 {
        let n = r.len();
        if r[n - 2] == -&two {
            r[n - 3] += 1;
            r[n - 1] += 1;
            r[n - 2] = two;
        }
    }
    Word(r)
}

fn tail_reducible(r: &Word) -> bool {
    let n = r.len();
    n > 2 && r[n - 2] > int(-3) && r[n - 2] < int(2)
}

fn finish_tail(mut r: Word) -> Word {
    while tail_reducible(&r) {
        r = reduce_tail(&r);
    }
    r
}

/// Flips inner `-2`s to `2` via `(a, -2, b) -> (a+1, 2, b+1)`, rightmost
/// first, until none is left. A flip can turn a neighbouring `-3` into a new
/// `-2`, which a later round picks up.
pub fn flip_inner_minus_twos(w: &Word) -> Word {
    let mut r = w.0.clone();
    let minus_two = int(-2);
    while let Some(i) = (1..r.len().saturating_sub(1)).rev().find(|&i| r[i] == minus_two) {
        r[i - 1] += 1;
        r[i] = int(2);
        r[i + 1] += 1;
    }
    Word(r)
}

/// Removes inner `1`, `-1` and `0` entries, leftmost first.
pub fn drop_inner_units(w: &Word) -> Word {
    let mut r = w.clone();
    while let Some(mv) = applicable_moves(&r).into_iter().find(|m| {
        matches!(m.kind, MoveKind::DropOne | MoveKind::DropMinusOne | MoveKind::DropZero)
    }) {
        r = apply_move(&r, &mv).expect("listed moves apply");
    }
    r
}

/// One left-to-right pass of the run collapses, unit drops, the tail loop
/// and the flip.
fn reduce_pass(w: &Word) -> Word {
    flip_inner_minus_twos(&finish_tail(drop_inner_units(&reduce_232(&reduce_twos(w)))))
}

/// Passes repeat until nothing changes: the tail loop can leave a fresh
/// run, e.g. `(3,2,3,1,0)` becomes `(3,2,2,-1)`, which only the next pass
/// collapses to `(2,-3,-2)`. Every collapse shortens the word, so this stops.
fn settle(mut r: Word) -> Word {
    loop {
        let next = reduce_pass(&r);
        if next == r {
            return r;
        }
        r = next;
    }
}

pub fn reduce(w: &StaircaseWord) -> MinimalWord {
    MinimalWord(settle(w.0.clone()))
}

/// Checks the staircase shape first; anything else is rejected.
pub fn reduce_word(w: &Word) -> Result<MinimalWord> {
    Ok(reduce(&StaircaseWord::new(w.clone())?))
}

/// Reduction under an arbitrary schedule: while some collapse of an inner
/// maximal run of 2s or some isolated `(a, 2, 3 x l, 2, b)` flip applies,
/// `choose` picks which one fires next. The tail and the inner `-2`s are
/// then handled as in [`reduce`].
pub fn reduce_scheduled<F>(w: &StaircaseWord, mut choose: F) -> MinimalWord
where
    F: FnMut(&[Move]) -> usize,
{
    let mut r = w.0.clone();
    loop {
        let moves = scheduled_moves(&r);
        if moves.is_empty() {
            break;
        }
        let pick = choose(&moves).min(moves.len() - 1);
        r = apply_move(&r, &moves[pick]).expect("listed moves apply");
    }
    MinimalWord(settle(flip_inner_minus_twos(&finish_tail(r))))
}

fn scheduled_moves(w: &Word) -> Vec<Move> {
    let two = int(2);
    let v = w.as_slice();
    applicable_moves(w)
        .into_iter()
        .filter(|mv| match mv.kind {
            MoveKind::CollapseTwos(k) => k >= 2,
            MoveKind::Run232ToNeg(l) => {
                l >= 1 && v[mv.pos - 1] != two && v[mv.pos + l + 2] != two
            }
            _ => false,
        })
        .collect()
}

pub fn minimal_presentation(a: &Mat2) -> MinimalWord {
    reduce(&staircase(a))
}

/// The first criterion that shows a word can be shortened.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// inner entry in `{-1, 0, 1}`
    InnerUnit { pos: usize },
    /// two inner 2s side by side
    ConsecutiveTwos { pos: usize },
    /// two inner -2s side by side
    ConsecutiveMinusTwos { pos: usize },
    /// `(a, 2, 3 x l, 2, b)` with both flanks present
    Run232 { pos: usize },
    /// `(a, -2, -3 x l, -2, b)` with both flanks present
    RunNeg232 { pos: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InnerUnit { pos } => write!(f, "inner entry of absolute value at most 1 at {pos}"),
            Violation::ConsecutiveTwos { pos } => write!(f, "consecutive inner 2s at {pos}"),
            Violation::ConsecutiveMinusTwos { pos } => write!(f, "consecutive inner -2s at {pos}"),
            Violation::Run232 { pos } => write!(f, "(2,3,...,3,2) run at {pos}"),
            Violation::RunNeg232 { pos } => write!(f, "(-2,-3,...,-3,-2) run at {pos}"),
        }
    }
}

/// `None` when no shortening criterion fires.
pub fn minimality_violation(w: &Word) -> Option<Violation> {
    let n = w.len();
    let v = w.as_slice();
    let (two, three) = (int(2), int(3));
    for i in 1..n.saturating_sub(1) {
        if v[i].abs() <= BigInt::one() {
            return Some(Violation::InnerUnit { pos: i });
        }
        if i + 2 < n {
            if v[i] == two && v[i + 1] == two {
                return Some(Violation::ConsecutiveTwos { pos: i });
            }
            if v[i] == -&two && v[i + 1] == -&two {
                return Some(Violation::ConsecutiveMinusTwos { pos: i });
            }
        }
        for (edge, mid, neg) in [(&two, &three, false), (&-&two, &-&three, true)] {
            if &v[i] != edge {
                continue;
            }
            let close = i + 1 + run_len(v, i + 1, mid);
            if close + 1 < n && &v[close] == edge {
                return Some(if neg { Violation::RunNeg232 { pos: i } } else { Violation::Run232 { pos: i } });
            }
        }
    }
    None
}

pub fn is_minimal(w: &Word) -> bool {
    minimality_violation(w).is_none()
}
