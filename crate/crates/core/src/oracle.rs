//! Brute-force ground truth over bounded coefficient alphabets: shortest
//! words by breadth-first search, exhaustive quiddity cycles, and a search
//! for conjugating words.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::{continuant, single, Mat2, Sign, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub max_len: usize,
    pub coeff_bound: i64,
    pub max_nodes: usize,
}

impl SearchBounds {
    pub fn new(max_len: usize, coeff_bound: i64, max_nodes: usize) -> Self {
        SearchBounds { max_len, coeff_bound, max_nodes }
    }
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds { max_len: 4, coeff_bound: 5, max_nodes: 200_000 }
    }
}

/// Letters ordered by absolute value, positive first: 0, 1, -1, 2, -2, ...
fn alphabet(bound: i64) -> Vec<i64> {
    let mut v = vec![0];
    for k in 1..=bound {
        v.push(k);
        v.push(-k);
    }
    v
}

fn letter(c: i64) -> Mat2 {
    Mat2::new(c, -1, 1, 0).expect("M(c) has determinant 1")
}

/// All words of the least length `L <= max_len` whose continuant is `a`,
/// sorted. Length 0 is never reported, so the identity yields `(0, 0)`.
pub fn shortest_words(a: &Mat2, bounds: &SearchBounds) -> Result<Vec<Word>> {
    let letters: Vec<(i64, Mat2)> = alphabet(bounds.coeff_bound).into_iter().map(|c| (c, letter(c))).collect();

    // state 0 is the empty product; it stays out of `seen` so the identity
    // can be reached again by a non-empty word
    let mut states: Vec<Mat2> = vec![Mat2::identity()];
    let mut parents: Vec<Vec<(usize, i64)>> = vec![Vec::new()];
    let mut level_of: Vec<usize> = vec![0];
    let mut seen: HashMap<Mat2, usize> = HashMap::new();
    let mut frontier = vec![0usize];

    for level in 1..=bounds.max_len {
        let mut next = Vec::new();
        for &s in &frontier {
            for (c, m) in &letters {
                let prod = &states[s] * m;
                match seen.get(&prod) {
                    Some(&t) => {
                        if level_of[t] == level {
                            parents[t].push((s, *c));
                        }
                    }
                    None => {
                        if states.len() >= bounds.max_nodes {
                            return Err(Error::BudgetExceeded { max_nodes: bounds.max_nodes, level });
                        }
                        let t = states.len();
                        seen.insert(prod.clone(), t);
                        states.push(prod);
                        parents.push(vec![(s, *c)]);
                        level_of.push(level);
                        next.push(t);
                    }
                }
            }
        }
        if let Some(&t) = seen.get(a) {
            let mut out = Vec::new();
            collect_paths(t, &parents, &mut Vec::new(), &mut out);
            out.sort();
            return Ok(out);
        }
        frontier = next;
    }
    Ok(Vec::new())
}

fn collect_paths(node: usize, parents: &[Vec<(usize, i64)>], suffix: &mut Vec<i64>, out: &mut Vec<Word>) {
    if node == 0 {
        out.push(Word::from(suffix.iter().rev().copied().collect::<Vec<_>>()));
        return;
    }
    for &(p, c) in &parents[node] {
        suffix.push(c);
        collect_paths(p, parents, suffix, out);
        suffix.pop();
    }
}

/// Every length-`n` word over `[-bound, bound]` whose product is `+-Id`,
/// in lexicographic order.
pub fn enumerate_quiddity_cycles(n: usize, coeff_bound: i64) -> Vec<(Word, Sign)> {
    let letters: Vec<BigInt> = (-coeff_bound..=coeff_bound).map(BigInt::from).collect();
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut stack = vec![crate::matrix::IntMatrix::identity()];
    walk_cycles(n, &letters, &mut prefix, &mut stack, &mut out);
    out
}

fn walk_cycles(
    n: usize,
    letters: &[BigInt],
    prefix: &mut Vec<BigInt>,
    stack: &mut Vec<crate::matrix::IntMatrix>,
    out: &mut Vec<(Word, Sign)>,
) {
    if prefix.len() == n {
        if let Some(s) = stack.last().and_then(|m| m.scalar_sign()) {
            out.push((Word(prefix.clone()), s));
        }
        return;
    }
    for c in letters {
        let next = stack.last().expect("non-empty") * &single(c);
        stack.push(next);
        prefix.push(c.clone());
        walk_cycles(n, letters, prefix, stack, out);
        prefix.pop();
        stack.pop();
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleVerdict {
    /// `continuant(g) * a * continuant(g)^-1 = b` for the carried `g`
    Yes(Word),
    NoWithinBounds,
    Unresolved,
}

/// Breadth-first search over conjugates of `a`, one letter prepended to the
/// conjugator per level.
pub fn oracle_conjugate(a: &Mat2, b: &Mat2, bounds: &SearchBounds) -> OracleVerdict {
    if a == b {
        return OracleVerdict::Yes(Word::new());
    }
    let letters: Vec<(i64, Mat2, Mat2)> = alphabet(bounds.coeff_bound)
        .into_iter()
        .map(|c| {
            let m = letter(c);
            let inv = m.inverse();
            (c, m, inv)
        })
        .collect();
    let mut seen: HashMap<Mat2, ()> = HashMap::new();
    seen.insert(a.clone(), ());
    let mut frontier: Vec<(Mat2, Vec<i64>)> = vec![(a.clone(), Vec::new())];

    for _ in 0..bounds.max_len {
        let mut next = Vec::new();
        for (x, g) in &frontier {
            for (c, m, inv) in &letters {
                let y = &(m * x) * inv;
                if seen.contains_key(&y) {
                    continue;
                }
                let mut g2 = Vec::with_capacity(g.len() + 1);
                g2.push(*c);
                g2.extend_from_slice(g);
                if &y == b {
                    return OracleVerdict::Yes(Word::from(g2));
                }
                if seen.len() >= bounds.max_nodes {
                    return OracleVerdict::Unresolved;
                }
                seen.insert(y.clone(), ());
                next.push((y, g2));
            }
        }
        frontier = next;
    }
    OracleVerdict::NoWithinBounds
}

/// Checks a claimed witness directly.
pub fn is_conjugating_word(a: &Mat2, b: &Mat2, g: &Word) -> bool {
    &a.conjugated_by(&continuant(g)) == b
}
