//! Helpers shared by the integration suites. Everything here is written
//! from the definitions with fixed-width integers and does not call into
//! the library except to convert values.
#![allow(dead_code)]

use psl2z::matrix::{Mat2, Word};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub type M = [i128; 4];

pub const ID: M = [1, 0, 0, 1];

pub fn mul(x: M, y: M) -> M {
    [
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    ]
}

pub fn gen(c: i128) -> M {
    [c, -1, 1, 0]
}

pub fn product(w: &[i64]) -> M {
    w.iter().fold(ID, |acc, &c| mul(acc, gen(c as i128)))
}

/// Sign choice: c > 0, or c = 0 and a > 0.
pub fn norm(m: M) -> M {
    if m[2] < 0 || (m[2] == 0 && m[0] < 0) {
        [-m[0], -m[1], -m[2], -m[3]]
    } else {
        m
    }
}

pub fn to_mat(m: M) -> Mat2 {
    Mat2::new(m[0], m[1], m[2], m[3]).expect("determinant 1")
}

pub fn from_mat(m: &Mat2) -> M {
    let f = |x: &num_bigint::BigInt| i128::try_from(x).expect("fits in i128");
    [f(m.a()), f(m.b()), f(m.c()), f(m.d())]
}

pub fn w(v: &[i64]) -> Word {
    Word::from(v)
}

pub fn ints(w: &Word) -> Vec<i64> {
    w.to_i64s().expect("fits in i64")
}

pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize, bound: i64) -> Vec<i64> {
    let n = rng.gen_range(0..=max_len);
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

pub fn rotations(v: &[i64]) -> Vec<Vec<i64>> {
    (0..v.len().max(1))
        .map(|k| v[k.min(v.len())..].iter().chain(&v[..k.min(v.len())]).copied().collect())
        .collect()
}
