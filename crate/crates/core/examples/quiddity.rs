//! Words whose matrix is plus or minus the identity, grouped by length.
//!
//! cargo run --example quiddity -- 6

use std::collections::BTreeSet;

use psl2z::matrix::{quiddity_sign, rotate, Sign};
use psl2z::oracle::enumerate_quiddity_cycles;

fn main() {
    let max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    for n in 1..=max {
        let cycles = enumerate_quiddity_cycles(n, 3);
        let plus = cycles.iter().filter(|(_, s)| *s == Sign::Plus).count();
        // count up to rotation
        let classes: BTreeSet<_> =
            cycles.iter().map(|(w, _)| (0..n).map(|k| rotate(w, k as i64)).min().expect("n >= 1")).collect();
        println!("n = {n}: {} cycles ({plus} with +1), {} up to rotation", cycles.len(), classes.len());
        for w in classes.iter().take(4) {
            println!("    ({w}) {}", quiddity_sign(w).expect("a cycle"));
        }
    }
}
