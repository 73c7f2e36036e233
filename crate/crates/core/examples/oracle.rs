//! Brute-force searches used to cross-check the closed-form algorithms.
//!
//! cargo run --release --example oracle

use psl2z::conjugacy::{are_conjugate, conjugate_by_word};
use psl2z::matrix::{continuant, Word};
use psl2z::oracle::{is_conjugating_word, oracle_conjugate, shortest_words, OracleVerdict, SearchBounds};
use psl2z::presentation::minimal_presentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // the search only sees entries up to the coefficient bound, so for the
    // last matrix it misses (8) and reports longer words
    let bounds = SearchBounds::new(4, 5, 2_000_000);
    for v in [[4, -4, 2, 1], [3, 3, 3, 3], [2, -2, 2, 0], [7, 1, 1, 2]] {
        let a = continuant(&Word::from(v));
        let found = shortest_words(&a, &bounds)?;
        let m = minimal_presentation(&a);
        let shown: Vec<String> = found.iter().map(|w| format!("({w})")).collect();
        println!("{a}: engine ({m}), search {}", shown.join(" "));
    }

    let a = continuant(&Word::from([3, -4, 2]));
    let b = conjugate_by_word(&a, &Word::from([2, -1]));
    match oracle_conjugate(&a, &b, &SearchBounds::new(3, 3, 500_000)) {
        OracleVerdict::Yes(g) => {
            assert!(is_conjugating_word(&a, &b, &g));
            println!("{a} ~ {b} by ({g}), closed form agrees: {}", are_conjugate(&a, &b));
        }
        other => println!("{a} vs {b}: {other:?}"),
    }
    Ok(())
}
