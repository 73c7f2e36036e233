//! Conjugacy classes: canonical forms, proper and pure words, and a
//! comparison of two matrices.
//!
//! cargo run --example conjugacy -- 47,-224,17,-81 1,4,0,1

use psl2z::cli::parse_matrix;
use psl2z::conjugacy::{
    are_conjugate, canonical_class, class_invariant, conjugate_by_word, is_pure, proper_violation, properize, purify,
};
use psl2z::matrix::Word;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a = parse_matrix(&args.next().unwrap_or_else(|| "47,-224,17,-81".into()))?;
    let b = parse_matrix(&args.next().unwrap_or_else(|| "1,4,0,1".into()))?;

    for m in [&a, &b] {
        let p = properize(m);
        println!("{m}");
        println!("  proper word  {p}");
        match proper_violation(&p) {
            None if p.len() >= 3 => println!("  pure         {}", is_pure(&purify(&p)?)),
            None => {}
            Some(v) => println!("  not proper   {v}"),
        }
        println!("  canonical    {}", canonical_class(m));
        println!("  invariant    {:?}", class_invariant(m));
    }
    println!("conjugate: {}", are_conjugate(&a, &b));

    // conjugating by any word keeps the class
    let g = Word::from([5, -2, 7]);
    let c = conjugate_by_word(&a, &g);
    println!("{a} conjugated by ({g}) is {c}: same class {}", are_conjugate(&a, &c));
    Ok(())
}
