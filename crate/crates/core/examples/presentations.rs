//! From a matrix to its staircase word and then, stage by stage, to a
//! minimal presentation.
//!
//! cargo run --example presentations -- 503,152,182,55

use psl2z::cli::parse_matrix;
use psl2z::matrix::continuant;
use psl2z::presentation::{
    drop_inner_units, flip_inner_minus_twos, is_minimal, minimal_presentation, reduce_232, reduce_tail, reduce_twos,
    staircase,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "503,152,182,55".into());
    let a = parse_matrix(&arg)?;
    println!("matrix      {a}");

    let s = staircase(&a);
    println!("staircase   {}", s.word());

    // one pass of each stage; the library repeats the pass until nothing moves
    let w = reduce_twos(s.word());
    println!("twos        {w}");
    let w = reduce_232(&w);
    println!("2,3..3,2    {w}");
    let w = drop_inner_units(&w);
    println!("units       {w}");
    let w = flip_inner_minus_twos(&reduce_tail(&w));
    println!("tail, -2s   {w}");

    let m = minimal_presentation(&a);
    println!("minimal     {m}  (length {}, minimal: {})", m.len(), is_minimal(m.word()));
    assert_eq!(continuant(m.word()), a);
    Ok(())
}
