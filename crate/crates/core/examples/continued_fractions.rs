//! Ceiling and regular continued fractions of a rational, and the
//! conversion between them.
//!
//! cargo run --example continued_fractions -- 157 68

use num_bigint::BigInt;
use psl2z::contfrac::{ncf_eval, negative_euclid, regcf_eval, regcf_to_ncf, Rational, RegCF};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let a: BigInt = args.next().unwrap_or_else(|| "157".into()).parse()?;
    let c: BigInt = args.next().unwrap_or_else(|| "68".into()).parse()?;

    let q = negative_euclid(&a, &c)?;
    let shown: Vec<String> = q.as_slice().iter().map(|x| x.to_string()).collect();
    println!("{a}/{c} = [[{}]]", shown.join(", "));
    println!("back     {}", ncf_eval(q.as_slice())?);

    // regular expansion by the ordinary Euclidean algorithm, padded to even length
    let (mut x, mut y) = (a.clone(), c.clone());
    let mut terms = Vec::new();
    while y != BigInt::from(0) {
        let k = num_integer::Integer::div_floor(&x, &y);
        terms.push(k.clone());
        (x, y) = (y.clone(), x - k * y);
    }
    if terms.len() % 2 == 1 {
        let last = terms.pop().expect("nonempty") - 1;
        terms.extend([last, BigInt::from(1)]);
    }
    let cf = RegCF::new(terms)?;
    let shown: Vec<String> = cf.as_slice().iter().map(|x| x.to_string()).collect();
    println!("regular  [{}] = {}", shown.join(", "), regcf_eval(&cf));
    let converted = regcf_to_ncf(&cf);
    assert_eq!(converted.as_slice(), q.as_slice());
    assert_eq!(regcf_eval(&cf), Rational::new(a, c)?);
    println!("converted back to the ceiling expansion: match");
    Ok(())
}
