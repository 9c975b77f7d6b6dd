//! Fractional ideals of Z localized at {2, 3, 5} as valuation vectors.

use semistar::zadapter::{colon_oracle, module_member, parse_rational, vector_of_module};
use semistar::FracIdealSpec;

fn main() -> semistar::Result<()> {
    let i = FracIdealSpec::parse("2,3,5", "10,15")?;
    let j = FracIdealSpec::parse("2,3,5", "1/4,9")?;
    let fi = vector_of_module(&i)?;
    let fj = vector_of_module(&j)?;
    println!("I = (10, 15)   -> {fi}");
    println!("J = (1/4, 9)   -> {fj}");
    println!("IJ             -> {}", fi.mul(&fj)?);
    println!("I ∩ J          -> {}", fi.meet(&fj)?);
    println!("(I : J)        -> {}", fi.colon(&fj)?);
    println!("(I : J) oracle -> {}", colon_oracle(&i, &j)?);
    for r in ["5", "1/5", "7/2"] {
        println!("{r} in I? {}", module_member(&fi, &parse_rational(r)?)?);
    }
    // an overring: allowing every power of 3 in the denominator
    let k = fi.with_infinite(semistar::Subset::singleton(1))?;
    println!("I with 3 inverted -> {k}");
    Ok(())
}
