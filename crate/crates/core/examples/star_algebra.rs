//! Apply, compare, meet and join semistar operations on a two-prime spectrum.

use semistar::format::{family_from_str, parse_inline_vector};
use semistar::semistar::{star_join, star_meet, v_of};
use semistar::{Spectrum, Star};

fn main() -> semistar::Result<()> {
    let sp = Spectrum::new(["2", "3"])?;
    let a = Star::from_moore(sp.clone(), family_from_str("{n:2,members:[[0],[0,1]]}")?)?;
    let b = v_of(&parse_inline_vector("(0,inf)", Some(&sp))?)?;
    let f = parse_inline_vector("(1,-2)", Some(&sp))?;

    println!("a = {}   b = {}", a.family(), b.family());
    println!("f^a = {}", a.apply(&f)?);
    println!("f^b = {}", b.apply(&f)?);

    let meet = star_meet(&[a.clone(), b.clone()])?;
    let join = star_join(&[a.clone(), b.clone()])?;
    println!("a ∧ b = {}, f -> {}", meet.family(), meet.apply(&f)?);
    println!("a ∨ b = {}, f -> {}", join.family(), join.apply(&f)?);
    println!("a <= a ∨ b: {}", a.le(&join));

    for s in [&a, &b, &meet, &join] {
        let labels: Vec<String> = s.classify().iter().map(ToString::to_string).collect();
        println!("{:<24} {}", s.family().to_string(), labels.join(", "));
    }
    Ok(())
}
