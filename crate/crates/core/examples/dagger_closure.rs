//! The star generated by a set of modules, computed from inf-supports and
//! cross-checked against brute force over a small window.

use semistar::format::parse_inline_vector;
use semistar::semistar::{bounded_window, dagger_bounded_oracle, dagger_supports};
use semistar::Spectrum;

fn main() -> semistar::Result<()> {
    let sp = Spectrum::indexed(2)?;
    let gens = ["(inf,3)", "(-1,inf)"]
        .iter()
        .map(|g| parse_inline_vector(g, Some(&sp)))
        .collect::<semistar::Result<Vec<_>>>()?;
    let family = dagger_supports(&sp, &gens)?;
    println!("closed supports: {family}");

    let oracle = dagger_bounded_oracle(&sp, &gens, 2)?;
    let window = bounded_window(&sp, 2);
    let agree = window
        .iter()
        .filter(|w| oracle.contains(*w) == family.contains(w.inf_support().unwrap()))
        .count();
    println!("window B=2: {agree}/{} vectors agree, {} closed", window.len(), oracle.len());
    Ok(())
}
