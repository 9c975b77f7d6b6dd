//! The seven stars on a two-point spectrum, their Hasse diagram, and the
//! isomorphism with the cube 2^{1,2,3} minus {1}.
//!
//!     cargo run --example lattice_shape_n2 | dot -Tsvg > n2.svg

use semistar::poset::{find_iso, to_dot, Orientation};
use semistar::verify::{cube_minus_singleton, star_lattice};

fn main() -> semistar::Result<()> {
    let (stars, lattice) = star_lattice(2)?;
    let labels: Vec<String> = stars.iter().map(|s| s.family().to_string()).collect();
    print!("{}", to_dot("n2", &labels, &lattice.covers()));

    let cube = ["{}", "{2}", "{1,2}", "{3}", "{1,3}", "{2,3}", "{1,2,3}"];
    let iso = find_iso(&lattice, &cube_minus_singleton(), Orientation::Iso)?
        .expect("the lattices are isomorphic");
    for (label, &k) in labels.iter().zip(&iso) {
        eprintln!("{label:<22} -> {}", cube[k]);
    }
    Ok(())
}
