//! Stars of finite type are exactly the ones induced by overrings.

use semistar::moore::enumerate_moore;
use semistar::semistar::d_of_overring;
use semistar::{Spectrum, Star, Subset};

fn main() -> semistar::Result<()> {
    let n = 3;
    let sp = Spectrum::indexed(n)?;
    let mut finite = 0;
    for family in enumerate_moore(n, false)? {
        let star = Star::from_moore(sp.clone(), family)?;
        if star.is_finite_type() {
            finite += 1;
            println!("{:<36} overring at X = {}", star.family().to_string(), star.overring_base().unwrap());
        }
    }
    println!("{finite} of finite type (2^{n} = {})", 1 << n);

    let x = Subset::from_indices([0, 2]);
    let d = d_of_overring(&sp, x)?;
    println!("d for X = {x}: {}", d.family());
    Ok(())
}
