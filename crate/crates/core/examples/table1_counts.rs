//! Count semistar operations for spectra of size 1 to 5 and compare with
//! the lower bound `2^C(n, n/2)` and the trivial bound `2^(2^n)`.
//!
//!     cargo run --release --example table1_counts

use std::time::Instant;

use semistar::moore::{binom_lower_bound, count_moore, family_upper_bound};

fn main() -> semistar::Result<()> {
    println!("{:>2} {:>10} {:>10} {:>12} {:>9}", "n", "lower", "count", "2^(2^n)", "seconds");
    for n in 1..=5 {
        let t = Instant::now();
        let count = count_moore(n, false)?;
        println!(
            "{n:>2} {:>10} {count:>10} {:>12} {:>9.3}",
            binom_lower_bound(n),
            family_upper_bound(n),
            t.elapsed().as_secs_f64()
        );
    }
    match count_moore(6, false) {
        Err(e) => println!("n = 6: {e}"),
        Ok(c) => println!("n = 6: {c}"),
    }
    Ok(())
}
