//! Linked primes, including the exceptional S22 case.

use opn_bounds::arith::FactorConfig;
use opn_bounds::cli::render::render_link;
use opn_bounds::contribution::linked_prime;

fn main() -> opn_bounds::Result<()> {
    let cfg = FactorConfig::default();
    for p in [5, 11, 17, 29, 37, 67] {
        match linked_prime(p, &cfg) {
            Ok(l) => print!("{}", render_link(&l)),
            Err(e) => println!("{p}: {e}"),
        }
        println!();
    }
    Ok(())
}
