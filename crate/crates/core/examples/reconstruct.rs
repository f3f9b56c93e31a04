//! Recover (a, b, c) from d wherever the square-root test succeeds.

use opn_bounds::arith::primes_up_to;
use opn_bounds::lemma_lab::reconstruct_from_d;

fn main() -> opn_bounds::Result<()> {
    for d in primes_up_to(5_000).into_iter().filter(|&d| d > 3) {
        if let Some(t) = reconstruct_from_d(d)? {
            println!("d = {d:>5}: a = {}, b = {}, c = {}", t.a, t.b, t.c);
        }
    }
    Ok(())
}
