//! Primes of one class sharing their largest contributed prime, and the
//! census of linked-prime fibers.

use opn_bounds::cli::render::render_fibers;
use opn_bounds::contribution::ClassTag;
use opn_bounds::lemma_lab::{find_shared_largest, linking_census, SweepOptions};

fn main() -> opn_bounds::Result<()> {
    let opts = SweepOptions::default();
    let fibers = find_shared_largest(ClassTag::S32, 4, 1_000_000, &opts)?;
    println!("S32 primes below 10^6 sharing a largest prime, at least four at a time:");
    print!("{}", render_fibers(&fibers));

    let census = linking_census(100_000, &opts)?;
    println!(
        "\nlinking census to 10^5: {} primes, {} fibers, largest fiber {}, {} violations",
        census.primes_linked,
        census.fibers.len(),
        census.max_fiber(),
        census.violations.len()
    );
    for f in census.fibers.iter().filter(|f| f.len() == 2).take(5) {
        println!("  {} <- {:?} ({})", f.shared_prime, f.primes(), f.pattern);
    }
    Ok(())
}
