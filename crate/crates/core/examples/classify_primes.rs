//! Contributed primes and classes of σ(p²) for a handful of primes.

use opn_bounds::arith::FactorConfig;
use opn_bounds::cli::render::render_profile;
use opn_bounds::contribution::{classify, profile};

fn main() -> opn_bounds::Result<()> {
    let cfg = FactorConfig::default();
    for p in [5, 7, 11, 13, 107, 557, 120587] {
        print!("{}", render_profile(&classify(p, &cfg)?));
        println!();
    }
    // higher exponents are profiled but not classified
    let p = profile(7, 4, &cfg)?;
    println!("σ(7⁴) = {} = {}", p.sigma, p.contributed);
    Ok(())
}
