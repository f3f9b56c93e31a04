//! Re-derive both linear bounds from scratch with the exact optimiser.

use opn_bounds::cli::render::render_optimum;
use opn_bounds::lp::{build_system, optimize, Variant};

fn main() -> opn_bounds::Result<()> {
    for variant in [Variant::Standard, Variant::No3] {
        let system = build_system(variant);
        let best = optimize(&system)?;
        println!("== {variant} ({} relations)", system.relations.len());
        print!("{}", render_optimum(&best));
        println!();
    }
    Ok(())
}
