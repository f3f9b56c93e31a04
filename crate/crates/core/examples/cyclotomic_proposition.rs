//! Φ_{2t} | Φ_t(Ψ_r) whenever r ≡ −1 (mod 2t).

use opn_bounds::cli::render::render_proposition;
use opn_bounds::polynomial::{compose, cyclotomic, proposition_report, psi};

fn main() -> opn_bounds::Result<()> {
    let composed = compose(&cyclotomic(3)?, &psi(5)?);
    println!("Φ_3(Ψ_5) = {composed}\n");
    for (t, r) in [(3, 5), (3, 11), (5, 9), (7, 13), (3, 3), (5, 7)] {
        print!("{}", render_proposition(&proposition_report(t, r)?));
    }
    Ok(())
}
