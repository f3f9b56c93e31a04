//! Exact verification toolkit for linear bounds of the form `a·ω + b ≤ Ω` on
//! odd perfect numbers.
//!
//! The crate is split into layers that build on each other:
//!
//! - [`arith`]: big integers, exact rationals, primality, factoring and
//!   integer roots.
//! - [`polynomial`]: integer polynomials, cyclotomic polynomials and the
//!   divisibility `Φ_{2t} | Φ_t(Ψ_r)`.
//! - [`contribution`]: `σ(p^e)`, contributed primes, the `S_{m,j}` classes,
//!   refinement tags and linked primes.
//! - [`lemma_lab`]: exhaustive sweeps that corroborate each number-theoretic
//!   lemma up to a bound, the linking census and shared-largest-prime search.
//! - [`lp`]: the inequality system, certificate checking and the exact
//!   two-phase rational optimisation that re-derives the bounds.
//! - [`cli`]: the command-line front end and the text renderers.
//!
//! Runnable walkthroughs for each capability live in the crate's `examples/`
//! directory, e.g. `cargo run --example lp_solve`.

pub mod arith;
pub mod cli;
pub mod contribution;
mod error;
pub mod lemma_lab;
pub mod lp;
pub mod polynomial;

pub use error::{Error, Result};
