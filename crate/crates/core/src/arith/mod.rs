//! Integer and rational arithmetic used by every other module.
//!
//! Big integers come from `num-bigint` and rationals from `num-rational`
//! (`BigRational` keeps fractions reduced with a positive denominator).
//! Primality, factoring and exact integer roots are implemented here, with
//! `u64` fast paths for the desk-scale values the sweeps generate.

mod factor;
mod primality;
mod rational;
mod roots;
mod sieve;

pub use factor::{factor, factor_u64, FactorConfig, FactoredInteger, Work};
pub use primality::{is_prime, is_prime_u64, primality, Primality, DETERMINISTIC_LIMIT, EXTRA_ROUNDS};
pub use rational::{parse_bigint, parse_rational, serde_bigint, serde_rational, Rational};
pub use roots::{isqrt, isqrt_u64, quadratic_integer_roots};
pub use sieve::{prime_flags, primes_up_to};

pub use num_bigint::BigInt;

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// `x² + x + 1`, the value of `σ(x²)` when `x` is prime.
pub fn tri(x: u64) -> u128 {
    let x = x as u128;
    x * x + x + 1
}
