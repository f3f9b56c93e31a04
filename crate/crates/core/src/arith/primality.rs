use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{mul_mod, pow_mod};

/// Miller-Rabin with these bases is deterministic for every
/// `n < 3_317_044_064_679_887_385_961_981` (> 2^81).
const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Decimal threshold below which [`primality`] answers are proofs.
pub const DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";

/// Extra pseudo-random Miller-Rabin rounds applied above the deterministic
/// limit. A composite survives all of them with probability below 4^-24.
pub const EXTRA_ROUNDS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Primality {
    Composite,
    Prime,
    /// Passed every round but lies above [`DETERMINISTIC_LIMIT`].
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }
}

pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn strong_probable_prime(n: &BigInt, d: &BigInt, s: u64, a: &BigInt) -> bool {
    let n_minus_one = n - 1u32;
    let mut x = a.modpow(d, n);
    if x.is_one() || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
    }
    false
}

pub fn primality(n: &BigInt) -> Primality {
    if n.is_negative() {
        return Primality::Composite;
    }
    if let Some(small) = n.to_u64() {
        return if is_prime_u64(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    for &p in &WITNESSES {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    let n_minus_one: BigInt = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    for &a in &WITNESSES {
        if !strong_probable_prime(n, &d, s, &BigInt::from(a)) {
            return Primality::Composite;
        }
    }
    let limit: BigInt = DETERMINISTIC_LIMIT.parse().expect("constant parses");
    if *n < limit {
        return Primality::Prime;
    }
    // Seeded from n so repeated runs give identical answers.
    let seed = n.mod_floor(&BigInt::from(u64::MAX)).to_u64().unwrap_or(0);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..EXTRA_ROUNDS {
        let a = BigInt::from(rng.gen_range(2..u64::MAX));
        if !strong_probable_prime(n, &d, s, &a) {
            return Primality::Composite;
        }
    }
    Primality::ProbablePrime
}

/// True iff `n` is prime (or a probable prime above [`DETERMINISTIC_LIMIT`]).
pub fn is_prime(n: &BigInt) -> bool {
    primality(n).is_prime()
}
