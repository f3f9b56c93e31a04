use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::primality::{is_prime_u64, primality, Primality};
use super::roots::isqrt_u64;
use super::sieve::trial_primes;
use super::{mul_mod, roots::isqrt};
use crate::{Error, Result};

/// Knobs for [`factor`]: trial division runs over primes up to `trial_bound`,
/// then Brent's rho takes over. Each trial division and each rho iteration
/// costs one step of `budget`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorConfig {
    pub trial_bound: u64,
    pub budget: u64,
}

impl Default for FactorConfig {
    fn default() -> Self {
        FactorConfig {
            trial_bound: 100_000,
            budget: 100_000_000,
        }
    }
}

/// Step counter shared by one factoring job.
#[derive(Debug)]
pub struct Work {
    used: u64,
    limit: u64,
}

impl Work {
    pub fn new(limit: u64) -> Self {
        Work { used: 0, limit }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn tick(&mut self, steps: u64, what: impl FnOnce() -> String) -> Result<()> {
        self.used += steps;
        if self.used > self.limit {
            Err(Error::BudgetExceeded {
                budget: self.limit,
                context: what(),
            })
        } else {
            Ok(())
        }
    }
}

/// A complete prime factorisation: `value = ∏ prime^exponent`, primes strictly
/// increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    value: BigInt,
    factors: Vec<(BigInt, u32)>,
    probable: bool,
}

impl FactoredInteger {
    /// Builds a factorisation from parts, checking every invariant.
    pub fn new(value: BigInt, mut factors: Vec<(BigInt, u32)>) -> Result<Self> {
        factors.sort();
        let mut product = BigInt::one();
        let mut probable = false;
        for window in factors.windows(2) {
            if window[0].0 == window[1].0 {
                return Err(Error::InvalidInput(format!("repeated prime {}", window[0].0)));
            }
        }
        for (p, e) in &factors {
            if *e == 0 {
                return Err(Error::InvalidInput(format!("zero exponent on {p}")));
            }
            match primality(p) {
                Primality::Composite => {
                    return Err(Error::InvalidInput(format!("{p} is not prime")))
                }
                Primality::ProbablePrime => probable = true,
                Primality::Prime => {}
            }
            product *= num_traits::pow(p.clone(), *e as usize);
        }
        if product != value {
            return Err(Error::InvalidInput(format!("factors multiply to {product}, not {value}")));
        }
        Ok(FactoredInteger { value, factors, probable })
    }

    pub(crate) fn from_u64_parts(value: u128, factors: &[(u64, u32)]) -> Self {
        FactoredInteger {
            value: BigInt::from(value),
            factors: factors.iter().map(|&(p, e)| (BigInt::from(p), e)).collect(),
            probable: false,
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    /// Total number of prime factors counted with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn distinct(&self) -> usize {
        self.factors.len()
    }

    pub fn largest(&self) -> Option<&BigInt> {
        self.factors.last().map(|(p, _)| p)
    }

    pub fn smallest(&self) -> Option<&BigInt> {
        self.factors.first().map(|(p, _)| p)
    }

    pub fn exponent_of(&self, prime: &BigInt) -> u32 {
        self.factors
            .iter()
            .find(|(p, _)| p == prime)
            .map_or(0, |(_, e)| *e)
    }

    /// Primes with multiplicity, ascending.
    pub fn multiset(&self) -> Vec<BigInt> {
        self.factors
            .iter()
            .flat_map(|(p, e)| std::iter::repeat_n(p.clone(), *e as usize))
            .collect()
    }

    /// True when some factor is only a probable prime.
    pub fn is_probable(&self) -> bool {
        self.probable
    }

    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .map(|(p, e)| num_traits::pow(p.clone(), *e as usize))
            .product()
    }
}

impl fmt::Display for FactoredInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}^{e}") })
            .collect();
        write!(f, "{}", parts.join(" · "))
    }
}

/// Serialises as `[["7", 2], ["6343", 1]]`.
impl Serialize for FactoredInteger {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.factors.len()))?;
        for (p, e) in &self.factors {
            seq.serialize_element(&(p.to_string(), e))?;
        }
        seq.end()
    }
}

fn push_factor(out: &mut Vec<(u64, u32)>, p: u64) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    }
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Brent's variant of Pollard's rho. Returns a nontrivial divisor of the odd
/// composite `n`.
fn rho_u64(n: u64, work: &mut Work) -> Result<u64> {
    if n.is_multiple_of(2) {
        return Ok(2);
    }
    const BATCH: u64 = 128;
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut y = 2u64;
        let mut r = 1u64;
        let mut q = 1u64;
        let mut g = 1u64;
        let mut x = y;
        let mut ys = y;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            work.tick(r, || format!("running rho on {n}"))?;
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                let steps = BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                work.tick(steps, || format!("running rho on {n}"))?;
                g = gcd_u64(q, n);
                k += steps;
            }
            r *= 2;
        }
        if g == n {
            loop {
                ys = f(ys);
                work.tick(1, || format!("running rho on {n}"))?;
                g = gcd_u64(x.abs_diff(ys), n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return Ok(g);
        }
    }
    unreachable!("c ranges over all u64")
}

fn split_u64(n: u64, work: &mut Work, out: &mut Vec<(u64, u32)>) -> Result<()> {
    if n == 1 {
        return Ok(());
    }
    if is_prime_u64(n) {
        push_factor(out, n);
        return Ok(());
    }
    let r = isqrt_u64(n);
    if r * r == n {
        split_u64(r, work, out)?;
        return split_u64(r, work, out);
    }
    let d = rho_u64(n, work)?;
    split_u64(d, work, out)?;
    split_u64(n / d, work, out)
}

/// Factors a machine-word integer. `n = 0` is rejected.
pub fn factor_u64(n: u64, config: &FactorConfig) -> Result<Vec<(u64, u32)>> {
    let mut work = Work::new(config.budget);
    factor_u64_with(n, config, &mut work)
}

fn factor_u64_with(mut n: u64, config: &FactorConfig, work: &mut Work) -> Result<Vec<(u64, u32)>> {
    if n == 0 {
        return Err(Error::InvalidInput("cannot factor 0".into()));
    }
    let mut out = Vec::new();
    if n > 1 && !is_prime_u64(n) {
        for &p in trial_primes(config.trial_bound).iter() {
            if (p as u128) * (p as u128) > n as u128 {
                break;
            }
            work.tick(1, || format!("trial dividing {n}"))?;
            if n.is_multiple_of(p) {
                while n.is_multiple_of(p) {
                    n /= p;
                    push_factor(&mut out, p);
                }
                if n == 1 || is_prime_u64(n) {
                    break;
                }
            }
        }
    }
    split_u64(n, work, &mut out)?;
    out.sort_unstable();
    Ok(out)
}

fn rho_big(n: &BigInt, work: &mut Work) -> Result<BigInt> {
    if n.is_even() {
        return Ok(BigInt::from(2));
    }
    const BATCH: u64 = 64;
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut y = BigInt::from(2);
        let mut r = 1u64;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            work.tick(r, || format!("running rho on {n}"))?;
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    q = (q * (&x - &y).abs()) % n;
                }
                work.tick(steps, || format!("running rho on {n}"))?;
                g = q.gcd(n);
                k += steps;
            }
            r *= 2;
        }
        if &g == n {
            loop {
                ys = f(&ys);
                work.tick(1, || format!("running rho on {n}"))?;
                g = (&x - &ys).abs().gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Ok(g);
        }
    }
    unreachable!("c ranges over all u64")
}

fn split_big(n: BigInt, config: &FactorConfig, work: &mut Work, out: &mut Vec<(BigInt, u32)>) -> Result<()> {
    if n.is_one() {
        return Ok(());
    }
    if let Some(small) = n.to_u64() {
        for (p, e) in factor_u64_with(small, config, work)? {
            for _ in 0..e {
                push_big(out, BigInt::from(p));
            }
        }
        return Ok(());
    }
    if primality(&n).is_prime() {
        push_big(out, n);
        return Ok(());
    }
    let (r, exact) = isqrt(&n);
    if exact {
        split_big(r.clone(), config, work, out)?;
        return split_big(r, config, work, out);
    }
    let d = rho_big(&n, work)?;
    let rest = &n / &d;
    split_big(d, config, work, out)?;
    split_big(rest, config, work, out)
}

fn push_big(out: &mut Vec<(BigInt, u32)>, p: BigInt) {
    match out.iter_mut().find(|(q, _)| *q == p) {
        Some((_, e)) => *e += 1,
        None => out.push((p, 1)),
    }
}

/// Complete factorisation of `n ≥ 1`: trial division up to
/// `config.trial_bound`, then Brent's rho on whatever composite remains.
/// Never returns a partial factorisation; runs out of budget with
/// [`Error::BudgetExceeded`] instead.
pub fn factor(n: &BigInt, config: &FactorConfig) -> Result<FactoredInteger> {
    if !n.is_positive() {
        return Err(Error::InvalidInput(format!("cannot factor {n}")));
    }
    let mut work = Work::new(config.budget);
    if let Some(small) = n.to_u64() {
        let fs = factor_u64_with(small, config, &mut work)?;
        return Ok(FactoredInteger::from_u64_parts(small as u128, &fs));
    }
    let mut rest = n.clone();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for &p in trial_primes(config.trial_bound).iter() {
        if rest.to_u64().is_some() {
            break;
        }
        work.tick(1, || format!("trial dividing {n}"))?;
        let bp = BigInt::from(p);
        if (&rest % &bp).is_zero() {
            while (&rest % &bp).is_zero() {
                rest /= &bp;
                push_big(&mut out, bp.clone());
            }
            if primality(&rest).is_prime() {
                break;
            }
        }
        if &bp * &bp > rest {
            break;
        }
    }
    split_big(rest, config, &mut work, &mut out)?;
    out.sort();
    FactoredInteger::new(n.clone(), out)
}
