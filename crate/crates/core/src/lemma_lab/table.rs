//! Factorisations of `x² + x + 1` for every `x` up to a bound.
//!
//! Built by sieving the polynomial: a prime `q > 3` divides `x² + x + 1` iff
//! `q ≡ 1 (mod 3)` and `x` is one of the two primitive cube roots of unity
//! mod `q`. Once every prime `q ≤ x + 1` is divided out, what is left of
//! `x² + x + 1 < (x + 1)²` is 1 or a prime.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::arith::{pow_mod, prime_flags};
use crate::{Error, Result};

/// Largest admissible bound: `x² + x + 1` must fit in a `u64`.
pub const MAX_TABLE_BOUND: u64 = u32::MAX as u64 - 1;

#[derive(Debug)]
pub struct SigmaTable {
    bound: u64,
    prime: Vec<bool>,
    offsets: Vec<u32>,
    flat: Vec<u64>,
    index: OnceLock<HashMap<u64, Vec<u32>>>,
}

/// Nontrivial cube root of unity mod a prime `q ≡ 1 (mod 3)`.
fn cube_root_of_unity(q: u64) -> u64 {
    (2..q)
        .map(|g| pow_mod(g, (q - 1) / 3, q))
        .find(|&w| w != 1)
        .expect("q ≡ 1 (mod 3) has a primitive cube root of unity")
}

impl SigmaTable {
    /// Sieves `1..=bound` on `jobs` threads. Sieve hits are charged against
    /// `budget`.
    pub fn build(bound: u64, jobs: usize, budget: u64) -> Result<Self> {
        if bound > MAX_TABLE_BOUND {
            return Err(Error::InvalidInput(format!(
                "bound {bound} exceeds {MAX_TABLE_BOUND} (σ-values must fit in 64 bits)"
            )));
        }
        let prime = prime_flags(bound as usize + 1);
        let roots: Vec<(u64, u64, u64)> = (7..=bound + 1)
            .filter(|&q| prime[q as usize] && q % 3 == 1)
            .map(|q| {
                let w = cube_root_of_unity(q);
                (q, w, q - 1 - w)
            })
            .collect();

        let jobs = jobs.max(1);
        let chunk = (bound / (8 * jobs as u64)).clamp(1024, 1 << 16);
        let ranges: Vec<(u64, u64)> = (0..=bound)
            .step_by(chunk as usize)
            .map(|lo| (lo, (lo + chunk).min(bound + 1)))
            .collect();
        let spent = AtomicU64::new(0);
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidInput(e.to_string()))?;
        let parts: Vec<Vec<Vec<u64>>> = pool.install(|| {
            ranges
                .par_iter()
                .map(|&(lo, hi)| sieve_range(lo, hi, &roots, &spent, budget))
                .collect::<Result<_>>()
        })?;

        let mut offsets = Vec::with_capacity(bound as usize + 2);
        let mut flat = Vec::new();
        for lists in parts {
            for list in lists {
                offsets.push(flat.len() as u32);
                flat.extend_from_slice(&list);
            }
        }
        offsets.push(flat.len() as u32);
        debug_assert!((0..=bound).all(|x| {
            let f = &flat[offsets[x as usize] as usize..offsets[x as usize + 1] as usize];
            f.iter().product::<u64>() == x * x + x + 1
        }));
        Ok(SigmaTable { bound, prime: prime[..=bound as usize].to_vec(), offsets, flat, index: OnceLock::new() })
    }

    /// A table whose factor lists for the given `x` are replaced. Used to
    /// plant fake counterexamples when testing the sweeps.
    pub fn doctored(mut self, overrides: &[(u64, Vec<u64>)]) -> Self {
        let mut lists: Vec<Vec<u64>> = (0..=self.bound).map(|x| self.factors(x).to_vec()).collect();
        for (x, f) in overrides {
            let mut f = f.clone();
            f.sort_unstable();
            lists[*x as usize] = f;
        }
        self.offsets.clear();
        self.flat.clear();
        for list in lists {
            self.offsets.push(self.flat.len() as u32);
            self.flat.extend_from_slice(&list);
        }
        self.offsets.push(self.flat.len() as u32);
        self.index = OnceLock::new();
        self
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    pub fn is_prime(&self, x: u64) -> bool {
        x <= self.bound && self.prime[x as usize]
    }

    /// Prime factors of `x² + x + 1` with multiplicity, ascending.
    pub fn factors(&self, x: u64) -> &[u64] {
        let i = x as usize;
        &self.flat[self.offsets[i] as usize..self.offsets[i + 1] as usize]
    }

    /// Distinct prime factors of `x² + x + 1`, ascending.
    pub fn distinct(&self, x: u64) -> impl Iterator<Item = u64> + '_ {
        let f = self.factors(x);
        f.iter()
            .enumerate()
            .filter(move |(i, q)| *i == 0 || f[i - 1] != **q)
            .map(|(_, q)| *q)
    }

    /// `x² + x + 1` as recorded in the table.
    pub fn value(&self, x: u64) -> u64 {
        self.factors(x).iter().product()
    }

    /// All `x ≤ bound` with `q | x² + x + 1`, ascending.
    pub fn multiples(&self, q: u64) -> &[u32] {
        let index = self.index.get_or_init(|| {
            let mut index: HashMap<u64, Vec<u32>> = HashMap::new();
            for x in 0..=self.bound {
                for q in self.distinct(x) {
                    index.entry(q).or_default().push(x as u32);
                }
            }
            index
        });
        index.get(&q).map_or(&[], Vec::as_slice)
    }
}

fn sieve_range(
    lo: u64,
    hi: u64,
    roots: &[(u64, u64, u64)],
    spent: &AtomicU64,
    budget: u64,
) -> Result<Vec<Vec<u64>>> {
    let len = (hi - lo) as usize;
    let mut rem: Vec<u64> = (lo..hi).map(|x| x * x + x + 1).collect();
    let mut lists: Vec<Vec<u64>> = vec![Vec::new(); len];
    let mut hits = 0u64;

    let strike = |q: u64, r: u64, rem: &mut [u64], lists: &mut [Vec<u64>], hits: &mut u64| {
        let mut x = lo + (r + q - lo % q) % q;
        while x < hi {
            let i = (x - lo) as usize;
            while rem[i].is_multiple_of(q) {
                rem[i] /= q;
                lists[i].push(q);
            }
            *hits += 1;
            x += q;
        }
    };
    strike(3, 1, &mut rem, &mut lists, &mut hits);
    for &(q, r1, r2) in roots {
        if q > hi {
            break;
        }
        strike(q, r1, &mut rem, &mut lists, &mut hits);
        strike(q, r2, &mut rem, &mut lists, &mut hits);
        if hits > 4096 {
            if spent.fetch_add(hits, Ordering::Relaxed) + hits > budget {
                return Err(Error::BudgetExceeded { budget, context: "σ-table sieve".into() });
            }
            hits = 0;
        }
    }
    if spent.fetch_add(hits, Ordering::Relaxed) + hits > budget {
        return Err(Error::BudgetExceeded { budget, context: "σ-table sieve".into() });
    }
    for (list, r) in lists.iter_mut().zip(rem) {
        if r > 1 {
            list.push(r);
        }
    }
    Ok(lists)
}
