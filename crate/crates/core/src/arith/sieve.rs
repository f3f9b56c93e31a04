use std::sync::OnceLock;

/// Sieve of Eratosthenes: `flags[n]` is true iff `n` is prime, for `n ≤ limit`.
pub fn prime_flags(limit: usize) -> Vec<bool> {
    let mut flags = vec![true; limit + 1];
    flags[0] = false;
    if limit >= 1 {
        flags[1] = false;
    }
    let mut i = 2;
    while i * i <= limit {
        if flags[i] {
            let mut j = i * i;
            while j <= limit {
                flags[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    flags
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    prime_flags(limit as usize)
        .iter()
        .enumerate()
        .filter_map(|(n, &p)| p.then_some(n as u64))
        .collect()
}

const CACHED_LIMIT: u64 = 100_000;

/// Primes up to `limit`, served from a shared table when `limit ≤ 10^5`.
pub(crate) fn trial_primes(limit: u64) -> std::borrow::Cow<'static, [u64]> {
    static SMALL: OnceLock<Vec<u64>> = OnceLock::new();
    if limit <= CACHED_LIMIT {
        let all = SMALL.get_or_init(|| primes_up_to(CACHED_LIMIT));
        let end = all.partition_point(|&p| p <= limit);
        std::borrow::Cow::Borrowed(&all[..end])
    } else {
        std::borrow::Cow::Owned(primes_up_to(limit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sieve() {
        assert_eq!(primes_up_to(30), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(primes_up_to(1).is_empty());
        assert_eq!(trial_primes(10).as_ref(), &[2, 3, 5, 7]);
    }
}
