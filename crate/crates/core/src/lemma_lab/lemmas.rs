//! Hypothesis enumerations and premise predicates for each lemma.

use crate::arith::{factor_u64, is_prime_u64, FactorConfig};
use crate::Result;

use super::{LemmaId, SigmaTable, Sink, Tuple};

/// Exponent primes `c` swept for the modularity lemma.
pub(crate) const MODULARITY_EXPONENTS: [u64; 3] = [3, 5, 7];

fn tri(x: u64) -> u128 {
    crate::arith::tri(x)
}

fn t<const N: usize>(pairs: [(&str, u64); N]) -> Tuple {
    Tuple::new(pairs)
}

fn odd_prime(x: u64) -> bool {
    x > 2 && is_prime_u64(x)
}

/// Outer-loop step for lemma `id` at the squared variable `x`.
pub(crate) fn visit(id: LemmaId, tb: &SigmaTable, x: u64, cfg: &FactorConfig, s: &mut Sink) -> Result<()> {
    match id {
        LemmaId::OnlyOne3 => only_one_3(tb, x, s),
        LemmaId::Modularity => return modularity(tb, x, cfg, s),
        LemmaId::Simplifying => simplifying(tb, x, s),
        LemmaId::Factorization1 => factorization1(tb, x, s),
        LemmaId::Factorization2 => factorization2(tb, x, s),
        LemmaId::Factorization3 => factorization3(tb, x, s),
        LemmaId::ZelProof1 => zelproof1(tb, x, s),
        LemmaId::ZelProof2 => zelproof2(tb, x, s),
        LemmaId::UniqueS1S2 => unique_s1_s2(tb, x, s),
        LemmaId::SemiS31 => semi_s31(tb, x, s),
        LemmaId::SemiS22S31 => semi_s22_s31(tb, x, s),
        LemmaId::UniqueS1S31 => unique_s31(tb, x, s, 1),
        LemmaId::UniqueS21S31 => unique_s31(tb, x, s, 3),
        LemmaId::SmallFactor => small_factor(tb, x, s),
        LemmaId::Census => unreachable!("census runs on fibers"),
    }
    Ok(())
}

pub(crate) fn notes(id: LemmaId) -> Vec<String> {
    let s = match id {
        LemmaId::Modularity => "b ranges over primes ≤ bound, c over {3, 5, 7}",
        LemmaId::Simplifying => "a, b, c, d all ≤ bound",
        LemmaId::Factorization1 | LemmaId::ZelProof1 => "a, b range over positive integers ≤ bound",
        LemmaId::ZelProof2
        | LemmaId::UniqueS1S2
        | LemmaId::SemiS31
        | LemmaId::SemiS22S31
        | LemmaId::UniqueS1S31
        | LemmaId::UniqueS21S31
        | LemmaId::SmallFactor => "tuples examined are near misses meeting all but the final premise; each is kept as a witness and every full match is a counterexample",
        _ => return Vec::new(),
    };
    vec![s.to_owned()]
}

/// `3 | σ(p²)` exactly once for primes `p ≡ 1 (mod 3)`.
fn only_one_3(tb: &SigmaTable, p: u64, s: &mut Sink) {
    if p <= 3 || !tb.is_prime(p) || p % 3 != 1 {
        return;
    }
    let v3 = tb.factors(p).iter().filter(|&&q| q == 3).count() as u64;
    s.judge(v3 == 1, t([("p", p), ("v3", v3)]));
}

/// Prime divisors `a` of `σ(b^{c−1})` satisfy `a = c` or `a ≡ 1 (mod c)`.
fn modularity(tb: &SigmaTable, b: u64, cfg: &FactorConfig, s: &mut Sink) -> Result<()> {
    if !tb.is_prime(b) {
        return Ok(());
    }
    for c in MODULARITY_EXPONENTS {
        let primes: Vec<u64> = if c == 3 {
            tb.distinct(b).collect()
        } else {
            let Some(sigma) = geometric(b, c) else {
                s.skip();
                continue;
            };
            factor_u64(sigma, cfg)?.into_iter().map(|(q, _)| q).collect()
        };
        for a in primes {
            s.judge(a == c || a % c == 1, t([("a", a), ("b", b), ("c", c)]));
        }
    }
    Ok(())
}

/// `1 + b + … + b^{c−1}` when it fits in 64 bits.
fn geometric(b: u64, c: u64) -> Option<u64> {
    let mut sum: u64 = 1;
    let mut term: u64 = 1;
    for _ in 1..c {
        term = term.checked_mul(b)?;
        sum = sum.checked_add(term)?;
    }
    Some(sum)
}

fn divisors(factors: &[u64]) -> Vec<u64> {
    let mut divs = vec![1u64];
    let mut i = 0;
    while i < factors.len() {
        let q = factors[i];
        let e = factors[i..].iter().take_while(|&&r| r == q).count();
        let base = divs.len();
        let mut pw = 1u64;
        for _ in 0..e {
            pw *= q;
            for k in 0..base {
                divs.push(divs[k] * pw);
            }
        }
        i += e;
    }
    divs.sort_unstable();
    divs
}

/// `a² + a + 1 = bcd` with `b ≥ c` forces `b²d > a²`.
fn simplifying(tb: &SigmaTable, a: u64, s: &mut Sink) {
    let bound = tb.bound();
    let n = tb.value(a);
    let divs = divisors(tb.factors(a));
    for &d in divs.iter().take_while(|&&d| d <= bound) {
        let m = n / d;
        for &c in divs.iter().take_while(|&&c| c <= bound && c * c <= m) {
            if !m.is_multiple_of(c) {
                continue;
            }
            let b = m / c;
            if b > bound {
                continue;
            }
            let holds = (b as u128) * (b as u128) * (d as u128) > (a as u128) * (a as u128);
            s.judge(holds, t([("a", a), ("b", b), ("c", c), ("d", d)]));
        }
    }
}

/// `a² + a + 1 = cd`, `b² + b + 1 = ce`, `c > d > e`, `c` prime.
fn factorization1(tb: &SigmaTable, a: u64, s: &mut Sink) {
    let pa = tb.value(a);
    for c in tb.distinct(a) {
        let d = pa / c;
        if d >= c {
            continue;
        }
        for &b in tb.multiples(c) {
            let b = b as u64;
            let e = tb.value(b) / c;
            if b == 0 || e >= d {
                continue;
            }
            let holds = c == a + b + 1 && a as i128 - b as i128 == d as i128 - e as i128;
            s.judge(holds, t([("a", a), ("b", b), ("c", c), ("d", d), ("e", e)]));
        }
    }
}

/// `a² + a + 1 = 3de`, `b² + b + 1 = df`, `d > e > f`, `a, b, d` prime.
fn factorization2(tb: &SigmaTable, a: u64, s: &mut Sink) {
    let pa = tb.value(a);
    if !tb.is_prime(a) || !pa.is_multiple_of(3) {
        return;
    }
    for d in tb.distinct(a) {
        let r = pa / 3;
        if !r.is_multiple_of(d) || r / d >= d {
            continue;
        }
        let e = r / d;
        for &b in tb.multiples(d) {
            let b = b as u64;
            let f = tb.value(b) / d;
            if !tb.is_prime(b) || f >= e {
                continue;
            }
            let holds = d == a + b + 1 && a as i128 - b as i128 == 3 * e as i128 - f as i128;
            s.judge(holds, t([("a", a), ("b", b), ("d", d), ("e", e), ("f", f)]));
        }
    }
}

/// `a² + a + 1 = 3de`, `b² + b + 1 = 3df`, `d ≥ e > f`, `a, b, d` prime.
fn factorization3(tb: &SigmaTable, a: u64, s: &mut Sink) {
    let pa = tb.value(a);
    if !tb.is_prime(a) || !pa.is_multiple_of(3) {
        return;
    }
    for d in tb.distinct(a) {
        let r = pa / 3;
        if !r.is_multiple_of(d) || r / d > d {
            continue;
        }
        let e = r / d;
        for &b in tb.multiples(d) {
            let b = b as u64;
            let pb = tb.value(b);
            if !tb.is_prime(b) || !pb.is_multiple_of(3) || !(pb / 3).is_multiple_of(d) {
                continue;
            }
            let f = pb / 3 / d;
            if f >= e {
                continue;
            }
            let holds = 3 * d == a + b + 1 && a as i128 - b as i128 == e as i128 - f as i128;
            s.judge(holds, t([("a", a), ("b", b), ("d", d), ("e", e), ("f", f)]));
        }
    }
}

/// `a² + a + 1 = cd`, `b² + b + 1 = c`, `c > d > 1`, `c` prime.
fn zelproof1(tb: &SigmaTable, a: u64, s: &mut Sink) {
    let pa = tb.value(a);
    for c in tb.distinct(a) {
        let d = pa / c;
        if d <= 1 || d >= c {
            continue;
        }
        for &b in tb.multiples(c) {
            let b = b as u64;
            if b == 0 || tb.value(b) != c {
                continue;
            }
            s.judge(a == b * b, t([("a", a), ("b", b), ("c", c), ("d", d)]));
        }
    }
}

/// No primes `> 3` with `a² + a + 1 = cd`, `b² + b + 1 = cf`, `c > d > f`.
fn zelproof2(tb: &SigmaTable, a: u64, s: &mut Sink) {
    if a <= 3 || !tb.is_prime(a) {
        return;
    }
    let pa = tb.value(a);
    for c in tb.distinct(a) {
        let d = pa / c;
        if d <= 3 || d >= c || !is_prime_u64(d) {
            continue;
        }
        s.examine();
        s.witness(t([("a", a), ("c", c), ("d", d)]));
        for &b in tb.multiples(c) {
            let b = b as u64;
            let f = tb.value(b) / c;
            if b <= 3 || !tb.is_prime(b) || f <= 3 || f >= d || !is_prime_u64(f) {
                continue;
            }
            s.counterexample(t([("a", a), ("b", b), ("c", c), ("d", d), ("f", f)]));
        }
    }
}

/// With `a² + a + 1 = cd`, `b² + b + 1 = 3c`, `c > d ≠ 3`, no odd prime `g`
/// has `g² + g + 1 = dh` with `d > h` and `h` equal to 1 or an odd prime.
fn unique_s1_s2(tb: &SigmaTable, a: u64, s: &mut Sink) {
    if !odd_prime_in(tb, a) {
        return;
    }
    let pa = tb.value(a);
    for c in tb.distinct(a) {
        let d = pa / c;
        if d >= c || d == 3 || !odd_prime(d) {
            continue;
        }
        for &b in tb.multiples(c) {
            let b = b as u64;
            if !odd_prime_in(tb, b) || tb.value(b) != 3 * c {
                continue;
            }
            s.examine();
            s.witness(t([("a", a), ("b", b), ("c", c), ("d", d)]));
            for &g in tb.multiples(d) {
                let g = g as u64;
                let h = tb.value(g) / d;
                if !odd_prime_in(tb, g) || h >= d || !(h == 1 || odd_prime(h)) {
                    continue;
                }
                s.counterexample(t([("a", a), ("b", b), ("c", c), ("d", d), ("g", g), ("h", h)]));
            }
        }
    }
}

fn odd_prime_in(tb: &SigmaTable, x: u64) -> bool {
    x > 2 && tb.is_prime(x)
}

/// Pairs `(b, f)` with `b² + b + 1 = 3df`, `b` and `f` odd primes, `f ≤ d`.
fn s31_partners(tb: &SigmaTable, d: u64) -> Vec<(u64, u64)> {
    tb.multiples(d)
        .iter()
        .map(|&b| b as u64)
        .filter(|&b| odd_prime_in(tb, b))
        .filter_map(|b| {
            let pb = tb.value(b);
            (pb.is_multiple_of(3) && (pb / 3).is_multiple_of(d)).then(|| (b, pb / 3 / d))
        })
        .filter(|&(_, f)| f <= d && odd_prime(f))
        .collect()
}

/// No distinct odd primes with `x² + x + 1 = 3d·y` for `(x, y)` in
/// `(a, e), (b, f), (c, g)` and `d ≥ e > f > g`.
fn semi_s31(tb: &SigmaTable, a: u64, s: &mut Sink) {
    if !odd_prime_in(tb, a) || !tb.value(a).is_multiple_of(3) {
        return;
    }
    let r = tb.value(a) / 3;
    for d in tb.distinct(a) {
        if !r.is_multiple_of(d) {
            continue;
        }
        let e = r / d;
        if e > d || !odd_prime(e) {
            continue;
        }
        let below: Vec<(u64, u64)> = s31_partners(tb, d).into_iter().filter(|&(_, f)| f < e).collect();
        for &(b, f) in &below {
            if distinct(&[a, b, d, e, f]) {
                s.examine();
                s.witness(t([("a", a), ("b", b), ("d", d), ("e", e), ("f", f)]));
            }
            for &(c, g) in below.iter().filter(|&&(_, g)| g < f) {
                if distinct(&[a, b, c, d, e, f, g]) {
                    s.counterexample(t([("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f), ("g", g)]));
                }
            }
        }
    }
}

fn distinct(xs: &[u64]) -> bool {
    xs.iter().enumerate().all(|(i, x)| !xs[..i].contains(x))
}

/// No odd primes with `a² + a + 1 = 3de`, `b² + b + 1 = 3df`,
/// `c² + c + 1 = dg`, `d ≥ e, f, g` and `e ≠ f`.
fn semi_s22_s31(tb: &SigmaTable, c: u64, s: &mut Sink) {
    if !odd_prime_in(tb, c) {
        return;
    }
    let pc = tb.value(c);
    for d in tb.distinct(c) {
        let g = pc / d;
        if g > d || !odd_prime(g) {
            continue;
        }
        let partners = s31_partners(tb, d);
        for &(a, e) in &partners {
            s.examine();
            s.witness(t([("a", a), ("c", c), ("d", d), ("e", e), ("g", g)]));
            for &(b, f) in partners.iter().filter(|&&(_, f)| f < e) {
                s.counterexample(t([("a", a), ("b", b), ("c", c), ("d", d), ("e", e), ("f", f), ("g", g)]));
            }
        }
    }
}

/// No odd primes with `a² + a + 1 = 3de`, `b² + b + 1 = k·d`, `d ≥ e`, for
/// `k = 1` (S1 against S31) or `k = 3` (S21 against S31).
fn unique_s31(tb: &SigmaTable, a: u64, s: &mut Sink, k: u64) {
    if !odd_prime_in(tb, a) || !tb.value(a).is_multiple_of(3) {
        return;
    }
    let r = tb.value(a) / 3;
    for d in tb.distinct(a) {
        if !r.is_multiple_of(d) {
            continue;
        }
        let e = r / d;
        if e > d || !odd_prime(e) {
            continue;
        }
        s.examine();
        s.witness(t([("a", a), ("d", d), ("e", e)]));
        for &b in tb.multiples(d) {
            let b = b as u64;
            if odd_prime_in(tb, b) && tb.value(b) == k * d {
                s.counterexample(t([("a", a), ("b", b), ("d", d), ("e", e)]));
            }
        }
    }
}

/// With `a² + a + 1 = df`, `b² + b + 1 = 3d`, `d > f > 3`, no odd primes
/// `c, g` have `c² + c + 1 = 3fg` with `f > g`.
fn small_factor(tb: &SigmaTable, a: u64, s: &mut Sink) {
    if !odd_prime_in(tb, a) {
        return;
    }
    let pa = tb.value(a);
    for d in tb.distinct(a) {
        let f = pa / d;
        if f >= d || f <= 3 || !odd_prime(f) {
            continue;
        }
        for &b in tb.multiples(d) {
            let b = b as u64;
            if !odd_prime_in(tb, b) || tb.value(b) != 3 * d {
                continue;
            }
            s.examine();
            s.witness(t([("a", a), ("b", b), ("d", d), ("f", f)]));
            for (c, g) in s31_partners(tb, f) {
                if g < f {
                    s.counterexample(t([("a", a), ("b", b), ("c", c), ("d", d), ("f", f), ("g", g)]));
                }
            }
        }
    }
}

fn get(t: &Tuple, keys: &[&str]) -> Option<Vec<u128>> {
    keys.iter().map(|k| t.get(k).map(u128::from)).collect()
}

fn prime(x: u128) -> bool {
    u64::try_from(x).is_ok_and(is_prime_u64)
}

fn oddp(x: u128) -> bool {
    x > 2 && prime(x)
}

fn p(x: u128) -> u128 {
    x * x + x + 1
}

/// Hypothesis predicate for witnesses of lemma `id`, evaluated from the
/// tuple alone with fresh arithmetic.
pub fn premise(id: LemmaId, tuple: &Tuple) -> bool {
    let v = |keys: &[&str]| get(tuple, keys);
    match id {
        LemmaId::OnlyOne3 => v(&["p", "v3"]).is_some_and(|x| {
            let (pp, v3) = (x[0], x[1]);
            let mut n = p(pp);
            let mut k = 0;
            while n.is_multiple_of(3) {
                n /= 3;
                k += 1;
            }
            pp > 3 && prime(pp) && pp % 3 == 1 && k == v3
        }),
        LemmaId::Modularity => v(&["a", "b", "c"]).is_some_and(|x| {
            let (a, b, c) = (x[0], x[1], x[2]);
            let sigma = (0..c as u32).try_fold(0u128, |acc, i| b.checked_pow(i).and_then(|t| acc.checked_add(t)));
            prime(a) && prime(b) && prime(c) && sigma.is_some_and(|s| s % a == 0)
        }),
        LemmaId::Simplifying => v(&["a", "b", "c", "d"]).is_some_and(|x| {
            let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
            a >= 1 && c >= 1 && d >= 1 && b >= c && p(a) == b * c * d
        }),
        LemmaId::Factorization1 => v(&["a", "b", "c", "d", "e"]).is_some_and(|x| {
            let (a, b, c, d, e) = (x[0], x[1], x[2], x[3], x[4]);
            a >= 1 && b >= 1 && prime(c) && c > d && d > e && e >= 1 && p(a) == c * d && p(b) == c * e
        }),
        LemmaId::Factorization2 => v(&["a", "b", "d", "e", "f"]).is_some_and(|x| {
            let (a, b, d, e, f) = (x[0], x[1], x[2], x[3], x[4]);
            prime(a) && prime(b) && prime(d) && d > e && e > f && f >= 1 && p(a) == 3 * d * e && p(b) == d * f
        }),
        LemmaId::Factorization3 => v(&["a", "b", "d", "e", "f"]).is_some_and(|x| {
            let (a, b, d, e, f) = (x[0], x[1], x[2], x[3], x[4]);
            prime(a) && prime(b) && prime(d) && d >= e && e > f && f >= 1 && p(a) == 3 * d * e && p(b) == 3 * d * f
        }),
        LemmaId::ZelProof1 => v(&["a", "b", "c", "d"]).is_some_and(|x| {
            let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
            a >= 1 && b >= 1 && prime(c) && c > d && d > 1 && p(a) == c * d && p(b) == c
        }),
        LemmaId::ZelProof2 => v(&["a", "c", "d"]).is_some_and(|x| {
            let (a, c, d) = (x[0], x[1], x[2]);
            [a, c, d].iter().all(|&y| y > 3 && prime(y)) && c > d && p(a) == c * d
        }),
        LemmaId::UniqueS1S2 => v(&["a", "b", "c", "d"]).is_some_and(|x| {
            let (a, b, c, d) = (x[0], x[1], x[2], x[3]);
            x.iter().all(|&y| oddp(y)) && c > d && d != 3 && p(a) == c * d && p(b) == 3 * c
        }),
        LemmaId::SemiS31 => v(&["a", "b", "d", "e", "f"]).is_some_and(|x| {
            let (a, b, d, e, f) = (x[0], x[1], x[2], x[3], x[4]);
            let ds: Vec<u64> = x.iter().map(|&y| y as u64).collect();
            x.iter().all(|&y| oddp(y))
                && distinct(&ds)
                && d >= e
                && e > f
                && p(a) == 3 * d * e
                && p(b) == 3 * d * f
        }),
        LemmaId::SemiS22S31 => v(&["a", "c", "d", "e", "g"]).is_some_and(|x| {
            let (a, c, d, e, g) = (x[0], x[1], x[2], x[3], x[4]);
            x.iter().all(|&y| oddp(y)) && d >= e && d >= g && p(a) == 3 * d * e && p(c) == d * g
        }),
        LemmaId::UniqueS1S31 | LemmaId::UniqueS21S31 => v(&["a", "d", "e"]).is_some_and(|x| {
            let (a, d, e) = (x[0], x[1], x[2]);
            x.iter().all(|&y| oddp(y)) && d >= e && p(a) == 3 * d * e
        }),
        LemmaId::SmallFactor => v(&["a", "b", "d", "f"]).is_some_and(|x| {
            let (a, b, d, f) = (x[0], x[1], x[2], x[3]);
            x.iter().all(|&y| oddp(y)) && d > f && f > 3 && p(a) == d * f && p(b) == 3 * d
        }),
        LemmaId::Census => {
            let members: Vec<u64> =
                tuple.entries().iter().filter(|(k, _)| k.starts_with('p')).map(|(_, v)| *v).collect();
            tuple.get("q").is_some_and(|q| {
                members.len() == 2
                    && members
                        .iter()
                        .all(|&m| is_prime_u64(m) && tri(m).is_multiple_of(u128::from(q)))
            })
        }
    }
}
