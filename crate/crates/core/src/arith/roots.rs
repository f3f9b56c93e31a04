use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// `(⌊√n⌋, ⌊√n⌋² == n)` for `n ≥ 0`. Negative input yields `(0, false)`.
pub fn isqrt(n: &BigInt) -> (BigInt, bool) {
    if n.is_negative() {
        return (BigInt::zero(), false);
    }
    let root = n.sqrt();
    let exact = &root * &root == *n;
    (root, exact)
}

pub fn isqrt_u64(n: u64) -> u64 {
    n.isqrt()
}

/// All nonnegative integers `x` with `a·x² + b·x + c = 0`, ascending.
///
/// Works from the discriminant and an exact integer square root, so no
/// floating point is involved. Returns an empty list when `a = 0`.
pub fn quadratic_integer_roots(a: &BigInt, b: &BigInt, c: &BigInt) -> Vec<BigInt> {
    if a.is_zero() {
        return Vec::new();
    }
    let disc = b * b - BigInt::from(4) * a * c;
    let (s, exact) = isqrt(&disc);
    if !exact {
        return Vec::new();
    }
    let two_a = a * 2;
    let mut roots: Vec<BigInt> = [-b + &s, -b - &s]
        .into_iter()
        .filter_map(|num| {
            let (q, r) = num.div_rem(&two_a);
            (r.is_zero() && !q.is_negative()).then_some(q)
        })
        .filter(|x| (a * x * x + b * x + c).is_zero())
        .collect();
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn spec_examples() {
        assert_eq!(isqrt(&big(225)), (big(15), true));
        assert_eq!(isqrt(&big(12 * 19 - 3)), (big(15), true));
        assert_eq!(isqrt(&big(0)), (big(0), true));
        assert_eq!(isqrt(&big(26)), (big(5), false));
    }

    #[test]
    fn floor_property_below_1e5() {
        for n in 0..=100_000i64 {
            let (r, exact) = isqrt(&big(n));
            assert!(&r * &r <= big(n) && big(n) < (&r + 1) * (&r + 1));
            assert_eq!(exact, &r * &r == big(n));
            assert_eq!(BigInt::from(isqrt_u64(n as u64)), r);
        }
    }

    #[test]
    fn quadratic_examples() {
        // b² + b + 1 = 3·19 is b² + b − 56 = 0
        assert_eq!(quadratic_integer_roots(&big(1), &big(1), &big(1 - 57)), vec![big(7)]);
        assert!(quadratic_integer_roots(&big(1), &big(1), &big(-57)).is_empty());
        assert_eq!(quadratic_integer_roots(&big(1), &big(1), &big(1 - 133)), vec![big(11)]);
        assert!(quadratic_integer_roots(&big(1), &big(0), &big(1)).is_empty());
        // (x - 2)(x - 5) and a double root
        assert_eq!(quadratic_integer_roots(&big(1), &big(-7), &big(10)), vec![big(2), big(5)]);
        assert_eq!(quadratic_integer_roots(&big(1), &big(-6), &big(9)), vec![big(3)]);
        // 2x² - 3x - 2 = (2x + 1)(x - 2): only x = 2 is integral
        assert_eq!(quadratic_integer_roots(&big(2), &big(-3), &big(-2)), vec![big(2)]);
        assert!(quadratic_integer_roots(&big(0), &big(1), &big(1)).is_empty());
    }
}
