//! Factoring, primality and integer roots from the arithmetic layer.

use opn_bounds::arith::{factor, is_prime, isqrt, quadratic_integer_roots, BigInt, FactorConfig};
use opn_bounds::Error;

fn main() -> opn_bounds::Result<()> {
    let cfg = FactorConfig::default();
    for n in ["310807", "1000000016000000063", "18446744073709551617", "2305843009213693951"] {
        let n: BigInt = n.parse().unwrap();
        println!("{n} = {} (prime: {})", factor(&n, &cfg)?, is_prime(&n));
    }
    let (r, exact) = isqrt(&BigInt::from(12 * 7 - 3));
    println!("isqrt(81) = {r}, exact: {exact}");
    let roots = quadratic_integer_roots(&BigInt::from(1), &BigInt::from(1), &BigInt::from(-132));
    println!("x² + x − 132 = 0 has integer roots {roots:?}");

    let tight = FactorConfig { budget: 10, ..cfg };
    match factor(&"1000000016000000063".parse().unwrap(), &tight) {
        Err(e @ Error::BudgetExceeded { .. }) => println!("with budget 10: {e}"),
        other => println!("with budget 10: {other:?}"),
    }
    Ok(())
}
