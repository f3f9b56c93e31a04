//! Sweep every lemma up to a bound (first argument, default 10000).

use opn_bounds::lemma_lab::{verify_all, SweepOptions};

fn main() -> opn_bounds::Result<()> {
    let bound = std::env::args().nth(1).map_or(Ok(10_000), |s| s.parse()).expect("bound must be an integer");
    let opts = SweepOptions { jobs: std::thread::available_parallelism().map_or(1, |n| n.get()), ..Default::default() };
    let reports = verify_all(bound, &opts)?;
    for (id, r) in &reports {
        let verdict = if r.passed() { "PASS" } else { "FAIL" };
        let first = r.witnesses.first().map_or_else(|| "-".to_owned(), ToString::to_string);
        println!("{verdict} {:<22} {:>8} tuples  first witness {first}", id.as_str(), r.tuples_examined);
    }
    Ok(())
}
