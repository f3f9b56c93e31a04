//! Acceptance criteria, one line each. Run with `cargo test --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use opn_bounds::arith::{parse_rational, primes_up_to, FactorConfig, Rational};
use opn_bounds::cli::render::render_factors;
use opn_bounds::cli::run_with;
use opn_bounds::contribution::{classify, contributed_primes, ClassTag};
use opn_bounds::lemma_lab::{linking_census, reconstruct_from_d, verify_all, LemmaId, SweepOptions, Tuple};
use opn_bounds::lp::{
    build_system, check_certificate, optimize, simplex_maximize, table2_adjusted, table2_printed, Variant,
};
use opn_bounds::polynomial::{check_proposition, compose, cyclotomic, psi, IntPoly};
use opn_bounds::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(took)
}

/// `lp solve --variant V --out FILE`, returning `(a, b)` from the JSON.
fn cli_solve(variant: &str) -> Result<(Rational, Rational), String> {
    let dir = std::env::temp_dir().join(format!("opn-acceptance-{}-{variant}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let path = dir.join("solve.json");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = ["opn-bounds", "lp", "solve", "--variant", variant, "--out", path.to_str().unwrap()];
    let code = run_with(argv, &mut out, &mut err);
    ensure(code == 0, format!("exit code {code}: {}", String::from_utf8_lossy(&err)))?;
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let _ = std::fs::remove_dir_all(&dir);
    let field = |k: &str| json["result"][k].as_str().map(q).ok_or(format!("missing result.{k}"));
    Ok((field("a")?, field("b")?))
}

fn ac1() -> Outcome {
    let start = Instant::now();
    let (a, b) = cli_solve("standard")?;
    let took = within(start, Duration::from_secs(1))?;
    ensure(a == q("99/37") && b == q("-187/37"), format!("got ({a}, {b})"))?;
    Ok(format!("a = {a}, b = {b} in {took:.0?}"))
}

fn ac2() -> Outcome {
    let start = Instant::now();
    let (a, b) = cli_solve("no3")?;
    let took = within(start, Duration::from_secs(1))?;
    ensure(a == q("51/19") && b == q("-46/19"), format!("got ({a}, {b})"))?;
    Ok(format!("a = {a}, b = {b} in {took:.0?}"))
}

fn ac3() -> Outcome {
    let sys = build_system(Variant::Standard);
    let r = check_certificate(&sys, &table2_adjusted()).map_err(|e| e.to_string())?;
    ensure(r.a == q("99/37") && r.b == q("-187/37"), format!("adjusted gives ({}, {})", r.a, r.b))?;
    match check_certificate(&sys, &table2_printed()) {
        Err(Error::InvalidCertificate(v)) => {
            ensure(v.first().is_some_and(|m| m.starts_with("negative residual on S31_ST")), format!("{v:?}"))?;
            Ok(format!("c10 = 0 accepted; c10 = 1/37 rejected: {}", v[0]))
        }
        other => Err(format!("printed table not rejected: {other:?}")),
    }
}

fn ac4() -> Outcome {
    let cfg = FactorConfig::default();
    let golden = [
        (7u64, "3 · 19", "3 · 19"),
        (11, "7 · 19", "7 · 19"),
        (107, "7 · 13 · 127", "7 · 13 · 127"),
        (557, "7^2 · 6343", "7² · 6343"),
    ];
    for (p, plain, rendered) in golden {
        let f = contributed_primes(p, 2, &cfg).map_err(|e| e.to_string())?;
        ensure(f.to_string() == plain, format!("σ({p}²) = {f}, expected {plain}"))?;
        let shown = render_factors(&f);
        ensure(shown == rendered, format!("σ({p}²) rendered {shown}, expected {rendered}"))?;
        ensure(*f.value() == BigInt::from(p * p + p + 1), format!("σ({p}²) value"))?;
    }
    Ok("σ(7²), σ(11²), σ(107²), σ(557²) byte-exact".into())
}

fn ac5() -> Outcome {
    let start = Instant::now();
    let cfg = FactorConfig::default();
    for p in [120587u64, 269561, 324143, 473117, 833033] {
        let prof = classify(p, &cfg).map_err(|e| e.to_string())?;
        ensure(p % 3 == 2, format!("{p} mod 3"))?;
        ensure(prof.m == 3 && prof.class == Some(ClassTag::S32), format!("{p}: m = {}", prof.m))?;
        ensure(prof.largest() == 16963, format!("{p}: largest {}", prof.largest()))?;
    }
    let took = within(start, Duration::from_secs(5))?;
    Ok(format!("five S32 primes share 16963 in {took:.0?}"))
}

fn ac6() -> Outcome {
    let start = Instant::now();
    let lhs = compose(&cyclotomic(3).map_err(|e| e.to_string())?, &psi(5).map_err(|e| e.to_string())?);
    let rhs = &IntPoly::from_i64s(&[1, -1, 1]) * &IntPoly::from_i64s(&[3, 6, 7, 6, 5, 3, 1]);
    ensure(lhs == rhs, format!("Φ_3(Ψ_5) = {lhs}"))?;
    let mut checked = 0;
    for t in primes_up_to(13).into_iter().filter(|&t| t > 2) {
        for r in (1..=155u64).step_by(2).filter(|r| (r + 1) % (2 * t) == 0) {
            ensure(check_proposition(t, r).map_err(|e| e.to_string())?, format!("fails at t = {t}, r = {r}"))?;
            checked += 1;
        }
    }
    ensure(!check_proposition(3, 3).map_err(|e| e.to_string())?, "control (3, 3) divides")?;
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!("display identity, {checked} pairs, control false in {took:.1?}"))
}

fn tup<const N: usize>(pairs: [(&str, u64); N]) -> Tuple {
    Tuple::new(pairs)
}

fn ac7() -> Outcome {
    let mut summary = Vec::new();
    for (bound, jobs, limit) in [(10_000u64, 1usize, 30u64), (100_000, 4, 600)] {
        let start = Instant::now();
        let opts = SweepOptions { jobs, ..SweepOptions::default() };
        let reports = verify_all(bound, &opts).map_err(|e| e.to_string())?;
        let took = within(start, Duration::from_secs(limit))?;
        ensure(reports.len() == LemmaId::ALL.len(), "missing verifiers")?;
        for (id, r) in &reports {
            ensure(r.passed(), format!("{id} at {bound}: {} counterexamples", r.counterexamples.len()))?;
        }
        let f1 = tup([("a", 11), ("b", 7), ("c", 19), ("d", 7), ("e", 3)]);
        ensure(reports[&LemmaId::Factorization1].contains_witness(&f1), "F1 witness (11, 7, 19, 7, 3) missing")?;
        let z1 = tup([("a", 9), ("b", 3), ("c", 13), ("d", 7)]);
        ensure(reports[&LemmaId::ZelProof1].contains_witness(&z1), "ZelProof1 witness (9, 3, 13, 7) missing")?;
        let tuples: u64 = reports.values().map(|r| r.tuples_examined).sum();
        summary.push(format!("{bound}: {} verifiers, {tuples} tuples, {took:.1?} on {jobs} worker(s)", reports.len()));
    }
    let rec = reconstruct_from_d(7).map_err(|e| e.to_string())?.ok_or("reconstruct_from_d(7) absent")?;
    ensure((rec.a, rec.b, rec.c) == (11, 7, 19), format!("reconstruct_from_d(7) = {rec:?}"))?;
    Ok(summary.join("; "))
}

fn ac8() -> Outcome {
    let census = linking_census(100_000, &SweepOptions::default()).map_err(|e| e.to_string())?;
    for f in &census.fibers {
        let low = f.members.iter().filter(|m| matches!(m.class, ClassTag::S1 | ClassTag::S21)).count();
        ensure(low <= 1 && f.len() <= 2, format!("fiber {} = {:?}", f.shared_prime, f.primes()))?;
    }
    ensure(census.passed(), format!("{:?}", census.violations))?;
    let pairs = census.fibers.iter().filter(|f| f.len() == 2).count();
    Ok(format!("{} primes, {} fibers, {pairs} of size 2", census.primes_linked, census.fibers.len()))
}

fn ac9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut sampled = 0;
    for variant in [Variant::Standard, Variant::No3] {
        let sys = build_system(variant);
        let bounds: Vec<(Rational, Rational)> = {
            let mut v = vec![optimize(&sys).map(|o| (o.result.a, o.result.b)).map_err(|e| e.to_string())?];
            if variant == Variant::Standard {
                let r = check_certificate(&sys, &table2_adjusted()).map_err(|e| e.to_string())?;
                v.push((r.a, r.b));
            }
            v
        };
        let mut found = 0;
        let mut tries = 0;
        while found < 5_000 {
            tries += 1;
            ensure(tries < 5_000_000, "feasible-point generator stalled")?;
            let Some(x) = common::feasible_point(&mut rng, &sys) else { continue };
            found += 1;
            let (omega, big_omega) = (&x[1], &x[0]);
            for (a, b) in &bounds {
                ensure(a * omega + b <= *big_omega, format!("{variant}: point {x:?} violates {a}·ω + {b}"))?;
            }
        }
        sampled += found;
    }

    for i in 0..50 {
        let lp = common::random_lp(&mut rng);
        let brute = common::vertex_optimum(&lp);
        match (simplex_maximize(&lp), brute) {
            (Ok(s), Some(v)) => {
                ensure(s.value == v, format!("LP {i}: simplex {} vs vertices {v}", s.value))?;
                ensure(lp.is_feasible(&s.x), format!("LP {i}: infeasible assignment"))?;
            }
            (Err(Error::Infeasible), None) => {}
            (got, want) => return Err(format!("LP {i}: simplex {got:?} vs vertices {want:?}")),
        }
    }

    for n in 1..=200u64 {
        let mut prod = IntPoly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            prod = &prod * &cyclotomic(d).map_err(|e| e.to_string())?;
        }
        let xn = &IntPoly::monomial(BigInt::from(1), n as usize) - &IntPoly::one();
        ensure(prod == xn, format!("∏ Φ_d ≠ x^{n} − 1"))?;
    }
    Ok(format!("{sampled} feasible points, 50 LPs, ∏Φ_d = x^n − 1 for n ≤ 200"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1", "lp solve standard", ac1),
        ("AC2", "lp solve no3", ac2),
        ("AC3", "Table 2 certificate check", ac3),
        ("AC4", "golden σ facts", ac4),
        ("AC5", "S32 quintuple", ac5),
        ("AC6", "cyclotomic proposition", ac6),
        ("AC7", "lemma suites", ac7),
        ("AC8", "linking census 10^5", ac8),
        ("AC9", "property suite", ac9),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("[PASS] {id} {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id} {name}: {why}");
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
