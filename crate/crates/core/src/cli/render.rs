//! Deterministic text renderings. Elapsed times are left out so output is
//! diff-stable.

use std::fmt::Write;

use num_traits::{Signed, Zero};

use crate::arith::{FactoredInteger, Rational};
use crate::contribution::{ContributionProfile, LinkedPrime};
use crate::lemma_lab::{FiberReport, Reconstruction, SearchReport};
use crate::lp::{BoundResult, ConstraintSystem, Optimum};
use crate::polynomial::PropositionReport;

/// Rational with a typographic minus sign.
pub fn fmt_q(q: &Rational) -> String {
    if q.is_negative() {
        format!("−{}", -q)
    } else {
        q.to_string()
    }
}

/// `a·ω + b ≤ Ω`, e.g. `99/37·ω − 187/37 ≤ Ω`.
pub fn render_bound(a: &Rational, b: &Rational) -> String {
    let mut s = format!("{}·ω", fmt_q(a));
    if b.is_negative() {
        write!(s, " − {}", -b).unwrap();
    } else if !b.is_zero() {
        write!(s, " + {b}").unwrap();
    }
    s.push_str(" ≤ Ω");
    s
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// `7² · 6343`
pub fn render_factors(f: &FactoredInteger) -> String {
    if f.factors().is_empty() {
        return "1".into();
    }
    f.factors()
        .iter()
        .map(|(p, e)| if *e == 1 { p.to_string() } else { format!("{p}{}", superscript(*e)) })
        .collect::<Vec<_>>()
        .join(" · ")
}

fn residual_lines(s: &mut String, r: &BoundResult) {
    s.push_str("residual:\n");
    for (sym, c) in &r.residual {
        writeln!(s, "  {:<10} {}", sym.name(), fmt_q(c)).unwrap();
    }
}

pub fn render_optimum(o: &Optimum) -> String {
    let mut s = String::new();
    writeln!(s, "variant {}", o.certificate.variant).unwrap();
    writeln!(s, "{}", render_bound(&o.result.a, &o.result.b)).unwrap();
    writeln!(s, "a = {}", fmt_q(&o.result.a)).unwrap();
    writeln!(s, "b = {}", fmt_q(&o.result.b)).unwrap();
    s.push_str("multipliers:\n");
    for (id, c) in o.certificate.sorted() {
        writeln!(s, "  {:<6} {}", id, fmt_q(c)).unwrap();
    }
    residual_lines(&mut s, &o.result);
    s
}

pub fn render_check(r: &BoundResult) -> String {
    let mut s = String::from("VALID certificate\n");
    writeln!(s, "{}", render_bound(&r.a, &r.b)).unwrap();
    residual_lines(&mut s, r);
    s
}

pub fn render_violations(v: &[String]) -> String {
    let mut s = String::from("INVALID certificate\n");
    for line in v {
        writeln!(s, "  {line}").unwrap();
    }
    s
}

pub fn render_system(sys: &ConstraintSystem) -> String {
    let mut s = format!("variant {} ({} relations)\n", sys.variant, sys.relations.len());
    for r in &sys.relations {
        writeln!(s, "{r}").unwrap();
    }
    s
}

pub fn render_report(r: &SearchReport) -> String {
    let mut s = String::new();
    let verdict = if r.passed() { "PASS" } else { "FAIL" };
    writeln!(s, "{verdict} ({} tuples)", r.tuples_examined).unwrap();
    writeln!(s, "lemma {} up to {}", r.lemma_id, r.bound).unwrap();
    writeln!(s, "{} counterexamples", r.counterexamples.len()).unwrap();
    for t in &r.counterexamples {
        writeln!(s, "  {t}").unwrap();
    }
    if !r.witnesses.is_empty() {
        writeln!(s, "{} witnesses shown", r.witnesses.len()).unwrap();
        for t in &r.witnesses {
            writeln!(s, "  {t}").unwrap();
        }
    }
    for n in &r.notes {
        writeln!(s, "note: {n}").unwrap();
    }
    s
}

pub fn render_profile(p: &ContributionProfile) -> String {
    let mut s = String::new();
    writeln!(s, "p = {}", p.p).unwrap();
    writeln!(s, "σ(p^{}) = {} = {}", p.e, p.sigma, render_factors(&p.contributed)).unwrap();
    writeln!(s, "m = {}, j = {}", p.m, p.j).unwrap();
    match p.class {
        Some(c) => writeln!(s, "class {c}").unwrap(),
        None => writeln!(s, "class none").unwrap(),
    }
    s
}

pub fn render_link(l: &LinkedPrime) -> String {
    let mut s = format!("p = {} (class {})\nlinked prime {}\n", l.p, l.class, l.ell);
    if l.exceptional {
        let bs: Vec<String> = l.triggers.iter().map(u64::to_string).collect();
        writeln!(s, "exceptional: smaller prime taken, b² + b + 1 = 3c for b = {}", bs.join(", ")).unwrap();
    }
    s
}

pub fn render_fibers(fibers: &[FiberReport]) -> String {
    let mut s = format!("{} fibers\n", fibers.len());
    if fibers.is_empty() {
        return s;
    }
    writeln!(s, "{:>12}  {:>4}  members", "shared", "size").unwrap();
    for f in fibers {
        let ms: Vec<String> = f.primes().iter().map(u64::to_string).collect();
        writeln!(s, "{:>12}  {:>4}  {}", f.shared_prime, f.len(), ms.join(", ")).unwrap();
    }
    s
}

pub fn render_proposition(r: &PropositionReport) -> String {
    let mut s = format!("t = {}, r = {}\n", r.t, r.r);
    writeln!(s, "r ≡ −1 (mod 2t): {}", r.congruent).unwrap();
    writeln!(s, "Φ_{}(x) divides Φ_{}(Ψ_{}(x)): {}", 2 * r.t, r.t, r.r, r.divides).unwrap();
    writeln!(s, "degree of Φ_{}(Ψ_{}): {}", r.t, r.r, r.composed_degree).unwrap();
    if !r.consistent() {
        s.push_str("COUNTEREXAMPLE\n");
    }
    s
}

pub fn render_reconstruction(d: u64, t: Option<&Reconstruction>) -> String {
    match t {
        Some(t) => format!("d = {d}\n(a, b, c) = ({}, {}, {})\n", t.a, t.b, t.c),
        None => format!("d = {d}\nno triple\n"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    #[test]
    fn bound_rendering() {
        let q = |s| parse_rational(s).unwrap();
        assert_eq!(render_bound(&q("99/37"), &q("-187/37")), "99/37·ω − 187/37 ≤ Ω");
        assert_eq!(render_bound(&q("0"), &q("0")), "0·ω ≤ Ω");
        assert_eq!(render_bound(&q("2"), &q("1")), "2·ω + 1 ≤ Ω");
    }

    #[test]
    fn empty_report() {
        let r = SearchReport {
            lemma_id: "zelproof2".into(),
            bound: 10,
            tuples_examined: 0,
            counterexamples: vec![],
            witnesses: vec![],
            elapsed_ms: 7,
            notes: vec![],
        };
        let text = render_report(&r);
        assert!(text.starts_with("PASS (0 tuples)\n"));
        assert!(!text.contains('7'));
    }
}
