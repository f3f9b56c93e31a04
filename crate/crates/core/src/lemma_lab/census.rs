//! Fibers of the linking map and of the largest-contributed-prime map.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Serialize, Serializer};

use crate::arith::{isqrt, is_prime_u64, quadratic_integer_roots, FactoredInteger};
use crate::contribution::{link_profile, ClassTag, ContributionProfile};
use crate::{Error, Result};

use super::{check_bound, SearchReport, SigmaTable, SweepOptions, Tuple};

fn ser_u64_str<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Which contributed prime a member is mapped through.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LinkVia {
    Largest,
    Smaller,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct FiberMember {
    #[serde(serialize_with = "ser_u64_str")]
    pub p: u64,
    pub class: ClassTag,
    pub via: LinkVia,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberReport {
    #[serde(serialize_with = "ser_u64_str")]
    pub shared_prime: u64,
    pub pattern: String,
    pub members: Vec<FiberMember>,
    pub sizes: BTreeMap<String, usize>,
}

impl FiberReport {
    fn new(shared_prime: u64, mut members: Vec<FiberMember>) -> Self {
        members.sort();
        let mut sizes = BTreeMap::new();
        for m in &members {
            let key = match m.via {
                LinkVia::Largest => m.class.name().to_owned(),
                LinkVia::Smaller => format!("{}/smaller", m.class.name()),
            };
            *sizes.entry(key).or_insert(0) += 1;
        }
        let mut classes: Vec<&str> = members.iter().map(|m| m.class.name()).collect();
        classes.sort_unstable();
        FiberReport { shared_prime, pattern: classes.join("+"), members, sizes }
    }

    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.members.iter().map(|m| m.p).collect();
        ps.sort_unstable();
        ps
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    fn count(&self, classes: &[ClassTag]) -> usize {
        self.members.iter().filter(|m| classes.contains(&m.class)).count()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusViolation {
    pub rule: String,
    pub fiber: FiberReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct CensusReport {
    #[serde(serialize_with = "ser_u64_str")]
    pub bound: u64,
    pub primes_linked: u64,
    pub fibers: Vec<FiberReport>,
    pub violations: Vec<CensusViolation>,
}

impl CensusReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn max_fiber(&self) -> usize {
        self.fibers.iter().map(FiberReport::len).max().unwrap_or(0)
    }

    pub(crate) fn to_search_report(&self, cap: usize) -> SearchReport {
        let as_tuple = |f: &FiberReport| {
            let names: Vec<String> = (1..=f.len()).map(|i| format!("p{i}")).collect();
            let mut pairs: Vec<(&str, u64)> = vec![("q", f.shared_prime)];
            pairs.extend(names.iter().map(String::as_str).zip(f.primes()));
            Tuple::new(pairs)
        };
        let mut witnesses: Vec<Tuple> = self.fibers.iter().filter(|f| f.len() == 2).map(as_tuple).collect();
        witnesses.sort();
        witnesses.truncate(cap);
        let mut counterexamples: Vec<Tuple> = self.violations.iter().map(|v| as_tuple(&v.fiber)).collect();
        counterexamples.sort();
        counterexamples.dedup();
        SearchReport {
            lemma_id: "census".into(),
            bound: self.bound,
            tuples_examined: self.primes_linked,
            counterexamples,
            witnesses,
            elapsed_ms: 0,
            notes: vec![format!("{} fibers, largest has {} members", self.fibers.len(), self.max_fiber())],
        }
    }
}

/// Profile of `p` with `σ(p²)` read from the table.
fn profile_from_table(tb: &SigmaTable, p: u64) -> Result<ContributionProfile> {
    let f = tb.factors(p);
    let mut parts: Vec<(u64, u32)> = Vec::new();
    for &q in f {
        match parts.last_mut() {
            Some((r, e)) if *r == q => *e += 1,
            _ => parts.push((q, 1)),
        }
    }
    let fi = FactoredInteger::from_u64_parts(u128::from(tb.value(p)), &parts);
    ContributionProfile::from_parts(p, 2, fi)
}

/// Groups every prime `5 ≤ p ≤ bound` in `S1 ∪ S2 ∪ S31` by its linked prime
/// and checks each fiber: at most one member from `S1 ∪ S21`, at most two
/// members, and a pair is either two `S31` or one `S22` with one `S31`.
pub fn linking_census(bound: u64, opts: &SweepOptions) -> Result<CensusReport> {
    check_bound(bound, 100)?;
    let table = SigmaTable::build(bound, opts.jobs, opts.factor.budget)?;
    census_on(&table)
}

pub(crate) fn census_on(tb: &SigmaTable) -> Result<CensusReport> {
    let mut groups: BTreeMap<u64, Vec<FiberMember>> = BTreeMap::new();
    let mut linked = 0;
    for p in (5..=tb.bound()).filter(|&p| tb.is_prime(p)) {
        let prof = profile_from_table(tb, p)?;
        if !prof.class.is_some_and(ClassTag::is_linkable) {
            continue;
        }
        let link = link_profile(&prof)?;
        let via = if link.exceptional { LinkVia::Smaller } else { LinkVia::Largest };
        groups.entry(link.ell).or_default().push(FiberMember { p, class: link.class, via });
        linked += 1;
    }
    let fibers: Vec<FiberReport> = groups.into_iter().map(|(q, ms)| FiberReport::new(q, ms)).collect();
    let mut violations = Vec::new();
    for f in &fibers {
        let mut flag = |rule: &str| violations.push(CensusViolation { rule: rule.into(), fiber: f.clone() });
        if f.count(&[ClassTag::S1, ClassTag::S21]) > 1 {
            flag("more than one member from S1 ∪ S21");
        }
        if f.len() > 2 {
            flag("more than two members");
        }
        if f.len() == 2 && f.pattern != "S31+S31" && f.pattern != "S22+S31" {
            flag("pair is neither S31+S31 nor S22+S31");
        }
    }
    Ok(CensusReport { bound: tb.bound(), primes_linked: linked, fibers, violations })
}

/// Fibers of size at least `min_share` among primes `p ≤ bound` of class
/// `class`, grouped by largest contributed prime.
pub fn find_shared_largest(
    class: ClassTag,
    min_share: usize,
    bound: u64,
    opts: &SweepOptions,
) -> Result<Vec<FiberReport>> {
    check_bound(bound, 1000)?;
    let table = SigmaTable::build(bound, opts.jobs, opts.factor.budget)?;
    shared_largest_in(&table, class, min_share)
}

pub fn shared_largest_in(tb: &SigmaTable, class: ClassTag, min_share: usize) -> Result<Vec<FiberReport>> {
    let mut groups: BTreeMap<u64, Vec<FiberMember>> = BTreeMap::new();
    for p in (5..=tb.bound()).filter(|&p| tb.is_prime(p)) {
        let f = tb.factors(p);
        if ClassTag::from_counts(f.len() as u32, (p % 3) as u8) != Some(class) {
            continue;
        }
        let q = *f.last().expect("σ(p²) > 1");
        groups.entry(q).or_default().push(FiberMember { p, class, via: LinkVia::Largest });
    }
    Ok(groups
        .into_iter()
        .filter(|(_, ms)| ms.len() >= min_share.max(1))
        .map(|(q, ms)| FiberReport::new(q, ms))
        .collect())
}

/// The unique odd primes `a, b, c` with `a² + a + 1 = cd`,
/// `b² + b + 1 = 3c` and `c > d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Reconstruction {
    #[serde(serialize_with = "ser_u64_str")]
    pub a: u64,
    #[serde(serialize_with = "ser_u64_str")]
    pub b: u64,
    #[serde(serialize_with = "ser_u64_str")]
    pub c: u64,
}

/// Recovers `(a, b, c)` from `d` through `b = (5 + √(12d − 3)) / 2`.
pub fn reconstruct_from_d(d: u64) -> Result<Option<Reconstruction>> {
    if d <= 3 || !is_prime_u64(d) {
        return Err(Error::InvalidInput(format!("{d} is not a prime above 3")));
    }
    let big_d = BigInt::from(d);
    let (root, exact) = isqrt(&(BigInt::from(12) * &big_d - 3));
    if !exact {
        return Ok(None);
    }
    let twice_b: BigInt = root + 5;
    if twice_b.bit(0) {
        return Ok(None);
    }
    let b: BigInt = twice_b / 2;
    let three_c: BigInt = &b * &b + &b + 1;
    if (&three_c % 3u32) != BigInt::from(0) {
        return Ok(None);
    }
    let c: BigInt = three_c / 3;
    if c <= big_d {
        return Ok(None);
    }
    let roots = quadratic_integer_roots(&BigInt::one(), &BigInt::one(), &(BigInt::one() - &c * &big_d));
    let [a] = roots.as_slice() else {
        return Ok(None);
    };
    let (Some(a), Some(b), Some(c)) = (a.to_u64(), b.to_u64(), c.to_u64()) else {
        return Ok(None);
    };
    if [a, b, c].iter().all(|&x| x > 2 && is_prime_u64(x)) {
        Ok(Some(Reconstruction { a, b, c }))
    } else {
        Ok(None)
    }
}
