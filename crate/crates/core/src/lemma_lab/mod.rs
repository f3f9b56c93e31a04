//! Exhaustive verification of the lemmas behind the linked-prime bounds.
//!
//! Every sweep reads the factorisations of `x² + x + 1` from a [`SigmaTable`]
//! and enumerates the lemma's hypothesis space with the outer loop running
//! over the squared variable. Bounds limit the squared-side variables only;
//! the primes they contribute are whatever the equations force.
//!
//! For lemmas asserting that some configuration does not exist, the
//! witnesses are near misses: tuples meeting every hypothesis except the
//! ones that complete the forbidden configuration.

mod census;
mod lemmas;
mod table;

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::arith::FactorConfig;
use crate::{Error, Result};

pub use census::{
    find_shared_largest, linking_census, reconstruct_from_d, shared_largest_in, CensusReport,
    CensusViolation, FiberMember, FiberReport, LinkVia, Reconstruction,
};
pub use lemmas::premise;
pub use table::{SigmaTable, MAX_TABLE_BOUND};

/// Smallest bound accepted by the sweeps.
pub const MIN_BOUND: u64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaId {
    OnlyOne3,
    Modularity,
    Simplifying,
    Factorization1,
    Factorization2,
    Factorization3,
    ZelProof1,
    ZelProof2,
    UniqueS1S2,
    SemiS31,
    SemiS22S31,
    UniqueS1S31,
    UniqueS21S31,
    SmallFactor,
    Census,
}

impl LemmaId {
    pub const ALL: [LemmaId; 15] = [
        LemmaId::OnlyOne3,
        LemmaId::Modularity,
        LemmaId::Simplifying,
        LemmaId::Factorization1,
        LemmaId::Factorization2,
        LemmaId::Factorization3,
        LemmaId::ZelProof1,
        LemmaId::ZelProof2,
        LemmaId::UniqueS1S2,
        LemmaId::SemiS31,
        LemmaId::SemiS22S31,
        LemmaId::UniqueS1S31,
        LemmaId::UniqueS21S31,
        LemmaId::SmallFactor,
        LemmaId::Census,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            LemmaId::OnlyOne3 => "only-one-3",
            LemmaId::Modularity => "modularity",
            LemmaId::Simplifying => "simplifying",
            LemmaId::Factorization1 => "factorization1",
            LemmaId::Factorization2 => "factorization2",
            LemmaId::Factorization3 => "factorization3",
            LemmaId::ZelProof1 => "zelproof1",
            LemmaId::ZelProof2 => "zelproof2",
            LemmaId::UniqueS1S2 => "unique-s1-s2",
            LemmaId::SemiS31 => "semi-s31",
            LemmaId::SemiS22S31 => "semi-s22-s31",
            LemmaId::UniqueS1S31 => "unique-s1-s31",
            LemmaId::UniqueS21S31 => "unique-s21-s31",
            LemmaId::SmallFactor => "small-factor",
            LemmaId::Census => "census",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for LemmaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown lemma {s:?}")))
    }
}

/// The three factorisation identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Identity {
    F1,
    F2,
    F3,
}

/// Lemmas asserting that a configuration of primes does not exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Nonexistence {
    Zp2,
    US1S2,
    SemiS31,
    SemiS22S31,
    US1S31,
    US21S31,
    Small,
}

impl From<Identity> for LemmaId {
    fn from(w: Identity) -> Self {
        match w {
            Identity::F1 => LemmaId::Factorization1,
            Identity::F2 => LemmaId::Factorization2,
            Identity::F3 => LemmaId::Factorization3,
        }
    }
}

impl From<Nonexistence> for LemmaId {
    fn from(w: Nonexistence) -> Self {
        match w {
            Nonexistence::Zp2 => LemmaId::ZelProof2,
            Nonexistence::US1S2 => LemmaId::UniqueS1S2,
            Nonexistence::SemiS31 => LemmaId::SemiS31,
            Nonexistence::SemiS22S31 => LemmaId::SemiS22S31,
            Nonexistence::US1S31 => LemmaId::UniqueS1S31,
            Nonexistence::US21S31 => LemmaId::UniqueS21S31,
            Nonexistence::Small => LemmaId::SmallFactor,
        }
    }
}

/// Named integer tuple, keys kept in ascending order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tuple(Vec<(String, u64)>);

impl Tuple {
    pub fn new<'a>(pairs: impl IntoIterator<Item = (&'a str, u64)>) -> Self {
        let mut v: Vec<(String, u64)> = pairs.into_iter().map(|(k, x)| (k.to_owned(), x)).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        Tuple(v)
    }

    pub fn get(&self, key: &str) -> Option<u64> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| *v)
    }

    pub fn values(&self) -> Vec<u64> {
        self.0.iter().map(|(_, v)| *v).collect()
    }

    pub fn entries(&self) -> &[(String, u64)] {
        &self.0
    }
}

impl fmt::Display for Tuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

impl Serialize for Tuple {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.0.iter().map(|(k, v)| (k, v)))
    }
}

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub jobs: usize,
    pub factor: FactorConfig,
    pub witness_cap: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { jobs: 1, factor: FactorConfig::default(), witness_cap: 100 }
    }
}

fn ser_u64_str<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub lemma_id: String,
    #[serde(serialize_with = "ser_u64_str")]
    pub bound: u64,
    pub tuples_examined: u64,
    pub counterexamples: Vec<Tuple>,
    pub witnesses: Vec<Tuple>,
    pub elapsed_ms: u64,
    pub notes: Vec<String>,
}

impl SearchReport {
    pub fn passed(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn contains_witness(&self, t: &Tuple) -> bool {
        self.witnesses.contains(t)
    }
}

/// Collector handed to the per-lemma enumerations.
#[derive(Debug, Default)]
pub(crate) struct Sink {
    examined: u64,
    skipped: u64,
    counterexamples: Vec<Tuple>,
    witnesses: Vec<Tuple>,
    cap: usize,
}

impl Sink {
    fn new(cap: usize) -> Self {
        Sink { cap, ..Default::default() }
    }

    pub(crate) fn examine(&mut self) {
        self.examined += 1;
    }

    pub(crate) fn skip(&mut self) {
        self.skipped += 1;
    }

    pub(crate) fn witness(&mut self, t: Tuple) {
        if self.cap == 0 {
            return;
        }
        self.witnesses.push(t);
        if self.witnesses.len() >= 4 * self.cap {
            self.trim();
        }
    }

    pub(crate) fn counterexample(&mut self, t: Tuple) {
        self.counterexamples.push(t);
    }

    /// Records a tuple that met the hypotheses as witness or counterexample.
    pub(crate) fn judge(&mut self, holds: bool, t: Tuple) {
        self.examine();
        if holds {
            self.witness(t)
        } else {
            self.counterexample(t)
        }
    }

    fn trim(&mut self) {
        self.witnesses.sort();
        self.witnesses.dedup();
        self.witnesses.truncate(self.cap);
    }

    fn merge(mut self, other: Sink) -> Sink {
        self.examined += other.examined;
        self.skipped += other.skipped;
        self.counterexamples.extend(other.counterexamples);
        self.witnesses.extend(other.witnesses);
        self.trim();
        self
    }
}

fn check_bound(bound: u64, min: u64) -> Result<()> {
    if bound < min {
        return Err(Error::InvalidInput(format!("bound must be at least {min}, got {bound}")));
    }
    Ok(())
}

fn pool(jobs: usize) -> Result<rayon::ThreadPool> {
    if jobs == 0 {
        return Err(Error::InvalidInput("worker count must be at least 1".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidInput(e.to_string()))
}

/// Builds the σ-table for `bound` and runs one verifier.
pub fn verify(id: LemmaId, bound: u64, opts: &SweepOptions) -> Result<SearchReport> {
    check_bound(bound, if id == LemmaId::Census { 100 } else { MIN_BOUND })?;
    let start = Instant::now();
    let table = SigmaTable::build(bound, opts.jobs, opts.factor.budget)?;
    let mut report = verify_with_table(id, &table, opts)?;
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Runs one verifier over a prebuilt table, partitioning the outer loop
/// into contiguous chunks across `opts.jobs` workers.
pub fn verify_with_table(id: LemmaId, table: &SigmaTable, opts: &SweepOptions) -> Result<SearchReport> {
    let start = Instant::now();
    if id == LemmaId::Census {
        let census = census::census_on(table)?;
        let mut report = census.to_search_report(opts.witness_cap);
        report.elapsed_ms = start.elapsed().as_millis() as u64;
        return Ok(report);
    }
    let bound = table.bound();
    let chunk = (bound / (16 * opts.jobs.max(1) as u64)).max(256);
    let ranges: Vec<(u64, u64)> =
        (1..=bound).step_by(chunk as usize).map(|lo| (lo, (lo + chunk - 1).min(bound))).collect();
    let sink = pool(opts.jobs)?.install(|| {
        ranges
            .par_iter()
            .map(|&(lo, hi)| {
                let mut sink = Sink::new(opts.witness_cap);
                for x in lo..=hi {
                    lemmas::visit(id, table, x, &opts.factor, &mut sink)?;
                }
                sink.trim();
                Ok(sink)
            })
            .try_reduce(|| Sink::new(opts.witness_cap), |a, b| Ok(a.merge(b)))
    })?;
    let mut counterexamples = sink.counterexamples;
    counterexamples.sort();
    let mut notes = lemmas::notes(id);
    if sink.skipped > 0 {
        notes.push(format!("{} σ-values above 64 bits skipped", sink.skipped));
    }
    Ok(SearchReport {
        lemma_id: id.as_str().to_owned(),
        bound,
        tuples_examined: sink.examined,
        counterexamples,
        witnesses: sink.witnesses,
        elapsed_ms: start.elapsed().as_millis() as u64,
        notes,
    })
}

pub fn verify_factorization_identity(which: Identity, bound: u64, opts: &SweepOptions) -> Result<SearchReport> {
    verify(which.into(), bound, opts)
}

pub fn verify_nonexistence(which: Nonexistence, bound: u64, opts: &SweepOptions) -> Result<SearchReport> {
    verify(which.into(), bound, opts)
}

pub fn verify_zelproof1(bound: u64, opts: &SweepOptions) -> Result<SearchReport> {
    verify(LemmaId::ZelProof1, bound, opts)
}

pub fn verify_simplifying(bound: u64, opts: &SweepOptions) -> Result<SearchReport> {
    verify(LemmaId::Simplifying, bound, opts)
}

/// Every verifier on one shared table, in [`LemmaId::ALL`] order.
pub fn verify_all(bound: u64, opts: &SweepOptions) -> Result<BTreeMap<LemmaId, SearchReport>> {
    check_bound(bound, 100)?;
    let table = SigmaTable::build(bound, opts.jobs, opts.factor.budget)?;
    LemmaId::ALL
        .into_iter()
        .map(|id| verify_with_table(id, &table, opts).map(|r| (id, r)))
        .collect()
}
