//! Contributed primes and the `S_{m,j}` classification.
//!
//! A prime `p` with `p^e ∥ N` contributes every prime dividing `σ(p^e)`.
//! For `e = 2`, the number `m` of contributed primes (with multiplicity) and
//! the residue `j = p mod 3` place `p` in one of the classes `S1, S21, S22,
//! S31, S32, S≥4,1, S≥4,2`. Linked primes are defined on `S1 ∪ S2 ∪ S31`.
//!
//! The exceptional linked-prime rule for `S22` fires when *some* prime `b`
//! satisfies `b² + b + 1 = 3c` for the larger contributed prime `c`. That is a
//! number-theoretic superset of "`c` is also contributed by an element of
//! `S21`", which cannot be tested without an actual perfect number.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize, Serializer};

use crate::arith::{factor, is_prime_u64, quadratic_integer_roots, FactorConfig, FactoredInteger};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    S1,
    S21,
    S22,
    S31,
    S32,
    #[serde(rename = "S4plus_1")]
    S4Plus1,
    #[serde(rename = "S4plus_2")]
    S4Plus2,
}

impl ClassTag {
    /// Class of a prime contributing `m` primes with `p ≡ j (mod 3)`.
    pub fn from_counts(m: u32, j: u8) -> Option<ClassTag> {
        use ClassTag::*;
        Some(match (m, j) {
            (1, 1 | 2) => S1,
            (2, 1) => S21,
            (2, 2) => S22,
            (3, 1) => S31,
            (3, 2) => S32,
            (m, 1) if m >= 4 => S4Plus1,
            (m, 2) if m >= 4 => S4Plus2,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            ClassTag::S1 => "S1",
            ClassTag::S21 => "S21",
            ClassTag::S22 => "S22",
            ClassTag::S31 => "S31",
            ClassTag::S32 => "S32",
            ClassTag::S4Plus1 => "S4plus_1",
            ClassTag::S4Plus2 => "S4plus_2",
        }
    }

    /// Classes on which the linking map is defined.
    pub fn is_linkable(self) -> bool {
        matches!(self, ClassTag::S1 | ClassTag::S21 | ClassTag::S22 | ClassTag::S31)
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ClassTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use ClassTag::*;
        [S1, S21, S22, S31, S32, S4Plus1, S4Plus2]
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown class {s:?}")))
    }
}

/// `σ(p^e) = 1 + p + … + p^e`.
pub fn sigma_pe(p: u64, e: u32) -> Result<BigInt> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidInput(format!("{p} is not prime")));
    }
    if e == 0 {
        return Err(Error::InvalidInput("exponent must be positive".into()));
    }
    let base = BigInt::from(p);
    let mut term = BigInt::one();
    let mut sum = BigInt::one();
    for _ in 0..e {
        term *= &base;
        sum += &term;
    }
    debug_assert_eq!(sum, sigma_via_cyclotomic(p, e));
    Ok(sum)
}

/// `∏_{d | e+1, d ≠ 1} Φ_d(p)`.
pub(crate) fn sigma_via_cyclotomic(p: u64, e: u32) -> BigInt {
    let n = e as u64 + 1;
    (2..=n)
        .filter(|d| n.is_multiple_of(*d))
        .map(|d| {
            crate::polynomial::cyclotomic(d)
                .expect("d ≥ 2")
                .eval(&BigInt::from(p))
        })
        .product()
}

/// Complete factorisation of `σ(p^e)` for an odd prime `p`.
pub fn contributed_primes(p: u64, e: u32, config: &FactorConfig) -> Result<FactoredInteger> {
    if p == 2 {
        return Err(Error::InvalidInput("2 cannot divide an odd perfect number".into()));
    }
    factor(&sigma_pe(p, e)?, config)
}

fn ser_u64_str<S: Serializer>(v: &u64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Contribution data for one prime. `class` is set only for `e = 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContributionProfile {
    #[serde(serialize_with = "ser_u64_str")]
    pub p: u64,
    pub e: u32,
    #[serde(with = "crate::arith::serde_bigint")]
    pub sigma: BigInt,
    #[serde(rename = "factors")]
    pub contributed: FactoredInteger,
    pub m: u32,
    pub j: u8,
    pub class: Option<ClassTag>,
}

impl ContributionProfile {
    /// Assembles a profile from an already computed factorisation of `σ(p^e)`.
    pub fn from_parts(p: u64, e: u32, contributed: FactoredInteger) -> Result<Self> {
        if p < 5 || !is_prime_u64(p) {
            return Err(Error::InvalidInput(format!("{p} is not a prime above 3")));
        }
        let sigma = contributed.value().clone();
        let m = contributed.big_omega();
        let j = (p % 3) as u8;
        let class = (e == 2).then(|| ClassTag::from_counts(m, j)).flatten();
        if e == 2 && j == 1 {
            debug_assert_eq!(contributed.exponent_of(&BigInt::from(3)), 1);
        }
        Ok(ContributionProfile { p, e, sigma, contributed, m, j, class })
    }

    /// Contributed primes with multiplicity, ascending, as machine words.
    pub fn primes(&self) -> Vec<u64> {
        self.contributed
            .multiset()
            .iter()
            .map(|q| q.to_u64().expect("desk-scale prime"))
            .collect()
    }

    pub fn largest(&self) -> u64 {
        self.contributed.largest().and_then(ToPrimitive::to_u64).expect("σ > 1")
    }
}

/// Profile of `p` at exponent `e`, with no class for `e ≠ 2`.
pub fn profile(p: u64, e: u32, config: &FactorConfig) -> Result<ContributionProfile> {
    if p == 3 {
        return Err(Error::InvalidInput("3 is excluded from P".into()));
    }
    let contributed = contributed_primes(p, e, config)?;
    ContributionProfile::from_parts(p, e, contributed)
}

/// Profile of `p` with `p² ∥ N`. Rejects 3 and non-primes; whether `p` is the
/// special prime is the caller's business.
pub fn classify(p: u64, config: &FactorConfig) -> Result<ContributionProfile> {
    profile(p, 2, config)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkedPrime {
    #[serde(serialize_with = "ser_u64_str")]
    pub p: u64,
    pub class: ClassTag,
    #[serde(serialize_with = "ser_u64_str")]
    pub ell: u64,
    /// `ell` is the smaller contributed prime (S22 exceptional case).
    pub exceptional: bool,
    /// Every prime `b` with `b² + b + 1 = 3c`, `c` the larger contributed prime.
    pub triggers: Vec<u64>,
}

/// Primes `b` with `b² + b + 1 = 3c`.
pub fn s21_partners(c: u64) -> Vec<u64> {
    let rhs = BigInt::from(3) * BigInt::from(c);
    quadratic_integer_roots(&BigInt::one(), &BigInt::one(), &(BigInt::one() - rhs))
        .into_iter()
        .filter_map(|b| b.to_u64())
        .filter(|&b| is_prime_u64(b))
        .collect()
}

/// The linked prime `ℓ_p` of a profile in `S1 ∪ S2 ∪ S31`.
pub fn link_profile(profile: &ContributionProfile) -> Result<LinkedPrime> {
    let class = match profile.class {
        Some(c) if c.is_linkable() => c,
        other => {
            return Err(Error::InvalidInput(format!(
                "linked prime undefined for {} (class {})",
                profile.p,
                other.map_or("none", ClassTag::name)
            )))
        }
    };
    let primes = profile.primes();
    let largest = profile.largest();
    let mut linked = LinkedPrime {
        p: profile.p,
        class,
        ell: largest,
        exceptional: false,
        triggers: Vec::new(),
    };
    if class == ClassTag::S22 && primes[0] != primes[1] {
        linked.triggers = s21_partners(largest);
        if !linked.triggers.is_empty() {
            linked.ell = primes[0];
            linked.exceptional = true;
        }
    }
    Ok(linked)
}

pub fn linked_prime(p: u64, config: &FactorConfig) -> Result<LinkedPrime> {
    link_profile(&classify(p, config)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Role {
    S,
    T,
    /// The special prime `p₀`.
    Special,
}

impl Role {
    fn in_t_or_special(self) -> bool {
        matches!(self, Role::T | Role::Special)
    }
}

/// Role assignment for a hypothetical population of prime divisors, plus the
/// derived set `f(S₁)` of primes contributed by role-S members of class S1.
#[derive(Clone, Debug)]
pub struct RoleContext {
    roles: BTreeMap<u64, Role>,
    f_s1: BTreeSet<u64>,
}

impl RoleContext {
    pub fn new(roles: impl IntoIterator<Item = (u64, Role)>, config: &FactorConfig) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (p, role) in roles {
            if p < 5 || !is_prime_u64(p) {
                return Err(Error::InvalidInput(format!("{p} cannot carry a role")));
            }
            if map.insert(p, role).is_some_and(|old| old != role) {
                return Err(Error::InvalidInput(format!("{p} has two roles")));
            }
        }
        if map.values().filter(|r| **r == Role::Special).count() > 1 {
            return Err(Error::InvalidInput("more than one special prime".into()));
        }
        let mut f_s1 = BTreeSet::new();
        for (&p, _) in map.iter().filter(|(_, r)| **r == Role::S) {
            let prof = classify(p, config)?;
            if prof.class == Some(ClassTag::S1) {
                f_s1.insert(prof.largest());
            }
        }
        Ok(RoleContext { roles: map, f_s1 })
    }

    pub fn role(&self, q: u64) -> Option<Role> {
        self.roles.get(&q).copied()
    }

    /// `f(S₁)`
    pub fn f_s1(&self) -> &BTreeSet<u64> {
        &self.f_s1
    }
}

/// Superscript refinements of the S-classes, named as the LP symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RefinedTag {
    #[serde(rename = "S1_S")]
    S1S,
    #[serde(rename = "S1_T")]
    S1T,
    #[serde(rename = "S1_p0")]
    S1P0,
    #[serde(rename = "S31_SS")]
    S31SS,
    #[serde(rename = "S31_TT")]
    S31TT,
    #[serde(rename = "S31_ST")]
    S31ST,
    /// `S_{3,1}^{S∖f(S₁), T∪{p₀}}`
    #[serde(rename = "S31_SnF_T")]
    S31SnfT,
    /// `S_{3,1}^{S, (T∪{p₀})∖f(S₁)}`
    #[serde(rename = "S31_S_TnF")]
    S31STnf,
    #[serde(rename = "S32_SnF")]
    S32Snf,
    #[serde(rename = "S32_TnF")]
    S32Tnf,
}

impl RefinedTag {
    pub fn name(self) -> &'static str {
        use RefinedTag::*;
        match self {
            S1S => "S1_S",
            S1T => "S1_T",
            S1P0 => "S1_p0",
            S31SS => "S31_SS",
            S31TT => "S31_TT",
            S31ST => "S31_ST",
            S31SnfT => "S31_SnF_T",
            S31STnf => "S31_S_TnF",
            S32Snf => "S32_SnF",
            S32Tnf => "S32_TnF",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refinement {
    pub tags: BTreeSet<RefinedTag>,
    /// Roles of the contributed primes other than 3, with multiplicity, sorted.
    pub roles: Vec<Role>,
}

/// Superscript tags that apply to `profile` under the roles in `ctx`.
///
/// The prime 3 is never in `P`, so the single 3 contributed by members of
/// `S_{m,1}` takes no role and is skipped.
pub fn refine(profile: &ContributionProfile, ctx: &RoleContext) -> Result<Refinement> {
    let class = profile
        .class
        .ok_or_else(|| Error::InvalidInput(format!("{} has no S-class (e = {})", profile.p, profile.e)))?;
    let qs: Vec<u64> = profile.primes().into_iter().filter(|&q| q != 3).collect();
    let mut roles = Vec::with_capacity(qs.len());
    for &q in &qs {
        roles.push(
            ctx.role(q)
                .ok_or_else(|| Error::InvalidInput(format!("contributed prime {q} has no role")))?,
        );
    }
    let outside_f = |q: u64| !ctx.f_s1.contains(&q);
    let is_s = |i: usize| roles[i] == Role::S;
    let is_tp = |i: usize| roles[i].in_t_or_special();

    let mut tags = BTreeSet::new();
    match class {
        ClassTag::S1 => {
            tags.insert(match roles[0] {
                Role::S => RefinedTag::S1S,
                Role::T => RefinedTag::S1T,
                Role::Special => RefinedTag::S1P0,
            });
        }
        ClassTag::S31 => {
            if is_s(0) && is_s(1) {
                tags.insert(RefinedTag::S31SS);
            }
            if is_tp(0) && is_tp(1) {
                tags.insert(RefinedTag::S31TT);
            }
            for (a, b) in [(0, 1), (1, 0)] {
                if is_s(a) && is_tp(b) {
                    tags.insert(RefinedTag::S31ST);
                    if outside_f(qs[a]) {
                        tags.insert(RefinedTag::S31SnfT);
                    }
                    if outside_f(qs[b]) {
                        tags.insert(RefinedTag::S31STnf);
                    }
                }
            }
        }
        ClassTag::S32 => {
            for (i, &q) in qs.iter().enumerate() {
                if outside_f(q) && is_s(i) {
                    tags.insert(RefinedTag::S32Snf);
                }
                if outside_f(q) && is_tp(i) {
                    tags.insert(RefinedTag::S32Tnf);
                }
            }
        }
        _ => {}
    }
    roles.sort();
    Ok(Refinement { tags, roles })
}
