use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{parse_rational, serde_rational, Rational};
use crate::{Error, Result};

use super::{ConstraintSystem, RelationKind, Symbol, Variant};

/// A multiplier per relation id. Ids absent from the map carry multiplier 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub variant: Variant,
    pub multipliers: BTreeMap<String, Rational>,
}

/// Sorts relation ids numerically ("5.2" before "5.10").
fn id_key(id: &str) -> (Vec<u64>, String) {
    (id.split('.').map(|p| p.parse().unwrap_or(u64::MAX)).collect(), id.to_owned())
}

impl Certificate {
    pub fn new<'a>(variant: Variant, pairs: impl IntoIterator<Item = (&'a str, Rational)>) -> Self {
        let multipliers = pairs.into_iter().map(|(k, v)| (k.to_owned(), v)).collect();
        Certificate { variant, multipliers }
    }

    /// Parses `("5.2", "99/37")`-style pairs.
    pub fn parse<'a>(variant: Variant, pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self> {
        let multipliers = pairs
            .into_iter()
            .map(|(k, v)| parse_rational(v).map(|r| (k.to_owned(), r)))
            .collect::<Result<_>>()?;
        Ok(Certificate { variant, multipliers })
    }

    pub fn multiplier(&self, id: &str) -> Rational {
        self.multipliers.get(id).cloned().unwrap_or_else(Rational::zero)
    }

    /// Multipliers in numeric id order.
    pub fn sorted(&self) -> Vec<(&str, &Rational)> {
        let mut v: Vec<(&str, &Rational)> = self.multipliers.iter().map(|(k, v)| (k.as_str(), v)).collect();
        v.sort_by_key(|(k, _)| id_key(k));
        v
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let inner = value.get("certificate").cloned().unwrap_or(value);
        serde_json::from_value(inner).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            variant: Variant,
            multipliers: BTreeMap<&'a str, String>,
        }
        Wire {
            variant: self.variant,
            multipliers: self.multipliers.iter().map(|(k, v)| (k.as_str(), v.to_string())).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Certificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Wire {
            variant: Variant,
            multipliers: BTreeMap<String, String>,
        }
        let w = Wire::deserialize(d)?;
        let multipliers = w
            .multipliers
            .into_iter()
            .map(|(k, v)| parse_rational(&v).map(|r| (k, r)).map_err(D::Error::custom))
            .collect::<std::result::Result<_, _>>()?;
        Ok(Certificate { variant: w.variant, multipliers })
    }
}

/// The certified inequality `a·ω + b ≤ Ω`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundResult {
    #[serde(with = "serde_rational")]
    pub a: Rational,
    #[serde(with = "serde_rational")]
    pub b: Rational,
    /// Nonzero residual coefficients.
    #[serde(serialize_with = "ser_residual")]
    pub residual: BTreeMap<Symbol, Rational>,
    #[serde(with = "serde_rational")]
    pub constant: Rational,
}

fn ser_residual<S: Serializer>(r: &BTreeMap<Symbol, Rational>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let sorted: BTreeMap<&str, String> = r.iter().map(|(k, v)| (k.name(), v.to_string())).collect();
    sorted.serialize(s)
}

impl BoundResult {
    pub fn residual_of(&self, s: Symbol) -> Rational {
        self.residual.get(&s).cloned().unwrap_or_else(Rational::zero)
    }
}

/// `Σ cᵢ·relationᵢ`: the residual coefficient of every symbol (zeros
/// dropped) and the residual constant.
pub fn expand(system: &ConstraintSystem, cert: &Certificate) -> Result<(BTreeMap<Symbol, Rational>, Rational)> {
    if let Some(unknown) = cert.multipliers.keys().find(|id| system.relation(id).is_none()) {
        return Err(Error::UnknownRelation(unknown.clone()));
    }
    let mut residual: BTreeMap<Symbol, Rational> = BTreeMap::new();
    let mut constant = Rational::zero();
    for rel in &system.relations {
        let c = cert.multiplier(&rel.id);
        if c.is_zero() {
            continue;
        }
        for (s, k) in &rel.terms {
            *residual.entry(*s).or_insert_with(Rational::zero) += &c * k;
        }
        constant += &c * &rel.constant;
    }
    residual.retain(|_, v| !v.is_zero());
    Ok((residual, constant))
}

/// Validates a certificate. On failure every violated condition is listed,
/// the first one first: multiplier of 5.1, signs of inequality multipliers,
/// the Ω coefficient, then negative residuals in registry order.
pub fn check_certificate(system: &ConstraintSystem, cert: &Certificate) -> Result<BoundResult> {
    let (residual, constant) = expand(system, cert)?;
    let mut violations = Vec::new();
    if cert.variant != system.variant {
        violations.push(format!("certificate is for variant {}, system is {}", cert.variant, system.variant));
    }
    if system.relation("5.1").is_some() && !cert.multiplier("5.1").is_one() {
        violations.push(format!("multiplier of 5.1 is {}, expected 1", cert.multiplier("5.1")));
    }
    for rel in system.relations.iter().filter(|r| r.kind == RelationKind::Le) {
        let c = cert.multiplier(&rel.id);
        if c.is_negative() {
            violations.push(format!("negative multiplier {c} on inequality {}", rel.id));
        }
    }
    let get = |s: Symbol| residual.get(&s).cloned().unwrap_or_else(Rational::zero);
    if get(Symbol::Omega) != -Rational::one() {
        violations.push(format!("residual on Omega is {}, expected -1", get(Symbol::Omega)));
    }
    for &s in Symbol::ALL.iter().filter(|&&s| s != Symbol::Omega && s != Symbol::OmegaSmall) {
        let r = get(s);
        if r.is_negative() {
            violations.push(format!("negative residual on {s} ({r})"));
        }
    }
    if !violations.is_empty() {
        return Err(Error::InvalidCertificate(violations));
    }
    Ok(BoundResult { a: get(Symbol::OmegaSmall), b: constant.clone(), residual, constant })
}

fn over(den: i64, nums: &[(&'static str, i64)]) -> Vec<(&'static str, Rational)> {
    nums.iter().map(|&(k, n)| (k, Rational::new(n.into(), den.into()))).collect()
}

/// Multipliers as printed for the standard system (denominator 37).
pub fn table2_printed() -> Certificate {
    let mut v = over(
        37,
        &[
            ("5.2", 99),
            ("5.3", 28),
            ("5.4", 28),
            ("5.5", 25),
            ("5.6", 20),
            ("5.7", 25),
            ("5.8", 25),
            ("5.9", 4),
            ("5.10", 1),
            ("5.11", 1),
            ("5.12", 1),
            ("5.13", 4),
            ("5.15", 8),
            ("5.16", 5),
            ("5.17", 8),
            ("5.18", 2),
            ("5.19", 1),
        ],
    );
    v.push(("5.1", Rational::one()));
    v.push(("5.14", Rational::one()));
    Certificate::new(Variant::Standard, v)
}

/// The printed standard multipliers with `c₁₀ = 0`, which clears the
/// negative residual on `S31_ST`.
pub fn table2_adjusted() -> Certificate {
    let mut c = table2_printed();
    c.multipliers.insert("5.10".into(), Rational::zero());
    c
}

/// Multipliers as printed for the `3 ∤ N` system (denominator 19), with the
/// printed `c₂₁` attached to the appended relation `f₃ = 0`.
pub fn table3_printed() -> Certificate {
    let mut v = over(
        19,
        &[
            ("5.2", 51),
            ("5.3", 14),
            ("5.4", 10),
            ("5.5", 13),
            ("5.6", 8),
            ("5.7", 13),
            ("5.8", 13),
            ("5.9", 4),
            ("5.10", 1),
            ("5.11", 1),
            ("5.12", 1),
            ("5.13", 4),
            ("5.14", 21),
            ("5.15", 4),
            ("5.16", 5),
            ("5.17", 0),
            ("5.18", 2),
            ("5.19", 1),
            ("5.21", 2),
        ],
    );
    v.push(("5.1", Rational::one()));
    Certificate::new(Variant::No3, v)
}
