use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{serde_rational, Rational};
use crate::{Error, Result};

use super::Symbol;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Standard,
    No3,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Standard => "standard",
            Variant::No3 => "no3",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Variant::Standard),
            "no3" => Ok(Variant::No3),
            _ => Err(Error::Parse(format!("unknown variant {s:?} (expected standard or no3)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum RelationKind {
    Eq,
    Le,
}

/// `Σ terms·symbols + constant KIND 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearRelation {
    pub id: String,
    pub kind: RelationKind,
    #[serde(serialize_with = "ser_terms")]
    pub terms: BTreeMap<Symbol, Rational>,
    #[serde(with = "serde_rational")]
    pub constant: Rational,
}

fn ser_terms<S: serde::Serializer>(
    terms: &BTreeMap<Symbol, Rational>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(terms.iter().map(|(k, v)| (k.name(), v.to_string())))
}

impl LinearRelation {
    /// Builds a relation, summing repeated symbols and dropping zero terms.
    pub fn new(id: &str, kind: RelationKind, terms: &[(Symbol, Rational)], constant: Rational) -> Self {
        let mut map: BTreeMap<Symbol, Rational> = BTreeMap::new();
        for (s, c) in terms {
            *map.entry(*s).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LinearRelation { id: id.to_owned(), kind, terms: map, constant }
    }

    pub fn coefficient(&self, s: Symbol) -> Rational {
        self.terms.get(&s).cloned().unwrap_or_else(Rational::zero)
    }

    /// Evaluates the left-hand side at an assignment indexed by registry order.
    pub fn evaluate(&self, values: &[Rational]) -> Rational {
        self.terms.iter().fold(self.constant.clone(), |acc, (s, c)| acc + c * &values[s.index()])
    }

    pub fn holds(&self, values: &[Rational]) -> bool {
        let v = self.evaluate(values);
        match self.kind {
            RelationKind::Eq => v.is_zero(),
            RelationKind::Le => !v.is_positive(),
        }
    }
}

impl fmt::Display for LinearRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ", self.id)?;
        let mut first = true;
        for (s, c) in &self.terms {
            let sign = if c.is_negative() { "−" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("−")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if mag.is_one() {
                write!(f, "{s}")?;
            } else {
                write!(f, "{mag}·{s}")?;
            }
            first = false;
        }
        if !self.constant.is_zero() || first {
            let sign = if self.constant.is_negative() { "−" } else { "+" };
            if first {
                write!(f, "{}", self.constant)?;
            } else {
                write!(f, " {sign} {}", self.constant.abs())?;
            }
        }
        f.write_str(match self.kind {
            RelationKind::Eq => " = 0",
            RelationKind::Le => " ≤ 0",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConstraintSystem {
    pub variant: Variant,
    pub relations: Vec<LinearRelation>,
}

impl ConstraintSystem {
    pub fn relation(&self, id: &str) -> Option<&LinearRelation> {
        self.relations.iter().find(|r| r.id == id)
    }

    pub fn ids(&self) -> impl Iterator<Item = &str> {
        self.relations.iter().map(|r| r.id.as_str())
    }

    pub fn count(&self, kind: RelationKind) -> usize {
        self.relations.iter().filter(|r| r.kind == kind).count()
    }

    /// The subsystem made of the listed relations.
    pub fn restrict(&self, ids: &[&str]) -> Result<ConstraintSystem> {
        let relations = ids
            .iter()
            .map(|id| self.relation(id).cloned().ok_or_else(|| Error::UnknownRelation((*id).to_owned())))
            .collect::<Result<_>>()?;
        Ok(ConstraintSystem { variant: self.variant, relations })
    }

    /// Whether an assignment (registry order) satisfies every relation.
    pub fn satisfied_by(&self, values: &[Rational]) -> bool {
        self.relations.iter().all(|r| r.holds(values))
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// The relation system for `variant`, each relation written as LHS − RHS.
pub fn build_system(variant: Variant) -> ConstraintSystem {
    use RelationKind::{Eq, Le};
    use Symbol::*;
    let one = || int(1);
    let m = |n: i64| int(-n);
    let t = |s: Symbol, c: Rational| (s, c);
    let pos = |syms: &[Symbol]| syms.iter().map(|&s| (s, int(1))).collect::<Vec<_>>();
    let rel = |id: &str, kind, terms: Vec<(Symbol, Rational)>, c: Rational| LinearRelation::new(id, kind, &terms, c);

    let mut r = Vec::with_capacity(20);
    r.push(rel("5.1", Eq, vec![t(E0, one()), t(F3, one()), t(S, int(2)), t(G4, one()), t(Omega, m(1))], int(0)));
    r.push(match variant {
        Variant::Standard => rel("5.2", Le, vec![t(OmegaSmall, one()), t(S, m(1)), t(T, m(1))], m(2)),
        Variant::No3 => rel("5.2", Eq, vec![t(OmegaSmall, one()), t(S, m(1)), t(T, m(1))], m(1)),
    });
    r.push(rel("5.3", Le, vec![t(T, int(4)), t(G4, m(1))], int(0)));
    r.push(rel("5.4", Le, vec![t(E0, m(1))], one()));
    r.push(rel("5.5", Eq, vec![t(S, one()), t(S1, m(1)), t(S2, m(1)), t(S3, m(1)), t(S4p, m(1))], int(0)));
    r.push(rel("5.6", Eq, vec![t(S2, one()), t(S21, m(1)), t(S22, m(1))], int(0)));
    r.push(rel("5.7", Eq, vec![t(S3, one()), t(S31, m(1)), t(S32, m(1))], int(0)));
    r.push(rel("5.8", Eq, vec![t(S4p, one()), t(S41, m(1)), t(S42, m(1))], int(0)));
    r.push(rel("5.9", Eq, vec![t(S1, one()), t(S1S, m(1)), t(S1T, m(1)), t(S1P0, m(1))], int(0)));
    r.push(rel("5.10", Eq, vec![t(S31, one()), t(S31SS, m(1)), t(S31TT, m(1)), t(S31ST, m(1))], int(0)));
    r.push(rel("5.11", Le, vec![t(S31, one()), t(S31SnfT, m(1)), t(S31STnf, m(1))], int(0)));
    r.push(rel("5.12", Le, vec![t(S32, one()), t(S32Snf, m(1)), t(S32Tnf, m(1))], int(0)));
    r.push(rel("5.13", Le, vec![t(S1P0, one())], m(1)));
    r.push(rel("5.14", Le, vec![t(S21, one()), t(S31, one()), t(S41, one()), t(F3, m(1))], int(0)));
    r.push(rel(
        "5.15",
        Le,
        vec![
            t(S1, one()),
            t(S22, int(2)),
            t(S32, int(3)),
            t(S42, int(4)),
            t(S41, one()),
            t(G4, m(1)),
            t(E0, m(1)),
            t(S21, m(1)),
        ],
        int(0),
    ));
    let mut link_rhs = vec![t(T, m(1)), t(S21, m(1)), t(S31, m(1)), t(S41, m(1))];
    let mut z16 = pos(&[S1, S2]);
    z16.append(&mut link_rhs.clone());
    r.push(rel("5.16", Le, z16, m(1)));
    let mut z17 = vec![t(S1, one()), t(S21, one()), t(S22, frac(1, 2)), t(S31, frac(1, 2))];
    z17.append(&mut link_rhs);
    r.push(rel("5.17", Le, z17, m(1)));
    r.push(rel(
        "5.18",
        Le,
        vec![
            t(S1S, int(2)),
            t(S31SS, one()),
            t(S31SnfT, one()),
            t(S32Snf, one()),
            t(S21, m(2)),
            t(S31, m(2)),
            t(S41, m(2)),
        ],
        int(0),
    ));
    r.push(rel(
        "5.19",
        Le,
        vec![t(S1T, int(4)), t(S31TT, one()), t(S31STnf, one()), t(S32Tnf, one()), t(G4, m(1)), t(E0, m(1))],
        int(0),
    ));
    if variant == Variant::No3 {
        r.push(rel("5.21", Eq, vec![t(F3, one())], int(0)));
    }
    ConstraintSystem { variant, relations: r }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shapes() {
        let s = build_system(Variant::Standard);
        assert_eq!(s.relations.len(), 19);
        assert_eq!(s.count(RelationKind::Eq), 7);
        let eqs: Vec<&str> = s.relations.iter().filter(|r| r.kind == RelationKind::Eq).map(|r| r.id.as_str()).collect();
        assert_eq!(eqs, ["5.1", "5.5", "5.6", "5.7", "5.8", "5.9", "5.10"]);
        let n = build_system(Variant::No3);
        assert_eq!(n.relations.len(), 20);
        assert_eq!(n.count(RelationKind::Eq), 9);
        assert_eq!(n.relation("5.21").unwrap().terms, BTreeMap::from([(Symbol::F3, int(1))]));
        let r13 = s.relation("5.13").unwrap();
        assert_eq!(r13.terms, BTreeMap::from([(Symbol::S1P0, int(1))]));
        assert_eq!(r13.constant, int(-1));
    }

    #[test]
    fn link_relations_cancel_s21() {
        let s = build_system(Variant::Standard);
        let r17 = s.relation("5.17").unwrap();
        assert_eq!(r17.coefficient(Symbol::S21), int(0));
        assert_eq!(r17.coefficient(Symbol::S31), frac(-1, 2));
        assert_eq!(r17.coefficient(Symbol::S22), frac(1, 2));
        let r16 = s.relation("5.16").unwrap();
        assert_eq!(r16.coefficient(Symbol::S21), int(-1));
        assert_eq!(r16.coefficient(Symbol::S2), int(1));
    }

    #[test]
    fn only_5_1_mentions_omega() {
        for v in [Variant::Standard, Variant::No3] {
            let s = build_system(v);
            let with: Vec<&str> = s
                .relations
                .iter()
                .filter(|r| r.terms.contains_key(&Symbol::Omega))
                .map(|r| r.id.as_str())
                .collect();
            assert_eq!(with, ["5.1"]);
            for r in &s.relations {
                assert!(r.terms.keys().all(|k| Symbol::ALL.contains(k)));
            }
        }
    }

    #[test]
    fn restrict_and_display() {
        let s = build_system(Variant::Standard);
        let sub = s.restrict(&["5.1", "5.13"]).unwrap();
        assert_eq!(sub.relations.len(), 2);
        assert!(matches!(s.restrict(&["5.20"]), Err(Error::UnknownRelation(_))));
        assert_eq!(s.relation("5.13").unwrap().to_string(), "(5.13) S1_p0 − 1 ≤ 0");
        assert_eq!(s.relation("5.3").unwrap().to_string(), "(5.3) −g4 + 4·T ≤ 0");
        assert_eq!(s.relation("5.4").unwrap().to_string(), "(5.4) −e0 + 1 ≤ 0");
    }
}
