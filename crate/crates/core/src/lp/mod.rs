//! The linear relation system over the counting variables and its exact
//! certificate search.
//!
//! A certificate assigns a multiplier to every relation. Summing the
//! relations with those weights gives `Σ rₛ·s + b ≤ 0` with `r_Ω = −1`; if
//! every other coefficient except that of `ω` is nonnegative, the counting
//! variables being nonnegative yields `r_ω·ω + b ≤ Ω`.
//!
//! ```
//! use opn_bounds::lp::{build_system, optimize, Variant};
//! use opn_bounds::arith::parse_rational;
//!
//! let best = optimize(&build_system(Variant::Standard)).unwrap();
//! assert_eq!(best.result.a, parse_rational("99/37").unwrap());
//! assert_eq!(best.result.b, parse_rational("-187/37").unwrap());
//! ```

mod certificate;
mod registry;
mod simplex;
mod system;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{serde_rational, Rational};
use crate::{Error, Result};

pub use certificate::{
    check_certificate, expand, table2_adjusted, table2_printed, table3_printed, BoundResult, Certificate,
};
pub use registry::Symbol;
pub use simplex::{simplex_maximize, ConstraintKind, LinearProgram, LpConstraint, LpSolution};
pub use system::{build_system, ConstraintSystem, LinearRelation, RelationKind, Variant};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Optimum {
    pub certificate: Certificate,
    pub result: BoundResult,
    /// Largest attainable `ω` coefficient (first phase).
    #[serde(with = "serde_rational")]
    pub phase1_a: Rational,
}

/// Column layout: one nonnegative column per inequality multiplier, a
/// `(plus, minus)` pair per equality multiplier.
struct Columns {
    cols: Vec<(usize, Option<usize>)>,
    count: usize,
}

impl Columns {
    fn new(system: &ConstraintSystem) -> Self {
        let mut count = 0;
        let cols = system
            .relations
            .iter()
            .map(|r| {
                let p = count;
                count += 1;
                let m = (r.kind == RelationKind::Eq).then(|| {
                    count += 1;
                    count - 1
                });
                (p, m)
            })
            .collect();
        Columns { cols, count }
    }

    /// Row vector of `Σ cᵢ·valueᵢ` over the multiplier columns.
    fn combine(&self, values: impl Iterator<Item = Rational>) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); self.count];
        for ((p, m), v) in self.cols.iter().zip(values) {
            if let Some(m) = m {
                row[*m] = -v.clone();
            }
            row[*p] = v;
        }
        row
    }

    fn multiplier(&self, k: usize, x: &[Rational]) -> Rational {
        let (p, m) = self.cols[k];
        match m {
            Some(m) => &x[p] - &x[m],
            None => x[p].clone(),
        }
    }
}

/// Maximises the `ω` coefficient, then the constant at that coefficient.
pub fn optimize(system: &ConstraintSystem) -> Result<Optimum> {
    let cols = Columns::new(system);
    let residual_row = |s: Symbol| cols.combine(system.relations.iter().map(|r| r.coefficient(s)));
    let constant_row = cols.combine(system.relations.iter().map(|r| r.constant.clone()));

    let mut lp = LinearProgram::new(cols.count, residual_row(Symbol::OmegaSmall));
    if let Some(k) = system.relations.iter().position(|r| r.id == "5.1") {
        let mut unit = vec![Rational::zero(); system.relations.len()];
        unit[k] = Rational::one();
        lp.constrain(cols.combine(unit.into_iter()), ConstraintKind::Eq, Rational::one());
    }
    if system.relations.iter().any(|r| r.terms.contains_key(&Symbol::Omega)) {
        lp.constrain(residual_row(Symbol::Omega), ConstraintKind::Eq, -Rational::one());
    }
    for &s in Symbol::ALL.iter().filter(|&&s| s != Symbol::Omega && s != Symbol::OmegaSmall) {
        let row = residual_row(s);
        if row.iter().any(|c| !c.is_zero()) {
            lp.constrain(row, ConstraintKind::Ge, Rational::zero());
        }
    }
    let phase1 = simplex_maximize(&lp)?;

    let mut lp2 = lp.clone();
    lp2.constrain(residual_row(Symbol::OmegaSmall), ConstraintKind::Eq, phase1.value.clone());
    lp2.objective = constant_row;
    let phase2 = simplex_maximize(&lp2)?;

    let multipliers = system
        .relations
        .iter()
        .enumerate()
        .map(|(k, r)| (r.id.clone(), cols.multiplier(k, &phase2.x)))
        .collect();
    let certificate = Certificate { variant: system.variant, multipliers };
    let result = check_certificate(system, &certificate)?;
    if result.a != phase1.value || result.b != phase2.value {
        return Err(Error::InvalidCertificate(vec![format!(
            "optimizer returned ({}, {}) but its certificate certifies ({}, {})",
            phase1.value, phase2.value, result.a, result.b
        )]));
    }
    Ok(Optimum { certificate, result, phase1_a: phase1.value })
}

#[cfg(test)]
mod tests;
