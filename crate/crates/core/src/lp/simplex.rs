//! Dense two-phase simplex over exact rationals with Bland's rule.

use num_traits::{One, Signed, Zero};

use crate::arith::Rational;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConstraintKind {
    Le,
    Ge,
    Eq,
}

/// `coeffs · x KIND rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpConstraint {
    pub coeffs: Vec<Rational>,
    pub kind: ConstraintKind,
    pub rhs: Rational,
}

/// Maximise `objective · x` subject to the constraints and `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearProgram {
    pub num_vars: usize,
    pub objective: Vec<Rational>,
    pub constraints: Vec<LpConstraint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub value: Rational,
    pub x: Vec<Rational>,
}

impl LinearProgram {
    pub fn new(num_vars: usize, objective: Vec<Rational>) -> Self {
        LinearProgram { num_vars, objective, constraints: Vec::new() }
    }

    pub fn constrain(&mut self, coeffs: Vec<Rational>, kind: ConstraintKind, rhs: Rational) {
        self.constraints.push(LpConstraint { coeffs, kind, rhs });
    }

    pub fn is_feasible(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.constraints.iter().all(|c| {
                let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, v)| a * v).sum();
                match c.kind {
                    ConstraintKind::Le => lhs <= c.rhs,
                    ConstraintKind::Ge => lhs >= c.rhs,
                    ConstraintKind::Eq => lhs == c.rhs,
                }
            })
    }

    pub fn objective_at(&self, x: &[Rational]) -> Rational {
        self.objective.iter().zip(x).map(|(a, v)| a * v).sum()
    }
}

struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    /// Reduced costs; `obj_rhs` is minus the current objective value.
    obj: Vec<Rational>,
    obj_rhs: Rational,
}

impl Tableau {
    fn set_objective(&mut self, costs: &[Rational]) {
        self.obj = costs.to_vec();
        self.obj_rhs = Rational::zero();
        for i in 0..self.rows.len() {
            let f = self.obj[self.basis[i]].clone();
            if !f.is_zero() {
                for (o, a) in self.obj.iter_mut().zip(&self.rows[i]) {
                    *o -= &f * a;
                }
                self.obj_rhs -= &f * &self.rhs[i];
            }
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for a in self.rows[r].iter_mut() {
            *a /= &p;
        }
        self.rhs[r] /= &p;
        let (prow, prhs) = (self.rows[r].clone(), self.rhs[r].clone());
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (a, b) in self.rows[i].iter_mut().zip(&prow) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            self.rhs[i] -= &f * &prhs;
        }
        let f = self.obj[c].clone();
        if !f.is_zero() {
            for (a, b) in self.obj.iter_mut().zip(&prow) {
                if !b.is_zero() {
                    *a -= &f * b;
                }
            }
            self.obj_rhs -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    /// Runs to optimality over the columns in `allowed`.
    fn optimise(&mut self, allowed: &[bool]) -> Result<()> {
        loop {
            let Some(c) = (0..self.obj.len()).find(|&j| allowed[j] && self.obj[j].is_positive()) else {
                return Ok(());
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            let Some((r, _)) = best else {
                return Err(Error::Unbounded);
            };
            self.pivot(r, c);
        }
    }
}

/// Maximises a linear program over nonnegative variables.
pub fn simplex_maximize(lp: &LinearProgram) -> Result<LpSolution> {
    let n = lp.num_vars;
    if lp.objective.len() != n || lp.constraints.iter().any(|c| c.coeffs.len() != n) {
        return Err(Error::InvalidInput("coefficient vector length differs from variable count".into()));
    }
    let m = lp.constraints.len();
    let slacks = lp.constraints.iter().filter(|c| c.kind != ConstraintKind::Eq).count();
    let total = n + slacks + m;
    let art0 = n + slacks;

    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    let mut basis = Vec::with_capacity(m);
    let mut next_slack = n;
    for (i, c) in lp.constraints.iter().enumerate() {
        let mut row = vec![Rational::zero(); total];
        row[..n].clone_from_slice(&c.coeffs);
        let mut b = c.rhs.clone();
        let mut kind = c.kind;
        if b.is_negative() {
            for a in row[..n].iter_mut() {
                *a = -a.clone();
            }
            b = -b;
            kind = match kind {
                ConstraintKind::Le => ConstraintKind::Ge,
                ConstraintKind::Ge => ConstraintKind::Le,
                ConstraintKind::Eq => ConstraintKind::Eq,
            };
        }
        match kind {
            ConstraintKind::Le => {
                row[next_slack] = Rational::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            ConstraintKind::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[art0 + i] = Rational::one();
                basis.push(art0 + i);
            }
            ConstraintKind::Eq => {
                row[art0 + i] = Rational::one();
                basis.push(art0 + i);
            }
        }
        rows.push(row);
        rhs.push(b);
    }
    let mut t = Tableau { rows, rhs, basis, obj: Vec::new(), obj_rhs: Rational::zero() };

    let used_art: Vec<bool> = (0..total).map(|j| j >= art0 && t.basis.contains(&j)).collect();
    if used_art.iter().any(|&u| u) {
        let phase1: Vec<Rational> = (0..total).map(|j| if used_art[j] { -Rational::one() } else { Rational::zero() }).collect();
        t.set_objective(&phase1);
        let allowed: Vec<bool> = (0..total).map(|j| j < art0 || used_art[j]).collect();
        t.optimise(&allowed)?;
        if !t.obj_rhs.is_zero() {
            return Err(Error::Infeasible);
        }
        // Drive zero-valued artificials out of the basis; drop rows that are
        // redundant.
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= art0 {
                match (0..art0).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => t.pivot(i, j),
                    None => {
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let mut costs = vec![Rational::zero(); total];
    costs[..n].clone_from_slice(&lp.objective);
    t.set_objective(&costs);
    let allowed: Vec<bool> = (0..total).map(|j| j < art0).collect();
    t.optimise(&allowed)?;

    let mut x = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rhs[i].clone();
        }
    }
    Ok(LpSolution { value: -t.obj_rhs, x })
}
