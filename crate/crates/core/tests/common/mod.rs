//! Oracles shared by the acceptance and property suites.
#![allow(dead_code)]

use num_traits::{Signed, Zero};
use opn_bounds::arith::Rational;
use opn_bounds::lp::{ConstraintKind, ConstraintSystem, LinearProgram, Symbol, Variant};
use rand::Rng;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// A random nonnegative integer assignment (registry order) built so that
/// the defining equalities hold. Returned only if every relation holds.
pub fn feasible_point<R: Rng>(rng: &mut R, sys: &ConstraintSystem) -> Option<Vec<Rational>> {
    let no3 = sys.variant == Variant::No3;
    let mut v = [0i64; 27];
    let set = |v: &mut [i64; 27], s: Symbol, x: i64| v[s.index()] = x;
    use Symbol::*;
    let (s1s, s1t, s1p0) = (rng.gen_range(0..4), rng.gen_range(0..3), rng.gen_range(0..=1));
    let s21 = if no3 { 0 } else { rng.gen_range(0..5) };
    let s22 = rng.gen_range(0..5);
    let (ss, tt, st) = if no3 { (0, 0, 0) } else { (rng.gen_range(0..3), rng.gen_range(0..3), rng.gen_range(0..3)) };
    let s31 = ss + tt + st;
    let s32 = rng.gen_range(0..4);
    let s41 = if no3 { 0 } else { rng.gen_range(0..4) };
    let s42 = rng.gen_range(0..3);
    let s1 = s1s + s1t + s1p0;
    let s = s1 + s21 + s22 + s31 + s32 + s41 + s42;
    let snf_t = rng.gen_range(0..=s31);
    let s_tnf = s31 - snf_t + rng.gen_range(0..2);
    let s32_snf = rng.gen_range(0..=s32);
    let s32_tnf = s32 - s32_snf + rng.gen_range(0..2);
    let t = rng.gen_range(0..8);
    let g4 = 4 * t + rng.gen_range(0..25);
    let e0 = rng.gen_range(1..10);
    let f3 = if no3 { 0 } else { s21 + s31 + s41 + rng.gen_range(0..3) };
    let omega = if no3 { 1 + s + t } else { rng.gen_range(0..=2 + s + t) };
    for (sym, x) in [
        (Omega, e0 + f3 + 2 * s + g4),
        (OmegaSmall, omega),
        (E0, e0),
        (F3, f3),
        (G4, g4),
        (S, s),
        (T, t),
        (S1, s1),
        (S2, s21 + s22),
        (S3, s31 + s32),
        (S4p, s41 + s42),
        (S21, s21),
        (S22, s22),
        (S31, s31),
        (S32, s32),
        (S41, s41),
        (S42, s42),
        (S1S, s1s),
        (S1T, s1t),
        (S1P0, s1p0),
        (S31SS, ss),
        (S31TT, tt),
        (S31ST, st),
        (S31SnfT, snf_t),
        (S31STnf, s_tnf),
        (S32Snf, s32_snf),
        (S32Tnf, s32_tnf),
    ] {
        set(&mut v, sym, x);
    }
    let point: Vec<Rational> = v.iter().map(|&x| q(x)).collect();
    sys.satisfied_by(&point).then_some(point)
}

/// A random bounded LP over `n ≤ 6` variables: `≤` rows with nonnegative
/// right-hand sides, a box `xᵢ ≤ 10`, and sometimes a `≥` row that may make
/// it infeasible.
pub fn random_lp<R: Rng>(rng: &mut R) -> LinearProgram {
    let n = rng.gen_range(1..=6);
    let coef = |rng: &mut R| q(rng.gen_range(-5..=5));
    let objective = (0..n).map(|_| coef(rng)).collect();
    let mut lp = LinearProgram::new(n, objective);
    for _ in 0..rng.gen_range(1..=4) {
        let row = (0..n).map(|_| coef(rng)).collect();
        lp.constrain(row, ConstraintKind::Le, q(rng.gen_range(0..=12)));
    }
    for i in 0..n {
        let mut row = vec![q(0); n];
        row[i] = q(1);
        lp.constrain(row, ConstraintKind::Le, q(10));
    }
    if rng.gen_bool(0.3) {
        let row = (0..n).map(|_| q(rng.gen_range(0..=3))).collect();
        lp.constrain(row, ConstraintKind::Ge, q(rng.gen_range(1..=8)));
    }
    lp
}

/// Solves a square system exactly; `None` when singular.
fn solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        b.swap(col, piv);
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = &a[r][col] / &a[col][col];
                let pivot = a[col].clone();
                for (x, y) in a[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= &f * y;
                }
                let sub = &f * &b[col];
                b[r] -= sub;
            }
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

/// Best objective over all basic feasible points, by brute force over every
/// choice of `n` tight constraints (including `xᵢ = 0`). `None` if no vertex
/// is feasible.
pub fn vertex_optimum(lp: &LinearProgram) -> Option<Rational> {
    let n = lp.num_vars;
    let mut rows: Vec<(Vec<Rational>, Rational)> =
        lp.constraints.iter().map(|c| (c.coeffs.clone(), c.rhs.clone())).collect();
    for i in 0..n {
        let mut r = vec![q(0); n];
        r[i] = q(1);
        rows.push((r, q(0)));
    }
    let m = rows.len();
    let mut best: Option<Rational> = None;
    let mut pick: Vec<usize> = (0..n).collect();
    loop {
        let a = pick.iter().map(|&i| rows[i].0.clone()).collect();
        let b = pick.iter().map(|&i| rows[i].1.clone()).collect();
        if let Some(x) = solve(a, b) {
            if lp.is_feasible(&x) {
                let v = lp.objective_at(&x);
                if best.as_ref().is_none_or(|b| v > *b) {
                    best = Some(v);
                }
            }
        }
        // next n-combination of 0..m
        let mut i = n;
        loop {
            if i == 0 {
                return best;
            }
            i -= 1;
            if pick[i] < m - n + i {
                pick[i] += 1;
                for j in i + 1..n {
                    pick[j] = pick[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn is_nonnegative(x: &[Rational]) -> bool {
    x.iter().all(|v| !v.is_negative())
}
