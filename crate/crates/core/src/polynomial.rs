//! Integer polynomials, cyclotomic polynomials `Φ_d`, the all-ones
//! polynomials `Ψ_n = 1 + x + … + x^{n-1}` and the divisibility check
//! `Φ_{2t} | Φ_t(Ψ_r)` for `r ≡ −1 (mod 2t)`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::arith::{is_prime_u64, Rational};
use crate::{Error, Result};

/// Largest `(t−1)(r−1)` that [`check_proposition`] will expand.
pub const MAX_PROPOSITION_DEGREE: u64 = 20_000;

/// Dense polynomial with integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    /// `c·x^k`
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let mag = c.abs();
            let show_mag = k == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Serialises as a JSON array of decimal strings, lowest degree first.
impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigInt::zero();
        IntPoly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

/// `Ψ_n(x) = 1 + x + … + x^{n−1}`.
pub fn psi(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::InvalidInput("Ψ_n needs n ≥ 1".into()));
    }
    Ok(IntPoly::new(vec![BigInt::one(); n]))
}

fn cyclotomic_cache() -> &'static Mutex<HashMap<u64, IntPoly>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The `d`-th cyclotomic polynomial, obtained by dividing `x^d − 1` by
/// `Φ_{d'}` for every proper divisor `d'` of `d`. Results are memoised.
pub fn cyclotomic(d: u64) -> Result<IntPoly> {
    if d == 0 {
        return Err(Error::InvalidInput("Φ_d needs d ≥ 1".into()));
    }
    if let Some(hit) = cyclotomic_cache().lock().expect("cache poisoned").get(&d) {
        return Ok(hit.clone());
    }
    let mut poly = &IntPoly::monomial(BigInt::one(), d as usize) - &IntPoly::one();
    for proper in (1..d).filter(|k| d.is_multiple_of(*k)) {
        let divisor = cyclotomic(proper)?;
        poly = exact_divides(&divisor, &poly)?
            .quotient
            .expect("cyclotomic factors divide x^d - 1");
    }
    cyclotomic_cache()
        .lock()
        .expect("cache poisoned")
        .insert(d, poly.clone());
    Ok(poly)
}

/// `outer(inner(x))` by Horner's scheme over polynomials.
pub fn compose(outer: &IntPoly, inner: &IntPoly) -> IntPoly {
    outer
        .coeffs
        .iter()
        .rev()
        .fold(IntPoly::zero(), |acc, c| &(&acc * inner) + &IntPoly::new(vec![c.clone()]))
}

/// Outcome of [`exact_divides`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Division {
    /// Remainder over the rationals is identically zero.
    pub divides: bool,
    /// The quotient, present when `divides` holds and it has integer
    /// coefficients (always the case for monic divisors).
    pub quotient: Option<IntPoly>,
}

/// Long division over the rationals, then an integrality check on the quotient.
pub fn exact_divides(divisor: &IntPoly, dividend: &IntPoly) -> Result<Division> {
    let Some(dv) = divisor.degree() else {
        return Err(Error::InvalidInput("division by the zero polynomial".into()));
    };
    let Some(dd) = dividend.degree() else {
        return Ok(Division { divides: true, quotient: Some(IntPoly::zero()) });
    };
    if dd < dv {
        return Ok(Division { divides: false, quotient: None });
    }
    let lead = Rational::from_integer(divisor.coeffs[dv].clone());
    let den: Vec<Rational> = divisor.coeffs.iter().cloned().map(Rational::from_integer).collect();
    let mut rem: Vec<Rational> = dividend.coeffs.iter().cloned().map(Rational::from_integer).collect();
    let mut quot = vec![Rational::zero(); dd - dv + 1];
    for k in (0..=dd - dv).rev() {
        let q = &rem[k + dv] / &lead;
        if q.is_zero() {
            continue;
        }
        for (i, c) in den.iter().enumerate() {
            if !c.is_zero() {
                rem[k + i] -= &q * c;
            }
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return Ok(Division { divides: false, quotient: None });
    }
    let quotient = quot
        .into_iter()
        .map(|q| q.is_integer().then(|| q.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(IntPoly::new);
    Ok(Division { divides: true, quotient })
}

pub fn eval_at(f: &IntPoly, x: &BigInt) -> BigInt {
    f.eval(x)
}

/// Result of checking `Φ_{2t} | Φ_t(Ψ_r)` for one pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropositionReport {
    pub t: u64,
    pub r: u64,
    /// `r ≡ −1 (mod 2t)`: the hypothesis under which divisibility must hold.
    pub congruent: bool,
    pub divides: bool,
    pub composed_degree: u64,
}

impl PropositionReport {
    /// False only when the hypothesis holds but divisibility fails.
    pub fn consistent(&self) -> bool {
        !self.congruent || self.divides
    }
}

pub fn proposition_report(t: u64, r: u64) -> Result<PropositionReport> {
    if t < 3 || !is_prime_u64(t) {
        return Err(Error::InvalidInput(format!("t = {t} is not an odd prime")));
    }
    if r == 0 || r.is_even() {
        return Err(Error::InvalidInput(format!("r = {r} is not a positive odd integer")));
    }
    let degree = (t - 1) * (r - 1);
    if degree > MAX_PROPOSITION_DEGREE {
        return Err(Error::BudgetExceeded {
            budget: MAX_PROPOSITION_DEGREE,
            context: format!("expanding Φ_{t}(Ψ_{r}) of degree {degree}"),
        });
    }
    let composed = compose(&cyclotomic(t)?, &psi(r as usize)?);
    let divides = exact_divides(&cyclotomic(2 * t)?, &composed)?.divides;
    Ok(PropositionReport {
        t,
        r,
        congruent: (r + 1).is_multiple_of(2 * t),
        divides,
        composed_degree: degree,
    })
}

/// `Φ_{2t}(x) | Φ_t(Ψ_r(x))`, decided by exact division.
pub fn check_proposition(t: u64, r: u64) -> Result<bool> {
    proposition_report(t, r).map(|rep| rep.divides)
}
