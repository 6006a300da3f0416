//! Exact integer polynomial arithmetic in `q`, in `(q, t)`, and in `q^{±1}`.
//!
//! All three types are sparse exponent-to-coefficient maps with
//! arbitrary-precision coefficients and no stored zeros, so structural
//! equality is semantic equality. Printing uses one canonical term order:
//! ascending total degree, ties broken by descending `q`-exponent
//! (`1 + q + t`, `q^2 + q*t + t^2`).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

fn format_terms(terms: &[(String, BigInt)], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (vars, coeff)) in terms.iter().enumerate() {
        let mag = coeff.abs();
        let sign_negative = coeff.is_negative();
        if idx == 0 {
            if sign_negative {
                write!(f, "-")?;
            }
        } else if sign_negative {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        if vars.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            write!(f, "{vars}")?;
        } else {
            write!(f, "{mag}*{vars}")?;
        }
    }
    Ok(())
}

fn power_name(var: &str, exp: i64) -> String {
    match exp {
        0 => String::new(),
        1 => var.to_string(),
        e => format!("{var}^{e}"),
    }
}

// ---- univariate ----

/// Integer polynomial in `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UniPoly {
    terms: BTreeMap<u32, BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn var() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0)
    }

    pub fn monomial(coeff: BigInt, exp: u32) -> Self {
        let mut p = Self::default();
        p.add_term(exp, coeff);
        p
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        let mut p = Self::var();
        p.add_term(0, BigInt::from(-1));
        p
    }

    /// `[n]_q = 1 + q + ... + q^{n-1}`.
    pub fn q_bracket(n: u32) -> Self {
        let mut p = Self::zero();
        for e in 0..n {
            p.add_term(e, BigInt::one());
        }
        p
    }

    /// `[n]_q! = [1]_q [2]_q ... [n]_q`.
    pub fn q_factorial(n: u32) -> Self {
        let mut p = Self::one();
        for k in 1..=n {
            p = &p * &Self::q_bracket(k);
        }
        p
    }

    fn add_term(&mut self, exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.degree().map(|d| self.coeff(d)).unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Coefficients from exponent 0 up to the degree.
    pub fn coefficients_ascending(&self) -> Vec<BigInt> {
        match self.degree() {
            None => vec![],
            Some(d) => (0..=d).map(|e| self.coeff(e)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval_big(&self, x: &BigInt) -> BigInt {
        // Horner over the sparse terms, ascending.
        let mut result = BigInt::zero();
        let mut last_exp = 0u32;
        let mut first = true;
        for (&exp, coeff) in self.terms.iter().rev() {
            if first {
                result = coeff.clone();
                last_exp = exp;
                first = false;
                continue;
            }
            result = result * x.pow(last_exp - exp) + coeff;
            last_exp = exp;
        }
        if first {
            BigInt::zero()
        } else {
            result * x.pow(last_exp)
        }
    }

    /// Derivative evaluated at 1: the exponent-weighted coefficient sum.
    pub fn derivative_at_one(&self) -> BigInt {
        self.terms
            .iter()
            .map(|(&e, c)| c * BigInt::from(e))
            .sum()
    }

    /// Quotient and remainder of division by `q - 1`; the remainder is the
    /// value at `q = 1`.
    pub fn div_q_minus_one(&self) -> (UniPoly, BigInt) {
        let degree = match self.degree() {
            None => return (UniPoly::zero(), BigInt::zero()),
            Some(d) => d,
        };
        let mut quotient = UniPoly::zero();
        let mut carry = BigInt::zero();
        for e in (1..=degree).rev() {
            carry += self.coeff(e);
            quotient.add_term(e - 1, carry.clone());
        }
        let remainder = self.coeff(0) + carry;
        (quotient, remainder)
    }

    /// Largest `k` with `(q-1)^k` dividing `self`, and the cofactor.
    pub fn strip_q_minus_one(&self) -> (u32, UniPoly) {
        if self.is_zero() {
            return (0, UniPoly::zero());
        }
        let mut k = 0;
        let mut current = self.clone();
        loop {
            let (quotient, remainder) = current.div_q_minus_one();
            if remainder.is_zero() && !current.is_zero() {
                current = quotient;
                k += 1;
            } else {
                return (k, current);
            }
        }
    }

    /// `(q - 1)^w`.
    pub fn q_minus_one_pow(w: u32) -> Self {
        Self::q_minus_one().pow(w)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&ea, ca) in &self.terms {
            for (&eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        &UniPoly::zero() - self
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, BigInt)> = self
            .terms
            .iter()
            .map(|(&e, c)| (power_name("q", e as i64), c.clone()))
            .collect();
        format_terms(&terms, f)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---- bivariate ----

/// Integer polynomial in `q` and `t`; keys are `(q_exp, t_exp)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn monomial(coeff: BigInt, q_exp: u32, t_exp: u32) -> Self {
        let mut p = Self::default();
        p.add_term(q_exp, t_exp, coeff);
        p
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        let mut p = Self::q();
        p.add_term(0, 0, BigInt::from(-1));
        p
    }

    /// `1 - t`.
    pub fn one_minus_t() -> Self {
        let mut p = Self::one();
        p.add_term(0, 1, BigInt::from(-1));
        p
    }

    /// `q - t`.
    pub fn q_minus_t() -> Self {
        let mut p = Self::q();
        p.add_term(0, 1, BigInt::from(-1));
        p
    }

    fn add_term(&mut self, q_exp: u32, t_exp: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self
            .terms
            .entry((q_exp, t_exp))
            .or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(q_exp, t_exp));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, q_exp: u32, t_exp: u32) -> BigInt {
        self.terms
            .get(&(q_exp, t_exp))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Swap the roles of `q` and `t`.
    pub fn swap_vars(&self) -> Self {
        let mut out = Self::zero();
        for (&(qe, te), c) in &self.terms {
            out.add_term(te, qe, c.clone());
        }
        out
    }

    /// Value at `q = t = 1`: the coefficient sum.
    pub fn eval_one_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn eval_big(&self, q: &BigInt, t: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(qe, te), c)| c * q.pow(qe) * t.pow(te))
            .sum()
    }

    /// Substitute `t = 0`.
    pub fn subst_t_zero(&self) -> UniPoly {
        let mut out = UniPoly::zero();
        for (&(qe, te), c) in &self.terms {
            if te == 0 {
                out.add_term(qe, c.clone());
            }
        }
        out
    }

    /// Substitute `t = q^{-1}`.
    pub fn subst_t_q_inverse(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(qe, te), c) in &self.terms {
            out.add_term(qe as i64 - te as i64, c.clone());
        }
        out
    }

    /// Quotient and remainder of division by `q - 1`, dividing each
    /// `t`-column separately; the remainder is the `t`-polynomial at `q = 1`.
    pub fn div_q_minus_one(&self) -> (BiPoly, BiPoly) {
        let mut columns: BTreeMap<u32, BTreeMap<u32, BigInt>> = BTreeMap::new();
        for (&(qe, te), c) in &self.terms {
            columns.entry(te).or_default().insert(qe, c.clone());
        }
        let mut quotient = BiPoly::zero();
        let mut remainder = BiPoly::zero();
        for (te, column) in columns {
            let top = *column.keys().next_back().expect("non-empty column");
            let mut carry = BigInt::zero();
            for qe in (1..=top).rev() {
                carry += column.get(&qe).cloned().unwrap_or_else(BigInt::zero);
                quotient.add_term(qe - 1, te, carry.clone());
            }
            let rem = column.get(&0).cloned().unwrap_or_else(BigInt::zero) + carry;
            remainder.add_term(0, te, rem);
        }
        (quotient, remainder)
    }

    /// Exact division by `(q-1)^k`; a nonzero remainder at any stage is an
    /// error rather than a silent truncation.
    pub fn exact_div_q_minus_one_pow(&self, k: u32) -> Result<BiPoly> {
        let mut current = self.clone();
        for step in 0..k {
            let (quotient, remainder) = current.div_q_minus_one();
            if !remainder.is_zero() {
                return Err(Error::InexactDivision(format!(
                    "remainder {remainder} after dividing by (q-1)^{step} of (q-1)^{k}"
                )));
            }
            current = quotient;
        }
        Ok(current)
    }

    fn sorted_for_display(&self) -> Vec<((u32, u32), BigInt)> {
        let mut terms: Vec<((u32, u32), BigInt)> =
            self.terms.iter().map(|(&k, c)| (k, c.clone())).collect();
        terms.sort_by_key(|&((qe, te), _)| (qe as u64 + te as u64, std::cmp::Reverse(qe)));
        terms
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(qe, te), c) in &rhs.terms {
            out.add_term(qe, te, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(qe, te), c) in &rhs.terms {
            out.add_term(qe, te, -c.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(qa, ta), ca) in &self.terms {
            for (&(qb, tb), cb) in &rhs.terms {
                out.add_term(qa + qb, ta + tb, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, BigInt)> = self
            .sorted_for_display()
            .into_iter()
            .map(|((qe, te), c)| {
                let q_part = power_name("q", qe as i64);
                let t_part = power_name("t", te as i64);
                let vars = match (q_part.is_empty(), t_part.is_empty()) {
                    (true, true) => String::new(),
                    (false, true) => q_part,
                    (true, false) => t_part,
                    (false, false) => format!("{q_part}*{t_part}"),
                };
                (vars, c)
            })
            .collect();
        format_terms(&terms, f)
    }
}

impl Serialize for BiPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

// ---- Laurent ----

/// Integer Laurent polynomial in `q`, allowing negative exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Multiply by `q^k` (possibly negative).
    pub fn shift(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            out.add_term(e + k, c.clone());
        }
        out
    }

    /// View as an ordinary polynomial when no exponent is negative.
    pub fn as_unipoly(&self) -> Option<UniPoly> {
        let mut out = UniPoly::zero();
        for (&e, c) in &self.terms {
            if e < 0 {
                return None;
            }
            out.add_term(e as u32, c.clone());
        }
        Some(out)
    }

    pub fn from_unipoly(p: &UniPoly) -> Self {
        let mut out = Self::zero();
        for (e, c) in p.terms() {
            out.add_term(e as i64, c.clone());
        }
        out
    }
}

impl PartialEq<UniPoly> for LaurentPoly {
    fn eq(&self, other: &UniPoly) -> bool {
        self.as_unipoly().map(|p| p == *other).unwrap_or(false)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, BigInt)> = self
            .terms
            .iter()
            .map(|(&e, c)| (power_name("q", e), c.clone()))
            .collect();
        format_terms(&terms, f)
    }
}

// ---- specialization ----

/// Substitution rules for bivariate series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecializeRule {
    /// `t -> 0`
    TZero,
    /// `t -> q^{-1}`
    TQInverse,
    /// `q -> 1, t -> 1`
    OneOne,
    /// numeric evaluation at integer `(q, t)`
    Numeric(i64, i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Uni(UniPoly),
    Laurent(LaurentPoly),
    Integer(BigInt),
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialized::Uni(p) => write!(f, "{p}"),
            Specialized::Laurent(p) => write!(f, "{p}"),
            Specialized::Integer(v) => write!(f, "{v}"),
        }
    }
}

/// Exact substitution into a bivariate polynomial.
pub fn specialize(p: &BiPoly, rule: SpecializeRule) -> Specialized {
    match rule {
        SpecializeRule::TZero => Specialized::Uni(p.subst_t_zero()),
        SpecializeRule::TQInverse => Specialized::Laurent(p.subst_t_q_inverse()),
        SpecializeRule::OneOne => Specialized::Integer(p.eval_one_one()),
        SpecializeRule::Numeric(q, t) => {
            Specialized::Integer(p.eval_big(&BigInt::from(q), &BigInt::from(t)))
        }
    }
}

impl std::str::FromStr for SpecializeRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "t=0" => Ok(SpecializeRule::TZero),
            "t=q^-1" | "t=q^{-1}" | "t=1/q" => Ok(SpecializeRule::TQInverse),
            "q=1,t=1" | "t=1,q=1" => Ok(SpecializeRule::OneOne),
            other => {
                let mut q_val: Option<i64> = None;
                let mut t_val: Option<i64> = None;
                for part in other.split(',') {
                    if let Some(v) = part.strip_prefix("q=") {
                        q_val = v.parse().ok();
                    } else if let Some(v) = part.strip_prefix("t=") {
                        t_val = v.parse().ok();
                    }
                }
                match (q_val, t_val) {
                    (Some(q), Some(t)) => Ok(SpecializeRule::Numeric(q, t)),
                    _ => Err(Error::Unsupported(format!(
                        "unrecognized specialization rule: {s}"
                    ))),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_matches_canonical_order() {
        let mut p = BiPoly::one();
        p.add_term(1, 0, BigInt::one());
        p.add_term(0, 1, BigInt::one());
        assert_eq!(p.to_string(), "1 + q + t");

        let bracket3 = {
            let mut b = BiPoly::zero();
            b.add_term(2, 0, BigInt::one());
            b.add_term(1, 1, BigInt::one());
            b.add_term(0, 2, BigInt::one());
            b
        };
        assert_eq!(bracket3.to_string(), "q^2 + q*t + t^2");
    }

    #[test]
    fn unipoly_display_signs() {
        let p = UniPoly::q_minus_one_pow(3);
        assert_eq!(p.to_string(), "-1 + 3*q - 3*q^2 + q^3");
        assert_eq!(UniPoly::zero().to_string(), "0");
    }

    #[test]
    fn division_by_q_minus_one() {
        let p = UniPoly::q_minus_one_pow(4);
        let (k, rest) = p.strip_q_minus_one();
        assert_eq!(k, 4);
        assert_eq!(rest, UniPoly::one());

        let q_times = &UniPoly::var() * &UniPoly::q_minus_one_pow(3);
        let (k, rest) = q_times.strip_q_minus_one();
        assert_eq!(k, 3);
        assert_eq!(rest, UniPoly::var());
    }

    #[test]
    fn bipoly_exact_division() {
        let p = &BiPoly::q_minus_one().pow(2) * &BiPoly::one_minus_t();
        let divided = p.exact_div_q_minus_one_pow(2).unwrap();
        assert_eq!(divided, BiPoly::one_minus_t());
        assert!(BiPoly::one_minus_t().exact_div_q_minus_one_pow(1).is_err());
    }

    #[test]
    fn laurent_substitution() {
        let mut p = BiPoly::one();
        p.add_term(1, 0, BigInt::one());
        p.add_term(0, 1, BigInt::one());
        let l = p.subst_t_q_inverse();
        assert_eq!(l.to_string(), "q^-1 + 1 + q");
        assert_eq!(l.shift(1).as_unipoly().unwrap(), UniPoly::q_bracket(3));
    }

    #[test]
    fn q_factorial_small() {
        assert_eq!(UniPoly::q_factorial(1), UniPoly::one());
        let expected = &UniPoly::q_bracket(2) * &UniPoly::q_bracket(3);
        assert_eq!(UniPoly::q_factorial(3), expected);
    }

    #[test]
    fn specialize_rules_parse() {
        assert_eq!("t=0".parse::<SpecializeRule>().unwrap(), SpecializeRule::TZero);
        assert_eq!(
            "t=q^-1".parse::<SpecializeRule>().unwrap(),
            SpecializeRule::TQInverse
        );
        assert_eq!(
            "q=1,t=1".parse::<SpecializeRule>().unwrap(),
            SpecializeRule::OneOne
        );
        assert_eq!(
            "q=2,t=3".parse::<SpecializeRule>().unwrap(),
            SpecializeRule::Numeric(2, 3)
        );
        assert!("nope".parse::<SpecializeRule>().is_err());
    }

    #[test]
    fn eval_big_matches_naive() {
        let p = {
            let mut p = UniPoly::monomial(BigInt::from(3), 4);
            p.add_term(1, BigInt::from(-2));
            p.add_term(0, BigInt::from(7));
            p
        };
        let x = BigInt::from(5);
        // 3*5^4 - 2*5 + 7
        assert_eq!(p.eval_big(&x), BigInt::from(3 * 625 - 10 + 7));
    }
}
