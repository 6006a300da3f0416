//! The bivariate Hilbert-style series over Tesler matrices and its
//! specialization identities.
//!
//! Summing the matrix weight over `T(1^n)` yields a polynomial in `q` and
//! `t` whose value at `q = t = 1` is `(n+1)^{n-1}`. Three identities pin the
//! specializations:
//!
//! * `q^{binom(n,2)} * series(q, q^{-1}) = [n+1]_q^{n-1}`
//! * `series(q, 0) = [n]_q!`
//! * the permutation Tesler matrices alone account for the value at
//!   `q = t = 1` through their entry products.

use crate::enumerate::{count, enumerate_family, visit_family, EnumerationLimits};
use crate::error::{Error, Result};
use crate::matrix::HookSumVector;
use crate::poly::{BiPoly, UniPoly};
use crate::weight::sum_weights;
use num_bigint::BigUint;
use num_traits::One;

/// Default matrix-count ceiling; admits `n <= 7` and keeps larger sizes
/// behind an explicit opt-in.
pub const DEFAULT_HILBERT_CEILING: u64 = 100_000;

/// The assembled series for one size.
#[derive(Clone, Debug)]
pub struct HilbertResult {
    pub n: usize,
    pub series: BiPoly,
    /// Value at `q = t = 1`; equals `(n+1)^{n-1}`.
    pub dimension: BigUint,
}

/// Outcome of an identity check, with the first differing term on failure.
#[derive(Clone, Debug)]
pub struct VerifyOutcome {
    pub ok: bool,
    pub diff: Option<String>,
}

impl VerifyOutcome {
    fn pass() -> Self {
        Self {
            ok: true,
            diff: None,
        }
    }

    fn fail(diff: String) -> Self {
        Self {
            ok: false,
            diff: Some(diff),
        }
    }
}

fn check_ceiling(n: usize, max_matrices: u64) -> Result<()> {
    let family_size = count(&HookSumVector::ones(n));
    if family_size > BigUint::from(max_matrices) {
        return Err(Error::CeilingExceeded {
            limit: max_matrices,
        });
    }
    Ok(())
}

/// Sum the weights over `T(1^n)` with an explicit matrix-count ceiling.
pub fn hilbert_series_with_ceiling(n: usize, max_matrices: u64) -> Result<HilbertResult> {
    check_ceiling(n, max_matrices)?;
    let limits = EnumerationLimits::with_ceiling(max_matrices);
    let family = enumerate_family(&HookSumVector::ones(n), &limits)?;
    let series = sum_weights(&family.matrices)?;
    let at_one = series.eval_one_one();
    let dimension = at_one
        .to_biguint()
        .ok_or_else(|| Error::Unsupported(format!("series value at (1,1) is negative: {at_one}")))?;
    Ok(HilbertResult {
        n,
        series,
        dimension,
    })
}

/// Sum the weights over `T(1^n)` under the default ceiling.
pub fn hilbert_series(n: usize) -> Result<HilbertResult> {
    hilbert_series_with_ceiling(n, DEFAULT_HILBERT_CEILING)
}

fn binom2(n: usize) -> i64 {
    (n as i64) * (n as i64 - 1) / 2
}

/// `q^{binom(n,2)} * series(q, q^{-1}) = [n+1]_q^{n-1}`, exactly.
pub fn verify_eq_qinverse(n: usize, max_matrices: u64) -> Result<VerifyOutcome> {
    let result = hilbert_series_with_ceiling(n, max_matrices)?;
    let shifted = result.series.subst_t_q_inverse().shift(binom2(n));
    let expected = UniPoly::q_bracket(n as u32 + 1).pow(n as u32 - 1);
    if shifted == expected {
        return Ok(VerifyOutcome::pass());
    }
    let diff = first_laurent_diff(&shifted, &expected);
    Ok(VerifyOutcome::fail(diff))
}

/// `series(q, 0) = [n]_q!`, exactly.
pub fn verify_eq_tzero(n: usize, max_matrices: u64) -> Result<VerifyOutcome> {
    let result = hilbert_series_with_ceiling(n, max_matrices)?;
    let specialized = result.series.subst_t_zero();
    let expected = UniPoly::q_factorial(n as u32);
    if specialized == expected {
        return Ok(VerifyOutcome::pass());
    }
    let diff = first_uni_diff(&specialized, &expected);
    Ok(VerifyOutcome::fail(diff))
}

/// Permutation Tesler matrices: exactly one nonzero entry per row; the sum
/// of their entry products equals `(n+1)^{n-1}`.
pub fn verify_eq_permutation(n: usize, max_matrices: u64) -> Result<VerifyOutcome> {
    check_ceiling(n, max_matrices)?;
    let limits = EnumerationLimits::with_ceiling(max_matrices);
    let mut total = BigUint::from(0u32);
    visit_family(&HookSumVector::ones(n), &limits, &mut |m| {
        if m.is_permutation_tesler() {
            let product: BigUint = m
                .triangle()
                .iter()
                .filter(|&&e| e > 0)
                .fold(BigUint::one(), |acc, &e| acc * BigUint::from(e));
            total += product;
        }
    })?;
    let expected = BigUint::from(n as u64 + 1).pow(n as u32 - 1);
    if total == expected {
        Ok(VerifyOutcome::pass())
    } else {
        Ok(VerifyOutcome::fail(format!(
            "permutation sum {total}, expected {expected}"
        )))
    }
}

fn first_uni_diff(got: &UniPoly, expected: &UniPoly) -> String {
    let difference = got - expected;
    let first = difference.terms().next().map(|(exp, _)| exp);
    match first {
        Some(exp) => format!(
            "first differing term at q^{exp}: got {}, expected {}",
            got.coeff(exp),
            expected.coeff(exp)
        ),
        None => "polynomials agree".into(),
    }
}

fn first_laurent_diff(got: &crate::poly::LaurentPoly, expected: &UniPoly) -> String {
    let expected_l = crate::poly::LaurentPoly::from_unipoly(expected);
    for (exp, coeff) in got.terms() {
        if expected_l.coeff(exp) != *coeff {
            return format!(
                "first differing term at q^{exp}: got {coeff}, expected {}",
                expected_l.coeff(exp)
            );
        }
    }
    for (exp, coeff) in expected_l.terms() {
        if got.coeff(exp) != *coeff {
            return format!(
                "first differing term at q^{exp}: got {}, expected {coeff}",
                got.coeff(exp)
            );
        }
    }
    "polynomials agree".into()
}
