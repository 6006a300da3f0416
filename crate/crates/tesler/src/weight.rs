//! The bivariate matrix weight and its family sums.
//!
//! A matrix with `p` positive entries carries the weight
//! `(-M)^{p-n} * prod [a_{i,j}]_{q,t}` over its positive entries, where
//! `M = (t-1)(q-1)` and `[b]_{q,t} = (q^b - t^b)/(q - t)`. Since
//! `(-M)^e = (1-t)^e (q-1)^e`, a weight is stored as the pair
//! (`(1-t)^e` times the bracket product, exponent `e`), and only the family
//! sum multiplies the sign factor `(q-1)^e` back in. The alternation is what
//! makes the family sums collapse: the `e > 0` terms vanish at `q = t = 1`,
//! leaving the permutation-matrix contributions.

use crate::error::{Error, Result};
use crate::matrix::GTMatrix;
use crate::poly::BiPoly;
use rayon::prelude::*;
use std::collections::BTreeMap;

/// `[b]_{q,t} = q^{b-1} + q^{b-2} t + ... + t^{b-1}`; rejects `b = 0`.
pub fn qt_bracket(b: u32) -> Result<BiPoly> {
    if b == 0 {
        return Err(Error::Unsupported(
            "the q,t-analog [b] is only used for positive entries".into(),
        ));
    }
    let mut p = BiPoly::zero();
    for i in 0..b {
        p = &p + &BiPoly::monomial(num_bigint::BigInt::from(1), b - 1 - i, i);
    }
    Ok(p)
}

/// A matrix weight in split form: the full weight is `numer * (q-1)^{eposn}`
/// with `numer = (1-t)^{eposn} * prod [a_{i,j}]_{q,t}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QtWeight {
    pub numer: BiPoly,
    pub eposn: u32,
}

impl QtWeight {
    /// Multiply the `(q-1)` factor back in.
    pub fn expand(&self) -> BiPoly {
        &self.numer * &BiPoly::q_minus_one().pow(self.eposn)
    }
}

/// Weight of a single matrix.
///
/// The exponent is (positive entries) - n, which is non-negative exactly
/// when no row is all zero; matrices that would need a negative exponent
/// have no polynomial weight and are rejected as unsupported input.
pub fn weight(m: &GTMatrix) -> Result<QtWeight> {
    let positives = m.positive_entries();
    let n = m.n();
    if positives < n {
        return Err(Error::Unsupported(format!(
            "matrix has an all-zero row ({positives} positive entries in {n} rows); \
             its weight exponent would be negative"
        )));
    }
    let eposn = (positives - n) as u32;
    let mut numer = BiPoly::one_minus_t().pow(eposn);
    for i in 0..n {
        for j in i..n {
            let entry = m.entry(i, j);
            if entry > 0 {
                numer = &numer * &qt_bracket(entry)?;
            }
        }
    }
    Ok(QtWeight { numer, eposn })
}

fn merge_by_exponent(
    mut acc: BTreeMap<u32, BiPoly>,
    other: BTreeMap<u32, BiPoly>,
) -> BTreeMap<u32, BiPoly> {
    for (e, p) in other {
        acc.entry(e)
            .and_modify(|existing| *existing = &*existing + &p)
            .or_insert(p);
    }
    acc
}

/// Sum the weights of a family, grouping by exponent so each `(q-1)^e`
/// factor is multiplied in once.
pub fn sum_weights(matrices: &[GTMatrix]) -> Result<BiPoly> {
    if matrices.is_empty() {
        return Ok(BiPoly::zero());
    }
    let by_exponent: Result<BTreeMap<u32, BiPoly>> = matrices
        .par_iter()
        .try_fold(BTreeMap::new, |mut acc: BTreeMap<u32, BiPoly>, m| {
            let w = weight(m)?;
            acc.entry(w.eposn)
                .and_modify(|existing| *existing = &*existing + &w.numer)
                .or_insert(w.numer);
            Ok(acc)
        })
        .try_reduce(BTreeMap::new, |a, b| Ok(merge_by_exponent(a, b)));
    let by_exponent = by_exponent?;

    let q_minus_one = BiPoly::q_minus_one();
    let mut total = BiPoly::zero();
    for (e, numer) in &by_exponent {
        total = &total + &(numer * &q_minus_one.pow(*e));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::{enumerate_family, EnumerationLimits};
    use crate::matrix::HookSumVector;
    use num_bigint::BigInt;
    use num_traits::Zero;

    #[test]
    fn brackets() {
        assert_eq!(qt_bracket(1).unwrap(), BiPoly::one());
        let b2 = qt_bracket(2).unwrap();
        assert_eq!(b2.to_string(), "q + t");
        let b3 = qt_bracket(3).unwrap();
        assert_eq!(b3.to_string(), "q^2 + q*t + t^2");
        // (q - t) * [3] = q^3 - t^3
        let product = &BiPoly::q_minus_t() * &b3;
        let mut expected = BiPoly::monomial(BigInt::from(1), 3, 0);
        expected = &expected - &BiPoly::monomial(BigInt::from(1), 0, 3);
        assert_eq!(product, expected);
        assert!(qt_bracket(0).is_err());
    }

    #[test]
    fn bracket_is_symmetric() {
        for b in 1..=6 {
            let p = qt_bracket(b).unwrap();
            assert_eq!(p, p.swap_vars());
        }
    }

    #[test]
    fn weight_of_identity() {
        let m = GTMatrix::bottom(&HookSumVector::ones(3));
        let w = weight(&m).unwrap();
        assert_eq!(w.eposn, 0);
        assert_eq!(w.numer, BiPoly::one());
    }

    #[test]
    fn weight_two_by_two() {
        let m = GTMatrix::from_rows(HookSumVector::ones(2), &[vec![0, 1], vec![2]]).unwrap();
        let w = weight(&m).unwrap();
        assert_eq!(w.eposn, 0);
        assert_eq!(w.numer.to_string(), "q + t");
    }

    #[test]
    fn weight_with_sign_factor() {
        // four positive entries in three rows: e = 1
        let m = GTMatrix::from_rows(
            HookSumVector::ones(3),
            &[vec![0, 1, 0], vec![1, 1], vec![2]],
        )
        .unwrap();
        let w = weight(&m).unwrap();
        assert_eq!(w.eposn, 1);
        let expected = &BiPoly::one_minus_t() * &qt_bracket(2).unwrap();
        assert_eq!(w.numer, expected);
        assert_eq!(w.expand(), &expected * &BiPoly::q_minus_one());
    }

    #[test]
    fn weight_rejects_all_zero_row() {
        // hook sums (2, 0): row 2 can be all zero
        let m = GTMatrix::from_rows(HookSumVector::new(vec![2, 0]).unwrap(), &[vec![2, 0], vec![0]])
            .unwrap();
        assert!(matches!(weight(&m), Err(Error::Unsupported(_))));
    }

    #[test]
    fn hilbert_of_size_two_pins_the_sign() {
        // 1 + (q + t): the sign convention behind (1-t)^e (q-1)^e
        let fam = enumerate_family(&HookSumVector::ones(2), &EnumerationLimits::default()).unwrap();
        let total = sum_weights(&fam.matrices).unwrap();
        assert_eq!(total.to_string(), "1 + q + t");
        assert_eq!(total.eval_one_one(), BigInt::from(3));
    }

    #[test]
    fn sum_for_size_three_is_sixteen_at_one_one() {
        let fam = enumerate_family(&HookSumVector::ones(3), &EnumerationLimits::default()).unwrap();
        let total = sum_weights(&fam.matrices).unwrap();
        assert_eq!(total.eval_one_one(), BigInt::from(16));
        assert_eq!(total, total.swap_vars());
    }

    #[test]
    fn survival_at_one_one() {
        // numerator at q = t = 1 is zero when e > 0, else the entry product
        let fam = enumerate_family(&HookSumVector::ones(4), &EnumerationLimits::default()).unwrap();
        for m in &fam.matrices {
            let w = weight(m).unwrap();
            let value = w.numer.eval_one_one();
            if w.eposn > 0 {
                assert!(value.is_zero(), "matrix {m}");
            } else {
                let product: u64 = m
                    .triangle()
                    .iter()
                    .filter(|&&e| e > 0)
                    .map(|&e| e as u64)
                    .product();
                assert_eq!(value, BigInt::from(product), "matrix {m}");
            }
        }
    }
}
