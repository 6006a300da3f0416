//! Randomized invariants: polynomial ring laws, exact division round trips,
//! the enumeration oracle pair, flow round trips, and characteristic
//! polynomial multiplicativity.

use num_bigint::BigInt;
use proptest::prelude::*;
use tesler::enumerate::{brute_force_enumerate, children, enumerate_family, EnumerationLimits};
use tesler::flow::{from_flow, to_flow};
use tesler::matrix::HookSumVector;
use tesler::poly::{BiPoly, UniPoly};
use tesler::poset::{build_poset, product};
use tesler::weight::qt_bracket;

fn limits() -> EnumerationLimits {
    EnumerationLimits::default()
}

fn small_alpha() -> impl Strategy<Value = HookSumVector> {
    proptest::collection::vec(0u32..=2, 1..=4)
        .prop_filter("total at most five", |v| v.iter().sum::<u32>() <= 5)
        .prop_map(|v| HookSumVector::new(v).expect("non-empty"))
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec(((0u32..5, 0u32..5), -5i64..=5), 0..6).prop_map(|terms| {
        terms
            .into_iter()
            .fold(BiPoly::zero(), |acc, ((qe, te), c)| {
                &acc + &BiPoly::monomial(BigInt::from(c), qe, te)
            })
    })
}

fn unipoly() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec((0u32..6, -6i64..=6), 0..6).prop_map(|terms| {
        terms.into_iter().fold(UniPoly::zero(), |acc, (e, c)| {
            &acc + &UniPoly::monomial(BigInt::from(c), e)
        })
    })
}

proptest! {
    #[test]
    fn bipoly_ring_axioms(a in bipoly(), b in bipoly(), c in bipoly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn bipoly_exact_division_round_trip(a in bipoly(), k in 0u32..4) {
        let scaled = &a * &BiPoly::q_minus_one().pow(k);
        let back = scaled.exact_div_q_minus_one_pow(k).expect("constructed divisible");
        prop_assert_eq!(back, a);
    }

    #[test]
    fn unipoly_strip_recovers_the_power(p in unipoly(), k in 0u32..4) {
        prop_assume!(!p.is_zero());
        let scaled = &p * &UniPoly::q_minus_one_pow(k);
        let (power, rest) = scaled.strip_q_minus_one();
        prop_assert_eq!(&(&rest * &UniPoly::q_minus_one_pow(power)), &scaled);
        prop_assert!(power >= k);
    }

    #[test]
    fn bracket_symmetry(b in 1u32..8) {
        let p = qt_bracket(b).expect("positive");
        prop_assert_eq!(p.clone(), p.swap_vars());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn oracle_and_generation_agree(alpha in small_alpha()) {
        let generated = enumerate_family(&alpha, &limits()).expect("small family");
        let brute = brute_force_enumerate(&alpha, &limits()).expect("small family");
        prop_assert_eq!(&generated.matrices, &brute.matrices);
    }

    #[test]
    fn enumerated_families_revalidate(alpha in small_alpha()) {
        let family = enumerate_family(&alpha, &limits()).expect("small family");
        let declared: Vec<i64> = alpha.entries().iter().map(|&a| a as i64).collect();
        for m in &family.matrices {
            prop_assert_eq!(m.recompute_hook_sums(), declared.clone());
            let diag_sum: u64 = m.diagonal().iter().map(|&d| d as u64).sum();
            prop_assert_eq!(diag_sum, alpha.total());
            prop_assert_eq!(&from_flow(&to_flow(m)).expect("round trip"), m);
        }
    }

    #[test]
    fn children_count_is_the_diagonal_product(alpha in small_alpha(), next in 0u32..3) {
        let family = enumerate_family(&alpha, &limits()).expect("small family");
        for m in family.matrices.iter().take(10) {
            prop_assert_eq!(children(m, next).len() as u128, m.diagonal_product());
        }
    }

    #[test]
    fn characteristic_polynomial_is_multiplicative(a in small_alpha(), b in small_alpha()) {
        let p = build_poset(&a, &limits()).expect("small poset");
        let q = build_poset(&b, &limits()).expect("small poset");
        let prod = product(&p, &q);
        let lhs = prod.characteristic_polynomial();
        let rhs = &p.characteristic_polynomial() * &q.characteristic_polynomial();
        prop_assert_eq!(lhs, rhs);
    }
}
