//! Enumeration and exact counting of generalized Tesler matrix families.
//!
//! Two independent routes produce `T(alpha)`:
//!
//! * [`enumerate_family`] iterates the generating step [`children`] from the
//!   1x1 seed `[alpha_1]`, extending one hook-sum coordinate at a time;
//! * [`brute_force_enumerate`] fills rows top to bottom, choosing each row as
//!   a weak composition of its forced total.
//!
//! The oracle route exists so the generated route never has to be trusted on
//! its own; tests compare the two as sets. Counting never materializes
//! matrices: [`count`] pushes a distribution over main diagonals through the
//! generating step, since both the child count and the diagonal product of a
//! matrix depend only on its diagonal.

use crate::error::{Error, Result};
use crate::matrix::{GTMatrix, HookSumVector};
use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;
use std::collections::HashMap;

/// Resource guard for materializing enumerations.
#[derive(Clone, Copy, Debug)]
pub struct EnumerationLimits {
    /// Hard ceiling on the number of matrices held or visited.
    pub max_matrices: u64,
}

impl Default for EnumerationLimits {
    fn default() -> Self {
        Self {
            max_matrices: 10_000_000,
        }
    }
}

impl EnumerationLimits {
    pub fn with_ceiling(max_matrices: u64) -> Self {
        Self { max_matrices }
    }
}

/// A fully materialized family, canonically ordered.
#[derive(Clone, Debug)]
pub struct FamilyEnumeration {
    pub alpha: HookSumVector,
    pub matrices: Vec<GTMatrix>,
    pub count: BigUint,
}

/// All matrices of size `n + 1` the generating step produces from `m`.
///
/// One child per choice of new diagonal prefix `d_i' in [0, d_i]`; the moved
/// amount `d_i - d_i'` lands in the new last column and the new corner entry
/// keeps the diagonal sum equal to the hook-sum total. Every choice yields a
/// valid matrix, so the child count is exactly `dpro(m)`.
pub fn children(m: &GTMatrix, next_alpha: u32) -> Vec<GTMatrix> {
    let n = m.n();
    let child_alpha = {
        let mut entries = m.alpha().entries().to_vec();
        entries.push(next_alpha);
        HookSumVector::new(entries).expect("non-empty")
    };
    let diag = m.diagonal();
    let mut out = Vec::with_capacity(m.diagonal_product() as usize);

    // Odometer over the new diagonal prefix.
    let mut choice = vec![0u32; n];
    loop {
        // The new corner keeps the diagonal sum equal to the hook-sum total:
        // corner = next_alpha + (amount moved off the old diagonal).
        let moved: u32 = diag.iter().zip(&choice).map(|(&d, &c)| d - c).sum();
        let corner = next_alpha + moved;

        let new_n = n + 1;
        let mut tri = vec![0u32; GTMatrix::tri_len(new_n)];
        for i in 0..n {
            for j in i..n {
                let v = if i == j { choice[i] } else { m.entry(i, j) };
                tri[GTMatrix::tri_index(new_n, i, j)] = v;
            }
            tri[GTMatrix::tri_index(new_n, i, n)] = diag[i] - choice[i];
        }
        tri[GTMatrix::tri_index(new_n, n, n)] = corner;
        out.push(GTMatrix::from_triangle_unchecked(child_alpha.clone(), tri));

        // advance odometer
        let mut pos = n;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if choice[pos] < diag[pos] {
                choice[pos] += 1;
                choice[pos + 1..].fill(0);
                break;
            }
        }
    }
}

/// Materialize `T(alpha)` by iterating the generating step level by level.
pub fn enumerate_family(
    alpha: &HookSumVector,
    limits: &EnumerationLimits,
) -> Result<FamilyEnumeration> {
    let n = alpha.len();
    let seed = GTMatrix::bottom(&alpha.prefix(1)?);
    let mut level = vec![seed];
    for k in 1..n {
        let next_alpha = alpha.entry(k);
        let mut next: Vec<GTMatrix> = if level.len() >= 1024 {
            level
                .par_iter()
                .flat_map_iter(|m| children(m, next_alpha))
                .collect()
        } else {
            level.iter().flat_map(|m| children(m, next_alpha)).collect()
        };
        if next.len() as u64 > limits.max_matrices {
            return Err(Error::CeilingExceeded {
                limit: limits.max_matrices,
            });
        }
        next.shrink_to_fit();
        level = next;
    }
    level.sort_unstable();
    debug_assert!(level.windows(2).all(|w| w[0] < w[1]), "duplicate children");
    let count = BigUint::from(level.len());
    Ok(FamilyEnumeration {
        alpha: alpha.clone(),
        matrices: level,
        count,
    })
}

/// Stream every matrix of `T(alpha)` depth-first without materializing the
/// family. Delivery order is the deterministic generation order, not the
/// canonical one; returns the number of matrices visited.
pub fn visit_family(
    alpha: &HookSumVector,
    limits: &EnumerationLimits,
    visitor: &mut dyn FnMut(&GTMatrix),
) -> Result<u64> {
    fn recurse(
        m: &GTMatrix,
        alpha: &HookSumVector,
        limits: &EnumerationLimits,
        seen: &mut u64,
        visitor: &mut dyn FnMut(&GTMatrix),
    ) -> Result<()> {
        if m.n() == alpha.len() {
            *seen += 1;
            if *seen > limits.max_matrices {
                return Err(Error::CeilingExceeded {
                    limit: limits.max_matrices,
                });
            }
            visitor(m);
            return Ok(());
        }
        for child in children(m, alpha.entry(m.n())) {
            recurse(&child, alpha, limits, seen, visitor)?;
        }
        Ok(())
    }

    let seed = GTMatrix::bottom(&alpha.prefix(1)?);
    let mut seen = 0;
    recurse(&seed, alpha, limits, &mut seen, visitor)?;
    Ok(seen)
}

/// Independent oracle: fill rows top to bottom. Row `k` must sum to
/// `alpha_k` plus the column-`k` sum above the diagonal, so its entries run
/// over the weak compositions of that total.
pub fn brute_force_enumerate(
    alpha: &HookSumVector,
    limits: &EnumerationLimits,
) -> Result<FamilyEnumeration> {
    let n = alpha.len();
    let mut out: Vec<GTMatrix> = Vec::new();

    fn fill_row(
        alpha: &HookSumVector,
        tri: &mut Vec<u32>,
        row: usize,
        out: &mut Vec<GTMatrix>,
        limit: u64,
    ) -> Result<()> {
        let n = alpha.len();
        if row == n {
            if out.len() as u64 >= limit {
                return Err(Error::CeilingExceeded { limit });
            }
            out.push(GTMatrix::from_triangle_unchecked(
                alpha.clone(),
                tri.clone(),
            ));
            return Ok(());
        }
        let col_sum: u32 = (0..row)
            .map(|i| tri[GTMatrix::tri_index(n, i, row)])
            .sum();
        let total = alpha.entry(row) + col_sum;
        let width = n - row;

        // weak compositions of `total` into `width` parts
        fn compositions(
            total: u32,
            pos: usize,
            width: usize,
            row_start: usize,
            alpha: &HookSumVector,
            tri: &mut Vec<u32>,
            row: usize,
            out: &mut Vec<GTMatrix>,
            limit: u64,
        ) -> Result<()> {
            if pos == width - 1 {
                tri[row_start + pos] = total;
                fill_row(alpha, tri, row + 1, out, limit)?;
                tri[row_start + pos] = 0;
                return Ok(());
            }
            for v in 0..=total {
                tri[row_start + pos] = v;
                compositions(
                    total - v,
                    pos + 1,
                    width,
                    row_start,
                    alpha,
                    tri,
                    row,
                    out,
                    limit,
                )?;
            }
            tri[row_start + pos] = 0;
            Ok(())
        }

        let row_start = GTMatrix::tri_index(n, row, row);
        compositions(total, 0, width, row_start, alpha, tri, row, out, limit)
    }

    let mut tri = vec![0u32; GTMatrix::tri_len(n)];
    fill_row(alpha, &mut tri, 0, &mut out, limits.max_matrices)?;
    out.sort_unstable();
    let count = BigUint::from(out.len());
    Ok(FamilyEnumeration {
        alpha: alpha.clone(),
        matrices: out,
        count,
    })
}

/// Distribution of main diagonals over `T(alpha)`, with exact multiplicities.
///
/// The generating step maps a diagonal to its child diagonals independently of
/// the off-diagonal entries, so pushing counts through diagonals reproduces
/// the full family sizes without materializing matrices.
pub fn diagonal_distribution(alpha: &HookSumVector) -> HashMap<Vec<u32>, BigUint> {
    let n = alpha.len();
    let mut dist: HashMap<Vec<u32>, BigUint> = HashMap::new();
    dist.insert(vec![alpha.entry(0)], BigUint::one());
    for k in 1..n {
        let next_alpha = alpha.entry(k);
        let mut next: HashMap<Vec<u32>, BigUint> = HashMap::new();
        for (diag, mult) in &dist {
            let mut choice = vec![0u32; diag.len()];
            loop {
                let moved: u32 = diag
                    .iter()
                    .zip(&choice)
                    .map(|(&d, &c)| d - c)
                    .sum();
                let mut child = choice.clone();
                child.push(next_alpha + moved);
                *next.entry(child).or_insert_with(BigUint::zero) += mult;

                let mut pos = diag.len();
                let mut done = true;
                while pos > 0 {
                    pos -= 1;
                    if choice[pos] < diag[pos] {
                        choice[pos] += 1;
                        choice[pos + 1..].fill(0);
                        done = false;
                        break;
                    }
                }
                if done {
                    break;
                }
            }
        }
        dist = next;
    }
    dist
}

fn dpro_of_diagonal(diag: &[u32]) -> BigUint {
    diag.iter()
        .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d as u64 + 1))
}

/// `T(alpha)`, exactly, without materializing the family.
///
/// For `n > 1` this is the diagonal-product sum over `T(alpha_1..alpha_{n-1})`
/// taken on the diagonal distribution; the final hook-sum coordinate never
/// requires size-`n` matrices.
pub fn count(alpha: &HookSumVector) -> BigUint {
    let n = alpha.len();
    if n == 1 {
        return BigUint::one();
    }
    let prefix = alpha.prefix(n - 1).expect("n >= 2");
    diagonal_distribution(&prefix)
        .iter()
        .map(|(diag, mult)| dpro_of_diagonal(diag) * mult)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n: usize) -> HookSumVector {
        HookSumVector::ones(n)
    }

    #[test]
    fn children_counts_match_diagonal_product() {
        let m = GTMatrix::from_rows(ones(3), &[vec![0, 1, 0], vec![1, 1], vec![2]]).unwrap();
        // diagonal (0,1,2): six children
        assert_eq!(children(&m, 1).len(), 6);
        assert_eq!(children(&m, 1).len() as u128, m.diagonal_product());
    }

    #[test]
    fn children_of_unit_seed() {
        let seed = GTMatrix::bottom(&ones(1));
        let kids = children(&seed, 1);
        assert_eq!(kids.len(), 2);
        let diags: Vec<Vec<u32>> = kids.iter().map(|m| m.diagonal()).collect();
        assert!(diags.contains(&vec![0, 2]));
        assert!(diags.contains(&vec![1, 1]));
        for kid in &kids {
            assert_eq!(kid.recompute_hook_sums(), vec![1, 1]);
        }
    }

    #[test]
    fn children_of_zero_seed() {
        let seed = GTMatrix::bottom(&HookSumVector::new(vec![0]).unwrap());
        let kids = children(&seed, 0);
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].triangle(), &[0, 0, 0]);
    }

    #[test]
    fn family_sizes() {
        let limits = EnumerationLimits::default();
        assert_eq!(enumerate_family(&ones(3), &limits).unwrap().matrices.len(), 7);
        assert_eq!(
            enumerate_family(&HookSumVector::new(vec![1, 0]).unwrap(), &limits)
                .unwrap()
                .matrices
                .len(),
            2
        );
        assert_eq!(
            enumerate_family(&HookSumVector::new(vec![1, 2]).unwrap(), &limits)
                .unwrap()
                .matrices
                .len(),
            2
        );
    }

    #[test]
    fn oracle_agrees_with_generation() {
        let limits = EnumerationLimits::default();
        for entries in [
            vec![1, 1, 1],
            vec![0, 0],
            vec![2, 1],
            vec![1, 0, 1],
            vec![2, 0, 1],
            vec![1, 2],
        ] {
            let alpha = HookSumVector::new(entries).unwrap();
            let gen = enumerate_family(&alpha, &limits).unwrap();
            let brute = brute_force_enumerate(&alpha, &limits).unwrap();
            assert_eq!(gen.matrices, brute.matrices, "alpha = {alpha}");
        }
    }

    #[test]
    fn brute_force_zero_family() {
        let alpha = HookSumVector::new(vec![0, 0]).unwrap();
        let fam = brute_force_enumerate(&alpha, &EnumerationLimits::default()).unwrap();
        assert_eq!(fam.matrices.len(), 1);
        assert_eq!(fam.matrices[0].triangle(), &[0, 0, 0]);
    }

    #[test]
    fn ceiling_is_enforced() {
        let limits = EnumerationLimits::with_ceiling(5);
        assert!(matches!(
            enumerate_family(&ones(4), &limits),
            Err(Error::CeilingExceeded { limit: 5 })
        ));
        assert!(matches!(
            brute_force_enumerate(&ones(4), &limits),
            Err(Error::CeilingExceeded { limit: 5 })
        ));
        let mut sink = |_: &GTMatrix| {};
        assert!(matches!(
            visit_family(&ones(4), &limits, &mut sink),
            Err(Error::CeilingExceeded { limit: 5 })
        ));
    }

    #[test]
    fn streaming_matches_materialized() {
        let alpha = ones(4);
        let limits = EnumerationLimits::default();
        let mut streamed = Vec::new();
        visit_family(&alpha, &limits, &mut |m| streamed.push(m.clone())).unwrap();
        streamed.sort_unstable();
        let fam = enumerate_family(&alpha, &limits).unwrap();
        assert_eq!(streamed, fam.matrices);
    }

    #[test]
    fn counts_by_distribution() {
        assert_eq!(count(&ones(1)), BigUint::from(1u32));
        assert_eq!(count(&ones(2)), BigUint::from(2u32));
        assert_eq!(count(&ones(3)), BigUint::from(7u32));
        assert_eq!(count(&ones(4)), BigUint::from(40u32));
        assert_eq!(count(&ones(5)), BigUint::from(357u32));
        assert_eq!(count(&ones(6)), BigUint::from(4820u32));
    }

    #[test]
    fn count_single_one_powers_of_two() {
        for n in 1..=15usize {
            let alpha = HookSumVector::single_one(n);
            assert_eq!(count(&alpha), BigUint::from(1u64 << (n - 1)), "n = {n}");
        }
    }

    #[test]
    fn last_coordinate_does_not_change_count() {
        for x in [0u32, 1, 3, 7] {
            let alpha = HookSumVector::new(vec![1, 2, x]).unwrap();
            assert_eq!(
                count(&alpha),
                count(&HookSumVector::new(vec![1, 2, 0]).unwrap())
            );
        }
    }

    #[test]
    fn count_agrees_with_enumeration() {
        let limits = EnumerationLimits::default();
        for entries in [vec![1, 1, 1, 1], vec![1, 2, 3], vec![2, 1, 1], vec![1, 0, 1, 0]] {
            let alpha = HookSumVector::new(entries).unwrap();
            let fam = enumerate_family(&alpha, &limits).unwrap();
            assert_eq!(count(&alpha), fam.count, "alpha = {alpha}");
        }
    }

    #[test]
    fn every_enumerated_matrix_revalidates() {
        let limits = EnumerationLimits::default();
        for n in 1..=5 {
            let fam = enumerate_family(&ones(n), &limits).unwrap();
            for m in &fam.matrices {
                let recomputed = m.recompute_hook_sums();
                let declared: Vec<i64> =
                    m.alpha().entries().iter().map(|&a| a as i64).collect();
                assert_eq!(recomputed, declared);
            }
        }
    }
}
