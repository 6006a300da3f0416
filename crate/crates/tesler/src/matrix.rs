//! Hook-sum vectors and generalized Tesler matrices.
//!
//! An upper-triangular matrix `A = (a_{i,j})` of non-negative integers has
//! hook sums
//!
//! ```text
//! h_k = (a_{k,k} + a_{k,k+1} + ... + a_{k,n}) - (a_{1,k} + ... + a_{k-1,k})
//! ```
//!
//! i.e. the row sum from the diagonal rightward minus the column sum above
//! the diagonal. A generalized Tesler matrix for a vector `alpha` is one with
//! `h_k = alpha_k` for every `k`; classical Tesler matrices are the case
//! `alpha = (1,...,1)`. Matrices are immutable values: every operation here
//! is pure.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// A prescribed hook-sum vector, stored left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct HookSumVector {
    entries: Vec<u32>,
}

impl HookSumVector {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyAlpha);
        }
        Ok(Self { entries })
    }

    /// `(1, 1, ..., 1)` of length `n`.
    pub fn ones(n: usize) -> Self {
        Self::new(vec![1; n.max(1)]).expect("n >= 1")
    }

    /// `(1, 0, ..., 0)` of length `n`.
    pub fn single_one(n: usize) -> Self {
        let mut entries = vec![0; n.max(1)];
        entries[0] = 1;
        Self { entries }
    }

    /// `(1^k, 0^{n-k})`: `k` ones followed by `n - k` zeros.
    pub fn ones_then_zeros(k: usize, n: usize) -> Result<Self> {
        if n == 0 || k > n {
            return Err(Error::Unsupported(format!(
                "need 0 <= k <= n with n >= 1, got k={k}, n={n}"
            )));
        }
        let mut entries = vec![0; n];
        entries[..k].fill(1);
        Self::new(entries)
    }

    /// `(1, 2, ..., n)`.
    pub fn staircase(n: usize) -> Self {
        Self::new((1..=n.max(1) as u32).collect()).expect("n >= 1")
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.entries[i]
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&e| e as u64).sum()
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|&e| e <= 1)
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Self { entries }
    }

    /// Copy with entry at `pos` (0-based) incremented by one.
    pub fn adding_one_at(&self, pos: usize) -> Result<Self> {
        if pos >= self.len() {
            return Err(Error::Unsupported(format!(
                "position {pos} out of range for length {}",
                self.len()
            )));
        }
        let mut entries = self.entries.clone();
        entries[pos] += 1;
        Self::new(entries)
    }

    /// Prefix of the first `k` entries.
    pub fn prefix(&self, k: usize) -> Result<Self> {
        Self::new(self.entries[..k].to_vec())
    }
}

impl TryFrom<Vec<u32>> for HookSumVector {
    type Error = Error;
    fn try_from(entries: Vec<u32>) -> Result<Self> {
        Self::new(entries)
    }
}

impl From<HookSumVector> for Vec<u32> {
    fn from(alpha: HookSumVector) -> Self {
        alpha.entries
    }
}

impl fmt::Display for HookSumVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for HookSumVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let entries: std::result::Result<Vec<u32>, _> = s
            .split(',')
            .map(|part| part.trim().parse::<u32>())
            .collect();
        match entries {
            Ok(v) if !v.is_empty() => HookSumVector::new(v),
            _ => Err(Error::ParseAlpha(s.to_string())),
        }
    }
}

/// Hook sums of a square matrix given as full rows.
///
/// Rejects non-square input and any nonzero entry below the diagonal. The
/// result can have negative coordinates for matrices that satisfy no
/// non-negative hook-sum vector.
pub fn hook_sums(matrix: &[Vec<u32>]) -> Result<Vec<i64>> {
    let n = matrix.len();
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::NotSquare {
                row: i + 1,
                found: row.len(),
                expected: n,
            });
        }
        for (j, &entry) in row.iter().enumerate() {
            if j < i && entry != 0 {
                return Err(Error::NotUpperTriangular {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    let mut sums = Vec::with_capacity(n);
    for k in 0..n {
        let row_sum: i64 = (k..n).map(|j| matrix[k][j] as i64).sum();
        let col_sum: i64 = (0..k).map(|i| matrix[i][k] as i64).sum();
        sums.push(row_sum - col_sum);
    }
    Ok(sums)
}

/// An upper-triangular non-negative integer matrix together with the
/// hook-sum vector it satisfies.
///
/// Storage is the upper triangle in row-major order, so the derived ordering
/// is the canonical one used by every enumeration in this crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GTMatrix {
    n: usize,
    tri: Vec<u32>,
    alpha: HookSumVector,
}

impl GTMatrix {
    pub(crate) fn tri_len(n: usize) -> usize {
        n * (n + 1) / 2
    }

    #[inline]
    pub(crate) fn tri_index(n: usize, i: usize, j: usize) -> usize {
        debug_assert!(i <= j && j < n);
        i * (2 * n - i + 1) / 2 + (j - i)
    }

    /// Build from suffix rows: `rows[i]` holds `a_{i+1, i+1..n}`.
    pub fn from_rows(alpha: HookSumVector, rows: &[Vec<u32>]) -> Result<Self> {
        let n = alpha.len();
        if rows.len() != n {
            return Err(Error::BadRowLength {
                row: 0,
                found: rows.len(),
                expected: n,
            });
        }
        let mut tri = Vec::with_capacity(Self::tri_len(n));
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i {
                return Err(Error::BadRowLength {
                    row: i + 1,
                    found: row.len(),
                    expected: n - i,
                });
            }
            tri.extend_from_slice(row);
        }
        Self::from_triangle(alpha, tri)
    }

    /// Build from a row-major upper triangle, validating every hook sum.
    pub fn from_triangle(alpha: HookSumVector, tri: Vec<u32>) -> Result<Self> {
        let n = alpha.len();
        if tri.len() != Self::tri_len(n) {
            return Err(Error::BadRowLength {
                row: 0,
                found: tri.len(),
                expected: Self::tri_len(n),
            });
        }
        let m = Self { n, tri, alpha };
        for (k, &h) in m.recompute_hook_sums().iter().enumerate() {
            let declared = m.alpha.entry(k) as i64;
            if h != declared {
                return Err(Error::HookSumMismatch {
                    index: k + 1,
                    found: h,
                    declared,
                });
            }
        }
        Ok(m)
    }

    pub(crate) fn from_triangle_unchecked(alpha: HookSumVector, tri: Vec<u32>) -> Self {
        debug_assert_eq!(tri.len(), Self::tri_len(alpha.len()));
        let m = Self {
            n: alpha.len(),
            tri,
            alpha,
        };
        debug_assert!(m
            .recompute_hook_sums()
            .iter()
            .zip(m.alpha.entries())
            .all(|(&h, &a)| h == a as i64));
        m
    }

    /// The least element of the Tesler poset: diagonal `alpha`, zeros elsewhere.
    pub fn bottom(alpha: &HookSumVector) -> Self {
        let n = alpha.len();
        let mut tri = vec![0; Self::tri_len(n)];
        for i in 0..n {
            tri[Self::tri_index(n, i, i)] = alpha.entry(i);
        }
        Self::from_triangle_unchecked(alpha.clone(), tri)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alpha(&self) -> &HookSumVector {
        &self.alpha
    }

    pub fn triangle(&self) -> &[u32] {
        &self.tri
    }

    /// Entry `a_{i+1,j+1}` (0-based `i <= j`).
    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> u32 {
        self.tri[Self::tri_index(self.n, i, j)]
    }

    /// Entry with zeros below the diagonal, for full-matrix views.
    pub fn entry_or_zero(&self, i: usize, j: usize) -> u32 {
        if i <= j {
            self.entry(i, j)
        } else {
            0
        }
    }

    pub fn diagonal(&self) -> Vec<u32> {
        (0..self.n).map(|i| self.entry(i, i)).collect()
    }

    pub fn recompute_hook_sums(&self) -> Vec<i64> {
        let n = self.n;
        (0..n)
            .map(|k| {
                let row: i64 = (k..n).map(|j| self.entry(k, j) as i64).sum();
                let col: i64 = (0..k).map(|i| self.entry(i, k) as i64).sum();
                row - col
            })
            .collect()
    }

    /// `dpro(A)`: the product of `(d_i + 1)` over the main diagonal. Counts
    /// the children the generating step produces from this matrix.
    pub fn diagonal_product(&self) -> u128 {
        (0..self.n)
            .map(|i| self.entry(i, i) as u128 + 1)
            .product()
    }

    /// Sum of the entries strictly above the diagonal; the poset rank.
    pub fn off_diagonal_sum(&self) -> u32 {
        let mut sum = 0;
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                sum += self.entry(i, j);
            }
        }
        sum
    }

    pub fn positive_entries(&self) -> usize {
        self.tri.iter().filter(|&&e| e > 0).count()
    }

    /// Exactly one nonzero entry in every row.
    pub fn is_permutation_tesler(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).filter(|&j| self.entry(i, j) > 0).count() == 1)
    }

    /// Suffix rows, `rows[i] = a_{i+1, i+1..n}`; the JSON layout.
    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| (i..self.n).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Entrywise sum; the hook-sum vectors add.
    pub fn add_entrywise(&self, other: &GTMatrix) -> Result<GTMatrix> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let tri: Vec<u32> = self
            .tri
            .iter()
            .zip(other.tri.iter())
            .map(|(&a, &b)| a + b)
            .collect();
        let alpha = HookSumVector::new(
            self.alpha
                .entries()
                .iter()
                .zip(other.alpha.entries())
                .map(|(&a, &b)| a + b)
                .collect(),
        )?;
        Ok(GTMatrix::from_triangle_unchecked(alpha, tri))
    }
}

impl fmt::Display for GTMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Interchange form: `{"n":3,"alpha":[1,1,1],"rows":[[0,1,0],[1,1],[2]]}`.
#[derive(Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    alpha: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl Serialize for GTMatrix {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixJson {
            n: self.n,
            alpha: self.alpha.entries().to_vec(),
            rows: self.rows(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GTMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let alpha = HookSumVector::new(raw.alpha).map_err(serde::de::Error::custom)?;
        if alpha.len() != raw.n {
            return Err(serde::de::Error::custom(format!(
                "n is {} but alpha has {} entries",
                raw.n,
                alpha.len()
            )));
        }
        GTMatrix::from_rows(alpha, &raw.rows).map_err(serde::de::Error::custom)
    }
}

/// The subset bijection for the hook-sum vector `(1, 0^{n-1})`.
///
/// Element `i` of `[n-1]` is present exactly when column `n - i + 1` of the
/// matrix contains a nonzero entry. On this family the map is an order
/// isomorphism onto the Boolean lattice `B_{n-1}`.
pub fn subset_map(m: &GTMatrix) -> Result<BTreeSet<usize>> {
    if *m.alpha() != HookSumVector::single_one(m.n()) {
        return Err(Error::Unsupported(format!(
            "subset map is defined for hook sums (1,0,...,0); got ({})",
            m.alpha()
        )));
    }
    let n = m.n();
    let mut set = BTreeSet::new();
    for i in 1..n {
        let col = n - i; // 0-based column index of column n-i+1
        if (0..=col).any(|r| m.entry(r, col) != 0) {
            set.insert(i);
        }
    }
    Ok(set)
}
