//! Finite ranked posets with a least element: the Tesler cover relation,
//! Boolean lattices, products, Möbius functions and characteristic
//! polynomials.
//!
//! A poset is stored as its Hasse diagram (cover edges) plus a rank map;
//! every cover must raise rank by exactly one and there must be exactly one
//! minimal element. Order queries go through per-element down-set bitsets,
//! which are cheap at the scale, a few thousand elements, that this crate
//! targets.

use crate::enumerate::{enumerate_family, EnumerationLimits};
use crate::error::{Error, Result};
use crate::matrix::{GTMatrix, HookSumVector};
use crate::poly::UniPoly;
use num_bigint::BigInt;
use std::collections::HashMap;
use std::fmt::Write as _;

/// Characteristic polynomial: the Möbius-weighted rank generating function
/// `sum_A mu(0,A) q^{rank(P) - rank(A)}`.
pub type CharPoly = UniPoly;

/// Möbius values `mu(0, x)` indexed by poset element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusVector {
    pub values: Vec<i64>,
}

impl MobiusVector {
    pub fn max_abs(&self) -> u64 {
        self.values.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }
}

/// Bit matrix; row `x` holds a set of column indices.
#[derive(Clone, Debug)]
pub struct BitMatrix {
    rows: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    /// Square shape: rows over the same index set as columns.
    pub fn new(rows: usize) -> Self {
        Self::new_rect(rows, rows)
    }

    pub fn new_rect(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        Self {
            rows,
            words,
            bits: vec![0; rows * words],
        }
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize) {
        self.bits[row * self.words + col / 64] |= 1 << (col % 64);
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        self.bits[row * self.words + col / 64] & (1 << (col % 64)) != 0
    }

    /// `row[dst] |= row[src]`.
    pub fn or_rows(&mut self, dst: usize, src: usize) {
        let (d, s) = (dst * self.words, src * self.words);
        for w in 0..self.words {
            let v = self.bits[s + w];
            self.bits[d + w] |= v;
        }
    }

    /// `row[dst] |= other.row[src]`; the column sets must match.
    pub fn or_row_from(&mut self, dst: usize, other: &BitMatrix, src: usize) {
        debug_assert_eq!(self.words, other.words);
        let (d, s) = (dst * self.words, src * other.words);
        for w in 0..self.words {
            self.bits[d + w] |= other.bits[s + w];
        }
    }

    pub fn row_indices(&self, row: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for w in 0..self.words {
            let mut word = self.bits[row * self.words + w];
            while word != 0 {
                let bit = word.trailing_zeros() as usize;
                out.push(w * 64 + bit);
                word &= word - 1;
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        self.rows
    }

    pub fn is_empty(&self) -> bool {
        self.rows == 0
    }
}

/// A finite ranked poset with a unique least element.
#[derive(Clone, Debug)]
pub struct Poset<L> {
    labels: Vec<L>,
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
    rank: Vec<u32>,
    bottom: u32,
}

impl<L> Poset<L> {
    /// Build from labels, ranks and cover pairs `(lower, upper)`.
    pub fn from_covers(labels: Vec<L>, rank: Vec<u32>, covers: &[(u32, u32)]) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::InvalidPoset("no elements".into()));
        }
        if rank.len() != n {
            return Err(Error::InvalidPoset("rank map has the wrong length".into()));
        }
        let mut up = vec![Vec::new(); n];
        let mut down = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            if lo as usize >= n || hi as usize >= n {
                return Err(Error::InvalidPoset("cover index out of range".into()));
            }
            if rank[hi as usize] != rank[lo as usize] + 1 {
                return Err(Error::InvalidPoset(format!(
                    "cover {lo} -> {hi} does not raise rank by one"
                )));
            }
            up[lo as usize].push(hi);
            down[hi as usize].push(lo);
        }
        for list in up.iter_mut().chain(down.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let minimals: Vec<usize> = (0..n).filter(|&x| down[x].is_empty()).collect();
        if minimals.len() != 1 {
            return Err(Error::InvalidPoset(format!(
                "{} minimal elements, need exactly one",
                minimals.len()
            )));
        }
        let bottom = minimals[0] as u32;
        if rank[bottom as usize] != 0 {
            return Err(Error::InvalidPoset("least element must have rank zero".into()));
        }
        Ok(Self {
            labels,
            up,
            down,
            rank,
            bottom,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: u32) -> &L {
        &self.labels[x as usize]
    }

    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn bottom(&self) -> u32 {
        self.bottom
    }

    pub fn rank_of(&self, x: u32) -> u32 {
        self.rank[x as usize]
    }

    /// Rank of the poset: the largest element rank.
    pub fn poset_rank(&self) -> u32 {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn covers_up(&self, x: u32) -> &[u32] {
        &self.up[x as usize]
    }

    pub fn covers_down(&self, x: u32) -> &[u32] {
        &self.down[x as usize]
    }

    /// Cover edges as `(lower, upper)` pairs, in index order.
    pub fn cover_edges(&self) -> Vec<(u32, u32)> {
        let mut edges = Vec::new();
        for x in 0..self.len() as u32 {
            for &y in self.covers_up(x) {
                edges.push((x, y));
            }
        }
        edges
    }

    pub fn cover_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// Number of elements at each rank, from 0 up to the poset rank.
    pub fn rank_level_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.poset_rank() as usize + 1];
        for &r in &self.rank {
            sizes[r as usize] += 1;
        }
        sizes
    }

    fn indices_by_rank(&self) -> Vec<u32> {
        let mut order: Vec<u32> = (0..self.len() as u32).collect();
        order.sort_by_key(|&x| self.rank[x as usize]);
        order
    }

    /// Down-sets as bitsets; row `x` contains `x` itself.
    pub fn down_sets(&self) -> BitMatrix {
        let mut sets = BitMatrix::new(self.len());
        for &x in &self.indices_by_rank() {
            sets.set(x as usize, x as usize);
            for &d in self.covers_down(x) {
                sets.or_rows(x as usize, d as usize);
            }
        }
        sets
    }

    /// Up-sets as bitsets; row `x` contains `x` itself.
    pub fn up_sets(&self) -> BitMatrix {
        let mut sets = BitMatrix::new(self.len());
        let mut order = self.indices_by_rank();
        order.reverse();
        for &x in &order {
            sets.set(x as usize, x as usize);
            for &u in self.covers_up(x) {
                sets.or_rows(x as usize, u as usize);
            }
        }
        sets
    }

    /// Möbius function from the least element, by the defining recursion
    /// over lower order ideals in rank order.
    pub fn mobius(&self) -> MobiusVector {
        let sets = self.down_sets();
        let mut values = vec![0i64; self.len()];
        for &x in &self.indices_by_rank() {
            if x == self.bottom {
                values[x as usize] = 1;
                continue;
            }
            let mut below_sum = 0i64;
            for y in sets.row_indices(x as usize) {
                if y != x as usize {
                    below_sum += values[y];
                }
            }
            values[x as usize] = -below_sum;
        }
        MobiusVector { values }
    }

    /// `sum_A mu(0,A) q^{rank(P) - rank(A)}` with exact coefficients.
    pub fn characteristic_polynomial(&self) -> CharPoly {
        let mu = self.mobius();
        let top = self.poset_rank();
        let mut chi = UniPoly::zero();
        for x in 0..self.len() {
            let exp = top - self.rank[x];
            chi = &chi + &UniPoly::monomial(BigInt::from(mu.values[x]), exp);
        }
        chi
    }

    /// Minimal elements of the set of common upper bounds of `a` and `b`.
    pub fn minimal_upper_bounds(&self, a: u32, b: u32) -> Vec<u32> {
        let ups = self.up_sets();
        let downs = self.down_sets();
        let common: Vec<u32> = (0..self.len() as u32)
            .filter(|&z| ups.get(a as usize, z as usize) && ups.get(b as usize, z as usize))
            .collect();
        common
            .iter()
            .copied()
            .filter(|&z| {
                !common
                    .iter()
                    .any(|&w| w != z && downs.get(z as usize, w as usize))
            })
            .collect()
    }

    pub fn map_labels<M>(self, f: impl FnMut(L) -> M) -> Poset<M> {
        Poset {
            labels: self.labels.into_iter().map(f).collect(),
            up: self.up,
            down: self.down,
            rank: self.rank,
            bottom: self.bottom,
        }
    }

    /// DOT rendering of the Hasse diagram, ranked bottom-up, nodes in index
    /// order, optional Möbius annotations.
    pub fn to_dot(
        &self,
        name: &str,
        label_fn: impl Fn(u32, &L) -> String,
        mobius: Option<&MobiusVector>,
    ) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        writeln!(out, "  rankdir=BT;").unwrap();
        writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
        for x in 0..self.len() as u32 {
            let mut text = label_fn(x, self.label(x)).replace('"', "\\\"");
            if let Some(mu) = mobius {
                write!(text, "\\nmu = {}", mu.values[x as usize]).unwrap();
            }
            writeln!(out, "  n{x} [label=\"{text}\"];").unwrap();
        }
        let mut by_rank: Vec<Vec<u32>> = vec![Vec::new(); self.poset_rank() as usize + 1];
        for x in 0..self.len() as u32 {
            by_rank[self.rank_of(x) as usize].push(x);
        }
        for level in &by_rank {
            let names: Vec<String> = level.iter().map(|x| format!("n{x}")).collect();
            writeln!(out, "  {{ rank=same; {}; }}", names.join("; ")).unwrap();
        }
        for (lo, hi) in self.cover_edges() {
            writeln!(out, "  n{lo} -> n{hi};").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

/// The Boolean lattice `B_k`: subsets of `[k]` as bitmasks, ordered by
/// inclusion, covers adding one element.
pub fn boolean_lattice(k: u32) -> Poset<u64> {
    assert!(k <= 20, "Boolean lattice of rank {k} is too large");
    let size = 1usize << k;
    let labels: Vec<u64> = (0..size as u64).collect();
    let rank: Vec<u32> = labels.iter().map(|m| m.count_ones()).collect();
    let mut covers = Vec::new();
    for mask in 0..size as u64 {
        for bit in 0..k {
            if mask & (1 << bit) == 0 {
                covers.push((mask as u32, (mask | (1 << bit)) as u32));
            }
        }
    }
    Poset::from_covers(labels, rank, &covers).expect("Boolean lattice is well formed")
}

/// Direct product with custom labels; the element `(i, j)` sits at index
/// `i * q.len() + j`, ranks add, and covers move one coordinate by a cover.
pub fn product_with<A, B, L>(
    p: &Poset<A>,
    q: &Poset<B>,
    mut label_fn: impl FnMut(u32, u32) -> L,
) -> Poset<L> {
    let qn = q.len();
    let mut labels = Vec::with_capacity(p.len() * qn);
    let mut rank = Vec::with_capacity(p.len() * qn);
    for i in 0..p.len() as u32 {
        for j in 0..q.len() as u32 {
            labels.push(label_fn(i, j));
            rank.push(p.rank_of(i) + q.rank_of(j));
        }
    }
    let index = |i: u32, j: u32| i * qn as u32 + j;
    let mut covers = Vec::new();
    for i in 0..p.len() as u32 {
        for j in 0..q.len() as u32 {
            for &i2 in p.covers_up(i) {
                covers.push((index(i, j), index(i2, j)));
            }
            for &j2 in q.covers_up(j) {
                covers.push((index(i, j), index(i, j2)));
            }
        }
    }
    Poset::from_covers(labels, rank, &covers).expect("product of posets is well formed")
}

/// Direct product with pair labels.
pub fn product<A: Clone, B: Clone>(p: &Poset<A>, q: &Poset<B>) -> Poset<(A, B)> {
    product_with(p, q, |i, j| (p.label(i).clone(), q.label(j).clone()))
}

/// Does `a` cover `b` in the Tesler order?
///
/// True exactly when `a` arises from `b` by one of the two unit moves:
/// for some `i < j < k`, add one to `b_{i,j}` and `b_{j,k}` and subtract one
/// from `b_{i,k}`; or for some `i < j`, add one to `b_{i,j}` and `b_{j,j}`
/// and subtract one from `b_{i,i}`. All other entries must agree.
pub fn is_cover(a: &GTMatrix, b: &GTMatrix) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    if a.alpha() != b.alpha() {
        return Err(Error::AlphaMismatch {
            left: a.alpha().to_string(),
            right: b.alpha().to_string(),
        });
    }
    let n = a.n();
    let mut diffs = Vec::new();
    for i in 0..n {
        for j in i..n {
            let delta = a.entry(i, j) as i64 - b.entry(i, j) as i64;
            if delta != 0 {
                diffs.push(((i, j), delta));
            }
        }
    }
    if diffs.len() != 3 {
        return Ok(false);
    }
    // triple move: +1 at (i,j), +1 at (j,k), -1 at (i,k) with i < j < k
    for &((i, j), d1) in &diffs {
        if d1 != 1 || i == j {
            continue;
        }
        for &((j2, k), d2) in &diffs {
            if d2 != 1 || j2 != j || k <= j2 || j2 == k {
                continue;
            }
            if diffs.contains(&((i, k), -1)) {
                return Ok(true);
            }
        }
    }
    // diagonal move: +1 at (i,j), +1 at (j,j), -1 at (i,i) with i < j
    for &((i, j), d1) in &diffs {
        if d1 != 1 || i == j {
            continue;
        }
        if diffs.contains(&((j, j), 1)) && diffs.contains(&((i, i), -1)) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Apply every upward move to `m`, producing candidate covering matrices.
fn upward_moves(m: &GTMatrix) -> Vec<Vec<u32>> {
    let n = m.n();
    let mut out = Vec::new();
    let bump = |tri: &mut Vec<u32>, i: usize, j: usize, delta: i64| {
        let idx = GTMatrix::tri_index(n, i, j);
        tri[idx] = (tri[idx] as i64 + delta) as u32;
    };
    // move a unit along i < j < k
    for i in 0..n {
        for k in (i + 1)..n {
            if m.entry(i, k) == 0 {
                continue;
            }
            for j in (i + 1)..k {
                let mut tri = m.triangle().to_vec();
                bump(&mut tri, i, j, 1);
                bump(&mut tri, j, k, 1);
                bump(&mut tri, i, k, -1);
                out.push(tri);
            }
        }
    }
    // move a unit between diagonal entries i < j
    for i in 0..n {
        if m.entry(i, i) == 0 {
            continue;
        }
        for j in (i + 1)..n {
            let mut tri = m.triangle().to_vec();
            bump(&mut tri, i, j, 1);
            bump(&mut tri, j, j, 1);
            bump(&mut tri, i, i, -1);
            out.push(tri);
        }
    }
    out
}

/// The Tesler poset `P(alpha)`: all matrices of the family ordered by the
/// cover moves, ranked by the off-diagonal sum, least element the diagonal
/// matrix.
pub fn build_poset(alpha: &HookSumVector, limits: &EnumerationLimits) -> Result<Poset<GTMatrix>> {
    let family = enumerate_family(alpha, limits)?;
    let index: HashMap<Vec<u32>, u32> = family
        .matrices
        .iter()
        .enumerate()
        .map(|(i, m)| (m.triangle().to_vec(), i as u32))
        .collect();
    let rank: Vec<u32> = family.matrices.iter().map(GTMatrix::off_diagonal_sum).collect();
    let mut covers = Vec::new();
    for (i, m) in family.matrices.iter().enumerate() {
        for tri in upward_moves(m) {
            let j = *index
                .get(&tri)
                .expect("upward moves stay inside the family");
            covers.push((i as u32, j));
        }
    }
    Poset::from_covers(family.matrices, rank, &covers)
}

const ISO_SEARCH_LIMIT: usize = 5000;

/// Order-isomorphism test by backtracking with rank/degree pruning; only for
/// small posets.
pub fn is_isomorphic_small<A, B>(p: &Poset<A>, q: &Poset<B>) -> Result<bool> {
    if p.len() > ISO_SEARCH_LIMIT || q.len() > ISO_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            size: p.len().max(q.len()),
            limit: ISO_SEARCH_LIMIT,
        });
    }
    if p.len() != q.len() {
        return Ok(false);
    }
    let signature = |poset_rank: u32, down: usize, up: usize| (poset_rank, down, up);
    let sig_p: Vec<_> = (0..p.len() as u32)
        .map(|x| signature(p.rank_of(x), p.covers_down(x).len(), p.covers_up(x).len()))
        .collect();
    let sig_q: Vec<_> = (0..q.len() as u32)
        .map(|x| signature(q.rank_of(x), q.covers_down(x).len(), q.covers_up(x).len()))
        .collect();
    let mut sorted_p = sig_p.clone();
    let mut sorted_q = sig_q.clone();
    sorted_p.sort_unstable();
    sorted_q.sort_unstable();
    if sorted_p != sorted_q {
        return Ok(false);
    }

    let edge_set = |poset: &Vec<Vec<u32>>| -> std::collections::HashSet<(u32, u32)> {
        poset
            .iter()
            .enumerate()
            .flat_map(|(x, ups)| ups.iter().map(move |&y| (x as u32, y)))
            .collect()
    };
    let edges_p = edge_set(&p.up);
    let edges_q = edge_set(&q.up);

    let mut order: Vec<u32> = (0..p.len() as u32).collect();
    order.sort_by_key(|&x| (p.rank_of(x), x));

    let mut assigned: Vec<Option<u32>> = vec![None; p.len()];
    let mut used = vec![false; q.len()];

    fn backtrack(
        pos: usize,
        order: &[u32],
        sig_p: &[(u32, usize, usize)],
        sig_q: &[(u32, usize, usize)],
        edges_p: &std::collections::HashSet<(u32, u32)>,
        edges_q: &std::collections::HashSet<(u32, u32)>,
        assigned: &mut Vec<Option<u32>>,
        used: &mut Vec<bool>,
        n: usize,
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let x = order[pos];
        for y in 0..n as u32 {
            if used[y as usize] || sig_q[y as usize] != sig_p[x as usize] {
                continue;
            }
            let consistent = assigned.iter().enumerate().all(|(z, image)| {
                let Some(w) = image else { return true };
                let z = z as u32;
                edges_p.contains(&(x, z)) == edges_q.contains(&(y, *w))
                    && edges_p.contains(&(z, x)) == edges_q.contains(&(*w, y))
            });
            if !consistent {
                continue;
            }
            assigned[x as usize] = Some(y);
            used[y as usize] = true;
            if backtrack(
                pos + 1,
                order,
                sig_p,
                sig_q,
                edges_p,
                edges_q,
                assigned,
                used,
                n,
            ) {
                return true;
            }
            assigned[x as usize] = None;
            used[y as usize] = false;
        }
        false
    }

    Ok(backtrack(
        0,
        &order,
        &sig_p,
        &sig_q,
        &edges_p,
        &edges_q,
        &mut assigned,
        &mut used,
        p.len(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn limits() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    fn ones(n: usize) -> HookSumVector {
        HookSumVector::ones(n)
    }

    #[test]
    fn cover_examples() {
        let alpha = ones(3);
        let identity = GTMatrix::bottom(&alpha);
        let lifted = GTMatrix::from_rows(alpha, &[vec![0, 1, 0], vec![2, 0], vec![1]]).unwrap();
        assert!(is_cover(&lifted, &identity).unwrap());
        assert!(!is_cover(&identity, &identity).unwrap());
        assert!(!is_cover(&identity, &lifted).unwrap());
    }

    #[test]
    fn cover_rejects_mismatched_families() {
        let a = GTMatrix::bottom(&ones(3));
        let b = GTMatrix::bottom(&ones(2));
        assert!(is_cover(&a, &b).is_err());
        let c = GTMatrix::bottom(&HookSumVector::new(vec![1, 1, 2]).unwrap());
        assert!(is_cover(&a, &c).is_err());
    }

    #[test]
    fn tesler_poset_of_size_three() {
        let p = build_poset(&ones(3), &limits()).unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.poset_rank(), 3);
        assert_eq!(p.rank_level_sizes(), vec![1, 3, 2, 1]);
        assert_eq!(p.covers_up(p.bottom()).len(), 3);
        assert_eq!(*p.label(p.bottom()), GTMatrix::bottom(&ones(3)));

        let mu = p.mobius();
        let mut by_rank: Vec<Vec<i64>> = vec![Vec::new(); 4];
        for x in 0..p.len() as u32 {
            by_rank[p.rank_of(x) as usize].push(mu.values[x as usize]);
        }
        for level in by_rank.iter_mut() {
            level.sort_unstable();
        }
        assert_eq!(by_rank[0], vec![1]);
        assert_eq!(by_rank[1], vec![-1, -1, -1]);
        assert_eq!(by_rank[2], vec![1, 2]);
        assert_eq!(by_rank[3], vec![-1]);

        assert_eq!(p.characteristic_polynomial(), UniPoly::q_minus_one_pow(3));
    }

    #[test]
    fn edge_set_matches_pairwise_cover_checks() {
        let p = build_poset(&ones(3), &limits()).unwrap();
        let mut pairwise = 0;
        for a in p.labels() {
            for b in p.labels() {
                if is_cover(a, b).unwrap() {
                    pairwise += 1;
                }
            }
        }
        assert_eq!(p.cover_count(), pairwise);
        // Forced by the Möbius values at rank two: (2, 1) means five edges
        // land there, plus three from the bottom and two into the top.
        assert_eq!(p.cover_count(), 10);
    }

    #[test]
    fn poset_rank_formula() {
        for entries in [vec![1, 1, 1], vec![1, 2, 3], vec![1, 0, 1], vec![2, 1, 1]] {
            let alpha = HookSumVector::new(entries).unwrap();
            let p = build_poset(&alpha, &limits()).unwrap();
            let n = alpha.len();
            let expected: u32 = alpha
                .entries()
                .iter()
                .enumerate()
                .map(|(i, &a)| (n - 1 - i) as u32 * a)
                .sum();
            assert_eq!(p.poset_rank(), expected, "alpha = {alpha}");
        }
    }

    #[test]
    fn staircase_poset_shape() {
        let p = build_poset(&HookSumVector::staircase(3), &limits()).unwrap();
        assert_eq!(p.len(), 10);
        assert_eq!(p.poset_rank(), 4);
        let chi = p.characteristic_polynomial();
        let expected = &UniPoly::var() * &UniPoly::q_minus_one_pow(3);
        assert_eq!(chi, expected);
    }

    #[test]
    fn boolean_lattices() {
        let b0 = boolean_lattice(0);
        assert_eq!(b0.len(), 1);
        let b2 = boolean_lattice(2);
        assert_eq!(b2.len(), 4);
        assert_eq!(b2.poset_rank(), 2);
        assert_eq!(b2.cover_count(), 4);
        for k in 0..=5 {
            assert_eq!(
                boolean_lattice(k).characteristic_polynomial(),
                UniPoly::q_minus_one_pow(k)
            );
        }
    }

    #[test]
    fn products_multiply() {
        let b1 = boolean_lattice(1);
        let prod = product(&b1, &b1);
        assert!(is_isomorphic_small(&prod, &boolean_lattice(2)).unwrap());

        let p101 = build_poset(&HookSumVector::new(vec![1, 0, 1]).unwrap(), &limits()).unwrap();
        assert_eq!(p101.len(), 4);
        let with_chain = product(&p101, &b1);
        assert_eq!(with_chain.len(), 8);
        assert_eq!(
            with_chain.characteristic_polynomial(),
            UniPoly::q_minus_one_pow(3)
        );
        let lhs = with_chain.characteristic_polynomial();
        let rhs = &p101.characteristic_polynomial() * &b1.characteristic_polynomial();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn mobius_recursion_holds() {
        let p = build_poset(&ones(4), &limits()).unwrap();
        let mu = p.mobius();
        let sets = p.down_sets();
        for x in 0..p.len() {
            let total: i64 = sets.row_indices(x).iter().map(|&y| mu.values[y]).sum();
            if x == p.bottom() as usize {
                assert_eq!(total, 1);
            } else {
                assert_eq!(total, 0, "element {x}");
            }
        }
    }

    #[test]
    fn chain_mobius() {
        // T(1,2) is a two-element chain
        let p = build_poset(&HookSumVector::new(vec![1, 2]).unwrap(), &limits()).unwrap();
        assert_eq!(p.len(), 2);
        let mu = p.mobius();
        assert_eq!(mu.values[p.bottom() as usize], 1);
        let top = (0..p.len() as u32).find(|&x| x != p.bottom()).unwrap();
        assert_eq!(mu.values[top as usize], -1);
    }

    #[test]
    fn size_three_tesler_poset_is_not_a_lattice() {
        let p = build_poset(&ones(3), &limits()).unwrap();
        let mut found = false;
        for a in 0..p.len() as u32 {
            for b in (a + 1)..p.len() as u32 {
                if p.minimal_upper_bounds(a, b).len() > 1 {
                    found = true;
                }
            }
        }
        assert!(found, "expected a pair with two minimal upper bounds");
    }

    #[test]
    fn isomorphism_checks() {
        let p = build_poset(&HookSumVector::single_one(3), &limits()).unwrap();
        assert!(is_isomorphic_small(&p, &boolean_lattice(2)).unwrap());
        assert!(!is_isomorphic_small(
            &build_poset(&ones(3), &limits()).unwrap(),
            &boolean_lattice(3)
        )
        .unwrap());
        let a = build_poset(&HookSumVector::new(vec![1, 1, 0]).unwrap(), &limits()).unwrap();
        let b = build_poset(&HookSumVector::new(vec![1, 1, 5]).unwrap(), &limits()).unwrap();
        assert!(is_isomorphic_small(&a, &b).unwrap());
    }

    #[test]
    fn charpoly_shape_invariants() {
        let p = build_poset(&ones(4), &limits()).unwrap();
        let chi = p.characteristic_polynomial();
        assert_eq!(chi.degree(), Some(p.poset_rank()));
        assert!(chi.leading_coeff().is_one());
        let mu_sum: i64 = p.mobius().values.iter().sum();
        assert_eq!(chi.eval_at_one(), BigInt::from(mu_sum));
    }

    #[test]
    fn dot_export_is_deterministic() {
        let p = build_poset(&ones(3), &limits()).unwrap();
        let mu = p.mobius();
        let dot = p.to_dot("P", |_, m| m.to_string(), Some(&mu));
        let again = p.to_dot("P", |_, m| m.to_string(), Some(&mu));
        assert_eq!(dot, again);
        assert_eq!(dot.matches(" -> ").count(), 10);
        assert_eq!(dot.matches("label=").count(), 7);
        assert!(dot.contains("mu = "));
    }
}
