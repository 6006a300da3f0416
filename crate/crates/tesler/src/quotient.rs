//! The Hallam–Sagan quotient construction for Tesler posets.
//!
//! To grow one hook-sum coordinate from 0 to 1, take the product of the
//! current poset with the poset of shift maps (matrices of `T(1, 0^{r-1})`
//! placed in the lower-right corner, a copy of the Boolean lattice
//! `B_{r-1}`), and identify pairs whose entrywise sum `A + S` agrees. When
//! the equivalence is homogeneous, rank preserving and satisfies the
//! summation condition, the characteristic polynomial of the quotient equals
//! that of the product, and the quotient is the next Tesler poset; iterating
//! over the 1-entries of a binary hook-sum vector factors its
//! characteristic polynomial into `(q-1)^{w(alpha)}`.
//!
//! Nothing here is assumed: every run checks the conditions, and the witness
//! map onto the target family is verified to be a cover-preserving
//! bijection. For non-binary vectors the same machinery runs in exploration
//! mode and reports which condition breaks.

use crate::enumerate::EnumerationLimits;
use crate::error::{Error, Result};
use crate::matrix::{subset_map, GTMatrix, HookSumVector};
use crate::poly::UniPoly;
use crate::poset::{build_poset, product_with, BitMatrix, MobiusVector, Poset};
use serde::Serialize;
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// An additive map from `T(alpha)` to `T(alpha + e_{n-r+1})`, recorded as
/// the matrix it adds and its subset label in the Boolean lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftMap {
    pub r: usize,
    pub matrix: GTMatrix,
    pub label: BTreeSet<usize>,
}

/// Place an `r x r` matrix in the lower-right corner of an `n x n` one.
///
/// Entry `(i, j)` becomes `(i + n - r, j + n - r)`; the result has hook-sum
/// vector equal to the embedded matrix's hook sums shifted to the last `r`
/// coordinates.
pub fn shift_embed(s: &GTMatrix, n: usize) -> Result<GTMatrix> {
    let r = s.n();
    if r > n {
        return Err(Error::SizeMismatch { left: r, right: n });
    }
    let offset = n - r;
    let mut entries = vec![0u32; n];
    for (k, &a) in s.alpha().entries().iter().enumerate() {
        entries[offset + k] = a;
    }
    let alpha = HookSumVector::new(entries)?;
    let mut tri = vec![0u32; GTMatrix::tri_len(n)];
    for i in 0..r {
        for j in i..r {
            tri[GTMatrix::tri_index(n, i + offset, j + offset)] = s.entry(i, j);
        }
    }
    GTMatrix::from_triangle(alpha, tri)
}

/// The poset of shift maps of block size `r`: the family `T(1, 0^{r-1})`
/// under the Tesler cover relation, a copy of `B_{r-1}`.
pub fn shift_map_poset(r: usize) -> Result<Poset<ShiftMap>> {
    if r == 0 {
        return Err(Error::Unsupported("shift maps need r >= 1".into()));
    }
    let alpha = HookSumVector::single_one(r);
    let poset = build_poset(&alpha, &EnumerationLimits::default())?;
    Ok(poset.map_labels(|matrix| {
        let label = subset_map(&matrix).expect("shift matrices live in T(1,0^{r-1})");
        ShiftMap { r, matrix, label }
    }))
}

/// One equivalence class of the product poset: its members and the common
/// sum matrix that defines it.
#[derive(Clone, Debug)]
pub struct QuotientClass {
    pub members: Vec<u32>,
    pub witness: GTMatrix,
}

/// A single check outcome; failures carry a witness description.
#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    pub passed: bool,
    pub witness: Option<String>,
}

impl Condition {
    fn pass() -> Self {
        Self {
            passed: true,
            witness: None,
        }
    }

    fn fail(witness: String) -> Self {
        Self {
            passed: false,
            witness: Some(witness),
        }
    }
}

/// Verdicts for the Hallam–Sagan hypotheses.
#[derive(Clone, Debug, Serialize)]
pub struct HsConditionReport {
    /// The least element of the product sits in a class by itself.
    pub singleton_bottom: Condition,
    /// If `X <= Y` in the quotient, every member of `X` lies below some
    /// member of `Y` in the product.
    pub homogeneity: Condition,
    /// Rank is constant on every class.
    pub rank_preserved: Condition,
    /// For every nonzero class, the product Möbius function sums to zero
    /// over the lower order ideal the class generates in the product.
    pub summation: Condition,
}

impl HsConditionReport {
    pub fn all_passed(&self) -> bool {
        self.singleton_bottom.passed
            && self.homogeneity.passed
            && self.rank_preserved.passed
            && self.summation.passed
    }
}

/// Verdict for the witness map `class -> A + S` against the target family.
#[derive(Clone, Debug, Serialize)]
pub struct WitnessReport {
    pub class_count: usize,
    pub target_count: usize,
    pub bijective: bool,
    pub forward_covers: bool,
    pub backward_covers: bool,
    pub detail: Option<String>,
}

impl WitnessReport {
    pub fn ok(&self) -> bool {
        self.bijective && self.forward_covers && self.backward_covers
    }
}

/// The product `P(alpha) x B_{r-1}` partitioned by witness sums, with the
/// quotient order `X <= Y` iff some `x in X` lies below some `y in Y`.
pub struct QuotientPoset {
    pub alpha: HookSumVector,
    pub r: usize,
    pub target_alpha: HookSumVector,
    pub base: Poset<GTMatrix>,
    pub shifts: Poset<ShiftMap>,
    pub prod: Poset<(u32, u32)>,
    pub classes: Vec<QuotientClass>,
    pub class_of: Vec<u32>,
    /// The quotient as a ranked poset, when the class order is one.
    pub quotient: Option<Poset<u32>>,
    /// Why the quotient poset could not be formed, if it could not.
    pub structure_diagnostic: Option<String>,
    prod_down: BitMatrix,
    prod_mobius: MobiusVector,
    class_up: BitMatrix,
    class_ideals: BitMatrix,
}

/// Build the quotient for `alpha` (which must have a zero in coordinate
/// `n - r + 1`) and block size `r`. Binary vectors are the theorem-grade
/// inputs; any other vector runs in exploration mode, with failures reported
/// by [`QuotientPoset::check_conditions`] rather than raised.
pub fn quotient_by_sum(
    alpha: &HookSumVector,
    r: usize,
    limits: &EnumerationLimits,
) -> Result<QuotientPoset> {
    let n = alpha.len();
    if r == 0 || r > n {
        return Err(Error::Unsupported(format!(
            "block size r = {r} must satisfy 1 <= r <= {n}"
        )));
    }
    let pos = n - r; // 0-based position of coordinate n - r + 1
    if alpha.entry(pos) != 0 {
        return Err(Error::Unsupported(format!(
            "coordinate {} of ({alpha}) must be zero to raise it",
            pos + 1
        )));
    }
    let target_alpha = alpha.adding_one_at(pos)?;
    let base = build_poset(alpha, limits)?;
    let shifts = shift_map_poset(r)?;
    if (base.len() * shifts.len()) as u64 > limits.max_matrices {
        return Err(Error::CeilingExceeded {
            limit: limits.max_matrices,
        });
    }
    let prod = product_with(&base, &shifts, |i, j| (i, j));

    let embedded: Vec<GTMatrix> = shifts
        .labels()
        .iter()
        .map(|s| shift_embed(&s.matrix, n))
        .collect::<Result<_>>()?;

    // group product elements by witness sum
    let mut groups: BTreeMap<Vec<u32>, (GTMatrix, Vec<u32>)> = BTreeMap::new();
    for e in 0..prod.len() as u32 {
        let &(i, j) = prod.label(e);
        let witness = base.label(i).add_entrywise(&embedded[j as usize])?;
        debug_assert_eq!(witness.alpha(), &target_alpha);
        groups
            .entry(witness.triangle().to_vec())
            .or_insert_with(|| (witness, Vec::new()))
            .1
            .push(e);
    }
    let classes: Vec<QuotientClass> = groups
        .into_values()
        .map(|(witness, members)| QuotientClass { members, witness })
        .collect();
    let mut class_of = vec![0u32; prod.len()];
    for (c, class) in classes.iter().enumerate() {
        for &e in &class.members {
            class_of[e as usize] = c as u32;
        }
    }

    let prod_down = prod.down_sets();
    let prod_mobius = prod.mobius();

    // lower order ideal generated by each class, inside the product
    let c_count = classes.len();
    let mut class_ideals = BitMatrix::new_rect(c_count, prod.len());
    for (c, class) in classes.iter().enumerate() {
        for &e in &class.members {
            class_ideals.or_row_from(c, &prod_down, e as usize);
        }
    }

    // X <= Y iff some member of X lies in the ideal of Y
    let mut class_up = BitMatrix::new(c_count);
    for x in 0..c_count {
        for y in 0..c_count {
            if classes[x]
                .members
                .iter()
                .any(|&e| class_ideals.get(y, e as usize))
            {
                class_up.set(x, y);
            }
        }
    }

    let (quotient, structure_diagnostic) =
        build_quotient_poset(&classes, &class_up, &prod, class_of[prod.bottom() as usize]);

    Ok(QuotientPoset {
        alpha: alpha.clone(),
        r,
        target_alpha,
        base,
        shifts,
        prod,
        classes,
        class_of,
        quotient,
        structure_diagnostic,
        prod_down,
        prod_mobius,
        class_up,
        class_ideals,
    })
}

fn build_quotient_poset(
    classes: &[QuotientClass],
    class_up: &BitMatrix,
    prod: &Poset<(u32, u32)>,
    bottom_class: u32,
) -> (Option<Poset<u32>>, Option<String>) {
    let c = classes.len();
    // antisymmetry
    for x in 0..c {
        for y in (x + 1)..c {
            if class_up.get(x, y) && class_up.get(y, x) {
                return (
                    None,
                    Some(format!("classes {x} and {y} compare both ways")),
                );
            }
        }
    }
    // transitivity
    for x in 0..c {
        for z in 0..c {
            if x == z || !class_up.get(x, z) {
                continue;
            }
            for y in 0..c {
                if class_up.get(z, y) && !class_up.get(x, y) {
                    return (
                        None,
                        Some(format!(
                            "order is not transitive: {x} <= {z} <= {y} but not {x} <= {y}"
                        )),
                    );
                }
            }
        }
    }
    // constant rank per class
    let mut ranks = Vec::with_capacity(c);
    for (idx, class) in classes.iter().enumerate() {
        let first = prod.rank_of(class.members[0]);
        if class.members.iter().any(|&e| prod.rank_of(e) != first) {
            return (None, Some(format!("class {idx} mixes ranks")));
        }
        ranks.push(first);
    }
    // Hasse reduction
    let mut covers = Vec::new();
    for x in 0..c {
        for y in 0..c {
            if x == y || !class_up.get(x, y) {
                continue;
            }
            let has_intermediate =
                (0..c).any(|z| z != x && z != y && class_up.get(x, z) && class_up.get(z, y));
            if !has_intermediate {
                covers.push((x as u32, y as u32));
            }
        }
    }
    match Poset::from_covers((0..c as u32).collect(), ranks, &covers) {
        Ok(poset) => {
            if poset.bottom() != bottom_class {
                return (
                    None,
                    Some("least class is not the class of the product bottom".into()),
                );
            }
            (Some(poset), None)
        }
        Err(e) => (None, Some(e.to_string())),
    }
}

impl QuotientPoset {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn bottom_class(&self) -> u32 {
        self.class_of[self.prod.bottom() as usize]
    }

    /// Verify the Hallam–Sagan hypotheses; failures are reported, not raised.
    pub fn check_conditions(&self) -> HsConditionReport {
        let bottom_class = self.bottom_class() as usize;

        let singleton_bottom = if self.classes[bottom_class].members.len() == 1 {
            Condition::pass()
        } else {
            Condition::fail(format!(
                "bottom class has {} members",
                self.classes[bottom_class].members.len()
            ))
        };

        let mut homogeneity = Condition::pass();
        'outer: for x in 0..self.classes.len() {
            for y in 0..self.classes.len() {
                if x == y || !self.class_up.get(x, y) {
                    continue; // need X <= Y
                }
                for &member in &self.classes[x].members {
                    let has_upper = self.classes[y]
                        .members
                        .iter()
                        .any(|&e| self.prod_down.get(e as usize, member as usize));
                    if !has_upper {
                        homogeneity = Condition::fail(format!(
                            "class {x} <= class {y}, but member {member} of {x} \
                             is below no member of {y}"
                        ));
                        break 'outer;
                    }
                }
            }
        }

        let mut rank_preserved = Condition::pass();
        for (idx, class) in self.classes.iter().enumerate() {
            let first = self.prod.rank_of(class.members[0]);
            if class.members.iter().any(|&e| self.prod.rank_of(e) != first) {
                rank_preserved = Condition::fail(format!("class {idx} mixes ranks"));
                break;
            }
        }

        let mut summation = Condition::pass();
        for (idx, _) in self.classes.iter().enumerate() {
            if idx == bottom_class {
                continue;
            }
            let total: i64 = self
                .class_ideals
                .row_indices(idx)
                .iter()
                .map(|&e| self.prod_mobius.values[e])
                .sum();
            if total != 0 {
                summation = Condition::fail(format!(
                    "class {idx} has ideal Möbius sum {total}"
                ));
                break;
            }
        }

        HsConditionReport {
            singleton_bottom,
            homogeneity,
            rank_preserved,
            summation,
        }
    }

    /// Compare the quotient against the target Tesler poset through the
    /// witness map, checking bijectivity and cover preservation both ways.
    pub fn witness_isomorphism(&self, limits: &EnumerationLimits) -> Result<WitnessReport> {
        let target = build_poset(&self.target_alpha, limits)?;
        let target_index: HashMap<Vec<u32>, u32> = target
            .labels()
            .iter()
            .enumerate()
            .map(|(i, m)| (m.triangle().to_vec(), i as u32))
            .collect();

        let mut report = WitnessReport {
            class_count: self.classes.len(),
            target_count: target.len(),
            bijective: true,
            forward_covers: false,
            backward_covers: false,
            detail: None,
        };

        let mut image = Vec::with_capacity(self.classes.len());
        for class in &self.classes {
            match target_index.get(class.witness.triangle()) {
                Some(&t) => image.push(t),
                None => {
                    report.bijective = false;
                    report.detail = Some(format!(
                        "witness {} is not in the target family",
                        class.witness
                    ));
                    return Ok(report);
                }
            }
        }
        // distinct witnesses by construction; bijective iff counts agree
        if self.classes.len() != target.len() {
            report.bijective = false;
            report.detail = Some(format!(
                "{} classes vs {} target matrices",
                self.classes.len(),
                target.len()
            ));
            return Ok(report);
        }

        let Some(quotient) = &self.quotient else {
            report.detail = Some(
                self.structure_diagnostic
                    .clone()
                    .unwrap_or_else(|| "quotient order is not a poset".into()),
            );
            return Ok(report);
        };

        let quotient_edges: BTreeSet<(u32, u32)> = quotient
            .cover_edges()
            .into_iter()
            .map(|(x, y)| (image[x as usize], image[y as usize]))
            .collect();
        let target_edges: BTreeSet<(u32, u32)> = target.cover_edges().into_iter().collect();
        report.forward_covers = quotient_edges.is_subset(&target_edges);
        report.backward_covers = target_edges.is_subset(&quotient_edges);
        if !report.forward_covers || !report.backward_covers {
            report.detail = Some(format!(
                "{} quotient covers vs {} target covers",
                quotient_edges.len(),
                target_edges.len()
            ));
        }
        Ok(report)
    }

    /// Base elements `A` such that `(A, bottom shift)` is the only member of
    /// the ideal of `class` with first coordinate `A`.
    pub fn first_coordinate_isolated(&self, class: usize) -> Vec<u32> {
        let mut count: HashMap<u32, (usize, u32)> = HashMap::new();
        for &e in &self.class_ideals.row_indices(class) {
            let &(i, j) = self.prod.label(e as u32);
            let entry = count.entry(i).or_insert((0, j));
            entry.0 += 1;
            entry.1 = j;
        }
        let shift_bottom = self.shifts.bottom();
        let mut out: Vec<u32> = count
            .into_iter()
            .filter(|&(_, (c, j))| c == 1 && j == shift_bottom)
            .map(|(i, _)| i)
            .collect();
        out.sort_unstable();
        out
    }

    /// Shift maps `S` such that `(bottom matrix, S)` is the only member of
    /// the ideal of `class` with second coordinate `S`.
    pub fn second_coordinate_isolated(&self, class: usize) -> Vec<u32> {
        let mut count: HashMap<u32, (usize, u32)> = HashMap::new();
        for &e in &self.class_ideals.row_indices(class) {
            let &(i, j) = self.prod.label(e as u32);
            let entry = count.entry(j).or_insert((0, i));
            entry.0 += 1;
            entry.1 = i;
        }
        let base_bottom = self.base.bottom();
        let mut out: Vec<u32> = count
            .into_iter()
            .filter(|&(_, (c, i))| c == 1 && i == base_bottom)
            .map(|(j, _)| j)
            .collect();
        out.sort_unstable();
        out
    }

    /// No class ideal contains both a non-minimal first-coordinate-isolated
    /// element and a non-minimal second-coordinate-isolated one.
    pub fn isolation_dichotomy_holds(&self) -> bool {
        (0..self.classes.len()).all(|class| {
            let first = self
                .first_coordinate_isolated(class)
                .into_iter()
                .any(|i| i != self.base.bottom());
            let second = self
                .second_coordinate_isolated(class)
                .into_iter()
                .any(|j| j != self.shifts.bottom());
            !(first && second)
        })
    }

    /// `(A_0, S_d)` and `(A, S_0)` never share a witness when `A` and `S_d`
    /// are both non-minimal.
    pub fn first_sum_separation_holds(&self) -> bool {
        let n = self.alpha.len();
        let bottom_matrix = self.base.label(self.base.bottom());
        let bottom_shift = &self.shifts.label(self.shifts.bottom()).matrix;
        let embed = |s: &GTMatrix| shift_embed(s, n).expect("r <= n");
        let bottom_shift_embedded = embed(bottom_shift);
        for j in 0..self.shifts.len() as u32 {
            if j == self.shifts.bottom() {
                continue;
            }
            let left = bottom_matrix
                .add_entrywise(&embed(&self.shifts.label(j).matrix))
                .expect("same size");
            for i in 0..self.base.len() as u32 {
                if i == self.base.bottom() {
                    continue;
                }
                let right = self
                    .base
                    .label(i)
                    .add_entrywise(&bottom_shift_embedded)
                    .expect("same size");
                if left == right {
                    return false;
                }
            }
        }
        true
    }

    /// Every matrix of the target family arises as some witness.
    pub fn witnesses_cover_target(&self, limits: &EnumerationLimits) -> Result<bool> {
        let target = crate::enumerate::enumerate_family(&self.target_alpha, limits)?;
        let witnesses: BTreeSet<&[u32]> = self
            .classes
            .iter()
            .map(|c| c.witness.triangle())
            .collect();
        Ok(target
            .matrices
            .iter()
            .all(|m| witnesses.contains(m.triangle())))
    }

    /// Möbius values of quotient classes are the sums of the product Möbius
    /// values over their members; holds when the conditions do.
    pub fn mobius_class_sums_match(&self) -> bool {
        let Some(quotient) = &self.quotient else {
            return false;
        };
        let quotient_mobius = quotient.mobius();
        self.classes.iter().enumerate().all(|(c, class)| {
            let sum: i64 = class
                .members
                .iter()
                .map(|&e| self.prod_mobius.values[e as usize])
                .sum();
            quotient_mobius.values[c] == sum
        })
    }
}

/// `w(alpha)` for binary vectors: the sum of `(n - j) * alpha_j` over
/// 1-based positions `j`; the exponent in `chi(P(alpha)) = (q-1)^{w}`.
pub fn binary_weight(alpha: &HookSumVector) -> Result<u32> {
    if !alpha.is_binary() {
        return Err(Error::Unsupported(format!(
            "({alpha}) is not a binary hook-sum vector"
        )));
    }
    let n = alpha.len();
    Ok(alpha
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &a)| (n - 1 - i) as u32 * a)
        .sum())
}

/// One quotient application inside a factorization run.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationStep {
    pub alpha_from: HookSumVector,
    /// 1-based coordinate raised from 0 to 1.
    pub position: usize,
    pub r: usize,
    pub target: HookSumVector,
    pub product_size: usize,
    pub class_count: usize,
    pub conditions: HsConditionReport,
    pub witness: WitnessReport,
    pub chi_product: UniPoly,
    pub chi_quotient: Option<UniPoly>,
    pub chi_match: bool,
}

/// A full mechanical run of the factorization for a binary vector.
#[derive(Clone, Debug, Serialize)]
pub struct FactorizationTrace {
    pub alpha: HookSumVector,
    pub weight_exponent: u32,
    /// `(q-1)^{w(alpha)}`.
    pub char_poly: UniPoly,
    pub base_alpha: HookSumVector,
    pub base_boolean_ok: bool,
    pub steps: Vec<FactorizationStep>,
    /// Direct Möbius computation over `P(alpha)` agrees with the product.
    pub matches_direct: bool,
    pub all_checks_passed: bool,
}

/// Verify the subset bijection `P(1, 0^{n-1}) -> B_{n-1}`: bijective onto
/// all subsets and an order isomorphism in both directions.
pub fn boolean_bijection_holds(p: &Poset<GTMatrix>) -> bool {
    let n = p.label(0).n();
    let masks: Vec<u64> = match p
        .labels()
        .iter()
        .map(|m| {
            subset_map(m).map(|set| set.iter().fold(0u64, |mask, &i| mask | (1 << (i - 1))))
        })
        .collect::<Result<Vec<_>>>()
    {
        Ok(masks) => masks,
        Err(_) => return false,
    };
    let distinct: BTreeSet<u64> = masks.iter().copied().collect();
    if distinct.len() != p.len() || p.len() != 1usize << (n - 1) {
        return false; // not a bijection onto the power set
    }
    let down = p.down_sets();
    for a in 0..p.len() {
        for b in 0..p.len() {
            let below = down.get(b, a); // a <= b
            let subset = masks[a] & !masks[b] == 0;
            if below != subset {
                return false;
            }
        }
    }
    true
}

/// Run the quotient pipeline across every 1-entry of a binary vector,
/// checking each hypothesis and isomorphism mechanically, and compare the
/// resulting power of `(q-1)` with the direct Möbius computation.
pub fn verify_factorization(
    alpha: &HookSumVector,
    limits: &EnumerationLimits,
) -> Result<FactorizationTrace> {
    if !alpha.is_binary() {
        return Err(Error::Unsupported(format!(
            "({alpha}) is not a binary hook-sum vector"
        )));
    }
    let weight_exponent = binary_weight(alpha)?;
    let direct_chi = build_poset(alpha, limits)?.characteristic_polynomial();

    let first_one = alpha.entries().iter().position(|&a| a == 1);
    let Some(first_one) = first_one else {
        // all-zero vector: a single matrix, trivial polynomial
        let char_poly = UniPoly::one();
        let matches_direct = direct_chi == char_poly;
        return Ok(FactorizationTrace {
            alpha: alpha.clone(),
            weight_exponent,
            char_poly,
            base_alpha: alpha.clone(),
            base_boolean_ok: true,
            steps: Vec::new(),
            matches_direct,
            all_checks_passed: matches_direct,
        });
    };

    // leading zeros prepend empty rows and do not change the poset
    let reduced = HookSumVector::new(alpha.entries()[first_one..].to_vec())?;
    let m = reduced.len();

    let base_alpha = HookSumVector::single_one(m);
    let base_poset = build_poset(&base_alpha, limits)?;
    let base_boolean_ok = boolean_bijection_holds(&base_poset)
        && base_poset.characteristic_polynomial() == UniPoly::q_minus_one_pow(m as u32 - 1);

    let mut current = base_alpha.clone();
    let mut steps = Vec::new();
    let mut all_ok = base_boolean_ok;
    for position in (2..=m).rev() {
        if reduced.entry(position - 1) == 0 {
            continue;
        }
        let r = m - position + 1;
        let qp = quotient_by_sum(&current, r, limits)?;
        let conditions = qp.check_conditions();
        let witness = qp.witness_isomorphism(limits)?;
        let chi_product = qp.prod.characteristic_polynomial();
        let chi_quotient = qp
            .quotient
            .as_ref()
            .map(Poset::characteristic_polynomial);
        let chi_match = chi_quotient
            .as_ref()
            .map(|chi| *chi == chi_product)
            .unwrap_or(false);
        all_ok &= conditions.all_passed() && witness.ok() && chi_match;
        let target = qp.target_alpha.clone();
        steps.push(FactorizationStep {
            alpha_from: current.clone(),
            position,
            r,
            target: target.clone(),
            product_size: qp.prod.len(),
            class_count: qp.class_count(),
            conditions,
            witness,
            chi_product,
            chi_quotient,
            chi_match,
        });
        current = target;
    }

    let char_poly = UniPoly::q_minus_one_pow(weight_exponent);
    let matches_direct = direct_chi == char_poly;
    Ok(FactorizationTrace {
        alpha: alpha.clone(),
        weight_exponent,
        char_poly,
        base_alpha,
        base_boolean_ok,
        steps,
        matches_direct,
        all_checks_passed: all_ok && matches_direct,
    })
}

/// Which side of the vector the binary word occupies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Leading,
    Trailing,
}

/// Divisibility verdict for a characteristic polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct DivisibilityReport {
    pub full: HookSumVector,
    pub exponent: u32,
    pub chi: UniPoly,
    pub divides: bool,
    pub cofactor: Option<UniPoly>,
}

/// Check that `(q-1)^{w}` divides the characteristic polynomial of the
/// concatenated vector, where `w` counts the binary word's weighted
/// positions: `(n - i)` per leading 1 at position `i`, `(k - i)` per
/// trailing 1 at position `i` of a word of length `k`.
pub fn check_divisibility(
    alpha: &HookSumVector,
    beta: &[u32],
    side: Side,
    limits: &EnumerationLimits,
) -> Result<DivisibilityReport> {
    if beta.iter().any(|&b| b > 1) {
        return Err(Error::Unsupported("the word beta must be binary".into()));
    }
    let k = beta.len();
    let full = match side {
        Side::Leading => {
            let mut entries = beta.to_vec();
            entries.extend_from_slice(alpha.entries());
            HookSumVector::new(entries)?
        }
        Side::Trailing => {
            let mut entries = alpha.entries().to_vec();
            entries.extend_from_slice(beta);
            HookSumVector::new(entries)?
        }
    };
    let n = full.len();
    let exponent: u32 = match side {
        Side::Leading => beta
            .iter()
            .enumerate()
            .map(|(i, &b)| (n - 1 - i) as u32 * b)
            .sum(),
        Side::Trailing => beta
            .iter()
            .enumerate()
            .map(|(i, &b)| (k - 1 - i) as u32 * b)
            .sum(),
    };
    let chi = build_poset(&full, limits)?.characteristic_polynomial();
    let (max_power, _) = chi.strip_q_minus_one();
    let divides = max_power >= exponent;
    let cofactor = if divides {
        let mut current = chi.clone();
        for _ in 0..exponent {
            let (quotient, remainder) = current.div_q_minus_one();
            debug_assert!(remainder == num_bigint::BigInt::from(0));
            current = quotient;
        }
        Some(current)
    } else {
        None
    };
    Ok(DivisibilityReport {
        full,
        exponent,
        chi,
        divides,
        cofactor,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> EnumerationLimits {
        EnumerationLimits::default()
    }

    fn alpha(entries: &[u32]) -> HookSumVector {
        HookSumVector::new(entries.to_vec()).unwrap()
    }

    #[test]
    fn shift_embed_examples() {
        // r = 2 into n = 3: the empty-set map adds a unit at (2,2)
        let empty_shift = GTMatrix::bottom(&HookSumVector::single_one(2));
        let e = shift_embed(&empty_shift, 3).unwrap();
        assert_eq!(e.entry(1, 1), 1);
        assert_eq!(e.triangle().iter().sum::<u32>(), 1);
        assert_eq!(e.alpha().entries(), &[0, 1, 0]);

        // the {1} map adds units at (2,3) and (3,3)
        let full_shift = GTMatrix::from_rows(
            HookSumVector::single_one(2),
            &[vec![0, 1], vec![1]],
        )
        .unwrap();
        let f = shift_embed(&full_shift, 3).unwrap();
        assert_eq!(f.entry(1, 2), 1);
        assert_eq!(f.entry(2, 2), 1);
        assert_eq!(f.triangle().iter().sum::<u32>(), 2);

        // n = r embeds in place
        let same = shift_embed(&empty_shift, 2).unwrap();
        assert_eq!(same.triangle(), empty_shift.triangle());

        assert!(shift_embed(&empty_shift, 1).is_err());
    }

    #[test]
    fn embedded_shift_lands_in_target_family() {
        let base = crate::enumerate::enumerate_family(&alpha(&[1, 0, 1]), &limits()).unwrap();
        let shifts = shift_map_poset(2).unwrap();
        for m in &base.matrices {
            for s in shifts.labels() {
                let sum = m
                    .add_entrywise(&shift_embed(&s.matrix, 3).unwrap())
                    .unwrap();
                assert_eq!(sum.alpha().entries(), &[1, 1, 1]);
                assert_eq!(
                    sum.recompute_hook_sums(),
                    vec![1, 1, 1]
                );
            }
        }
    }

    #[test]
    fn shift_posets_are_boolean() {
        for r in 1..=4usize {
            let shifts = shift_map_poset(r).unwrap();
            assert_eq!(shifts.len(), 1 << (r - 1));
            let b = crate::poset::boolean_lattice(r as u32 - 1);
            assert!(crate::poset::is_isomorphic_small(&shifts, &b).unwrap());
            // labels order-embed as subsets
            let down = shifts.down_sets();
            for x in 0..shifts.len() {
                for y in 0..shifts.len() {
                    let below = down.get(y, x);
                    let subset = shifts.label(x as u32).label.is_subset(&shifts.label(y as u32).label);
                    assert_eq!(below, subset);
                }
            }
        }
    }

    #[test]
    fn quotient_small_example() {
        let qp = quotient_by_sum(&alpha(&[1, 0, 1]), 2, &limits()).unwrap();
        assert_eq!(qp.prod.len(), 8);
        assert_eq!(qp.class_count(), 7);
        let report = qp.check_conditions();
        assert!(report.all_passed(), "{report:?}");
        let witness = qp.witness_isomorphism(&limits()).unwrap();
        assert!(witness.ok(), "{witness:?}");
        assert!(qp.witnesses_cover_target(&limits()).unwrap());
        assert!(qp.mobius_class_sums_match());
    }

    #[test]
    fn quotient_of_two_vector() {
        // raising the zero coordinate of (0,1) with a full-size block
        let qp = quotient_by_sum(&alpha(&[0, 1]), 2, &limits()).unwrap();
        assert_eq!(qp.class_count(), 2);
        let target = build_poset(&alpha(&[1, 1]), &limits()).unwrap();
        assert!(crate::poset::is_isomorphic_small(
            qp.quotient.as_ref().unwrap(),
            &target
        )
        .unwrap());
        // and the same family through the trailing coordinate instead
        let qp = quotient_by_sum(&alpha(&[1, 0]), 1, &limits()).unwrap();
        assert_eq!(qp.class_count(), 2);
        assert!(qp.witness_isomorphism(&limits()).unwrap().ok());
    }

    #[test]
    fn quotient_class_count_matches_target() {
        let qp = quotient_by_sum(&alpha(&[1, 0, 0]), 2, &limits()).unwrap();
        assert_eq!(qp.class_count(), 7); // T(1,1,0)
        let four_case = quotient_by_sum(&alpha(&[1, 0, 0, 1]), 3, &limits()).unwrap();
        assert!(four_case.check_conditions().all_passed());
        assert!(four_case.witness_isomorphism(&limits()).unwrap().ok());
    }

    #[test]
    fn quotient_rejects_nonzero_coordinate() {
        assert!(quotient_by_sum(&alpha(&[1, 1, 1]), 2, &limits()).is_err());
        assert!(quotient_by_sum(&alpha(&[1, 0, 1]), 5, &limits()).is_err());
    }

    #[test]
    fn isolation_and_separation_small() {
        for (entries, r) in [
            (vec![0, 1], 2usize),
            (vec![1, 0, 1], 2),
            (vec![1, 0, 0], 2),
            (vec![0, 1, 0], 3),
            (vec![0, 1, 0], 1),
        ] {
            let qp = quotient_by_sum(&alpha(&entries), r, &limits()).unwrap();
            assert!(qp.isolation_dichotomy_holds(), "alpha {entries:?}, r = {r}");
            assert!(qp.first_sum_separation_holds(), "alpha {entries:?}, r = {r}");
        }
    }

    #[test]
    fn binary_weights() {
        assert_eq!(binary_weight(&alpha(&[1, 1, 1])).unwrap(), 3);
        assert_eq!(binary_weight(&alpha(&[1, 0, 1])).unwrap(), 2);
        assert_eq!(binary_weight(&alpha(&[1, 0, 0, 0])).unwrap(), 3);
        assert!(binary_weight(&alpha(&[2, 0])).is_err());
        // reversed-index formula gives the same value
        for entries in [[1, 1, 0], [0, 1, 1], [1, 0, 1]] {
            let a = alpha(&entries);
            let n = a.len();
            let reversed: u32 = (0..n)
                .map(|i| i as u32 * a.entry(n - 1 - i))
                .sum();
            assert_eq!(binary_weight(&a).unwrap(), reversed);
        }
    }

    #[test]
    fn factorization_of_ones() {
        let trace = verify_factorization(&alpha(&[1, 1, 1]), &limits()).unwrap();
        assert_eq!(trace.weight_exponent, 3);
        assert!(trace.all_checks_passed, "{trace:?}");
        assert_eq!(trace.char_poly, UniPoly::q_minus_one_pow(3));
    }

    #[test]
    fn factorization_examples() {
        let trace = verify_factorization(&alpha(&[1, 0, 1]), &limits()).unwrap();
        assert_eq!(trace.weight_exponent, 2);
        assert!(trace.all_checks_passed);

        let single = verify_factorization(&alpha(&[1, 0, 0, 0]), &limits()).unwrap();
        assert_eq!(single.weight_exponent, 3);
        assert!(single.all_checks_passed);

        let zeros = verify_factorization(&alpha(&[0, 0]), &limits()).unwrap();
        assert_eq!(zeros.weight_exponent, 0);
        assert!(zeros.all_checks_passed);

        assert!(verify_factorization(&alpha(&[2, 1]), &limits()).is_err());
    }

    #[test]
    fn divisibility_examples() {
        // chi(P(1,2,3)) = q (q-1)^3 and the leading word (1) gives w = 2
        let report = check_divisibility(&alpha(&[2, 3]), &[1], Side::Leading, &limits()).unwrap();
        assert_eq!(report.exponent, 2);
        assert!(report.divides);

        // trailing word (1,1,1) against (2,1,1,1): w = 3
        let report =
            check_divisibility(&alpha(&[2]), &[1, 1, 1], Side::Trailing, &limits()).unwrap();
        assert_eq!(report.exponent, 3);
        assert!(report.divides);

        // empty word: (q-1)^0 always divides
        let report = check_divisibility(&alpha(&[1, 2, 3]), &[], Side::Leading, &limits()).unwrap();
        assert_eq!(report.exponent, 0);
        assert!(report.divides);
    }
}
