//! Exact enumeration and order-theoretic analysis of generalized Tesler
//! matrices.
//!
//! A generalized Tesler matrix is an upper-triangular matrix of non-negative
//! integers with prescribed hook sums. This crate enumerates and counts such
//! families exactly, builds the poset the cover moves induce on them, and
//! verifies, mechanically and at desk scale, the identities this structure
//! carries:
//!
//! * [`enumerate`] — the generating algorithm, an independent brute-force
//!   oracle, and an exact counter that never materializes matrices;
//! * [`poset`] — ranked posets, Möbius functions, characteristic
//!   polynomials, Boolean lattices, products and a small isomorphism search;
//! * [`quotient`] — the Hallam–Sagan quotient construction proving
//!   `chi(P(alpha)) = (q-1)^{w(alpha)}` for binary hook sums, with every
//!   hypothesis checked rather than assumed;
//! * [`weight`] and [`harmonics`] — the bivariate matrix weight, its family
//!   sums and the `[n+1]_q^{n-1}`, `[n]_q!` and permutation-matrix
//!   specializations;
//! * [`growth`] — Armstrong polynomials, counting bounds, family sequences
//!   and Möbius bound probes;
//! * [`flow`] — the integral-flow view of a matrix on the complete DAG.
//!
//! The runnable `examples/` directory is the guided tour; the `tesler`
//! binary exposes the same operations for batch use, and
//! [`acceptance::run_all`] replays the full verification suite.

pub mod acceptance;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod growth;
pub mod harmonics;
pub mod matrix;
pub mod poly;
pub mod poset;
pub mod quotient;
pub mod weight;

pub use enumerate::{
    brute_force_enumerate, children, count, enumerate_family, visit_family, EnumerationLimits,
    FamilyEnumeration,
};
pub use error::{Error, Result};
pub use flow::{from_flow, to_flow, IntegralFlow};
pub use matrix::{hook_sums, subset_map, GTMatrix, HookSumVector};
pub use poly::{specialize, BiPoly, LaurentPoly, SpecializeRule, UniPoly};
pub use poset::{
    boolean_lattice, build_poset, is_cover, is_isomorphic_small, product, CharPoly, MobiusVector,
    Poset,
};
pub use quotient::{
    binary_weight, check_divisibility, quotient_by_sum, shift_embed, shift_map_poset,
    verify_factorization, QuotientPoset, ShiftMap, Side,
};
pub use weight::{qt_bracket, sum_weights, weight, QtWeight};
