//! The Hallam–Sagan quotient machinery, run mechanically: one quotient step
//! with its condition report, then the full factorization of a binary
//! hook-sum vector into a power of (q-1).
//!
//! ```sh
//! cargo run --release --example quotient_pipeline
//! ```

use tesler::quotient::verify_factorization;
use tesler::{quotient_by_sum, EnumerationLimits, HookSumVector};

fn main() -> tesler::Result<()> {
    let limits = EnumerationLimits::default();

    // One step: raise the middle coordinate of (1,0,1) using 2x2 shifts.
    let alpha = HookSumVector::new(vec![1, 0, 1])?;
    let qp = quotient_by_sum(&alpha, 2, &limits)?;
    println!(
        "product P({alpha}) x B_1 has {} elements in {} classes (target T({}))",
        qp.prod.len(),
        qp.class_count(),
        qp.target_alpha
    );
    for (i, class) in qp.classes.iter().enumerate() {
        println!(
            "  class {i}: witness {}  ({} member{})",
            class.witness,
            class.members.len(),
            if class.members.len() == 1 { "" } else { "s" }
        );
    }
    let report = qp.check_conditions();
    println!("singleton bottom: {}", report.singleton_bottom.passed);
    println!("homogeneity:      {}", report.homogeneity.passed);
    println!("rank preserved:   {}", report.rank_preserved.passed);
    println!("summation:        {}", report.summation.passed);
    let witness = qp.witness_isomorphism(&limits)?;
    println!("witness map is a cover-preserving bijection: {}", witness.ok());

    // The full pipeline for the classical Tesler poset of size four.
    let trace = verify_factorization(&HookSumVector::ones(4), &limits)?;
    println!("\nfactorization of chi(P({})):", trace.alpha);
    println!(
        "  base ({}) is Boolean: {}",
        trace.base_alpha, trace.base_boolean_ok
    );
    for step in &trace.steps {
        println!(
            "  ({}) -> ({}) with r = {}: {} classes, conditions {}, chi match {}",
            step.alpha_from,
            step.target,
            step.r,
            step.class_count,
            step.conditions.all_passed(),
            step.chi_match
        );
    }
    println!(
        "  result: (q-1)^{}; matches the direct Möbius computation: {}",
        trace.weight_exponent, trace.matches_direct
    );
    Ok(())
}
