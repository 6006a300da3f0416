//! Hook-sum family sequences: closed forms, the five-term recurrence, the
//! generating-function comparison, and the parking and Möbius bound probes.
//!
//! ```sh
//! cargo run --release --example family_sequences
//! ```

use tesler::growth::{
    family_sequence, mobius_bound_probe, parking_bound_probe, FamilyKind,
};
use tesler::EnumerationLimits;

fn main() -> tesler::Result<()> {
    for kind in [
        FamilyKind::SingleOne,
        FamilyKind::OnesThenZeros { k: 2 },
        FamilyKind::Staircase,
    ] {
        let n_max = match kind {
            FamilyKind::Staircase => 5,
            _ => 10,
        };
        let report = family_sequence(kind, n_max)?;
        println!("{}:", report.family);
        for row in &report.rows {
            println!(
                "  n = {:>2}: {} {}",
                row.n,
                row.value,
                if row.verdict { "(ok)" } else { "(bound missed)" }
            );
        }
        for &(m, holds) in &report.recurrence {
            println!(
                "  t_{m} = 5 t_{} - 5 t_{}: {}",
                m - 1,
                m - 2,
                if holds { "holds" } else { "fails" }
            );
        }
        if !report.ogf.is_empty() {
            println!("  stated generating function vs enumeration:");
            for coeff in report.ogf.iter().take(6) {
                println!(
                    "    x^{}: {} vs {} {}",
                    coeff.index,
                    coeff.ogf,
                    coeff.enumerated,
                    if coeff.matches { "(match)" } else { "(MISMATCH)" }
                );
            }
        }
        println!();
    }

    println!("parking bound probes T(1^k, 0^(n-k)) >= (k+1)^(n-1):");
    for (k, n) in [(2, 4), (2, 5), (2, 8), (3, 6)] {
        let probe = parking_bound_probe(k, n)?;
        println!(
            "  k = {k}, n = {n}: {} vs {} -> {}",
            probe.value, probe.bound, probe.holds
        );
    }

    println!("\nMöbius bound probes over P(1^n):");
    let limits = EnumerationLimits::default();
    for n in 2..=5 {
        let probe = mobius_bound_probe(n, &limits)?;
        println!(
            "  n = {n}: max |mu| = {} (limit {n}! = {}), implied count bound {} \
             (met: {})",
            probe.max_abs_mu, probe.factorial_bound, probe.implied_lower, probe.meets_implied
        );
    }
    Ok(())
}
