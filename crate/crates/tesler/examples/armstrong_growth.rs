//! Armstrong polynomials: the distribution of diagonal products, the
//! coefficient and derivative identities, and the counting bounds they give.
//!
//! ```sh
//! cargo run --release --example armstrong_growth
//! ```

use tesler::growth::{armstrong_polynomial, verify_bounds, verify_coefficient_identities};
use tesler::HookSumVector;

fn main() {
    for n in 1..=5 {
        let poly = armstrong_polynomial(&HookSumVector::ones(n));
        println!("A_{n}(q) = {poly}");
    }

    println!("\ncoefficient identities:");
    for n in 2..=6 {
        let report = verify_coefficient_identities(n);
        for check in &report.checks {
            println!(
                "  {}: {}",
                check.name,
                if check.passed { "holds" } else { "FAILS" }
            );
        }
    }

    println!("\nbound chain:");
    for n in 4..=8 {
        let report = verify_bounds(n);
        println!("n = {n}: T(1^{n}) = {}", report.count);
        for link in &report.links {
            let verdict = match link.holds {
                Some(true) => "holds",
                Some(false) => "FAILS",
                None => "not applicable",
            };
            println!("  {}: {} ({} vs {})", link.description, verdict, link.lhs, link.rhs);
        }
    }
}
