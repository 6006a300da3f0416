//! The q,t-analog machinery by hand: brackets, matrix weights, and exact
//! specialization of bivariate polynomials.
//!
//! ```sh
//! cargo run --release --example symbolic_weights
//! ```

use tesler::poly::{specialize, SpecializeRule};
use tesler::{
    enumerate_family, qt_bracket, sum_weights, weight, EnumerationLimits, GTMatrix,
    HookSumVector,
};

fn main() -> tesler::Result<()> {
    for b in 1..=4 {
        println!("[{b}]_(q,t) = {}", qt_bracket(b)?);
    }

    let m = GTMatrix::from_rows(
        HookSumVector::ones(3),
        &[vec![0, 1, 0], vec![1, 1], vec![2]],
    )?;
    let w = weight(&m)?;
    println!("\nmatrix {m}:");
    println!("  split weight: ({}) * (q-1)^{}", w.numer, w.eposn);
    println!("  expanded: {}", w.expand());

    let family = enumerate_family(&HookSumVector::ones(3), &EnumerationLimits::default())?;
    let series = sum_weights(&family.matrices)?;
    println!("\nweight sum over T(1,1,1): {series}");
    for rule in ["t=0", "t=q^-1", "q=1,t=1"] {
        let parsed: SpecializeRule = rule.parse()?;
        println!("  at {rule}: {}", specialize(&series, parsed));
    }
    Ok(())
}
