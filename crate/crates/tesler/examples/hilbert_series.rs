//! The bivariate weight sum over Tesler matrices and its specializations.
//!
//! ```sh
//! cargo run --release --example hilbert_series
//! ```

use tesler::harmonics::{
    hilbert_series, verify_eq_permutation, verify_eq_qinverse, verify_eq_tzero,
    DEFAULT_HILBERT_CEILING,
};

fn main() -> tesler::Result<()> {
    for n in 1..=4 {
        let result = hilbert_series(n)?;
        println!("n = {n}: dimension {}", result.dimension);
        println!("  series: {}", result.series);
    }

    println!("\nidentities:");
    for n in 1..=5 {
        let qinv = verify_eq_qinverse(n, DEFAULT_HILBERT_CEILING)?;
        let tzero = verify_eq_tzero(n, DEFAULT_HILBERT_CEILING)?;
        let perm = verify_eq_permutation(n, DEFAULT_HILBERT_CEILING)?;
        println!(
            "n = {n}: q^binom(n,2) * H(q, 1/q) = [n+1]_q^(n-1): {};  \
             H(q, 0) = [n]_q!: {};  permutation sum = (n+1)^(n-1): {}",
            qinv.ok, tzero.ok, perm.ok
        );
    }
    Ok(())
}
