//! Build Tesler posets, read off Möbius values, and factor characteristic
//! polynomials.
//!
//! ```sh
//! cargo run --release --example poset_charpoly
//! ```

use tesler::{build_poset, EnumerationLimits, HookSumVector};

fn main() -> tesler::Result<()> {
    let limits = EnumerationLimits::default();

    for entries in [vec![1, 1, 1], vec![1, 2, 3], vec![2, 1, 1, 1]] {
        let alpha = HookSumVector::new(entries)?;
        let poset = build_poset(&alpha, &limits)?;
        let mu = poset.mobius();
        println!("P({alpha}): {} elements, rank {}", poset.len(), poset.poset_rank());
        let sizes: Vec<String> = poset
            .rank_level_sizes()
            .iter()
            .map(|s| s.to_string())
            .collect();
        println!("  rank level sizes: ({})", sizes.join(", "));

        if poset.len() <= 10 {
            for x in 0..poset.len() as u32 {
                println!(
                    "  rank {}  mu = {:>2}   {}",
                    poset.rank_of(x),
                    mu.values[x as usize],
                    poset.label(x)
                );
            }
        }

        let chi = poset.characteristic_polynomial();
        let (power, rest) = chi.strip_q_minus_one();
        println!("  chi = {chi}");
        println!("  maximal (q-1) factorization: ({rest}) * (q-1)^{power}\n");
    }
    Ok(())
}
