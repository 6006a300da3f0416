//! The subset bijection: matrices with hook sums `(1, 0^{n-1})` form a copy
//! of the Boolean lattice `B_{n-1}`.
//!
//! ```sh
//! cargo run --release --example boolean_lattice_map
//! ```

use tesler::poset::{boolean_lattice, is_isomorphic_small};
use tesler::{build_poset, subset_map, EnumerationLimits, HookSumVector};

fn main() -> tesler::Result<()> {
    let limits = EnumerationLimits::default();
    let n = 4;
    let alpha = HookSumVector::single_one(n);
    let poset = build_poset(&alpha, &limits)?;

    println!("T({alpha}) has {} matrices; their subset labels:", poset.len());
    for m in poset.labels() {
        let set = subset_map(m)?;
        let label: Vec<String> = set.iter().map(|i| i.to_string()).collect();
        println!("  {m}   ->  {{{}}}", label.join(","));
    }

    let b = boolean_lattice(n as u32 - 1);
    println!(
        "\norder-isomorphic to B_{}: {}",
        n - 1,
        is_isomorphic_small(&poset, &b)?
    );
    println!(
        "chi(P({alpha})) = {}",
        poset.characteristic_polynomial()
    );
    Ok(())
}
