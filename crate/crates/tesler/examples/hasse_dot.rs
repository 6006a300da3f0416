//! Export Hasse diagrams as DOT, with Möbius annotations; pipe into
//! `dot -Tpdf` to draw them.
//!
//! ```sh
//! cargo run --release --example hasse_dot > p111.dot
//! ```

use tesler::{build_poset, EnumerationLimits, HookSumVector};

fn main() -> tesler::Result<()> {
    let alpha = HookSumVector::ones(3);
    let poset = build_poset(&alpha, &EnumerationLimits::default())?;
    let mu = poset.mobius();
    let dot = poset.to_dot(&format!("P({alpha})"), |_, m| m.to_string(), Some(&mu));
    print!("{dot}");
    Ok(())
}
