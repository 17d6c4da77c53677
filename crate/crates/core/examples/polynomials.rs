//! Every polynomial family by every method it supports.

use lucas_cubes::formulas::{poly, PolyKind};

fn main() -> lucas_cubes::Result<()> {
    let n = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(8);
    for kind in PolyKind::ALL {
        for method in kind.methods() {
            println!("{kind:>9} n={n} {method:<17} {}", poly(kind, n, Some(method))?.to_plain());
        }
    }
    Ok(())
}
